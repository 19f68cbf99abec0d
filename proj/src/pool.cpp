#include "cpmm/pool.hpp"

#include <cmath>

namespace cpmm {

namespace {

void require_live(const PoolState& pool) {
    if (pool.reserve_x <= 0.0 || pool.reserve_y <= 0.0 || pool.lp_supply <= 0.0)
        throw EmptyPoolError{};
}

void require_fee(double trading_fee) {
    if (!(trading_fee >= 0.0 && trading_fee < 1.0))
        throw InvalidAmountError("trading fee must lie in [0,1)");
}

}  // namespace

PoolState bootstrap(double amount_x, double amount_y, double trading_fee) {
    require_fee(trading_fee);
    if (!(amount_x > 0.0) || !(amount_y > 0.0))
        throw InvalidAmountError("bootstrap requires positive deposits on both sides");
    return PoolState{amount_x, amount_y, std::sqrt(amount_x * amount_y), trading_fee};
}

double spot_price(const PoolState& pool, Side price_of) {
    require_live(pool);
    return price_of == Side::X ? pool.reserve_y / pool.reserve_x
                               : pool.reserve_x / pool.reserve_y;
}

SwapQuote quote_swap_exact_in(const PoolState& pool, Side input_side, double amount_in) {
    require_live(pool);
    if (amount_in < 0.0) throw InvalidAmountError("swap input must be non-negative");

    const double in_reserve = input_side == Side::X ? pool.reserve_x : pool.reserve_y;
    const double out_reserve = input_side == Side::X ? pool.reserve_y : pool.reserve_x;

    // alpha*gamma / (1 + alpha*gamma) * out_reserve; alpha is dx/x (or dy/y).
    const double ratio = amount_in / in_reserve;
    const double eff = ratio * pool.gamma();
    const double amount_out = eff / (1.0 + eff) * out_reserve;

    PoolState after = pool;
    if (input_side == Side::X) {
        after.reserve_x += amount_in;
        after.reserve_y -= amount_out;
    } else {
        after.reserve_y += amount_in;
        after.reserve_x -= amount_out;
    }
    return SwapQuote{amount_in, amount_out, ratio, after};
}

SwapQuote quote_swap_exact_out(const PoolState& pool, Side output_side, double amount_out) {
    require_live(pool);
    if (amount_out < 0.0) throw InvalidAmountError("swap output must be non-negative");

    const double out_reserve = output_side == Side::X ? pool.reserve_x : pool.reserve_y;
    if (amount_out >= out_reserve)
        throw InsufficientLiquidityError("requested output would deplete the reserve");

    // Invert amount_out = eff/(1+eff) * out_reserve for the input ratio.
    const double beta = amount_out / out_reserve;
    const double ratio = beta / ((1.0 - beta) * pool.gamma());
    const Side input_side = output_side == Side::X ? Side::Y : Side::X;
    const double in_reserve = input_side == Side::X ? pool.reserve_x : pool.reserve_y;
    const double amount_in = ratio * in_reserve;

    PoolState after = pool;
    if (input_side == Side::X) {
        after.reserve_x += amount_in;
        after.reserve_y -= amount_out;
    } else {
        after.reserve_y += amount_in;
        after.reserve_x -= amount_out;
    }
    return SwapQuote{amount_in, amount_out, ratio, after};
}

LiquidityDelta mint(const PoolState& pool, double amount_x) {
    require_live(pool);
    if (amount_x < 0.0) throw InvalidAmountError("mint amount must be non-negative");

    const double phi = amount_x / pool.reserve_x;
    const double amount_y = amount_x * (pool.reserve_y / pool.reserve_x);
    const double lp_minted = phi * pool.lp_supply;

    PoolState after = pool;
    after.reserve_x += amount_x;
    after.reserve_y += amount_y;
    after.lp_supply += lp_minted;
    return LiquidityDelta{amount_x, amount_y, lp_minted, phi, after};
}

LiquidityDelta burn(const PoolState& pool, double lp_tokens) {
    require_live(pool);
    if (lp_tokens < 0.0) throw InvalidAmountError("burn amount must be non-negative");
    if (lp_tokens > pool.lp_supply)
        throw ExceedsSupplyError("burn exceeds outstanding supply");

    const double share = lp_tokens / pool.lp_supply;
    const double out_x = share * pool.reserve_x;
    const double out_y = share * pool.reserve_y;

    PoolState after = pool;
    if (lp_tokens == pool.lp_supply) {
        // Full redemption empties the pool exactly.
        after.reserve_x = 0.0;
        after.reserve_y = 0.0;
        after.lp_supply = 0.0;
    } else {
        after.reserve_x -= out_x;
        after.reserve_y -= out_y;
        after.lp_supply -= lp_tokens;
    }
    return LiquidityDelta{out_x, out_y, lp_tokens, share, after};
}

}  // namespace cpmm
