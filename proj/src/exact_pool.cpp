#include "cpmm/exact_pool.hpp"

#include <string>

namespace cpmm {

namespace {

using Wide = boost::multiprecision::uint512_t;

const Amount kAmountMax = Amount(~boost::multiprecision::uint128_t(0));

Amount narrow(const Wide& v, const char* what) {
    if (v > Wide(kAmountMax))
        throw InvalidAmountError(std::string(what) + " overflows 128 bits");
    return Amount(v);
}

void require_live(const ExactPool& pool) {
    if (pool.reserve_x == 0 || pool.reserve_y == 0 || pool.lp_supply == 0)
        throw EmptyPoolError{};
}

void require_fee(std::uint32_t fee_ppm) {
    if (fee_ppm >= kFeeDenomPpm)
        throw InvalidAmountError("fee_ppm must be below 1000000");
}

}  // namespace

ExactPool exact_bootstrap(Amount amount_x, Amount amount_y, std::uint32_t fee_ppm) {
    require_fee(fee_ppm);
    if (amount_x == 0 || amount_y == 0)
        throw InvalidAmountError("bootstrap requires positive deposits on both sides");
    const Wide product = Wide(amount_x) * Wide(amount_y);
    const Amount lp = narrow(boost::multiprecision::sqrt(product), "initial supply");
    return ExactPool{amount_x, amount_y, lp, fee_ppm};
}

ExactSwapResult exact_swap_exact_in(const ExactPool& pool, Side input_side, Amount amount_in) {
    require_live(pool);

    const Amount in_reserve = input_side == Side::X ? pool.reserve_x : pool.reserve_y;
    const Amount out_reserve = input_side == Side::X ? pool.reserve_y : pool.reserve_x;

    // Fee-discounted input prices the trade; the whole input lands in the
    // reserve. Floor division keeps the rounding remainder in the pool.
    const Wide in_net = Wide(amount_in) * (kFeeDenomPpm - pool.fee_ppm);
    const Wide numerator = in_net * Wide(out_reserve);
    const Wide denominator = Wide(in_reserve) * kFeeDenomPpm + in_net;
    const Amount amount_out = narrow(numerator / denominator, "swap output");

    ExactPool after = pool;
    if (input_side == Side::X) {
        after.reserve_x = narrow(Wide(pool.reserve_x) + Wide(amount_in), "reserve");
        after.reserve_y = pool.reserve_y - amount_out;
    } else {
        after.reserve_y = narrow(Wide(pool.reserve_y) + Wide(amount_in), "reserve");
        after.reserve_x = pool.reserve_x - amount_out;
    }
    return ExactSwapResult{amount_out, after};
}

ExactMintResult exact_mint(const ExactPool& pool, Amount amount_x, Amount amount_y) {
    if (pool.empty()) {
        ExactPool boot = exact_bootstrap(amount_x, amount_y, pool.fee_ppm);
        return ExactMintResult{boot.lp_supply, boot};
    }
    require_live(pool);

    const Wide share_x = Wide(amount_x) * Wide(pool.lp_supply) / Wide(pool.reserve_x);
    const Wide share_y = Wide(amount_y) * Wide(pool.lp_supply) / Wide(pool.reserve_y);
    const Amount lp_minted = narrow(share_x < share_y ? share_x : share_y, "minted supply");

    ExactPool after = pool;
    after.reserve_x = narrow(Wide(pool.reserve_x) + Wide(amount_x), "reserve");
    after.reserve_y = narrow(Wide(pool.reserve_y) + Wide(amount_y), "reserve");
    after.lp_supply = narrow(Wide(pool.lp_supply) + Wide(lp_minted), "supply");
    return ExactMintResult{lp_minted, after};
}

ExactBurnResult exact_burn(const ExactPool& pool, Amount lp_tokens) {
    require_live(pool);
    if (lp_tokens > pool.lp_supply)
        throw ExceedsSupplyError("burn exceeds outstanding supply");

    const Amount out_x =
        Amount(Wide(lp_tokens) * Wide(pool.reserve_x) / Wide(pool.lp_supply));
    const Amount out_y =
        Amount(Wide(lp_tokens) * Wide(pool.reserve_y) / Wide(pool.lp_supply));

    ExactPool after = pool;
    after.reserve_x -= out_x;
    after.reserve_y -= out_y;
    after.lp_supply -= lp_tokens;
    return ExactBurnResult{out_x, out_y, after};
}

ExactPool exact_sync(const ExactPool& pool, Amount reserve_x, Amount reserve_y) {
    if ((reserve_x == 0) != (reserve_y == 0))
        throw InvalidAmountError("sync must set both reserves or neither");
    ExactPool after = pool;
    after.reserve_x = reserve_x;
    after.reserve_y = reserve_y;
    return after;
}

Amount parse_amount(std::string_view text) {
    if (text.empty()) throw InvalidAmountError("empty amount");
    for (char c : text)
        if (c < '0' || c > '9')
            throw InvalidAmountError("amount is not a non-negative decimal integer");
    if (text.size() > 39) throw InvalidAmountError("amount overflows 128 bits");
    const boost::multiprecision::uint256_t wide{std::string(text)};
    if (wide > boost::multiprecision::uint256_t(kAmountMax))
        throw InvalidAmountError("amount overflows 128 bits");
    return Amount(wide);
}

}  // namespace cpmm
