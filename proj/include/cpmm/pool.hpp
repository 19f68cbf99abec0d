#pragma once

#include "cpmm/errors.hpp"

namespace cpmm {

// Token side of a two-asset pool.
enum class Side { X, Y };

// Constant-product pool state, analytic (double precision) backend.
//
// The invariant k = reserve_x * reserve_y is always derived, never stored.
// A PoolState is an immutable value; every operation below is a pure
// function returning new state.
struct PoolState {
    double reserve_x = 0.0;
    double reserve_y = 0.0;
    double lp_supply = 0.0;
    double trading_fee = 0.0;  // rho in [0,1); gamma = 1 - rho

    double k() const { return reserve_x * reserve_y; }
    double gamma() const { return 1.0 - trading_fee; }
    bool empty() const { return lp_supply <= 0.0; }
};

// Result of quoting a swap. alpha_or_beta is the input-side relative trade
// size: alpha = dx/x for X input, beta = dy/y for Y input.
struct SwapQuote {
    double amount_in = 0.0;
    double amount_out = 0.0;
    double alpha_or_beta = 0.0;
    PoolState pool_after;
};

// Result of a mint or burn. phi is the common reserve growth factor
// dx/x = dy/y = lp/supply (negative factors are expressed by the burn
// returning positive outflows instead).
struct LiquidityDelta {
    double amount_x = 0.0;
    double amount_y = 0.0;
    double lp_tokens = 0.0;
    double phi = 0.0;
    PoolState pool_after;
};

// Creates the initial pool. The first provider receives
// lp_supply = sqrt(amount_x * amount_y).
PoolState bootstrap(double amount_x, double amount_y, double trading_fee);

// Marginal price of one token in units of the other, y/x for Side::X.
// The two sides multiply to 1. Throws EmptyPoolError on an empty pool.
double spot_price(const PoolState& pool, Side price_of);

// Quotes a swap with fixed input amount. The fee stays in the reserves, so
// the invariant grows whenever trading_fee > 0; with a zero fee the product
// is conserved exactly (up to double rounding).
SwapQuote quote_swap_exact_in(const PoolState& pool, Side input_side, double amount_in);

// Quotes a swap with fixed output amount; inverse of quote_swap_exact_in.
// amount_out must be strictly below the output-side reserve.
SwapQuote quote_swap_exact_out(const PoolState& pool, Side output_side, double amount_out);

// Proportional liquidity provision driven by the x amount. The matching y
// amount is amount_x * y/x; the reserve ratio is unchanged and
// k' = (1 + phi)^2 k.
LiquidityDelta mint(const PoolState& pool, double amount_x);

// Redeems lp_tokens for the proportional share of both reserves. Burning
// the entire supply empties the pool exactly.
LiquidityDelta burn(const PoolState& pool, double lp_tokens);

}  // namespace cpmm
