#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string_view>

#include "cpmm/errors.hpp"
#include "cpmm/pool.hpp"

namespace cpmm {

// Token amounts in base units. 128 bits covers any deployed two-asset pool
// (on-chain reserves are 112-bit).
using Amount = boost::multiprecision::uint128_t;

// Exact constant-product pool over integer base units. Outputs are rounded
// down, so the invariant product never decreases; with a zero fee the new
// output reserve is exactly ceil(k / new_input_reserve). This is the
// backend for event replay, where results must be reproducible bit for bit.
struct ExactPool {
    Amount reserve_x = 0;
    Amount reserve_y = 0;
    Amount lp_supply = 0;
    std::uint32_t fee_ppm = 0;  // trading fee in parts per million

    bool empty() const { return lp_supply == 0; }
};

constexpr std::uint32_t kFeeDenomPpm = 1'000'000;

struct ExactSwapResult {
    Amount amount_out;
    ExactPool pool_after;
};

struct ExactMintResult {
    Amount lp_minted;
    ExactPool pool_after;
};

struct ExactBurnResult {
    Amount amount_x;
    Amount amount_y;
    ExactPool pool_after;
};

// First deposit: reserves set to the deposit, lp_supply = floor sqrt(x*y).
ExactPool exact_bootstrap(Amount amount_x, Amount amount_y, std::uint32_t fee_ppm);

// Swap with fixed input. Output is floored; the full input (fee included)
// enters the reserves.
ExactSwapResult exact_swap_exact_in(const ExactPool& pool, Side input_side, Amount amount_in);

// Deposit on a live pool; minted supply is the floored minimum share
// min(dx*lp/x, dy*lp/y). On an empty pool this bootstraps instead.
ExactMintResult exact_mint(const ExactPool& pool, Amount amount_x, Amount amount_y);

// Proportional redemption, amounts floored. Burning the full supply
// returns both reserves whole and empties the pool.
ExactBurnResult exact_burn(const ExactPool& pool, Amount lp_tokens);

// Overwrites reserves with externally observed values (donations, skims).
ExactPool exact_sync(const ExactPool& pool, Amount reserve_x, Amount reserve_y);

// Parses a non-negative decimal integer in base units. Throws
// InvalidAmountError on junk or overflow.
Amount parse_amount(std::string_view text);

// Nearest-double view of a base-unit amount, for analytic consumers.
inline double amount_to_double(const Amount& v) {
    return v.convert_to<double>();
}

}  // namespace cpmm
