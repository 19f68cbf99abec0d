#pragma once

#include <optional>

#include "cpmm/errors.hpp"

namespace cpmm {

// Which network-fee setting shapes the breakeven analysis.
//
// Mint and burn fees are flat per-transaction costs charged around a
// liquidity position. SymmetricBurn treats the pool value as constant in
// the fee asset (neither pool token is the fee numeraire); AsymmetricBurn
// applies when the y-token itself is the fee numeraire, so the burn fee is
// revalued with the price ratio at exit.
enum class FeeVariant { NoFees, MintOnly, SymmetricBurn, AsymmetricBurn };

// Mint fee and burn fee, both expressed in x-token units at entry prices.
struct FeeModel {
    FeeVariant variant = FeeVariant::NoFees;
    double mint_fee = 0.0;
    double burn_fee = 0.0;

    static FeeModel none() { return {}; }
    static FeeModel mint_only(double mint_fee);
    static FeeModel symmetric(double mint_fee, double burn_fee);
    static FeeModel asymmetric(double mint_fee, double burn_fee);

    // Enforces mint_fee, burn_fee >= 0 and that fees absent from the
    // variant are zero. Throws DomainError.
    void validate() const;
};

// Entry (x0, y0) and exit (x1, y1) of one liquidity position, in per-share
// token amounts. All four must be strictly positive.
struct PositionEndpoints {
    double x0 = 0.0;
    double y0 = 0.0;
    double x1 = 0.0;
    double y1 = 0.0;

    double k0() const { return x0 * y0; }
    double k1() const { return x1 * y1; }

    // Change in the price ratio between the two assets, (x1*y0)/(y1*x0).
    // Equals 1 exactly when the allocation ratio is unchanged.
    double price_ratio_change() const { return (x1 * y0) / (y1 * x0); }

    void validate() const;
};

// Joint classification of invariant growth and price movement:
//   Case1  k unchanged, ratio unchanged   (hold and LP tie)
//   Case2  k unchanged, ratio moved       (pure divergence loss)
//   Case3  k grew, ratio unchanged        (pure fee gain)
//   Case4  k grew, ratio moved            (mixed; frontier decides)
enum class CaseLabel { Case1, Case2, Case3, Case4 };

// Relative tolerance for case classification and on-frontier membership.
inline constexpr double kCaseEps = 1e-9;

struct FrontierLimits {
    double y_asymptote = 0.0;  // x1 -> infinity limit of the frontier
    double x_asymptote = 0.0;  // y1 -> infinity limit (the pole)
};

struct ProfitResult {
    bool profitable = false;
    double margin = 0.0;  // LP side minus hold side, in x1 terms
};

// The two allocations on a k1 indifference curve where the frontier
// crosses it. Outcomes strictly between the two rays are profitable.
struct PriceLimits {
    struct Endpoint {
        double x1 = 0.0;
        double y1 = 0.0;
        double price_ratio = 0.0;  // y1/x1
    };
    Endpoint upper;  // higher y1/x1
    Endpoint lower;
};

// Value of holding the entry allocation to the end, in x1 terms:
// x0 + y0 * x1/y1.
double hold_value(const PositionEndpoints& p);

// Value of the liquidity position at exit, in x1 terms: 2*x1.
double lp_value(const PositionEndpoints& p);

// Relative loss from a price-ratio change r with the invariant held
// constant: D = 2*sqrt(r)/(1+r) - 1. Non-positive, zero only at r = 1,
// and symmetric under r -> 1/r. Throws DomainError for r <= 0.
double divergence_loss(double r);

// Classifies the endpoint pair into Case1..Case4. A k1 below k0 beyond
// tolerance cannot arise from fee-accruing pool mechanics and throws
// InvariantShrunkError.
CaseLabel classify_case(const PositionEndpoints& p, double eps = kCaseEps);

// The breakeven exit y1 for a given exit x1. All variants share the form
//   y1 = a * x1 / (2*x1 - b)
// with a, b determined by (x0, y0) and the fee model; the curve is defined
// only right of its pole x1 = b/2 (FrontierUndefinedError otherwise).
// Exits above the curve beat holding, exits below lose to it.
double frontier_y1(double x1, double x0, double y0, const FeeModel& fees);

// Horizontal and vertical asymptotes of the frontier. Without fees these
// are (y0/2, x0/2): losing more than half of either token per share can
// never be profitable.
FrontierLimits frontier_limits(double x0, double y0, const FeeModel& fees);

// Strict comparison of LP exit value against hold value plus fees.
// margin > 0 means the position beat holding; a zero margin (on the
// frontier) counts as not profitable.
ProfitResult is_profitable(const PositionEndpoints& p, const FeeModel& fees);

// Intersects the frontier with the curve x1*y1 = k1. Substituting
// y1 = k1/x1 into the frontier gives the quadratic
//   a*x1^2 - 2*k1*x1 + k1*b = 0,
// so real intersections exist iff k1 >= a*b (the breakeven invariant).
// Returns std::nullopt when k1 is below breakeven; at tangency the two
// endpoints coincide. Throws DomainError for k1 <= 0.
std::optional<PriceLimits> price_limits(double x0, double y0, double k1,
                                        const FeeModel& fees);

}  // namespace cpmm
