#include "cpmm/frontier.hpp"

#include <cmath>

namespace cpmm {

namespace {

// Every fee variant bends the no-fee frontier y1 = y0*x1/(2*x1 - x0) into
// the same shape with shifted coefficients: y1 = num * x1 / (2*x1 - shift).
// The derivation folds the per-share fee terms of the breakeven equation
// 2*x1 = x0 + y0*x1/y1 + fees into num and shift.
struct FrontierCoeffs {
    double num = 0.0;    // a: scales the numerator; y-asymptote is a/2
    double shift = 0.0;  // b: pole location is b/2, the x-asymptote
};

FrontierCoeffs coeffs(double x0, double y0, const FeeModel& fees) {
    if (!(x0 > 0.0) || !(y0 > 0.0))
        throw DomainError("entry amounts must be positive");
    fees.validate();
    const double s0 = fees.mint_fee;
    const double s1 = fees.burn_fee;
    switch (fees.variant) {
        case FeeVariant::NoFees:
            return {y0, x0};
        case FeeVariant::MintOnly:
            return {y0 * (1.0 + s0 / (2.0 * x0)), x0 + s0 / 2.0};
        case FeeVariant::SymmetricBurn:
            return {y0 * (1.0 + (s0 + s1) / (2.0 * x0)),
                    x0 + (s0 + s1) / 2.0};
        case FeeVariant::AsymmetricBurn:
            // The burn fee is paid in the y-numeraire at exit prices, which
            // revalues it by the price ratio; only the mint fee shifts the
            // pole.
            return {y0 * (1.0 + (s0 / 2.0 + s1) / x0), x0 + s0 / 2.0};
    }
    throw DomainError("unknown fee variant");
}

}  // namespace

FeeModel FeeModel::mint_only(double mint_fee) {
    FeeModel m{FeeVariant::MintOnly, mint_fee, 0.0};
    m.validate();
    return m;
}

FeeModel FeeModel::symmetric(double mint_fee, double burn_fee) {
    FeeModel m{FeeVariant::SymmetricBurn, mint_fee, burn_fee};
    m.validate();
    return m;
}

FeeModel FeeModel::asymmetric(double mint_fee, double burn_fee) {
    FeeModel m{FeeVariant::AsymmetricBurn, mint_fee, burn_fee};
    m.validate();
    return m;
}

void FeeModel::validate() const {
    if (!(mint_fee >= 0.0) || !(burn_fee >= 0.0))
        throw DomainError("network fees must be non-negative");
    if (variant == FeeVariant::NoFees && (mint_fee != 0.0 || burn_fee != 0.0))
        throw DomainError("NoFees variant requires zero fees");
    if (variant == FeeVariant::MintOnly && burn_fee != 0.0)
        throw DomainError("MintOnly variant requires a zero burn fee");
}

void PositionEndpoints::validate() const {
    if (!(x0 > 0.0) || !(y0 > 0.0) || !(x1 > 0.0) || !(y1 > 0.0))
        throw DomainError("position endpoints must be strictly positive");
}

double hold_value(const PositionEndpoints& p) {
    p.validate();
    return p.x0 + p.y0 * p.x1 / p.y1;
}

double lp_value(const PositionEndpoints& p) {
    p.validate();
    return 2.0 * p.x1;
}

double divergence_loss(double r) {
    if (!(r > 0.0)) throw DomainError("price ratio change must be positive");
    return 2.0 * std::sqrt(r) / (1.0 + r) - 1.0;
}

CaseLabel classify_case(const PositionEndpoints& p, double eps) {
    p.validate();
    const double k0 = p.k0();
    const double k1 = p.k1();
    if (k1 < k0 * (1.0 - eps))
        throw InvariantShrunkError("invariant shrank between entry and exit");
    const bool k_grew = k1 > k0 * (1.0 + eps);
    const double r = p.price_ratio_change();
    const bool ratio_moved = std::abs(r - 1.0) > eps;
    if (!k_grew) return ratio_moved ? CaseLabel::Case2 : CaseLabel::Case1;
    return ratio_moved ? CaseLabel::Case4 : CaseLabel::Case3;
}

double frontier_y1(double x1, double x0, double y0, const FeeModel& fees) {
    const FrontierCoeffs c = coeffs(x0, y0, fees);
    if (!(x1 > c.shift / 2.0))
        throw FrontierUndefinedError(
            "frontier is undefined at or left of its pole");
    return c.num * x1 / (2.0 * x1 - c.shift);
}

FrontierLimits frontier_limits(double x0, double y0, const FeeModel& fees) {
    const FrontierCoeffs c = coeffs(x0, y0, fees);
    return {c.num / 2.0, c.shift / 2.0};
}

ProfitResult is_profitable(const PositionEndpoints& p, const FeeModel& fees) {
    p.validate();
    fees.validate();
    const double hold = hold_value(p);
    const double s0 = fees.mint_fee;
    const double s1 = fees.burn_fee;
    double margin = 0.0;
    switch (fees.variant) {
        case FeeVariant::NoFees:
            margin = 2.0 * p.x1 - hold;
            break;
        case FeeVariant::MintOnly:
            margin = 2.0 * p.x1 - hold * (1.0 + s0 / (2.0 * p.x0));
            break;
        case FeeVariant::SymmetricBurn:
            margin = 2.0 * p.x1 - hold * (1.0 + (s0 + s1) / (2.0 * p.x0));
            break;
        case FeeVariant::AsymmetricBurn:
            margin = 2.0 * p.x1 - s1 * p.price_ratio_change() -
                     hold * (1.0 + s0 / (2.0 * p.x0));
            break;
    }
    return {margin > 0.0, margin};
}

std::optional<PriceLimits> price_limits(double x0, double y0, double k1,
                                        const FeeModel& fees) {
    if (!(k1 > 0.0)) throw DomainError("exit invariant must be positive");
    const FrontierCoeffs c = coeffs(x0, y0, fees);
    const double disc = k1 * (k1 - c.num * c.shift);
    if (disc < 0.0) return std::nullopt;
    // Roots of a*x^2 - 2*k1*x + k1*b = 0, with the smaller one computed
    // from the product of roots to avoid cancellation.
    const double q = k1 + std::sqrt(disc);
    const double x_hi = q / c.num;
    const double x_lo = k1 * c.shift / q;
    const auto endpoint = [k1](double x) {
        return PriceLimits::Endpoint{x, k1 / x, k1 / (x * x)};
    };
    return PriceLimits{endpoint(x_lo), endpoint(x_hi)};
}

}  // namespace cpmm
