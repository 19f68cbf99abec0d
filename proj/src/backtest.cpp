#include "cpmm/backtest.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <unordered_map>

#include "cpmm/format.hpp"

namespace cpmm {

namespace {

// Maps a tier onto the fee model of the requested variant. The combined
// share is always split evenly between the two transactions; variants that
// do not charge the burn half simply drop it. NoFees admits only a zero
// tier.
FeeModel tier_fees(const FeeTier& tier, FeeVariant variant) {
    const double share = tier.combined_fee_share;
    if (!(share >= 0.0))
        throw DomainError("combined fee share must be non-negative");
    switch (variant) {
        case FeeVariant::NoFees:
            if (share != 0.0)
                throw DomainError("NoFees variant cannot carry a fee tier");
            return FeeModel::none();
        case FeeVariant::MintOnly:
            return FeeModel::mint_only(share / 2.0);
        case FeeVariant::SymmetricBurn:
            return FeeModel::symmetric(share / 2.0, share / 2.0);
        case FeeVariant::AsymmetricBurn:
            return FeeModel::asymmetric(share / 2.0, share / 2.0);
    }
    throw DomainError("unknown fee variant");
}

}  // namespace

FeeTier FeeTier::custom(double combined_fee_share) {
    if (!(combined_fee_share >= 0.0))
        throw DomainError("combined fee share must be non-negative");
    return {fmt_double_short(combined_fee_share), combined_fee_share};
}

const char* variant_name(FeeVariant v) {
    switch (v) {
        case FeeVariant::NoFees: return "none";
        case FeeVariant::MintOnly: return "mint";
        case FeeVariant::SymmetricBurn: return "symmetric";
        case FeeVariant::AsymmetricBurn: return "asymmetric";
    }
    return "?";
}

const char* pool_type_name(PoolType t) {
    return t == PoolType::Stable ? "stable" : "open";
}

std::vector<HoldingOutcome> holding_outcomes(const std::vector<DailySnapshot>& daily,
                                             int period_days, int warmup_days) {
    if (period_days <= 0) throw DomainError("holding period must be positive");
    if (warmup_days < 0) throw DomainError("warm-up cannot be negative");

    std::vector<HoldingOutcome> outcomes;
    if (daily.empty()) return outcomes;

    std::unordered_map<std::int64_t, const DailySnapshot*> by_day;
    by_day.reserve(daily.size());
    for (const DailySnapshot& d : daily) by_day.emplace(d.day, &d);

    const std::int64_t first_entry = daily.front().day + warmup_days;
    for (const DailySnapshot& entry : daily) {
        if (entry.day < first_entry) continue;
        if (!(entry.norm_x > 0.0) || !(entry.norm_y > 0.0)) continue;
        const auto exit = by_day.find(entry.day + period_days);
        if (exit == by_day.end()) continue;
        const DailySnapshot& e = *exit->second;
        if (!(e.norm_x > 0.0) || !(e.norm_y > 0.0)) continue;
        outcomes.push_back({entry.day, e.day, e.norm_x / entry.norm_x,
                            e.norm_y / entry.norm_y, period_days});
    }
    return outcomes;
}

std::optional<double> classify_outcomes(const std::vector<HoldingOutcome>& outcomes,
                                        const FeeTier& tier, FeeVariant variant) {
    if (outcomes.empty()) return std::nullopt;
    const FeeModel fees = tier_fees(tier, variant);
    std::size_t profitable = 0;
    for (const HoldingOutcome& o : outcomes) {
        const PositionEndpoints p{1.0, 1.0, o.rel_x, o.rel_y};
        if (is_profitable(p, fees).profitable) ++profitable;
    }
    return double(profitable) / double(outcomes.size());
}

std::vector<OverlayPoint> frontier_overlay(double x0, double y0, FeeVariant variant,
                                           const std::vector<double>& fee_steps) {
    std::vector<OverlayPoint> points;
    points.reserve(fee_steps.size() * kOverlaySamples);
    for (double pct : fee_steps) {
        const FeeModel fees = tier_fees(FeeTier::custom(pct / 100.0), variant);
        const double pole = frontier_limits(x0, y0, fees).x_asymptote;
        // Hug the pole on the left to expose the vertical asymptote, then
        // run far enough right to flatten onto the horizontal one.
        const double lo = pole * (1.0 + 1e-3);
        const double hi = 20.0 * std::max(x0, pole);
        for (int i = 0; i < kOverlaySamples; ++i) {
            const double t = double(i) / double(kOverlaySamples - 1);
            const double x1 = lo * std::pow(hi / lo, t);
            points.push_back({pct, x1, frontier_y1(x1, x0, y0, fees)});
        }
    }
    return points;
}

OutcomeTable build_table(const std::vector<PoolInput>& pools,
                         const std::vector<int>& periods,
                         const std::vector<FeeTier>& tiers, int warmup_days) {
    OutcomeTable table;
    table.periods = periods;
    table.tiers = tiers;
    for (const PoolInput& pool : pools) {
        OutcomeTable::Row row;
        row.pair = pool.pair;
        row.type = pool.type;
        row.variant = pool.variant;
        if (!pool.daily.empty()) {
            const std::int64_t first_entry = pool.daily.front().day + warmup_days;
            row.n = std::count_if(pool.daily.begin(), pool.daily.end(),
                                  [&](const DailySnapshot& d) {
                                      return d.day >= first_entry &&
                                             d.norm_x > 0.0 && d.norm_y > 0.0;
                                  });
        }
        for (int period : periods) {
            const std::vector<HoldingOutcome> outcomes =
                holding_outcomes(pool.daily, period, warmup_days);
            for (const FeeTier& tier : tiers)
                row.cells.push_back(classify_outcomes(outcomes, tier, pool.variant));
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

void write_outcomes_csv(std::ostream& out, const std::vector<HoldingOutcome>& outcomes) {
    out << "entry_date,period,rel_x,rel_y\n";
    for (const HoldingOutcome& o : outcomes)
        out << fmt_date(o.entry_day) << ',' << o.period_days << ','
            << fmt_double(o.rel_x) << ',' << fmt_double(o.rel_y) << '\n';
}

void write_table_csv(std::ostream& out, const OutcomeTable& table) {
    out << "pair,variant,type,n";
    for (int period : table.periods)
        for (const FeeTier& tier : table.tiers)
            out << ",p" << period << '_' << tier.label;
    out << '\n';
    for (const OutcomeTable::Row& row : table.rows) {
        out << row.pair << ',' << variant_name(row.variant) << ','
            << pool_type_name(row.type) << ',' << row.n;
        for (const std::optional<double>& cell : row.cells)
            out << ',' << (cell ? fmt_double(*cell) : "NA");
        out << '\n';
    }
}

void write_overlay_csv(std::ostream& out, const std::vector<OverlayPoint>& points) {
    out << "fee_pct,x1,y1\n";
    for (const OverlayPoint& p : points)
        out << fmt_double(p.fee_pct) << ',' << fmt_double(p.x1) << ','
            << fmt_double(p.y1) << '\n';
}

}  // namespace cpmm
