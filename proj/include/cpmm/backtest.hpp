#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cpmm/events.hpp"
#include "cpmm/frontier.hpp"

namespace cpmm {

// One virtual liquidity position: enter at noon of entry_day, exit one
// holding period later. Reserves per LP token are normalized so the entry
// allocation is (1, 1); rel_x * rel_y is then the normalized-k growth.
struct HoldingOutcome {
    std::int64_t entry_day = 0;
    std::int64_t exit_day = 0;
    double rel_x = 1.0;
    double rel_y = 1.0;
    int period_days = 0;
};

// Network-fee assumption expressed as combined mint+burn fees as a share
// of the initial two-sided position value, split equally between the two
// transactions. Counter-intuitively, the Large tier is the small share:
// large positions dwarf the flat network fees.
struct FeeTier {
    std::string label;
    double combined_fee_share = 0.0;

    static FeeTier small() { return {"small", 0.10}; }
    static FeeTier medium() { return {"medium", 0.05}; }
    static FeeTier large() { return {"large", 0.01}; }
    static FeeTier custom(double combined_fee_share);
};

enum class PoolType { OpenMarket, Stable };

// One pool's replayed daily history plus the classification tags that pick
// its table row: pair label, market type, and which fee variant applies
// (Asymmetric when the y-token is the wrapped native asset).
struct PoolInput {
    std::string pair;
    PoolType type = PoolType::OpenMarket;
    FeeVariant variant = FeeVariant::SymmetricBurn;
    std::vector<DailySnapshot> daily;
};

// Profitability-fraction matrix, one row per pool, one cell per holding
// period x fee tier. A cell without observations is empty, never zero.
struct OutcomeTable {
    struct Row {
        std::string pair;
        PoolType type = PoolType::OpenMarket;
        FeeVariant variant = FeeVariant::SymmetricBurn;
        std::size_t n = 0;  // entry dates after warm-up
        std::vector<std::optional<double>> cells;  // period-major, tier-minor
    };
    std::vector<int> periods;
    std::vector<FeeTier> tiers;
    std::vector<Row> rows;
};

struct OverlayPoint {
    double fee_pct = 0.0;
    double x1 = 0.0;
    double y1 = 0.0;
};

inline constexpr int kDefaultWarmupDays = 10;
inline const std::vector<int> kDefaultPeriods = {30, 180, 360};
inline constexpr int kOverlaySamples = 200;

const char* variant_name(FeeVariant v);
const char* pool_type_name(PoolType t);

// One outcome per entry day d with d >= first_day + warmup_days and a
// snapshot present at d + period_days (calendar gaps break the pairing).
// A series shorter than the period yields an empty list.
std::vector<HoldingOutcome> holding_outcomes(const std::vector<DailySnapshot>& daily,
                                             int period_days, int warmup_days);

// Fraction of outcomes whose unit position (1, 1) -> (rel_x, rel_y) beats
// holding under the tier's fees, split s0 = s1 = combined_fee_share / 2.
// Empty input has no answer and returns nullopt.
std::optional<double> classify_outcomes(const std::vector<HoldingOutcome>& outcomes,
                                        const FeeTier& tier, FeeVariant variant);

// Frontier curves for a family of combined-fee percentages (e.g. 0..50 in
// steps of 5), each sampled on a log-spaced x1 grid right of its pole.
std::vector<OverlayPoint> frontier_overlay(double x0, double y0, FeeVariant variant,
                                           const std::vector<double>& fee_steps);

OutcomeTable build_table(const std::vector<PoolInput>& pools,
                         const std::vector<int>& periods,
                         const std::vector<FeeTier>& tiers, int warmup_days);

// entry_date,period,rel_x,rel_y
void write_outcomes_csv(std::ostream& out, const std::vector<HoldingOutcome>& outcomes);
// pair,variant,type,n, then one fraction column per period x tier
void write_table_csv(std::ostream& out, const OutcomeTable& table);
// fee_pct,x1,y1
void write_overlay_csv(std::ostream& out, const std::vector<OverlayPoint>& points);

}  // namespace cpmm
