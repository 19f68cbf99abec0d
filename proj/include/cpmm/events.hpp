#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "cpmm/exact_pool.hpp"

namespace cpmm {

enum class EventKind { Mint, Burn, Swap, Sync };

// One exported pool log record. Amounts are integer base units; a zero in
// a derivable field (swap output, burn withdrawals, minted supply) means
// "not recorded" and is filled in by replay. lp_delta is a magnitude whose
// direction follows the kind: minted for Mint, burned for Burn.
struct PoolEvent {
    std::int64_t block = 0;
    std::int64_t index = 0;  // intra-block position
    std::int64_t timestamp = 0;  // unix seconds, UTC
    EventKind kind = EventKind::Mint;
    Amount amount_x_in = 0;
    Amount amount_x_out = 0;
    Amount amount_y_in = 0;
    Amount amount_y_out = 0;
    Amount lp_delta = 0;
    std::size_t line = 0;  // 1-based source line, kept for diagnostics
};

// Pool state right after one event was applied.
struct PoolSnapshot {
    std::int64_t timestamp = 0;
    Amount reserve_x = 0;
    Amount reserve_y = 0;
    Amount lp_supply = 0;
    double normalized_x = 0.0;  // reserve_x / lp_supply; 0 when redeemed
    double normalized_y = 0.0;
};

// Latest pool state at or before noon UTC of one calendar day.
struct DailySnapshot {
    std::int64_t day = 0;  // days since 1970-01-01, UTC
    Amount reserve_x = 0;
    Amount reserve_y = 0;
    Amount lp_supply = 0;
    double norm_x = 0.0;
    double norm_y = 0.0;
};

struct ReplayResult {
    std::vector<PoolSnapshot> series;  // one snapshot per event
    ExactPool final_pool;
    std::vector<std::string> notes;  // e.g. sync corrections worth surfacing
};

inline constexpr std::string_view kEventCsvHeader =
    "block,index,timestamp,kind,amount_x_in,amount_x_out,amount_y_in,"
    "amount_y_out,lp_delta";

inline constexpr std::string_view kSnapshotCsvHeader =
    "date,reserve_x,reserve_y,lp_supply,norm_x,norm_y";

// Daily snapshots capture the latest state at or before this second of
// the day (12:00:00 UTC).
inline constexpr std::int64_t kNoonSecond = 43'200;

// Converts a fractional trading fee in [0, 1) to parts per million.
// Throws DomainError outside that range.
std::uint32_t fee_to_ppm(double trading_fee);

// Reads the CSV schema in kEventCsvHeader. Rows must be strictly ordered
// by (block, index) with non-decreasing timestamps. Malformed rows throw
// ParseError, ordering violations OrderError, both carrying the 1-based
// line number. An empty stream yields an empty list.
std::vector<PoolEvent> parse_events(std::istream& in);

// Applies events in order through the exact integer pool. The first event
// must be a Mint (it bootstraps the pool). Recorded amounts take
// precedence over modeled ones; Sync overwrites reserves outright and any
// correction is reported in notes. Failures throw ReplayError carrying the
// 0-based event index.
ReplayResult replay(const std::vector<PoolEvent>& events, double trading_fee);

// Collapses a per-event series into one row per calendar day: the latest
// state at or before noon UTC, carried forward over inactive days. Days
// before the first qualifying state and days where the pool is fully
// redeemed are omitted.
std::vector<DailySnapshot> daily_snapshots(const std::vector<PoolSnapshot>& series);

void write_snapshot_csv(std::ostream& out, const std::vector<DailySnapshot>& daily);

// Reads back the CSV written by write_snapshot_csv. Days must be strictly
// increasing; norms are trusted as written.
std::vector<DailySnapshot> parse_snapshot_csv(std::istream& in);

}  // namespace cpmm
