#include "cpmm/events.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>

#include "cpmm/format.hpp"

namespace cpmm {

namespace {

std::int64_t parse_count(std::string_view field, std::size_t line,
                         const char* name) {
    std::int64_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size() || value < 0)
        throw ParseError(line, std::string(name) +
                                   " must be a non-negative integer, got '" +
                                   std::string(field) + "'");
    return value;
}

Amount parse_amount_field(std::string_view field, std::size_t line,
                          const char* name) {
    try {
        return parse_amount(field);
    } catch (const InvalidAmountError& e) {
        throw ParseError(line, std::string(name) + ": " + e.what());
    }
}

double parse_real(std::string_view field, std::size_t line, const char* name) {
    double value = 0.0;
    const auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw ParseError(line, std::string(name) + " must be a number, got '" +
                                   std::string(field) + "'");
    return value;
}

EventKind parse_kind(std::string_view field, std::size_t line) {
    if (field == "mint") return EventKind::Mint;
    if (field == "burn") return EventKind::Burn;
    if (field == "swap") return EventKind::Swap;
    if (field == "sync") return EventKind::Sync;
    throw ParseError(line, "unknown event kind '" + std::string(field) + "'");
}

// Schema constraints that depend on the kind: derivable fields may be
// zero, everything else must be present or absent as the kind dictates.
void check_shape(const PoolEvent& e) {
    switch (e.kind) {
        case EventKind::Mint:
            if (e.amount_x_in == 0 || e.amount_y_in == 0)
                throw ParseError(e.line, "mint requires both deposit amounts");
            if (e.amount_x_out != 0 || e.amount_y_out != 0)
                throw ParseError(e.line, "mint must not have output amounts");
            break;
        case EventKind::Burn:
            if (e.lp_delta == 0)
                throw ParseError(e.line, "burn requires a positive lp_delta");
            if (e.amount_x_in != 0 || e.amount_y_in != 0)
                throw ParseError(e.line, "burn must not have input amounts");
            break;
        case EventKind::Swap:
            if ((e.amount_x_in == 0) == (e.amount_y_in == 0))
                throw ParseError(e.line,
                                 "swap requires exactly one nonzero input side");
            if (e.amount_x_in != 0 && e.amount_x_out != 0)
                throw ParseError(e.line, "swap output must be on the opposite side");
            if (e.amount_y_in != 0 && e.amount_y_out != 0)
                throw ParseError(e.line, "swap output must be on the opposite side");
            if (e.lp_delta != 0)
                throw ParseError(e.line, "swap must not change liquidity supply");
            break;
        case EventKind::Sync:
            if ((e.amount_x_in == 0) != (e.amount_y_in == 0))
                throw ParseError(e.line, "sync must set both reserves or neither");
            if (e.amount_x_out != 0 || e.amount_y_out != 0 || e.lp_delta != 0)
                throw ParseError(e.line, "sync carries reserves in the input columns only");
            break;
    }
}

Amount add_reserves(Amount a, Amount b, std::size_t index) {
    const Amount sum = a + b;  // fixed-width unsigned wraps on overflow
    if (sum < a) throw ReplayError(index, "liquidity supply overflows 128 bits");
    return sum;
}

std::string pair_str(const Amount& x, const Amount& y) {
    return "(" + x.str() + ", " + y.str() + ")";
}

PoolSnapshot snapshot_of(const ExactPool& pool, std::int64_t timestamp) {
    PoolSnapshot s;
    s.timestamp = timestamp;
    s.reserve_x = pool.reserve_x;
    s.reserve_y = pool.reserve_y;
    s.lp_supply = pool.lp_supply;
    if (pool.lp_supply != 0) {
        const double supply = amount_to_double(pool.lp_supply);
        s.normalized_x = amount_to_double(pool.reserve_x) / supply;
        s.normalized_y = amount_to_double(pool.reserve_y) / supply;
    }
    return s;
}

}  // namespace

std::uint32_t fee_to_ppm(double trading_fee) {
    if (!(trading_fee >= 0.0) || !(trading_fee < 1.0))
        throw DomainError("trading fee must lie in [0, 1)");
    const long long ppm = std::llround(trading_fee * kFeeDenomPpm);
    if (ppm >= kFeeDenomPpm) throw DomainError("trading fee must lie in [0, 1)");
    return static_cast<std::uint32_t>(ppm);
}

std::vector<PoolEvent> parse_events(std::istream& in) {
    std::vector<PoolEvent> events;
    std::string raw;
    std::size_t line_no = 0;

    if (!std::getline(in, raw)) return events;  // empty stream
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (raw != kEventCsvHeader)
        throw ParseError(line_no, "unexpected header; want '" +
                                      std::string(kEventCsvHeader) + "'");

    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        if (raw.empty()) continue;  // tolerate blank separator lines

        const std::vector<std::string_view> f = split_csv(raw);
        if (f.size() != 9)
            throw ParseError(line_no, "expected 9 fields, got " +
                                          std::to_string(f.size()));

        PoolEvent e;
        e.line = line_no;
        e.block = parse_count(f[0], line_no, "block");
        e.index = parse_count(f[1], line_no, "index");
        e.timestamp = parse_count(f[2], line_no, "timestamp");
        e.kind = parse_kind(f[3], line_no);
        e.amount_x_in = parse_amount_field(f[4], line_no, "amount_x_in");
        e.amount_x_out = parse_amount_field(f[5], line_no, "amount_x_out");
        e.amount_y_in = parse_amount_field(f[6], line_no, "amount_y_in");
        e.amount_y_out = parse_amount_field(f[7], line_no, "amount_y_out");
        e.lp_delta = parse_amount_field(f[8], line_no, "lp_delta");
        check_shape(e);

        if (!events.empty()) {
            const PoolEvent& prev = events.back();
            if (e.block == prev.block && e.index == prev.index)
                throw OrderError(line_no, "duplicate (block, index)");
            if (e.block < prev.block ||
                (e.block == prev.block && e.index < prev.index))
                throw OrderError(line_no, "events not ordered by (block, index)");
            if (e.timestamp < prev.timestamp)
                throw OrderError(line_no, "timestamps must be non-decreasing");
        }
        events.push_back(e);
    }
    return events;
}

ReplayResult replay(const std::vector<PoolEvent>& events, double trading_fee) {
    ReplayResult result;
    result.final_pool.fee_ppm = fee_to_ppm(trading_fee);
    if (events.empty()) return result;
    if (events.front().kind != EventKind::Mint)
        throw ReplayError(0, "first event must be a mint");

    ExactPool pool = result.final_pool;
    result.series.reserve(events.size());

    for (std::size_t i = 0; i < events.size(); ++i) {
        const PoolEvent& e = events[i];
        try {
            switch (e.kind) {
                case EventKind::Mint: {
                    const ExactPool before = pool;
                    pool = exact_mint(pool, e.amount_x_in, e.amount_y_in)
                               .pool_after;
                    if (e.lp_delta != 0)  // exported supply delta wins
                        pool.lp_supply =
                            add_reserves(before.lp_supply, e.lp_delta, i);
                    break;
                }
                case EventKind::Burn: {
                    const ExactPool before = pool;
                    pool = exact_burn(pool, e.lp_delta).pool_after;
                    if (e.amount_x_out != 0 || e.amount_y_out != 0) {
                        // exported withdrawal amounts win over the
                        // proportional model
                        if (e.amount_x_out > before.reserve_x ||
                            e.amount_y_out > before.reserve_y)
                            throw InsufficientLiquidityError(
                                "burn withdraws more than the reserve");
                        pool.reserve_x = before.reserve_x - e.amount_x_out;
                        pool.reserve_y = before.reserve_y - e.amount_y_out;
                    }
                    break;
                }
                case EventKind::Swap: {
                    const bool x_in = e.amount_x_in != 0;
                    const ExactPool before = pool;
                    const ExactSwapResult r = exact_swap_exact_in(
                        pool, x_in ? Side::X : Side::Y,
                        x_in ? e.amount_x_in : e.amount_y_in);
                    pool = r.pool_after;
                    const Amount recorded = x_in ? e.amount_y_out : e.amount_x_out;
                    if (recorded != 0 && recorded != r.amount_out) {
                        // exported fill wins over the modeled quote
                        const Amount out_reserve =
                            x_in ? before.reserve_y : before.reserve_x;
                        if (recorded >= out_reserve)
                            throw InsufficientLiquidityError(
                                "recorded swap output drains the reserve");
                        if (x_in)
                            pool.reserve_y = before.reserve_y - recorded;
                        else
                            pool.reserve_x = before.reserve_x - recorded;
                    }
                    break;
                }
                case EventKind::Sync: {
                    const ExactPool before = pool;
                    pool = exact_sync(pool, e.amount_x_in, e.amount_y_in);
                    if (pool.reserve_x != before.reserve_x ||
                        pool.reserve_y != before.reserve_y)
                        result.notes.push_back(
                            "event " + std::to_string(i) + " (line " +
                            std::to_string(e.line) + "): sync moved reserves " +
                            pair_str(before.reserve_x, before.reserve_y) +
                            " -> " + pair_str(pool.reserve_x, pool.reserve_y));
                    break;
                }
            }
        } catch (const ReplayError&) {
            throw;
        } catch (const Error& err) {
            throw ReplayError(i, err.what());
        }
        result.series.push_back(snapshot_of(pool, e.timestamp));
    }
    result.final_pool = pool;
    return result;
}

std::vector<DailySnapshot> daily_snapshots(const std::vector<PoolSnapshot>& series) {
    std::vector<DailySnapshot> daily;
    if (series.empty()) return daily;

    const std::int64_t first_day = day_of_timestamp(series.front().timestamp);
    const std::int64_t last_day = day_of_timestamp(series.back().timestamp);
    std::size_t next = 0;
    const PoolSnapshot* current = nullptr;  // latest state at or before noon

    for (std::int64_t day = first_day; day <= last_day; ++day) {
        const std::int64_t noon = day * 86'400 + kNoonSecond;
        while (next < series.size() && series[next].timestamp <= noon)
            current = &series[next++];
        if (current == nullptr) continue;  // first event is after this noon
        if (current->lp_supply == 0) continue;  // fully redeemed
        daily.push_back({day, current->reserve_x, current->reserve_y,
                         current->lp_supply, current->normalized_x,
                         current->normalized_y});
    }
    return daily;
}

void write_snapshot_csv(std::ostream& out, const std::vector<DailySnapshot>& daily) {
    out << kSnapshotCsvHeader << '\n';
    for (const DailySnapshot& d : daily)
        out << fmt_date(d.day) << ',' << d.reserve_x << ',' << d.reserve_y
            << ',' << d.lp_supply << ',' << fmt_double(d.norm_x) << ','
            << fmt_double(d.norm_y) << '\n';
}

std::vector<DailySnapshot> parse_snapshot_csv(std::istream& in) {
    std::vector<DailySnapshot> daily;
    std::string raw;
    std::size_t line_no = 0;

    if (!std::getline(in, raw)) return daily;
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (raw != kSnapshotCsvHeader)
        throw ParseError(line_no, "unexpected header; want '" +
                                      std::string(kSnapshotCsvHeader) + "'");

    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        if (raw.empty()) continue;

        const std::vector<std::string_view> f = split_csv(raw);
        if (f.size() != 6)
            throw ParseError(line_no, "expected 6 fields, got " +
                                          std::to_string(f.size()));

        DailySnapshot d;
        const std::optional<std::int64_t> day = parse_date(f[0]);
        if (!day)
            throw ParseError(line_no,
                             "bad date '" + std::string(f[0]) + "'");
        d.day = *day;
        d.reserve_x = parse_amount_field(f[1], line_no, "reserve_x");
        d.reserve_y = parse_amount_field(f[2], line_no, "reserve_y");
        d.lp_supply = parse_amount_field(f[3], line_no, "lp_supply");
        d.norm_x = parse_real(f[4], line_no, "norm_x");
        d.norm_y = parse_real(f[5], line_no, "norm_y");
        if (!daily.empty() && d.day <= daily.back().day)
            throw OrderError(line_no, "days must be strictly increasing");
        daily.push_back(d);
    }
    return daily;
}

}  // namespace cpmm
