#pragma once

// Deterministic synthetic pool history: a seeded 400-day price walk with
// daily swaps, periodic mints/burns, and occasional sync donations. The
// log leaves derivable fields (swap outputs, minted supply) at zero so
// replay fills them in through the exact integer path; the shadow pool
// below uses the same operations, so recorded rows never contradict the
// replayed state. Morning (09:00) and afternoon (15:00) timestamps
// straddle the noon snapshot cutoff on purpose.

#include <cstdint>
#include <fstream>
#include <random>
#include <string>

#include "cpmm/events.hpp"
#include "cpmm/exact_pool.hpp"

namespace synthetic {

inline constexpr int kDays = 400;
inline constexpr std::uint32_t kFeePpm = 3000;  // rho = 0.003
inline constexpr double kRho = 0.003;

inline void write_event_log(const std::string& path, std::uint64_t seed = 42) {
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    std::ofstream out(path, std::ios::binary);
    out << cpmm::kEventCsvHeader << '\n';

    std::int64_t block = 1000;
    const auto row = [&](std::int64_t ts, const char* kind, cpmm::Amount xi,
                         cpmm::Amount xo, cpmm::Amount yi, cpmm::Amount yo,
                         cpmm::Amount lp) {
        out << block << ",0," << ts << ',' << kind << ',' << xi << ',' << xo
            << ',' << yi << ',' << yo << ',' << lp << '\n';
        block += 1 + std::int64_t(gen() % 40);  // jittered but increasing
    };

    const std::int64_t day0 = 18'000;  // fixed epoch day, ~April 2019
    const auto at = [&](int day, int hour) {
        return (day0 + day) * std::int64_t(86'400) + hour * std::int64_t(3'600);
    };

    const cpmm::Amount base{1'000'000'000'000ULL};  // 1e12 base units
    cpmm::ExactPool pool = cpmm::exact_bootstrap(base, base, kFeePpm);
    row(at(0, 9), "mint", base, 0, base, 0, 0);

    for (int d = 1; d <= kDays; ++d) {
        // Direction bias flips by regime so the price both trends and
        // mean-reverts across the history.
        const double x_in_prob = (d / 100) % 2 == 0 ? 0.58 : 0.42;

        const int swaps = 1 + int(gen() % 2);
        for (int s = 0; s < swaps; ++s) {
            const bool x_in = unit(gen) < x_in_prob;
            const cpmm::Amount side =
                x_in ? pool.reserve_x : pool.reserve_y;
            const cpmm::Amount amount = side * (2 + gen() % 19) / 1000;
            const cpmm::ExactSwapResult r = cpmm::exact_swap_exact_in(
                pool, x_in ? cpmm::Side::X : cpmm::Side::Y, amount);
            pool = r.pool_after;
            if (x_in)
                row(at(d, s == 0 ? 9 : 15), "swap", amount, 0, 0, 0, 0);
            else
                row(at(d, s == 0 ? 9 : 15), "swap", 0, 0, amount, 0, 0);
        }

        if (d % 9 == 0) {
            const cpmm::Amount dx = pool.reserve_x / 100;
            const cpmm::Amount dy = pool.reserve_y / 100;
            pool = cpmm::exact_mint(pool, dx, dy).pool_after;
            row(at(d, 15), "mint", dx, 0, dy, 0, 0);
        }
        if (d % 23 == 0) {
            const cpmm::Amount lp = pool.lp_supply / 200;
            pool = cpmm::exact_burn(pool, lp).pool_after;
            row(at(d, 15), "burn", 0, 0, 0, 0, lp);
        }
        if (d % 50 == 0) {
            // Donation skimmed into reserves outside the swap model.
            const cpmm::Amount nx = pool.reserve_x + pool.reserve_x / 1000;
            pool = cpmm::exact_sync(pool, nx, pool.reserve_y);
            row(at(d, 15), "sync", nx, 0, pool.reserve_y, 0, 0);
        }
    }
}

}  // namespace synthetic
