#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <sstream>

#include "cpmm/backtest.hpp"

using namespace cpmm;

namespace {

struct Rng {
    std::mt19937_64 gen{20240713u};
    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(gen);
    }
};

// Hand-built daily series with unit reserves scaled by per-day factors.
std::vector<DailySnapshot> series_from_norms(
    const std::vector<std::pair<double, double>>& norms,
    std::int64_t first_day = 1000) {
    std::vector<DailySnapshot> daily;
    for (std::size_t i = 0; i < norms.size(); ++i) {
        DailySnapshot d;
        d.day = first_day + std::int64_t(i);
        d.lp_supply = 1'000'000;
        d.reserve_x = Amount(std::uint64_t(norms[i].first * 1e6));
        d.reserve_y = Amount(std::uint64_t(norms[i].second * 1e6));
        d.norm_x = norms[i].first;
        d.norm_y = norms[i].second;
        daily.push_back(d);
    }
    return daily;
}

std::vector<DailySnapshot> constant_series(int days) {
    return series_from_norms(
        std::vector<std::pair<double, double>>(days, {1.0, 1.0}));
}

// Profitability the long way round: hold value against 2*x1 with
// the fee terms written out, independent of the frontier module.
bool brute_force_profitable(double rel_x, double rel_y, double s0, double s1,
                            FeeVariant variant) {
    const double hold = 1.0 + rel_x / rel_y;
    const double lp = 2.0 * rel_x;
    switch (variant) {
        case FeeVariant::NoFees: return lp > hold;
        case FeeVariant::MintOnly: return lp > hold * (1.0 + s0 / 2.0);
        case FeeVariant::SymmetricBurn:
            return lp > hold * (1.0 + (s0 + s1) / 2.0);
        case FeeVariant::AsymmetricBurn:
            return lp - s1 * (rel_x / rel_y) > hold * (1.0 + s0 / 2.0);
    }
    return false;
}

}  // namespace

TEST_CASE("holding outcomes pair entry days with exits one period later") {
    const std::vector<DailySnapshot> daily = constant_series(41);
    const std::vector<HoldingOutcome> all = holding_outcomes(daily, 30, 0);
    CHECK(all.size() == 11);  // entries on days 0..10 of the series
    for (const HoldingOutcome& o : all) {
        CHECK(o.rel_x == doctest::Approx(1.0));
        CHECK(o.rel_y == doctest::Approx(1.0));
        CHECK(o.exit_day - o.entry_day == 30);
        CHECK(o.period_days == 30);
    }
    CHECK(holding_outcomes(daily, 30, 10).size() == 1);
    CHECK(holding_outcomes(daily, 30, 11).empty());
    CHECK(holding_outcomes(daily, 50, 0).empty());
    CHECK_THROWS_AS(holding_outcomes(daily, 0, 0), DomainError);
    CHECK_THROWS_AS(holding_outcomes(daily, 30, -1), DomainError);
}

TEST_CASE("calendar gaps break the pairing") {
    std::vector<DailySnapshot> daily = constant_series(11);
    daily.erase(daily.begin() + 10);  // exit day of the first entry
    const std::vector<HoldingOutcome> out = holding_outcomes(daily, 10, 0);
    CHECK(out.empty());
}

TEST_CASE("relative reserves are normalized to the entry day") {
    // Normalized reserves double over the window: pure fee growth.
    std::vector<std::pair<double, double>> norms;
    for (int i = 0; i <= 10; ++i)
        norms.push_back({1.0 + 0.1 * i, 1.0 + 0.1 * i});
    const std::vector<HoldingOutcome> out =
        holding_outcomes(series_from_norms(norms), 10, 0);
    REQUIRE(out.size() == 1);
    CHECK(out[0].rel_x == doctest::Approx(2.0));
    CHECK(out[0].rel_y == doctest::Approx(2.0));
}

TEST_CASE("fee-less price move keeps the product at one") {
    // One fee-less swap doubling the x side: per-share state goes from
    // (1, 1) to (2, 0.5), i.e. r = 4 with no fee growth.
    const std::vector<HoldingOutcome> out = holding_outcomes(
        series_from_norms({{1.0, 1.0}, {2.0, 0.5}}), 1, 0);
    REQUIRE(out.size() == 1);
    CHECK(out[0].rel_x == doctest::Approx(2.0));
    CHECK(out[0].rel_y == doctest::Approx(0.5));
    CHECK(out[0].rel_x * out[0].rel_y == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("classification fractions") {
    const std::vector<HoldingOutcome> flat =
        holding_outcomes(constant_series(41), 30, 0);
    SUBCASE("flat outcomes never beat positive fees") {
        for (const FeeTier& tier :
             {FeeTier::small(), FeeTier::medium(), FeeTier::large()}) {
            CHECK(classify_outcomes(flat, tier, FeeVariant::SymmetricBurn) == 0.0);
            CHECK(classify_outcomes(flat, tier, FeeVariant::AsymmetricBurn) == 0.0);
        }
    }
    SUBCASE("empty outcome lists have no answer") {
        CHECK(classify_outcomes({}, FeeTier::large(), FeeVariant::SymmetricBurn) ==
              std::nullopt);
    }
    SUBCASE("pure fee growth clears the large tier") {
        const std::vector<HoldingOutcome> grown{{0, 30, 1.2, 1.2, 30}};
        CHECK(classify_outcomes(grown, FeeTier::large(),
                                FeeVariant::SymmetricBurn) == 1.0);
        // Frozen margin: 2*1.2 - 2*(1 + 0.01/2) = 0.39.
        const PositionEndpoints p{1, 1, 1.2, 1.2};
        CHECK(is_profitable(p, FeeModel::symmetric(0.005, 0.005)).margin ==
              doctest::Approx(0.39).epsilon(1e-12));
    }
    SUBCASE("zero tier reduces to the no-fee comparison") {
        const std::vector<HoldingOutcome> grown{{0, 30, 1.2, 1.2, 30}};
        CHECK(classify_outcomes(grown, FeeTier::custom(0.0),
                                FeeVariant::SymmetricBurn) == 1.0);
        CHECK(classify_outcomes(flat, FeeTier::custom(0.0),
                                FeeVariant::SymmetricBurn) == 0.0);  // breakeven
    }
}

TEST_CASE("pure invariant growth is always profitable without fees") {
    for (double g : {1.0001, 1.01, 1.5, 4.0}) {
        const std::vector<HoldingOutcome> one{{0, 30, g, g, 30}};
        CHECK(classify_outcomes(one, FeeTier::custom(0.0),
                                FeeVariant::SymmetricBurn) == 1.0);
    }
}

TEST_CASE("inside the zero-fee price limits growth implies profit") {
    Rng rng;
    for (int i = 0; i < 500; ++i) {
        const double k1 = rng.uniform(1.0001, 2.0);
        const auto limits = price_limits(1.0, 1.0, k1, FeeModel::none());
        REQUIRE(limits.has_value());
        // Draw an allocation strictly between the two crossings.
        const double t = rng.uniform(0.05, 0.95);
        const double x1 =
            limits->upper.x1 * std::pow(limits->lower.x1 / limits->upper.x1, t);
        const std::vector<HoldingOutcome> one{{0, 30, x1, k1 / x1, 30}};
        CHECK(classify_outcomes(one, FeeTier::custom(0.0),
                                FeeVariant::SymmetricBurn) == 1.0);
    }
}

TEST_CASE("fractions fall as the fee share rises") {
    Rng rng;
    std::vector<HoldingOutcome> outcomes;
    for (int i = 0; i < 400; ++i) {
        const double r = rng.uniform(0.6, 1.6);
        const double growth = rng.uniform(1.0, 1.12);
        outcomes.push_back(
            {0, 30, std::sqrt(r * growth), std::sqrt(growth / r), 30});
    }
    for (FeeVariant variant :
         {FeeVariant::SymmetricBurn, FeeVariant::AsymmetricBurn}) {
        const double large =
            *classify_outcomes(outcomes, FeeTier::large(), variant);
        const double medium =
            *classify_outcomes(outcomes, FeeTier::medium(), variant);
        const double small =
            *classify_outcomes(outcomes, FeeTier::small(), variant);
        CHECK(large >= medium);
        CHECK(medium >= small);
        CHECK(large > small);  // the spread is real on this sample
    }
}

TEST_CASE("classification agrees with brute force on random outcomes") {
    Rng rng;
    for (FeeVariant variant :
         {FeeVariant::NoFees, FeeVariant::MintOnly, FeeVariant::SymmetricBurn,
          FeeVariant::AsymmetricBurn}) {
        const double share =
            variant == FeeVariant::NoFees ? 0.0 : rng.uniform(0.005, 0.15);
        const FeeTier tier = FeeTier::custom(share);
        for (int i = 0; i < 10'000; ++i) {
            const double rel_x = rng.uniform(0.5, 2.0);
            const double rel_y = rng.uniform(0.5, 2.0);
            if (rel_x * rel_y < 1.0) continue;  // invariant cannot shrink
            const std::vector<HoldingOutcome> one{{0, 30, rel_x, rel_y, 30}};
            const bool lib = *classify_outcomes(one, tier, variant) == 1.0;
            const bool brute = brute_force_profitable(rel_x, rel_y, share / 2.0,
                                                      share / 2.0, variant);
            CHECK(lib == brute);
        }
    }
}

TEST_CASE("overlay samples the requested fee family") {
    const std::vector<OverlayPoint> points =
        frontier_overlay(1.0, 1.0, FeeVariant::SymmetricBurn, {0.0, 10.0});
    REQUIRE(points.size() == 2 * std::size_t(kOverlaySamples));
    for (const OverlayPoint& p : points) {
        if (p.fee_pct != 0.0) continue;
        // The 0% member is the plain curve x1/(2*x1 - 1).
        CHECK(p.y1 == doctest::Approx(p.x1 / (2.0 * p.x1 - 1.0)).epsilon(1e-12));
    }
    CHECK(points.front().x1 < 1.0);
    CHECK(points[kOverlaySamples - 1].x1 > 10.0);

    // Figure asymptotes for the two burn variants.
    CHECK(frontier_limits(1, 1, FeeModel::asymmetric(0.25, 0.25)).y_asymptote ==
          doctest::Approx(0.6875).epsilon(1e-12));
    CHECK(frontier_limits(1, 1, FeeModel::symmetric(0.175, 0.175)).y_asymptote ==
          doctest::Approx(0.5875).epsilon(1e-12));
}

TEST_CASE("higher fee steps nest strictly inside lower ones") {
    for (FeeVariant variant :
         {FeeVariant::SymmetricBurn, FeeVariant::AsymmetricBurn}) {
        const FeeModel lo = variant == FeeVariant::SymmetricBurn
                                ? FeeModel::symmetric(0.05, 0.05)
                                : FeeModel::asymmetric(0.05, 0.05);
        const FeeModel hi = variant == FeeVariant::SymmetricBurn
                                ? FeeModel::symmetric(0.15, 0.15)
                                : FeeModel::asymmetric(0.15, 0.15);
        const double pole = frontier_limits(1, 1, hi).x_asymptote;
        for (int i = 1; i <= 100; ++i) {
            const double x1 = pole + 0.05 * i;
            const double y_lo = frontier_y1(x1, 1, 1, lo);
            const double y_hi = frontier_y1(x1, 1, 1, hi);
            CHECK(y_hi > y_lo);
            // A point between the curves clears the low hurdle only.
            const double between = 0.5 * (y_lo + y_hi);
            CHECK(is_profitable({1, 1, x1, between}, lo).profitable);
            CHECK_FALSE(is_profitable({1, 1, x1, between}, hi).profitable);
        }
    }
    CHECK_THROWS_AS(frontier_overlay(1, 1, FeeVariant::SymmetricBurn, {-5.0}),
                    DomainError);
}

TEST_CASE("table assembly composes the pieces") {
    const std::vector<int> periods{30};
    const std::vector<FeeTier> tiers{FeeTier::large()};
    SUBCASE("no pools, no rows") {
        const OutcomeTable empty = build_table({}, periods, tiers, 10);
        CHECK(empty.rows.empty());
        CHECK(empty.periods == periods);
    }
    SUBCASE("single cell equals classify_outcomes") {
        std::vector<std::pair<double, double>> norms;
        for (int i = 0; i <= 60; ++i) {
            const double g = 1.0 + 0.004 * i;
            norms.push_back({g, g});
        }
        const PoolInput pool{"demo", PoolType::OpenMarket,
                             FeeVariant::SymmetricBurn,
                             series_from_norms(norms)};
        const OutcomeTable table = build_table({pool}, periods, tiers, 10);
        REQUIRE(table.rows.size() == 1);
        REQUIRE(table.rows[0].cells.size() == 1);
        const auto direct = classify_outcomes(
            holding_outcomes(pool.daily, 30, 10), tiers[0],
            FeeVariant::SymmetricBurn);
        CHECK(table.rows[0].cells[0] == direct);
        CHECK(table.rows[0].n == 51);  // entries on days 10..60
    }
    SUBCASE("rows are per pool, never aggregated") {
        std::vector<std::pair<double, double>> grow;
        for (int i = 0; i <= 60; ++i) grow.push_back({1.0 + 0.01 * i, 1.0 + 0.01 * i});
        const PoolInput flat{"flat", PoolType::Stable, FeeVariant::SymmetricBurn,
                             constant_series(61)};
        const PoolInput rich{"rich", PoolType::OpenMarket,
                             FeeVariant::AsymmetricBurn, series_from_norms(grow)};
        const OutcomeTable table = build_table({flat, rich}, periods, tiers, 0);
        REQUIRE(table.rows.size() == 2);
        CHECK(table.rows[0].cells[0] == 0.0);
        CHECK(table.rows[1].cells[0] == 1.0);
    }
    SUBCASE("short history leaves the cell empty") {
        const PoolInput stub{"stub", PoolType::OpenMarket,
                             FeeVariant::SymmetricBurn, constant_series(5)};
        const OutcomeTable table = build_table({stub}, periods, tiers, 0);
        CHECK_FALSE(table.rows[0].cells[0].has_value());
    }
}

TEST_CASE("csv writers emit the documented layouts") {
    SUBCASE("outcomes") {
        std::ostringstream out;
        write_outcomes_csv(out, {{18000, 18030, 2.0, 0.5, 30}});
        CHECK(out.str() ==
              "entry_date,period,rel_x,rel_y\n2019-04-14,30,2,0.5\n");
    }
    SUBCASE("table with empty marker") {
        OutcomeTable table;
        table.periods = {30};
        table.tiers = {FeeTier::large(), FeeTier::small()};
        OutcomeTable::Row row;
        row.pair = "demo";
        row.type = PoolType::Stable;
        row.variant = FeeVariant::AsymmetricBurn;
        row.n = 7;
        row.cells = {0.5, std::nullopt};
        table.rows.push_back(row);
        std::ostringstream out;
        write_table_csv(out, table);
        CHECK(out.str() ==
              "pair,variant,type,n,p30_large,p30_small\n"
              "demo,asymmetric,stable,7,0.5,NA\n");
    }
    SUBCASE("overlay") {
        std::ostringstream out;
        write_overlay_csv(out, {{5.0, 2.0, 0.75}});
        CHECK(out.str() == "fee_pct,x1,y1\n5,2,0.75\n");
    }
}

TEST_CASE("custom tiers label themselves and reject negatives") {
    CHECK(FeeTier::custom(0.02).label == "0.02");
    CHECK(FeeTier::custom(0.0).combined_fee_share == 0.0);
    CHECK_THROWS_AS(FeeTier::custom(-0.01), DomainError);
    CHECK(FeeTier::small().combined_fee_share == 0.10);
    CHECK(FeeTier::medium().combined_fee_share == 0.05);
    CHECK(FeeTier::large().combined_fee_share == 0.01);
}
