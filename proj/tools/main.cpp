// Command-line front end: replay exported pool logs, sample profitability
// frontiers, run holding-period backtests, and classify single outcomes.
// Every run is deterministic and echoes its resolved parameters into a
// manifest.json next to the data files it writes.

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "cpmm/backtest.hpp"
#include "cpmm/events.hpp"
#include "cpmm/format.hpp"
#include "cpmm/frontier.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

// Input/output file trouble; mapped to exit code 2.
struct FileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<cpmm::PoolEvent> load_events(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileError("cannot open " + path);
    return cpmm::parse_events(in);
}

std::ofstream open_out(const fs::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FileError("cannot write " + path.string());
    return out;
}

void write_manifest(const fs::path& dir, const ordered_json& manifest) {
    open_out(dir / "manifest.json") << manifest.dump(2) << '\n';
}

cpmm::FeeModel make_fee_model(cpmm::FeeVariant variant, double mint_fee,
                              double burn_fee) {
    switch (variant) {
        case cpmm::FeeVariant::NoFees:
            if (mint_fee != 0.0 || burn_fee != 0.0)
                throw cpmm::DomainError("variant 'none' requires zero fees");
            return cpmm::FeeModel::none();
        case cpmm::FeeVariant::MintOnly:
            return cpmm::FeeModel::mint_only(mint_fee);
        case cpmm::FeeVariant::SymmetricBurn:
            return cpmm::FeeModel::symmetric(mint_fee, burn_fee);
        case cpmm::FeeVariant::AsymmetricBurn:
            return cpmm::FeeModel::asymmetric(mint_fee, burn_fee);
    }
    throw cpmm::DomainError("unknown fee variant");
}

std::vector<cpmm::FeeTier> make_tiers(const std::vector<std::string>& tokens) {
    std::vector<cpmm::FeeTier> tiers;
    for (const std::string& t : tokens) {
        if (t == "small") {
            tiers.push_back(cpmm::FeeTier::small());
        } else if (t == "medium") {
            tiers.push_back(cpmm::FeeTier::medium());
        } else if (t == "large") {
            tiers.push_back(cpmm::FeeTier::large());
        } else {
            double share = 0.0;
            const auto [ptr, ec] =
                std::from_chars(t.data(), t.data() + t.size(), share);
            if (ec != std::errc{} || ptr != t.data() + t.size())
                throw cpmm::DomainError("unknown tier '" + t +
                                        "' (want small, medium, large, or a "
                                        "combined fee share)");
            tiers.push_back(cpmm::FeeTier::custom(share));
        }
    }
    return tiers;
}

std::vector<double> default_fee_steps(cpmm::FeeVariant variant) {
    // Combined-fee sweeps used for the overlay curves: up to 35% when the
    // fee tracks pool value (symmetric), up to 50% when paid in y-token.
    const double top = variant == cpmm::FeeVariant::SymmetricBurn ? 35.0 : 50.0;
    std::vector<double> steps;
    if (variant == cpmm::FeeVariant::NoFees) return {0.0};
    for (double p = 0.0; p <= top + 1e-9; p += 5.0) steps.push_back(p);
    return steps;
}

const char* case_name(cpmm::CaseLabel label) {
    switch (label) {
        case cpmm::CaseLabel::Case1: return "Case1";
        case cpmm::CaseLabel::Case2: return "Case2";
        case cpmm::CaseLabel::Case3: return "Case3";
        case cpmm::CaseLabel::Case4: return "Case4";
    }
    return "?";
}

struct ReplayOpts {
    std::string events;
    double rho = 0.003;
    std::string out = "out";
};

struct FrontierOpts {
    double x0 = 1.0, y0 = 1.0;
    cpmm::FeeVariant variant = cpmm::FeeVariant::NoFees;
    double mint_fee = 0.0, burn_fee = 0.0;
    std::vector<double> at;
    std::string out = "out";
};

struct BacktestOpts {
    std::string events;
    std::string snapshots;
    double rho = 0.003;
    std::string pair = "pool";
    cpmm::PoolType type = cpmm::PoolType::OpenMarket;
    cpmm::FeeVariant variant = cpmm::FeeVariant::SymmetricBurn;
    std::vector<int> periods = cpmm::kDefaultPeriods;
    std::vector<std::string> tiers = {"small", "medium", "large"};
    std::vector<double> fee_steps;
    int warmup_days = cpmm::kDefaultWarmupDays;
    std::string out = "out";
};

struct ClassifyOpts {
    double x0 = 1.0, y0 = 1.0;
    double x1 = 0.0, y1 = 0.0;
    cpmm::FeeVariant variant = cpmm::FeeVariant::NoFees;
    double mint_fee = 0.0, burn_fee = 0.0;
};

int run_replay(const ReplayOpts& opt) {
    const std::vector<cpmm::PoolEvent> events = load_events(opt.events);
    const cpmm::ReplayResult result = cpmm::replay(events, opt.rho);
    for (const std::string& note : result.notes)
        std::cerr << "note: " << note << '\n';

    const std::vector<cpmm::DailySnapshot> daily =
        cpmm::daily_snapshots(result.series);
    const fs::path dir(opt.out);
    fs::create_directories(dir);
    {
        std::ofstream out = open_out(dir / "snapshots.csv");
        cpmm::write_snapshot_csv(out, daily);
    }
    write_manifest(dir, {{"command", "replay"},
                         {"events", opt.events},
                         {"rho", opt.rho},
                         {"outputs", {"snapshots.csv"}}});

    const cpmm::ExactPool& fin = result.final_pool;
    std::cout << "replayed " << events.size() << " events into " << daily.size()
              << " daily snapshots\n"
              << "final reserves: x=" << fin.reserve_x << " y=" << fin.reserve_y
              << " lp=" << fin.lp_supply << '\n'
              << "wrote " << (dir / "snapshots.csv").string() << '\n';
    return 0;
}

int run_frontier(const FrontierOpts& opt) {
    const cpmm::FeeModel fees =
        make_fee_model(opt.variant, opt.mint_fee, opt.burn_fee);
    const cpmm::FrontierLimits limits =
        cpmm::frontier_limits(opt.x0, opt.y0, fees);

    std::cout << "limits: y_asymptote=" << cpmm::fmt_double(limits.y_asymptote)
              << " x_asymptote=" << cpmm::fmt_double(limits.x_asymptote) << '\n';
    for (double x1 : opt.at)
        std::cout << "at x1=" << cpmm::fmt_double(x1) << ": y1="
                  << cpmm::fmt_double(cpmm::frontier_y1(x1, opt.x0, opt.y0, fees))
                  << '\n';

    const fs::path dir(opt.out);
    fs::create_directories(dir);
    {
        std::ofstream out = open_out(dir / "frontier.csv");
        out << "x1,y1\n";
        const double pole = limits.x_asymptote;
        const double lo = pole * (1.0 + 1e-3);
        const double hi = 20.0 * std::max(opt.x0, pole);
        for (int i = 0; i < cpmm::kOverlaySamples; ++i) {
            const double t = double(i) / double(cpmm::kOverlaySamples - 1);
            const double x1 = lo * std::pow(hi / lo, t);
            out << cpmm::fmt_double(x1) << ','
                << cpmm::fmt_double(cpmm::frontier_y1(x1, opt.x0, opt.y0, fees))
                << '\n';
        }
    }
    write_manifest(dir, {{"command", "frontier"},
                         {"x0", opt.x0},
                         {"y0", opt.y0},
                         {"variant", cpmm::variant_name(opt.variant)},
                         {"mint_fee", opt.mint_fee},
                         {"burn_fee", opt.burn_fee},
                         {"y_asymptote", limits.y_asymptote},
                         {"x_asymptote", limits.x_asymptote},
                         {"outputs", {"frontier.csv"}}});
    std::cout << "wrote " << (dir / "frontier.csv").string() << '\n';
    return 0;
}

int run_backtest(const BacktestOpts& opt) {
    if (opt.events.empty() == opt.snapshots.empty())
        throw cpmm::DomainError(
            "backtest needs exactly one of --events or --snapshots");

    std::vector<cpmm::DailySnapshot> daily;
    if (!opt.events.empty()) {
        const cpmm::ReplayResult result =
            cpmm::replay(load_events(opt.events), opt.rho);
        for (const std::string& note : result.notes)
            std::cerr << "note: " << note << '\n';
        daily = cpmm::daily_snapshots(result.series);
    } else {
        std::ifstream in(opt.snapshots, std::ios::binary);
        if (!in) throw FileError("cannot open " + opt.snapshots);
        daily = cpmm::parse_snapshot_csv(in);
    }

    const std::vector<cpmm::FeeTier> tiers = make_tiers(opt.tiers);
    const std::vector<double> fee_steps =
        opt.fee_steps.empty() ? default_fee_steps(opt.variant) : opt.fee_steps;

    cpmm::PoolInput pool{opt.pair, opt.type, opt.variant, std::move(daily)};
    const cpmm::OutcomeTable table =
        cpmm::build_table({pool}, opt.periods, tiers, opt.warmup_days);

    std::vector<cpmm::HoldingOutcome> outcomes;
    for (int period : opt.periods) {
        const std::vector<cpmm::HoldingOutcome> part =
            cpmm::holding_outcomes(pool.daily, period, opt.warmup_days);
        outcomes.insert(outcomes.end(), part.begin(), part.end());
    }
    const std::vector<cpmm::OverlayPoint> overlay =
        cpmm::frontier_overlay(1.0, 1.0, opt.variant, fee_steps);

    const fs::path dir(opt.out);
    fs::create_directories(dir);
    {
        std::ofstream out = open_out(dir / "outcomes.csv");
        cpmm::write_outcomes_csv(out, outcomes);
    }
    {
        std::ofstream out = open_out(dir / "table.csv");
        cpmm::write_table_csv(out, table);
    }
    {
        std::ofstream out = open_out(dir / "frontier_overlay.csv");
        cpmm::write_overlay_csv(out, overlay);
    }

    ordered_json tier_json = ordered_json::array();
    for (const cpmm::FeeTier& t : tiers)
        tier_json.push_back({{"label", t.label}, {"share", t.combined_fee_share}});
    write_manifest(
        dir, {{"command", "backtest"},
              {"events", opt.events},
              {"snapshots", opt.snapshots},
              {"rho", opt.rho},
              {"pair", opt.pair},
              {"pool_type", cpmm::pool_type_name(opt.type)},
              {"variant", cpmm::variant_name(opt.variant)},
              {"periods", opt.periods},
              {"tiers", tier_json},
              {"fee_steps", fee_steps},
              {"warmup_days", opt.warmup_days},
              {"outputs", {"outcomes.csv", "table.csv", "frontier_overlay.csv"}}});

    std::size_t empty_cells = 0;
    for (const auto& row : table.rows)
        for (const auto& cell : row.cells)
            if (!cell) ++empty_cells;
    if (empty_cells != 0)
        std::cerr << "warning: " << empty_cells
                  << " cell(s) have no observations (insufficient history)\n";

    std::cout << "entries after warm-up: "
              << (table.rows.empty() ? 0 : table.rows.front().n) << '\n'
              << "wrote " << (dir / "outcomes.csv").string() << ", "
              << (dir / "table.csv").string() << ", "
              << (dir / "frontier_overlay.csv").string() << '\n';
    return 0;
}

int run_classify(const ClassifyOpts& opt) {
    const cpmm::FeeModel fees =
        make_fee_model(opt.variant, opt.mint_fee, opt.burn_fee);
    const cpmm::PositionEndpoints p{opt.x0, opt.y0, opt.x1, opt.y1};
    const cpmm::CaseLabel label = cpmm::classify_case(p);
    const double r = p.price_ratio_change();
    const cpmm::ProfitResult verdict = cpmm::is_profitable(p, fees);

    std::cout << "case: " << case_name(label) << '\n'
              << "price_ratio_change: " << cpmm::fmt_double(r) << '\n'
              << "divergence_loss: " << cpmm::fmt_double(cpmm::divergence_loss(r))
              << '\n'
              << "hold_value: " << cpmm::fmt_double(cpmm::hold_value(p)) << '\n'
              << "lp_value: " << cpmm::fmt_double(cpmm::lp_value(p)) << '\n'
              << "margin: " << cpmm::fmt_double(verdict.margin) << '\n'
              << "profitable: " << (verdict.profitable ? "yes" : "no") << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Constant-product pool replay and LP profitability toolkit"};
    app.require_subcommand(1);

    const std::map<std::string, cpmm::FeeVariant> variant_map{
        {"none", cpmm::FeeVariant::NoFees},
        {"mint", cpmm::FeeVariant::MintOnly},
        {"symmetric", cpmm::FeeVariant::SymmetricBurn},
        {"asymmetric", cpmm::FeeVariant::AsymmetricBurn}};
    const std::map<std::string, cpmm::PoolType> type_map{
        {"open", cpmm::PoolType::OpenMarket},
        {"stable", cpmm::PoolType::Stable}};

    ReplayOpts replay_opt;
    CLI::App* replay = app.add_subcommand(
        "replay", "Replay an event log into daily noon-UTC snapshots");
    replay->add_option("--events", replay_opt.events, "Event CSV path")
        ->required();
    replay->add_option("--rho", replay_opt.rho, "Trading fee in [0,1)");
    replay->add_option("--out", replay_opt.out, "Output directory");

    FrontierOpts frontier_opt;
    CLI::App* frontier = app.add_subcommand(
        "frontier", "Sample a breakeven frontier and report its limits");
    frontier->add_option("--x0", frontier_opt.x0, "Entry x amount");
    frontier->add_option("--y0", frontier_opt.y0, "Entry y amount");
    frontier
        ->add_option("--variant", frontier_opt.variant, "Network-fee variant")
        ->transform(CLI::CheckedTransformer(variant_map));
    frontier->add_option("--mint-fee", frontier_opt.mint_fee,
                         "Mint fee in x-token units");
    frontier->add_option("--burn-fee", frontier_opt.burn_fee,
                         "Burn fee in x-token units");
    frontier->add_option("--at", frontier_opt.at,
                         "Also print frontier y1 at these x1 values");
    frontier->add_option("--out", frontier_opt.out, "Output directory");

    BacktestOpts backtest_opt;
    CLI::App* backtest = app.add_subcommand(
        "backtest", "Holding-period profitability matrix from a pool history");
    CLI::Option* ev =
        backtest->add_option("--events", backtest_opt.events, "Event CSV path");
    backtest
        ->add_option("--snapshots", backtest_opt.snapshots,
                     "Daily snapshot CSV from a previous replay")
        ->excludes(ev);
    backtest->add_option("--rho", backtest_opt.rho, "Trading fee in [0,1)");
    backtest->add_option("--pair", backtest_opt.pair, "Pair label for the table");
    backtest
        ->add_option("--pool-type", backtest_opt.type, "open or stable")
        ->transform(CLI::CheckedTransformer(type_map));
    backtest
        ->add_option("--variant", backtest_opt.variant, "Network-fee variant")
        ->transform(CLI::CheckedTransformer(variant_map));
    backtest
        ->add_option("--periods", backtest_opt.periods,
                     "Holding periods in days, comma-separated")
        ->delimiter(',');
    backtest
        ->add_option("--tiers", backtest_opt.tiers,
                     "Fee tiers: small, medium, large, or a share; comma-separated")
        ->delimiter(',');
    backtest
        ->add_option("--fee-steps", backtest_opt.fee_steps,
                     "Overlay combined-fee percentages, comma-separated")
        ->delimiter(',');
    backtest->add_option("--warmup-days", backtest_opt.warmup_days,
                         "Days excluded after the first snapshot");
    backtest->add_option("--out", backtest_opt.out, "Output directory");

    ClassifyOpts classify_opt;
    CLI::App* classify = app.add_subcommand(
        "classify", "Classify one entry/exit pair and test profitability");
    classify->add_option("--x0", classify_opt.x0, "Entry x amount");
    classify->add_option("--y0", classify_opt.y0, "Entry y amount");
    classify->add_option("--x1", classify_opt.x1, "Exit x amount")->required();
    classify->add_option("--y1", classify_opt.y1, "Exit y amount")->required();
    classify
        ->add_option("--variant", classify_opt.variant, "Network-fee variant")
        ->transform(CLI::CheckedTransformer(variant_map));
    classify->add_option("--mint-fee", classify_opt.mint_fee,
                         "Mint fee in x-token units");
    classify->add_option("--burn-fee", classify_opt.burn_fee,
                         "Burn fee in x-token units");

    CLI11_PARSE(app, argc, argv);

    try {
        if (replay->parsed()) return run_replay(replay_opt);
        if (frontier->parsed()) return run_frontier(frontier_opt);
        if (backtest->parsed()) return run_backtest(backtest_opt);
        if (classify->parsed()) return run_classify(classify_opt);
    } catch (const FileError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const cpmm::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const cpmm::OrderError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const cpmm::ReplayError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
