#include "ldv/cli.hpp"

#include <filesystem>
#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "ldv/bench.hpp"
#include "ldv/svg.hpp"

namespace ldv {

namespace {

namespace fs = std::filesystem;

struct CommonFlags {
    std::string scenarioPath;
    std::string algo;
    std::string outDir = ".";
    std::optional<std::size_t> iters;
    std::optional<std::uint64_t> seed;
    std::optional<double> lambdaS, lambdaI, m, rhoFail, rF, eta, gamma, goalBias;
};

void addCommonFlags(CLI::App* cmd, CommonFlags& f, bool withAlgo) {
    cmd->add_option("scenario", f.scenarioPath, "scenario JSON file")->required();
    if (withAlgo) {
        cmd->add_option("--algo", f.algo, "planner variant")
            ->check(CLI::IsMember({"rrt-star", "ldv"}));
    }
    cmd->add_option("--iters", f.iters, "iteration budget per run");
    cmd->add_option("--seed", f.seed, "base random seed");
    cmd->add_option("--lambda-s", f.lambdaS, "fail-region sampling bias in [0,1]");
    cmd->add_option("--lambda-i", f.lambdaI, "most-important selection bias in [0,1]");
    cmd->add_option("--m", f.m, "importance exponent (>= 0)");
    cmd->add_option("--rho-fail", f.rhoFail, "minimum fail-node spacing");
    cmd->add_option("--r-f", f.rF, "importance ball radius");
    cmd->add_option("--eta", f.eta, "steer size");
    cmd->add_option("--gamma", f.gamma, "near-neighbor radius constant");
    cmd->add_option("--goal-bias", f.goalBias, "goal sampling bias in [0,1]");
    cmd->add_option("--out", f.outDir, "output directory")->capture_default_str();
}

/// Defaults < scenario params < command-line flags.
PlannerParams resolveParams(const Scenario& s, const CommonFlags& f) {
    PlannerParams p = s.defaults;
    if (!f.algo.empty()) p.mode = f.algo == "rrt-star" ? PlannerMode::RrtStar : PlannerMode::Ldv;
    if (f.iters) p.maxIter = *f.iters;
    if (f.seed) p.seed = *f.seed;
    if (f.lambdaS) p.sampler.lambdaS = *f.lambdaS;
    if (f.lambdaI) p.sampler.lambdaI = *f.lambdaI;
    if (f.m) p.sampler.importanceExponent = *f.m;
    if (f.goalBias) p.sampler.goalBias = *f.goalBias;
    if (f.rhoFail) p.rhoFail = *f.rhoFail;
    if (f.rF) p.ballRadius = *f.rF;
    if (f.eta) p.eta = *f.eta;
    if (f.gamma) p.gamma = *f.gamma;
    p.validate();
    return p;
}

std::string modeLabel(PlannerMode mode) {
    return mode == PlannerMode::RrtStar ? "rrt-star" : "ldv";
}

fs::path ensureOutDir(const std::string& dir) {
    fs::path out(dir);
    fs::create_directories(out);
    return out;
}

int runPlan(const CommonFlags& flags) {
    const Scenario s = loadScenario(flags.scenarioPath);
    const PlannerParams params = resolveParams(s, flags);
    const std::string label = modeLabel(params.mode);

    const PlanResult result = plan(s.world(), s.start, s.goal, params);

    std::vector<TrialRecord> records;
    records.reserve(result.trace.size());
    for (const TraceRow& row : result.trace) {
        records.push_back(TrialRecord{0, params.seed, label, row.iteration, row.bestCost,
                                      row.nodeCount, row.failCount, 0});
    }

    const fs::path outDir = ensureOutDir(flags.outDir);
    const std::string stem = s.name + "_" + label + "_seed" + std::to_string(params.seed);
    const fs::path csvPath = outDir / (stem + ".csv");
    emitCsv(records, csvPath);
    std::cout << "wrote " << csvPath.string() << "\n";

    if (s.dim == 2) {
        const fs::path svgPath = outDir / (stem + ".svg");
        emitSvg(result, s, svgPath);
        std::cout << "wrote " << svgPath.string() << "\n";
    }

    std::cout << "algorithm: " << label << "  iterations: " << params.maxIter
              << "  nodes: " << result.tree.size() << "  fail nodes: " << result.failSet.size()
              << "\n";
    if (result.bestCost) {
        std::cout << "best cost: " << *result.bestCost << "  first solution at iteration "
                  << *result.firstSolutionIter << "\n";
    } else {
        std::cout << "no solution within the iteration budget\n";
    }
    return 0;
}

int runBench(const CommonFlags& flags, std::optional<std::size_t> trialsFlag) {
    const Scenario s = loadScenario(flags.scenarioPath);
    const PlannerParams params = resolveParams(s, flags);

    std::vector<AlgorithmSpec> algorithms;
    if (!flags.algo.empty()) {
        algorithms.push_back(AlgorithmSpec{flags.algo, params});
    } else {
        PlannerParams base = params;
        base.mode = PlannerMode::RrtStar;
        algorithms.push_back(AlgorithmSpec{"rrt-star", base});
        base.mode = PlannerMode::Ldv;
        algorithms.push_back(AlgorithmSpec{"ldv", base});
    }

    const std::size_t trials = trialsFlag.value_or(s.trialsDefault.value_or(20));
    const ExperimentResult result = runExperiment(s, algorithms, trials, params.seed);

    const fs::path outDir = ensureOutDir(flags.outDir);
    const fs::path csvPath = outDir / (s.name + "_bench.csv");
    emitCsv(result.records, csvPath);

    std::cout << "scenario: " << s.name << "  trials: " << trials << "  iterations: "
              << params.maxIter << "  base seed: " << params.seed << "\n";
    std::cout << formatSummaryTable(result.summary);
    std::cout << "wrote " << csvPath.string() << "\n";
    return 0;
}

int runValidate(const std::string& path) {
    const Scenario s = loadScenario(path);
    std::cout << "ok: " << s.name << "  dim=" << s.dim << "  obstacles=" << s.obstacles.size()
              << "  passage_regions=" << s.passageRegions.size() << "\n";
    return 0;
}

}  // namespace

int cliMain(int argc, const char* const* argv) {
    CLI::App app{"RRT* / RRT*-LDV motion planning benchmark"};
    app.require_subcommand(1);

    CommonFlags planFlags;
    CLI::App* planCmd = app.add_subcommand("plan", "single planning run, emits CSV and SVG");
    addCommonFlags(planCmd, planFlags, true);

    CommonFlags benchFlags;
    std::optional<std::size_t> trials;
    CLI::App* benchCmd = app.add_subcommand("bench", "multi-trial experiment with summary");
    addCommonFlags(benchCmd, benchFlags, true);
    benchCmd->add_option("--trials", trials, "number of paired-seed trials per algorithm");

    std::string validatePath;
    CLI::App* validateCmd = app.add_subcommand("validate", "check a scenario file");
    validateCmd->add_option("scenario", validatePath, "scenario JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << app.help();
        return 1;
    }

    try {
        if (planCmd->parsed()) return runPlan(planFlags);
        if (benchCmd->parsed()) return runBench(benchFlags, trials);
        return runValidate(validatePath);
    } catch (const std::invalid_argument& e) {
        // Bad parameter values reaching the planner are usage errors.
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

int cliMain(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("ldv");
    for (const std::string& a : args) argv.push_back(a.c_str());
    return cliMain(static_cast<int>(argv.size()), argv.data());
}

}  // namespace ldv
