// Acceptance suite: one check per release criterion, each printing a single
// [PASS]/[FAIL] line. Run with no arguments for all criteria or with a
// selector such as `acceptance C3`. The process exits with the number of
// failed criteria.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ldv/bench.hpp"
#include "ldv/cli.hpp"
#include "ldv/planner.hpp"
#include "oracles.hpp"

using namespace ldv;
namespace fs = std::filesystem;

namespace {

fs::path scenarioDir() { return fs::path(LDV_SCENARIO_DIR); }

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string fmt(const char* format, ...) {
    char buf[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof(buf), format, args);
    va_end(args);
    return buf;
}

// ---- C1: analytic geometry vs marching/dense-sampling oracles ----

bool criterion1(std::string& detail) {
    std::mt19937_64 g(10001);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    double worstRay = 0.0;
    int segmentDisagreements = 0;

    for (int wi = 0; wi < 10; ++wi) {
        const World w = oracles::randomWorld(g, 2 + wi % 2, 1 + wi % 5);
        for (int ri = 0; ri < 100; ++ri) {
            const Configuration o = oracles::randomFreeConfig(g, w);
            const Configuration u = oracles::randomUnitDir(g, w.dim);
            const RayHit hit = rayCastDistance(o, u, w);
            const oracles::MarchHit march = oracles::marchRay(o, u, w);
            worstRay = std::max(worstRay, std::abs(hit.distance - march.distance));
        }
        for (int si = 0; si < 100; ++si) {
            const Configuration a = oracles::randomFreeConfig(g, w);
            Configuration b(w.dim);
            for (std::size_t k = 0; k < w.dim; ++k) {
                b[k] = w.bounds.lo[k] + U(g) * (w.bounds.hi[k] - w.bounds.lo[k]);
            }
            if (segmentFree(a, b, w) != oracles::segmentFreeDense(a, b, w)) {
                ++segmentDisagreements;
            }
        }
    }

    detail = fmt("10 worlds x 100 rays, max ray deviation %.2e (< 2e-3); "
                 "%d/1000 segment disagreements", worstRay, segmentDisagreements);
    return worstRay < 2e-3 && segmentDisagreements == 0;
}

// ---- C2: nearest / nearNeighbors vs linear scans ----

bool criterion2(std::string& detail) {
    std::mt19937_64 g(20002);
    std::uniform_real_distribution<double> U(0.0, 10.0);
    int mismatches = 0;
    std::size_t totalNodes = 0;

    for (int ti = 0; ti < 50; ++ti) {
        const std::size_t dim = 2 + ti % 3;
        const std::size_t n = 100 + (ti * 100) % 4901;  // up to 5000
        Configuration root(dim);
        for (auto& x : root) x = U(g);
        Tree t(root, 30.0);
        std::uniform_int_distribution<std::size_t> pick;
        while (t.size() < n) {
            Configuration q(dim);
            for (auto& x : q) x = U(g);
            t.insert(q, std::uniform_int_distribution<std::size_t>(0, t.size() - 1)(g));
        }
        totalNodes += n;

        for (int qi = 0; qi < 10; ++qi) {
            Configuration q(dim);
            for (auto& x : q) x = U(g);
            if (t.nearest(q) != oracles::linearNearest(t, q)) ++mismatches;
            const double r = U(g) * 0.3;
            if (t.nearNeighbors(q, r) != oracles::linearNearNeighbors(t, q, r)) ++mismatches;
        }
    }

    detail = fmt("50 trees (%zu nodes total), %d query mismatches", totalNodes, mismatches);
    return mismatches == 0;
}

// ---- C3: per-iteration invariant fuzz on random worlds ----

bool criterion3(std::string& detail) {
    std::mt19937_64 g(30003);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    double worstCost = 0.0, worstVis = 0.0, worstImp = 0.0;
    bool structureOk = true, failNodesOk = true, spacingOk = true;

    for (int wi = 0; wi < 20; ++wi) {
        const World w = oracles::randomWorld(g, 2 + wi % 2, 1 + wi % 5);
        const Configuration start = oracles::randomFreeConfig(g, w);
        Configuration goalCenter = oracles::randomFreeConfig(g, w);
        while (distance(goalCenter, start) < 1.0) goalCenter = oracles::randomFreeConfig(g, w);

        PlannerParams p;
        p.maxIter = 200;
        p.seed = 3000 + static_cast<std::uint64_t>(wi);
        Planner planner(w, start, GoalRegion{goalCenter, 0.5}, p);

        while (!planner.finished()) {
            planner.step();
            const Tree& t = planner.tree();
            worstCost = std::max(worstCost, oracles::maxCostRecursionError(t));
            worstVis = std::max(worstVis, oracles::maxVisRecomputeError(t, w));
            worstImp = std::max(worstImp,
                                oracles::maxImportanceError(planner.failSet(), t,
                                                            planner.samplerParams()));
            structureOk = structureOk && oracles::isAcyclicTree(t);

            const FailSet& fs = planner.failSet();
            spacingOk = spacingOk && oracles::minPairwiseSpacing(fs) >= fs.minSpacing() - 1e-12;
            for (const FailNode& f : fs.items()) {
                failNodesOk = failNodesOk && pointFree(f.config, w) &&
                              obstacleDistance(f.config, w) <= p.eta + 1e-9;
            }
        }
    }

    detail = fmt("20 worlds x 200 iters; max cost err %.1e, vis err %.1e, importance err %.1e, "
                 "structure %s, fail nodes %s, spacing %s",
                 worstCost, worstVis, worstImp, structureOk ? "ok" : "BROKEN",
                 failNodesOk ? "ok" : "BROKEN", spacingOk ? "ok" : "BROKEN");
    return worstCost < 1e-9 && worstVis < 1e-9 && worstImp < 1e-9 && structureOk && failNodesOk &&
           spacingOk;
}

// ---- C4: rrt-star and ldv(lambda_s = 0) are the same process ----

bool criterion4(std::string& detail) {
    const Scenario s = loadScenario(scenarioDir() / "passage2d.json");
    const World w = s.world();

    PlannerParams a = s.defaults;
    a.maxIter = 1500;
    a.seed = 424242;
    a.mode = PlannerMode::Ldv;
    a.sampler.lambdaS = 0.0;

    PlannerParams b = a;
    b.mode = PlannerMode::RrtStar;
    b.sampler.lambdaS = 0.9;  // must be neutralized by the mode

    const PlanResult ra = plan(w, s.start, s.goal, a);
    const PlanResult rb = plan(w, s.start, s.goal, b);

    bool equal = ra.tree.size() == rb.tree.size();
    for (NodeId id = 0; equal && id < ra.tree.size(); ++id) {
        equal = ra.tree.node(id).config == rb.tree.node(id).config &&
                ra.tree.node(id).parent == rb.tree.node(id).parent &&
                ra.tree.node(id).cost == rb.tree.node(id).cost;
    }
    detail = fmt("1500 iterations, %zu vs %zu nodes, node-for-node %s", ra.tree.size(),
                 rb.tree.size(), equal ? "identical" : "DIVERGED");
    return equal;
}

// ---- C5: repeated bench invocations emit byte-identical CSVs ----

bool criterion5(std::string& detail) {
    const fs::path base = fs::temp_directory_path() / "ldv_acceptance_c5";
    fs::remove_all(base);
    const fs::path out1 = base / "run1";
    const fs::path out2 = base / "run2";

    const std::vector<std::string> common{"bench",
                                          (scenarioDir() / "passage2d.json").string(),
                                          "--iters", "300", "--trials", "3", "--seed", "11"};
    std::vector<std::string> run1 = common;
    run1.insert(run1.end(), {"--out", out1.string()});
    std::vector<std::string> run2 = common;
    run2.insert(run2.end(), {"--out", out2.string()});

    if (cliMain(run1) != 0 || cliMain(run2) != 0) {
        detail = "bench invocation failed";
        return false;
    }
    const std::string csv1 = slurp(out1 / "passage2d_bench.csv");
    const std::string csv2 = slurp(out2 / "passage2d_bench.csv");
    detail = fmt("two bench runs, %zu bytes each, %s", csv1.size(),
                 csv1 == csv2 ? "byte-identical" : "DIFFER");
    return !csv1.empty() && csv1 == csv2;
}

// ---- C6: best-cost traces never increase ----

bool criterion6(std::string& detail) {
    const Scenario s = loadScenario(scenarioDir() / "passage2d.json");
    PlannerParams base = s.defaults;
    base.maxIter = 800;

    std::vector<AlgorithmSpec> algorithms;
    base.mode = PlannerMode::RrtStar;
    algorithms.push_back({"rrt-star", base});
    base.mode = PlannerMode::Ldv;
    algorithms.push_back({"ldv", base});

    const ExperimentResult r = runExperiment(s, algorithms, 10, 600);

    int violations = 0;
    std::optional<double> prev;
    std::string prevKey;
    for (const TrialRecord& row : r.records) {
        const std::string key = row.algorithm + "#" + std::to_string(row.trial);
        if (key != prevKey) {
            prev.reset();
            prevKey = key;
        }
        if (row.bestCost) {
            if (prev && *row.bestCost > *prev + 1e-12) ++violations;
            prev = row.bestCost;
        } else if (prev) {
            ++violations;  // a defined best cost must never disappear
        }
    }
    detail = fmt("20 trials x 800 iterations, %d monotonicity violations", violations);
    return violations == 0;
}

// ---- C7: narrow-passage discovery and cost on passage2d ----

bool criterion7(std::string& detail) {
    const Scenario s = loadScenario(scenarioDir() / "passage2d.json");
    PlannerParams base = s.defaults;
    base.maxIter = 1500;
    base.sampler.goalBias = 0.05;

    PlannerParams rrt = base;
    rrt.mode = PlannerMode::RrtStar;
    PlannerParams ldvP = base;
    ldvP.mode = PlannerMode::Ldv;
    ldvP.sampler.lambdaS = 0.9;
    ldvP.sampler.lambdaI = 0.5;

    const std::vector<AlgorithmSpec> algorithms{{"rrt-star", rrt}, {"ldv", ldvP}};
    const ExperimentResult r = runExperiment(s, algorithms, 40, 90000);

    const AlgorithmSummary& sr = r.summary.algorithms[0];
    const AlgorithmSummary& sl = r.summary.algorithms[1];
    const bool solvable = sr.meanFinalCost.has_value() && sl.meanFinalCost.has_value();
    const double gap = sl.successRate - sr.successRate;
    const bool pass = solvable && gap >= 0.15 && *sl.meanFinalCost < *sr.meanFinalCost;

    detail = fmt("40 paired seeds: success ldv %.0f%% vs rrt-star %.0f%% (gap %.0f pts, need >= 15); "
                 "mean cost %.3f vs %.3f (solved %zu/%zu vs %zu/%zu)",
                 100.0 * sl.successRate, 100.0 * sr.successRate, 100.0 * gap,
                 sl.meanFinalCost.value_or(-1.0), sr.meanFinalCost.value_or(-1.0), sl.solved,
                 sl.trials, sr.solved, sr.trials);
    return pass;
}

// ---- C8: mean final cost is non-increasing in lambda_s ----

bool criterion8(std::string& detail) {
    const Scenario s = loadScenario(scenarioDir() / "passage2d.json");
    PlannerParams base = s.defaults;
    base.maxIter = 1500;
    base.mode = PlannerMode::Ldv;
    base.sampler.lambdaI = 0.0;

    std::vector<AlgorithmSpec> algorithms;
    for (double lambdaS : {0.0, 0.5, 0.9}) {
        PlannerParams p = base;
        p.sampler.lambdaS = lambdaS;
        algorithms.push_back({fmt("ldv-ls%.1f", lambdaS), p});
    }
    const ExperimentResult r = runExperiment(s, algorithms, 40, 80000);

    double means[3];
    for (int i = 0; i < 3; ++i) {
        if (!r.summary.algorithms[i].meanFinalCost) {
            detail = fmt("arm %s has no solved trials", r.summary.algorithms[i].label.c_str());
            return false;
        }
        means[i] = *r.summary.algorithms[i].meanFinalCost;
    }

    const double tolerance = 0.01 * means[0];
    const double inversion1 = std::max(0.0, means[1] - means[0]);
    const double inversion2 = std::max(0.0, means[2] - means[1]);
    const int inversions = (inversion1 > 0.0 ? 1 : 0) + (inversion2 > 0.0 ? 1 : 0);
    const bool pass = inversions <= 1 && std::max(inversion1, inversion2) <= tolerance;

    detail = fmt("mean cost by lambda_s: 0.0 -> %.3f, 0.5 -> %.3f, 0.9 -> %.3f "
                 "(%d adjacent inversions, worst %.4f, allowed %.4f)",
                 means[0], means[1], means[2], inversions, std::max(inversion1, inversion2),
                 tolerance);
    return pass;
}

// ---- C9: 5-D slot world, equal budget ----

bool criterion9(std::string& detail) {
    const Scenario s = loadScenario(scenarioDir() / "box5d.json");
    PlannerParams base = s.defaults;

    PlannerParams rrt = base;
    rrt.mode = PlannerMode::RrtStar;
    PlannerParams ldvP = base;
    ldvP.mode = PlannerMode::Ldv;
    ldvP.sampler.lambdaS = 0.9;
    ldvP.sampler.lambdaI = 0.5;

    const std::vector<AlgorithmSpec> algorithms{{"rrt-star", rrt}, {"ldv", ldvP}};
    const ExperimentResult r = runExperiment(s, algorithms, 20, 70000);

    const AlgorithmSummary& sr = r.summary.algorithms[0];
    const AlgorithmSummary& sl = r.summary.algorithms[1];
    if (!sr.meanFinalCost || !sl.meanFinalCost) {
        detail = fmt("unsolved arms: rrt-star %zu/%zu, ldv %zu/%zu", sr.solved, sr.trials,
                     sl.solved, sl.trials);
        return false;
    }
    const bool pass = *sl.meanFinalCost <= *sr.meanFinalCost;
    detail = fmt("20 paired seeds x %zu iters: mean cost ldv %.4f vs rrt-star %.4f "
                 "(solved %zu/%zu vs %zu/%zu)",
                 base.maxIter, *sl.meanFinalCost, *sr.meanFinalCost, sl.solved, sl.trials,
                 sr.solved, sr.trials);
    return pass;
}

// ---- C10: obstacle-free sanity bound ----

bool criterion10(std::string& detail) {
    const Scenario s = loadScenario(scenarioDir() / "open2d.json");
    const World w = s.world();
    const double bound = 1.05 * (distance(s.start, s.goal.center) - s.goal.radius);

    int okRrt = 0, okLdv = 0;
    for (int k = 0; k < 20; ++k) {
        PlannerParams p = s.defaults;
        p.maxIter = 2000;
        p.seed = 50000 + static_cast<std::uint64_t>(k);

        p.mode = PlannerMode::RrtStar;
        const PlanResult a = plan(w, s.start, s.goal, p);
        if (a.bestCost && *a.bestCost <= bound) ++okRrt;

        p.mode = PlannerMode::Ldv;
        const PlanResult b = plan(w, s.start, s.goal, p);
        if (b.bestCost && *b.bestCost <= bound) ++okLdv;
    }

    detail = fmt("bound %.4f within 2000 iters: rrt-star %d/20, ldv %d/20 (need >= 19)", bound,
                 okRrt, okLdv);
    return okRrt >= 19 && okLdv >= 19;
}

struct Criterion {
    int id;
    const char* name;
    std::function<bool(std::string&)> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria{
        {1, "geometry oracle equivalence", criterion1},
        {2, "tree query oracle equivalence", criterion2},
        {3, "planner invariant fuzz", criterion3},
        {4, "mode equivalence (ldv lambda_s=0 vs rrt-star)", criterion4},
        {5, "bench determinism (byte-identical CSVs)", criterion5},
        {6, "best-cost monotonicity", criterion6},
        {7, "narrow-passage success and cost vs rrt-star", criterion7},
        {8, "lambda_s sweep cost ordering", criterion8},
        {9, "5-D slot world cost comparison", criterion9},
        {10, "obstacle-free convergence bound", criterion10},
    };

    std::string selector;
    if (argc > 1) selector = argv[1];

    int failures = 0;
    int ran = 0;
    for (const Criterion& c : criteria) {
        if (!selector.empty() && selector != "C" + std::to_string(c.id) &&
            selector != std::to_string(c.id)) {
            continue;
        }
        ++ran;
        std::string detail;
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%s] C%d %s — %s [%.1fs]\n", ok ? "PASS" : "FAIL", c.id, c.name,
                    detail.c_str(), secs);
        std::fflush(stdout);
        if (!ok) ++failures;
    }

    if (ran == 0) {
        std::fprintf(stderr, "unknown criterion selector '%s'\n", selector.c_str());
        return 64;
    }
    return failures;
}
