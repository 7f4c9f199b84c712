#include "ldv/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

namespace ldv {

namespace {

std::size_t workerCount(std::size_t jobs) {
    std::size_t n = std::thread::hardware_concurrency();
    if (const char* env = std::getenv("LDV_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) n = static_cast<std::size_t>(v);
    }
    if (n == 0) n = 1;
    return std::min(n, std::max<std::size_t>(jobs, 1));
}

struct JobOutput {
    std::vector<TrialRecord> records;
    TrialOutcome outcome;
};

std::string formatCost(const std::optional<double>& c) {
    if (!c) return {};
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", *c);
    return buf;
}

}  // namespace

bool passageHit(std::span<const Configuration> path, const HyperRect& region) {
    if (path.empty()) throw std::invalid_argument("passageHit: empty path");
    if (path.size() == 1) return segmentIntersectsBox(path[0], path[0], region);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        if (segmentIntersectsBox(path[i], path[i + 1], region)) return true;
    }
    return false;
}

ExperimentResult runExperiment(const Scenario& s, std::span<const AlgorithmSpec> algorithms,
                               std::size_t trials, std::uint64_t baseSeed) {
    if (trials == 0) throw std::invalid_argument("runExperiment: trials must be >= 1");
    if (algorithms.empty()) throw std::invalid_argument("runExperiment: no algorithms");

    const World world = s.world();
    const std::size_t jobs = algorithms.size() * trials;
    std::vector<JobOutput> outputs(jobs);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failureMutex;

    auto runJob = [&](std::size_t job) {
        const std::size_t arm = job / trials;
        const std::size_t trial = job % trials;
        PlannerParams params = algorithms[arm].params;
        params.seed = baseSeed + trial;

        const auto t0 = std::chrono::steady_clock::now();
        const PlanResult result = plan(world, s.start, s.goal, params);
        const auto t1 = std::chrono::steady_clock::now();

        JobOutput& out = outputs[job];
        out.records.reserve(result.trace.size());
        std::optional<double> prevBest;
        for (const TraceRow& row : result.trace) {
            if (row.bestCost) {
                if (prevBest && *row.bestCost > *prevBest + 1e-9) {
                    throw std::logic_error("best-cost trace increased within a trial");
                }
                prevBest = row.bestCost;
            }
            out.records.push_back(TrialRecord{trial, params.seed, algorithms[arm].label,
                                              row.iteration, row.bestCost, row.nodeCount,
                                              row.failCount, 0});
        }

        TrialOutcome& oc = out.outcome;
        oc.algorithm = algorithms[arm].label;
        oc.trial = trial;
        oc.seed = params.seed;
        oc.finalCost = result.bestCost;
        oc.firstSolutionIter = result.firstSolutionIter;
        oc.wallMs = std::chrono::duration<double, std::milli>(t1 - t0).count();
        oc.path = result.bestPath;
        if (result.bestPath) {
            for (const auto& region : s.passageRegions) {
                if (passageHit(*result.bestPath, region.box)) {
                    oc.passage = true;
                    break;
                }
            }
        }
    };

    auto workerLoop = [&] {
        while (true) {
            const std::size_t job = next.fetch_add(1);
            if (job >= jobs) return;
            try {
                runJob(job);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failureMutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };

    const std::size_t nWorkers = workerCount(jobs);
    if (nWorkers <= 1) {
        workerLoop();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nWorkers);
        for (std::size_t i = 0; i < nWorkers; ++i) pool.emplace_back(workerLoop);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    ExperimentResult result;
    result.summary.hasPassageRegions = !s.passageRegions.empty();
    for (std::size_t arm = 0; arm < algorithms.size(); ++arm) {
        AlgorithmSummary sum;
        sum.label = algorithms[arm].label;
        sum.trials = trials;
        double costSum = 0.0, costSq = 0.0, firstSum = 0.0, wallSum = 0.0;
        std::size_t hits = 0;
        for (std::size_t k = 0; k < trials; ++k) {
            JobOutput& out = outputs[arm * trials + k];
            result.records.insert(result.records.end(), out.records.begin(), out.records.end());
            const TrialOutcome& oc = out.outcome;
            if (oc.finalCost) {
                ++sum.solved;
                costSum += *oc.finalCost;
                costSq += *oc.finalCost * *oc.finalCost;
                firstSum += static_cast<double>(*oc.firstSolutionIter);
            }
            if (oc.passage) ++hits;
            wallSum += oc.wallMs;
            result.outcomes.push_back(std::move(out.outcome));
        }
        if (sum.solved > 0) {
            const auto n = static_cast<double>(sum.solved);
            sum.meanFinalCost = costSum / n;
            sum.meanFirstSolutionIter = firstSum / n;
            const double var = sum.solved > 1
                                   ? std::max(0.0, (costSq - costSum * costSum / n) / (n - 1.0))
                                   : 0.0;
            sum.stddevFinalCost = std::sqrt(var);
        }
        sum.successRate = static_cast<double>(hits) / static_cast<double>(trials);
        sum.meanWallMs = wallSum / static_cast<double>(trials);
        result.summary.algorithms.push_back(std::move(sum));
    }
    return result;
}

void emitCsv(std::span<const TrialRecord> records, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("emitCsv: cannot open " + path.string());
    out << "trial,seed,algorithm,iteration,best_cost,n_nodes,n_xfail,elapsed_ns\n";
    for (const TrialRecord& r : records) {
        out << r.trial << ',' << r.seed << ',' << r.algorithm << ',' << r.iteration << ','
            << formatCost(r.bestCost) << ',' << r.nNodes << ',' << r.nXfail << ',' << r.elapsedNs
            << '\n';
    }
    out.flush();
    if (!out) throw std::runtime_error("emitCsv: write failed for " + path.string());
}

std::string formatSummaryTable(const ExperimentSummary& summary) {
    std::ostringstream out;
    char line[256];
    std::snprintf(line, sizeof(line), "%-14s %7s %7s %9s %12s %11s %12s %13s\n", "algorithm",
                  "trials", "solved", "success", "mean_cost", "std_cost", "first_iter",
                  "mean_wall_ms");
    out << line;
    for (const AlgorithmSummary& a : summary.algorithms) {
        char success[16], cost[24], stddev[24], firstIter[24];
        if (summary.hasPassageRegions) {
            std::snprintf(success, sizeof(success), "%.1f%%", 100.0 * a.successRate);
        } else {
            std::snprintf(success, sizeof(success), "-");
        }
        if (a.meanFinalCost) {
            std::snprintf(cost, sizeof(cost), "%.4f", *a.meanFinalCost);
            std::snprintf(stddev, sizeof(stddev), "%.4f", *a.stddevFinalCost);
            std::snprintf(firstIter, sizeof(firstIter), "%.1f", *a.meanFirstSolutionIter);
        } else {
            std::snprintf(cost, sizeof(cost), "-");
            std::snprintf(stddev, sizeof(stddev), "-");
            std::snprintf(firstIter, sizeof(firstIter), "-");
        }
        std::snprintf(line, sizeof(line), "%-14s %7zu %7zu %9s %12s %11s %12s %13.1f\n",
                      a.label.c_str(), a.trials, a.solved, success, cost, stddev, firstIter,
                      a.meanWallMs);
        out << line;
    }
    return out.str();
}

}  // namespace ldv
