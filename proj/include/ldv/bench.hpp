#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ldv/planner.hpp"
#include "ldv/scenario.hpp"

namespace ldv {

/// One CSV row: the state of one trial after one iteration. elapsed_ns is
/// kept at zero so repeated runs serialize byte-identically; wall-clock
/// statistics are reported in the experiment summary instead.
struct TrialRecord {
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    std::string algorithm;
    std::size_t iteration = 0;
    std::optional<double> bestCost;
    std::size_t nNodes = 0;
    std::size_t nXfail = 0;
    long long elapsedNs = 0;
};

struct AlgorithmSpec {
    std::string label;
    PlannerParams params;
};

/// Per-trial digest kept alongside the raw records, mainly for summary
/// computation and post-hoc checks.
struct TrialOutcome {
    std::string algorithm;
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    std::optional<double> finalCost;
    std::optional<std::size_t> firstSolutionIter;
    bool passage = false;  ///< final best path traverses a declared passage region
    double wallMs = 0.0;
    std::optional<std::vector<Configuration>> path;
};

struct AlgorithmSummary {
    std::string label;
    std::size_t trials = 0;
    std::size_t solved = 0;
    double successRate = 0.0;  ///< fraction of trials whose final path hits a passage region
    std::optional<double> meanFinalCost;
    std::optional<double> stddevFinalCost;
    std::optional<double> meanFirstSolutionIter;
    double meanWallMs = 0.0;
};

struct ExperimentSummary {
    bool hasPassageRegions = false;
    std::vector<AlgorithmSummary> algorithms;
};

struct ExperimentResult {
    std::vector<TrialRecord> records;
    std::vector<TrialOutcome> outcomes;
    ExperimentSummary summary;
};

/// True iff any edge of the polyline touches the closed region. A
/// single-configuration path counts as a degenerate edge.
bool passageHit(std::span<const Configuration> path, const HyperRect& region);

/// Runs trials x algorithms plan() calls with paired seeds (trial k uses
/// baseSeed + k in every arm) and assembles records in (algorithm, trial,
/// iteration) order. Trials run in parallel up to LDV_THREADS workers;
/// output is independent of scheduling.
ExperimentResult runExperiment(const Scenario& s, std::span<const AlgorithmSpec> algorithms,
                               std::size_t trials, std::uint64_t baseSeed);

/// Writes records with the header
/// trial,seed,algorithm,iteration,best_cost,n_nodes,n_xfail,elapsed_ns.
/// Absent best cost becomes an empty field.
void emitCsv(std::span<const TrialRecord> records, const std::filesystem::path& path);

/// Aligned plain-text summary table.
std::string formatSummaryTable(const ExperimentSummary& summary);

}  // namespace ldv
