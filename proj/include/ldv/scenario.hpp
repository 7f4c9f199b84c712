#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ldv/geometry.hpp"
#include "ldv/planner.hpp"

namespace ldv {

class ScenarioError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Declarative problem description loaded from a JSON file. Geometric
/// invariants (free start/goal, non-degenerate boxes, regions inside
/// bounds) are all checked at load time.
struct Scenario {
    std::string name;
    std::size_t dim = 0;
    HyperRect bounds;
    std::vector<HyperRect> obstacles;
    Configuration start;
    GoalRegion goal;

    struct PassageRegion {
        std::string name;
        HyperRect box;
    };
    std::vector<PassageRegion> passageRegions;

    PlannerParams defaults;               ///< built-in defaults + scenario overrides
    std::optional<std::size_t> trialsDefault;

    World world() const { return World(bounds, obstacles); }
};

/// Parses and validates a scenario document. Throws ScenarioError naming
/// the offending field.
Scenario parseScenario(const std::string& jsonText);

Scenario loadScenario(const std::filesystem::path& path);

}  // namespace ldv
