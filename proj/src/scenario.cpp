#include "ldv/scenario.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ldv {

namespace {

using nlohmann::json;

const json& require(const json& j, const char* key) {
    if (!j.contains(key)) throw ScenarioError(std::string("missing key: ") + key);
    return j.at(key);
}

Configuration asConfig(const json& j, const std::string& field, std::size_t dim) {
    if (!j.is_array()) throw ScenarioError(field + ": expected an array");
    Configuration out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number()) throw ScenarioError(field + ": expected numbers");
        out.push_back(v.get<double>());
    }
    if (dim != 0 && out.size() != dim) {
        throw ScenarioError(field + ": dimension mismatch (expected " + std::to_string(dim) +
                            " coordinates, got " + std::to_string(out.size()) + ")");
    }
    if (!allFinite(out)) throw ScenarioError(field + ": coordinates must be finite");
    return out;
}

HyperRect asRect(const json& j, const std::string& field, std::size_t dim) {
    HyperRect r;
    r.lo = asConfig(require(j, "lo"), field + ".lo", dim);
    r.hi = asConfig(require(j, "hi"), field + ".hi", dim);
    return r;
}

double numberParam(const json& v, const std::string& field) {
    if (!v.is_number()) throw ScenarioError(field + ": expected a number");
    return v.get<double>();
}

void applyParams(const json& p, Scenario& s) {
    for (const auto& [key, value] : p.items()) {
        const std::string field = "params." + key;
        if (key == "algo") {
            const std::string mode = value.is_string() ? value.get<std::string>() : "";
            if (mode == "rrt-star") {
                s.defaults.mode = PlannerMode::RrtStar;
            } else if (mode == "ldv") {
                s.defaults.mode = PlannerMode::Ldv;
            } else {
                throw ScenarioError(field + ": expected \"rrt-star\" or \"ldv\"");
            }
        } else if (key == "iters") {
            const double v = numberParam(value, field);
            if (v < 1) throw ScenarioError(field + ": must be a positive integer");
            s.defaults.maxIter = static_cast<std::size_t>(v);
        } else if (key == "trials") {
            const double v = numberParam(value, field);
            if (v < 1) throw ScenarioError(field + ": must be a positive integer");
            s.trialsDefault = static_cast<std::size_t>(v);
        } else if (key == "seed") {
            s.defaults.seed = static_cast<std::uint64_t>(numberParam(value, field));
        } else if (key == "eta") {
            s.defaults.eta = numberParam(value, field);
        } else if (key == "gamma") {
            s.defaults.gamma = numberParam(value, field);
        } else if (key == "eps_c") {
            s.defaults.epsC = numberParam(value, field);
        } else if (key == "lambda_s") {
            s.defaults.sampler.lambdaS = numberParam(value, field);
        } else if (key == "lambda_i") {
            s.defaults.sampler.lambdaI = numberParam(value, field);
        } else if (key == "goal_bias") {
            s.defaults.sampler.goalBias = numberParam(value, field);
        } else if (key == "m") {
            s.defaults.sampler.importanceExponent = numberParam(value, field);
        } else if (key == "rho_fail") {
            s.defaults.rhoFail = numberParam(value, field);
        } else if (key == "r_f") {
            s.defaults.ballRadius = numberParam(value, field);
        } else {
            throw ScenarioError(field + ": unknown parameter");
        }
    }
}

}  // namespace

Scenario parseScenario(const std::string& jsonText) {
    json doc;
    try {
        doc = json::parse(jsonText);
    } catch (const json::exception& e) {
        throw ScenarioError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ScenarioError("scenario must be a JSON object");

    Scenario s;
    const json& nameJ = require(doc, "name");
    if (!nameJ.is_string()) throw ScenarioError("name: expected a string");
    s.name = nameJ.get<std::string>();

    const json& dimJ = require(doc, "dim");
    if (!dimJ.is_number_integer() || dimJ.get<int>() < 1) {
        throw ScenarioError("dim: expected a positive integer");
    }
    s.dim = dimJ.get<std::size_t>();

    const json& boundsJ = require(doc, "bounds");
    s.bounds = asRect(boundsJ, "bounds", s.dim);
    for (std::size_t k = 0; k < s.dim; ++k) {
        if (!(s.bounds.lo[k] < s.bounds.hi[k])) {
            throw ScenarioError("bounds: degenerate on axis " + std::to_string(k));
        }
    }

    const json& obstaclesJ = require(doc, "obstacles");
    if (!obstaclesJ.is_array()) throw ScenarioError("obstacles: expected an array");
    for (std::size_t i = 0; i < obstaclesJ.size(); ++i) {
        const std::string field = "obstacles[" + std::to_string(i) + "]";
        HyperRect o = asRect(obstaclesJ.at(i), field, s.dim);
        for (std::size_t k = 0; k < s.dim; ++k) {
            if (!(o.lo[k] < o.hi[k])) {
                throw ScenarioError(field + ": degenerate obstacle on axis " + std::to_string(k));
            }
            if (o.lo[k] > s.bounds.hi[k] || o.hi[k] < s.bounds.lo[k]) {
                throw ScenarioError(field + ": obstacle outside bounds");
            }
        }
        s.obstacles.push_back(std::move(o));
    }

    s.start = asConfig(require(doc, "start"), "start", s.dim);

    const json& goalJ = require(doc, "goal");
    s.goal.center = asConfig(require(goalJ, "center"), "goal.center", s.dim);
    const json& radiusJ = require(goalJ, "radius");
    s.goal.radius = numberParam(radiusJ, "goal.radius");
    if (!(s.goal.radius > 0.0)) throw ScenarioError("goal.radius: must be positive");

    if (doc.contains("passage_regions")) {
        const json& regionsJ = doc.at("passage_regions");
        if (!regionsJ.is_array()) throw ScenarioError("passage_regions: expected an array");
        for (std::size_t i = 0; i < regionsJ.size(); ++i) {
            const std::string field = "passage_regions[" + std::to_string(i) + "]";
            Scenario::PassageRegion r;
            const json& rj = regionsJ.at(i);
            const json& rn = require(rj, "name");
            if (!rn.is_string()) throw ScenarioError(field + ".name: expected a string");
            r.name = rn.get<std::string>();
            r.box = asRect(rj, field, s.dim);
            for (std::size_t k = 0; k < s.dim; ++k) {
                if (!(r.box.lo[k] < r.box.hi[k])) {
                    throw ScenarioError(field + ": degenerate region on axis " + std::to_string(k));
                }
                if (r.box.lo[k] < s.bounds.lo[k] || r.box.hi[k] > s.bounds.hi[k]) {
                    throw ScenarioError(field + ": passage region outside bounds");
                }
            }
            s.passageRegions.push_back(std::move(r));
        }
    }

    if (doc.contains("params")) {
        const json& p = doc.at("params");
        if (!p.is_object()) throw ScenarioError("params: expected an object");
        applyParams(p, s);
        try {
            s.defaults.validate();
        } catch (const std::invalid_argument& e) {
            throw ScenarioError(std::string("params: ") + e.what());
        }
    }

    // Planner-level checks against the assembled world.
    World w;
    try {
        w = s.world();
    } catch (const std::invalid_argument& e) {
        throw ScenarioError(e.what());
    }
    if (!pointFree(s.start, w)) throw ScenarioError("start in collision or out of bounds");
    if (!pointFree(s.goal.center, w)) throw ScenarioError("goal center in collision or out of bounds");

    return s;
}

Scenario loadScenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ScenarioError("cannot open scenario file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parseScenario(buf.str());
}

}  // namespace ldv
