#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace ldv {

/// A point in the d-dimensional configuration space, in workspace units.
using Configuration = std::vector<double>;

inline double squaredDistance(const Configuration& a, const Configuration& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("configuration dimension mismatch");
    }
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double d = a[k] - b[k];
        s += d * d;
    }
    return s;
}

inline double distance(const Configuration& a, const Configuration& b) {
    return std::sqrt(squaredDistance(a, b));
}

inline double norm(const Configuration& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

/// Unit vector pointing from `from` to `to`. The endpoints must not coincide.
inline Configuration unitDirection(const Configuration& from, const Configuration& to) {
    const double len = distance(from, to);
    if (len == 0.0) {
        throw std::invalid_argument("unitDirection: coincident endpoints");
    }
    Configuration u(from.size());
    for (std::size_t k = 0; k < from.size(); ++k) u[k] = (to[k] - from[k]) / len;
    return u;
}

inline bool allFinite(const Configuration& q) {
    for (double x : q) {
        if (!std::isfinite(x)) return false;
    }
    return true;
}

}  // namespace ldv
