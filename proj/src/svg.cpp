#include "ldv/svg.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ldv {

namespace {

struct Canvas {
    double loX, loY, spanX, spanY, width, height;

    double x(double wx) const { return (wx - loX) / spanX * width; }
    // World y grows upward, SVG y grows downward.
    double y(double wy) const { return height - (wy - loY) / spanY * height; }
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

void rect(std::ostringstream& out, const Canvas& c, const HyperRect& r, const char* attrs) {
    out << "  <rect x=\"" << num(c.x(r.lo[0])) << "\" y=\"" << num(c.y(r.hi[1])) << "\" width=\""
        << num((r.hi[0] - r.lo[0]) / c.spanX * c.width) << "\" height=\""
        << num((r.hi[1] - r.lo[1]) / c.spanY * c.height) << "\" " << attrs << "/>\n";
}

}  // namespace

void emitSvg(const PlanResult& result, const Scenario& s, const std::filesystem::path& path) {
    if (s.dim != 2) {
        throw std::invalid_argument("emitSvg: only 2-D scenarios can be rendered (dim = " +
                                    std::to_string(s.dim) + ")");
    }

    Canvas c;
    c.loX = s.bounds.lo[0];
    c.loY = s.bounds.lo[1];
    c.spanX = s.bounds.hi[0] - s.bounds.lo[0];
    c.spanY = s.bounds.hi[1] - s.bounds.lo[1];
    c.width = 800.0;
    c.height = c.width * c.spanY / c.spanX;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << num(c.width) << " "
        << num(c.height) << "\" width=\"" << num(c.width) << "\" height=\"" << num(c.height)
        << "\">\n";
    out << "  <rect x=\"0\" y=\"0\" width=\"" << num(c.width) << "\" height=\"" << num(c.height)
        << "\" fill=\"white\"/>\n";

    for (const HyperRect& o : s.obstacles) {
        rect(out, c, o, "class=\"obstacle\" fill=\"#4f4f4f\"");
    }
    for (const auto& region : s.passageRegions) {
        rect(out, c, region.box, "class=\"passage\" fill=\"none\" stroke=\"#2ca02c\" "
                                 "stroke-width=\"1\" stroke-dasharray=\"4 3\"");
    }

    const Tree& tree = result.tree;
    for (NodeId id = 1; id < tree.size(); ++id) {
        const Node& n = tree.node(id);
        const Configuration& p = tree.node(*n.parent).config;
        out << "  <line class=\"edge\" x1=\"" << num(c.x(p[0])) << "\" y1=\"" << num(c.y(p[1]))
            << "\" x2=\"" << num(c.x(n.config[0])) << "\" y2=\"" << num(c.y(n.config[1]))
            << "\" stroke=\"#9ecae1\" stroke-width=\"0.7\"/>\n";
    }

    for (const FailNode& f : result.failSet.items()) {
        out << "  <circle class=\"fail\" cx=\"" << num(c.x(f.config[0])) << "\" cy=\""
            << num(c.y(f.config[1])) << "\" r=\"2.5\" fill=\"#d62728\"/>\n";
    }

    if (result.bestPath) {
        out << "  <polyline class=\"best-path\" fill=\"none\" stroke=\"#b2001d\" "
               "stroke-width=\"3\" points=\"";
        for (std::size_t i = 0; i < result.bestPath->size(); ++i) {
            const Configuration& q = (*result.bestPath)[i];
            if (i > 0) out << ' ';
            out << num(c.x(q[0])) << ',' << num(c.y(q[1]));
        }
        out << "\"/>\n";
    }

    out << "  <circle class=\"start\" cx=\"" << num(c.x(s.start[0])) << "\" cy=\""
        << num(c.y(s.start[1])) << "\" r=\"6\" fill=\"#e6b400\" stroke=\"black\"/>\n";
    out << "  <circle class=\"goal\" cx=\"" << num(c.x(s.goal.center[0])) << "\" cy=\""
        << num(c.y(s.goal.center[1])) << "\" r=\"" << num(s.goal.radius / c.spanX * c.width)
        << "\" fill=\"none\" stroke=\"#2ca02c\" stroke-width=\"2\"/>\n";

    out << "  <rect x=\"0\" y=\"0\" width=\"" << num(c.width) << "\" height=\"" << num(c.height)
        << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    out << "</svg>\n";

    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("emitSvg: cannot open " + path.string());
    file << out.str();
    file.flush();
    if (!file) throw std::runtime_error("emitSvg: write failed for " + path.string());
}

}  // namespace ldv
