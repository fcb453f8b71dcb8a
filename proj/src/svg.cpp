#include "globdyn/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace globdyn {

namespace {

std::string f3(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    // Avoid "-0.000" so mirrored inputs do not differ in a sign.
    if (std::string_view(buf) == "-0.000") return "0.000";
    return buf;
}

class Doc {
public:
    Doc(double width, double height) {
        os_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << f3(width) << ' '
            << f3(height) << "\" width=\"" << f3(width) << "\" height=\"" << f3(height) << "\">\n"
            << "<rect x=\"0\" y=\"0\" width=\"" << f3(width) << "\" height=\"" << f3(height)
            << "\" fill=\"white\"/>\n";
    }
    std::ostringstream& os() { return os_; }
    void line(double x1, double y1, double x2, double y2, const char* stroke, double width = 1.0) {
        os_ << "<line x1=\"" << f3(x1) << "\" y1=\"" << f3(y1) << "\" x2=\"" << f3(x2) << "\" y2=\""
            << f3(y2) << "\" stroke=\"" << stroke << "\" stroke-width=\"" << f3(width) << "\"/>\n";
    }
    void circle(double cx, double cy, double r, const char* fill, const char* stroke = "none") {
        os_ << "<circle cx=\"" << f3(cx) << "\" cy=\"" << f3(cy) << "\" r=\"" << f3(r)
            << "\" fill=\"" << fill << "\" stroke=\"" << stroke << "\"/>\n";
    }
    void path(const std::string& d, const char* stroke, double width = 1.0) {
        os_ << "<path d=\"" << d << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\""
            << f3(width) << "\"/>\n";
    }
    std::string finish() {
        os_ << "</svg>\n";
        return os_.str();
    }

private:
    std::ostringstream os_;
};

constexpr double kStep = 30.0;
constexpr double kMargin = 30.0;

// Half-circle from road position a to b; sweep picks the side.
std::string arch_path(double x1, double x2, double axis, bool above) {
    const double r = 0.5 * std::abs(x2 - x1);
    return "M " + f3(x1) + ' ' + f3(axis) + " A " + f3(r) + ' ' + f3(r) + " 0 0 " +
           (above ? "1 " : "0 ") + f3(x2) + ' ' + f3(axis);
}

std::string draw_meander(int n, std::vector<Arch> upper, std::vector<Arch> lower) {
    upper = canonical_arches(std::move(upper));
    lower = canonical_arches(std::move(lower));
    int span = 1;
    for (const auto* family : {&upper, &lower})
        for (const Arch& a : *family) span = std::max(span, a.b - a.a);
    const double radius = 0.5 * span * kStep;
    const double width = 2 * kMargin + (n + 1) * kStep;
    const double height = 2 * kMargin + 2 * radius + kStep;
    const double axis = kMargin + radius + 0.5 * kStep;
    auto x = [](int p) { return kMargin + p * kStep; };

    Doc doc(width, height);
    doc.line(x(0) - 0.5 * kStep, axis, x(n + 1) + 0.5 * kStep, axis, "black");
    for (const Arch& a : upper) doc.path(arch_path(x(a.a), x(a.b), axis, true), "blue", 2.0);
    for (const Arch& a : lower) doc.path(arch_path(x(a.a), x(a.b), axis, false), "red", 2.0);
    for (int p = 1; p <= n; ++p) doc.circle(x(p), axis, 3.0, "black");
    return doc.finish();
}

}  // namespace

std::string meander_svg(const ClosedMeander& m) {
    return draw_meander(m.size(), m.upper(), m.lower());
}

std::string meander_svg(const OpenMeander& m) {
    const int n = m.perm.size();
    const Permutation pos = m.perm.inverse();
    std::vector<Arch> upper = m.upper;
    std::vector<Arch> lower = m.lower;
    // Rays as arches to the virtual endpoints 0 and n+1, matching the crossing check.
    lower.push_back({0, pos(1)});
    upper.push_back({pos(n), n + 1});
    return draw_meander(n, std::move(upper), std::move(lower));
}

std::string billiard_svg(const Billiard& b) {
    int rows = 1;
    int cols = 1;
    for (const Cell& c : b.cells) {
        rows = std::max(rows, c.row);
        cols = std::max(cols, c.col);
    }
    const double width = 2 * kMargin + cols * kStep;
    const double height = 2 * kMargin + rows * kStep;
    // Row 1 is drawn at the top; doubled coordinates halve to grid units.
    auto px = [](double gx) { return kMargin + gx * kStep; };
    auto py = [](double gy) { return kMargin + gy * kStep; };

    Doc doc(width, height);
    for (const Cell& c : b.cells)
        doc.os() << "<rect x=\"" << f3(px(c.col - 1)) << "\" y=\"" << f3(py(c.row - 1)) << "\" width=\""
                 << f3(kStep) << "\" height=\"" << f3(kStep)
                 << "\" fill=\"#eeeeee\" stroke=\"gray\"/>\n";
    static constexpr const char* kColors[] = {"blue", "red", "green", "purple", "orange", "teal"};
    for (std::size_t k = 0; k < b.paths.size(); ++k) {
        const auto& pts = b.paths[k].points;
        if (pts.empty()) continue;
        std::string d = "M " + f3(px(0.5 * pts[0].x)) + ' ' + f3(py(0.5 * pts[0].y));
        for (std::size_t i = 1; i < pts.size(); ++i)
            d += " L " + f3(px(0.5 * pts[i].x)) + ' ' + f3(py(0.5 * pts[i].y));
        d += " Z";
        doc.path(d, kColors[k % std::size(kColors)], 1.5);
    }
    return doc.finish();
}

std::string curve_svg(const std::vector<CurvePoint>& curve) {
    double vmax = 1e-9;
    double wmax = 1e-9;
    for (const CurvePoint& p : curve) {
        if (p.escaped) continue;
        vmax = std::max(vmax, std::abs(p.v1));
        wmax = std::max(wmax, std::abs(p.w1));
    }
    const double half = 200.0;
    const double size = 2 * (half + kMargin);
    auto px = [&](double v) { return kMargin + half + half * v / vmax; };
    auto py = [&](double w) { return kMargin + half - half * w / wmax; };

    Doc doc(size, size);
    doc.line(kMargin, kMargin + half, kMargin + 2 * half, kMargin + half, "gray");
    doc.line(kMargin + half, kMargin, kMargin + half, kMargin + 2 * half, "gray");
    std::string d;
    bool pen_down = false;
    for (const CurvePoint& p : curve) {
        if (p.escaped) {
            pen_down = false;
            continue;
        }
        d += (pen_down ? " L " : (d.empty() ? "M " : " M ")) + f3(px(p.v1)) + ' ' + f3(py(p.w1));
        pen_down = true;
    }
    if (!d.empty()) doc.path(d, "blue", 1.5);
    return doc.finish();
}

std::string kasner_svg(const EmanationConfig& cfg, const Itinerary* orbit, const ArcSet* highlight) {
    const double unit = 100.0;
    const double reach = std::max(1.0, cfg.distance()) * unit;
    const double size = 2 * (reach + kMargin);
    const double c = size / 2;
    auto px = [&](double x) { return c + unit * x; };
    auto py = [&](double y) { return c - unit * y; };
    auto arc_d = [&](double lo, double length, double r) {
        const double hi = lo + length;
        return "M " + f3(px(r * std::cos(lo))) + ' ' + f3(py(r * std::sin(lo))) + " A " + f3(unit * r) +
               ' ' + f3(unit * r) + " 0 " + (length > std::numbers::pi ? "1" : "0") + " 0 " +
               f3(px(r * std::cos(hi))) + ' ' + f3(py(r * std::sin(hi)));
    };

    Doc doc(size, size);
    doc.circle(c, c, unit, "none", "black");
    static constexpr const char* kCornerColors[] = {"red", "green", "blue"};
    const auto arcs = near_arcs(cfg);
    for (int k = 0; k < 3; ++k) {
        const auto p = cfg.corner_point(k);
        doc.circle(px(p[0]), py(p[1]), 4.0, kCornerColors[k]);
        doc.path(arc_d(arcs[static_cast<std::size_t>(k)].lo, arcs[static_cast<std::size_t>(k)].length,
                       1.0 + 0.04 * (k + 1)),
                 kCornerColors[k], 2.0);
    }
    for (double t : taub_points()) doc.circle(px(std::cos(t)), py(std::sin(t)), 3.0, "black");
    if (highlight) {
        for (const Arc& a : highlight->arcs()) {
            if (a.length >= kTwoPi - ArcSet::kMergeTolerance) doc.circle(c, c, 0.9 * unit, "none", "orange");
            else doc.path(arc_d(a.lo, a.length, 0.9), "orange", 3.0);
        }
    }
    if (orbit) {
        for (std::size_t k = 1; k < orbit->steps.size(); ++k) {
            const double a = orbit->steps[k - 1].theta;
            const double b = orbit->steps[k].theta;
            doc.line(px(std::cos(a)), py(std::sin(a)), px(std::cos(b)), py(std::sin(b)), "purple");
        }
        for (const ItineraryStep& s : orbit->steps)
            doc.circle(px(std::cos(s.theta)), py(std::sin(s.theta)), 2.5, "purple");
    }
    return doc.finish();
}

}  // namespace globdyn
