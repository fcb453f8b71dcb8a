#include "globdyn/formats.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>

#include "globdyn/error.hpp"

namespace globdyn {

namespace {

// Shortest representation that parses back to the same double.
std::string num(double x) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw Error(Errc::Parse, std::string("missing JSON field '") + key + "'");
    return j.at(key);
}

template <class T>
T get(const Json& j, const char* key) {
    try {
        return field(j, key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::Parse, std::string("field '") + key + "': " + e.what());
    }
}

Json arches_json(const std::vector<Arch>& arches) {
    Json out = Json::array();
    for (const Arch& a : arches) out.push_back({a.a, a.b});
    return out;
}

std::vector<Arch> arches_from(const Json& j, const char* key) {
    std::vector<Arch> out;
    for (const auto& pair : get<std::vector<std::array<int, 2>>>(j, key))
        out.push_back({pair[0], pair[1]});
    return out;
}

Json point_list(const std::vector<HalfPoint>& pts) {
    Json out = Json::array();
    for (const HalfPoint& p : pts) out.push_back({p.x, p.y});
    return out;
}

std::vector<HalfPoint> points_from(const Json& j, const char* key) {
    std::vector<HalfPoint> out;
    for (const auto& p : get<std::vector<std::array<int, 2>>>(j, key)) out.push_back({p[0], p[1]});
    return out;
}

int parse_endpoint(const std::string& label, int strands) {
    int index = 0;
    const char* first = label.data() + 1;
    const char* last = label.data() + label.size();
    if (label.size() < 2 || (label[0] != 't' && label[0] != 'b') ||
        std::from_chars(first, last, index).ptr != last || index < 1 || index > strands)
        throw Error(Errc::Parse, "bad endpoint label '" + label + "'");
    return label[0] == 't' ? index - 1 : strands + index - 1;
}

}  // namespace

Json to_json(const ClosedMeander& m) {
    return {{"n", m.size()}, {"upper", arches_json(m.upper())}, {"lower", arches_json(m.lower())}};
}

ClosedMeander closed_meander_from_json(const Json& j) {
    return ClosedMeander(get<int>(j, "n"), arches_from(j, "upper"), arches_from(j, "lower"));
}

Json to_json(const Billiard& b) {
    Json cells = Json::array();
    for (const Cell& c : b.cells) cells.push_back({c.row, c.col});
    Json paths = Json::array();
    for (const BilliardPath& p : b.paths)
        paths.push_back({{"points", point_list(p.points)}, {"bounces", point_list(p.bounces)}});
    return {{"cells", cells}, {"trajectories", paths}};
}

Billiard billiard_from_json(const Json& j) {
    Billiard b;
    for (const auto& c : get<std::vector<std::array<int, 2>>>(j, "cells")) b.cells.push_back({c[0], c[1]});
    for (const Json& p : field(j, "trajectories"))
        b.paths.push_back({points_from(p, "points"), points_from(p, "bounces")});
    return b;
}

std::string endpoint_label(int endpoint, int strands) {
    return endpoint < strands ? "t" + std::to_string(endpoint + 1)
                              : "b" + std::to_string(endpoint - strands + 1);
}

Json to_json(const TLDiagram& d) {
    Json pairs = Json::array();
    const int n = d.strands();
    for (int k = 0; k < 2 * n; ++k) {
        const int other = d.partner()[static_cast<std::size_t>(k)];
        if (k < other) pairs.push_back({endpoint_label(k, n), endpoint_label(other, n)});
    }
    return {{"strands", n}, {"loop_exponent", d.loop_exponent()}, {"pairs", pairs}};
}

TLDiagram tl_diagram_from_json(const Json& j) {
    const int n = get<int>(j, "strands");
    if (n < 1) throw Error(Errc::InvalidArgument, "strand count must be positive");
    std::vector<int> partner(static_cast<std::size_t>(2 * n), -1);
    for (const auto& pair : get<std::vector<std::array<std::string, 2>>>(j, "pairs")) {
        const int x = parse_endpoint(pair[0], n);
        const int y = parse_endpoint(pair[1], n);
        if (partner[static_cast<std::size_t>(x)] != -1 || partner[static_cast<std::size_t>(y)] != -1)
            throw Error(Errc::InvalidMatching, "endpoint paired twice");
        partner[static_cast<std::size_t>(x)] = y;
        partner[static_cast<std::size_t>(y)] = x;
    }
    return TLDiagram(n, std::move(partner), get<int>(j, "loop_exponent"));
}

Json to_json(const ArcSet& s) {
    Json arcs = Json::array();
    for (const Arc& a : s.arcs())
        arcs.push_back({{"lo", a.lo},
                        {"length", a.length},
                        {"lo_deg", degrees(a.lo)},
                        {"length_deg", degrees(a.length)}});
    return {{"arcs", arcs}, {"measure_deg", degrees(s.measure())}, {"full", s.is_full()}};
}

ArcSet arc_set_from_json(const Json& j) {
    std::vector<Arc> arcs;
    for (const Json& a : field(j, "arcs")) arcs.push_back({get<double>(a, "lo"), get<double>(a, "length")});
    return ArcSet(std::move(arcs));
}

Json to_json(const IntegrationConfig& cfg) {
    return {{"rel_tol", cfg.rel_tol},
            {"abs_tol", cfg.abs_tol},
            {"max_step", cfg.max_step},
            {"initial_step", cfg.initial_step}};
}

IntegrationConfig integration_config_from_json(const Json& j) {
    if (!j.is_object()) throw Error(Errc::Parse, "integration config must be a JSON object");
    IntegrationConfig cfg;
    for (const auto& [key, value] : j.items()) {
        if (!value.is_number()) throw Error(Errc::Parse, "config value '" + key + "' is not a number");
        const double v = value.get<double>();
        if (key == "rel_tol") cfg.rel_tol = v;
        else if (key == "abs_tol") cfg.abs_tol = v;
        else if (key == "max_step") cfg.max_step = v;
        else if (key == "initial_step") cfg.initial_step = v;
        else throw Error(Errc::Parse, "unknown config key '" + key + "'");
    }
    return cfg;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
    const auto integrals = mixmaster_integrals(traj);
    os << "t,N1,N2,N3,Sp,Sm,Omega,q,I_partial,J_partial\n";
    for (std::size_t k = 0; k < traj.samples.size(); ++k) {
        const auto& s = traj.samples[k];
        os << num(s.t) << ',' << num(s.state.N1) << ',' << num(s.state.N2) << ','
           << num(s.state.N3) << ',' << num(s.state.Sp) << ',' << num(s.state.Sm) << ','
           << num(s.derived.Omega) << ',' << num(s.derived.q) << ',' << num(integrals[k].I) << ','
           << num(integrals[k].J) << '\n';
    }
}

void write_itinerary_csv(std::ostream& os, const Itinerary& it) {
    os << "step,theta_deg,corner\n";
    for (std::size_t k = 0; k < it.steps.size(); ++k)
        os << k << ',' << num(degrees(it.steps[k].theta)) << ',' << it.steps[k].corner << '\n';
}

void write_curve_csv(std::ostream& os, const std::vector<CurvePoint>& curve) {
    os << "a,v1,w1,escaped\n";
    for (const CurvePoint& p : curve) {
        if (p.escaped) os << num(p.a) << ",,,1\n";
        else os << num(p.a) << ',' << num(p.v1) << ',' << num(p.w1) << ",0\n";
    }
}

void write_integrals_csv(std::ostream& os, const std::vector<IntegralSample>& integrals) {
    os << "t,I_partial,J_partial\n";
    for (const IntegralSample& s : integrals) os << num(s.t) << ',' << num(s.I) << ',' << num(s.J) << '\n';
}

void write_meander_dot(std::ostream& os, const ClosedMeander& m) {
    os << "graph meander {\n  rankdir=LR;\n  node [shape=circle];\n";
    for (int v = 1; v <= m.size(); ++v) os << "  " << v << " [pos=\"" << v << ",0!\"];\n";
    for (const Arch& a : canonical_arches(m.upper()))
        os << "  " << a.a << " -- " << a.b << " [color=blue, label=\"upper\"];\n";
    for (const Arch& a : canonical_arches(m.lower()))
        os << "  " << a.a << " -- " << a.b << " [color=red, label=\"lower\"];\n";
    os << "}\n";
}

void write_tl_dot(std::ostream& os, const TLDiagram& d) {
    const int n = d.strands();
    os << "graph tl {\n  label=\"loops: " << d.loop_exponent() << "\";\n  node [shape=point];\n";
    for (int k = 0; k < 2 * n; ++k)
        os << "  " << endpoint_label(k, n) << " [xlabel=\"" << endpoint_label(k, n) << "\"];\n";
    for (int k = 0; k < 2 * n; ++k) {
        const int other = d.partner()[static_cast<std::size_t>(k)];
        if (k < other) os << "  " << endpoint_label(k, n) << " -- " << endpoint_label(other, n) << ";\n";
    }
    os << "}\n";
}

}  // namespace globdyn
