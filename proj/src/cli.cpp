#include "globdyn/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include "globdyn/bianchi.hpp"
#include "globdyn/error.hpp"
#include "globdyn/formats.hpp"
#include "globdyn/kasner.hpp"
#include "globdyn/meander.hpp"
#include "globdyn/seaweed.hpp"
#include "globdyn/shooting.hpp"
#include "globdyn/sturm_enumeration.hpp"
#include "globdyn/svg.hpp"
#include "globdyn/temperley_lieb.hpp"

namespace globdyn::cli {

namespace {

std::vector<double> parse_doubles(std::string_view text) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view token = text.substr(start, end - start);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        double value = 0.0;
        const auto res = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || res.ec != std::errc{} || res.ptr != token.data() + token.size())
            throw Error(Errc::Parse, "not a number: '" + std::string(token) + "'");
        out.push_back(value);
        start = end + 1;
    }
    return out;
}

std::string read_input(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw Error(Errc::InvalidArgument, "cannot open '" + path + "'");
        buf << in.rdbuf();
    }
    return buf.str();
}

Json read_json(const std::string& path) {
    try {
        return Json::parse(read_input(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(Errc::Parse, path + ": " + e.what());
    }
}

// Everything a command needs besides its own flags.
struct Context {
    std::string format;
    std::string output;
    std::uint64_t seed = 0;
    int jobs = 1;
    std::ostream* out = nullptr;

    // Resolves --format against the formats a command supports; the first
    // entry is that command's default.
    std::string pick(std::initializer_list<const char*> allowed) const {
        if (format.empty()) return *allowed.begin();
        for (const char* f : allowed)
            if (format == f) return format;
        std::string list;
        for (const char* f : allowed) list += (list.empty() ? "" : ", ") + std::string(f);
        throw Error(Errc::InvalidArgument, "format '" + format + "' not supported here; use " + list);
    }

    void emit(const std::function<void(std::ostream&)>& write) const {
        if (output.empty()) {
            write(*out);
            return;
        }
        std::ofstream file(output);
        if (!file) throw Error(Errc::InvalidArgument, "cannot write '" + output + "'");
        write(file);
    }

    void emit_json(const Json& j) const {
        emit([&](std::ostream& os) { os << j.dump(2) << '\n'; });
    }
    void emit_text(const std::string& s) const {
        emit([&](std::ostream& os) { os << s << '\n'; });
    }
};

CLI::App* sub(CLI::App& parent, const char* name, const char* description) {
    CLI::App* app = parent.add_subcommand(name, description);
    app->fallthrough();
    return app;
}

// Sources of a closed meander shared by the meander subcommands.
struct MeanderInput {
    std::string perm;
    std::string seaweed;
    std::string file;

    void attach(CLI::App* app) {
        auto* p = app->add_option("--perm", perm, "dissipative meander permutation, closed at vertex 1");
        auto* s = app->add_option("--seaweed", seaweed, "seaweed composition such as 2,2|1,3");
        auto* f = app->add_option("--input", file, "closed meander JSON file, '-' for stdin");
        p->excludes(s)->excludes(f);
        s->excludes(f);
    }

    ClosedMeander load() const {
        if (!perm.empty()) return close_open_meander(open_meander_arches(parse_permutation(perm)));
        if (!seaweed.empty()) return seaweed_meander(parse_seaweed(seaweed));
        if (!file.empty()) return closed_meander_from_json(read_json(file));
        throw Error(Errc::InvalidArgument, "give one of --perm, --seaweed or --input");
    }
};

Json permutation_list(const std::vector<Permutation>& perms) {
    Json list = Json::array();
    for (const Permutation& p : perms) list.push_back(p.to_string());
    return list;
}

struct ShootInput {
    std::string family = "cubic";
    double lambda = 15.0;
    double slope = 1.0;
    double offset = 0.0;
    std::string coeffs;
    EquilibriaOptions opts;

    void attach(CLI::App* app) {
        app->add_option("--family", family, "cubic, linear or poly")
            ->check(CLI::IsMember({"cubic", "linear", "poly"}))
            ->capture_default_str();
        app->add_option("--lambda", lambda, "cubic: f(v) = lambda (v - v^3)")->capture_default_str();
        app->add_option("--slope", slope, "linear: f(v) = slope v + offset")->capture_default_str();
        app->add_option("--offset", offset, "linear offset")->capture_default_str();
        app->add_option("--coeffs", coeffs, "poly: c0,c1,... for f(v) = sum c_k v^k");
        app->add_option("--a-lo", opts.a_lo, "lower end of the v(0) window")->capture_default_str();
        app->add_option("--a-hi", opts.a_hi, "upper end of the v(0) window")->capture_default_str();
        app->add_option("--grid", opts.grid, "grid points in the window")->capture_default_str();
        app->add_option("--tol", opts.shoot.tol, "integration tolerance")->capture_default_str();
        app->add_option("--escape", opts.shoot.escape_bound, "escape bound on |v| + |v'|")
            ->capture_default_str();
    }

    Nonlinearity nonlinearity() const {
        if (family == "cubic") return Nonlinearity::cubic(lambda);
        if (family == "linear") return Nonlinearity::linear(slope, offset);
        if (coeffs.empty()) throw Error(Errc::InvalidArgument, "poly family needs --coeffs");
        return Nonlinearity::polynomial(parse_doubles(coeffs));
    }
};

struct BianchiInput {
    std::string state;
    std::string vacuum;
    double gamma = 4.0 / 3.0;
    bool backward = false;
    double t_span = 10.0;
    std::string cfg_file;
    std::optional<double> rtol, atol, max_step;

    void attach(CLI::App* app) {
        auto* s = app->add_option("--state", state, "N1,N2,N3,Sp,Sm");
        auto* v = app->add_option("--vacuum", vacuum, "N1,N2,N3,theta_deg: vacuum state with shear angle theta");
        s->excludes(v);
        app->add_option("--gamma", gamma, "fluid parameter in [0, 2)")->capture_default_str();
        app->add_flag("--backward", backward, "integrate toward the singularity");
        app->add_option("--tspan", t_span, "length of the time interval")->capture_default_str();
        app->add_option("--cfg", cfg_file, "integration config JSON (rel_tol, abs_tol, max_step, initial_step)");
        app->add_option("--rtol", rtol, "relative tolerance");
        app->add_option("--atol", atol, "absolute tolerance");
        app->add_option("--max-step", max_step, "largest step");
    }

    Trajectory run() const {
        BianchiState s0;
        if (!state.empty()) {
            const auto v = parse_doubles(state);
            if (v.size() != 5) throw Error(Errc::InvalidArgument, "--state needs 5 numbers");
            s0 = {v[0], v[1], v[2], v[3], v[4]};
        } else if (!vacuum.empty()) {
            const auto v = parse_doubles(vacuum);
            if (v.size() != 4) throw Error(Errc::InvalidArgument, "--vacuum needs 4 numbers");
            s0 = vacuum_state(v[0], v[1], v[2], radians(v[3]));
        } else {
            throw Error(Errc::InvalidArgument, "give --state or --vacuum");
        }
        IntegrationConfig cfg = cfg_file.empty() ? IntegrationConfig{}
                                                 : integration_config_from_json(read_json(cfg_file));
        if (rtol) cfg.rel_tol = *rtol;
        if (atol) cfg.abs_tol = *atol;
        if (max_step) cfg.max_step = *max_step;
        return integrate(s0, FluidParameter(gamma), backward ? Direction::Backward : Direction::Forward,
                         t_span, cfg);
    }
};

ArcSet parse_arcs(std::string_view text) {
    // "lo:len,lo:len" in degrees.
    std::vector<Arc> arcs;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view token = text.substr(start, end - start);
        const std::size_t colon = token.find(':');
        if (colon == std::string_view::npos) throw Error(Errc::Parse, "arc needs lo:length, got '" + std::string(token) + "'");
        const auto lo = parse_doubles(token.substr(0, colon));
        const auto len = parse_doubles(token.substr(colon + 1));
        arcs.push_back({radians(lo[0]), radians(len[0])});
        start = end + 1;
    }
    return ArcSet(std::move(arcs));
}

// Option storage for one run, so repeated calls start from the defaults.
struct Opts {
    std::string perm;
    int n = 5;
    std::string method = "brute";
    bool canonical = false;
    int bound = EnumerationOptions{}.brute_force_bound;
    std::string orbit_perm;
    MeanderInput comp_in, double_in, svg_in;
    std::string close_perm;
    std::string svg_open;
    std::string comp_text, bill_text;
    std::string eval_text, trace_word, meander_word;
    ShootInput sigma_in, curve_in;
    int samples = 401;
    BianchiInput integ_in, integrals_in;
    double theta = 0.0, d_iter = 2.0, d_ifs = 2.0, d_stats = 2.0;
    int n_iter = 10, n_ifs = 1, max_steps = 1000, max_iter = 50;
    std::string policy = "error", arcs_text;
    bool until_cover = false;
    std::size_t sample_count = 10000;
};

void build(CLI::App& app, Context& ctx, Opts& o, std::function<void()>& action) {
    auto set = [&action](CLI::App* cmd, std::function<void()> f) {
        cmd->callback([&action, f = std::move(f)] { action = f; });
    };

    // sturm
    CLI::App* sturm = sub(app, "sturm", "Sturm permutations");
    sturm->require_subcommand(1);
    {
        CLI::App* check = sub(*sturm, "check", "meander, dissipative, Morse and Sturm tests");
        check->add_option("permutation", o.perm, "one-line notation, e.g. 1,4,3,2,5")->required();
        set(check, [&ctx, &o] {
            ctx.pick({"json"});
            const Permutation sigma = parse_permutation(o.perm);
            const auto morse = morse_vector(sigma);
            ctx.emit_json({{"permutation", sigma.to_string()},
                           {"meander", is_meander(sigma)},
                           {"dissipative", is_dissipative(sigma)},
                           {"morse", morse},
                           {"sturm", is_sturm(sigma)}});
        });

        CLI::App* en = sub(*sturm, "enumerate", "all Sturm permutations of odd size n");
        en->add_option("--n", o.n, "odd size")->required();
        en->add_option("--method", o.method, "brute or arches")
            ->check(CLI::IsMember({"brute", "arches"}))
            ->capture_default_str();
        en->add_flag("--canonical", o.canonical, "one representative per symmetry class");
        en->add_option("--bound", o.bound, "largest n for the brute-force scan")->capture_default_str();
        set(en, [&ctx, &o] {
            const std::string fmt = ctx.pick({"json", "csv"});
            auto perms = o.method == "brute" ? enumerate_sturm(o.n, {o.bound, ctx.jobs}) : enumerate_sturm_arches(o.n);
            if (o.canonical) {
                std::set<Permutation> reps;
                for (const Permutation& p : perms) reps.insert(canonical_form(p));
                perms.assign(reps.begin(), reps.end());
            }
            if (fmt == "csv") {
                ctx.emit([&](std::ostream& os) {
                    os << "permutation\n";
                    for (const Permutation& p : perms) os << '"' << p.to_string() << "\"\n";
                });
                return;
            }
            ctx.emit_json({{"n", o.n}, {"count", perms.size()}, {"canonical", o.canonical},
                           {"permutations", permutation_list(perms)}});
        });

        CLI::App* orbit = sub(*sturm, "orbit", "orbit under inversion and reversal");
        orbit->add_option("permutation", o.orbit_perm)->required();
        set(orbit, [&ctx, &o] {
            ctx.pick({"json"});
            const auto orbit_list = symmetry_orbit(parse_permutation(o.orbit_perm));
            ctx.emit_json({{"orbit", permutation_list(orbit_list)},
                           {"canonical", orbit_list.front().to_string()}});
        });
    }

    // meander
    CLI::App* meander = sub(app, "meander", "closed meanders");
    meander->require_subcommand(1);
    {
        CLI::App* comp = sub(*meander, "components", "number of closed curves");
        o.comp_in.attach(comp);
        set(comp, [&ctx, &o] {
            const std::string fmt = ctx.pick({"text", "json"});
            const ClosedMeander m = o.comp_in.load();
            const int c = count_components(m);
            if (fmt == "text") ctx.emit_text(std::to_string(c));
            else ctx.emit_json({{"n", m.size()}, {"components", c}});
        });

        CLI::App* dbl = sub(*meander, "double", "lower-rainbow doubling on 2n vertices");
        o.double_in.attach(dbl);
        set(dbl, [&ctx, &o] {
            const std::string fmt = ctx.pick({"json", "svg", "dot"});
            const ClosedMeander m = open_to_rainbow(o.double_in.load());
            if (fmt == "json") ctx.emit_json(to_json(m));
            else if (fmt == "svg") ctx.emit([&](std::ostream& os) { os << meander_svg(m); });
            else ctx.emit([&](std::ostream& os) { write_meander_dot(os, m); });
        });

        CLI::App* close = sub(*meander, "close", "close a dissipative open meander");
        close->add_option("permutation", o.close_perm)->required();
        set(close, [&ctx, &o] {
            const std::string fmt = ctx.pick({"json", "svg", "dot"});
            const ClosedMeander m = close_open_meander(open_meander_arches(parse_permutation(o.close_perm)));
            if (fmt == "json") ctx.emit_json(to_json(m));
            else if (fmt == "svg") ctx.emit([&](std::ostream& os) { os << meander_svg(m); });
            else ctx.emit([&](std::ostream& os) { write_meander_dot(os, m); });
        });

        CLI::App* svg = sub(*meander, "svg", "draw an open or closed meander");
        svg->add_option("--open", o.svg_open, "open meander permutation, drawn with its rays");
        o.svg_in.attach(svg);
        set(svg, [&ctx, &o] {
            ctx.pick({"svg"});
            const std::string doc = o.svg_open.empty()
                                        ? meander_svg(o.svg_in.load())
                                        : meander_svg(open_meander_arches(parse_permutation(o.svg_open)));
            ctx.emit([&](std::ostream& os) { os << doc; });
        });
    }

    // seaweed
    CLI::App* seaweed = sub(app, "seaweed", "seaweed meanders and Cartesian billiards");
    seaweed->require_subcommand(1);
    {
        CLI::App* comp = sub(*seaweed, "components", "component count of M(alpha|beta)");
        comp->add_option("composition", o.comp_text, "2,2|1,3; no '|' means a bi-rainbow")->required();
        set(comp, [&ctx, &o] {
            const std::string fmt = ctx.pick({"text", "json"});
            const SeaweedComposition sc = parse_seaweed(o.comp_text);
            const int c = count_components(seaweed_meander(sc));
            if (fmt == "text") {
                ctx.emit_text(std::to_string(c));
                return;
            }
            Json j{{"composition", sc.to_string()},
                   {"components", c},
                   {"billiard_components", billiard_components(billiard_from_seaweed(sc))}};
            if (sc.beta.size() == 1 && sc.alpha.size() <= 3) j["formula"] = birainbow_formula(sc.alpha);
            ctx.emit_json(j);
        });

        CLI::App* bill = sub(*seaweed, "billiard", "cells and flight paths of the billiard");
        bill->add_option("composition", o.bill_text)->required();
        set(bill, [&ctx, &o] {
            const std::string fmt = ctx.pick({"json", "svg"});
            const Billiard b = billiard_from_seaweed(parse_seaweed(o.bill_text));
            if (fmt == "json") ctx.emit_json(to_json(b));
            else ctx.emit([&](std::ostream& os) { os << billiard_svg(b); });
        });
    }

    // tl
    CLI::App* tl = sub(app, "tl", "Temperley-Lieb words");
    tl->require_subcommand(1);
    {
        CLI::App* eval = sub(*tl, "eval", "diagram of a word");
        eval->add_option("word", o.eval_text, "e.g. 'N=4: 2 1 3'")->required();
        set(eval, [&ctx, &o] {
            const std::string fmt = ctx.pick({"json", "dot"});
            const TLDiagram d = eval_word(parse_tl_word(o.eval_text));
            if (fmt == "json") ctx.emit_json(to_json(d));
            else ctx.emit([&](std::ostream& os) { write_tl_dot(os, d); });
        });

        CLI::App* trace = sub(*tl, "trace", "Markov trace exponent");
        trace->add_option("word", o.trace_word)->required();
        set(trace, [&ctx, &o] {
            const std::string fmt = ctx.pick({"text", "json"});
            const TLWord w = parse_tl_word(o.trace_word);
            const int c = markov_trace_exponent(w);
            if (fmt == "text") {
                ctx.emit_text(std::to_string(c));
                return;
            }
            const TLDiagram d = eval_word(w);
            ctx.emit_json({{"word", to_string(w)},
                           {"trace_exponent", c},
                           {"interior_loops", d.loop_exponent()},
                           {"closure_components", closure_components(d)}});
        });

        CLI::App* mea = sub(*tl, "meander", "lower-rainbow meander of a word");
        mea->add_option("word", o.meander_word)->required();
        set(mea, [&ctx, &o] {
            const std::string fmt = ctx.pick({"json", "svg", "dot"});
            const WordMeander wm = word_to_meander(parse_tl_word(o.meander_word));
            if (fmt == "json") {
                Json j = to_json(wm.meander);
                j["interior_loops"] = wm.interior_loops;
                ctx.emit_json(j);
            } else if (fmt == "svg") {
                ctx.emit([&](std::ostream& os) { os << meander_svg(wm.meander); });
            } else {
                ctx.emit([&](std::ostream& os) { write_meander_dot(os, wm.meander); });
            }
        });
    }

    // shoot
    CLI::App* shoot_cmd = sub(app, "shoot", "Neumann equilibria by shooting");
    shoot_cmd->require_subcommand(1);
    {
        CLI::App* sigma = sub(*shoot_cmd, "sigma", "Sturm permutation of the equilibria");
        o.sigma_in.attach(sigma);
        set(sigma, [&ctx, &o] {
            const std::string fmt = ctx.pick({"text", "json"});
            const auto eq = find_equilibria(o.sigma_in.nonlinearity(), o.sigma_in.opts);
            const Permutation p = sturm_permutation_numeric(eq);
            if (fmt == "text") {
                ctx.emit_text(p.to_string());
                return;
            }
            Json list = Json::array();
            for (const Equilibrium& e : eq.equilibria)
                list.push_back({{"a", e.a}, {"v1", e.v1}, {"slope", e.slope}});
            ctx.emit_json({{"nonlinearity", o.sigma_in.nonlinearity().description},
                           {"sigma", p.to_string()},
                           {"sturm", is_sturm(p)},
                           {"morse", morse_vector(p)},
                           {"equilibria", list},
                           {"escaped_samples", eq.escaped.size()}});
        });

        CLI::App* curve = sub(*shoot_cmd, "curve", "image of the Neumann axis at x = 1");
        o.curve_in.attach(curve);
        curve->add_option("--samples", o.samples, "number of v(0) samples")->capture_default_str();
        set(curve, [&ctx, &o] {
            const std::string fmt = ctx.pick({"csv", "svg"});
            const auto pts = shooting_curve(o.curve_in.nonlinearity(),
                                            uniform_grid(o.curve_in.opts.a_lo, o.curve_in.opts.a_hi, o.samples),
                                            o.curve_in.opts.shoot);
            if (fmt == "csv") ctx.emit([&](std::ostream& os) { write_curve_csv(os, pts); });
            else ctx.emit([&](std::ostream& os) { os << curve_svg(pts); });
        });
    }

    // bianchi
    CLI::App* bianchi = sub(app, "bianchi", "Wainwright-Hsu integration");
    bianchi->require_subcommand(1);
    {
        CLI::App* integ = sub(*bianchi, "integrate", "trajectory samples");
        o.integ_in.attach(integ);
        set(integ, [&ctx, &o] {
            const std::string fmt = ctx.pick({"csv", "json"});
            const Trajectory traj = o.integ_in.run();
            if (fmt == "csv") {
                ctx.emit([&](std::ostream& os) { write_trajectory_csv(os, traj); });
                return;
            }
            double max_omega = 0.0;
            for (const auto& s : traj.samples) max_omega = std::max(max_omega, std::abs(s.derived.Omega));
            const auto& last = traj.samples.back();
            ctx.emit_json({{"samples", traj.samples.size()},
                           {"t_final", last.t},
                           {"final_state", last.state.as_array()},
                           {"type", std::string(to_string(classify_type(traj.samples.front().state)))},
                           {"max_abs_omega", max_omega}});
        });

        CLI::App* integrals = sub(*bianchi, "integrals", "partial sums of the Mixmaster integrals");
        o.integrals_in.attach(integrals);
        set(integrals, [&ctx, &o] {
            const std::string fmt = ctx.pick({"json", "csv"});
            const auto sums = mixmaster_integrals(o.integrals_in.run());
            if (fmt == "csv") {
                ctx.emit([&](std::ostream& os) { write_integrals_csv(os, sums); });
                return;
            }
            bool monotone = true;
            for (std::size_t k = 1; k < sums.size(); ++k)
                monotone = monotone && sums[k].I >= sums[k - 1].I && sums[k].J >= sums[k - 1].J;
            ctx.emit_json({{"samples", sums.size()},
                           {"t_final", sums.back().t},
                           {"I", sums.back().I},
                           {"J", sums.back().J},
                           {"nondecreasing", monotone}});
        });
    }

    // kasner
    CLI::App* kasner = sub(app, "kasner", "Kasner map and its set-valued extension");
    kasner->require_subcommand(1);
    {

        CLI::App* it = sub(*kasner, "iterate", "itinerary of one orbit");
        it->add_option("--theta", o.theta, "start angle in degrees")->required();
        it->add_option("--n", o.n_iter, "number of steps")->capture_default_str();
        it->add_option("--d", o.d_iter, "emanation distance, d > 1")->capture_default_str();
        it->add_option("--policy", o.policy, "error, lexicographic or seeded-random")
            ->check(CLI::IsMember({"error", "lexicographic", "seeded-random"}))
            ->capture_default_str();
        set(it, [&ctx, &o] {
            const std::string fmt = ctx.pick({"csv", "json", "svg"});
            const EmanationConfig cfg(o.d_iter);
            const Itinerary orbit = iterate(radians(o.theta), o.n_iter, cfg, parse_policy(o.policy), ctx.seed);
            if (fmt == "csv") {
                ctx.emit([&](std::ostream& os) { write_itinerary_csv(os, orbit); });
            } else if (fmt == "svg") {
                ctx.emit([&](std::ostream& os) { os << kasner_svg(cfg, &orbit); });
            } else {
                Json steps = Json::array();
                for (const ItineraryStep& s : orbit.steps)
                    steps.push_back({{"theta_deg", degrees(s.theta)}, {"corner", s.corner}});
                Json era_list = Json::array();
                for (const Era& e : eras(orbit))
                    era_list.push_back({{"start", e.start}, {"length", e.length},
                                        {"corners", {e.corners.first, e.corners.second}}});
                ctx.emit_json({{"steps", steps},
                               {"eras", era_list},
                               {"termination", std::string(to_string(orbit.termination))}});
            }
        });

        CLI::App* ifs = sub(*kasner, "ifs", "set-valued iteration of arcs");
        ifs->add_option("--arcs", o.arcs_text, "lo:length,... in degrees")->required();
        ifs->add_option("--n", o.n_ifs, "number of steps")->capture_default_str();
        ifs->add_option("--d", o.d_ifs, "emanation distance, d > 1")->capture_default_str();
        ifs->add_flag("--until-cover", o.until_cover, "iterate until the circle is covered and report the count");
        ifs->add_option("--max-steps", o.max_steps, "cap for --until-cover")->capture_default_str();
        set(ifs, [&ctx, &o] {
            const std::string fmt = ctx.pick({"json", "svg"});
            const EmanationConfig cfg(o.d_ifs);
            const ArcSet start = parse_arcs(o.arcs_text);
            Json extra;
            ArcSet result;
            if (o.until_cover) {
                const auto steps = ifs_steps_to_cover(start, cfg, o.max_steps);
                result = steps ? ArcSet::full() : ifs_iterate(start, o.max_steps, cfg);
                extra["steps_to_cover"] = steps ? Json(*steps) : Json(nullptr);
            } else {
                result = ifs_iterate(start, o.n_ifs, cfg);
            }
            if (fmt == "svg") {
                ctx.emit([&](std::ostream& os) { os << kasner_svg(cfg, nullptr, &result); });
                return;
            }
            Json j = to_json(result);
            if (!extra.is_null()) j.update(extra);
            ctx.emit_json(j);
        });

        CLI::App* stats = sub(*kasner, "stats", "Monte Carlo termination fraction");
        stats->add_option("--samples", o.sample_count, "number of start angles")->capture_default_str();
        stats->add_option("--max-iter", o.max_iter, "steps per orbit")->capture_default_str();
        stats->add_option("--d", o.d_stats, "emanation distance, d > 1")->capture_default_str();
        set(stats, [&ctx, &o] {
            ctx.pick({"json"});
            const auto s = termination_stats(o.sample_count, o.max_iter, EmanationConfig(o.d_stats), ctx.seed, ctx.jobs);
            Json j{{"samples", s.samples},
                   {"terminated", s.terminated},
                   {"tangency_hits", s.tangency_hits},
                   {"fraction", s.fraction},
                   {"d", o.d_stats},
                   {"max_iter", o.max_iter},
                   {"seed", ctx.seed}};
            if (s.warning) j["warning"] = *s.warning;
            ctx.emit_json(j);
        });
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app("Sturm attractors, meanders and Mixmaster dynamics", "globdyn");
    app.require_subcommand(1);
    Context ctx;
    ctx.out = &out;
    app.add_option("--format", ctx.format, "json, csv, dot, svg or text; each command has a default")
        ->check(CLI::IsMember({"json", "csv", "dot", "svg", "text"}));
    app.add_option("--output,-o", ctx.output, "write to this file instead of stdout");
    app.add_option("--seed", ctx.seed, "seed for stochastic commands")->capture_default_str();
    app.add_option("--jobs", ctx.jobs, "worker threads for enumeration and Monte Carlo")
        ->check(CLI::Range(1, 64))
        ->capture_default_str();
    app.set_config("--config", "", "key=value file overriding defaults");

    Opts opts;
    std::function<void()> action;
    build(app, ctx, opts, action);

    std::vector<const char*> argv{"globdyn"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        if (action) action();
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return is_validation_error(e.code()) ? 2 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace globdyn::cli
