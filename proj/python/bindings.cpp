#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "globdyn/bianchi.hpp"
#include "globdyn/cli.hpp"
#include "globdyn/error.hpp"
#include "globdyn/kasner.hpp"
#include "globdyn/meander.hpp"
#include "globdyn/seaweed.hpp"
#include "globdyn/shooting.hpp"
#include "globdyn/sturm_enumeration.hpp"
#include "globdyn/temperley_lieb.hpp"

namespace py = pybind11;
using namespace globdyn;

namespace {

std::vector<int> to_list(const Permutation& p) { return {p.image().begin(), p.image().end()}; }

ArcSet to_arc_set(const std::vector<std::pair<double, double>>& arcs) {
    std::vector<Arc> out;
    for (const auto& [lo, len] : arcs) out.push_back(Arc{lo, len});
    return ArcSet(std::move(out));
}

std::vector<std::pair<double, double>> from_arc_set(const ArcSet& s) {
    std::vector<std::pair<double, double>> out;
    for (const Arc& a : s.arcs()) out.emplace_back(a.lo, a.length);
    return out;
}

BianchiState to_state(const std::array<double, 5>& y) { return BianchiState::from_array(y); }

}  // namespace

PYBIND11_MODULE(_globdyn, m) {
    m.doc() = "Bindings for the globdyn C++ library. Angles are in radians.";

    // Kept alive by the module attribute for the interpreter's lifetime.
    static PyObject* error_type = py::exception<Error>(m, "GlobdynError", PyExc_ValueError).ptr();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
            exc.attr("code") = std::string(to_string(e.code()));
            PyErr_SetObject(error_type, exc.ptr());
        }
    });

    m.def("is_sturm", [](std::vector<int> perm) { return is_sturm(Permutation(std::move(perm))); }, py::arg("perm"));
    m.def("morse_vector", [](std::vector<int> perm) { return morse_vector(Permutation(std::move(perm))); },
          py::arg("perm"));
    m.def(
        "enumerate_sturm",
        [](int n, const std::string& method) {
            const auto perms = method == "arches" ? enumerate_sturm_arches(n) : enumerate_sturm(n);
            std::vector<std::vector<int>> out;
            for (const auto& p : perms) out.push_back(to_list(p));
            return out;
        },
        py::arg("n"), py::arg("method") = "brute",
        "All Sturm permutations of odd size n, sorted. method is 'brute' or 'arches'.");
    m.def("canonical_form", [](std::vector<int> perm) { return to_list(canonical_form(Permutation(std::move(perm)))); },
          py::arg("perm"));

    m.def(
        "meander_components",
        [](std::vector<int> perm) {
            return count_components(close_open_meander(open_meander_arches(Permutation(std::move(perm)))));
        },
        py::arg("perm"), "Components of the closed meander obtained by closing a dissipative permutation.");
    m.def("seaweed_components", [](const std::string& text) { return count_components(seaweed_meander(parse_seaweed(text))); },
          py::arg("composition"));
    m.def("billiard_components",
          [](const std::string& text) { return billiard_components(billiard_from_seaweed(parse_seaweed(text))); },
          py::arg("composition"));
    m.def("birainbow_formula", [](const std::vector<int>& alpha) { return birainbow_formula(alpha); }, py::arg("alpha"));

    m.def("tl_trace", [](const std::string& word) { return markov_trace_exponent(parse_tl_word(word)); },
          py::arg("word"), "Exponent c of tau^c in the Markov trace of a word such as 'N=4: 2 1 3'.");

    m.def(
        "shoot_sigma",
        [](double lambda, double tol) {
            EquilibriaOptions opts;
            opts.shoot.tol = tol;
            return to_list(sturm_permutation_numeric(Nonlinearity::cubic(lambda), opts));
        },
        py::arg("lam"), py::arg("tol") = 1e-10);
    m.def(
        "find_equilibria",
        [](double lambda) {
            py::list out;
            for (const auto& e : find_equilibria(Nonlinearity::cubic(lambda)).equilibria)
                out.append(py::dict(py::arg("a") = e.a, py::arg("v1") = e.v1, py::arg("slope") = e.slope));
            return out;
        },
        py::arg("lam"), "Equilibria of v'' + lam (v - v^3) = 0 with Neumann data, sorted by v(0).");

    m.def("bianchi_rhs",
          [](const std::array<double, 5>& y, double gamma) { return rhs(to_state(y), FluidParameter(gamma)).as_array(); },
          py::arg("state"), py::arg("gamma") = 4.0 / 3.0);
    m.def(
        "bianchi_integrate",
        [](const std::array<double, 5>& y, double t_span, bool backward, double gamma, double rtol, double atol,
           double max_step) {
            IntegrationConfig cfg;
            cfg.rel_tol = rtol;
            cfg.abs_tol = atol;
            cfg.max_step = max_step;
            const auto traj = [&] {
                py::gil_scoped_release release;
                return integrate(to_state(y), FluidParameter(gamma),
                                 backward ? Direction::Backward : Direction::Forward, t_span, cfg);
            }();
            const auto sums = mixmaster_integrals(traj);
            std::vector<double> t, omega, I, J;
            std::vector<std::array<double, 5>> states;
            for (std::size_t k = 0; k < traj.samples.size(); ++k) {
                t.push_back(traj.samples[k].t);
                states.push_back(traj.samples[k].state.as_array());
                omega.push_back(traj.samples[k].derived.Omega);
                I.push_back(sums[k].I);
                J.push_back(sums[k].J);
            }
            return py::dict(py::arg("t") = t, py::arg("state") = states, py::arg("Omega") = omega,
                            py::arg("I") = I, py::arg("J") = J);
        },
        py::arg("state"), py::arg("t_span"), py::arg("backward") = false, py::arg("gamma") = 4.0 / 3.0,
        py::arg("rtol") = 1e-10, py::arg("atol") = 1e-12, py::arg("max_step") = 0.1,
        "Integrate (N1, N2, N3, Sigma+, Sigma-). Returns a dict of per-step lists.");

    m.def(
        "kasner_images",
        [](double theta, double d) {
            std::vector<std::pair<double, int>> out;
            for (const auto& im : kasner_images(theta, EmanationConfig(d))) out.emplace_back(im.theta, im.corner);
            return out;
        },
        py::arg("theta"), py::arg("d") = 2.0);
    m.def(
        "kasner_iterate",
        [](double theta, int n, double d, const std::string& policy, std::uint64_t seed) {
            const auto it = iterate(theta, n, EmanationConfig(d), parse_policy(policy), seed);
            std::vector<std::pair<double, int>> steps;
            for (const auto& s : it.steps) steps.emplace_back(s.theta, s.corner);
            return py::dict(py::arg("steps") = steps,
                            py::arg("termination") = std::string(to_string(it.termination)));
        },
        py::arg("theta"), py::arg("n"), py::arg("d") = 2.0, py::arg("policy") = "error", py::arg("seed") = 0);
    m.def(
        "ifs_iterate",
        [](const std::vector<std::pair<double, double>>& arcs, int n, double d) {
            return from_arc_set(ifs_iterate(to_arc_set(arcs), n, EmanationConfig(d)));
        },
        py::arg("arcs"), py::arg("n"), py::arg("d") = 2.4, "Arcs are (lo, length) pairs.");
    m.def(
        "ifs_steps_to_cover",
        [](const std::vector<std::pair<double, double>>& arcs, double d, int max_steps) {
            return ifs_steps_to_cover(to_arc_set(arcs), EmanationConfig(d), max_steps);
        },
        py::arg("arcs"), py::arg("d") = 2.4, py::arg("max_steps") = 1000);
    m.def(
        "termination_stats",
        [](std::size_t samples, int max_iter, double d, std::uint64_t seed, int jobs) {
            const auto s = [&] {
                py::gil_scoped_release release;
                return termination_stats(samples, max_iter, EmanationConfig(d), seed, jobs);
            }();
            return py::dict(py::arg("samples") = s.samples, py::arg("terminated") = s.terminated,
                            py::arg("tangency_hits") = s.tangency_hits, py::arg("fraction") = s.fraction,
                            py::arg("warning") = s.warning);
        },
        py::arg("samples"), py::arg("max_iter"), py::arg("d"), py::arg("seed") = 0, py::arg("jobs") = 1);

    m.def(
        "cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run the command-line front end in-process. Returns (exit_code, stdout, stderr).");
}
