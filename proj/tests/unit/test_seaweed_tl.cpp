#include <doctest.h>

#include <numeric>
#include <random>

#include "globdyn/error.hpp"
#include "globdyn/seaweed.hpp"
#include "globdyn/temperley_lieb.hpp"
#include "../support/oracles.hpp"

using namespace globdyn;

namespace {

template <class F>
Errc code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return Errc::Parse;
}

int seaweed_components(const std::string& text) {
    return count_components(seaweed_meander(parse_seaweed(text)));
}

}  // namespace

TEST_CASE("seaweed parsing") {
    const auto sc = parse_seaweed("2,2|1,3");
    CHECK(sc.alpha == std::vector{2, 2});
    CHECK(sc.beta == std::vector{1, 3});
    CHECK(sc.to_string() == "2,2|1,3");
    CHECK(parse_seaweed("2,4").beta == std::vector{6});
    CHECK(code_of([] { seaweed_meander(parse_seaweed("2,2|1,2")); }) == Errc::SumMismatch);
    CHECK(code_of([] { parse_seaweed("2,a|4"); }) == Errc::Parse);
    CHECK(code_of([] { seaweed_meander(parse_seaweed("0,2|2")); }) == Errc::InvalidArgument);
}

TEST_CASE("bi-rainbow gcd formulas") {
    CHECK(seaweed_components("2,4") == 2);
    CHECK(seaweed_components("3") == 3);
    CHECK(seaweed_components("2,2,3|7") == std::gcd(4, 5));
    for (int a = 1; a <= 6; ++a)
        for (int b = 1; b <= 6; ++b) {
            const std::vector<int> alpha{a, b};
            CHECK(birainbow_formula(alpha) == std::gcd(a, b));
            CHECK(count_components(seaweed_meander({alpha, {a + b}})) == std::gcd(a, b));
        }
    CHECK(code_of([] { birainbow_formula(std::vector{1, 1, 1, 1}); }) == Errc::Unsupported);
    CHECK(code_of([] { birainbow_formula(std::vector<int>{}); }) == Errc::Empty);
}

TEST_CASE("billiard domain and paths") {
    const auto b = billiard_from_seaweed(parse_seaweed("2,4"));
    CHECK(billiard_components(b) == 2);
    CHECK(b.cells.size() > 0);
    CHECK(std::is_sorted(b.cells.begin(), b.cells.end()));
    for (const auto& path : b.paths) {
        CHECK(path.points.size() >= 2);
        for (const auto& p : path.points) CHECK((p.x + p.y) % 2 == 1);
    }
    CHECK(code_of([] { trace_billiard(std::vector<Cell>{}); }) == Errc::MalformedDomain);
    CHECK(code_of([] { trace_billiard(std::vector<Cell>{{0, 1}}); }) == Errc::MalformedDomain);
    // A single square has one closed diamond path.
    CHECK(trace_billiard(std::vector<Cell>{{1, 1}}).size() == 1);
}

TEST_CASE("billiard equals meander on small seaweeds") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const int total = std::uniform_int_distribution<int>(1, 10)(rng);
        auto blocks = [&] {
            std::vector<int> out;
            int left = total;
            while (left > 0) {
                out.push_back(std::uniform_int_distribution<int>(1, left)(rng));
                left -= out.back();
            }
            return out;
        };
        const SeaweedComposition sc{blocks(), blocks()};
        CHECK_MESSAGE(billiard_components(billiard_from_seaweed(sc)) == oracle::components(seaweed_meander(sc)),
                      sc.to_string());
    }
}

TEST_CASE("TL word parsing") {
    const auto w = parse_tl_word("N=4: 2 1 3");
    CHECK(w.strands == 4);
    CHECK(w.letters == std::vector{2, 1, 3});
    CHECK(to_string(w) == "N=4: 2 1 3");
    CHECK(parse_tl_word("N=3:").letters.empty());
    CHECK(code_of([] { parse_tl_word("N=4: 4"); }) == Errc::IndexOutOfRange);
    CHECK(code_of([] { parse_tl_word("N=4: 0"); }) == Errc::IndexOutOfRange);
    CHECK(code_of([] { parse_tl_word("4: 1"); }) == Errc::Parse);
    CHECK(code_of([] { parse_tl_word("N=4 1 2"); }) == Errc::Parse);
}

TEST_CASE("TL diagram validation") {
    CHECK(code_of([] { TLDiagram(2, {1, 0, 3}); }) == Errc::SizeMismatch);
    CHECK(code_of([] { TLDiagram(2, {0, 1, 2, 3}); }) == Errc::InvalidMatching);
    CHECK(code_of([] { generator_diagram(3, 3); }) == Errc::IndexOutOfRange);
    CHECK(code_of([] { compose(TLDiagram::identity(2), TLDiagram::identity(3)); }) == Errc::SizeMismatch);
    CHECK(TLDiagram::identity(3).is_planar());
    CHECK_FALSE(TLDiagram(2, {3, 2, 1, 0}).is_planar());
}

TEST_CASE("TL defining relations") {
    for (int n = 2; n <= 8; ++n) {
        for (int i = 1; i < n; ++i) {
            const auto ei = generator_diagram(i, n);
            const auto sq = compose(ei, ei);
            CHECK(sq.same_pairing(ei));
            CHECK(sq.loop_exponent() == 1);
            for (int j = 1; j < n; ++j) {
                const auto ej = generator_diagram(j, n);
                if (std::abs(i - j) == 1) {
                    const auto x = compose(compose(ei, ej), ei);
                    CHECK(x == ei);
                } else if (std::abs(i - j) >= 2) {
                    CHECK(compose(ei, ej) == compose(ej, ei));
                }
            }
        }
        CHECK(compose(TLDiagram::identity(n), generator_diagram(1, n)) == generator_diagram(1, n));
    }
}

TEST_CASE("Markov trace") {
    CHECK(markov_trace_exponent(parse_tl_word("N=4: 2 1 3")) == 1);
    CHECK(markov_trace_exponent(parse_tl_word("N=5:")) == 5);
    CHECK(markov_trace_exponent(parse_tl_word("N=2: 1")) == 1);
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        const auto w = oracle::random_word(rng);
        const int c = markov_trace_exponent(w);
        CHECK(c == oracle::trace_exponent(w));
        const auto wm = word_to_meander(w);
        CHECK(c == wm.interior_loops + count_components(wm.meander));
        CHECK(eval_word(w).is_planar());
    }
}

TEST_CASE("word meander of e2 e1 e3") {
    const auto wm = word_to_meander(parse_tl_word("N=4: 2 1 3"));
    CHECK(wm.meander.size() == 8);
    CHECK(wm.interior_loops == 0);
    CHECK(count_components(wm.meander) == 1);
}
