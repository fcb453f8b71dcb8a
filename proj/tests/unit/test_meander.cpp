#include <doctest.h>

#include <random>

#include "globdyn/error.hpp"
#include "globdyn/meander.hpp"
#include "globdyn/sturm_enumeration.hpp"
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

}  // namespace

TEST_CASE("permutation parsing and validation") {
    CHECK(parse_permutation("1,4,3,2,5").to_string() == "1,4,3,2,5");
    CHECK(parse_permutation(" 2 , 1 ").to_string() == "2,1");
    CHECK(code_of([] { parse_permutation(""); }) == Errc::Empty);
    CHECK(code_of([] { parse_permutation("1,,2"); }) == Errc::Parse);
    CHECK(code_of([] { parse_permutation("1,x"); }) == Errc::Parse);
    CHECK(code_of([] { parse_permutation("1,1,3"); }) == Errc::NotABijection);
    CHECK(code_of([] { parse_permutation("1,4"); }) == Errc::NotABijection);
}

TEST_CASE("inverse and reversal") {
    const Permutation s = parse_permutation("2,3,1");
    CHECK(s.inverse().to_string() == "3,1,2");
    CHECK(s.inverse().inverse() == s);
    CHECK(s.reversed().reversed() == s);
    CHECK(Permutation::identity(4).reversed() == Permutation::identity(4));
}

TEST_CASE("Morse vectors") {
    CHECK(morse_vector(parse_permutation("1,4,3,2,5")) == std::vector<int>{0, 1, 2, 1, 0});
    for (int n : {1, 3, 5, 7, 9}) {
        const auto m = morse_vector(Permutation::identity(n));
        for (int k = 0; k < n; ++k) CHECK(m[static_cast<std::size_t>(k)] == k % 2);
    }
}

TEST_CASE("meander and Sturm predicates") {
    CHECK(is_sturm(parse_permutation("1,4,3,2,5")));
    CHECK(is_sturm(Permutation::identity(7)));
    CHECK_FALSE(is_dissipative(parse_permutation("2,1,3")));
    CHECK_FALSE(is_meander(parse_permutation("1,2")));           // even size
    CHECK_FALSE(is_meander(parse_permutation("1,3,2,4,5")));     // crossing
    CHECK(code_of([] { open_meander_arches(parse_permutation("1,2,3,4")); }) == Errc::ParityViolation);
}

TEST_CASE("noncrossing checkers agree") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 2 * std::uniform_int_distribution<int>(1, 6)(rng);
        std::vector<int> v(static_cast<std::size_t>(n));
        std::iota(v.begin(), v.end(), 1);
        std::shuffle(v.begin(), v.end(), rng);
        std::vector<Arch> arches;
        std::vector<std::pair<int, int>> pairs;
        for (int k = 0; k < n; k += 2) {
            arches.push_back({v[static_cast<std::size_t>(k)], v[static_cast<std::size_t>(k + 1)]});
            pairs.push_back({v[static_cast<std::size_t>(k)], v[static_cast<std::size_t>(k + 1)]});
        }
        const bool ok = !oracle::any_crossing(pairs);
        CHECK(noncrossing_pairwise(canonical_arches(arches)) == ok);
        CHECK(noncrossing_stack(canonical_arches(arches), n) == ok);
    }
}

TEST_CASE("closed meander validation") {
    CHECK(code_of([] { ClosedMeander(3, {{1, 2}}, {{1, 2}}); }) == Errc::ParityViolation);
    CHECK(code_of([] { ClosedMeander(4, {{1, 3}, {2, 4}}, {{1, 2}, {3, 4}}); }) == Errc::ArchCrossing);
    CHECK(code_of([] { ClosedMeander(4, {{1, 2}}, {{1, 2}, {3, 4}}); }) == Errc::InvalidMatching);
    CHECK(code_of([] { ClosedMeander(4, {{1, 2}, {2, 3}}, {{1, 2}, {3, 4}}); }) == Errc::InvalidMatching);
    CHECK(code_of([] { ClosedMeander(4, {{1, 2}, {3, 9}}, {{1, 2}, {3, 4}}); }) == Errc::InvalidMatching);
}

TEST_CASE("component count matches union-find on random meanders") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 * std::uniform_int_distribution<int>(1, 12)(rng);
        const auto m = oracle::random_closed_meander(n, rng);
        CHECK(count_components(m) == oracle::components(m));
    }
}

TEST_CASE("closing an open meander") {
    const auto m = close_open_meander(open_meander_arches(parse_permutation("1,4,3,2,5")));
    CHECK(m.size() == 4);
    CHECK(count_components(m) == 1);
    CHECK(code_of([] { close_open_meander(open_meander_arches(parse_permutation("3,2,1"))); }) ==
          Errc::NotDissipative);
    // Every Sturm permutation closes to a single curve.
    for (const auto& s : enumerate_sturm(9)) CHECK(count_components(close_open_meander(open_meander_arches(s))) == 1);
}

TEST_CASE("doubling keeps the component count") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 * std::uniform_int_distribution<int>(1, 10)(rng);
        const auto m = oracle::random_closed_meander(n, rng);
        const auto d = open_to_rainbow(m);
        CHECK(d.size() == 2 * n);
        CHECK(d.lower() == rainbow_block(0, n));
        CHECK(count_components(d) == count_components(m));
    }
}

TEST_CASE("Sturm enumeration") {
    CHECK(enumerate_sturm(1).size() == 1);
    CHECK(enumerate_sturm(3) == std::vector{Permutation::identity(3)});
    CHECK(enumerate_sturm(5) == std::vector{Permutation::identity(5), parse_permutation("1,4,3,2,5")});
    CHECK(code_of([] { enumerate_sturm(4); }) == Errc::ParityViolation);
    CHECK(code_of([] { enumerate_sturm(15); }) == Errc::BoundExceeded);

    for (int n : {3, 5, 7}) {
        std::vector<int> v(static_cast<std::size_t>(n));
        std::iota(v.begin(), v.end(), 1);
        std::vector<Permutation> brute;
        do {
            if (oracle::is_sturm(v)) brute.emplace_back(v);
        } while (std::next_permutation(v.begin(), v.end()));
        CHECK(enumerate_sturm(n) == brute);
        CHECK(enumerate_sturm_arches(n) == brute);
    }
    CHECK(enumerate_sturm(9, {13, 4}) == enumerate_sturm(9));
}

TEST_CASE("Sturm set is closed under the trivial symmetries") {
    for (int n : {5, 7, 9}) {
        const auto all = enumerate_sturm(n);
        for (const auto& s : all) {
            CHECK(is_sturm(s.inverse()));
            CHECK(is_sturm(s.reversed()));
            const auto m = morse_vector(s);
            CHECK(m.front() == 0);
            CHECK(m.back() == 0);
            CHECK(canonical_form(s) == symmetry_orbit(s).front());
            CHECK(canonical_form(s) <= s);
        }
    }
}
