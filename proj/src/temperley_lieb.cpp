#include "globdyn/temperley_lieb.hpp"

#include <charconv>
#include <numeric>
#include <sstream>

#include "globdyn/error.hpp"

namespace globdyn {

namespace {

std::size_t at(int k) { return static_cast<std::size_t>(k); }

int parse_int(std::string_view token) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
        throw Error(Errc::Parse, "not an integer: '" + std::string(token) + "'");
    return value;
}

}  // namespace

TLWord parse_tl_word(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) throw Error(Errc::Parse, "expected 'N=<n>: letters'");
    auto head = text.substr(0, colon);
    while (!head.empty() && head.front() == ' ') head.remove_prefix(1);
    while (!head.empty() && head.back() == ' ') head.remove_suffix(1);
    if (head.size() < 3 || head.substr(0, 2) != "N=")
        throw Error(Errc::Parse, "expected 'N=<n>' before ':'");

    TLWord w;
    w.strands = parse_int(head.substr(2));
    if (w.strands < 1) throw Error(Errc::InvalidArgument, "strand count must be positive");
    std::istringstream letters{std::string(text.substr(colon + 1))};
    std::string token;
    while (letters >> token) {
        const int i = parse_int(token);
        if (i < 1 || i >= w.strands)
            throw Error(Errc::IndexOutOfRange, "generator e_" + token + " not in TL_" +
                                                   std::to_string(w.strands));
        w.letters.push_back(i);
    }
    return w;
}

std::string to_string(const TLWord& w) {
    std::ostringstream os;
    os << "N=" << w.strands << ":";
    for (int i : w.letters) os << ' ' << i;
    return os.str();
}

TLDiagram::TLDiagram(int strands, std::vector<int> partner, int loop_exponent)
    : strands_(strands), partner_(std::move(partner)), loop_exponent_(loop_exponent) {
    if (strands_ < 1) throw Error(Errc::InvalidArgument, "strand count must be positive");
    if (partner_.size() != at(2 * strands_))
        throw Error(Errc::SizeMismatch, "pairing must list 2N endpoints");
    if (loop_exponent_ < 0) throw Error(Errc::InvalidArgument, "negative loop exponent");
    for (int k = 0; k < 2 * strands_; ++k) {
        const int p = partner_[at(k)];
        if (p < 0 || p >= 2 * strands_ || p == k || partner_[at(p)] != k)
            throw Error(Errc::InvalidMatching, "pairing is not a perfect matching");
    }
}

TLDiagram TLDiagram::identity(int strands) {
    std::vector<int> partner(at(2 * strands));
    for (int j = 0; j < strands; ++j) {
        partner[at(j)] = strands + j;
        partner[at(strands + j)] = j;
    }
    return TLDiagram(strands, std::move(partner));
}

bool TLDiagram::is_planar() const {
    const int n = strands_;
    auto position = [n](int k) { return k < n ? k + 1 : 2 * n - (k - n); };
    std::vector<Arch> arches;
    for (int k = 0; k < 2 * n; ++k)
        if (k < partner_[at(k)]) arches.push_back({position(k), position(partner_[at(k)])});
    return noncrossing_stack(canonical_arches(std::move(arches)), 2 * n);
}

TLDiagram generator_diagram(int i, int strands) {
    if (strands < 1) throw Error(Errc::InvalidArgument, "strand count must be positive");
    if (i < 1 || i >= strands)
        throw Error(Errc::IndexOutOfRange,
                    "e_" + std::to_string(i) + " not in TL_" + std::to_string(strands));
    auto partner = TLDiagram::identity(strands).partner();
    const int ti = i - 1;
    const int bi = strands + i - 1;
    partner[at(ti)] = ti + 1;
    partner[at(ti + 1)] = ti;
    partner[at(bi)] = bi + 1;
    partner[at(bi + 1)] = bi;
    return TLDiagram(strands, std::move(partner));
}

TLDiagram compose(const TLDiagram& d1, const TLDiagram& d2) {
    if (d1.strands() != d2.strands())
        throw Error(Errc::SizeMismatch, "cannot compose TL_" + std::to_string(d1.strands()) +
                                            " with TL_" + std::to_string(d2.strands()));
    const int n = d1.strands();
    const auto& up = d1.partner();
    const auto& down = d2.partner();
    std::vector<bool> middle_seen(at(n), false);
    std::vector<int> partner(at(2 * n), -1);

    // Walk from an outer endpoint through the gluing layer to the other end.
    auto walk = [&](int start) {
        bool in_upper = start < n;
        int k = start;
        while (true) {
            k = in_upper ? up[at(k)] : down[at(k)];
            if (in_upper && k < n) return k;  // back on the top
            if (!in_upper && k >= n) return k;  // back on the bottom
            const int j = in_upper ? k - n : k;  // middle slot
            middle_seen[at(j)] = true;
            in_upper = !in_upper;
            k = in_upper ? n + j : j;
        }
    };
    for (int k = 0; k < 2 * n; ++k) {
        if (partner[at(k)] != -1) continue;
        const int end = walk(k);
        partner[at(k)] = end;
        partner[at(end)] = k;
    }

    int loops = 0;
    for (int j = 0; j < n; ++j) {
        if (middle_seen[at(j)]) continue;
        ++loops;
        int cur = j;
        do {
            middle_seen[at(cur)] = true;
            const int via_upper = up[at(n + cur)] - n;
            middle_seen[at(via_upper)] = true;
            cur = down[at(via_upper)];
        } while (cur != j);
    }
    return TLDiagram(n, std::move(partner), d1.loop_exponent() + d2.loop_exponent() + loops);
}

TLDiagram eval_word(const TLWord& w) {
    TLDiagram d = TLDiagram::identity(w.strands);
    for (int i : w.letters) d = compose(d, generator_diagram(i, w.strands));
    return d;
}

int closure_components(const TLDiagram& d) {
    const int n = d.strands();
    const auto& partner = d.partner();
    auto around = [n](int k) { return k < n ? k + n : k - n; };
    std::vector<bool> seen(at(2 * n), false);
    int loops = 0;
    for (int start = 0; start < 2 * n; ++start) {
        if (seen[at(start)]) continue;
        ++loops;
        int k = start;
        do {
            seen[at(k)] = true;
            const int other = partner[at(k)];
            seen[at(other)] = true;
            k = around(other);
        } while (k != start);
    }
    return loops;
}

int markov_trace_exponent(const TLWord& w) {
    const TLDiagram d = eval_word(w);
    return d.loop_exponent() + closure_components(d);
}

WordMeander word_to_meander(const TLWord& w) {
    const TLDiagram d = eval_word(w);
    const int n = d.strands();
    auto position = [n](int k) { return k < n ? k + 1 : 2 * n - (k - n); };
    std::vector<Arch> upper;
    for (int k = 0; k < 2 * n; ++k)
        if (k < d.partner()[at(k)]) upper.push_back({position(k), position(d.partner()[at(k)])});
    return {ClosedMeander(2 * n, std::move(upper), rainbow_block(0, n)), d.loop_exponent()};
}

}  // namespace globdyn
