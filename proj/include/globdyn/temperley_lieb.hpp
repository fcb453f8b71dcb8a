#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "globdyn/meander.hpp"

namespace globdyn {

/// Monomial e_{i1} e_{i2} ... in TL_N. An empty letter list is e_0 = 1.
struct TLWord {
    int strands = 0;
    std::vector<int> letters;

    friend bool operator==(const TLWord&, const TLWord&) = default;
};

/// Parses "N=4: 2 1 3" (letters optional: "N=4:" is the identity).
TLWord parse_tl_word(std::string_view text);
std::string to_string(const TLWord& w);

/// Planar pairing of top endpoints t_1..t_N and bottom endpoints b_1..b_N,
/// times tau^loop_exponent.
///
/// Endpoint k < N is t_{k+1}; endpoint N + k is b_{k+1}.
class TLDiagram {
public:
    /// Validates that `partner` is a fixed-point-free involution on 0..2N-1.
    TLDiagram(int strands, std::vector<int> partner, int loop_exponent = 0);

    static TLDiagram identity(int strands);

    int strands() const noexcept { return strands_; }
    int loop_exponent() const noexcept { return loop_exponent_; }
    const std::vector<int>& partner() const noexcept { return partner_; }

    static int top(int j) { return j - 1; }
    int bottom(int j) const { return strands_ + j - 1; }

    /// True if no two pairs cross with endpoints placed around the strip
    /// boundary in the order t_1..t_N, b_N..b_1.
    bool is_planar() const;

    /// Same pairing, ignoring the scalar.
    bool same_pairing(const TLDiagram& other) const { return partner_ == other.partner_; }

    friend bool operator==(const TLDiagram&, const TLDiagram&) = default;

private:
    int strands_;
    std::vector<int> partner_;
    int loop_exponent_;
};

/// e_i: caps (t_i, t_{i+1}) and (b_i, b_{i+1}); other strands go straight down.
TLDiagram generator_diagram(int i, int strands);

/// Stacks d1 above d2: d1's bottom endpoints are glued to d2's top endpoints.
/// Closed loops in the gluing layer add to the exponent.
TLDiagram compose(const TLDiagram& d1, const TLDiagram& d2);

/// Left-to-right product, first letter on top.
TLDiagram eval_word(const TLWord& w);

/// Loops formed when each t_j is joined to b_j around the outside.
int closure_components(const TLDiagram& d);

/// Exponent c in tr(e) = tau^c: interior loops plus closure loops.
int markov_trace_exponent(const TLWord& w);

struct WordMeander {
    ClosedMeander meander;
    int interior_loops = 0;
};

/// Lower rainbow meander on 2N vertices: t_j -> j, b_j -> 2N+1-j, the
/// diagram pairing becomes the upper arches and the closure strands the lower
/// rainbow. Interior loops of the word are reported separately.
WordMeander word_to_meander(const TLWord& w);

}  // namespace globdyn
