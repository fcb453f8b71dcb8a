#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace globdyn {

/// A permutation sigma of {1..n} in one-line notation.
///
/// For a meander, position p along the road carries river label sigma(p).
/// All indices are 1-based to match the usual notation.
class Permutation {
public:
    /// Validates that `image` is a bijection on {1..n}.
    explicit Permutation(std::vector<int> image);

    static Permutation identity(int n);

    int size() const noexcept { return static_cast<int>(image_.size()); }
    int operator()(int j) const { return image_[static_cast<std::size_t>(j - 1)]; }
    std::span<const int> image() const noexcept { return image_; }

    Permutation inverse() const;
    /// Conjugation by the reversal kappa(j) = n+1-j.
    Permutation reversed() const;

    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) {
        return a.image_ <=> b.image_;
    }

private:
    std::vector<int> image_;
};

/// Parses "1,4,3,2,5". Whitespace around entries is ignored.
Permutation parse_permutation(std::string_view text);

}  // namespace globdyn
