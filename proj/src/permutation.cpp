#include "globdyn/permutation.hpp"

#include <charconv>
#include <numeric>
#include <sstream>

#include "globdyn/error.hpp"

namespace globdyn {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

}  // namespace

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
    if (image_.empty()) throw Error(Errc::Empty, "permutation has no entries");
    const int n = size();
    std::vector<bool> seen(image_.size() + 1, false);
    for (int v : image_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
            throw Error(Errc::NotABijection,
                        "entry " + std::to_string(v) + " breaks bijectivity on 1.." +
                            std::to_string(n));
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 1);
    return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(image_.size());
    for (int p = 1; p <= size(); ++p) inv[static_cast<std::size_t>((*this)(p) - 1)] = p;
    return Permutation(std::move(inv));
}

Permutation Permutation::reversed() const {
    const int n = size();
    std::vector<int> out(image_.size());
    for (int j = 1; j <= n; ++j) out[static_cast<std::size_t>(j - 1)] = n + 1 - (*this)(n + 1 - j);
    return Permutation(std::move(out));
}

std::string Permutation::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < image_.size(); ++i) {
        if (i) os << ',';
        os << image_[i];
    }
    return os.str();
}

Permutation parse_permutation(std::string_view text) {
    text = trim(text);
    if (text.empty()) throw Error(Errc::Empty, "empty permutation text");
    std::vector<int> image;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        const auto token = trim(text.substr(start, comma == std::string_view::npos
                                                       ? std::string_view::npos
                                                       : comma - start));
        int value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
            throw Error(Errc::Parse, "not an integer: '" + std::string(token) + "'");
        image.push_back(value);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return Permutation(std::move(image));
}

}  // namespace globdyn
