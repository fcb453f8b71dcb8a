#include "globdyn/seaweed.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "globdyn/error.hpp"

namespace globdyn {

namespace {

std::vector<int> parse_blocks(std::string_view text) {
    std::vector<int> blocks;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        auto token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                         : comma - start);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
            throw Error(Errc::Parse, "bad block size '" + std::string(token) + "'");
        blocks.push_back(value);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return blocks;
}

std::vector<Arch> rainbows(std::span<const int> sizes) {
    std::vector<Arch> arches;
    int offset = 0;
    for (int size : sizes) {
        const auto block = rainbow_block(offset, size);
        arches.insert(arches.end(), block.begin(), block.end());
        offset += 2 * size;
    }
    return arches;
}

std::string join(const std::vector<int>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

class CellGrid {
public:
    explicit CellGrid(std::span<const Cell> cells) {
        if (cells.empty()) throw Error(Errc::MalformedDomain, "billiard has no cells");
        for (const Cell& c : cells) {
            if (c.row < 1 || c.col < 1)
                throw Error(Errc::MalformedDomain, "cell coordinates must be positive");
            rows_ = std::max(rows_, c.row);
            cols_ = std::max(cols_, c.col);
        }
        occupied_.assign(static_cast<std::size_t>(rows_ * cols_), false);
        for (const Cell& c : cells) occupied_[index(c.row, c.col)] = true;
    }

    bool contains(int row, int col) const {
        return row >= 1 && col >= 1 && row <= rows_ && col <= cols_ && occupied_[index(row, col)];
    }

    // Cell entered when leaving edge midpoint p in direction (dx, dy).
    bool entered(HalfPoint p, int dx, int dy) const {
        if (p.y % 2 == 0) return contains(p.y / 2 + (dy > 0 ? 1 : 0), (p.x + 1) / 2);
        return contains((p.y + 1) / 2, p.x / 2 + (dx > 0 ? 1 : 0));
    }

private:
    std::size_t index(int row, int col) const {
        return static_cast<std::size_t>((row - 1) * cols_ + (col - 1));
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<bool> occupied_;
};

}  // namespace

std::string SeaweedComposition::to_string() const { return join(alpha) + "|" + join(beta); }

SeaweedComposition parse_seaweed(std::string_view text) {
    const auto bar = text.find('|');
    SeaweedComposition sc;
    sc.alpha = parse_blocks(text.substr(0, bar));
    if (bar == std::string_view::npos) {
        sc.beta = {std::accumulate(sc.alpha.begin(), sc.alpha.end(), 0)};
    } else {
        sc.beta = parse_blocks(text.substr(bar + 1));
    }
    validate(sc);
    return sc;
}

void validate(const SeaweedComposition& sc) {
    if (sc.alpha.empty() || sc.beta.empty())
        throw Error(Errc::Empty, "seaweed composition needs upper and lower blocks");
    auto positive = [](int v) { return v > 0; };
    if (!std::all_of(sc.alpha.begin(), sc.alpha.end(), positive) ||
        !std::all_of(sc.beta.begin(), sc.beta.end(), positive))
        throw Error(Errc::InvalidArgument, "block sizes must be positive");
    const int up = std::accumulate(sc.alpha.begin(), sc.alpha.end(), 0);
    const int down = std::accumulate(sc.beta.begin(), sc.beta.end(), 0);
    if (up != down)
        throw Error(Errc::SumMismatch, "upper blocks sum to " + std::to_string(up) +
                                           ", lower blocks to " + std::to_string(down));
}

ClosedMeander seaweed_meander(const SeaweedComposition& sc) {
    validate(sc);
    const int half = std::accumulate(sc.alpha.begin(), sc.alpha.end(), 0);
    return ClosedMeander(2 * half, rainbows(sc.alpha), rainbows(sc.beta));
}

int birainbow_formula(std::span<const int> alpha) {
    if (alpha.empty()) throw Error(Errc::Empty, "no blocks");
    if (std::any_of(alpha.begin(), alpha.end(), [](int v) { return v <= 0; }))
        throw Error(Errc::InvalidArgument, "block sizes must be positive");
    switch (alpha.size()) {
    case 1: return alpha[0];
    case 2: return std::gcd(alpha[0], alpha[1]);
    case 3: return std::gcd(alpha[0] + alpha[1], alpha[1] + alpha[2]);
    default:
        throw Error(Errc::Unsupported, "no gcd formula for " + std::to_string(alpha.size()) +
                                           " upper blocks");
    }
}

Billiard billiard_from_seaweed(const SeaweedComposition& sc) {
    validate(sc);
    std::vector<int> alpha_ends(sc.alpha.size());
    std::partial_sum(sc.alpha.begin(), sc.alpha.end(), alpha_ends.begin());
    std::vector<int> beta_starts{0};
    std::partial_sum(sc.beta.begin(), sc.beta.end(), std::back_inserter(beta_starts));
    const int side = alpha_ends.back();

    Billiard b;
    for (int c = 1; c <= side; ++c) {
        const int top = *std::lower_bound(alpha_ends.begin(), alpha_ends.end(), c);
        const int bottom = *std::prev(std::lower_bound(beta_starts.begin(), beta_starts.end(), c));
        for (int r = bottom + 1; r <= top; ++r) b.cells.push_back({r, c});
    }
    std::sort(b.cells.begin(), b.cells.end());
    b.paths = trace_billiard(b.cells);
    return b;
}

std::vector<BilliardPath> trace_billiard(std::span<const Cell> cells) {
    const CellGrid grid(cells);

    std::vector<HalfPoint> boundary;
    for (const Cell& c : cells) {
        if (!grid.contains(c.row - 1, c.col)) boundary.push_back({2 * c.col - 1, 2 * c.row - 2});
        if (!grid.contains(c.row + 1, c.col)) boundary.push_back({2 * c.col - 1, 2 * c.row});
        if (!grid.contains(c.row, c.col - 1)) boundary.push_back({2 * c.col - 2, 2 * c.row - 1});
        if (!grid.contains(c.row, c.col + 1)) boundary.push_back({2 * c.col, 2 * c.row - 1});
    }
    std::sort(boundary.begin(), boundary.end());
    boundary.erase(std::unique(boundary.begin(), boundary.end()), boundary.end());

    std::vector<bool> done(boundary.size(), false);
    auto boundary_index = [&](HalfPoint p) -> std::ptrdiff_t {
        const auto it = std::lower_bound(boundary.begin(), boundary.end(), p);
        return (it != boundary.end() && *it == p) ? it - boundary.begin() : -1;
    };
    // Every path visits at most every midpoint twice.
    const std::size_t step_cap = 8 * cells.size() + 8;

    std::vector<BilliardPath> paths;
    for (std::size_t i = 0; i < boundary.size(); ++i) {
        if (done[i]) continue;
        const HalfPoint start = boundary[i];
        int dx = 0;
        int dy = 0;
        for (auto [ex, ey] : {std::pair{1, 1}, {1, -1}, {-1, 1}, {-1, -1}})
            if (grid.entered(start, ex, ey)) {
                dx = ex;
                dy = ey;
                break;
            }

        BilliardPath path;
        HalfPoint p = start;
        for (std::size_t steps = 0;; ++steps) {
            if (steps > step_cap)
                throw Error(Errc::MalformedDomain, "flight path does not close");
            path.points.push_back(p);
            if (!grid.entered(p, dx, dy)) {
                if (p.y % 2 == 0) dy = -dy; else dx = -dx;
                if (!grid.entered(p, dx, dy))
                    throw Error(Errc::MalformedDomain, "flight path leaves the cell union");
                path.bounces.push_back(p);
                const auto bi = boundary_index(p);
                if (bi >= 0) done[static_cast<std::size_t>(bi)] = true;
            }
            p = {p.x + dx, p.y + dy};
            if (p == start) break;
        }
        // The start point bounces too, but the loop above leaves it in the
        // inward direction; mark it explicitly.
        done[i] = true;
        if (std::find(path.bounces.begin(), path.bounces.end(), start) == path.bounces.end())
            path.bounces.insert(path.bounces.begin(), start);
        paths.push_back(std::move(path));
    }
    return paths;
}

int billiard_components(const Billiard& b) {
    return static_cast<int>(trace_billiard(b.cells).size());
}

}  // namespace globdyn
