#include "bimono/bigraph.hpp"

#include <algorithm>
#include <sstream>

#include "bimono/rational.hpp"

namespace bimono {

ColoredBigraph::ColoredBigraph(int n, const EdgeList& red_edges, const EdgeList& blue_edges)
    : n_(n), red_x_(n), blue_x_(n), red_y_(n), blue_y_(n) {
    if (n <= 0 || n > kMaxN)
        throw PreconditionError("n must be in [1, " + std::to_string(kMaxN) + "], got " +
                                std::to_string(n));
    auto insert = [&](std::vector<Mask>& by_x, std::vector<Mask>& by_y, const EdgeList& edges) {
        for (auto [x, y] : edges) {
            if (x < 0 || x >= n || y < 0 || y >= n)
                throw PreconditionError("edge index out of range: (" + std::to_string(x) + "," +
                                        std::to_string(y) + ") with n=" + std::to_string(n));
            by_x[x] |= bit(y);
            by_y[y] |= bit(x);
        }
    };
    insert(red_x_, red_y_, red_edges);
    insert(blue_x_, blue_y_, blue_edges);
}

int ColoredBigraph::min_degree() const {
    int d = n_;
    for (int i = 0; i < n_; ++i) {
        d = std::min(d, popcount(red_x_[i] | blue_x_[i]));
        d = std::min(d, popcount(red_y_[i] | blue_y_[i]));
    }
    return d;
}

long long ColoredBigraph::color_edge_count(Mask xs, Mask ys, Color c) const {
    long long total = 0;
    BIMONO_FOR_BITS(x, xs) total += popcount(row(c, x) & ys);
    return total;
}

long long ColoredBigraph::edge_count() const {
    long long total = 0;
    for (int x = 0; x < n_; ++x) total += popcount(red_x_[x] | blue_x_[x]);
    return total;
}

long long ColoredBigraph::color_edge_total(Color c) const {
    return color_edge_count(full(), full(), c);
}

std::string ColoredBigraph::serialize() const {
    std::ostringstream out;
    out << "bigraph " << n_ << "\n";
    for (int x = 0; x < n_; ++x)
        BIMONO_FOR_BITS(y, red_x_[x]) out << "R " << x << " " << y << "\n";
    for (int x = 0; x < n_; ++x)
        BIMONO_FOR_BITS(y, blue_x_[x]) out << "B " << x << " " << y << "\n";
    return out.str();
}

ColoredBigraph ColoredBigraph::parse(const std::string& text) {
    std::istringstream in(text);
    std::string tag;
    int n = 0;
    if (!(in >> tag >> n) || tag != "bigraph")
        throw PreconditionError("bad graph file: expected `bigraph <n>` header");
    EdgeList red, blue;
    std::string color;
    int x, y;
    while (in >> color >> x >> y) {
        if (color == "R")
            red.emplace_back(x, y);
        else if (color == "B")
            blue.emplace_back(x, y);
        else
            throw PreconditionError("bad graph file: unknown color tag `" + color + "`");
    }
    return ColoredBigraph(n, red, blue);
}

ColoredBigraph ColoredBigraph::transposed() const {
    ColoredBigraph t(n_, {}, {});
    t.red_x_ = red_y_;
    t.red_y_ = red_x_;
    t.blue_x_ = blue_y_;
    t.blue_y_ = blue_x_;
    return t;
}

ColoredBigraph ColoredBigraph::color_swapped() const {
    ColoredBigraph t(n_, {}, {});
    t.red_x_ = blue_x_;
    t.red_y_ = blue_y_;
    t.blue_x_ = red_x_;
    t.blue_y_ = red_y_;
    return t;
}

Mask take_lowest(Mask from, int k) {
    if (popcount(from) < k) throw PreconditionError("take_lowest: set too small");
    Mask out = 0;
    for (int i = 0; i < k; ++i) {
        out |= bit(lowest_bit(from));
        from &= from - 1;
    }
    return out;
}

Rat parse_rat(const std::string& s) {
    std::int64_t p = 0, q = 1;
    char slash = 0;
    std::istringstream in(s);
    if (!(in >> p)) throw PreconditionError("bad rational: `" + s + "`");
    if (in >> slash) {
        if (slash != '/' || !(in >> q) || q == 0)
            throw PreconditionError("bad rational: `" + s + "`");
    }
    return Rat(p, q);
}

std::string to_string(const Rat& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace bimono
