#include "widthone/grid.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace widthone {

Shape::Shape(std::vector<Coord> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) throw std::domain_error("Shape: rank must be at least 1");
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        if (dims_[i] < 1) {
            throw std::domain_error("Shape: dimension " + std::to_string(i + 1) +
                                    " must be positive, got " + std::to_string(dims_[i]));
        }
    }
}

long long Shape::coord_sum() const {
    return std::accumulate(dims_.begin(), dims_.end(), 0LL);
}

Coord Shape::max_dim() const { return *std::max_element(dims_.begin(), dims_.end()); }

std::size_t Shape::cell_count() const {
    std::size_t n = 1;
    for (Coord d : dims_) {
        const auto ud = static_cast<std::size_t>(d);
        if (n > std::numeric_limits<std::size_t>::max() / ud)
            throw std::overflow_error("Shape: cell count overflows size_t");
        n *= ud;
    }
    return n;
}

MultiIndex::MultiIndex(std::vector<Coord> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw std::domain_error("MultiIndex: rank must be at least 1");
}

long long MultiIndex::coord_sum() const {
    return std::accumulate(coords_.begin(), coords_.end(), 0LL);
}

Coord MultiIndex::max_coord() const {
    return *std::max_element(coords_.begin(), coords_.end());
}

MultiIndex all_ones(int rank) {
    return MultiIndex(std::vector<Coord>(static_cast<std::size_t>(rank), 1));
}

void require_in_grid(const Shape& n, const MultiIndex& x) {
    if (n.rank() != x.rank())
        throw std::domain_error("rank mismatch: shape has rank " + std::to_string(n.rank()) +
                                ", index has rank " + std::to_string(x.rank()));
    for (int i = 0; i < n.rank(); ++i) {
        if (x[i] < 1 || x[i] > n.dim(i)) {
            throw std::domain_error("coordinate " + std::to_string(i + 1) + " out of range: " +
                                    std::to_string(x[i]) + " not in [1, " +
                                    std::to_string(n.dim(i)) + "]");
        }
    }
}

std::size_t linear_offset(const Shape& n, const MultiIndex& x) {
    require_in_grid(n, x);
    std::size_t off = 0;
    for (int i = 0; i < n.rank(); ++i)
        off = off * static_cast<std::size_t>(n.dim(i)) + static_cast<std::size_t>(x[i] - 1);
    return off;
}

MultiIndex multi_index(const Shape& n, std::size_t offset) {
    if (offset >= n.cell_count())
        throw std::domain_error("offset " + std::to_string(offset) + " out of range for " +
                                std::to_string(n.cell_count()) + " cells");
    std::vector<Coord> coords(static_cast<std::size_t>(n.rank()));
    for (int i = n.rank() - 1; i >= 0; --i) {
        const auto d = static_cast<std::size_t>(n.dim(i));
        coords[static_cast<std::size_t>(i)] = static_cast<Coord>(offset % d) + 1;
        offset /= d;
    }
    return MultiIndex(std::move(coords));
}

bool product_leq(const MultiIndex& a, const MultiIndex& b) {
    if (a.rank() != b.rank())
        throw std::domain_error("product_leq: rank mismatch (" + std::to_string(a.rank()) +
                                " vs " + std::to_string(b.rank()) + ")");
    for (int i = 0; i < a.rank(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

bool is_chain(const std::vector<MultiIndex>& points) {
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (!product_leq(points[i], points[j]) && !product_leq(points[j], points[i]))
                return false;
    return true;
}

std::vector<int> coords_below(const MultiIndex& x) {
    std::vector<int> p(static_cast<std::size_t>(x.rank()));
    for (int i = 0; i < x.rank(); ++i) p[static_cast<std::size_t>(i)] = x[i] - 1;
    return p;
}

std::vector<int> coords_above(const Shape& n, const MultiIndex& x) {
    require_in_grid(n, x);
    std::vector<int> p(static_cast<std::size_t>(x.rank()));
    for (int i = 0; i < x.rank(); ++i) p[static_cast<std::size_t>(i)] = n.dim(i) - x[i];
    return p;
}

} // namespace widthone
