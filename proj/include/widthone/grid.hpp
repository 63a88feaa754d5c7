#ifndef WIDTHONE_GRID_HPP
#define WIDTHONE_GRID_HPP

#include <cstddef>
#include <vector>

namespace widthone {

using Coord = int;

/// Extents (n_1, ..., n_d) of a d-dimensional grid, all positive.
class Shape {
public:
    Shape() = default;
    explicit Shape(std::vector<Coord> dims);

    int rank() const { return static_cast<int>(dims_.size()); }
    Coord dim(int axis) const { return dims_[static_cast<std::size_t>(axis)]; }
    const std::vector<Coord>& dims() const { return dims_; }

    long long coord_sum() const;
    Coord max_dim() const;

    /// Product of the extents. Throws std::overflow_error if it does not
    /// fit in std::size_t.
    std::size_t cell_count() const;

    bool operator==(const Shape&) const = default;

private:
    std::vector<Coord> dims_;
};

/// A 1-based lattice point (x_1, ..., x_d); membership in a given grid is
/// checked by the operations that need it, not by the type itself.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<Coord> coords);

    int rank() const { return static_cast<int>(coords_.size()); }
    Coord operator[](int axis) const { return coords_[static_cast<std::size_t>(axis)]; }
    Coord& operator[](int axis) { return coords_[static_cast<std::size_t>(axis)]; }
    const std::vector<Coord>& coords() const { return coords_; }

    long long coord_sum() const;
    Coord max_coord() const;

    bool operator==(const MultiIndex&) const = default;
    /// Lexicographic; unrelated to the product order, used only as a
    /// container ordering.
    bool operator<(const MultiIndex& other) const { return coords_ < other.coords_; }

private:
    std::vector<Coord> coords_;
};

/// The minimum element (1, ..., 1) of a rank-d grid.
MultiIndex all_ones(int rank);

/// Throws std::domain_error naming the offending coordinate unless
/// 1 <= x_i <= n_i for every axis.
void require_in_grid(const Shape& n, const MultiIndex& x);

/// Row-major position of x, last coordinate fastest. Inverse of multi_index.
std::size_t linear_offset(const Shape& n, const MultiIndex& x);

/// Lattice point at a row-major position. Inverse of linear_offset.
MultiIndex multi_index(const Shape& n, std::size_t offset);

/// a <= b in the product order: a_i <= b_i for every i.
bool product_leq(const MultiIndex& a, const MultiIndex& b);

/// True iff the points are pairwise comparable under the product order.
/// Empty sets and singletons are chains vacuously.
bool is_chain(const std::vector<MultiIndex>& points);

/// Per-axis counts x - 1: how many steps of e_i lie strictly below x.
std::vector<int> coords_below(const MultiIndex& x);

/// Per-axis counts n - x: how many steps of e_i remain up to the corner.
std::vector<int> coords_above(const Shape& n, const MultiIndex& x);

} // namespace widthone

#endif
