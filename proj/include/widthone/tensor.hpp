#ifndef WIDTHONE_TENSOR_HPP
#define WIDTHONE_TENSOR_HPP

#include "widthone/bigint.hpp"
#include "widthone/grid.hpp"
#include "widthone/guards.hpp"

#include <cstddef>
#include <vector>

namespace widthone {

/// Dense array of exact integers over a grid, row-major with the last
/// coordinate fastest. Components of width-one sums are generically all
/// nonzero, so dense storage is the intended representation; the entry
/// guard is what keeps runaway shapes from allocating.
class DenseTensor {
public:
    DenseTensor() = default;
    explicit DenseTensor(Shape shape, std::size_t max_entries = kDefaultMaxTensorEntries);

    const Shape& shape() const { return shape_; }
    std::size_t size() const { return entries_.size(); }

    BigInt& operator[](std::size_t off) { return entries_[off]; }
    const BigInt& operator[](std::size_t off) const { return entries_[off]; }

    BigInt& at(const MultiIndex& x) { return entries_[linear_offset(shape_, x)]; }
    const BigInt& at(const MultiIndex& x) const { return entries_[linear_offset(shape_, x)]; }

    const std::vector<BigInt>& entries() const { return entries_; }

    /// Componentwise += other. Throws std::domain_error on shape mismatch.
    void accumulate(const DenseTensor& other);

    BigInt total() const;
    std::vector<MultiIndex> support() const;

    bool operator==(const DenseTensor&) const = default;

private:
    Shape shape_;
    std::vector<BigInt> entries_;
};

/// E_x: 1 at x, 0 elsewhere.
DenseTensor elementary(const Shape& n, const MultiIndex& x,
                       std::size_t max_entries = kDefaultMaxTensorEntries);

} // namespace widthone

#endif
