#ifndef WIDTHONE_ORACLE_HPP
#define WIDTHONE_ORACLE_HPP

#include "widthone/bigint.hpp"
#include "widthone/grid.hpp"
#include "widthone/guards.hpp"
#include "widthone/tensor.hpp"

#include <vector>

namespace widthone {

/// d weakly increasing rows of common length s, row i valued in [n_i].
/// Column j is a lattice point; summing the column points' elementary
/// tensors recovers the width-one tensor the tuple encodes.
struct RowTuple {
    std::vector<std::vector<int>> rows;

    long long length() const { return rows.empty() ? 0 : static_cast<long long>(rows[0].size()); }
    MultiIndex column(long long j) const;
};

/// Single-consumer stream of all weakly increasing sequences of the given
/// length with values in [1, bound], in lexicographic order. There are
/// C(length + bound - 1, length) of them.
class WeaklyIncreasingSeq {
public:
    WeaklyIncreasingSeq(int bound, long long length);
    bool next(std::vector<int>& out);

private:
    int bound_;
    std::vector<int> current_;
    bool exhausted_ = false;
    bool started_ = false;
};

/// Convenience: the full lexicographic list.
std::vector<std::vector<int>> collect_weakly_increasing(int bound, long long length);

/// The tensor with rt's columns as elementary-tensor summands. Throws
/// std::domain_error if rt is inconsistent with n.
DenseTensor row_tuple_to_tensor(const RowTuple& rt, const Shape& n,
                                std::size_t max_entries = kDefaultMaxTensorEntries);

/// Inverse of row_tuple_to_tensor on width-one members: sorts the support
/// chain, expands multiplicities into columns, and reads off the rows.
RowTuple tensor_to_row_tuple(const DenseTensor& t);

/// Membership straight from the definition: nonnegative entries, entry
/// sum s, support a chain.
bool is_member(const DenseTensor& t, long long s);

/// Number of width-one tensors of shape n with entry sum s, with no
/// enumeration: prod_i C(s + n_i - 1, s).
BigInt count_members(const Shape& n, long long s);

/// Streams every width-one tensor of shape n with entry sum s exactly
/// once, in lexicographic row-tuple order. Construction throws GuardError
/// when count_members exceeds guards.max_enum.
class WidthOneStream {
public:
    WidthOneStream(Shape n, long long s, const Guards& guards = {});

    bool next(DenseTensor& out);
    bool next_rows(RowTuple& out);

    const BigInt& count() const { return count_; }

private:
    Shape n_;
    long long s_;
    std::size_t max_entries_;
    BigInt count_;
    std::vector<std::vector<std::vector<int>>> axis_rows_;
    std::vector<std::size_t> cursor_;
    bool exhausted_ = false;
    bool started_ = false;
};

/// Componentwise sum of the enumerated stream; OpenMP over the row-tuple
/// space with per-worker accumulators merged in worker order.
DenseTensor sigma_oracle(const Shape& n, long long s, const Guards& guards = {});

/// Slower second path that validates the row-tuple bijection itself:
/// enumerates every nonnegative tensor with entry sum s and filters by
/// is_member. Only for cell counts <= 9 and s <= 3.
DenseTensor sigma_membership_oracle(const Shape& n, long long s, const Guards& guards = {});

namespace serial {

/// Reference implementation: materializes each streamed tensor and
/// accumulates componentwise.
DenseTensor sigma_oracle(const Shape& n, long long s, const Guards& guards = {});

} // namespace serial

} // namespace widthone

#endif
