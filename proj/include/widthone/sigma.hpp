#ifndef WIDTHONE_SIGMA_HPP
#define WIDTHONE_SIGMA_HPP

#include "widthone/bigint.hpp"
#include "widthone/eulerian.hpp"
#include "widthone/grid.hpp"
#include "widthone/guards.hpp"
#include "widthone/tensor.hpp"

#include <map>
#include <vector>

namespace widthone {

/// Degree bound |n| - max(x) - max(n-x) - d + 1 for the coefficient sum at
/// x; equals the degree of the descent-polynomial product used there.
long long omega(const Shape& n, const MultiIndex& x);

/// One component of the width-one sum via the row/binomial formula:
/// sum over column positions j = 1..s of
///   prod_i C(x_i + j - 2, j - 1) * C(n_i - x_i + s - j, s - j).
BigInt sigma_entry_tableaux(const Shape& n, long long s, const MultiIndex& x);

/// Descent polynomials memoized by sorted multiplicity vector (the
/// polynomial only depends on the multiset of parts). prepare() fills
/// everything a shape can demand so later lookups are read-only and safe
/// to share across threads.
class EulerianCache {
public:
    /// Precompute all polynomials for multiplicity vectors p with
    /// 0 <= p_i <= n_i - 1 up to part reordering. Single-threaded.
    void prepare(const Shape& n);

    /// Read-only lookup; throws std::logic_error when absent.
    const IntPoly& closed(const std::vector<int>& parts) const;

    /// Lookup that fills misses; single-consumer use only.
    const IntPoly& closed_or_insert(const std::vector<int>& parts);

    std::size_t size() const { return store_.size(); }

private:
    std::map<std::vector<int>, IntPoly> store_;
};

/// One component via the coefficient-extraction formula:
/// sum over k = 0..min(omega(n,x), s-1) of
///   C(|n| - d + s - k, s - k - 1) * [t^k] A(x-1) * A(n-x),
/// where A(p) is the descent polynomial over words with multiplicities p.
BigInt sigma_entry_hpoly(const Shape& n, long long s, const MultiIndex& x);
BigInt sigma_entry_hpoly(const Shape& n, long long s, const MultiIndex& x,
                         const EulerianCache& cache);

/// Full tensors; OpenMP kernels partitioning the grid by entry. Results
/// are bit-identical to the serial references regardless of schedule.
DenseTensor sigma_tableaux(const Shape& n, long long s, const Guards& guards = {});
DenseTensor sigma_hpoly(const Shape& n, long long s, const Guards& guards = {});

namespace serial {

DenseTensor sigma_tableaux(const Shape& n, long long s, const Guards& guards = {});
DenseTensor sigma_hpoly(const Shape& n, long long s, const Guards& guards = {});

} // namespace serial

} // namespace widthone

#endif
