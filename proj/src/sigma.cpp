#include "widthone/sigma.hpp"

#include <algorithm>
#include <stdexcept>

namespace widthone {

long long omega(const Shape& n, const MultiIndex& x) {
    require_in_grid(n, x);
    long long max_above = 0;
    for (int i = 0; i < n.rank(); ++i)
        max_above = std::max<long long>(max_above, n.dim(i) - x[i]);
    return n.coord_sum() - x.max_coord() - max_above - n.rank() + 1;
}

BigInt sigma_entry_tableaux(const Shape& n, long long s, const MultiIndex& x) {
    require_in_grid(n, x);
    if (s < 0) throw std::domain_error("sigma_entry_tableaux: negative entry sum");
    BigInt acc = 0;
    for (long long j = 1; j <= s; ++j) {
        BigInt term = 1;
        for (int i = 0; i < n.rank(); ++i) {
            term *= binomial(x[i] + j - 2, j - 1);
            if (term == 0) break;
            term *= binomial(n.dim(i) - x[i] + s - j, s - j);
            if (term == 0) break;
        }
        acc += term;
    }
    return acc;
}

void EulerianCache::prepare(const Shape& n) {
    // Sorted bounds: an ascending multiplicity vector q is realizable below
    // n iff q_i <= b_i with b = sort(n - 1) ascending (match largest to
    // largest).
    std::vector<int> bounds(n.dims().size());
    for (std::size_t i = 0; i < bounds.size(); ++i) bounds[i] = n.dims()[i] - 1;
    std::sort(bounds.begin(), bounds.end());

    std::vector<int> q(bounds.size(), 0);
    auto walk = [&](auto&& self, std::size_t pos, int low) -> void {
        if (pos == q.size()) {
            if (store_.find(q) == store_.end()) store_.emplace(q, eulerian_poly_closed(q));
            return;
        }
        for (int v = low; v <= bounds[pos]; ++v) {
            q[pos] = v;
            self(self, pos + 1, v);
        }
    };
    walk(walk, 0, 0);
}

const IntPoly& EulerianCache::closed(const std::vector<int>& parts) const {
    std::vector<int> key(parts);
    std::sort(key.begin(), key.end());
    auto it = store_.find(key);
    if (it == store_.end())
        throw std::logic_error("EulerianCache: multiplicity vector not prepared");
    return it->second;
}

const IntPoly& EulerianCache::closed_or_insert(const std::vector<int>& parts) {
    std::vector<int> key(parts);
    std::sort(key.begin(), key.end());
    auto it = store_.find(key);
    if (it == store_.end()) it = store_.emplace(key, eulerian_poly_closed(key)).first;
    return it->second;
}

namespace {

BigInt entry_hpoly_from_polys(const Shape& n, long long s, const MultiIndex& x,
                              const IntPoly& below, const IntPoly& above) {
    if (s < 0) throw std::domain_error("sigma_entry_hpoly: negative entry sum");
    if (s == 0) return 0;
    const IntPoly product = below * above;
    const long long kmax = std::min(omega(n, x), s - 1);
    const long long nd = n.coord_sum() - n.rank();
    BigInt acc = 0;
    for (long long k = 0; k <= kmax; ++k)
        acc += binomial(nd + s - k, s - k - 1) * product.coeff(static_cast<int>(k));
    return acc;
}

} // namespace

BigInt sigma_entry_hpoly(const Shape& n, long long s, const MultiIndex& x) {
    require_in_grid(n, x);
    return entry_hpoly_from_polys(n, s, x, eulerian_poly_closed(coords_below(x)),
                                  eulerian_poly_closed(coords_above(n, x)));
}

BigInt sigma_entry_hpoly(const Shape& n, long long s, const MultiIndex& x,
                         const EulerianCache& cache) {
    require_in_grid(n, x);
    return entry_hpoly_from_polys(n, s, x, cache.closed(coords_below(x)),
                                  cache.closed(coords_above(n, x)));
}

DenseTensor sigma_tableaux(const Shape& n, long long s, const Guards& guards) {
    DenseTensor out(n, guards.max_tensor_entries);
    const long long cells = static_cast<long long>(out.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (long long off = 0; off < cells; ++off)
        out[static_cast<std::size_t>(off)] =
            sigma_entry_tableaux(n, s, multi_index(n, static_cast<std::size_t>(off)));
    return out;
}

DenseTensor sigma_hpoly(const Shape& n, long long s, const Guards& guards) {
    DenseTensor out(n, guards.max_tensor_entries);
    EulerianCache cache;
    cache.prepare(n);
    const EulerianCache& shared = cache;
    const long long cells = static_cast<long long>(out.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (long long off = 0; off < cells; ++off)
        out[static_cast<std::size_t>(off)] =
            sigma_entry_hpoly(n, s, multi_index(n, static_cast<std::size_t>(off)), shared);
    return out;
}

namespace serial {

DenseTensor sigma_tableaux(const Shape& n, long long s, const Guards& guards) {
    DenseTensor out(n, guards.max_tensor_entries);
    for (std::size_t off = 0; off < out.size(); ++off)
        out[off] = sigma_entry_tableaux(n, s, multi_index(n, off));
    return out;
}

DenseTensor sigma_hpoly(const Shape& n, long long s, const Guards& guards) {
    DenseTensor out(n, guards.max_tensor_entries);
    EulerianCache cache;
    for (std::size_t off = 0; off < out.size(); ++off) {
        const MultiIndex x = multi_index(n, off);
        cache.closed_or_insert(coords_below(x));
        cache.closed_or_insert(coords_above(n, x));
        out[off] = sigma_entry_hpoly(n, s, x, cache);
    }
    return out;
}

} // namespace serial

} // namespace widthone
