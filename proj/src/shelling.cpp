#include "widthone/shelling.hpp"

#include "widthone/eulerian.hpp"
#include "widthone/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace widthone {

FacetStream::FacetStream(const MultiIndex& x, int max_word_len)
    : perms_(coords_below(x), max_word_len) {}

BigInt facet_count(const MultiIndex& x) { return multinomial(coords_below(x)); }

std::vector<MultiIndex> labels_to_chain(const Word& w, int rank) {
    if (rank < 1) throw std::domain_error("labels_to_chain: rank must be at least 1");
    std::vector<MultiIndex> chain;
    chain.reserve(w.size() + 1);
    MultiIndex p = all_ones(rank);
    chain.push_back(p);
    for (std::size_t j = 0; j < w.size(); ++j) {
        if (w[j] < 1 || w[j] > rank)
            throw std::domain_error("label " + std::to_string(j + 1) + " out of range [1, " +
                                    std::to_string(rank) + "]");
        p[w[j] - 1] += 1;
        chain.push_back(p);
    }
    return chain;
}

Word chain_to_labels(const std::vector<MultiIndex>& chain) {
    if (chain.empty()) throw std::domain_error("chain_to_labels: empty chain");
    if (chain.front() != all_ones(chain.front().rank()))
        throw std::domain_error("chain_to_labels: chain must start at the bottom element");
    Word w;
    w.reserve(chain.size() - 1);
    for (std::size_t j = 0; j + 1 < chain.size(); ++j) {
        const MultiIndex& a = chain[j];
        const MultiIndex& b = chain[j + 1];
        if (a.rank() != b.rank()) throw std::domain_error("chain_to_labels: rank mismatch");
        int step_axis = 0, steps = 0;
        for (int i = 0; i < a.rank(); ++i) {
            if (b[i] == a[i] + 1) {
                step_axis = i + 1;
                ++steps;
            } else if (b[i] != a[i]) {
                throw std::domain_error("chain_to_labels: link " + std::to_string(j + 1) +
                                        " is not a covering step");
            }
        }
        if (steps != 1)
            throw std::domain_error("chain_to_labels: link " + std::to_string(j + 1) +
                                    " is not a covering step");
        w.push_back(step_axis);
    }
    return w;
}

std::vector<MultiIndex> restriction_set(const Word& w, int rank) {
    const std::vector<MultiIndex> chain = labels_to_chain(w, rank);
    std::vector<MultiIndex> r;
    for (std::size_t j = 0; j + 1 < w.size(); ++j)
        if (w[j] > w[j + 1]) r.push_back(chain[j + 1]);
    return r;
}

IntPoly h_poly_shelling(const MultiIndex& x, const Guards& guards) {
    FacetStream facets(x, guards.max_word_len);
    const int rank = x.rank();
    std::vector<BigInt> tally(static_cast<std::size_t>(x.coord_sum() - rank) + 1, BigInt(0));
    Word w;
    while (facets.next(w))
        ++tally[restriction_set(w, rank).size()];
    return IntPoly(std::move(tally));
}

std::vector<BigInt> f_vector(const MultiIndex& x, const Guards& guards) {
    const Shape grid(x.coords());
    const std::size_t cells = grid.cell_count();
    if (cells > guards.max_enum)
        throw GuardError("max_enum", std::to_string(cells), std::to_string(guards.max_enum));

    const std::size_t max_len = static_cast<std::size_t>(x.coord_sum() - x.rank()) + 1;

    // points in offset order; product_leq respects no particular offset
    // order, so chains are extended from every strictly smaller point
    std::vector<MultiIndex> points;
    points.reserve(cells);
    for (std::size_t off = 0; off < cells; ++off) points.push_back(multi_index(grid, off));

    // ending_at[p][c] = number of chains of cardinality c+1 with top p
    std::vector<std::vector<BigInt>> ending_at(cells, std::vector<BigInt>(max_len, BigInt(0)));

    // process by coordinate sum so that all predecessors are done first
    std::vector<std::size_t> order(cells);
    for (std::size_t i = 0; i < cells; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return points[a].coord_sum() < points[b].coord_sum();
    });

    for (std::size_t oi = 0; oi < cells; ++oi) {
        const std::size_t p = order[oi];
        ending_at[p][0] = 1;
        for (std::size_t oj = 0; oj < oi; ++oj) {
            const std::size_t q = order[oj];
            if (points[q].coord_sum() < points[p].coord_sum() &&
                product_leq(points[q], points[p])) {
                for (std::size_t c = 1; c < max_len; ++c)
                    ending_at[p][c] += ending_at[q][c - 1];
            }
        }
    }

    std::vector<BigInt> f(max_len + 1, BigInt(0));
    f[0] = 1; // the empty face
    for (std::size_t p = 0; p < cells; ++p)
        for (std::size_t c = 0; c < max_len; ++c) f[c + 1] += ending_at[p][c];
    return f;
}

IntPoly h_from_f(const std::vector<BigInt>& f) {
    if (f.empty() || f[0] != 1)
        throw std::domain_error("h_from_f: face counts must start with f_minus1 = 1");
    const int a = static_cast<int>(f.size()) - 1;
    IntPoly h;
    for (int i = 0; i <= a; ++i)
        h.add_scaled(f[static_cast<std::size_t>(i)], i, one_minus_t_pow(a - i));
    return h;
}

bool verify_lemma_hpoly(const MultiIndex& x, const Guards& guards) {
    const IntPoly by_shelling = h_poly_shelling(x, guards);
    const IntPoly by_descents = eulerian_poly_closed(coords_below(x));
    const IntPoly by_faces = h_from_f(f_vector(x, guards));
    return by_shelling == by_descents && by_descents == by_faces;
}

BigInt facet_coeff_count(const Shape& n, const MultiIndex& x, int k, const Guards& guards) {
    require_in_grid(n, x);
    const int rank = n.rank();

    // upper part: chains from x to the corner are chains of a grid of
    // extents n - x + 1, translated back by x - 1
    std::vector<Coord> upper_extents(static_cast<std::size_t>(rank));
    for (int i = 0; i < rank; ++i)
        upper_extents[static_cast<std::size_t>(i)] = n.dim(i) - x[i] + 1;
    const MultiIndex upper_corner(upper_extents);

    BigInt matching = 0;
    FacetStream lower(x, guards.max_word_len);
    Word wl;
    while (lower.next(wl)) {
        FacetStream upper(upper_corner, guards.max_word_len);
        Word wu;
        while (upper.next(wu)) {
            Word combined(wl);
            combined.insert(combined.end(), wu.begin(), wu.end());
            std::vector<MultiIndex> r = restriction_set(combined, rank);
            std::erase(r, x);
            if (static_cast<int>(r.size()) == k) matching += 1;
        }
    }
    return matching;
}

bool verify_facet_coeff(const Shape& n, const MultiIndex& x, int k, const Guards& guards) {
    const IntPoly product =
        eulerian_poly_closed(coords_below(x)) * eulerian_poly_closed(coords_above(n, x));
    return product.coeff(k) == facet_coeff_count(n, x, k, guards);
}

bool verify_exponent_count(const Shape& n, long long s, long long k, const Guards& guards) {
    const long long parts = n.coord_sum() - n.rank() + 1;
    const long long degree = s - k - 1;
    const BigInt lhs = binomial(n.coord_sum() - n.rank() + s - k, degree);

    if (degree < 0) return lhs == 0;

    const BigInt composition_count = binomial(degree + parts - 1, degree);
    if (composition_count > guards.max_enum)
        throw GuardError("max_enum", composition_count.str(), std::to_string(guards.max_enum));

    // sum of (first part + 1) over weak compositions of `degree` into
    // `parts` parts; recursion over the remaining parts
    BigInt rhs = 0;
    std::vector<long long> c(static_cast<std::size_t>(parts), 0);
    auto place = [&](auto&& self, std::size_t pos, long long remaining) -> void {
        if (pos + 1 == c.size()) {
            c[pos] = remaining;
            rhs += c[0] + 1;
            return;
        }
        for (long long v = 0; v <= remaining; ++v) {
            c[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    if (parts == 1) {
        rhs = degree + 1;
    } else {
        place(place, 0, degree);
    }
    return lhs == rhs;
}

bool hilbert_series_check(const Shape& n, int L) {
    const IntPoly numerator = eulerian_poly_closed(coords_below(MultiIndex(n.dims())));
    const int denom_pow = static_cast<int>(n.coord_sum()) - n.rank() + 1;
    const std::vector<BigInt> series = series_prefix(numerator, denom_pow, L + 1);
    for (int l = 0; l <= L; ++l) {
        BigInt expected = 1;
        for (int i = 0; i < n.rank(); ++i) expected *= binomial(n.dim(i) + l - 1, l);
        if (series[static_cast<std::size_t>(l)] != expected) return false;
        // the degree-l monomial basis is the width-one set with entry sum l
        if (series[static_cast<std::size_t>(l)] != count_members(n, l)) return false;
    }
    return true;
}

std::vector<std::vector<MultiIndex>> restrictions_by_inclusion(const MultiIndex& x,
                                                               const Guards& guards) {
    using Face = std::vector<MultiIndex>; // sorted by coordinate sum, so canonical on chains

    FacetStream facets(x, guards.max_word_len);
    std::set<Face> seen;
    std::vector<std::vector<MultiIndex>> restrictions;
    Word w;
    while (facets.next(w)) {
        const std::vector<MultiIndex> chain = labels_to_chain(w, x.rank());
        const std::size_t m = chain.size();
        if (m > 8 * sizeof(unsigned long long))
            throw GuardError("max_word_len", std::to_string(m), "64");

        // subsets of the facet map to bitmasks; subset order = mask inclusion
        const auto face_of = [&chain, m](unsigned long long mask) {
            Face face;
            for (std::size_t b = 0; b < m; ++b)
                if (mask & (1ULL << b)) face.push_back(chain[b]);
            return face;
        };

        std::vector<unsigned long long> fresh;
        for (unsigned long long mask = 0; mask < (1ULL << m); ++mask)
            if (seen.find(face_of(mask)) == seen.end()) fresh.push_back(mask);
        if (fresh.empty())
            throw std::logic_error("facet contributes no new face; not a shelling order");

        std::vector<unsigned long long> minimal;
        for (unsigned long long f : fresh) {
            bool has_smaller = false;
            for (unsigned long long g : fresh)
                if (g != f && (g & f) == g) { has_smaller = true; break; }
            if (!has_smaller) minimal.push_back(f);
        }
        if (minimal.size() != 1)
            throw std::logic_error("minimal new face is not unique; not a shelling order");

        restrictions.push_back(face_of(minimal.front()));

        // add the whole power set of this facet to the subcomplex
        for (unsigned long long mask = 0; mask < (1ULL << m); ++mask) seen.insert(face_of(mask));
    }
    return restrictions;
}

} // namespace widthone
