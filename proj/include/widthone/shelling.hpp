#ifndef WIDTHONE_SHELLING_HPP
#define WIDTHONE_SHELLING_HPP

#include "widthone/bigint.hpp"
#include "widthone/grid.hpp"
#include "widthone/guards.hpp"
#include "widthone/poly.hpp"
#include "widthone/words.hpp"

#include <vector>

namespace widthone {

/// Facets of the order complex of the grid below x are the maximal chains
/// from (1,...,1) to x; their edge-label words (letter i for a step of
/// e_i) are exactly the words with letter multiplicities x - 1. The stream
/// yields them in lexicographic order, which here is the shelling order.
class FacetStream {
public:
    explicit FacetStream(const MultiIndex& x, int max_word_len = kDefaultMaxWordLen);
    bool next(Word& out) { return perms_.next(out); }
    const BigInt& count() const { return perms_.count(); }

private:
    MultisetPermutations perms_;
};

/// Number of maximal chains from the bottom to x, without enumeration.
BigInt facet_count(const MultiIndex& x);

/// Chain from (1,...,1) adding e_{w_j} at step j. rank is the ambient
/// dimension d; letters must lie in [1, rank].
std::vector<MultiIndex> labels_to_chain(const Word& w, int rank);

/// Inverse of labels_to_chain: the chain must be saturated and start at
/// the bottom element.
Word chain_to_labels(const std::vector<MultiIndex>& chain);

/// Points of the chain reached right after each descent of the label
/// word. With the lexicographic shelling these are exactly the minimal
/// new faces' elements.
std::vector<MultiIndex> restriction_set(const Word& w, int rank);

/// h-polynomial by shelling: sum of t^(restriction size) over facets.
IntPoly h_poly_shelling(const MultiIndex& x, const Guards& guards = {});

/// Face counts (f_-1, f_0, ..., f_(a-1)) of the order complex below x,
/// by chain-counting dynamic programming over the grid.
std::vector<BigInt> f_vector(const MultiIndex& x, const Guards& guards = {});

/// h-polynomial from a face-count vector:
/// sum_{i=0..a} f_{i-1} t^i (1-t)^(a-i), expanded exactly.
IntPoly h_from_f(const std::vector<BigInt>& f);

/// Three-way check: shelling h-polynomial == closed descent polynomial of
/// x - 1 == binomial transform of the f-vector.
bool verify_lemma_hpoly(const MultiIndex& x, const Guards& guards = {});

/// Number of maximal chains of the full grid through x whose restriction,
/// with x removed, has exactly k elements. Enumerated by splicing a chain
/// below x with a translated chain above x.
BigInt facet_coeff_count(const Shape& n, const MultiIndex& x, int k,
                         const Guards& guards = {});

/// Checks facet_coeff_count against [t^k] A(x-1) * A(n-x).
bool verify_facet_coeff(const Shape& n, const MultiIndex& x, int k,
                        const Guards& guards = {});

/// Checks the facet-wise exponent count: C(|n| - d + s - k, s - k - 1)
/// must equal the sum of (c_slot + 1) over all weak compositions c of
/// s - k - 1 into |n| - d + 1 parts, slot fixed. Direct enumeration.
bool verify_exponent_count(const Shape& n, long long s, long long k,
                           const Guards& guards = {});

/// Checks that the first L+1 coefficients of
/// A(n-1)(t) / (1-t)^(|n| - d + 1) equal prod_i C(n_i + l - 1, l), and
/// that each coefficient equals the number of width-one tensors with
/// entry sum l (the degree-l monomial basis).
bool hilbert_series_check(const Shape& n, int L);

/// Slow reference for the restriction sets: walks the facets in shelling
/// order and computes each facet's minimal new face directly against the
/// subcomplex generated so far. Throws std::logic_error if some facet has
/// no unique minimal new face. Intended for small validation complexes.
std::vector<std::vector<MultiIndex>> restrictions_by_inclusion(const MultiIndex& x,
                                                               const Guards& guards = {});

} // namespace widthone

#endif
