#include "widthone/eulerian.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace widthone {

int eulerian_degree(const std::vector<int>& parts) {
    if (parts.empty()) throw std::domain_error("eulerian_degree: empty multiplicity");
    long long total = std::accumulate(parts.begin(), parts.end(), 0LL);
    int maxp = *std::max_element(parts.begin(), parts.end());
    return static_cast<int>(total - maxp);
}

IntPoly eulerian_poly_brute(const std::vector<int>& parts, int max_word_len) {
    MultisetPermutations stream(parts, max_word_len);
    long long total = std::accumulate(parts.begin(), parts.end(), 0LL);
    std::vector<BigInt> tally(static_cast<std::size_t>(total) + 1, BigInt(0));
    Word w;
    while (stream.next(w)) ++tally[static_cast<std::size_t>(descent_count(w))];
    return IntPoly(std::move(tally));
}

namespace {

BigInt newcomb_coeff(const std::vector<int>& parts, long long total, int k) {
    BigInt acc = 0;
    for (int l = 0; l <= k; ++l) {
        BigInt term = binomial(total + 1, l);
        for (int p : parts) term *= binomial(p + k - l, k - l);
        if (l % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

} // namespace

IntPoly eulerian_poly_closed(const std::vector<int>& parts) {
    if (parts.empty()) throw std::domain_error("eulerian_poly_closed: empty multiplicity");
    for (int p : parts)
        if (p < 0) throw std::domain_error("eulerian_poly_closed: negative multiplicity");
    const int deg = eulerian_degree(parts);
    const long long total = std::accumulate(parts.begin(), parts.end(), 0LL);
    std::vector<BigInt> coeffs(static_cast<std::size_t>(deg) + 1);
    for (int k = 0; k <= deg; ++k)
        coeffs[static_cast<std::size_t>(k)] = newcomb_coeff(parts, total, k);
    // The degree formula bounds the support; the alternating sum must
    // vanish beyond it.
    assert(newcomb_coeff(parts, total, deg + 1) == 0);
    return IntPoly(std::move(coeffs));
}

bool macmahon_check(const std::vector<int>& parts, int L) {
    const IntPoly a = eulerian_poly_closed(parts);
    const long long total = std::accumulate(parts.begin(), parts.end(), 0LL);
    const std::vector<BigInt> lhs = series_prefix(a, static_cast<int>(total) + 1, L + 1);
    for (int l = 0; l <= L; ++l) {
        BigInt rhs = 1;
        for (int p : parts) rhs *= binomial(p + l, l);
        if (lhs[static_cast<std::size_t>(l)] != rhs) return false;
    }
    return true;
}

} // namespace widthone
