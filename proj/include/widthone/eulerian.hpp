#ifndef WIDTHONE_EULERIAN_HPP
#define WIDTHONE_EULERIAN_HPP

#include "widthone/guards.hpp"
#include "widthone/poly.hpp"
#include "widthone/words.hpp"

#include <vector>

namespace widthone {

/// Degree of the descent polynomial over words with letter multiplicities
/// `parts`: sum(parts) - max(parts), and 0 when every part is 0.
int eulerian_degree(const std::vector<int>& parts);

/// Descent generating polynomial by direct enumeration of all words.
IntPoly eulerian_poly_brute(const std::vector<int>& parts,
                            int max_word_len = kDefaultMaxWordLen);

/// The same polynomial from the closed per-coefficient alternating sum
/// (Simon Newcomb numbers); no enumeration, any multiplicities.
IntPoly eulerian_poly_closed(const std::vector<int>& parts);

/// Checks that the first L+1 series coefficients of
/// A(t) / (1 - t)^(sum(parts) + 1) equal prod_i C(parts_i + l, l).
bool macmahon_check(const std::vector<int>& parts, int L);

} // namespace widthone

#endif
