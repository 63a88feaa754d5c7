#ifndef WIDTHONE_BIGINT_HPP
#define WIDTHONE_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace widthone {

using BigInt = boost::multiprecision::cpp_int;

/// C(m, k) for m >= 0, with C(m, k) = 0 whenever k < 0 or k > m.
/// Computed as a running product with exact division, so the arguments may
/// grow with |n| + s without any factorial table.
BigInt binomial(long long m, long long k);

/// |p|! / (p_1! ... p_d!) as a product of binomials of partial sums.
BigInt multinomial(const std::vector<int>& parts);

std::string to_decimal(const BigInt& v);

} // namespace widthone

#endif
