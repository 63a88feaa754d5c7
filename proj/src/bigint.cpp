#include "widthone/bigint.hpp"

#include <stdexcept>

namespace widthone {

BigInt binomial(long long m, long long k) {
    if (m < 0) throw std::domain_error("binomial: m must be nonnegative");
    if (k < 0 || k > m) return 0;
    if (k > m - k) k = m - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= m - k + i;
        r /= i; // exact: r is C(m-k+i, i) after this step
    }
    return r;
}

BigInt multinomial(const std::vector<int>& parts) {
    BigInt r = 1;
    long long total = 0;
    for (int p : parts) {
        if (p < 0) throw std::domain_error("multinomial: negative part");
        total += p;
        r *= binomial(total, p);
    }
    return r;
}

std::string to_decimal(const BigInt& v) { return v.str(); }

} // namespace widthone
