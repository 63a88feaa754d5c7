#ifndef WIDTHONE_POLY_HPP
#define WIDTHONE_POLY_HPP

#include "widthone/bigint.hpp"

#include <vector>

namespace widthone {

/// Dense integer polynomial, coeffs()[k] = coefficient of t^k, trailing
/// zeros trimmed. The zero polynomial has an empty coefficient list and
/// degree -1. Degrees here stay tiny (at most |n|), so dense convolution
/// is the right arithmetic.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);

    static IntPoly constant(BigInt c);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of t^k; zero outside the support.
    BigInt coeff(int k) const;

    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    BigInt coeff_sum() const;

    IntPoly& operator+=(const IntPoly& other);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { a += b; return a; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);

    /// this += c * t^shift * other.
    void add_scaled(const BigInt& c, int shift, const IntPoly& other);

    bool operator==(const IntPoly&) const = default;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

/// (1 - t)^m expanded exactly, m >= 0.
IntPoly one_minus_t_pow(int m);

/// First `len` coefficients of a(t) * (1 - t)^(-m), m >= 1, i.e. of the
/// exact power-series product with the geometric-type series whose
/// coefficient of t^l is C(m - 1 + l, l).
std::vector<BigInt> series_prefix(const IntPoly& a, int m, int len);

} // namespace widthone

#endif
