#include "widthone/poly.hpp"

#include <stdexcept>

namespace widthone {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(BigInt c) {
    IntPoly p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

BigInt IntPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

BigInt IntPoly::coeff_sum() const {
    BigInt s = 0;
    for (const BigInt& c : coeffs_) s += c;
    return s;
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPoly(std::move(c));
}

void IntPoly::add_scaled(const BigInt& c, int shift, const IntPoly& other) {
    if (c == 0 || other.is_zero()) return;
    const std::size_t need = other.coeffs_.size() + static_cast<std::size_t>(shift);
    if (need > coeffs_.size()) coeffs_.resize(need);
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
        coeffs_[i + static_cast<std::size_t>(shift)] += c * other.coeffs_[i];
    trim();
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly one_minus_t_pow(int m) {
    if (m < 0) throw std::domain_error("one_minus_t_pow: negative exponent");
    std::vector<BigInt> c(static_cast<std::size_t>(m) + 1);
    for (int j = 0; j <= m; ++j) {
        BigInt b = binomial(m, j);
        c[static_cast<std::size_t>(j)] = (j % 2 == 0) ? b : -b;
    }
    return IntPoly(std::move(c));
}

std::vector<BigInt> series_prefix(const IntPoly& a, int m, int len) {
    if (m < 1) throw std::domain_error("series_prefix: m must be at least 1");
    std::vector<BigInt> out(static_cast<std::size_t>(len), BigInt(0));
    for (int l = 0; l < len; ++l) {
        BigInt acc = 0;
        const int jmax = std::min(l, a.degree());
        for (int j = 0; j <= jmax; ++j) acc += a.coeff(j) * binomial(m - 1 + l - j, l - j);
        out[static_cast<std::size_t>(l)] = acc;
    }
    return out;
}

} // namespace widthone
