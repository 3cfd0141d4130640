#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "kacmult/errors.hpp"

namespace kacmult {

namespace detail {

// Exact ring operations: built-in integers are overflow-checked, any other
// scalar (e.g. a multiprecision integer) is used as is.
template <class S>
S add(const S& a, const S& b) {
  if constexpr (std::is_integral_v<S>) {
    S r;
    if (__builtin_add_overflow(a, b, &r)) throw Error("polynomial coefficient overflow (add)");
    return r;
  } else {
    return a + b;
  }
}

template <class S>
S sub(const S& a, const S& b) {
  if constexpr (std::is_integral_v<S>) {
    S r;
    if (__builtin_sub_overflow(a, b, &r)) throw Error("polynomial coefficient overflow (sub)");
    return r;
  } else {
    return a - b;
  }
}

template <class S>
S mul(const S& a, const S& b) {
  if constexpr (std::is_integral_v<S>) {
    S r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error("polynomial coefficient overflow (mul)");
    return r;
  } else {
    return a * b;
  }
}

}  // namespace detail

/// Dense univariate polynomial in q over a commutative ring of scalars.
/// Coefficients are indexed by power of q; trailing zeros are always trimmed,
/// so the zero polynomial has an empty coefficient list.
template <class Scalar>
class Poly {
 public:
  using scalar_type = Scalar;

  Poly() = default;
  Poly(Scalar constant) {  // NOLINT(google-explicit-constructor)
    if (constant != Scalar(0)) coeffs_.push_back(constant);
  }
  Poly(std::initializer_list<Scalar> c) : coeffs_(c) { trim(); }
  explicit Poly(std::vector<Scalar> c) : coeffs_(std::move(c)) { trim(); }

  /// c * q^k
  static Poly monomial(Scalar c, int k) {
    Poly p;
    if (c != Scalar(0)) {
      p.coeffs_.assign(static_cast<std::size_t>(k) + 1, Scalar(0));
      p.coeffs_.back() = c;
    }
    return p;
  }

  /// (-q)^k
  static Poly neg_q_power(int k) { return monomial(k % 2 ? Scalar(-1) : Scalar(1), k); }

  const std::vector<Scalar>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Scalar coefficient(int k) const {
    return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<std::size_t>(k)]
                                                          : Scalar(0);
  }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == Scalar(1); }

  Scalar evaluate(const Scalar& x) const {
    Scalar acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = detail::add(detail::mul(acc, x), *it);
    return acc;
  }

  /// Truncation to degrees < k.
  Poly truncated(int k) const {
    Poly p;
    p.coeffs_.assign(coeffs_.begin(), coeffs_.begin() + std::clamp(k, 0, degree() + 1));
    p.trim();
    return p;
  }

  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] = detail::add(coeffs_[k], o.coeffs_[k]);
    trim();
    return *this;
  }

  Poly& operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] = detail::sub(coeffs_[k], o.coeffs_[k]);
    trim();
    return *this;
  }

  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& c : a.coeffs_) c = detail::sub(Scalar(0), c);
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == Scalar(0)) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        out[i + j] = detail::add(out[i + j], detail::mul(a.coeffs_[i], b.coeffs_[j]));
    }
    return Poly(std::move(out));
  }
  friend bool operator==(const Poly&, const Poly&) = default;

  friend Poly pow(Poly base, int e) {
    Poly acc(Scalar(1));
    while (e > 0) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  /// Human-readable form, e.g. "1 - 2q + q^2"; "0" for zero.
  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      Scalar c = coeffs_[k];
      if (c == Scalar(0)) continue;
      const bool neg = c < Scalar(0);
      Scalar mag = neg ? Scalar(0) - c : c;
      if (first)
        os << (neg ? "-" : "");
      else
        os << (neg ? " - " : " + ");
      first = false;
      if (k == 0 || mag != Scalar(1)) os << mag;
      if (k >= 1) os << 'q';
      if (k >= 2) os << '^' << k;
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == Scalar(0)) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

/// Integer-coefficient polynomial used for multiplicity and KL matrices.
using QPolynomial = Poly<std::int64_t>;

}  // namespace kacmult
