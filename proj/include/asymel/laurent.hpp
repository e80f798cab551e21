#pragma once

#include <complex>
#include <cstdlib>
#include <initializer_list>
#include <map>
#include <utility>

#include "asymel/errors.hpp"

namespace asymel {

using Complex = std::complex<double>;

/// Finite Laurent series f(z) = sum_n c_n z^n over integer exponents.
class LaurentPotential {
 public:
  LaurentPotential() = default;
  LaurentPotential(std::initializer_list<std::pair<const int, Complex>> terms) {
    for (const auto& [n, c] : terms) add_term(n, c);
  }

  void add_term(int exponent, Complex coefficient) {
    Complex& slot = terms_[exponent];
    slot += coefficient;
    if (slot == Complex{}) terms_.erase(exponent);
  }

  Complex coefficient(int exponent) const {
    const auto it = terms_.find(exponent);
    return it == terms_.end() ? Complex{} : it->second;
  }

  const std::map<int, Complex>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  /// True when some term has a negative exponent (pole at the origin).
  bool singular_at_origin() const noexcept { return !terms_.empty() && terms_.begin()->first < 0; }

  Complex operator()(Complex z) const {
    if (z == Complex{} && singular_at_origin())
      throw DomainViolation("Laurent potential evaluated at its pole z = 0");
    Complex sum{};
    for (const auto& [n, c] : terms_) sum += c * integer_power(z, n);
    return sum;
  }

  /// sum c_n r^n e^{i (n + shift) theta}, i.e. f(z) e^{i shift theta} at z = r e^{i theta}.
  /// Terms with n + shift = 0 carry no angular rounding.
  Complex polar(double r, double theta, int shift = 0) const {
    if (r == 0.0 && singular_at_origin()) throw DomainViolation("Laurent potential evaluated at its pole z = 0");
    Complex sum{};
    for (const auto& [n, c] : terms_) {
      const int k = n + shift;
      const Complex phase = k == 0 ? Complex{1.0, 0.0} : std::polar(1.0, k * theta);
      sum += c * std::pow(r, n) * phase;
    }
    return sum;
  }

  LaurentPotential derivative() const {
    LaurentPotential d;
    for (const auto& [n, c] : terms_) {
      if (n != 0) d.add_term(n - 1, c * static_cast<double>(n));
    }
    return d;
  }

  LaurentPotential& operator+=(const LaurentPotential& other) {
    for (const auto& [n, c] : other.terms_) add_term(n, c);
    return *this;
  }

  LaurentPotential& operator*=(Complex s) {
    if (s == Complex{}) {
      terms_.clear();
      return *this;
    }
    for (auto& [n, c] : terms_) c *= s;
    return *this;
  }

  friend LaurentPotential operator+(LaurentPotential a, const LaurentPotential& b) { return a += b; }
  friend LaurentPotential operator*(Complex s, LaurentPotential a) { return a *= s; }

  /// z^n by repeated squaring; negative n inverts first.
  static Complex integer_power(Complex z, int n) {
    if (n == 0) return {1.0, 0.0};
    Complex base = n > 0 ? z : Complex{1.0, 0.0} / z;
    unsigned k = static_cast<unsigned>(std::abs(n));
    Complex result{1.0, 0.0};
    while (k != 0) {
      if (k & 1u) result *= base;
      base *= base;
      k >>= 1u;
    }
    return result;
  }

 private:
  std::map<int, Complex> terms_;
};

}  // namespace asymel
