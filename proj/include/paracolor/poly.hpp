#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "paracolor/rational.hpp"

namespace paracolor {

// Element of Q[l], l the coupling parameter. Coefficients are kept in
// canonical form: no trailing zero coefficients, degree() of zero is -1.
class Poly {
 public:
  Poly() = default;
  Poly(long value);  // NOLINT(google-explicit-constructor)
  Poly(Rational value);  // NOLINT(google-explicit-constructor)
  static Poly lambda();
  static Poly from_coeffs(std::vector<Rational> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  // Coefficient of l^k, zero beyond the degree.
  const Rational& coeff(int k) const;

  Rational eval(const Rational& at) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const Poly& o) const { return coeffs_ != o.coeffs_; }

  // Total order used for sorting energy levels: compare values at l=3,
  // then coefficient sequences. At l=3 every energy in scope is distinct,
  // the tiebreak only pins the order for arbitrary inputs.
  bool operator<(const Poly& o) const;

  // Canonical text form, e.g. "0", "l+1", "2*l", "-3/2*l^2+1/2".
  std::string str() const;
  static Poly parse(std::string_view text);

 private:
  void trim();
  std::vector<Rational> coeffs_;  // coeffs_[k] multiplies l^k
};

}  // namespace paracolor
