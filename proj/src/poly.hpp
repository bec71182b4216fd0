// SPDX-License-Identifier: Apache-2.0
//
// Dense univariate polynomials over the complex numbers, power basis.
// Used for divisor polynomials, dual numerators, Bezout identities and
// the truncated-Taylor (jet) arithmetic behind residue evaluation.

#ifndef EXTDISC_POLY_HPP
#define EXTDISC_POLY_HPP

#include <complex>
#include <vector>

namespace extdisc {

using Complex = std::complex<double>;

class Poly {
public:
  Poly() : c_{Complex(0.0, 0.0)} {}
  explicit Poly(std::vector<Complex> coeffs);  // coeffs[k] multiplies z^k
  static Poly constant(Complex a) { return Poly({a}); }
  static Poly monomial(int degree, Complex lead = Complex(1.0));
  static Poly from_roots(const std::vector<Complex>& roots);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Complex>& coeffs() const { return c_; }
  Complex coeff(int k) const;
  bool is_zero(double tol = 0.0) const;
  double max_abs_coeff() const;

  Complex eval(Complex z) const;
  // Value and first `order` derivatives at z (order+1 entries).
  std::vector<Complex> derivatives(Complex z, int order) const;
  // Taylor coefficients of the expansion about z, up to order (order+1 entries).
  std::vector<Complex> taylor(Complex z, int order) const;
  Poly derivative() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(Complex s) const;
  Poly& trim(double tol = 0.0);

  // Synthetic division by (z - root): returns quotient, stores the remainder.
  Poly deflate(Complex root, Complex* remainder = nullptr) const;

  // All roots via the companion matrix (empty for constants).
  std::vector<Complex> roots() const;

private:
  std::vector<Complex> c_;
};

// Truncated power-series helpers on Taylor-coefficient vectors (index = order).
std::vector<Complex> series_mul(const std::vector<Complex>& a,
                                const std::vector<Complex>& b, int order);
// a/b with b[0] != 0.
std::vector<Complex> series_div(const std::vector<Complex>& a,
                                const std::vector<Complex>& b, int order);

}  // namespace extdisc

#endif
