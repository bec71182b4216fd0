// SPDX-License-Identifier: Apache-2.0

#include "poly.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "errors.hpp"

namespace extdisc {

Poly::Poly(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) c_.push_back(Complex(0.0));
}

Poly Poly::monomial(int degree, Complex lead) {
  if (degree < 0) fail(ErrorCode::InvalidArgument, "monomial degree < 0");
  std::vector<Complex> c(degree + 1, Complex(0.0));
  c[degree] = lead;
  return Poly(std::move(c));
}

Poly Poly::from_roots(const std::vector<Complex>& roots) {
  Poly p = Poly::constant(Complex(1.0));
  for (Complex r : roots) p = p * Poly({-r, Complex(1.0)});
  return p;
}

Complex Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Complex(0.0);
  return c_[k];
}

bool Poly::is_zero(double tol) const {
  for (Complex a : c_)
    if (std::abs(a) > tol) return false;
  return true;
}

double Poly::max_abs_coeff() const {
  double m = 0.0;
  for (Complex a : c_) m = std::max(m, std::abs(a));
  return m;
}

Complex Poly::eval(Complex z) const {
  Complex acc(0.0);
  for (int k = degree(); k >= 0; --k) acc = acc * z + c_[k];
  return acc;
}

std::vector<Complex> Poly::derivatives(Complex z, int order) const {
  // Horner recurrence producing f, f', ..., f^(order).
  std::vector<Complex> out(order + 1, Complex(0.0));
  for (int k = degree(); k >= 0; --k) {
    for (int j = std::min(order, degree() - k); j >= 1; --j)
      out[j] = out[j] * z + out[j - 1] * static_cast<double>(j);
    out[0] = out[0] * z + c_[k];
  }
  return out;
}

std::vector<Complex> Poly::taylor(Complex z, int order) const {
  std::vector<Complex> d = derivatives(z, order);
  double fact = 1.0;
  for (int j = 1; j <= order; ++j) {
    fact *= j;
    d[j] /= fact;
  }
  return d;
}

Poly Poly::derivative() const {
  if (degree() == 0) return Poly::constant(Complex(0.0));
  std::vector<Complex> d(degree());
  for (int k = 1; k <= degree(); ++k) d[k - 1] = c_[k] * static_cast<double>(k);
  return Poly(std::move(d));
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Complex> r(std::max(c_.size(), o.c_.size()), Complex(0.0));
  for (size_t k = 0; k < c_.size(); ++k) r[k] += c_[k];
  for (size_t k = 0; k < o.c_.size(); ++k) r[k] += o.c_[k];
  return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<Complex> r(std::max(c_.size(), o.c_.size()), Complex(0.0));
  for (size_t k = 0; k < c_.size(); ++k) r[k] += c_[k];
  for (size_t k = 0; k < o.c_.size(); ++k) r[k] -= o.c_[k];
  return Poly(std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  std::vector<Complex> r(c_.size() + o.c_.size() - 1, Complex(0.0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return Poly(std::move(r));
}

Poly Poly::operator*(Complex s) const {
  std::vector<Complex> r(c_);
  for (Complex& a : r) a *= s;
  return Poly(std::move(r));
}

Poly& Poly::trim(double tol) {
  while (c_.size() > 1 && std::abs(c_.back()) <= tol) c_.pop_back();
  return *this;
}

Poly Poly::deflate(Complex root, Complex* remainder) const {
  if (degree() == 0) {
    if (remainder) *remainder = c_[0];
    return Poly::constant(Complex(0.0));
  }
  std::vector<Complex> q(degree(), Complex(0.0));
  Complex carry = c_[degree()];
  for (int k = degree() - 1; k >= 0; --k) {
    q[k] = carry;
    carry = c_[k] + carry * root;
  }
  if (remainder) *remainder = carry;
  return Poly(std::move(q));
}

std::vector<Complex> Poly::roots() const {
  Poly p = *this;
  p.trim(0.0);
  int n = p.degree();
  if (n <= 0) return {};
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
  Complex lead = p.coeffs()[n];
  for (int k = 0; k < n; ++k) comp(k, n - 1) = -p.coeffs()[k] / lead;
  for (int k = 1; k < n; ++k) comp(k, k - 1) = Complex(1.0);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  if (es.info() != Eigen::Success)
    fail(ErrorCode::Internal, "companion eigensolver failed");
  std::vector<Complex> out(n);
  for (int k = 0; k < n; ++k) out[k] = es.eigenvalues()(k);
  std::sort(out.begin(), out.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return out;
}

std::vector<Complex> series_mul(const std::vector<Complex>& a,
                                const std::vector<Complex>& b, int order) {
  std::vector<Complex> r(order + 1, Complex(0.0));
  for (int i = 0; i <= order && i < static_cast<int>(a.size()); ++i)
    for (int j = 0; i + j <= order && j < static_cast<int>(b.size()); ++j)
      r[i + j] += a[i] * b[j];
  return r;
}

std::vector<Complex> series_div(const std::vector<Complex>& a,
                                const std::vector<Complex>& b, int order) {
  if (b.empty() || std::abs(b[0]) == 0.0)
    fail(ErrorCode::InvalidArgument, "series division by zero constant term");
  std::vector<Complex> r(order + 1, Complex(0.0));
  for (int k = 0; k <= order; ++k) {
    Complex acc = k < static_cast<int>(a.size()) ? a[k] : Complex(0.0);
    for (int j = 1; j <= k && j < static_cast<int>(b.size()); ++j)
      acc -= b[j] * r[k - j];
    r[k] = acc / b[0];
  }
  return r;
}

}  // namespace extdisc
