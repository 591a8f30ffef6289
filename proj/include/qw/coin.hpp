#pragma once

#include <Eigen/Dense>
#include <complex>

namespace qw {

using Complex = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;
using Vector2c = Eigen::Vector2cd;

/// A 2x2 unitary coin H and its split P = |L><L|H, Q = |R><R|H plus the
/// companion matrices R = |L><R|H, S = |R><L|H; together they form an
/// orthogonal basis of the 2x2 matrices under tr(X*Y).
class UnitaryCoin {
 public:
  /// Validates unitarity within tol and throws std::invalid_argument when
  /// the rows are not orthonormal.
  static UnitaryCoin fromMatrix(const Matrix2c& h, double tol = 1e-9);
  static UnitaryCoin fromEntries(Complex a, Complex b, Complex c, Complex d,
                                 double tol = 1e-9);
  /// All entries +-1/sqrt(2).
  static UnitaryCoin hadamard();

  const Matrix2c& h() const { return h_; }
  Matrix2c p() const;
  Matrix2c q() const;
  Matrix2c r() const;
  Matrix2c s() const;

  Complex a() const { return h_(0, 0); }
  Complex b() const { return h_(0, 1); }
  Complex c() const { return h_(1, 0); }
  Complex d() const { return h_(1, 1); }
  Complex determinant() const { return h_.determinant(); }

 private:
  explicit UnitaryCoin(const Matrix2c& h) : h_(h) {}
  Matrix2c h_;
};

}  // namespace qw
