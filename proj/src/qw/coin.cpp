#include "qw/coin.hpp"

#include <cmath>
#include <stdexcept>

namespace qw {

UnitaryCoin UnitaryCoin::fromMatrix(const Matrix2c& h, double tol) {
  const Matrix2c gram = h * h.adjoint();
  if ((gram - Matrix2c::Identity()).cwiseAbs().maxCoeff() > tol)
    throw std::invalid_argument("UnitaryCoin: matrix is not unitary within tolerance");
  return UnitaryCoin(h);
}

UnitaryCoin UnitaryCoin::fromEntries(Complex a, Complex b, Complex c, Complex d,
                                     double tol) {
  Matrix2c h;
  h << a, b, c, d;
  return fromMatrix(h, tol);
}

UnitaryCoin UnitaryCoin::hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  Matrix2c h;
  h << s, s, s, -s;
  return UnitaryCoin(h);
}

Matrix2c UnitaryCoin::p() const {
  Matrix2c m = Matrix2c::Zero();
  m.row(0) = h_.row(0);
  return m;
}

Matrix2c UnitaryCoin::q() const {
  Matrix2c m = Matrix2c::Zero();
  m.row(1) = h_.row(1);
  return m;
}

Matrix2c UnitaryCoin::r() const {
  Matrix2c m = Matrix2c::Zero();
  m.row(0) = h_.row(1);
  return m;
}

Matrix2c UnitaryCoin::s() const {
  Matrix2c m = Matrix2c::Zero();
  m.row(1) = h_.row(0);
  return m;
}

}  // namespace qw
