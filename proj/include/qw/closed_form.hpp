#pragma once

#include <map>

#include "qw/coin.hpp"

namespace qw {

/// State decision matrices A_k^n of the quantum walk at time n, built by the
/// matrix-valued recursion from A_0^0 = I.
std::map<int, Matrix2c> qwSdmRecursive(const UnitaryCoin& coin, int n);

/// Konno's closed form for A_k^n. Interior positions |k| < n use the r-sum
/// over binomial weights (requires ad != 0 and bc != 0); the boundary cells
/// collapse to a^(n-1) P and d^(n-1) Q.
Matrix2c qwSdmClosedForm(const UnitaryCoin& coin, int n, int k);

/// (1/2) sum_k ||A_k^n||_F^2; equals 1 for every n when H is unitary.
double frobeniusTotal(const UnitaryCoin& coin, int n);

}  // namespace qw
