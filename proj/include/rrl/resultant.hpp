#pragma once

#include <cstddef>

#include "rrl/complex_poly.hpp"
#include "rrl/matrix.hpp"

namespace rrl {

// (m+n) x (m+n) Sylvester matrix for declared degrees m = deg f, n = deg g.
// Rows 0..n-1 carry f_m..f_0 shifted right; rows n..n+m-1 carry g_n..g_0.
Matrix<ComplexPoly> sylvester_matrix(const ComplexUniPoly& f, const ComplexUniPoly& g);

Matrix<MultiPoly> real_part(const Matrix<ComplexPoly>& m);
Matrix<MultiPoly> imag_part(const Matrix<ComplexPoly>& m);

ComplexPoly determinant(const Matrix<ComplexPoly>& m);

// Formal resultant with respect to the declared degrees.
ComplexPoly resultant(const ComplexUniPoly& f, const ComplexUniPoly& g);

struct Bracket {
  std::size_t i;
  std::size_t j;
  ComplexPoly value;  // a_i b_j - b_i a_j
};

Bracket bracket(const ComplexUniPoly& f, const ComplexUniPoly& g, std::size_t i, std::size_t j);

// Cayley-Bezout determinant for a pair of cubics:
//   | [3,0]  [3,1]        [3,2] |
//   | [2,0]  [3,0]+[2,1]  [3,1] |
//   | [1,0]  [2,0]        [3,0] |
ComplexPoly bezout3_resultant(const ComplexUniPoly& f, const ComplexUniPoly& g);

// The fixed sign e with bezout3_resultant == e * resultant, fixed once from
// the pair (z^3 + 1, 1 - z^3).
int bezout_sylvester_sign();

}  // namespace rrl
