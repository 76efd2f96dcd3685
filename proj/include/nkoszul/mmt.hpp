#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "nkoszul/homog.hpp"

namespace nkoszul {

/// Square matrix with entries p/q, p uniform in [-9, 9] and q in [1, 9],
/// drawn row by row from std::mt19937_64 seeded with `seed` (numerator
/// first, each as 19- resp. 9-way remainder of one draw).
Matrix random_rational_matrix(std::size_t n, std::uint64_t seed);
Matrix ones_matrix(std::size_t n);

/// Determinant by fraction-field Gaussian elimination.
Scalar determinant(const Matrix& M);
/// Principal submatrix on the given ascending index set.
Matrix principal_submatrix(const Matrix& M, const std::vector<std::size_t>& J);

/// c_0..c_n with det(lambda I - M) = sum_r c_r lambda^{n-r}, computed by the
/// Faddeev-LeVerrier recursion. Throws std::logic_error unless
/// c_r = (-1)^r (sum of principal r x r minors).
std::vector<Scalar> char_poly_coeffs(const Matrix& M);

/// True iff Z^{(x)N} maps span R into itself, so that z_i^j -> Z(i, j)
/// annihilates every relation of end(A).
bool check_specializable(const Algebra& A, const Matrix& Z);

/// G(i) for every admissible word of length <= D, ordered by length and
/// then lexicographically. Requires specializability and that admissible
/// words give a basis of each A_k.
std::vector<std::pair<Word, Scalar>> g_table(const Algebra& A, const Matrix& Z, std::size_t D);
/// Coefficient of x_{i1}...x_{ik} in X_{i1}...X_{ik}, X_i = sum_j Z(i, j) x_j,
/// in the admissible basis of A_k.
Scalar g_coefficient(const Algebra& A, const Matrix& Z, const Word& i);

/// sum_i G(i) t_{i1} ... t_{ik} over admissible words with k <= D.
MultiSeries g_series(const Algebra& A, const Matrix& Z, std::size_t D);
/// det(I - Z T) with T = diag(t_1, ..., t_n), by cofactor expansion.
MultiSeries det_one_minus_ZT(const Matrix& Z, std::size_t D);
/// sum over J with |J| = 0 or 1 mod N of eps(|J|) det(Z_J) prod_{j in J} t_j,
/// eps = +1 for 0 mod N and -1 for 1 mod N.
MultiSeries nmt_denominator(const Matrix& Z, std::size_t N, std::size_t D);

struct MasterTheoremReport {
  std::size_t n = 0;
  std::size_t N = 2;
  std::size_t truncation = 0;
  bool specializable = false;
  bool passed = false;
  std::size_t terms = 0;  // nonzero coefficients of the left side
  std::optional<Exponents> first_mismatch;
  Scalar lhs_value;
  Scalar rhs_value;
};

/// sum_m G(m) t^m = det(I - ZT)^{-1} for the polynomial algebra on n letters.
MasterTheoremReport mmt_check(std::size_t n, const Matrix& Z, std::size_t D);
/// The N-analogue for the antisymmetrizer algebra (n, N).
MasterTheoremReport nmt_check(std::size_t n, std::size_t N, const Matrix& Z, std::size_t D);

}  // namespace nkoszul
