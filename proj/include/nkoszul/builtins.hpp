#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "nkoszul/homog.hpp"

namespace nkoszul {

/// S(V): relations x_i x_j - x_j x_i for i < j.
AlgebraPresentation polynomial(std::size_t n);

/// Relations sum_sigma sgn(sigma) x_{i_sigma(1)} ... x_{i_sigma(N)} over all
/// i_1 < ... < i_N. Requires 2 <= N <= n.
AlgebraPresentation antisymmetrizer(std::size_t n, std::size_t N);

/// Free algebra T(V) viewed as N-homogeneous with R = 0.
AlgebraPresentation free_algebra(std::size_t n, std::size_t N = 2);

/// Name of the generic parameter q_ij (1-based indices), e.g. "q12".
std::string quantum_parameter_name(std::size_t i, std::size_t j);

/// Quantum space x_j x_i = q_ij x_i x_j (i < j, 0-based keys). Missing keys
/// use the generic parameter named by quantum_parameter_name.
AlgebraPresentation quantum_space(std::size_t n, const std::map<std::pair<std::size_t, std::size_t>, Scalar>& q = {});
/// Every q_ij equal to the same value.
AlgebraPresentation quantum_space_uniform(std::size_t n, const Scalar& q);

/// True when the word has no N consecutive strictly decreasing letters.
bool is_admissible(const Word& w, std::size_t N);

/// L(n, N, k) by dynamic programming over (last letter, length of the
/// current strictly decreasing run).
mpz_class count_admissible(std::size_t n, std::size_t N, std::size_t k);

/// Admissible words of length k in lexicographic order.
std::vector<Word> enumerate_admissible(std::size_t n, std::size_t N, std::size_t k);

/// dim A^!_m for the antisymmetrizer algebra: n^m below N, C(n, m) for
/// N <= m <= n, zero above n.
mpz_class dual_dims_closed_form(std::size_t n, std::size_t N, std::size_t m);

}  // namespace nkoszul
