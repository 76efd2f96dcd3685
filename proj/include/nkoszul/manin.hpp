#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nkoszul/koszul.hpp"

namespace nkoszul {

/// Presentation of end(A): n^2 generators z_i^j (flat index i*n + j) and
/// relations shuffle_pairs(xi, r) for xi in a basis of R^perp, r in a basis
/// of R.
AlgebraPresentation end_presentation(const Algebra& A);

/// Element of E (x) A_k stored as one E_k class per normal basis word of A_k.
struct CoactionImage {
  std::size_t degree = 0;
  std::vector<AlgebraClass> components;  // indexed by the normal basis of A_k

  bool is_zero() const;
};

/// Manin's bialgebra E = end(A) together with the coaction of E on A and on
/// the spaces J_m of the Koszul complex.
class ManinBialgebra {
 public:
  explicit ManinBialgebra(const KoszulComplex& K);

  const Algebra& base() const { return K_.algebra(); }
  const KoszulComplex& complex() const { return K_; }
  const Algebra& end() const { return E_; }
  std::size_t n() const { return base().n(); }

  /// Index of the E-word z_{i1}^{j1} ... z_{ik}^{jk} for word indices i, j of length k.
  Index z_word(Index i, Index j, std::size_t k) const;

  /// delta(x_w) = sum over j-words of class(z_w^j) (x) class(x_j), as
  /// nonzero (E class, basis class of A) pairs.
  std::vector<std::pair<AlgebraClass, AlgebraClass>> coaction_on_A(const Word& w) const;
  /// delta of an arbitrary tensor, reduced in E_k (x) A_k.
  CoactionImage coaction(const Tensor& t) const;

  /// Trace of the coaction on A_k.
  AlgebraClass chi_A(std::size_t k) const;
  /// Trace of the coaction on J_nu(l) in its echelon basis.
  AlgebraClass chi_J(std::size_t l) const;
  /// The same trace computed in the basis b'_s = sum_t G(s,t) b_t.
  AlgebraClass chi_J_in_basis(std::size_t l, const Matrix& G) const;

  /// For every basis vector b of J_m and every normal word f of E_m, the
  /// vector of f-coefficients of delta(b) over x-words lies in J_m.
  bool coaction_preserves_J(std::size_t m) const;

  /// z_i^j -> delta_ij.
  Scalar counit(const AlgebraClass& c) const;
  /// z_i^j -> Z(i, j).
  Scalar evaluate(const AlgebraClass& c, const Matrix& Z) const;

 private:
  const KoszulComplex& K_;
  Algebra E_;
};

struct KmtDegree {
  std::size_t degree = 0;
  bool product_zero = false;      // degree-d coefficient of the product vanishes (d >= 1)
  Scalar counit_chi_A;               // counit of chi_A(d)
  std::size_t dim_A = 0;
  std::optional<Scalar> counit_chi_J;  // signed, when d = nu(l) for some l
  std::optional<long long> signed_dim_J;
  std::size_t product_terms = 0;  // nonzero coordinates of the product coefficient
};

struct KmtReport {
  std::size_t truncation = 0;
  bool passed = false;          // product equals 1
  bool counit_matches = false;  // counit o chi = dim on every coefficient
  std::optional<std::size_t> first_failure;
  std::vector<KmtDegree> degrees;
};

/// Graded-coefficient series sum_k chi_A(k) t^k.
GradedSeries chi_A_series(const ManinBialgebra& B, std::size_t D);
/// sum_l (-1)^l chi_J(l) t^nu(l).
GradedSeries chi_J_series(const ManinBialgebra& B, std::size_t D);

KmtReport kmt_check(const ManinBialgebra& B, std::size_t D);

enum class DetConvention { ColumnAscending, Transpose };
std::string to_string(DetConvention c);

struct BosFermReport {
  std::size_t truncation = 0;
  bool bos_matches = false;
  bool column_ascending_matches = false;
  bool transpose_matches = false;
  /// The convention that reproduced the chi_J series, when exactly one did.
  std::optional<DetConvention> passing;
  std::optional<std::size_t> bos_first_failure;
  std::optional<std::size_t> column_ascending_first_failure;
  std::optional<std::size_t> transpose_first_failure;
};

/// Sum over |J| = k of (-1)^k det(Z_J) in E_k, under the given convention.
AlgebraClass ferm_coefficient(const ManinBialgebra& B, std::size_t k, DetConvention c);
/// Sum over admissible words a of length k of the a-coordinate of delta(x_a)
/// in the admissible basis of A_k.
AlgebraClass bos_coefficient(const ManinBialgebra& B, std::size_t k);

/// Bos and Ferm against the chi series; requires N = 2.
BosFermReport bos_ferm(const ManinBialgebra& B, std::size_t D);

/// Inverse of the matrix whose rows are the normal forms of the admissible
/// words of length k, together with those words. Throws std::domain_error
/// when the admissible words do not form a basis of A_k.
std::pair<Matrix, std::vector<Word>> admissible_change_of_basis(const Algebra& A, std::size_t k);

}  // namespace nkoszul
