#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "nkoszul/homog.hpp"

namespace nkoszul {

/// Jump map: nu_N(2i) = N i, nu_N(2i + 1) = N i + 1.
std::size_t nu(std::size_t N, std::size_t l);

/// Raised when J_m fails to sit inside V^{(x)s} (x) J_{m-s}. This is an
/// internal consistency failure, never a property of the input.
class InclusionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// J_m as the intersection of every window V^i (x) R (x) V^j directly.
Subspace dual_koszul_subspace_bruteforce(const AlgebraPresentation& a, std::size_t m);

/// One homological slot of the degree-m strand of K(A).
struct HomologyEntry {
  std::size_t l = 0;
  std::size_t k = 0;         // algebra degree m - nu(l)
  std::size_t nu = 0;
  std::size_t dim_A = 0;
  std::size_t dim_J = 0;
  std::size_t dim = 0;       // dim A_k * dim J_nu
  std::size_t rank_out = 0;  // rank of d_l leaving this slot (0 for l = 0)
  std::size_t rank_in = 0;   // rank of d_{l+1} arriving here
  std::size_t homology = 0;
};

struct DegreeReport {
  std::size_t m = 0;
  std::vector<HomologyEntry> entries;
  /// Every consecutive pair d_l d_{l+1} composed to zero.
  bool dd_zero = true;
  /// Alternating sum of the slot dimensions.
  long long euler = 0;
};

struct CertificateFailure {
  std::size_t m = 0;
  std::size_t l = 0;
  std::string reason;
};

struct KoszulCertificate {
  std::size_t max_degree = 0;
  bool passed = false;
  std::vector<DegreeReport> degrees;
  std::optional<CertificateFailure> first_failure;
};

/// The generalized Koszul complex of one algebra, with J_m and the
/// differentials memoized.
class KoszulComplex {
 public:
  explicit KoszulComplex(const Algebra& algebra);

  const Algebra& algebra() const { return algebra_; }
  std::size_t nu(std::size_t l) const { return nkoszul::nu(algebra_.N(), l); }

  /// J_m: V^{(x)m} below N, span R at N, then (V (x) J_{m-1}) cap (J_{m-1} (x) V).
  const Subspace& J(std::size_t m) const;
  std::size_t dim_J(std::size_t m) const { return J(m).dim(); }

  /// Throws InclusionError unless J_m lies in V^{(x)s} (x) J_{m-s}.
  void check_inclusion(std::size_t m, std::size_t s) const;

  /// d_l on the degree-m strand: A_k (x) J_nu(l) -> A_{k+s} (x) J_nu(l-1).
  /// Rows are indexed by (normal word of A_k) * dim J_nu(l) + J-row, and the
  /// same layout is used for columns.
  Matrix differential(std::size_t m, std::size_t l) const;

  DegreeReport homology_report(std::size_t m) const;
  KoszulCertificate certificate(std::size_t max_degree) const;

 private:
  const Algebra& algebra_;
  mutable std::mutex mutex_;
  mutable std::vector<std::unique_ptr<Subspace>> j_cache_;
};

/// Sum_l (-1)^l dim J_nu(l) t^nu(l) truncated at D.
IntSeries dvp_rhs(const KoszulComplex& K, std::size_t D);

struct SeriesCheck {
  std::size_t truncation = 0;
  bool passed = false;
  std::optional<std::size_t> first_failure;
  std::vector<mpz_class> lhs;       // H_A coefficients (or the series being tested)
  std::vector<mpz_class> rhs;       // the other factor
  std::vector<mpz_class> product;   // coefficients of the product
};

/// H_A(t) * dvp_rhs(t) == 1 up to degree D.
SeriesCheck dvp_check(const KoszulComplex& K, std::size_t D);

/// Sum_{k+l=m} (-1)^k C(n+k-1, k) C(n, l).
mpz_class identity_eq1(std::size_t n, std::size_t m);

struct AdmissibleIdentityReport {
  std::size_t n = 0, N = 0, truncation = 0;
  bool passed = false;
  bool degree_rule_holds = false;
  std::optional<std::size_t> first_failure;
  std::vector<mpz_class> counts;        // L(n, N, k)
  std::vector<mpz_class> inverse;       // coefficients of the inverted polynomial
  std::vector<mpz_class> polynomial;    // 1 - n t + C(n,N) t^N - ...
  std::size_t top_index = 0;            // largest l with a nonzero term
  std::size_t expected_top_index = 0;   // 2q if r = 0, else 2q + 1 (n = qN + r)
};

AdmissibleIdentityReport admissible_identity_check(std::size_t n, std::size_t N, std::size_t D);

}  // namespace nkoszul
