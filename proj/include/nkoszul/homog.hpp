#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "nkoszul/freealg.hpp"
#include "nkoszul/linalg.hpp"
#include "nkoszul/series.hpp"

namespace nkoszul {

/// A = T(V)/(R) with dim V = n and R spanned by grade-N tensors. The
/// relations need not be independent.
struct AlgebraPresentation {
  std::string label;
  std::size_t n = 0;
  std::size_t N = 2;
  std::vector<Tensor> relations;

  /// Throws std::invalid_argument unless N >= 2 and every relation has
  /// grade N over n letters.
  void validate() const;
};

class Algebra;

/// Element of A_d given by coordinates over the normal basis at degree d.
/// Holds a non-owning pointer: the algebra must outlive its classes.
struct AlgebraClass {
  const Algebra* algebra = nullptr;
  std::size_t degree = 0;
  SparseVector coords;

  bool is_zero() const { return coords.empty(); }
  bool operator==(const AlgebraClass& o) const {
    return algebra == o.algebra && degree == o.degree && coords == o.coords;
  }
};

/// Everything the quotient engine knows about one degree d.
struct DegreeData {
  std::size_t degree = 0;
  Index ambient = 0;
  Subspace ideal;                   // I_d inside V^{(x)d}
  std::vector<Index> normal;        // non-pivot words of I_d, increasing
  std::vector<std::int32_t> position;  // word -> index in `normal`, -1 for pivot words
  std::vector<SparseVector> pivot_nf;  // normal form of each pivot word, by ideal row

  /// Normal-basis coordinates of the class of the word with this index.
  SparseVector normal_form(Index word) const;
};

/// N-homogeneous algebra with a lazily built, memoized per-degree cache.
///
/// Cache population is serialized by an internal mutex; finished degrees are
/// immutable and can be read concurrently.
class Algebra {
 public:
  explicit Algebra(AlgebraPresentation presentation);
  Algebra(const Algebra&) = delete;
  Algebra& operator=(const Algebra&) = delete;

  const AlgebraPresentation& presentation() const { return pres_; }
  std::size_t n() const { return pres_.n; }
  std::size_t N() const { return pres_.N; }
  const std::string& label() const { return pres_.label; }

  /// span(R) inside V^{(x)N}.
  const Subspace& relation_space() const { return relation_space_; }

  const DegreeData& degree(std::size_t d) const;
  const Subspace& ideal_component(std::size_t d) const { return degree(d).ideal; }
  std::size_t dim_component(std::size_t d) const { return degree(d).normal.size(); }
  std::vector<Word> normal_basis(std::size_t d) const;
  IntSeries hilbert_series(std::size_t max_degree) const;

  AlgebraClass unit() const;
  AlgebraClass zero(std::size_t d) const;
  AlgebraClass word_class(const Word& w) const;
  AlgebraClass reduce(const Tensor& t) const;
  /// Reduction of a vector in V^{(x)d} given by word coordinates.
  AlgebraClass reduce_coords(std::size_t d, const SparseVector& word_coords) const;
  /// Tensor supported on normal words representing the class.
  Tensor representative(const AlgebraClass& a) const;

  AlgebraClass multiply(const AlgebraClass& a, const AlgebraClass& b) const;
  AlgebraClass add(const AlgebraClass& a, const AlgebraClass& b) const;
  AlgebraClass scale(const Scalar& c, const AlgebraClass& a) const;

 private:
  std::unique_ptr<DegreeData> build_degree(std::size_t d, const DegreeData* previous) const;
  void check_owner(const AlgebraClass& a) const;

  AlgebraPresentation pres_;
  Subspace relation_space_;
  mutable std::mutex mutex_;
  mutable std::vector<std::unique_ptr<DegreeData>> cache_;
};

/// Presentation of A^! = T(V*)/(R^perp), R^perp the annihilator of R. Dual
/// tensors use the same word coordinates.
AlgebraPresentation dual(const AlgebraPresentation& a);

/// sum_{i+N+j=d} V^i (x) R (x) V^j computed window by window; an
/// independent check on the recursive ideal construction.
Subspace ideal_component_bruteforce(const AlgebraPresentation& a, std::size_t d);

/// Coefficient ring of graded classes of one algebra; zero(d) has grade d.
struct GradedRing {
  using value_type = AlgebraClass;
  const Algebra* algebra;

  value_type zero(std::size_t d) const { return algebra->zero(d); }
  value_type one() const { return algebra->unit(); }
  value_type add(const value_type& a, const value_type& b) const { return algebra->add(a, b); }
  value_type sub(const value_type& a, const value_type& b) const {
    return algebra->add(a, algebra->scale(Scalar(-1), b));
  }
  value_type mul(const value_type& a, const value_type& b) const { return algebra->multiply(a, b); }
  value_type neg(const value_type& a) const { return algebra->scale(Scalar(-1), a); }
  bool is_zero(const value_type& a) const { return a.is_zero(); }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  std::optional<value_type> unit_inverse(const value_type& a) const;
  std::string to_string(const value_type& a) const;
};

using GradedSeries = UniSeries<GradedRing>;

}  // namespace nkoszul
