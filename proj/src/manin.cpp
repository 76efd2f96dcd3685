#include "nkoszul/manin.hpp"

#include <algorithm>
#include <numeric>

#include "nkoszul/builtins.hpp"

namespace nkoszul {

AlgebraPresentation end_presentation(const Algebra& A) {
  const Subspace& R = A.relation_space();
  const Subspace perp = R.orthogonal_complement();
  AlgebraPresentation e;
  e.label = "end(" + A.label() + ")";
  e.n = A.n() * A.n();
  e.N = A.N();
  for (const auto& xi : perp.basis())
    for (const auto& r : R.basis())
      e.relations.push_back(shuffle_pairs(Tensor(A.n(), A.N(), xi), Tensor(A.n(), A.N(), r)));
  return e;
}

bool CoactionImage::is_zero() const {
  return std::all_of(components.begin(), components.end(), [](const AlgebraClass& c) { return c.is_zero(); });
}

ManinBialgebra::ManinBialgebra(const KoszulComplex& K) : K_(K), E_(end_presentation(K.algebra())) {}

Index ManinBialgebra::z_word(Index i, Index j, std::size_t k) const {
  const Index n = static_cast<Index>(this->n());
  Index out = 0, mult = 1;
  for (std::size_t s = 0; s < k; ++s) {
    out += z_letter(n, i % n, j % n) * mult;
    mult *= n * n;
    i /= n;
    j /= n;
  }
  return out;
}

CoactionImage ManinBialgebra::coaction(const Tensor& t) const {
  const Algebra& A = base();
  const std::size_t k = t.grade();
  tensor_dim(A.n() * A.n(), k);
  const DegreeData& data = A.degree(k);
  std::vector<SparseAccumulator> acc(data.normal.size());
  for (const auto& term : t.coords())
    for (Index j = 0; j < data.ambient; ++j) {
      const Index z = z_word(term.col, j, k);
      for (const auto& e : data.normal_form(j)) acc[e.col].add(z, term.value * e.value);
    }
  CoactionImage out;
  out.degree = k;
  for (auto& a : acc) out.components.push_back(E_.reduce_coords(k, a.take()));
  return out;
}

std::vector<std::pair<AlgebraClass, AlgebraClass>> ManinBialgebra::coaction_on_A(const Word& w) const {
  CoactionImage img = coaction(Tensor::word(n(), w));
  std::vector<std::pair<AlgebraClass, AlgebraClass>> out;
  for (std::size_t p = 0; p < img.components.size(); ++p) {
    if (img.components[p].is_zero()) continue;
    out.emplace_back(img.components[p], AlgebraClass{&base(), w.grade(), {{static_cast<Index>(p), Scalar(1)}}});
  }
  return out;
}

AlgebraClass ManinBialgebra::chi_A(std::size_t k) const {
  const DegreeData& data = base().degree(k);
  SparseAccumulator acc;
  for (Index j = 0; j < data.ambient; ++j)
    for (const auto& e : data.normal_form(j)) acc.add(z_word(data.normal[e.col], j, k), e.value);
  return E_.reduce_coords(k, acc.take());
}

AlgebraClass ManinBialgebra::chi_J(std::size_t l) const {
  const std::size_t m = K_.nu(l);
  const Subspace& J = K_.J(m);
  SparseAccumulator acc;
  for (std::size_t s = 0; s < J.dim(); ++s)
    for (const auto& e : J.basis()[s]) acc.add(z_word(e.col, J.pivots()[s], m), e.value);
  return E_.reduce_coords(m, acc.take());
}

AlgebraClass ManinBialgebra::chi_J_in_basis(std::size_t l, const Matrix& G) const {
  const std::size_t m = K_.nu(l);
  const Subspace& J = K_.J(m);
  if (G.rows() != J.dim() || G.cols() != J.dim()) throw DimensionError("basis change of the wrong size");
  auto Ginv = inverse(G);
  if (!Ginv) throw std::invalid_argument("basis change matrix is singular");
  SparseAccumulator acc;
  for (Index s = 0; s < G.rows(); ++s) {
    SparseAccumulator row;
    for (const auto& g : G.row(s)) row.add_scaled(g.value, J.basis()[g.col]);
    const SparseVector b = row.take();
    for (Index t = 0; t < G.rows(); ++t) {
      const Scalar c = Ginv->at(t, s);
      if (c.is_zero()) continue;
      for (const auto& e : b) acc.add(z_word(e.col, J.pivots()[t], m), c * e.value);
    }
  }
  return E_.reduce_coords(m, acc.take());
}

bool ManinBialgebra::coaction_preserves_J(std::size_t m) const {
  const Subspace& J = K_.J(m);
  const Index ambient = tensor_dim(n(), m);
  for (const auto& b : J.basis()) {
    std::map<Index, std::vector<Entry>> by_normal;
    for (Index j = 0; j < ambient; ++j) {
      SparseVector words;
      for (const auto& e : b) words.push_back({z_word(e.col, j, m), e.value});
      AlgebraClass c = E_.reduce_coords(m, make_sparse(std::move(words)));
      for (const auto& f : c.coords) by_normal[f.col].push_back({j, f.value});
    }
    for (auto& [f, entries] : by_normal)
      if (!J.contains(make_sparse(std::move(entries)))) return false;
  }
  return true;
}

Scalar ManinBialgebra::counit(const AlgebraClass& c) const {
  return evaluate(c, Matrix::identity(static_cast<Index>(n())));
}

Scalar ManinBialgebra::evaluate(const AlgebraClass& c, const Matrix& Z) const {
  if (c.algebra != &E_) throw std::invalid_argument("class does not belong to end(A)");
  const Index n = static_cast<Index>(this->n());
  if (Z.rows() != n || Z.cols() != n) throw DimensionError("matrix size differs from the generator count");
  const DegreeData& data = E_.degree(c.degree);
  Scalar total;
  for (const auto& e : c.coords) {
    Scalar term = e.value;
    Index w = data.normal[e.col];
    for (std::size_t s = 0; s < c.degree && !term.is_zero(); ++s) {
      const Index letter = w % (n * n);
      w /= n * n;
      term *= Z.at(letter / n, letter % n);
    }
    total += term;
  }
  return total;
}

GradedSeries chi_A_series(const ManinBialgebra& B, std::size_t D) {
  std::vector<AlgebraClass> c;
  for (std::size_t k = 0; k <= D; ++k) c.push_back(B.chi_A(k));
  return GradedSeries(GradedRing{&B.end()}, D, std::move(c));
}

GradedSeries chi_J_series(const ManinBialgebra& B, std::size_t D) {
  const Algebra& E = B.end();
  std::vector<AlgebraClass> c;
  for (std::size_t d = 0; d <= D; ++d) c.push_back(E.zero(d));
  for (std::size_t l = 0; B.complex().nu(l) <= D; ++l) {
    AlgebraClass x = B.chi_J(l);
    c[B.complex().nu(l)] = l % 2 == 0 ? x : E.scale(Scalar(-1), x);
  }
  return GradedSeries(GradedRing{&E}, D, std::move(c));
}

KmtReport kmt_check(const ManinBialgebra& B, std::size_t D) {
  KmtReport rep;
  rep.truncation = D;
  const GradedSeries a = chi_A_series(B, D);
  const GradedSeries j = chi_J_series(B, D);
  const GradedSeries prod = mul(a, j);
  rep.first_failure = first_difference(prod, GradedSeries::one(GradedRing{&B.end()}, D));
  rep.passed = !rep.first_failure;
  rep.counit_matches = true;
  std::vector<std::optional<std::size_t>> level(D + 1);
  for (std::size_t l = 0; B.complex().nu(l) <= D; ++l) level[B.complex().nu(l)] = l;
  for (std::size_t d = 0; d <= D; ++d) {
    KmtDegree kd;
    kd.degree = d;
    kd.product_zero = prod[d].is_zero();
    kd.product_terms = prod[d].coords.size();
    kd.counit_chi_A = B.counit(a[d]);
    kd.dim_A = B.base().dim_component(d);
    if (!(kd.counit_chi_A == Scalar(static_cast<std::int64_t>(kd.dim_A)))) rep.counit_matches = false;
    if (level[d]) {
      kd.counit_chi_J = B.counit(j[d]);
      const long long dim = static_cast<long long>(B.complex().dim_J(d));
      kd.signed_dim_J = *level[d] % 2 == 0 ? dim : -dim;
      if (!(*kd.counit_chi_J == Scalar(static_cast<std::int64_t>(*kd.signed_dim_J)))) rep.counit_matches = false;
    }
    rep.degrees.push_back(std::move(kd));
  }
  return rep;
}

std::string to_string(DetConvention c) {
  return c == DetConvention::ColumnAscending ? "column-ascending" : "transpose";
}

std::pair<Matrix, std::vector<Word>> admissible_change_of_basis(const Algebra& A, std::size_t k) {
  std::vector<Word> words = enumerate_admissible(A.n(), A.N(), k);
  const DegreeData& data = A.degree(k);
  if (words.size() != data.normal.size())
    throw std::domain_error("admissible word count differs from dim A_" + std::to_string(k));
  std::vector<SparseVector> rows;
  rows.reserve(words.size());
  for (const auto& w : words) rows.push_back(data.normal_form(word_index(w, A.n())));
  auto inv = inverse(Matrix::from_rows(static_cast<Index>(data.normal.size()), std::move(rows)));
  if (!inv) throw std::domain_error("admissible words are not a basis of A_" + std::to_string(k));
  return {std::move(*inv), std::move(words)};
}

AlgebraClass bos_coefficient(const ManinBialgebra& B, std::size_t k) {
  const Algebra& A = B.base();
  auto [Minv, words] = admissible_change_of_basis(A, k);
  const DegreeData& data = A.degree(k);
  // Admissible coordinates of each x_j, computed once.
  std::vector<SparseVector> adm(data.ambient);
  for (Index j = 0; j < data.ambient; ++j) adm[j] = Minv.left_apply(data.normal_form(j));
  SparseAccumulator acc;
  for (Index t = 0; t < words.size(); ++t) {
    const Index i = word_index(words[t], A.n());
    for (Index j = 0; j < data.ambient; ++j) {
      Scalar c = value_at(adm[j], t);
      if (!c.is_zero()) acc.add(B.z_word(i, j, k), c);
    }
  }
  return B.end().reduce_coords(k, acc.take());
}

AlgebraClass ferm_coefficient(const ManinBialgebra& B, std::size_t k, DetConvention conv) {
  const std::size_t n = B.n();
  const Index zn = static_cast<Index>(n * n);
  SparseAccumulator acc;
  std::vector<bool> mask(n, false);
  if (k > n) return B.end().zero(k);
  std::fill(mask.begin(), mask.begin() + static_cast<long>(k), true);
  do {
    std::vector<Letter> cols;
    for (Letter i = 0; i < n; ++i)
      if (mask[i]) cols.push_back(i);
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      int sign = k % 2 == 0 ? 1 : -1;
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b)
          if (perm[a] > perm[b]) sign = -sign;
      Index w = 0;
      for (std::size_t s = 0; s < k; ++s) {
        const Letter j = cols[s], i = cols[perm[s]];
        const Letter letter = conv == DetConvention::ColumnAscending ? z_letter(n, i, j) : z_letter(n, j, i);
        w = w * zn + letter;
      }
      acc.add(w, Scalar(sign));
    } while (std::next_permutation(perm.begin(), perm.end()));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return B.end().reduce_coords(k, acc.take());
}

BosFermReport bos_ferm(const ManinBialgebra& B, std::size_t D) {
  const Algebra& A = B.base();
  std::vector<SparseVector> poly_rows;
  for (const auto& r : polynomial(A.n()).relations) poly_rows.push_back(r.coords());
  if (A.N() != 2 || !(Subspace::span(tensor_dim(A.n(), 2), std::move(poly_rows)) == A.relation_space()))
    throw std::invalid_argument("Bos/Ferm sums are defined for the polynomial algebra only");
  BosFermReport rep;
  rep.truncation = D;
  const GradedRing ring{&B.end()};
  std::vector<AlgebraClass> bos, col, tr;
  for (std::size_t k = 0; k <= D; ++k) {
    bos.push_back(bos_coefficient(B, k));
    col.push_back(ferm_coefficient(B, k, DetConvention::ColumnAscending));
    tr.push_back(ferm_coefficient(B, k, DetConvention::Transpose));
  }
  const GradedSeries chiA = chi_A_series(B, D);
  const GradedSeries chiJ = chi_J_series(B, D);
  rep.bos_first_failure = first_difference(GradedSeries(ring, D, bos), chiA);
  rep.column_ascending_first_failure = first_difference(GradedSeries(ring, D, col), chiJ);
  rep.transpose_first_failure = first_difference(GradedSeries(ring, D, tr), chiJ);
  rep.bos_matches = !rep.bos_first_failure;
  rep.column_ascending_matches = !rep.column_ascending_first_failure;
  rep.transpose_matches = !rep.transpose_first_failure;
  if (rep.column_ascending_matches != rep.transpose_matches)
    rep.passing = rep.column_ascending_matches ? DetConvention::ColumnAscending : DetConvention::Transpose;
  return rep;
}

}  // namespace nkoszul
