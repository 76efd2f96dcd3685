#include "nkoszul/mmt.hpp"

#include <algorithm>
#include <random>

#include "nkoszul/builtins.hpp"
#include "nkoszul/manin.hpp"

namespace nkoszul {

Matrix random_rational_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::vector<std::vector<Scalar>> rows(n, std::vector<Scalar>(n));
  for (auto& row : rows)
    for (auto& x : row) {
      const std::int64_t p = static_cast<std::int64_t>(gen() % 19) - 9;
      const std::int64_t q = static_cast<std::int64_t>(gen() % 9) + 1;
      x = Scalar(Rational(p, q));
    }
  return Matrix::from_dense(rows);
}

Matrix ones_matrix(std::size_t n) {
  return Matrix::from_dense(std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n, Scalar(1))));
}

Scalar determinant(const Matrix& M) {
  if (M.rows() != M.cols()) throw DimensionError("determinant of a non-square matrix");
  const Index n = M.rows();
  std::vector<std::vector<Scalar>> a(n);
  for (Index i = 0; i < n; ++i) a[i] = to_dense(M.row(i), n);
  Scalar det(1);
  for (Index c = 0; c < n; ++c) {
    Index p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return Scalar();
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    const Scalar inv = a[c][c].inverse();
    for (Index r = c + 1; r < n; ++r) {
      if (a[r][c].is_zero()) continue;
      const Scalar f = a[r][c] * inv;
      for (Index k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

Matrix principal_submatrix(const Matrix& M, const std::vector<std::size_t>& J) {
  std::vector<std::vector<Scalar>> rows;
  for (auto i : J) {
    std::vector<Scalar> row;
    for (auto j : J) row.push_back(M.at(static_cast<Index>(i), static_cast<Index>(j)));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) return Matrix(0, 0);
  return Matrix::from_dense(rows);
}

namespace {

// All subsets of {0..n-1} of size k, ascending, in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + static_cast<long>(k), true);
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask[i]) s.push_back(i);
    out.push_back(std::move(s));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

Scalar trace(const Matrix& M) {
  Scalar t;
  for (Index i = 0; i < M.rows(); ++i) t += M.at(i, i);
  return t;
}

}  // namespace

std::vector<Scalar> char_poly_coeffs(const Matrix& M) {
  if (M.rows() != M.cols()) throw DimensionError("characteristic polynomial of a non-square matrix");
  const Index n = M.rows();
  std::vector<Scalar> c(n + 1);
  c[0] = Scalar(1);
  Matrix Mk(n, n);  // M_0 = 0
  for (Index k = 1; k <= n; ++k) {
    Matrix next = M * Mk;
    std::vector<SparseVector> rows;
    for (Index i = 0; i < n; ++i) rows.push_back(add_scaled(next.row(i), c[k - 1], {{i, Scalar(1)}}));
    Mk = Matrix::from_rows(n, std::move(rows));
    c[k] = -(trace(M * Mk) / Scalar(static_cast<std::int64_t>(k)));
  }
  for (Index r = 0; r <= n; ++r) {
    Scalar e;
    for (const auto& J : subsets(n, r)) e += determinant(principal_submatrix(M, J));
    if (!(c[r] == (r % 2 == 0 ? e : -e)))
      throw std::logic_error("characteristic polynomial disagrees with the principal minor sums");
  }
  return c;
}

bool check_specializable(const Algebra& A, const Matrix& Z) {
  const std::size_t n = A.n();
  const std::size_t N = A.N();
  if (Z.rows() != n || Z.cols() != n) throw DimensionError("matrix size differs from the generator count");
  const Index dim = tensor_dim(n, N);
  for (const auto& r : A.relation_space().basis()) {
    SparseAccumulator acc;
    for (const auto& e : r) {
      const Word i = word_at(e.col, n, N);
      for (Index j = 0; j < dim; ++j) {
        Scalar v = e.value;
        Index jj = j;
        for (std::size_t s = N; s-- > 0 && !v.is_zero();) {
          v *= Z.at(i.letters[s], jj % n);
          jj /= static_cast<Index>(n);
        }
        if (!v.is_zero()) acc.add(j, v);
      }
    }
    if (!A.relation_space().contains(acc.take())) return false;
  }
  return true;
}

std::vector<std::pair<Word, Scalar>> g_table(const Algebra& A, const Matrix& Z, std::size_t D) {
  if (!check_specializable(A, Z)) throw std::domain_error("matrix does not specialize end(A)");
  const std::size_t n = A.n();
  // Column t of the inverse change of basis, per degree: the functional
  // giving the coordinate of admissible word t.
  std::vector<std::vector<Word>> words(D + 1);
  std::vector<Matrix> columns(D + 1);
  for (std::size_t k = 0; k <= D; ++k) {
    auto [Minv, w] = admissible_change_of_basis(A, k);
    columns[k] = Minv.transpose();
    words[k] = std::move(w);
  }
  std::vector<AlgebraClass> X;
  for (Index i = 0; i < n; ++i) {
    SparseVector row;
    for (Index j = 0; j < n; ++j) {
      Scalar z = Z.at(i, j);
      if (!z.is_zero()) row.push_back({j, z});
    }
    X.push_back(A.reduce_coords(1, row));
  }

  std::vector<std::pair<Word, Scalar>> out;
  Word w;
  auto rec = [&](auto&& self, const AlgebraClass& P, std::size_t run) -> void {
    const std::size_t k = w.grade();
    const auto& list = words[k];
    const Index t = static_cast<Index>(std::lower_bound(list.begin(), list.end(), w) - list.begin());
    Scalar g;
    for (const auto& e : columns[k].row(t)) g += e.value * value_at(P.coords, e.col);
    out.emplace_back(w, g);
    if (k == D) return;
    for (Letter c = 0; c < n; ++c) {
      const std::size_t next_run = (k > 0 && c < w.letters.back()) ? run + 1 : 1;
      if (next_run >= A.N()) continue;
      w.letters.push_back(c);
      self(self, A.multiply(P, X[c]), next_run);
      w.letters.pop_back();
    }
  };
  rec(rec, A.unit(), 0);
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.grade() != b.first.grade()) return a.first.grade() < b.first.grade();
    return a.first < b.first;
  });
  return out;
}

Scalar g_coefficient(const Algebra& A, const Matrix& Z, const Word& i) {
  if (!is_admissible(i, A.N())) throw std::invalid_argument("G is defined on admissible words only");
  for (auto c : i.letters)
    if (c >= A.n()) throw std::invalid_argument("letter outside the alphabet");
  for (const auto& [w, g] : g_table(A, Z, i.grade()))
    if (w == i) return g;
  throw std::logic_error("admissible word missing from the G table");
}

MultiSeries g_series(const Algebra& A, const Matrix& Z, std::size_t D) {
  MultiSeries s(A.n(), D);
  for (const auto& [w, g] : g_table(A, Z, D)) {
    Exponents e(A.n(), 0);
    for (auto c : w.letters) ++e[c];
    s.add_term(e, g);
  }
  return s;
}

namespace {

MultiSeries cofactor_det(const std::vector<std::vector<MultiSeries>>& m, std::vector<std::size_t>& cols, std::size_t row) {
  const std::size_t vars = m[0][0].variables();
  const std::size_t trunc = m[0][0].truncation();
  if (row == m.size()) return MultiSeries::constant(vars, trunc, Scalar(1));
  MultiSeries total(vars, trunc);
  int sign = 1;
  for (std::size_t idx = 0; idx < cols.size(); ++idx) {
    const std::size_t c = cols[idx];
    if (!m[row][c].terms().empty()) {
      cols.erase(cols.begin() + static_cast<long>(idx));
      MultiSeries minor = cofactor_det(m, cols, row + 1);
      cols.insert(cols.begin() + static_cast<long>(idx), c);
      MultiSeries term = m[row][c] * minor;
      total = sign > 0 ? total + term : total - term;
    }
    sign = -sign;
  }
  return total;
}

}  // namespace

MultiSeries det_one_minus_ZT(const Matrix& Z, std::size_t D) {
  const std::size_t n = Z.rows();
  if (n == 0) return MultiSeries::constant(0, D, Scalar(1));
  std::vector<std::vector<MultiSeries>> m(n, std::vector<MultiSeries>(n, MultiSeries(n, D)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) m[i][j].add_term(Exponents(n, 0), Scalar(1));
      Exponents e(n, 0);
      e[j] = 1;
      m[i][j].add_term(e, -Z.at(static_cast<Index>(i), static_cast<Index>(j)));
    }
  std::vector<std::size_t> cols(n);
  for (std::size_t j = 0; j < n; ++j) cols[j] = j;
  return cofactor_det(m, cols, 0);
}

MultiSeries nmt_denominator(const Matrix& Z, std::size_t N, std::size_t D) {
  const std::size_t n = Z.rows();
  MultiSeries s(n, D);
  for (std::size_t r = 0; r <= n; ++r) {
    if (r % N != 0 && r % N != 1) continue;
    const Scalar eps(r % N == 0 ? 1 : -1);
    for (const auto& J : subsets(n, r)) {
      Exponents e(n, 0);
      for (auto j : J) e[j] = 1;
      s.add_term(e, eps * determinant(principal_submatrix(Z, J)));
    }
  }
  return s;
}

namespace {

MasterTheoremReport compare(const Algebra& A, const Matrix& Z, std::size_t D, const MultiSeries& denominator) {
  MasterTheoremReport rep;
  rep.n = A.n();
  rep.N = A.N();
  rep.truncation = D;
  rep.specializable = check_specializable(A, Z);
  if (!rep.specializable) return rep;
  MultiSeries lhs = g_series(A, Z, D);
  MultiSeries rhs = invert(denominator);
  rep.terms = lhs.terms().size();
  rep.first_mismatch = first_difference(lhs, rhs);
  if (rep.first_mismatch) {
    rep.lhs_value = lhs.coefficient(*rep.first_mismatch);
    rep.rhs_value = rhs.coefficient(*rep.first_mismatch);
  }
  rep.passed = !rep.first_mismatch;
  return rep;
}

}  // namespace

MasterTheoremReport mmt_check(std::size_t n, const Matrix& Z, std::size_t D) {
  Algebra A(polynomial(n));
  return compare(A, Z, D, det_one_minus_ZT(Z, D));
}

MasterTheoremReport nmt_check(std::size_t n, std::size_t N, const Matrix& Z, std::size_t D) {
  Algebra A(antisymmetrizer(n, N));
  return compare(A, Z, D, nmt_denominator(Z, N, D));
}

}  // namespace nkoszul
