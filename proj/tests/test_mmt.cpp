#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "nkoszul/builtins.hpp"
#include "nkoszul/mmt.hpp"

using namespace nkoszul;

namespace {

Scalar leibniz(const Matrix& M) {
  const std::size_t n = M.rows();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  Scalar total;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    Scalar term(inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n; ++i) term *= M.at(i, p[i]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

// Coefficient of x_{i1} ... x_{ik} in prod_s (sum_j Z(i_s, j) x_j), computed
// in the commutative polynomial ring by expanding over exponent vectors.
Scalar commutative_g(const Matrix& Z, const Word& w) {
  const std::size_t n = Z.rows();
  std::map<std::vector<int>, Scalar> poly{{std::vector<int>(n, 0), Scalar(1)}};
  for (Letter i : w.letters) {
    std::map<std::vector<int>, Scalar> next;
    for (const auto& [e, c] : poly)
      for (std::size_t j = 0; j < n; ++j) {
        auto f = e;
        ++f[j];
        next[f] += c * Z.at(i, j);
      }
    poly = std::move(next);
  }
  std::vector<int> target(n, 0);
  for (Letter i : w.letters) ++target[i];
  return poly[target];
}

}  // namespace

TEST_SUITE("mmt") {

TEST_CASE("random matrices follow the documented draw") {
  Matrix M = random_rational_matrix(3, 7);
  std::mt19937_64 gen(7);
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 3; ++j) {
      std::int64_t p = static_cast<std::int64_t>(gen() % 19) - 9;
      std::int64_t q = static_cast<std::int64_t>(gen() % 9) + 1;
      CHECK(M.at(i, j) == Scalar(Rational(p, q)));
    }
  CHECK(random_rational_matrix(4, 99).row_data() == random_rational_matrix(4, 99).row_data());
  CHECK(random_rational_matrix(4, 99).row_data() != random_rational_matrix(4, 100).row_data());
}

TEST_CASE("determinant against the Leibniz formula") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    Matrix M = random_rational_matrix(1 + seed % 5, seed);
    CHECK(determinant(M) == leibniz(M));
  }
  CHECK(determinant(ones_matrix(3)).is_zero());
  CHECK(determinant(Matrix::identity(4)) == Scalar(1));
}

TEST_CASE("characteristic polynomial") {
  Matrix M = Matrix::from_dense({{Scalar(1), Scalar(2)}, {Scalar(3), Scalar(4)}});
  auto c = char_poly_coeffs(M);
  REQUIRE(c.size() == 3);
  CHECK(c[0] == Scalar(1));
  CHECK(c[1] == Scalar(-5));
  CHECK(c[2] == Scalar(-2));
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    Matrix R = random_rational_matrix(4, seed);
    auto cr = char_poly_coeffs(R);
    CHECK(cr[4] == leibniz(R));
  }
  CHECK(determinant(principal_submatrix(M, {1})) == Scalar(4));
}

TEST_CASE("G coefficients of the polynomial ring match the commutative expansion") {
  Algebra A(polynomial(3));
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    Matrix Z = random_rational_matrix(3, seed);
    for (const auto& [w, g] : g_table(A, Z, 4)) CHECK(g == commutative_g(Z, w));
  }
}

TEST_CASE("G at the identity and at zero") {
  for (const auto& pres : {polynomial(2), antisymmetrizer(3, 3)}) {
    Algebra A(pres);
    for (const auto& [w, g] : g_table(A, Matrix::identity(pres.n), 4)) CHECK(g == Scalar(1));
    for (const auto& [w, g] : g_table(A, Matrix(pres.n, pres.n), 3))
      CHECK(g == Scalar(w.grade() == 0 ? 1 : 0));
  }
}

TEST_CASE("det(I - ZT) of a diagonal matrix") {
  Matrix Z = Matrix::from_dense({{Scalar(2), Scalar(0)}, {Scalar(0), Scalar(3)}});
  MultiSeries s = det_one_minus_ZT(Z, 4);
  CHECK(s.coefficient({0, 0}) == Scalar(1));
  CHECK(s.coefficient({1, 0}) == Scalar(-2));
  CHECK(s.coefficient({0, 1}) == Scalar(-3));
  CHECK(s.coefficient({1, 1}) == Scalar(6));
  CHECK(s.terms().size() == 4);
}

TEST_CASE("specializability") {
  Algebra p(polynomial(3));
  CHECK(check_specializable(p, random_rational_matrix(3, 5)));
  Algebra q(quantum_space_uniform(2, Scalar(2)));
  CHECK(check_specializable(q, Matrix::identity(2)));
  CHECK_FALSE(check_specializable(q, ones_matrix(2)));
  Algebra a(antisymmetrizer(3, 3));
  CHECK(check_specializable(a, random_rational_matrix(3, 2)));
}

TEST_CASE("master theorems on random matrices") {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    MasterTheoremReport r = mmt_check(3, random_rational_matrix(3, seed), 5);
    CHECK(r.specializable);
    CHECK(r.passed);
    CHECK(r.terms > 0);
  }
  CHECK(mmt_check(2, ones_matrix(2), 6).passed);
  MasterTheoremReport n = nmt_check(3, 3, random_rational_matrix(3, 11), 5);
  CHECK(n.passed);
  CHECK(nmt_check(4, 3, random_rational_matrix(4, 12), 4).passed);
  CHECK(nmt_check(3, 2, random_rational_matrix(3, 13), 4).passed);
}

}
