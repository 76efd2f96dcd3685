#include <doctest.h>

#include <random>

#include "nkoszul/builtins.hpp"
#include "nkoszul/homog.hpp"

using namespace nkoszul;

namespace {

AlgebraClass random_class(const Algebra& A, std::size_t d, std::mt19937_64& gen) {
  SparseVector coords;
  for (Index i = 0; i < A.dim_component(d); ++i)
    if (gen() % 3 == 0) coords.push_back({i, Scalar(static_cast<std::int64_t>(gen() % 9) - 4)});
  return {&A, d, make_sparse(std::move(coords))};
}

std::vector<AlgebraPresentation> small_builtins() {
  return {polynomial(2), polynomial(3), antisymmetrizer(3, 3), antisymmetrizer(4, 3), quantum_space(2),
          quantum_space_uniform(3, Scalar(Rational(2, 3))), free_algebra(2)};
}

}  // namespace

TEST_SUITE("homog") {

TEST_CASE("ideal component dimensions") {
  Algebra p2(polynomial(2));
  CHECK(p2.ideal_component(2).dim() == 1);
  CHECK(p2.ideal_component(3).dim() == 4);
  CHECK(p2.dim_component(3) == 4);
  Algebra a33(antisymmetrizer(3, 3));
  CHECK(a33.ideal_component(3).dim() == 1);
  CHECK(a33.ideal_component(2).dim() == 0);
}

TEST_CASE("recursive ideal equals the window span") {
  for (const auto& pres : small_builtins()) {
    Algebra A(pres);
    for (std::size_t d = 0; d <= pres.N + 2; ++d) {
      INFO(pres.label << " d=" << d);
      CHECK(A.ideal_component(d) == ideal_component_bruteforce(pres, d));
    }
  }
}

TEST_CASE("dimension bookkeeping") {
  for (const auto& pres : small_builtins()) {
    Algebra A(pres);
    for (std::size_t d = 0; d <= 5; ++d) {
      CHECK(A.ideal_component(d).dim() + A.dim_component(d) == tensor_dim(pres.n, d));
      CHECK(A.normal_basis(d).size() == A.dim_component(d));
    }
  }
}

TEST_CASE("Hilbert series of the builtins") {
  Algebra p3(polynomial(3));
  IntSeries h = p3.hilbert_series(7);
  for (std::size_t d = 0; d <= 7; ++d) CHECK(h[d] == binomial(static_cast<long>(d) + 2, 2));
  Algebra f2(free_algebra(2));
  IntSeries hf = f2.hilbert_series(6);
  for (std::size_t d = 0; d <= 6; ++d) CHECK(hf[d] == mpz_class(1) << d);
  Algebra a33(antisymmetrizer(3, 3));
  CHECK(a33.dim_component(3) == 26);
  CHECK(a33.normal_basis(3).size() == 26);
  Algebra p2(polynomial(2));
  CHECK(p2.normal_basis(2).size() == 3);
  CHECK(a33.normal_basis(2).size() == 9);
}

TEST_CASE("generic quantum plane has the Hilbert series of the polynomial ring") {
  Algebra q(quantum_space(2));
  for (std::size_t d = 0; d <= 6; ++d) CHECK(q.dim_component(d) == d + 1);
  Algebra q3(quantum_space(3));
  for (std::size_t d = 0; d <= 4; ++d) CHECK(q3.dim_component(d) == (d + 1) * (d + 2) / 2);
}

TEST_CASE("reduction kills relations and respects commutation") {
  Algebra p2(polynomial(2));
  for (const auto& r : p2.presentation().relations) CHECK(p2.reduce(r).is_zero());
  CHECK(p2.word_class(Word{{1, 0}}) == p2.word_class(Word{{0, 1}}));
  for (const auto& w : p2.normal_basis(3)) {
    AlgebraClass c = p2.word_class(w);
    REQUIRE(c.coords.size() == 1);
    CHECK(c.coords[0].value == Scalar(1));
  }
}

TEST_CASE("reduction is independent of the representative") {
  std::mt19937_64 gen(13);
  for (const auto& pres : small_builtins()) {
    Algebra A(pres);
    for (std::size_t d = 1; d <= 4; ++d) {
      const auto& ideal = A.ideal_component(d);
      for (int trial = 0; trial < 5; ++trial) {
        SparseVector t;
        for (Index w = 0; w < tensor_dim(pres.n, d); ++w)
          if (gen() % 4 == 0) t.push_back({w, Scalar(static_cast<std::int64_t>(gen() % 5) - 2)});
        SparseVector u;
        for (const auto& row : ideal.basis())
          u = add_scaled(u, Scalar(static_cast<std::int64_t>(gen() % 7) - 3), row);
        CHECK(A.reduce_coords(d, add_scaled(t, Scalar(1), u)) == A.reduce_coords(d, t));
      }
    }
  }
}

TEST_CASE("multiplication: unit, commutation, associativity") {
  std::mt19937_64 gen(19);
  Algebra p2(polynomial(2));
  AlgebraClass x1 = p2.word_class(Word{{0}}), x2 = p2.word_class(Word{{1}});
  CHECK(p2.multiply(x1, x2) == p2.multiply(x2, x1));
  CHECK(p2.multiply(p2.unit(), x1) == x1);

  Algebra a33(antisymmetrizer(3, 3));
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t i = gen() % 3, j = gen() % 3, k = gen() % 3;
    if (i + j + k > 6) continue;
    AlgebraClass a = random_class(a33, i, gen), b = random_class(a33, j, gen), c = random_class(a33, k, gen);
    CHECK(a33.multiply(a33.multiply(a, b), c) == a33.multiply(a, a33.multiply(b, c)));
    CHECK(a33.multiply(a33.unit(), a) == a);
  }
  Algebra other(polynomial(2));
  CHECK_THROWS(p2.multiply(x1, other.word_class(Word{{0}})));
}

TEST_CASE("multiplication agrees with reduction of concatenated representatives") {
  std::mt19937_64 gen(23);
  Algebra q(quantum_space(2));
  for (int trial = 0; trial < 10; ++trial) {
    AlgebraClass a = random_class(q, 2, gen), b = random_class(q, 1 + trial % 2, gen);
    CHECK(q.multiply(a, b) == q.reduce(concat(q.representative(a), q.representative(b))));
  }
}

TEST_CASE("dual presentations") {
  AlgebraPresentation d = dual(polynomial(2));
  Algebra D(d);
  CHECK(D.relation_space().dim() == 3);
  CHECK(D.dim_component(2) == 1);
  CHECK(D.dim_component(3) == 0);

  Algebra p2(polynomial(2));
  Algebra dd(dual(dual(polynomial(2))));
  CHECK(dd.relation_space() == p2.relation_space());
  for (std::size_t k = 0; k <= 4; ++k) CHECK(dd.ideal_component(k).dim() == p2.ideal_component(k).dim());

  Algebra a43dual(dual(antisymmetrizer(4, 3)));
  CHECK(a43dual.dim_component(4) == 1);
  CHECK(a43dual.dim_component(3) == 4);
  CHECK(a43dual.dim_component(5) == 0);

  Algebra q2dual(dual(quantum_space(2)));
  CHECK(q2dual.dim_component(2) == 1);
}

TEST_CASE("admissible words span the antisymmetrizer quotient") {
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::size_t N = 2; N <= n; ++N) {
      Algebra A(antisymmetrizer(n, N));
      for (std::size_t d = 0; d <= 6; ++d) {
        if (tensor_dim(n, d) > 5000) continue;
        std::vector<SparseVector> rows;
        for (const auto& w : enumerate_admissible(n, N, d)) rows.push_back(A.word_class(w).coords);
        INFO("n=" << n << " N=" << N << " d=" << d);
        CHECK(rows.size() == A.dim_component(d));
        CHECK(rank(Matrix::from_rows(static_cast<Index>(A.dim_component(d)), rows)) == A.dim_component(d));
      }
    }
}

TEST_CASE("degenerate presentations") {
  AlgebraPresentation empty;
  empty.n = 0;
  empty.N = 2;
  Algebra E(empty);
  CHECK(E.dim_component(0) == 1);
  CHECK(E.dim_component(3) == 0);
  AlgebraPresentation bad = polynomial(2);
  bad.N = 3;
  CHECK_THROWS_AS(Algebra{bad}, std::invalid_argument);
}

}
