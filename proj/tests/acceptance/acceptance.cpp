// Acceptance run: one PASS/FAIL line per criterion, exact arithmetic throughout.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "nkoszul/builtins.hpp"
#include "nkoszul/koszul.hpp"
#include "nkoszul/manin.hpp"
#include "nkoszul/mmt.hpp"

using namespace nkoszul;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
};

class Checker {
 public:
  explicit Checker(Outcome& o) : o_(o) {}
  void require(bool cond, const std::string& what) {
    if (!cond && o_.ok) {
      o_.ok = false;
      o_.note = what;
    }
  }

 private:
  Outcome& o_;
};

std::string str(std::size_t v) { return std::to_string(v); }

mpz_class choose(std::size_t n, std::size_t k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Outcome eq1() {
  Outcome o;
  Checker c(o);
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t m = 1; m <= 10; ++m) {
      mpz_class direct = 0;
      for (std::size_t k = 0; k <= m; ++k)
        direct += (k % 2 ? -1 : 1) * choose(n + k - 1, k) * choose(n, m - k);
      c.require(direct == 0 && identity_eq1(n, m) == 0, "n=" + str(n) + " m=" + str(m));
    }
  return o;
}

Outcome dual_dims() {
  Outcome o;
  Checker c(o);
  for (std::size_t n = 2; n <= 6; ++n)
    for (std::size_t N = 2; N <= n; ++N) {
      Algebra A(antisymmetrizer(n, N));
      KoszulComplex K(A);
      for (std::size_t m = 0; m <= n + 2; ++m) {
        mpz_class expect = m < N ? mpz_class(1) : mpz_class(0);
        if (m < N)
          for (std::size_t i = 0; i < m; ++i) expect *= static_cast<unsigned long>(n);
        else if (m <= n)
          expect = choose(n, m);
        const mpz_class got = static_cast<unsigned long>(K.dim_J(m));
        c.require(got == expect && dual_dims_closed_form(n, N, m) == expect,
                  "n=" + str(n) + " N=" + str(N) + " m=" + str(m));
      }
    }
  return o;
}

Outcome admissible() {
  Outcome o;
  Checker c(o);
  const std::size_t D = 8;
  for (auto [n, N] : std::vector<std::pair<std::size_t, std::size_t>>{{3, 2}, {3, 3}, {4, 3}, {4, 4}, {4, 2}}) {
    std::vector<mpz_class> poly(D + 1, 0);
    for (std::size_t l = 0;; ++l) {
      const std::size_t deg = nu(N, l);
      if (deg > n || deg > D) break;
      poly[deg] += (l % 2 ? -1 : 1) * choose(n, deg);
    }
    std::vector<mpz_class> inv(D + 1, 0);
    inv[0] = 1;
    for (std::size_t d = 1; d <= D; ++d)
      for (std::size_t i = 1; i <= d; ++i) inv[d] -= poly[i] * inv[d - i];
    for (std::size_t k = 0; k <= D; ++k)
      c.require(count_admissible(n, N, k) == inv[k], "series n=" + str(n) + " N=" + str(N) + " k=" + str(k));
    c.require(admissible_identity_check(n, N, D).passed, "report n=" + str(n) + " N=" + str(N));
  }
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::size_t N = 2; N <= n; ++N) {
      Algebra A(antisymmetrizer(n, N));
      for (std::size_t k = 0; k <= 6; ++k)
        c.require(count_admissible(n, N, k) == static_cast<unsigned long>(A.dim_component(k)),
                  "dim n=" + str(n) + " N=" + str(N) + " k=" + str(k));
    }
  return o;
}

std::vector<AlgebraPresentation> certificate_algebras() {
  return {polynomial(1), polynomial(2), polynomial(3), antisymmetrizer(3, 3), antisymmetrizer(4, 3)};
}

Outcome certificates() {
  Outcome o;
  Checker c(o);
  for (const auto& pres : certificate_algebras()) {
    Algebra A(pres);
    KoszulComplex K(A);
    KoszulCertificate cert = K.certificate(6);
    c.require(cert.passed, pres.label + ": " + (cert.first_failure ? cert.first_failure->reason : ""));
    for (const auto& d : cert.degrees) c.require(d.dd_zero, pres.label + ": d o d at m=" + str(d.m));
  }
  return o;
}

Outcome dvp() {
  Outcome o;
  Checker c(o);
  auto algebras = certificate_algebras();
  algebras.push_back(quantum_space(2));
  for (const auto& pres : algebras) {
    Algebra A(pres);
    KoszulComplex K(A);
    SeriesCheck s = dvp_check(K, 8);
    c.require(s.passed, pres.label + (s.first_failure ? " degree " + str(*s.first_failure) : ""));
  }
  return o;
}

Outcome warning() {
  Outcome o;
  Checker c(o);
  Algebra A(polynomial(2));
  Algebra E(end_presentation(A));
  const Letter a = 0, b = 1, cc = 2, d = 3;
  auto w = [](Letter x, Letter y) { return Tensor::word(4, Word{{x, y}}); };
  Subspace expect = Subspace::span(16, {(w(a, cc) - w(cc, a)).coords(), (w(b, d) - w(d, b)).coords(),
                                        (w(a, d) - w(d, a) - w(cc, b) + w(b, cc)).coords()});
  c.require(E.relation_space() == expect, "relation space");
  c.require(E.dim_component(2) == 13, "dim end(A)_2 = " + str(E.dim_component(2)));
  return o;
}

Outcome kmt() {
  Outcome o;
  Checker c(o);
  for (const auto& pres : {polynomial(2), antisymmetrizer(3, 3), quantum_space(2)}) {
    Algebra A(pres);
    KoszulComplex K(A);
    ManinBialgebra B(K);
    KmtReport r = kmt_check(B, 4);
    c.require(r.passed, pres.label + ": product" + (r.first_failure ? " at degree " + str(*r.first_failure) : ""));
    c.require(r.counit_matches, pres.label + ": counit");
  }
  return o;
}

Outcome bos_ferm_check() {
  Outcome o;
  Checker c(o);
  Algebra A(polynomial(2));
  KoszulComplex K(A);
  ManinBialgebra B(K);
  BosFermReport r = bos_ferm(B, 4);
  c.require(r.bos_matches, "Bos");
  c.require(r.column_ascending_matches != r.transpose_matches, "exactly one convention");
  c.require(r.passing.has_value(), "no passing convention");
  if (o.ok) o.note = "passing convention: " + to_string(*r.passing);
  return o;
}

std::vector<std::pair<std::string, Matrix>> mmt_matrices(std::size_t n, bool with_zero_and_ones) {
  std::vector<std::pair<std::string, Matrix>> out;
  if (with_zero_and_ones) out.emplace_back("zero", Matrix(n, n));
  out.emplace_back("identity", Matrix::identity(n));
  if (with_zero_and_ones) out.emplace_back("ones", ones_matrix(n));
  for (std::uint64_t seed = 1; seed <= 5; ++seed)
    out.emplace_back("seed " + std::to_string(seed), random_rational_matrix(n, seed));
  return out;
}

Outcome mmt() {
  Outcome o;
  Checker c(o);
  Algebra A(polynomial(3));
  for (const auto& [name, Z] : mmt_matrices(3, true)) {
    c.require(mmt_check(3, Z, 6).passed, name);
    if (name == "ones") {
      ScalarSeries g = g_series(A, Z, 6).collapse();
      for (std::size_t k = 0; k <= 6; ++k) {
        std::int64_t p = 1;
        for (std::size_t i = 0; i < k; ++i) p *= 3;
        c.require(g[k] == Scalar(p), "ones: sum of G at k=" + str(k));
      }
    }
  }
  return o;
}

Outcome nmt() {
  Outcome o;
  Checker c(o);
  for (const auto& [name, Z] : mmt_matrices(3, false)) c.require(nmt_check(3, 3, Z, 6).passed, name);
  Algebra P(polynomial(3)), A2(antisymmetrizer(3, 2));
  Matrix Z = random_rational_matrix(3, 1);
  c.require(nmt_check(3, 2, Z, 6).passed, "N=2");
  c.require(equals(g_series(P, Z, 6), g_series(A2, Z, 6)), "N=2 series differs from the polynomial case");
  c.require(equals(nmt_denominator(Z, 2, 6), det_one_minus_ZT(Z, 6)), "N=2 denominator");
  return o;
}

Matrix random_matrix(std::mt19937_64& gen, Index rows, Index cols) {
  std::vector<std::vector<Scalar>> d(rows, std::vector<Scalar>(cols));
  for (auto& row : d)
    for (auto& x : row)
      if (gen() % 3) x = Scalar(static_cast<std::int64_t>(gen() % 9) - 4);
  return Matrix::from_dense(d);
}

Outcome properties() {
  Outcome o;
  Checker c(o);
  std::mt19937_64 gen(2024);
  for (int t = 0; t < 40; ++t) {
    Matrix m = random_matrix(gen, 1 + gen() % 7, 1 + gen() % 9);
    c.require(rank(m) + kernel(m).dim() == m.cols(), "rank-nullity");
    Subspace u = Subspace::span(8, random_matrix(gen, 1 + gen() % 5, 8).row_data());
    Subspace v = Subspace::span(8, random_matrix(gen, 1 + gen() % 5, 8).row_data());
    c.require(sum(u, v).dim() + intersect(u, v).dim() == u.dim() + v.dim(), "Grassmann");
  }
  for (const auto& pres : {polynomial(3), antisymmetrizer(3, 3), quantum_space(2)}) {
    Algebra A(pres);
    KoszulComplex K(A);
    for (std::size_t d = 1; d <= 4; ++d) {
      const Index amb = tensor_dim(pres.n, d);
      for (int t = 0; t < 4; ++t) {
        SparseVector x;
        for (Index w = 0; w < amb; ++w)
          if (gen() % 3 == 0) x.push_back({w, Scalar(static_cast<std::int64_t>(gen() % 7) - 3)});
        SparseVector y = x;
        for (const auto& row : A.ideal_component(d).basis())
          y = add_scaled(y, Scalar(static_cast<std::int64_t>(gen() % 5) - 2), row);
        c.require(A.reduce_coords(d, x) == A.reduce_coords(d, y), pres.label + ": reduction");
      }
    }
    for (int t = 0; t < 10; ++t) {
      Word u, v, w;
      for (std::size_t s = 0, e = gen() % 3; s < e; ++s) u.letters.push_back(static_cast<Letter>(gen() % pres.n));
      for (std::size_t s = 0, e = gen() % 3; s < e; ++s) v.letters.push_back(static_cast<Letter>(gen() % pres.n));
      for (std::size_t s = 0, e = gen() % 3; s < e; ++s) w.letters.push_back(static_cast<Letter>(gen() % pres.n));
      AlgebraClass x = A.word_class(u), y = A.add(A.word_class(v), A.scale(Scalar(2), A.word_class(v))),
                   z = A.word_class(w);
      c.require(A.multiply(A.multiply(x, y), z) == A.multiply(x, A.multiply(y, z)), pres.label + ": associativity");
    }
    for (std::size_t m = 0; m <= 5; ++m)
      for (std::size_t s = 0; s <= m; ++s) {
        try {
          K.check_inclusion(m, s);
        } catch (const InclusionError&) {
          c.require(false, pres.label + ": J inclusion m=" + str(m) + " s=" + str(s));
        }
      }
  }
  Algebra Q(quantum_space(2));
  c.require(!check_specializable(Q, random_rational_matrix(2, 1)), "specializability guard, generic q");
  c.require(!check_specializable(Q, ones_matrix(2)), "specializability guard, ones");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "alternating binomial identity", 1, eq1},
      {2, "antisymmetrizer dual dimensions", 60, dual_dims},
      {3, "admissible-count identity", 120, admissible},
      {4, "Koszul certificates", 300, certificates},
      {5, "Hilbert series duality", 60, dvp},
      {6, "relations of end(A) for two variables", 1, warning},
      {7, "character series product", 600, kmt},
      {8, "Bos/Ferm cross-check", 600, bos_ferm_check},
      {9, "MacMahon master theorem", 120, mmt},
      {10, "N-analogue of the master theorem", 300, nmt},
      {11, "property suites", 600, properties},
  };
  int failures = 0;
  for (const auto& cr : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && secs > cr.limit_seconds) o = {false, "runtime limit exceeded"};
    if (!o.ok) ++failures;
    std::printf("[%s] %2d %-40s %8.3f s (limit %g s)%s%s\n", o.ok ? "PASS" : "FAIL", cr.id, cr.name, secs,
                cr.limit_seconds, o.note.empty() ? "" : "  ", o.note.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
