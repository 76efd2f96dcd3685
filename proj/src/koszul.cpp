#include "nkoszul/koszul.hpp"

#include "nkoszul/builtins.hpp"

namespace nkoszul {

std::size_t nu(std::size_t N, std::size_t l) { return N * (l / 2) + (l % 2); }

Subspace dual_koszul_subspace_bruteforce(const AlgebraPresentation& a, std::size_t m) {
  const Index ambient = tensor_dim(a.n, m);
  if (m < a.N) return Subspace::whole(ambient);
  std::vector<SparseVector> rel;
  for (const auto& r : a.relations) rel.push_back(r.coords());
  const Subspace R = Subspace::span(tensor_dim(a.n, a.N), std::move(rel));
  Subspace out = Subspace::whole(ambient);
  for (std::size_t i = 0; i + a.N <= m; ++i) {
    const std::size_t j = m - a.N - i;
    const Index left_count = tensor_dim(a.n, i);
    const Index right_count = tensor_dim(a.n, j);
    const Index mid_shift = tensor_dim(a.n, a.N + j);
    std::vector<SparseVector> rows;
    for (Index left = 0; left < left_count; ++left)
      for (const auto& r : R.basis())
        for (Index right = 0; right < right_count; ++right) {
          SparseVector row;
          for (const auto& e : r) row.push_back({left * mid_shift + e.col * right_count + right, e.value});
          rows.push_back(make_sparse(std::move(row)));
        }
    out = intersect(out, Subspace::span(ambient, std::move(rows)));
  }
  return out;
}

KoszulComplex::KoszulComplex(const Algebra& algebra) : algebra_(algebra) {}

const Subspace& KoszulComplex::J(std::size_t m) const {
  std::lock_guard lock(mutex_);
  const std::size_t n = algebra_.n();
  const std::size_t N = algebra_.N();
  while (j_cache_.size() <= m) {
    const std::size_t d = j_cache_.size();
    const Index ambient = tensor_dim(n, d);
    if (d < N) {
      j_cache_.push_back(std::make_unique<Subspace>(Subspace::whole(ambient)));
    } else if (d == N) {
      j_cache_.push_back(std::make_unique<Subspace>(algebra_.relation_space()));
    } else {
      const Subspace& prev = *j_cache_[d - 1];
      const Index block = tensor_dim(n, d - 1);
      std::vector<SparseVector> left, right;
      left.reserve(n * prev.dim());
      right.reserve(n * prev.dim());
      for (Index a = 0; a < n; ++a)
        for (const auto& row : prev.basis()) {
          SparseVector v;
          v.reserve(row.size());
          for (const auto& e : row) v.push_back({a * block + e.col, e.value});
          left.push_back(std::move(v));
        }
      for (const auto& row : prev.basis())
        for (Index b = 0; b < n; ++b) {
          SparseVector v;
          v.reserve(row.size());
          for (const auto& e : row) v.push_back({e.col * static_cast<Index>(n) + b, e.value});
          right.push_back(std::move(v));
        }
      j_cache_.push_back(std::make_unique<Subspace>(
          intersect(Subspace::span(ambient, std::move(left)), Subspace::span(ambient, std::move(right)))));
    }
  }
  return *j_cache_[m];
}

namespace {

// w in V^{(x)s} (x) V^{(x)rest} split by its first s letters: (u, w'_u).
std::vector<std::pair<Index, SparseVector>> split_prefix(const SparseVector& w, Index rest_dim) {
  std::vector<std::pair<Index, SparseVector>> out;
  for (const auto& e : w) {
    const Index u = e.col / rest_dim;
    if (out.empty() || out.back().first != u) out.emplace_back(u, SparseVector{});
    out.back().second.push_back({e.col % rest_dim, e.value});
  }
  return out;
}

}  // namespace

void KoszulComplex::check_inclusion(std::size_t m, std::size_t s) const {
  if (s > m) throw std::invalid_argument("split length exceeds degree");
  const Subspace& hi = J(m);
  const Subspace& lo = J(m - s);
  const Index rest = tensor_dim(algebra_.n(), m - s);
  for (std::size_t r = 0; r < hi.dim(); ++r)
    for (const auto& [u, part] : split_prefix(hi.basis()[r], rest))
      if (!lo.contains(part))
        throw InclusionError("J_" + std::to_string(m) + " is not contained in V^" + std::to_string(s) + " (x) J_" +
                             std::to_string(m - s));
}

Matrix KoszulComplex::differential(std::size_t m, std::size_t l) const {
  if (l == 0) throw std::invalid_argument("differential index must be at least 1");
  const std::size_t hi_nu = nu(l);
  const std::size_t lo_nu = nu(l - 1);
  if (hi_nu > m) throw std::invalid_argument("homological degree beyond the strand");
  const std::size_t k = m - hi_nu;
  const std::size_t s = hi_nu - lo_nu;
  const std::size_t n = algebra_.n();
  const Subspace& hi = J(hi_nu);
  const Subspace& lo = J(lo_nu);
  const Index rest = tensor_dim(n, lo_nu);
  const Index shift = tensor_dim(n, s);

  check_inclusion(hi_nu, s);
  std::vector<std::vector<std::pair<Index, SparseVector>>> pieces;
  pieces.reserve(hi.dim());
  for (const auto& w : hi.basis()) {
    auto parts = split_prefix(w, rest);
    for (auto& [u, part] : parts) part = lo.coordinates_unchecked(part);
    pieces.push_back(std::move(parts));
  }

  const DegreeData& src = algebra_.degree(k);
  const DegreeData& dst = algebra_.degree(k + s);
  const Index dim_lo = static_cast<Index>(lo.dim());
  const Index rows = static_cast<Index>(src.normal.size() * hi.dim());
  const Index cols = static_cast<Index>(dst.normal.size() * lo.dim());
  std::vector<SparseVector> out;
  out.reserve(rows);
  for (Index e : src.normal) {
    for (const auto& parts : pieces) {
      SparseAccumulator acc;
      for (const auto& [u, coords] : parts) {
        const SparseVector nf = dst.normal_form(e * shift + u);
        for (const auto& x : nf)
          for (const auto& y : coords) acc.add(x.col * dim_lo + y.col, x.value * y.value);
      }
      out.push_back(acc.take());
    }
  }
  return Matrix::from_rows(cols, std::move(out));
}

DegreeReport KoszulComplex::homology_report(std::size_t m) const {
  DegreeReport rep;
  rep.m = m;
  std::size_t top = 0;
  while (nu(top + 1) <= m) ++top;

  std::vector<std::optional<Matrix>> diffs(top + 2);
  std::vector<std::size_t> ranks(top + 2, 0);
  for (std::size_t l = 0; l <= top; ++l) {
    HomologyEntry e;
    e.l = l;
    e.nu = nu(l);
    e.k = m - e.nu;
    e.dim_A = algebra_.dim_component(e.k);
    e.dim_J = dim_J(e.nu);
    e.dim = e.dim_A * e.dim_J;
    rep.entries.push_back(e);
  }
  for (std::size_t l = 1; l <= top; ++l) {
    if (rep.entries[l].dim == 0 || rep.entries[l - 1].dim == 0) continue;
    diffs[l] = differential(m, l);
    ranks[l] = rank(*diffs[l]);
  }
  for (std::size_t l = 0; l <= top; ++l) {
    auto& e = rep.entries[l];
    e.rank_out = l >= 1 ? ranks[l] : 0;
    e.rank_in = l + 1 <= top ? ranks[l + 1] : 0;
    e.homology = e.dim - e.rank_out - e.rank_in;
    rep.euler += (l % 2 == 0 ? 1 : -1) * static_cast<long long>(e.dim);
  }
  for (std::size_t l = 1; l < top; ++l)
    if (diffs[l] && diffs[l + 1] && !((*diffs[l + 1]) * (*diffs[l])).is_zero()) rep.dd_zero = false;
  return rep;
}

KoszulCertificate KoszulComplex::certificate(std::size_t max_degree) const {
  KoszulCertificate cert;
  cert.max_degree = max_degree;
  for (std::size_t m = 1; m <= max_degree; ++m) {
    DegreeReport rep = homology_report(m);
    std::optional<CertificateFailure> fail;
    if (!rep.dd_zero) fail = CertificateFailure{m, 0, "composite of consecutive differentials is nonzero"};
    for (const auto& e : rep.entries) {
      if (fail || e.homology == 0) continue;
      if (e.l == 0)
        fail = CertificateFailure{m, 0, "d_1 is not surjective onto A_m (H_0 nonzero in positive degree)"};
      else
        fail = CertificateFailure{m, e.l, "H_" + std::to_string(e.l) + " is nonzero"};
    }
    cert.degrees.push_back(std::move(rep));
    if (fail) {
      cert.first_failure = fail;
      return cert;
    }
  }
  cert.passed = true;
  return cert;
}

IntSeries dvp_rhs(const KoszulComplex& K, std::size_t D) {
  std::vector<mpz_class> c(D + 1, 0);
  for (std::size_t l = 0; K.nu(l) <= D; ++l) {
    mpz_class d = static_cast<unsigned long>(K.dim_J(K.nu(l)));
    c[K.nu(l)] += (l % 2 == 0) ? d : mpz_class(-d);
  }
  return IntSeries(IntegerRing{}, D, std::move(c));
}

namespace {

SeriesCheck compare_product(const IntSeries& a, const IntSeries& b) {
  SeriesCheck out;
  out.truncation = a.truncation();
  IntSeries prod = mul(a, b);
  out.first_failure = first_difference(prod, IntSeries::one(IntegerRing{}, a.truncation()));
  out.passed = !out.first_failure;
  out.lhs = a.coefficients();
  out.rhs = b.coefficients();
  out.product = prod.coefficients();
  return out;
}

}  // namespace

SeriesCheck dvp_check(const KoszulComplex& K, std::size_t D) {
  return compare_product(K.algebra().hilbert_series(D), dvp_rhs(K, D));
}

mpz_class identity_eq1(std::size_t n, std::size_t m) {
  mpz_class total = 0;
  for (std::size_t k = 0; k <= m; ++k) {
    mpz_class term = binomial(static_cast<long>(n + k) - 1, static_cast<long>(k)) *
                     binomial(static_cast<long>(n), static_cast<long>(m - k));
    total += (k % 2 == 0) ? term : mpz_class(-term);
  }
  return total;
}

AdmissibleIdentityReport admissible_identity_check(std::size_t n, std::size_t N, std::size_t D) {
  if (N < 2 || N > n) throw std::invalid_argument("admissible identity needs 2 <= N <= n");
  AdmissibleIdentityReport rep;
  rep.n = n;
  rep.N = N;
  rep.truncation = D;

  std::vector<mpz_class> poly(1, 0);
  for (std::size_t l = 0; nu(N, l) <= n; ++l) {
    const std::size_t d = nu(N, l);
    mpz_class c = binomial(static_cast<long>(n), static_cast<long>(d));
    if (c == 0) continue;
    if (poly.size() <= d) poly.resize(d + 1, 0);
    poly[d] += (l % 2 == 0) ? c : mpz_class(-c);
    rep.top_index = l;
  }
  const std::size_t q = n / N, r = n % N;
  rep.expected_top_index = r == 0 ? 2 * q : 2 * q + 1;
  rep.degree_rule_holds = rep.top_index == rep.expected_top_index;
  rep.polynomial = poly;

  IntSeries P(IntegerRing{}, D, poly);
  IntSeries inv = invert(P);
  std::vector<mpz_class> counts;
  for (std::size_t k = 0; k <= D; ++k) counts.push_back(count_admissible(n, N, k));
  IntSeries L(IntegerRing{}, D, counts);
  rep.first_failure = first_difference(L, inv);
  rep.counts = std::move(counts);
  rep.inverse = inv.coefficients();
  rep.passed = !rep.first_failure && rep.degree_rule_holds;
  return rep;
}

}  // namespace nkoszul
