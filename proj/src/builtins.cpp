#include "nkoszul/builtins.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace nkoszul {

AlgebraPresentation polynomial(std::size_t n) {
  if (n < 1) throw std::invalid_argument("polynomial algebra needs n >= 1");
  AlgebraPresentation a;
  a.label = "poly(" + std::to_string(n) + ")";
  a.n = n;
  a.N = 2;
  for (Letter i = 0; i < n; ++i)
    for (Letter j = i + 1; j < n; ++j)
      a.relations.push_back(Tensor::word(n, Word{{i, j}}) - Tensor::word(n, Word{{j, i}}));
  return a;
}

namespace {

int permutation_sign(const std::vector<std::size_t>& perm) {
  int sign = 1;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

}  // namespace

AlgebraPresentation antisymmetrizer(std::size_t n, std::size_t N) {
  if (N < 2 || N > n) throw std::invalid_argument("antisymmetrizer algebra needs 2 <= N <= n");
  AlgebraPresentation a;
  a.label = "antisym(" + std::to_string(n) + "," + std::to_string(N) + ")";
  a.n = n;
  a.N = N;
  // Ascending index tuples via a selection mask in lexicographic order.
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + static_cast<long>(N), true);
  do {
    std::vector<Letter> idx;
    for (Letter i = 0; i < n; ++i)
      if (mask[i]) idx.push_back(i);
    std::vector<std::size_t> perm(N);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::pair<Word, Scalar>> terms;
    do {
      Word w;
      for (std::size_t s = 0; s < N; ++s) w.letters.push_back(idx[perm[s]]);
      terms.emplace_back(std::move(w), Scalar(permutation_sign(perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    a.relations.push_back(Tensor::from_terms(n, N, terms));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return a;
}

AlgebraPresentation free_algebra(std::size_t n, std::size_t N) {
  AlgebraPresentation a;
  a.label = "free(" + std::to_string(n) + ")";
  a.n = n;
  a.N = N;
  a.validate();
  return a;
}

std::string quantum_parameter_name(std::size_t i, std::size_t j) {
  if (i < 9 && j < 9) return "q" + std::to_string(i + 1) + std::to_string(j + 1);
  return "q" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

AlgebraPresentation quantum_space(std::size_t n, const std::map<std::pair<std::size_t, std::size_t>, Scalar>& q) {
  if (n < 1) throw std::invalid_argument("quantum space needs n >= 1");
  AlgebraPresentation a;
  a.label = "qspace(" + std::to_string(n) + ")";
  a.n = n;
  a.N = 2;
  for (Letter i = 0; i < n; ++i)
    for (Letter j = i + 1; j < n; ++j) {
      auto it = q.find({i, j});
      Scalar qij = it != q.end() ? it->second : Scalar::param(quantum_parameter_name(i, j));
      if (qij.is_zero()) throw std::invalid_argument("quantum space parameter must be nonzero");
      a.relations.push_back(Tensor::word(n, Word{{j, i}}) - qij * Tensor::word(n, Word{{i, j}}));
    }
  return a;
}

AlgebraPresentation quantum_space_uniform(std::size_t n, const Scalar& q) {
  std::map<std::pair<std::size_t, std::size_t>, Scalar> params;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) params[{i, j}] = q;
  auto a = quantum_space(n, params);
  a.label = "qspace(" + std::to_string(n) + ",q=" + q.to_string() + ")";
  return a;
}

bool is_admissible(const Word& w, std::size_t N) {
  std::size_t run = 1;
  for (std::size_t s = 1; s < w.letters.size(); ++s) {
    run = w.letters[s] < w.letters[s - 1] ? run + 1 : 1;
    if (run >= N) return false;
  }
  return true;
}

mpz_class count_admissible(std::size_t n, std::size_t N, std::size_t k) {
  if (N < 2) throw std::invalid_argument("descent length N must be at least 2");
  if (k == 0) return 1;
  if (n == 0) return 0;
  // table[c][r]: words ending in letter c whose final strictly decreasing
  // run has length r + 1 (so r < N - 1).
  std::vector<std::vector<mpz_class>> table(n, std::vector<mpz_class>(N - 1, 0));
  for (std::size_t c = 0; c < n; ++c) table[c][0] = 1;
  for (std::size_t len = 2; len <= k; ++len) {
    std::vector<std::vector<mpz_class>> next(n, std::vector<mpz_class>(N - 1, 0));
    for (std::size_t last = 0; last < n; ++last)
      for (std::size_t r = 0; r + 1 < N; ++r) {
        const mpz_class& count = table[last][r];
        if (count == 0) continue;
        for (std::size_t c = 0; c < n; ++c) {
          if (c < last) {
            if (r + 2 < N) next[c][r + 1] += count;
          } else {
            next[c][0] += count;
          }
        }
      }
    table = std::move(next);
  }
  mpz_class total = 0;
  for (const auto& row : table)
    for (const auto& v : row) total += v;
  return total;
}

std::vector<Word> enumerate_admissible(std::size_t n, std::size_t N, std::size_t k) {
  std::vector<Word> out;
  Word w;
  w.letters.reserve(k);
  // Depth-first in increasing letter order yields lex order.
  auto rec = [&](auto&& self, std::size_t run) -> void {
    if (w.letters.size() == k) {
      out.push_back(w);
      return;
    }
    for (Letter c = 0; c < n; ++c) {
      std::size_t next_run = (!w.letters.empty() && c < w.letters.back()) ? run + 1 : 1;
      if (next_run >= N) continue;
      w.letters.push_back(c);
      self(self, next_run);
      w.letters.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

mpz_class dual_dims_closed_form(std::size_t n, std::size_t N, std::size_t m) {
  if (N < 2 || N > n) throw std::invalid_argument("closed form needs 2 <= N <= n");
  if (m < N) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), n, m);
    return r;
  }
  if (m <= n) return binomial(static_cast<long>(n), static_cast<long>(m));
  return 0;
}

}  // namespace nkoszul
