#include "nkoszul/freealg.hpp"

#include <limits>
#include <stdexcept>

namespace nkoszul {

Index tensor_dim(std::size_t n, std::size_t k) {
  std::uint64_t d = 1;
  for (std::size_t i = 0; i < k; ++i) {
    d *= n;
    if (d > std::numeric_limits<Index>::max())
      throw std::overflow_error("tensor power " + std::to_string(n) + "^" + std::to_string(k) +
                                " exceeds the addressable dimension");
  }
  return static_cast<Index>(d);
}

Index word_index(const Word& w, std::size_t n) {
  std::uint64_t idx = 0;
  for (Letter l : w.letters) {
    if (l >= n) throw std::out_of_range("letter outside alphabet");
    idx = idx * n + l;
  }
  return static_cast<Index>(idx);
}

Word word_at(Index index, std::size_t n, std::size_t k) {
  Word w;
  w.letters.resize(k);
  for (std::size_t s = k; s-- > 0;) {
    w.letters[s] = static_cast<Letter>(index % n);
    index /= static_cast<Index>(n);
  }
  return w;
}

Tensor::Tensor(std::size_t n, std::size_t grade, SparseVector coords)
    : n_(n), grade_(grade), coords_(std::move(coords)) {
  Index dim = tensor_dim(n, grade);
  if (!coords_.empty() && coords_.back().col >= dim) throw DimensionError("tensor coordinate outside V^k");
}

Tensor Tensor::word(std::size_t n, const Word& w, const Scalar& coeff) {
  tensor_dim(n, w.grade());
  Tensor t(n, w.grade());
  if (!coeff.is_zero()) t.coords_.push_back({word_index(w, n), coeff});
  return t;
}

Tensor Tensor::from_terms(std::size_t n, std::size_t grade, const std::vector<std::pair<Word, Scalar>>& terms) {
  tensor_dim(n, grade);
  std::vector<Entry> entries;
  for (const auto& [w, c] : terms) {
    if (w.grade() != grade) throw DimensionError("tensor term of the wrong grade");
    entries.push_back({word_index(w, n), c});
  }
  return Tensor(n, grade, make_sparse(std::move(entries)));
}

std::vector<std::pair<Word, Scalar>> Tensor::terms() const {
  std::vector<std::pair<Word, Scalar>> out;
  out.reserve(coords_.size());
  for (const auto& e : coords_) out.emplace_back(word_at(e.col, n_, grade_), e.value);
  return out;
}

Scalar Tensor::coefficient(const Word& w) const {
  if (w.grade() != grade_) return Scalar();
  return value_at(coords_, word_index(w, n_));
}

Tensor Tensor::operator-() const { return Tensor(n_, grade_, scaled(coords_, Scalar(-1))); }

namespace {
void check_same_space(const Tensor& a, const Tensor& b) {
  if (a.alphabet() != b.alphabet()) throw DimensionError("tensor alphabets differ");
  if (a.grade() != b.grade()) throw DimensionError("tensor grades differ");
}
}  // namespace

Tensor operator+(const Tensor& a, const Tensor& b) {
  check_same_space(a, b);
  return Tensor(a.n_, a.grade_, add_scaled(a.coords_, Scalar(1), b.coords_));
}

Tensor operator-(const Tensor& a, const Tensor& b) {
  check_same_space(a, b);
  return Tensor(a.n_, a.grade_, add_scaled(a.coords_, Scalar(-1), b.coords_));
}

Tensor operator*(const Scalar& c, const Tensor& t) { return Tensor(t.n_, t.grade_, scaled(t.coords_, c)); }

std::string Tensor::to_string() const {
  if (coords_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    for (Letter l : w.letters) out += "*x" + std::to_string(l + 1);
  }
  return out;
}

Tensor concat(const Tensor& a, const Tensor& b) {
  if (a.alphabet() != b.alphabet()) throw DimensionError("tensor alphabets differ");
  const std::size_t n = a.alphabet();
  const Index shift = tensor_dim(n, b.grade());
  tensor_dim(n, a.grade() + b.grade());
  std::vector<Entry> entries;
  entries.reserve(a.coords().size() * b.coords().size());
  for (const auto& x : a.coords())
    for (const auto& y : b.coords()) entries.push_back({x.col * shift + y.col, x.value * y.value});
  // Lex order of (x, y) pairs is already increasing in the combined index.
  return Tensor(n, a.grade() + b.grade(), SparseVector(std::move(entries)));
}

Scalar pair(const Tensor& xi, const Tensor& v) {
  if (xi.grade() != v.grade()) throw DimensionError("pairing of tensors of different grades");
  if (xi.alphabet() != v.alphabet()) throw DimensionError("pairing of tensors over different alphabets");
  Scalar s;
  const auto& a = xi.coords();
  const auto& b = v.coords();
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].col < b[j].col) {
      ++i;
    } else if (b[j].col < a[i].col) {
      ++j;
    } else {
      s += a[i].value * b[j].value;
      ++i;
      ++j;
    }
  }
  return s;
}

Tensor shuffle_pairs(const Tensor& xi, const Tensor& v) {
  if (xi.grade() != v.grade()) throw DimensionError("shuffle of tensors of different grades");
  if (xi.alphabet() != v.alphabet()) throw DimensionError("shuffle of tensors over different alphabets");
  const std::size_t n = xi.alphabet();
  const std::size_t k = xi.grade();
  const std::size_t n2 = n * n;
  tensor_dim(n2, k);
  std::vector<Entry> entries;
  entries.reserve(xi.coords().size() * v.coords().size());
  for (const auto& dual : xi.coords()) {
    Word jw = word_at(dual.col, n, k);
    for (const auto& prim : v.coords()) {
      Word iw = word_at(prim.col, n, k);
      std::uint64_t idx = 0;
      for (std::size_t s = 0; s < k; ++s) idx = idx * n2 + z_letter(n, iw.letters[s], jw.letters[s]);
      entries.push_back({static_cast<Index>(idx), dual.value * prim.value});
    }
  }
  return Tensor(n2, k, make_sparse(std::move(entries)));
}

}  // namespace nkoszul
