#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nkoszul/linalg.hpp"

namespace nkoszul {

using Letter = std::uint32_t;

/// A word x_{i1} ... x_{ik} over generator indices in [0, n).
struct Word {
  std::vector<Letter> letters;

  std::size_t grade() const { return letters.size(); }
  auto operator<=>(const Word&) const = default;
};

/// n^k as an index bound; throws std::overflow_error when V^{(x)k} has more
/// coordinates than an Index can address.
Index tensor_dim(std::size_t n, std::size_t k);

/// Coordinate of a word in V^{(x)k}: words are ordered lexicographically with
/// x_1 < ... < x_n, which for equal lengths is the base-n value.
Index word_index(const Word& w, std::size_t n);
Word word_at(Index index, std::size_t n, std::size_t k);

/// Homogeneous element of V^{(x)k}, stored as a sparse vector over word
/// coordinates. The same type holds dual tensors in V*^{(x)k}; the pairing
/// between them is diagonal in the word basis.
class Tensor {
 public:
  Tensor(std::size_t n, std::size_t grade) : n_(n), grade_(grade) {}
  Tensor(std::size_t n, std::size_t grade, SparseVector coords);
  static Tensor word(std::size_t n, const Word& w, const Scalar& coeff = Scalar(1));
  static Tensor from_terms(std::size_t n, std::size_t grade, const std::vector<std::pair<Word, Scalar>>& terms);

  std::size_t alphabet() const { return n_; }
  std::size_t grade() const { return grade_; }
  const SparseVector& coords() const { return coords_; }
  bool is_zero() const { return coords_.empty(); }
  std::vector<std::pair<Word, Scalar>> terms() const;
  Scalar coefficient(const Word& w) const;

  Tensor operator-() const;
  friend Tensor operator+(const Tensor& a, const Tensor& b);
  friend Tensor operator-(const Tensor& a, const Tensor& b);
  friend Tensor operator*(const Scalar& c, const Tensor& t);
  bool operator==(const Tensor&) const = default;

  std::string to_string() const;

 private:
  std::size_t n_;
  std::size_t grade_;
  SparseVector coords_;
};

/// Product in the free algebra T(V): bilinear word concatenation.
Tensor concat(const Tensor& a, const Tensor& b);

/// Natural pairing of V*^{(x)k} with V^{(x)k}.
Scalar pair(const Tensor& xi, const Tensor& v);

/// Interleaves a dual tensor xi (grade N) and a tensor v (grade N) into
/// (V* (x) V)^{(x)N}: (j1..jN, i1..iN) -> z_{i1}^{j1} ... z_{iN}^{jN}, where
/// the generator z_i^j has flat index i*n + j.
Tensor shuffle_pairs(const Tensor& xi, const Tensor& v);

/// Flat index of z_i^j.
inline Letter z_letter(std::size_t n, Letter i, Letter j) { return static_cast<Letter>(i * n + j); }

}  // namespace nkoszul
