#include <doctest.h>

#include <random>
#include <set>

#include "nkoszul/freealg.hpp"

using namespace nkoszul;

namespace {

Tensor random_tensor(std::mt19937_64& gen, std::size_t n, std::size_t k) {
  std::vector<std::pair<Word, Scalar>> terms;
  for (int t = 0; t < 4; ++t) {
    Word w;
    for (std::size_t s = 0; s < k; ++s) w.letters.push_back(static_cast<Letter>(gen() % n));
    terms.emplace_back(w, Scalar(static_cast<std::int64_t>(gen() % 7) - 3));
  }
  return Tensor::from_terms(n, k, terms);
}

}  // namespace

TEST_SUITE("freealg") {

TEST_CASE("word indices follow lexicographic order") {
  CHECK(word_index(Word{{0, 1}}, 3) == 1);
  CHECK(word_index(Word{{2, 0}}, 3) == 6);
  CHECK(word_at(5, 3, 2) == Word{{1, 2}});
  for (Index i = 0; i < 27; ++i) CHECK(word_index(word_at(i, 3, 3), 3) == i);
  CHECK_THROWS_AS(tensor_dim(100, 10), std::overflow_error);
}

TEST_CASE("concatenation of generators and bilinearity") {
  Tensor x1 = Tensor::word(2, Word{{0}});
  Tensor x2 = Tensor::word(2, Word{{1}});
  CHECK(concat(x1, x2) == Tensor::word(2, Word{{0, 1}}));
  CHECK(concat(x1 - x2, x1) == Tensor::word(2, Word{{0, 0}}) - Tensor::word(2, Word{{1, 0}}));
}

TEST_CASE("concatenation is associative") {
  std::mt19937_64 gen(4);
  for (int trial = 0; trial < 20; ++trial) {
    Tensor a = random_tensor(gen, 3, 1 + trial % 2), b = random_tensor(gen, 3, 2), c = random_tensor(gen, 3, 1);
    CHECK(concat(a, concat(b, c)) == concat(concat(a, b), c));
  }
}

TEST_CASE("pairing is diagonal in the word basis") {
  CHECK(pair(Tensor::word(2, Word{{0, 1}}), Tensor::word(2, Word{{0, 1}})) == Scalar(1));
  CHECK(pair(Tensor::word(2, Word{{0, 1}}), Tensor::word(2, Word{{1, 0}})).is_zero());
  for (Index i = 0; i < 9; ++i)
    for (Index j = 0; j < 9; ++j)
      CHECK(pair(Tensor::word(3, word_at(i, 3, 2)), Tensor::word(3, word_at(j, 3, 2))) == Scalar(i == j ? 1 : 0));
}

TEST_CASE("antisymmetric dual tensors annihilate symmetric tensors") {
  for (Letter i = 0; i < 3; ++i)
    for (Letter j = 0; j < 3; ++j) {
      Tensor xi = Tensor::word(3, Word{{i, j}}) - Tensor::word(3, Word{{j, i}});
      for (Letter a = 0; a < 3; ++a)
        for (Letter b = a; b < 3; ++b) {
          Tensor v = Tensor::word(3, Word{{a, b}}) + Tensor::word(3, Word{{b, a}});
          CHECK(pair(xi, v).is_zero());
        }
    }
}

TEST_CASE("shuffle_pairs interleaves dual and primal indices") {
  // x^1 with x_2 (n = 2): z_2^1 has flat index 1 * 2 + 0.
  Tensor s = shuffle_pairs(Tensor::word(2, Word{{0}}), Tensor::word(2, Word{{1}}));
  CHECK(s == Tensor::word(4, Word{{2}}));
  Tensor t = shuffle_pairs(Tensor::word(2, Word{{0, 1}}), Tensor::word(2, Word{{0, 1}}));
  CHECK(t == Tensor::word(4, Word{{z_letter(2, 0, 0), z_letter(2, 1, 1)}}));
}

TEST_CASE("shuffle_pairs is linear and injective on word pairs") {
  std::mt19937_64 gen(6);
  Tensor a = random_tensor(gen, 2, 2), b = random_tensor(gen, 2, 2), v = random_tensor(gen, 2, 2);
  CHECK(shuffle_pairs(a + b, v) == shuffle_pairs(a, v) + shuffle_pairs(b, v));
  std::set<Word> images;
  for (Index j = 0; j < 8; ++j)
    for (Index i = 0; i < 8; ++i) {
      Tensor img = shuffle_pairs(Tensor::word(2, word_at(j, 2, 3)), Tensor::word(2, word_at(i, 2, 3)));
      REQUIRE(img.terms().size() == 1);
      images.insert(img.terms()[0].first);
    }
  CHECK(images.size() == 64);
}

TEST_CASE("grade and alphabet mismatches are rejected") {
  CHECK_THROWS(concat(Tensor::word(2, Word{{0}}), Tensor::word(3, Word{{0}})));
  CHECK_THROWS(pair(Tensor::word(2, Word{{0}}), Tensor::word(2, Word{{0, 1}})));
  CHECK_THROWS(shuffle_pairs(Tensor::word(2, Word{{0}}), Tensor::word(2, Word{{0, 1}})));
}

}
