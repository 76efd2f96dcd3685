#include "nkoszul/homog.hpp"

#include <stdexcept>

namespace nkoszul {

void AlgebraPresentation::validate() const {
  if (N < 2) throw std::invalid_argument("relation degree N must be at least 2");
  for (const auto& r : relations) {
    if (r.grade() != N) throw std::invalid_argument("relation of grade " + std::to_string(r.grade()) + ", expected N");
    if (r.alphabet() != n) throw std::invalid_argument("relation over a different alphabet");
  }
}

SparseVector DegreeData::normal_form(Index word) const {
  std::int32_t pos = position[word];
  if (pos >= 0) return {{static_cast<Index>(pos), Scalar(1)}};
  return pivot_nf[*ideal.pivot_row(word)];
}

Algebra::Algebra(AlgebraPresentation presentation) : pres_(std::move(presentation)) {
  pres_.validate();
  std::vector<SparseVector> rows;
  rows.reserve(pres_.relations.size());
  for (const auto& r : pres_.relations) rows.push_back(r.coords());
  relation_space_ = Subspace::span(tensor_dim(pres_.n, pres_.N), std::move(rows));
}

const DegreeData& Algebra::degree(std::size_t d) const {
  std::lock_guard lock(mutex_);
  while (cache_.size() <= d) {
    const DegreeData* prev = cache_.empty() ? nullptr : cache_.back().get();
    cache_.push_back(build_degree(cache_.size(), prev));
  }
  return *cache_[d];
}

std::unique_ptr<DegreeData> Algebra::build_degree(std::size_t d, const DegreeData* previous) const {
  auto data = std::make_unique<DegreeData>();
  data->degree = d;
  data->ambient = tensor_dim(pres_.n, d);
  const Index ambient = data->ambient;
  if (d < pres_.N) {
    data->ideal = Subspace(ambient);
  } else if (d == pres_.N) {
    data->ideal = relation_space_;
  } else {
    // I_d = V (x) I_{d-1} + R (x) V^{(x)(d-N)}. The first summand is block
    // diagonal over the leading letter and already reduced, so it goes in
    // first and the R-rows are reduced against it.
    EchelonBuilder eb(ambient);
    const Index block = tensor_dim(pres_.n, d - 1);
    for (Index a = 0; a < pres_.n; ++a) {
      for (const auto& row : previous->ideal.basis()) {
        SparseVector shifted;
        shifted.reserve(row.size());
        for (const auto& e : row) shifted.push_back({a * block + e.col, e.value});
        eb.insert(std::move(shifted));
      }
    }
    const Index tail = tensor_dim(pres_.n, d - pres_.N);
    for (const auto& r : relation_space_.basis()) {
      for (Index w = 0; w < tail; ++w) {
        SparseVector row;
        row.reserve(r.size());
        for (const auto& e : r) row.push_back({e.col * tail + w, e.value});
        eb.insert(std::move(row));
      }
    }
    data->ideal = std::move(eb).finish();
  }

  data->position.assign(ambient, -1);
  std::size_t next_pivot = 0;
  const auto& pivots = data->ideal.pivots();
  for (Index c = 0; c < ambient; ++c) {
    if (next_pivot < pivots.size() && pivots[next_pivot] == c) {
      ++next_pivot;
      continue;
    }
    data->position[c] = static_cast<std::int32_t>(data->normal.size());
    data->normal.push_back(c);
  }
  data->pivot_nf.reserve(data->ideal.dim());
  for (std::size_t i = 0; i < data->ideal.dim(); ++i) {
    const auto& row = data->ideal.basis()[i];
    SparseVector nf;
    nf.reserve(row.size() - 1);
    for (std::size_t t = 1; t < row.size(); ++t)
      nf.push_back({static_cast<Index>(data->position[row[t].col]), -row[t].value});
    data->pivot_nf.push_back(std::move(nf));
  }
  return data;
}

std::vector<Word> Algebra::normal_basis(std::size_t d) const {
  const auto& data = degree(d);
  std::vector<Word> out;
  out.reserve(data.normal.size());
  for (Index w : data.normal) out.push_back(word_at(w, pres_.n, d));
  return out;
}

IntSeries Algebra::hilbert_series(std::size_t max_degree) const {
  std::vector<mpz_class> dims;
  for (std::size_t d = 0; d <= max_degree; ++d) dims.emplace_back(static_cast<unsigned long>(dim_component(d)));
  return IntSeries(IntegerRing{}, max_degree, std::move(dims));
}

AlgebraClass Algebra::unit() const { return {this, 0, {{0, Scalar(1)}}}; }

AlgebraClass Algebra::zero(std::size_t d) const { return {this, d, {}}; }

AlgebraClass Algebra::word_class(const Word& w) const {
  const auto& data = degree(w.grade());
  return {this, w.grade(), data.normal_form(word_index(w, pres_.n))};
}

AlgebraClass Algebra::reduce(const Tensor& t) const {
  if (t.alphabet() != pres_.n) throw DimensionError("tensor alphabet does not match the algebra");
  return reduce_coords(t.grade(), t.coords());
}

AlgebraClass Algebra::reduce_coords(std::size_t d, const SparseVector& word_coords) const {
  const auto& data = degree(d);
  SparseAccumulator acc;
  for (const auto& e : word_coords) {
    if (e.col >= data.ambient) throw DimensionError("word coordinate outside V^d");
    acc.add_scaled(e.value, data.normal_form(e.col));
  }
  return {this, d, acc.take()};
}

Tensor Algebra::representative(const AlgebraClass& a) const {
  check_owner(a);
  const auto& data = degree(a.degree);
  SparseVector coords;
  coords.reserve(a.coords.size());
  for (const auto& e : a.coords) coords.push_back({data.normal[e.col], e.value});
  return Tensor(pres_.n, a.degree, std::move(coords));
}

void Algebra::check_owner(const AlgebraClass& a) const {
  if (a.algebra != this) throw std::invalid_argument("class belongs to a different algebra");
}

AlgebraClass Algebra::multiply(const AlgebraClass& a, const AlgebraClass& b) const {
  check_owner(a);
  check_owner(b);
  const std::size_t d = a.degree + b.degree;
  if (a.is_zero() || b.is_zero()) return zero(d);
  if (a.degree == 0) return scale(a.coords[0].value, b);
  if (b.degree == 0) return scale(b.coords[0].value, a);
  const auto& da = degree(a.degree);
  const auto& db = degree(b.degree);
  const auto& dd = degree(d);
  const Index shift = db.ambient;
  SparseAccumulator acc;
  for (const auto& x : a.coords) {
    const Index left = da.normal[x.col] * shift;
    for (const auto& y : b.coords) acc.add_scaled(x.value * y.value, dd.normal_form(left + db.normal[y.col]));
  }
  return {this, d, acc.take()};
}

AlgebraClass Algebra::add(const AlgebraClass& a, const AlgebraClass& b) const {
  check_owner(a);
  check_owner(b);
  if (a.degree != b.degree) throw std::invalid_argument("adding classes of different degrees");
  return {this, a.degree, add_scaled(a.coords, Scalar(1), b.coords)};
}

AlgebraClass Algebra::scale(const Scalar& c, const AlgebraClass& a) const {
  check_owner(a);
  return {this, a.degree, scaled(a.coords, c)};
}

AlgebraPresentation dual(const AlgebraPresentation& a) {
  a.validate();
  const Index dim = tensor_dim(a.n, a.N);
  std::vector<SparseVector> rows;
  for (const auto& r : a.relations) rows.push_back(r.coords());
  Subspace perp = kernel(Matrix::from_rows(dim, std::move(rows)));
  AlgebraPresentation out;
  out.label = "dual(" + a.label + ")";
  out.n = a.n;
  out.N = a.N;
  for (const auto& v : perp.basis()) out.relations.emplace_back(a.n, a.N, v);
  return out;
}

Subspace ideal_component_bruteforce(const AlgebraPresentation& a, std::size_t d) {
  const Index ambient = tensor_dim(a.n, d);
  if (d < a.N) return Subspace(ambient);
  std::vector<SparseVector> rows;
  for (std::size_t i = 0; i + a.N <= d; ++i) {
    const std::size_t j = d - a.N - i;
    const Index left_count = tensor_dim(a.n, i);
    const Index right_count = tensor_dim(a.n, j);
    const Index mid_shift = tensor_dim(a.n, a.N + j);
    for (Index left = 0; left < left_count; ++left)
      for (const auto& r : a.relations)
        for (Index right = 0; right < right_count; ++right) {
          std::vector<Entry> entries;
          for (const auto& e : r.coords())
            entries.push_back({left * mid_shift + e.col * right_count + right, e.value});
          rows.push_back(make_sparse(std::move(entries)));
        }
  }
  return Subspace::span(ambient, std::move(rows));
}

std::optional<AlgebraClass> GradedRing::unit_inverse(const AlgebraClass& a) const {
  if (a.degree != 0 || a.coords.empty()) return std::nullopt;
  return algebra->scale(a.coords[0].value.inverse(), algebra->unit());
}

std::string GradedRing::to_string(const AlgebraClass& a) const {
  return algebra->representative(a).to_string();
}

}  // namespace nkoszul
