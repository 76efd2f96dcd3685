#include "nkoszul/linalg.hpp"

#include <algorithm>
#include <map>

namespace nkoszul {

// ------------------------------------------------------------ sparse vectors

SparseVector add_scaled(const SparseVector& a, const Scalar& scale, const SparseVector& b) {
  if (scale.is_zero() || b.empty()) return a;
  SparseVector out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].col < b[j].col)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].col < a[i].col) {
      out.push_back({b[j].col, scale * b[j].value});
      ++j;
    } else {
      Scalar v = a[i].value + scale * b[j].value;
      if (!v.is_zero()) out.push_back({a[i].col, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVector scaled(const SparseVector& v, const Scalar& scale) {
  if (scale.is_zero()) return {};
  SparseVector out = v;
  if (!scale.is_one())
    for (auto& e : out) e.value = e.value * scale;
  return out;
}

SparseVector make_sparse(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
  SparseVector out;
  out.reserve(entries.size());
  for (auto& e : entries) {
    if (!out.empty() && out.back().col == e.col) {
      out.back().value += e.value;
    } else {
      out.push_back(std::move(e));
    }
  }
  std::erase_if(out, [](const Entry& e) { return e.value.is_zero(); });
  return out;
}

Scalar value_at(const SparseVector& v, Index col) {
  auto it = std::lower_bound(v.begin(), v.end(), col, [](const Entry& e, Index c) { return e.col < c; });
  if (it != v.end() && it->col == col) return it->value;
  return Scalar();
}

std::vector<Scalar> to_dense(const SparseVector& v, Index dim) {
  std::vector<Scalar> out(dim);
  for (const auto& e : v) {
    if (e.col >= dim) throw DimensionError("sparse vector entry outside dimension");
    out[e.col] = e.value;
  }
  return out;
}

SparseVector from_dense(std::span<const Scalar> v) {
  SparseVector out;
  for (Index i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.push_back({i, v[i]});
  return out;
}

void SparseAccumulator::add(Index col, const Scalar& value) {
  if (value.is_zero()) return;
  auto [it, inserted] = values_.try_emplace(col, value);
  if (!inserted) it->second += value;
}

void SparseAccumulator::add_scaled(const Scalar& scale, const SparseVector& v) {
  if (scale.is_zero()) return;
  if (scale.is_one()) {
    for (const auto& e : v) add(e.col, e.value);
  } else {
    for (const auto& e : v) add(e.col, scale * e.value);
  }
}

SparseVector SparseAccumulator::take() {
  SparseVector out;
  out.reserve(values_.size());
  for (auto& [c, v] : values_)
    if (!v.is_zero()) out.push_back({c, std::move(v)});
  values_.clear();
  std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
  return out;
}

// -------------------------------------------------------------------- Matrix

Matrix Matrix::from_rows(Index cols, std::vector<SparseVector> rows) {
  Matrix m;
  m.cols_ = cols;
  for (const auto& r : rows)
    if (!r.empty() && r.back().col >= cols) throw DimensionError("row entry outside column range");
  m.rows_ = std::move(rows);
  return m;
}

Matrix Matrix::from_dense(const std::vector<std::vector<Scalar>>& rows) {
  Index cols = rows.empty() ? 0 : static_cast<Index>(rows[0].size());
  std::vector<SparseVector> data;
  data.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.size() != cols) throw DimensionError("ragged dense matrix");
    data.push_back(nkoszul::from_dense(r));
  }
  return from_rows(cols, std::move(data));
}

Matrix Matrix::identity(Index n) {
  std::vector<SparseVector> rows(n);
  for (Index i = 0; i < n; ++i) rows[i].push_back({i, Scalar(1)});
  return from_rows(n, std::move(rows));
}

std::size_t Matrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

bool Matrix::is_zero() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const SparseVector& r) { return r.empty(); });
}

SparseVector Matrix::left_apply(const SparseVector& v) const {
  SparseAccumulator acc;
  for (const auto& e : v) {
    if (e.col >= rows_.size()) throw DimensionError("vector longer than matrix row count");
    acc.add_scaled(e.value, rows_[e.col]);
  }
  return acc.take();
}

Matrix Matrix::operator*(const Matrix& b) const {
  if (cols_ != b.rows()) throw DimensionError("matrix product dimension mismatch");
  std::vector<SparseVector> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(b.left_apply(r));
  return from_rows(b.cols(), std::move(out));
}

Matrix Matrix::transpose() const {
  std::vector<SparseVector> out(cols_);
  for (Index i = 0; i < rows_.size(); ++i)
    for (const auto& e : rows_[i]) out[e.col].push_back({i, e.value});
  return from_rows(rows(), std::move(out));
}

// ------------------------------------------------------------ EchelonBuilder

EchelonBuilder::EchelonBuilder(Index cols) : cols_(cols) {}

bool EchelonBuilder::insert(SparseVector row) {
  // Top-reduction: only the leading entry needs to avoid existing pivots.
  while (!row.empty()) {
    auto it = pivot_.find(row.front().col);
    if (it == pivot_.end()) break;
    Scalar lead = row.front().value;
    row = add_scaled(row, -lead, rows_[it->second]);
  }
  if (row.empty()) return false;
  Scalar lead = row.front().value;
  if (!lead.is_one()) row = scaled(row, lead.inverse());
  pivot_.emplace(row.front().col, rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

SparseVector EchelonBuilder::reduce(SparseVector v) const {
  std::map<Index, Scalar> acc;
  for (auto& e : v) acc.emplace(e.col, std::move(e.value));
  for (auto it = acc.begin(); it != acc.end();) {
    auto p = pivot_.find(it->first);
    if (p == pivot_.end() || it->second.is_zero()) {
      ++it;
      continue;
    }
    Scalar lead = it->second;
    Index col = it->first;
    for (const auto& e : rows_[p->second]) {
      auto [slot, inserted] = acc.try_emplace(e.col, -lead * e.value);
      if (!inserted) slot->second -= lead * e.value;
    }
    it = acc.upper_bound(col);
  }
  SparseVector out;
  for (auto& [c, val] : acc)
    if (!val.is_zero()) out.push_back({c, std::move(val)});
  return out;
}

Subspace EchelonBuilder::finish() && {
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return rows_[a].front().col < rows_[b].front().col; });
  Subspace s(cols_);
  s.basis_.resize(order.size());
  s.pivots_.resize(order.size());
  std::unordered_map<Index, std::size_t> final_row;
  // Back-substitution from the largest pivot down. Finished rows carry no
  // other pivot columns, so one pass over the original entries suffices.
  for (std::size_t k = order.size(); k-- > 0;) {
    SparseVector& row = rows_[order[k]];
    Index pivot = row.front().col;
    bool needs_work = false;
    for (std::size_t t = 1; t < row.size(); ++t)
      if (final_row.count(row[t].col)) {
        needs_work = true;
        break;
      }
    if (needs_work) {
      SparseAccumulator acc;
      for (const auto& e : row) acc.add(e.col, e.value);
      for (std::size_t t = 1; t < row.size(); ++t) {
        auto f = final_row.find(row[t].col);
        if (f == final_row.end()) continue;
        acc.add_scaled(-row[t].value, s.basis_[f->second]);
      }
      row = acc.take();
    }
    s.basis_[k] = std::move(row);
    s.pivots_[k] = pivot;
    final_row.emplace(pivot, k);
  }
  return s;
}

// ------------------------------------------------------------------ Subspace

Subspace Subspace::span(Index ambient, std::vector<SparseVector> vectors) {
  for (const auto& v : vectors)
    if (!v.empty() && v.back().col >= ambient) throw DimensionError("vector outside ambient space");
  std::stable_sort(vectors.begin(), vectors.end(),
                   [](const SparseVector& a, const SparseVector& b) { return a.size() < b.size(); });
  EchelonBuilder eb(ambient);
  for (auto& v : vectors) eb.insert(std::move(v));
  return std::move(eb).finish();
}

Subspace Subspace::whole(Index ambient) {
  Subspace s(ambient);
  s.basis_.reserve(ambient);
  s.pivots_.reserve(ambient);
  for (Index i = 0; i < ambient; ++i) {
    s.basis_.push_back({{i, Scalar(1)}});
    s.pivots_.push_back(i);
  }
  return s;
}

std::optional<std::size_t> Subspace::pivot_row(Index col) const {
  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), col);
  if (it != pivots_.end() && *it == col) return static_cast<std::size_t>(it - pivots_.begin());
  return std::nullopt;
}

SparseVector Subspace::reduce(const SparseVector& v) const {
  if (!v.empty() && v.back().col >= ambient_) throw DimensionError("vector outside ambient space");
  bool touches = false;
  for (const auto& e : v)
    if (pivot_row(e.col)) {
      touches = true;
      break;
    }
  if (!touches) return v;
  SparseAccumulator acc;
  for (const auto& e : v) acc.add(e.col, e.value);
  for (const auto& e : v)
    if (auto r = pivot_row(e.col)) acc.add_scaled(-e.value, basis_[*r]);
  return acc.take();
}

bool Subspace::contains(const SparseVector& v) const { return reduce(v).empty(); }

std::vector<Scalar> Subspace::coordinates(const SparseVector& v) const {
  if (!contains(v)) throw std::domain_error("vector is not in the subspace");
  std::vector<Scalar> c(dim());
  for (const auto& e : v)
    if (auto r = pivot_row(e.col)) c[*r] = e.value;
  return c;
}

SparseVector Subspace::coordinates_unchecked(const SparseVector& v) const {
  SparseVector c;
  for (const auto& e : v)
    if (auto r = pivot_row(e.col)) c.push_back({static_cast<Index>(*r), e.value});
  return c;
}

Subspace Subspace::orthogonal_complement() const { return kernel(Matrix::from_rows(ambient_, basis_)); }

bool Subspace::operator==(const Subspace& other) const {
  return ambient_ == other.ambient_ && pivots_ == other.pivots_ && basis_ == other.basis_;
}

// ----------------------------------------------------------------- routines

std::pair<Subspace, std::size_t> rref(const Matrix& m) {
  Subspace s = Subspace::span(m.cols(), m.row_data());
  std::size_t r = s.dim();
  return {std::move(s), r};
}

std::size_t rank(const Matrix& m) {
  std::vector<const SparseVector*> rows;
  rows.reserve(m.rows());
  for (const auto& r : m.row_data())
    if (!r.empty()) rows.push_back(&r);
  std::stable_sort(rows.begin(), rows.end(),
                   [](const SparseVector* a, const SparseVector* b) { return a->size() < b->size(); });
  EchelonBuilder eb(m.cols());
  for (const auto* r : rows) eb.insert(*r);
  return eb.rank();
}

Subspace kernel(const Matrix& m) {
  auto [row_space, r] = rref(m);
  const Index n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (Index p : row_space.pivots()) is_pivot[p] = true;
  std::unordered_map<Index, std::vector<Entry>> free_vectors;
  for (Index c = 0; c < n; ++c)
    if (!is_pivot[c]) free_vectors[c].push_back({c, Scalar(1)});
  for (std::size_t i = 0; i < row_space.dim(); ++i) {
    Index p = row_space.pivots()[i];
    for (const auto& e : row_space.basis()[i])
      if (e.col != p) free_vectors[e.col].push_back({p, -e.value});
  }
  std::vector<SparseVector> vecs;
  vecs.reserve(free_vectors.size());
  for (auto& [c, entries] : free_vectors) vecs.push_back(make_sparse(std::move(entries)));
  return Subspace::span(n, std::move(vecs));
}

Subspace left_kernel(const Matrix& m) {
  // Eliminate [M | I]; rows whose M-part vanishes carry left-kernel vectors.
  const Index offset = m.cols();
  const Index total = offset + m.rows();
  EchelonBuilder eb(total);
  for (Index i = 0; i < m.rows(); ++i) {
    SparseVector r = m.row(i);
    r.push_back({offset + i, Scalar(1)});
    eb.insert(std::move(r));
  }
  Subspace aug = std::move(eb).finish();
  std::vector<SparseVector> out;
  for (std::size_t i = 0; i < aug.dim(); ++i) {
    if (aug.pivots()[i] < offset) continue;
    SparseVector v;
    for (const auto& e : aug.basis()[i]) v.push_back({e.col - offset, e.value});
    out.push_back(std::move(v));
  }
  return Subspace::span(m.rows(), std::move(out));
}

Subspace sum(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim()) throw DimensionError("subspace ambient dimensions differ");
  std::vector<SparseVector> rows = u.basis();
  rows.insert(rows.end(), w.basis().begin(), w.basis().end());
  return Subspace::span(u.ambient_dim(), std::move(rows));
}

Subspace intersect(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim()) throw DimensionError("subspace ambient dimensions differ");
  const Subspace& small = u.dim() <= w.dim() ? u : w;
  const Subspace& big = u.dim() <= w.dim() ? w : u;
  if (small.dim() == 0) return Subspace(u.ambient_dim());
  // Residuals of the smaller basis modulo the larger subspace; combinations
  // with vanishing residual are exactly the intersection.
  std::vector<SparseVector> residuals;
  residuals.reserve(small.dim());
  for (const auto& b : small.basis()) residuals.push_back(big.reduce(b));
  Matrix res = Matrix::from_rows(u.ambient_dim(), std::move(residuals));
  Subspace combos = left_kernel(res);
  std::vector<SparseVector> out;
  out.reserve(combos.dim());
  for (const auto& c : combos.basis()) {
    SparseAccumulator acc;
    for (const auto& e : c) acc.add_scaled(e.value, small.basis()[e.col]);
    out.push_back(acc.take());
  }
  return Subspace::span(u.ambient_dim(), std::move(out));
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse of a non-square matrix");
  const Index n = m.rows();
  EchelonBuilder eb(2 * n);
  for (Index i = 0; i < n; ++i) {
    SparseVector r = m.row(i);
    r.push_back({n + i, Scalar(1)});
    eb.insert(std::move(r));
  }
  Subspace aug = std::move(eb).finish();
  if (aug.dim() != n) return std::nullopt;
  std::vector<SparseVector> rows(n);
  for (Index i = 0; i < n; ++i) {
    if (aug.pivots()[i] != i) return std::nullopt;
    for (const auto& e : aug.basis()[i])
      if (e.col >= n) rows[i].push_back({e.col - n, e.value});
  }
  return Matrix::from_rows(n, std::move(rows));
}

}  // namespace nkoszul
