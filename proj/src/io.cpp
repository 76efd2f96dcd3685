#include "nkoszul/io.hpp"

#include <fstream>
#include <sstream>

namespace nkoszul {

namespace {

Json big(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Json optional_index(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw FormatError(std::string(what) + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string(what) + ": " + e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

Json to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const Json& j) {
  return guarded("scalar", [&] {
    if (j.is_number_integer()) return Scalar(j.get<std::int64_t>());
    if (j.is_string()) return Scalar::parse(j.get<std::string>());
    throw FormatError("scalar must be a string \"p/q\" or an integer");
  });
}

Json to_json(const Word& w) { return w.letters; }

Json to_json(const Tensor& t) {
  Json terms = Json::array();
  for (const auto& [w, c] : t.terms()) terms.push_back({{"coeff", to_json(c)}, {"word", to_json(w)}});
  return {{"grade", t.grade()}, {"terms", terms}};
}

Tensor tensor_from_json(const Json& j, std::size_t n) {
  return guarded("tensor", [&] {
    const std::size_t grade = field(j, "grade").get<std::size_t>();
    std::vector<std::pair<Word, Scalar>> terms;
    for (const auto& t : field(j, "terms")) {
      Word w{field(t, "word").get<std::vector<Letter>>()};
      if (w.grade() != grade) throw FormatError("tensor term of the wrong length");
      for (auto c : w.letters)
        if (c >= n) throw FormatError("tensor letter outside the alphabet");
      terms.emplace_back(std::move(w), scalar_from_json(field(t, "coeff")));
    }
    return Tensor::from_terms(n, grade, terms);
  });
}

Json to_json(const AlgebraPresentation& a) {
  Json rel = Json::array();
  for (const auto& r : a.relations) rel.push_back(to_json(r));
  return {{"label", a.label}, {"n", a.n}, {"N", a.N}, {"relations", rel}};
}

AlgebraPresentation algebra_from_json(const Json& j) {
  return guarded("algebra", [&] {
    AlgebraPresentation a;
    a.label = j.is_object() && j.contains("label") ? j.at("label").get<std::string>() : "custom";
    a.n = field(j, "n").get<std::size_t>();
    a.N = field(j, "N").get<std::size_t>();
    for (const auto& r : field(j, "relations")) a.relations.push_back(tensor_from_json(r, a.n));
    a.validate();
    return a;
  });
}

AlgebraPresentation load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open algebra file " + path);
  Json j = guarded("algebra file", [&] { return Json::parse(in); });
  return algebra_from_json(j);
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index k = 0; k < m.cols(); ++k) row.push_back(to_json(m.at(i, k)));
    rows.push_back(row);
  }
  return {{"n", m.rows()}, {"entries", rows}};
}

Matrix matrix_from_json(const Json& j) {
  return guarded("matrix", [&] {
    const std::size_t n = field(j, "n").get<std::size_t>();
    const Json& entries = field(j, "entries");
    if (!entries.is_array() || entries.size() != n) throw FormatError("matrix must have n rows");
    std::vector<std::vector<Scalar>> rows;
    for (const auto& r : entries) {
      if (!r.is_array() || r.size() != n) throw FormatError("matrix must be square");
      std::vector<Scalar> row;
      for (const auto& x : r) row.push_back(scalar_from_json(x));
      rows.push_back(std::move(row));
    }
    if (n == 0) return Matrix(0, 0);
    return Matrix::from_dense(rows);
  });
}

Json to_json(const IntSeries& s) {
  Json out = Json::array();
  for (std::size_t d = 0; d <= s.truncation(); ++d) out.push_back({{"degree", d}, {"coeff", big(s[d])}});
  return out;
}

Json to_json(const ScalarSeries& s) {
  Json out = Json::array();
  for (std::size_t d = 0; d <= s.truncation(); ++d) out.push_back({{"degree", d}, {"coeff", to_json(s[d])}});
  return out;
}

Json to_json(const MultiSeries& s) {
  Json out = Json::array();
  for (const auto& [e, c] : s.terms()) out.push_back({{"exponents", e}, {"coeff", to_json(c)}});
  return out;
}

Json to_json(const AlgebraClass& c) {
  Json coords = Json::array();
  if (c.algebra) {
    const auto& data = c.algebra->degree(c.degree);
    for (const auto& e : c.coords)
      coords.push_back({{"word", word_at(data.normal[e.col], c.algebra->n(), c.degree).letters},
                        {"coeff", to_json(e.value)}});
  }
  return {{"degree", c.degree}, {"coords", coords}};
}

Json to_json(const DegreeReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries)
    entries.push_back({{"l", e.l},
                       {"k", e.k},
                       {"nu", e.nu},
                       {"dim_A", e.dim_A},
                       {"dim_J", e.dim_J},
                       {"dim", e.dim},
                       {"rank_out", e.rank_out},
                       {"rank_in", e.rank_in},
                       {"homology", e.homology}});
  return {{"m", r.m}, {"entries", entries}, {"dd_zero", r.dd_zero}, {"euler", r.euler}};
}

Json to_json(const KoszulCertificate& c) {
  Json degrees = Json::array();
  for (const auto& d : c.degrees) degrees.push_back(to_json(d));
  Json failure = nullptr;
  if (c.first_failure)
    failure = {{"m", c.first_failure->m}, {"l", c.first_failure->l}, {"reason", c.first_failure->reason}};
  return {{"max_degree", c.max_degree},
          {"passed", c.passed},
          {"scope", "exactness verified up to degree " + std::to_string(c.max_degree)},
          {"first_failure", failure},
          {"degrees", degrees}};
}

namespace {

Json big_list(const std::vector<mpz_class>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(big(x));
  return out;
}

}  // namespace

Json to_json(const SeriesCheck& c) {
  return {{"truncation", c.truncation},
          {"passed", c.passed},
          {"first_failure", optional_index(c.first_failure)},
          {"lhs", big_list(c.lhs)},
          {"rhs", big_list(c.rhs)},
          {"product", big_list(c.product)}};
}

Json to_json(const AdmissibleIdentityReport& r) {
  return {{"n", r.n},
          {"N", r.N},
          {"truncation", r.truncation},
          {"passed", r.passed},
          {"degree_rule_holds", r.degree_rule_holds},
          {"top_index", r.top_index},
          {"expected_top_index", r.expected_top_index},
          {"first_failure", optional_index(r.first_failure)},
          {"counts", big_list(r.counts)},
          {"inverse", big_list(r.inverse)},
          {"polynomial", big_list(r.polynomial)}};
}

Json to_json(const KmtReport& r) {
  Json degrees = Json::array();
  for (const auto& d : r.degrees) {
    Json j = {{"degree", d.degree},
              {"product_zero", d.product_zero},
              {"product_terms", d.product_terms},
              {"counit_chi_A", to_json(d.counit_chi_A)},
              {"dim_A", d.dim_A}};
    j["counit_chi_J"] = d.counit_chi_J ? to_json(*d.counit_chi_J) : Json(nullptr);
    j["signed_dim_J"] = d.signed_dim_J ? Json(*d.signed_dim_J) : Json(nullptr);
    degrees.push_back(std::move(j));
  }
  return {{"truncation", r.truncation},
          {"passed", r.passed},
          {"counit_matches", r.counit_matches},
          {"first_failure", optional_index(r.first_failure)},
          {"degrees", degrees}};
}

Json to_json(const BosFermReport& r) {
  return {{"truncation", r.truncation},
          {"bos_matches", r.bos_matches},
          {"column_ascending_matches", r.column_ascending_matches},
          {"transpose_matches", r.transpose_matches},
          {"passing_convention", r.passing ? Json(to_string(*r.passing)) : Json(nullptr)},
          {"bos_first_failure", optional_index(r.bos_first_failure)},
          {"column_ascending_first_failure", optional_index(r.column_ascending_first_failure)},
          {"transpose_first_failure", optional_index(r.transpose_first_failure)}};
}

Json to_json(const MasterTheoremReport& r) {
  Json out = {{"n", r.n},
              {"N", r.N},
              {"truncation", r.truncation},
              {"specializable", r.specializable},
              {"passed", r.passed},
              {"terms", r.terms}};
  if (r.first_mismatch) {
    out["first_mismatch"] = {
        {"exponents", *r.first_mismatch}, {"lhs", to_json(r.lhs_value)}, {"rhs", to_json(r.rhs_value)}};
  } else {
    out["first_mismatch"] = nullptr;
  }
  return out;
}

}  // namespace nkoszul
