#include <memory>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nkoszul/builtins.hpp"
#include "nkoszul/cli.hpp"
#include "nkoszul/io.hpp"

namespace py = pybind11;
using namespace nkoszul;

namespace {

// Algebra plus its Koszul complex; the complex keeps a reference to the algebra.
struct PyAlgebra {
  explicit PyAlgebra(AlgebraPresentation p)
      : algebra(std::make_unique<Algebra>(std::move(p))), complex(std::make_unique<KoszulComplex>(*algebra)) {}
  std::unique_ptr<Algebra> algebra;
  std::unique_ptr<KoszulComplex> complex;
};

py::object to_py_int(const mpz_class& z) { return py::module_::import("builtins").attr("int")(z.get_str()); }

py::list to_py(const IntSeries& s) {
  py::list out;
  for (const auto& c : s.coefficients()) out.append(to_py_int(c));
  return out;
}

std::string dump(const Json& j) { return j.dump(); }

Matrix matrix_from_rows(const std::vector<std::vector<std::string>>& rows) {
  Json j = {{"n", rows.size()}, {"entries", rows}};
  return matrix_from_json(j);
}

std::vector<std::vector<std::string>> matrix_rows(const Matrix& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out[i].push_back(m.at(i, j).to_string());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computations for N-homogeneous algebras";
  m.attr("__version__") = kToolVersion;

  py::class_<PyAlgebra>(m, "Algebra")
      .def_static("from_json", [](const std::string& s) { return std::make_unique<PyAlgebra>(algebra_from_json(Json::parse(s))); })
      .def_static("load", [](const std::string& path) { return std::make_unique<PyAlgebra>(load_algebra_file(path)); })
      .def_property_readonly("n", [](const PyAlgebra& a) { return a.algebra->n(); })
      .def_property_readonly("N", [](const PyAlgebra& a) { return a.algebra->N(); })
      .def_property_readonly("label", [](const PyAlgebra& a) { return a.algebra->label(); })
      .def("to_json", [](const PyAlgebra& a) { return dump(to_json(a.algebra->presentation())); })
      .def("dim", [](const PyAlgebra& a, std::size_t d) { return a.algebra->dim_component(d); }, py::arg("degree"))
      .def("hilbert_series", [](const PyAlgebra& a, std::size_t D) { return to_py(a.algebra->hilbert_series(D)); },
           py::arg("max_degree"))
      .def("normal_basis",
           [](const PyAlgebra& a, std::size_t d) {
             std::vector<std::vector<Letter>> out;
             for (const auto& w : a.algebra->normal_basis(d)) out.push_back(w.letters);
             return out;
           },
           py::arg("degree"))
      .def("dual_dims",
           [](const PyAlgebra& a, std::size_t D) {
             std::vector<std::size_t> out;
             for (std::size_t k = 0; k <= D; ++k) out.push_back(a.complex->dim_J(k));
             return out;
           },
           py::arg("max_degree"))
      .def("koszul_certificate", [](const PyAlgebra& a, std::size_t M) { return dump(to_json(a.complex->certificate(M))); },
           py::arg("max_degree"))
      .def("dvp_check", [](const PyAlgebra& a, std::size_t D) { return dump(to_json(dvp_check(*a.complex, D))); },
           py::arg("max_degree"))
      .def("kmt_check",
           [](const PyAlgebra& a, std::size_t D) {
             ManinBialgebra B(*a.complex);
             return dump(to_json(kmt_check(B, D)));
           },
           py::arg("max_degree"));

  m.def("polynomial", [](std::size_t n) { return std::make_unique<PyAlgebra>(polynomial(n)); }, py::arg("n"));
  m.def("antisymmetrizer", [](std::size_t n, std::size_t N) { return std::make_unique<PyAlgebra>(antisymmetrizer(n, N)); },
        py::arg("n"), py::arg("N"));
  m.def("free_algebra", [](std::size_t n, std::size_t N) { return std::make_unique<PyAlgebra>(free_algebra(n, N)); },
        py::arg("n"), py::arg("N") = 2);
  m.def("quantum_space",
        [](std::size_t n, std::optional<std::string> q) {
          return std::make_unique<PyAlgebra>(q ? quantum_space_uniform(n, Scalar::parse(*q)) : quantum_space(n));
        },
        py::arg("n"), py::arg("q") = py::none());

  m.def("identity_eq1", [](std::size_t n, std::size_t k) { return to_py_int(identity_eq1(n, k)); });
  m.def("count_admissible", [](std::size_t n, std::size_t N, std::size_t k) { return to_py_int(count_admissible(n, N, k)); });
  m.def("admissible_identity_check",
        [](std::size_t n, std::size_t N, std::size_t D) { return dump(to_json(admissible_identity_check(n, N, D))); });
  m.def("random_rational_matrix", [](std::size_t n, std::uint64_t seed) { return matrix_rows(random_rational_matrix(n, seed)); });
  m.def("mmt_check",
        [](const std::vector<std::vector<std::string>>& Z, std::size_t D) {
          return dump(to_json(mmt_check(Z.size(), matrix_from_rows(Z), D)));
        },
        py::arg("matrix"), py::arg("max_degree"));
  m.def("nmt_check",
        [](std::size_t N, const std::vector<std::vector<std::string>>& Z, std::size_t D) {
          return dump(to_json(nmt_check(Z.size(), N, matrix_from_rows(Z), D)));
        },
        py::arg("N"), py::arg("matrix"), py::arg("max_degree"));
  m.def("run",
        [](const std::string& command, const std::string& algebra, std::optional<std::size_t> n,
           std::optional<std::size_t> N, std::size_t max_degree, std::optional<std::string> q,
           std::optional<std::string> matrix, std::optional<std::uint64_t> random_seed, bool allow_large) {
          RunConfig c;
          c.command = command;
          c.algebra = algebra;
          c.n = n;
          c.N = N;
          c.max_degree = max_degree;
          c.q = std::move(q);
          c.matrix = std::move(matrix);
          c.random_seed = random_seed;
          c.allow_large = allow_large;
          RunResult r = run(c);
          return std::make_pair(r.exit_code, r.render(c));
        },
        py::arg("command"), py::arg("algebra") = "poly", py::arg("n") = py::none(), py::arg("N") = py::none(),
        py::arg("max_degree") = 6, py::arg("q") = py::none(), py::arg("matrix") = py::none(),
        py::arg("random_seed") = py::none(), py::arg("allow_large") = false);
}
