#include "nkoszul/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nkoszul/builtins.hpp"

namespace nkoszul {

const std::vector<std::string>& cli_commands() {
  static const std::vector<std::string> commands = {"hilbert",   "dual-dims", "admissible", "koszul-check", "dvp-check",
                                                    "kmt-check", "mmt",       "nmt",        "eq1",          "info"};
  return commands;
}

namespace {

template <class T>
Json opt(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

std::size_t need(const std::optional<std::size_t>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing --") + flag);
  return *v;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string format_series(const std::vector<mpz_class>& c) {
  std::vector<std::string> parts;
  for (const auto& x : c) parts.push_back(x.get_str());
  return join(parts, " ");
}

std::uint64_t ambient_limit(const RunConfig& c) {
  if (c.max_ambient) return *c.max_ambient;
  if (const char* env = std::getenv("KOSZUL_MAX_AMBIENT")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError("KOSZUL_MAX_AMBIENT must be a nonnegative integer");
  }
  return kDefaultMaxAmbient;
}

bool is_antisymmetrizer_family(const RunConfig& c) { return c.algebra == "antisym" || c.algebra == "poly"; }

}  // namespace

std::string RunResult::render(const RunConfig& config) const {
  if (config.format == "text") return text;
  return report.dump(2) + "\n";
}

Json config_to_json(const RunConfig& c) {
  return {{"command", c.command},
          {"algebra", c.algebra},
          {"n", opt(c.n)},
          {"N", opt(c.N)},
          {"max_degree", c.max_degree},
          {"q", opt(c.q)},
          {"matrix", opt(c.matrix)},
          {"matrix_file", opt(c.matrix_file)},
          {"random_seed", opt(c.random_seed)},
          {"format", c.format},
          {"allow_large", c.allow_large},
          {"max_ambient", opt(c.max_ambient)}};
}

AlgebraPresentation make_algebra(const RunConfig& c) {
  const std::string& spec = c.algebra;
  if (spec.rfind("file:", 0) == 0) return load_algebra_file(spec.substr(5));
  if (spec == "poly") return polynomial(need(c.n, "n"));
  if (spec == "antisym") return antisymmetrizer(need(c.n, "n"), need(c.N, "N"));
  if (spec == "free") return free_algebra(need(c.n, "n"), c.N.value_or(2));
  if (spec == "qspace") {
    const std::size_t n = need(c.n, "n");
    if (c.q) return quantum_space_uniform(n, Scalar::parse(*c.q));
    return quantum_space(n);
  }
  throw UsageError("unknown algebra \"" + spec + "\" (expected poly, antisym, qspace, free or file:<path>)");
}

Matrix make_matrix(const RunConfig& c) {
  const std::size_t n = need(c.n, "n");
  Matrix Z;
  if (c.matrix_file) {
    std::ifstream in(*c.matrix_file);
    if (!in) throw FormatError("cannot open matrix file " + *c.matrix_file);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::exception& e) {
      throw FormatError(std::string("matrix file: ") + e.what());
    }
    Z = matrix_from_json(j);
  } else if (c.matrix) {
    if (*c.matrix == "identity") {
      Z = Matrix::identity(static_cast<Index>(n));
    } else if (*c.matrix == "zero") {
      Z = Matrix(static_cast<Index>(n), static_cast<Index>(n));
    } else if (*c.matrix == "ones") {
      Z = ones_matrix(n);
    } else {
      Json j;
      try {
        j = Json::parse(*c.matrix);
      } catch (const Json::exception& e) {
        throw FormatError(std::string("inline matrix: ") + e.what());
      }
      Z = matrix_from_json(j);
    }
  } else if (c.random_seed) {
    Z = random_rational_matrix(n, *c.random_seed);
  } else {
    throw UsageError("no matrix given (use --matrix, --matrix-file or --random-seed)");
  }
  if (Z.rows() != n) throw UsageError("matrix size differs from --n");
  return Z;
}

namespace {

RunResult run_command(const RunConfig& c, Json& report) {
  RunResult res;
  std::ostringstream text;
  const std::size_t D = c.max_degree;
  auto verdict = [&](bool ok) {
    report["verdict"] = ok ? "holds" : "violated";
    res.exit_code = ok ? 0 : 1;
  };

  if (c.command == "eq1") {
    const std::size_t n = need(c.n, "n");
    if (n < 1) throw UsageError("eq1 needs n >= 1");
    Json values = Json::array();
    std::optional<std::size_t> first;
    for (std::size_t m = 1; m <= D; ++m) {
      mpz_class v = identity_eq1(n, m);
      values.push_back({{"m", m}, {"value", v.get_str()}});
      if (v != 0 && !first) first = m;
    }
    report["values"] = values;
    report["first_failure"] = opt(first);
    verdict(!first);
    text << "eq1 n=" << n << " m=1.." << D << ": " << (first ? "violated at m=" + std::to_string(*first) : "all sums vanish")
         << "\n";
    res.text = text.str();
    return res;
  }

  if (c.command == "admissible") {
    auto rep = admissible_identity_check(need(c.n, "n"), need(c.N, "N"), D);
    report["result"] = to_json(rep);
    verdict(rep.passed);
    text << "admissible n=" << rep.n << " N=" << rep.N << " up to degree " << D << ": "
         << (rep.passed ? "identity holds" : "identity violated") << "\n"
         << "  L(n,N,k): " << format_series(rep.counts) << "\n"
         << "  inverse:  " << format_series(rep.inverse) << "\n"
         << "  top index " << rep.top_index << " (rule gives " << rep.expected_top_index << ")\n";
    if (rep.first_failure) text << "  first mismatch at degree " << *rep.first_failure << "\n";
    res.text = text.str();
    return res;
  }

  if (c.command == "mmt" || c.command == "nmt") {
    const Matrix Z = make_matrix(c);
    report["matrix"] = to_json(Z);
    MasterTheoremReport rep = c.command == "mmt" ? mmt_check(need(c.n, "n"), Z, D)
                                                 : nmt_check(need(c.n, "n"), need(c.N, "N"), Z, D);
    report["result"] = to_json(rep);
    verdict(rep.passed);
    text << c.command << " n=" << rep.n << " N=" << rep.N << " up to total degree " << D << ": ";
    if (!rep.specializable)
      text << "matrix does not specialize end(A)\n";
    else if (rep.passed)
      text << "identity holds (" << rep.terms << " nonzero coefficients)\n";
    else
      text << "violated at exponents " << Json(*rep.first_mismatch).dump() << ": " << rep.lhs_value << " vs "
           << rep.rhs_value << "\n";
    res.text = text.str();
    return res;
  }

  Algebra A(make_algebra(c));
  report["algebra"] = {{"label", A.label()}, {"n", A.n()}, {"N", A.N()}};
  KoszulComplex K(A);

  if (c.command == "info") {
    const std::size_t dimR = A.relation_space().dim();
    const std::size_t dimRperp = tensor_dim(A.n(), A.N()) - dimR;
    report["presentation"] = to_json(A.presentation());
    report["dim_R"] = dimR;
    report["dim_R_perp"] = dimRperp;
    verdict(true);
    text << A.label() << ": n=" << A.n() << " N=" << A.N() << " dim R=" << dimR << " dim R^perp=" << dimRperp << "\n";
    res.text = text.str();
    return res;
  }

  if (c.command == "hilbert") {
    IntSeries h = A.hilbert_series(D);
    report["hilbert_series"] = to_json(h);
    verdict(true);
    text << "hilbert " << A.label() << ": " << format_series(h.coefficients()) << "\n";
    res.text = text.str();
    return res;
  }

  if (c.command == "dual-dims") {
    Json rows = Json::array();
    bool ok = true;
    std::optional<Algebra> dual_algebra;
    const bool use_quotient = std::pow(static_cast<double>(A.n()), static_cast<double>(D)) <= 1e6;
    if (use_quotient) dual_algebra.emplace(dual(A.presentation()));
    std::vector<std::string> dims;
    for (std::size_t m = 0; m <= D; ++m) {
      const std::size_t j = K.dim_J(m);
      Json row = {{"m", m}, {"dim_J", j}};
      if (dual_algebra) {
        const std::size_t q = dual_algebra->dim_component(m);
        row["dim_dual_quotient"] = q;
        ok = ok && q == j;
      }
      if (is_antisymmetrizer_family(c)) {
        mpz_class f = dual_dims_closed_form(A.n(), A.N(), m);
        row["closed_form"] = f.get_str();
        ok = ok && f == static_cast<unsigned long>(j);
      }
      rows.push_back(row);
      dims.push_back(std::to_string(j));
    }
    report["dims"] = rows;
    verdict(ok);
    text << "dual-dims " << A.label() << ": " << join(dims, " ") << (ok ? "" : "  (cross-check failed)") << "\n";
    res.text = text.str();
    return res;
  }

  if (c.command == "koszul-check") {
    if (D < 1) throw UsageError("koszul-check needs --max-degree >= 1");
    KoszulCertificate cert = K.certificate(D);
    report["certificate"] = to_json(cert);
    verdict(cert.passed);
    text << "koszul-check " << A.label() << ": ";
    if (cert.passed)
      text << "complex exact in every positive degree up to degree " << D << "\n";
    else
      text << "fails at total degree m=" << cert.first_failure->m << ", l=" << cert.first_failure->l << ": "
           << cert.first_failure->reason << "\n";
    res.text = text.str();
    return res;
  }

  if (c.command == "dvp-check") {
    SeriesCheck chk = dvp_check(K, D);
    report["result"] = to_json(chk);
    verdict(chk.passed);
    text << "dvp-check " << A.label() << " up to degree " << D << ": " << (chk.passed ? "identity holds" : "violated")
         << "\n"
         << "  H_A:     " << format_series(chk.lhs) << "\n"
         << "  dual:    " << format_series(chk.rhs) << "\n"
         << "  product: " << format_series(chk.product) << "\n";
    res.text = text.str();
    return res;
  }

  if (c.command == "kmt-check") {
    if (D < 1) throw UsageError("kmt-check needs --max-degree >= 1");
    const std::uint64_t limit = ambient_limit(c);
    const double ambient = std::pow(static_cast<double>(A.n()), 2.0 * static_cast<double>(D));
    report["ambient"] = ambient <= 9.0e15 ? Json(static_cast<std::uint64_t>(ambient)) : Json(ambient);
    report["ambient_limit"] = limit;
    if (!c.allow_large && ambient > static_cast<double>(limit))
      throw UsageError("end(A)_D has ambient dimension n^(2D) above the limit " + std::to_string(limit) +
                       " (pass --allow-large or set KOSZUL_MAX_AMBIENT)");
    ManinBialgebra B(K);
    KmtReport rep = kmt_check(B, D);
    report["result"] = to_json(rep);
    report["end_relation_dim"] = B.end().relation_space().dim();
    bool ok = rep.passed && rep.counit_matches;
    if (c.algebra == "poly") {
      BosFermReport bf = bos_ferm(B, D);
      report["bos_ferm"] = to_json(bf);
      ok = ok && bf.bos_matches && bf.passing.has_value();
    }
    verdict(ok);
    text << "kmt-check " << A.label() << " up to degree " << D << ": "
         << (rep.passed ? "chi-series product is 1" : "chi-series product differs from 1");
    if (rep.first_failure) text << " (first at degree " << *rep.first_failure << ")";
    text << "; counit o chi " << (rep.counit_matches ? "=" : "!=") << " dim\n";
    if (report.contains("bos_ferm"))
      text << "  Bos/Ferm: passing determinant convention " << report["bos_ferm"]["passing_convention"].dump() << "\n";
    res.text = text.str();
    return res;
  }

  throw UsageError("unknown command \"" + c.command + "\"");
}

}  // namespace

RunResult run(const RunConfig& config) {
  Json report;
  report["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  report["config"] = config_to_json(config);
  report["truncation"] = config.max_degree;
  RunResult res;
  try {
    if (config.format != "json" && config.format != "text") throw UsageError("--format must be json or text");
    res = run_command(config, report);
  } catch (const std::exception& e) {
    // Usage, input and feasibility errors alike.
    res.exit_code = 2;
    report["verdict"] = "error";
    report["error"] = e.what();
    res.text = std::string("error: ") + e.what() + "\n";
  }
  res.report = std::move(report);
  return res;
}

int cli_main(int argc, char** argv) {
  RunConfig c;
  CLI::App app{"Exact workbench for N-homogeneous algebras and their Koszul duals"};
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
  std::string commands = join(cli_commands(), ", ");
  app.add_option("command", c.command, "One of: " + commands)->required()->check(CLI::IsMember(cli_commands()));
  app.add_option("--algebra", c.algebra, "poly, antisym, qspace, free or file:<path>");
  app.add_option("--n", c.n, "Number of generators");
  app.add_option("--N", c.N, "Relation degree");
  app.add_option("--max-degree", c.max_degree, "Truncation / certificate bound");
  app.add_option("--q", c.q, "Quantum-space parameter (default: generic q_ij)");
  app.add_option("--matrix", c.matrix, "identity, zero, ones, or an inline matrix JSON object");
  app.add_option("--matrix-file", c.matrix_file, "Matrix JSON file");
  app.add_option("--random-seed", c.random_seed, "Seed for a random rational matrix");
  app.add_option("--format", c.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--allow-large", c.allow_large, "Skip the end(A) size guardrail");
  app.add_option("--max-ambient", c.max_ambient, "Guardrail limit on n^(2D) for kmt-check");
  std::string output;
  app.add_option("--output,-o", output, "Write the report to this file instead of stdout");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  RunResult res = run(c);
  const std::string rendered = res.render(c);
  if (!output.empty()) {
    std::ofstream out(output);
    if (!out) {
      std::cerr << "error: cannot write " << output << "\n";
      return 2;
    }
    out << rendered;
  } else {
    std::cout << rendered;
  }
  if (res.exit_code == 2 && c.format == "json") std::cerr << res.text;
  return res.exit_code;
}

}  // namespace nkoszul
