#include "homotopelab/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <map>

#include "homotopelab/acceptance.hpp"
#include "homotopelab/constructions.hpp"
#include "homotopelab/fingerprints.hpp"
#include "homotopelab/io.hpp"

namespace homotopelab {

namespace {

using nlohmann::json;

constexpr std::size_t max_listed_elements = 256;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

Vector parse_scalars(const std::string& text, const FieldSpec& field, std::size_t expected, const char* what) {
  Vector v;
  for (const auto& part : split(text, ',')) v.push_back(Scalar::parse(field, part));
  if (expected != 0 && v.size() != expected) {
    throw Error(Errc::dimension_mismatch, std::string(what) + " needs " + std::to_string(expected) + " coordinates, got " +
                                              std::to_string(v.size()));
  }
  return v;
}

// Inline "a,b;c,d" or the path of a matrix file.
Matrix parse_matrix(const std::string& text, const FieldSpec& field) {
  if (std::filesystem::exists(text)) return matrix_from_json(read_json_file(text), field);
  std::vector<Vector> rows;
  for (const auto& r : split(text, ';')) rows.push_back(parse_scalars(r, field, 0, "matrix row"));
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) throw Error(Errc::parse_error, "matrix rows must have equal length");
  return Matrix::from_rows(field, rows, rows.front().size());
}

void emit(const json& doc, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << doc.dump(1) << '\n';
  } else {
    write_json_file(path, doc);
  }
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("HOMOTOPELAB_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(Errc::parse_error, "HOMOTOPELAB_BUDGET must be a nonnegative integer");
    }
  }
  return default_enumeration_budget;
}

Algebra build_named(const std::string& name, const FieldSpec& field, const std::string& lambda_text, std::size_t n) {
  const Scalar lambda = Scalar::parse(field, lambda_text);
  if (name == "field") return field_algebra(field);
  if (name == "zero") return zero_algebra(field, n);
  if (name == "a2") return two_dim_A(field);
  if (name == "b-lambda") return B_lambda(lambda);
  if (name == "r-lambda") return R_lambda(lambda);
  if (name == "b16") return B16(field);
  if (name == "b16-homotope") return left_delta_homotope(B16(field), delta16(lambda));
  if (name == "b16-hat") return B16_hat(lambda);
  if (name == "kronecker") return path_algebra(kronecker_quiver(), field);
  if (name == "double-chain") return path_algebra(doubled_chain_quiver(n), field);
  if (name == "matrix") return matrix_algebra(field, n);
  if (name == "mat-b16") return mat_over(B16(field), n);
  throw Error(Errc::invalid_argument, "unknown construction " + name);
}

json check_report(const Algebra& A) {
  json doc = {{"dim", A.dim()}, {"field", A.field().to_string()}, {"nonzero_constants", A.structure().nnz()}};
  doc["associative"] = is_associative(A);
  doc["commutative"] = is_commutative(A);
  doc["unit_declared"] = A.unit().has_value();
  const auto unit = A.unit() ? A.unit() : find_unit(A);
  doc["unital"] = unit.has_value();
  if (unit) doc["unit"] = A.format(*unit);
  return doc;
}

json element_list(const Algebra& A, const std::vector<Element>& elements) {
  json list = json::array();
  for (std::size_t i = 0; i < elements.size() && i < max_listed_elements; ++i) list.push_back(A.format(elements[i]));
  return list;
}

json scalar_list(const std::vector<Scalar>& values) {
  json list = json::array();
  for (const auto& v : values) list.push_back(v.to_string());
  return list;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with homotopes of algebras and trilinear tensors", "homotopelab"};
  app.require_subcommand(1);
  std::uint64_t seed = AcceptanceOptions{}.seed;
  app.add_option("--seed", seed, "seed for randomized commands");

  std::function<int()> action;

  // algebra build / check
  auto* algebra = app.add_subcommand("algebra", "build or check algebra files");
  algebra->require_subcommand(1);
  auto* build = algebra->add_subcommand("build", "emit a named construction");
  std::string build_name, field_text = "Q", lambda_text = "1", output;
  std::size_t size = 2;
  build->add_option("name", build_name, "construction")
      ->required()
      ->check(CLI::IsMember({"field", "zero", "a2", "b-lambda", "r-lambda", "b16", "b16-homotope", "b16-hat",
                             "kronecker", "double-chain", "matrix", "mat-b16"}));
  build->add_option("--lambda", lambda_text, "parameter lambda");
  build->add_option("--field", field_text, "Q or Fp, e.g. F7");
  build->add_option("-n,--size", size, "matrix size, zero-algebra dimension or chain length");
  build->add_option("-o,--output", output, "output file (default stdout)");
  build->callback([&] {
    action = [&] {
      if (build_name == "double-chain" && build->count("--size") == 0) size = 6;
      emit(algebra_to_json(build_named(build_name, FieldSpec::parse(field_text), lambda_text, size)), output, out);
      return int(exit_ok);
    };
  });

  auto* check = algebra->add_subcommand("check", "verify an algebra file and report invariants");
  std::string input;
  check->add_option("file", input, "algebra file")->required();
  check->callback([&] {
    action = [&] {
      out << check_report(algebra_from_json(read_json_file(input))).dump(1) << '\n';
      return int(exit_ok);
    };
  });

  // homotope
  auto* hom = app.add_subcommand("homotope", "Delta-homotope or general (f1, f2, g)-homotope");
  std::string delta_text, side = "left", f1_text, f2_text, g_text;
  bool augment = false;
  hom->add_option("file", input, "algebra file")->required();
  auto* delta_opt = hom->add_option("--delta", delta_text, "comma-separated coordinates of Delta");
  hom->add_option("--side", side, "left: (a Delta) b, right: a (Delta b)")->check(CLI::IsMember({"left", "right"}));
  hom->add_flag("--augment", augment, "adjoin a unit as the last basis vector");
  auto* f1_opt = hom->add_option("--f1", f1_text, "matrix \"a,b;c,d\" or matrix file");
  auto* f2_opt = hom->add_option("--f2", f2_text, "matrix");
  auto* g_opt = hom->add_option("--g", g_text, "matrix");
  f1_opt->needs(f2_opt, g_opt)->excludes(delta_opt);
  f2_opt->needs(f1_opt);
  g_opt->needs(f1_opt);
  hom->add_option("-o,--output", output, "output file (default stdout)");
  hom->callback([&] {
    action = [&] {
      const Algebra A = algebra_from_json(read_json_file(input));
      std::optional<Algebra> H;
      if (!delta_text.empty()) {
        const Element delta = parse_scalars(delta_text, A.field(), A.dim(), "--delta");
        H = side == "left" ? left_delta_homotope(A, delta) : right_delta_homotope(A, delta);
      } else if (!f1_text.empty()) {
        H = homotope(A, LinearMap(parse_matrix(f1_text, A.field())), LinearMap(parse_matrix(f2_text, A.field())),
                     LinearMap(parse_matrix(g_text, A.field())));
      } else {
        throw CLI::RequiredError("homotope needs --delta or --f1/--f2/--g");
      }
      if (augment) H = augment_unit(*H);
      emit(algebra_to_json(*H), output, out);
      return int(exit_ok);
    };
  });

  // detpoly
  auto* detpoly = app.add_subcommand("detpoly", "determinantal polynomial of a tensor slot");
  int slot = 1;
  detpoly->add_option("file", input, "tensor or algebra file")->required();
  detpoly->add_option("--slot", slot, "slot 1, 2 or 3")->check(CLI::Range(1, 3));
  detpoly->callback([&] {
    action = [&] {
      const json doc = read_json_file(input);
      const Trilinear t = doc.value("kind", "") == "algebra" ? algebra_from_json(doc).structure() : tensor_from_json(doc);
      const Polynomial p = det_poly(t, slot_from_int(slot));
      out << json{{"slot", slot}, {"field", t.field().to_string()}, {"degree", p.total_degree()},
                  {"polynomial", p.to_string()}}
                 .dump(1)
          << '\n';
      return int(exit_ok);
    };
  });

  // pencil
  auto* pencil = app.add_subcommand("pencil", "binary quartic det(x I4 + y (Bhat + u b)) and its invariants");
  std::string bhat_text, b_text, u_text;
  std::string pencil_field = "Q";
  pencil->add_option("--bhat", bhat_text, "diagonal of Bhat, a,b,c,d")->required();
  pencil->add_option("--b", b_text, "row b, w,x,y,z")->required();
  pencil->add_option("--u", u_text, "column u, p,q,r,s")->required();
  pencil->add_option("--field", pencil_field, "Q or Fp");
  pencil->callback([&] {
    action = [&] {
      const FieldSpec f = FieldSpec::parse(pencil_field);
      const auto q = pencil_522(parse_scalars(bhat_text, f, 4, "--bhat"), parse_scalars(b_text, f, 4, "--b"),
                                parse_scalars(u_text, f, 4, "--u"));
      json doc = {{"field", f.to_string()}, {"quartic", q.to_polynomial().to_string({"x", "y"})}};
      json coeffs = json::array();
      for (const auto& c : q.a) coeffs.push_back(c.to_string());
      doc["coefficients"] = coeffs;
      const auto inv = quartic_invariants(q);
      doc["delta0"] = inv.delta0.to_string();
      doc["delta1"] = inv.delta1.to_string();
      doc["disc"] = inv.disc.to_string();
      doc["j"] = inv.j ? json(inv.j->to_string()) : json(nullptr);
      out << doc.dump(1) << '\n';
      return int(exit_ok);
    };
  });

  // fingerprint
  auto* fp = app.add_subcommand("fingerprint", "F_p census of an algebra");
  std::string kind, fp_field;
  std::uint64_t budget = 0;
  unsigned threads = 0;
  fp->add_option("file", input, "algebra file")->required();
  fp->add_option("--kind", kind, "idem, sqzero, mu or commfp")
      ->required()
      ->check(CLI::IsMember({"idem", "sqzero", "mu", "commfp"}));
  fp->add_option("--field", fp_field, "prime field Fp; Q files are reduced mod p");
  auto* budget_opt = fp->add_option("--budget", budget, "largest search space to scan");
  fp->add_option("--threads", threads, "worker threads (0 = all cores)");
  fp->callback([&] {
    action = [&] {
      Algebra A = algebra_from_json(read_json_file(input));
      if (!fp_field.empty()) A = change_field(A, FieldSpec::parse(fp_field));
      if (!A.field().is_prime_field()) throw CLI::ValidationError("--field", "a prime field Fp is required");
      const std::uint64_t limit = budget_opt->count() ? budget : default_budget();
      const auto start = std::chrono::steady_clock::now();
      json doc = {{"fingerprint", kind}, {"file", input}, {"field", A.field().to_string()}, {"dim", A.dim()},
                  {"budget", limit}, {"seed", seed}};
      if (kind == "idem" || kind == "sqzero") {
        const auto found = kind == "idem" ? enumerate_idempotents(A, limit, threads)
                                          : enumerate_square_zero(A, limit, threads);
        doc["count"] = found.size();
        doc["elements"] = element_list(A, found);
        doc["truncated"] = found.size() > max_listed_elements;
      } else {
        const auto values = kind == "mu" ? mu_spectrum(A, limit) : idempotent_commutator_fingerprint(A, limit);
        doc["count"] = values.size();
        doc["multiset"] = scalar_list(values);
      }
      doc["elapsed_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      out << doc.dump(1) << '\n';
      return int(exit_ok);
    };
  });

  // welltempered
  auto* wt = app.add_subcommand("welltempered", "test A Delta A = A");
  wt->add_option("file", input, "unital algebra file")->required();
  wt->add_option("--delta", delta_text, "comma-separated coordinates of Delta")->required();
  wt->callback([&] {
    action = [&] {
      Algebra A = algebra_from_json(read_json_file(input));
      if (!A.unit()) A = with_unit(A);
      const Element delta = parse_scalars(delta_text, A.field(), A.dim(), "--delta");
      out << json{{"dim", A.dim()}, {"delta", A.format(delta)}, {"well_tempered", is_well_tempered(A, delta)}}.dump(1)
          << '\n';
      return int(exit_ok);
    };
  });

  // paper-verify
  auto* verify = app.add_subcommand("paper-verify", "run the acceptance checks");
  bool quick = false;
  verify->add_flag("--quick", quick, "fewer random samples in the sampled checks");
  verify->callback([&] {
    action = [&] {
      out << "seed " << seed << (quick ? " (quick)" : "") << '\n';
      const auto results = run_acceptance({quick, seed});
      bool all = true;
      for (const auto& r : results) {
        all = all && r.passed;
        out << (r.passed ? "PASS" : "FAIL") << " [" << std::setw(2) << r.id << "] " << r.name << " ("
            << std::fixed << std::setprecision(3) << r.seconds << "s / " << std::setprecision(0) << r.limit_seconds
            << "s): " << r.detail << '\n';
      }
      return int(all ? exit_ok : exit_verification_failed);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? int(exit_ok) : int(exit_usage);
  }

  try {
    return action ? action() : int(exit_usage);
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    switch (e.code()) {
      case Errc::budget_exceeded:
        return exit_budget;
      case Errc::not_unital:
        return exit_verification_failed;
      default:
        return exit_usage;
    }
  }
}

}  // namespace homotopelab
