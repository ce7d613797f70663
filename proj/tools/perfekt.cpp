#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>

#include "perfekt/error.hpp"
#include "perfekt/io.hpp"
#include "perfekt/reproduce.hpp"

using namespace perfekt;

namespace {

enum Exit { Ok = 0, Internal = 1, BadInput = 2, Separated = 3, Inconclusive = 4, Failed = 5 };

struct Globals {
  std::string out;
  int workers = 1;
  bool verbose = false;
  long cap = 1'000'000;
  int budget = 1000;
};

// "orthant:N", "classical:N", "sqrt2" or a JSON file.
Cone load_cone(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon != std::string::npos) {
    std::string name = spec.substr(0, colon);
    int n = 0;
    try {
      n = std::stoi(spec.substr(colon + 1));
    } catch (const std::exception&) {
      throw InputError("bad cone preset " + spec);
    }
    if (n < 1) throw InputError("cone dimension must be positive");
    if (name == "orthant") return Cone::orthant(n);
    if (name == "classical") return Cone::classical(n);
    throw InputError("unknown cone preset " + name);
  }
  if (spec == "sqrt2") return Cone::sqrt2();
  return cone_from_json(load_json_file(spec));
}

SymMatrix load_matrix(const std::string& path) { return matrix_from_json(load_json_file(path)); }

void emit(const Globals& g, const Json& j) {
  std::string text = j.dump(2) + "\n";
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw InputError("cannot write " + g.out);
  f << text;
}

CopminOptions copmin_opts(const Globals& g) {
  CopminOptions o;
  o.cap = g.cap;
  o.workers = g.workers;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Copositive minima, perfect forms and CP certificates over polyhedral cones"};
  app.require_subcommand(1);
  // Global flags may follow the subcommand.
  app.fallthrough();
  Globals g;
  app.add_option("--out", g.out, "write JSON here instead of stdout");
  app.add_option("--workers", g.workers, "worker threads for enumeration")->check(CLI::PositiveNumber);
  app.add_flag("--verbose", g.verbose, "timing on stderr");
  app.add_option("--cap", g.cap, "largest enumeration box")->check(CLI::PositiveNumber);
  app.add_option("--budget", g.budget, "vertex budget for traversal and descent")->check(CLI::NonNegativeNumber);

  std::string cone_spec, matrix_path, value = "sqrt(2)", only;
  int terms = 10, count = 3, halvings = 0;
  long bound = 500;
  bool euler = false;
  std::vector<std::string> eps_text;

  auto* copmin = app.add_subcommand("copmin", "K-copositive minimum");
  auto* perfect = app.add_subcommand("perfect", "perfectness test");
  auto* traverse_cmd = app.add_subcommand("traverse", "breadth-first Ryshkov traversal");
  auto* certify = app.add_subcommand("certify", "CP_K membership certificate");
  auto* embed = app.add_subcommand("embed", "carry a classical perfect form into K");
  for (auto* s : {copmin, perfect, traverse_cmd, certify, embed}) {
    s->add_option("--cone", cone_spec, "cone JSON file, or orthant:N, classical:N, sqrt2")->required();
  }
  for (auto* s : {copmin, perfect, certify, embed}) s->add_option("--matrix", matrix_path, "matrix JSON file")->required();
  traverse_cmd->add_option("--matrix", matrix_path, "start matrix (default: embedded A_n form)");
  auto* cf = app.add_subcommand("cf", "continued fraction expansion");
  cf->add_option("--value", value, "quadratic irrational or rational scalar");
  cf->add_flag("--e", euler, "expand Euler's number");
  cf->add_option("--terms", terms, "number of partial quotients")->check(CLI::PositiveNumber);
  auto* pell = app.add_subcommand("pell", "solutions of p^2 - 2q^2 = -1");
  pell->add_option("--count", count, "number of solutions")->check(CLI::PositiveNumber);
  auto* casestudy = app.add_subcommand("casestudy", "sqrt2 and e cone case studies");
  casestudy->require_subcommand(1);
  casestudy->fallthrough();
  auto* cs_sqrt2 = casestudy->add_subcommand("sqrt2", "exact sqrt2 cone report");
  cs_sqrt2->add_option("--bound", bound, "bound for exhaustive cross-checks")->check(CLI::PositiveNumber);
  auto* cs_e = casestudy->add_subcommand("e", "e cone evidence");
  cs_e->add_option("--eps", eps_text, "target precision(s), e.g. 1/10")->required();
  cs_e->add_option("--halvings", halvings, "extend with this many halvings of the last eps")
      ->check(CLI::NonNegativeNumber);
  auto* repro = app.add_subcommand("reproduce", "acceptance checks end to end");
  repro->add_option("--only", only, "key prefix, e.g. sqrt2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? Ok : BadInput;
  }

  auto t0 = std::chrono::steady_clock::now();
  int rc = Ok;
  try {
    CopminOptions co = copmin_opts(g);
    if (copmin->parsed()) {
      emit(g, to_json(copositive_minimum(load_matrix(matrix_path), load_cone(cone_spec), co)));
    } else if (perfect->parsed()) {
      emit(g, to_json(is_perfect(load_matrix(matrix_path), load_cone(cone_spec), co)));
    } else if (traverse_cmd->parsed()) {
      Cone k = load_cone(cone_spec);
      RyshkovVertex start =
          matrix_path.empty() ? start_vertex(k, co) : make_vertex(load_matrix(matrix_path), generic_oracle(k, co));
      emit(g, to_json(traverse(start, k, g.budget, {}, co)));
    } else if (certify->parsed()) {
      SymMatrix a = load_matrix(matrix_path);
      Cone k = load_cone(cone_spec);
      CertifyOptions opts;
      opts.budget = g.budget;
      opts.copmin = co;
      std::optional<Certificate> c;
      try {
        c = factorize(a, k, opts);
      } catch (const PreconditionViolated&) {
      }
      if (!c || c->kind != CertificateKind::Factorization) c = nonmembership_certificate(a, k, opts);
      emit(g, to_json(*c));
      rc = c->kind == CertificateKind::Factorization ? Ok
           : c->kind == CertificateKind::Separation  ? Separated
                                                     : Inconclusive;
    } else if (embed->parsed()) {
      emit(g, to_json(embed_perfect(load_matrix(matrix_path), load_cone(cone_spec), co)));
    } else if (cf->parsed()) {
      ContinuedFraction c = euler ? cf_of_e(terms - 1) : cf_expand(Scalar::parse(value), terms);
      Json j = to_json(c);
      j["convergents"] = to_json(convergents(c, static_cast<int>(c.quotients.size())));
      emit(g, j);
    } else if (pell->parsed()) {
      Json j = Json::array();
      for (const auto& [p, q] : pell_negative_solutions(count)) j.push_back({to_json(p), to_json(q)});
      emit(g, j);
    } else if (cs_sqrt2->parsed()) {
      Report r = sqrt2_report(bound);
      Json j;
      j["report"] = to_json(r);
      j["q1_minimum"] = to_json(q1_minimum(std::min(bound, 30L)));
      j["figure"] = to_json(sqrt2_figure());
      emit(g, j);
      rc = all_pass(r) ? Ok : Failed;
    } else if (cs_e->parsed()) {
      std::vector<Rational> eps;
      for (const auto& t : eps_text) {
        Scalar s = Scalar::parse(t);
        if (!s.is_rational()) throw InputError("eps must be rational");
        eps.push_back(s.as_rational());
      }
      for (int i = 0; i < halvings; ++i) eps.push_back(eps.back() / 2);
      Report r = e_report(eps);
      Json j;
      j["report"] = to_json(r);
      if (all_pass(r)) j["evidence"] = to_json(e_cone_ir_evidence(Rational(-1), Rational(0), eps));
      emit(g, j);
      rc = all_pass(r) ? Ok : Failed;
    } else if (repro->parsed()) {
      ReproOptions o;
      o.only = only;
      o.workers = g.workers;
      auto rows = reproduce(o);
      Json j = Json::array();
      std::string first_fail;
      for (const auto& r : rows) {
        j.push_back({{"key", r.key},
                     {"title", r.title},
                     {"pass", r.pass},
                     {"seconds", r.seconds},
                     {"limit_seconds", r.limit_seconds},
                     {"detail", r.detail}});
        if (!r.pass && first_fail.empty()) first_fail = r.key;
      }
      emit(g, j);
      if (rows.empty()) throw InputError("no reproduce rows match " + only);
      if (!first_fail.empty()) {
        std::cerr << "failed: " << first_fail << "\n";
        rc = Failed;
      }
    }
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    rc = BadInput;
  } catch (const DimensionMismatch& e) {
    std::cerr << "dimension mismatch: " << e.what() << "\n";
    rc = BadInput;
  } catch (const UnsupportedDimension& e) {
    std::cerr << "unsupported dimension: " << e.what() << "\n";
    rc = BadInput;
  } catch (const FieldMismatch& e) {
    std::cerr << "field mismatch: " << e.what() << "\n";
    rc = BadInput;
  } catch (const Error& e) {
    // Boundary cases, caps and preconditions are properties of the input.
    std::cerr << "error: " << e.what() << "\n";
    rc = BadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    rc = Internal;
  }
  if (g.verbose) {
    std::cerr << "elapsed " << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << " s\n";
  }
  return rc;
}
