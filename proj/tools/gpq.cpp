// gpq: command-line front end. Every subcommand writes one JSON document.
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "gpq/builtins.hpp"
#include "gpq/classify.hpp"
#include "gpq/error.hpp"
#include "gpq/io.hpp"
#include "gpq/quotcov.hpp"
#include "gpq/textutil.hpp"
#include "gpq/verify.hpp"

using namespace gpq;

namespace {

const char* kErrorCodes =
    "Exit status: 0 success, 1 domain error, 2 parse error.\n"
    "Error codes: ambient-mismatch ambiguous automorphism-not-stabilizing basis-not-singular\n"
    "  basis-not-spanning dimension-mismatch division-by-zero file-not-found full-codefect\n"
    "  grid-unsupported incompatible-antiauto infinite-ring internal invalid-argument\n"
    "  invalid-codefect invalid-element invalid-geometry invalid-ring invariant-violation\n"
    "  no-form-found no-singular-basis not-a-direct-sum not-a-square not-admissible\n"
    "  not-in-codefect not-reflexive not-singular not-trace-valued overflow pair-mismatch\n"
    "  parse-error q2-violation quotient-not-defined ring-mismatch size-cap-exceeded\n"
    "  trivial-form unsupported unsupported-ring verification-failed zero-scalar\n"
    "Environment: GPQ_WORKERS sets the enumeration thread count.";

std::string output_path;

void emit(const Json& j) {
  std::string text = dump(j);
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) fail("file-not-found", "cannot write '" + output_path + "'");
  out << text;
}

Vec parse_vector(const Ring& r, const std::string& text) {
  std::string t = trim(text);
  auto items = !t.empty() && t[0] == '[' ? parse_list(t) : split_top(t, ',');
  Vec v;
  for (const auto& s : items) v.push_back(parse_scalar(r, s));
  return v;
}

Basis parse_basis(const Ring& r, const std::string& text, std::size_t dim) {
  Basis b;
  for (const auto& row : parse_nested(text)) {
    Vec v;
    for (const auto& s : row) v.push_back(parse_scalar(r, s));
    if (v.size() != dim)
      fail("dimension-mismatch", "vector of length " + std::to_string(v.size()) + ", expected " + std::to_string(dim));
    b.push_back(v);
  }
  return b;
}

std::vector<Scalar> parse_scalars(const Ring& r, const std::string& text) {
  std::vector<Scalar> out;
  if (trim(text).empty()) return out;
  for (const auto& s : parse_list(text)) out.push_back(parse_scalar(r, s));
  return out;
}

Json basis_json(const Basis& b) {
  Json j = Json::array();
  for (const Vec& v : b) j.push_back(vec_to_json(v));
  return j;
}

Json scalars_json(const std::vector<Scalar>& s) {
  Json j = Json::array();
  for (const Scalar& x : s) j.push_back(x.str());
  return j;
}

std::string base_size(const Ring& r, std::size_t rank) {
  if (!r.finite()) return "infinite";
  BigInt n = 1;
  for (std::size_t i = 0; i < rank; ++i) n *= r.p();
  return n.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized pseudo-quadratic forms: evaluation, polar spaces, quotients, covers, classification."};
  app.footer(kErrorCodes);
  app.require_subcommand(1);
  app.fallthrough();
  std::uint64_t seed = kDefaultSeed;
  app.add_option("-o,--output", output_path, "write the JSON report here instead of stdout");
  app.add_option("--seed", seed, "seed for randomized steps")->capture_default_str();

  std::string ring_s, sigma_s = "id", eps_s = "1";
  auto* pair_info = app.add_subcommand("pair-info", "admissible pair data: trace type, K_{sigma,eps}, K^{sigma,eps}");
  pair_info->add_option("--ring", ring_s, "field(p, n), funcfield2(t) or quaternions()")->required();
  pair_info->add_option("--sigma", sigma_s, "id, frob^k or conj")->capture_default_str();
  pair_info->add_option("--eps", eps_s, "epsilon")->capture_default_str();

  std::string form_path, vector_s;
  auto* form_eval = app.add_subcommand("form-eval", "evaluate q at a vector");
  form_eval->add_option("--form", form_path, "form file")->required();
  form_eval->add_option("--vector", vector_s, "comma separated coordinates")->required();

  std::string source = "auto", geometry_out;
  auto* enumerate = app.add_subcommand("enumerate", "points and lines of S_q or S_f (finite fields)");
  enumerate->add_option("--form", form_path, "form file")->required();
  enumerate->add_option("--source", source, "q, f or auto (f when the codefect is full)")
      ->check(CLI::IsMember({"q", "f", "auto"}))
      ->capture_default_str();
  enumerate->add_option("--geometry-out", geometry_out, "also write the polar space as a geometry file");

  std::string subspace_s;
  auto* quotient = app.add_subcommand("quotient", "quotient q_U for U inside Rad(f)");
  quotient->add_option("--form", form_path, "form file")->required();
  quotient->add_option("--subspace", subspace_s, "basis of U, e.g. [[0,0,1]]")->required();

  std::string s_s, t_s, basis_s;
  auto* cover = app.add_subcommand("cover", "cover q^{S,T} for a decomposition R = S + T");
  cover->add_option("--form", form_path, "form file")->required();
  cover->add_option("--S", s_s, "generators of S, e.g. [1]");
  cover->add_option("--T", t_s, "generators of T");
  cover->add_option("--basis", basis_s, "singular basis E (found by search when omitted)");

  auto* dominant = app.add_subcommand("dominant-cover", "the cover q^{R,0}");
  dominant->add_option("--form", form_path, "form file")->required();
  dominant->add_option("--basis", basis_s, "singular basis E (found by search when omitted)");

  std::string geometry_path;
  auto* classify_cmd = app.add_subcommand("classify", "recover the form of an embedded polar space");
  classify_cmd->add_option("--geometry", geometry_path, "geometry file")->required();

  auto* hull_cmd = app.add_subcommand("hull", "hull of an embedded polar space");
  hull_cmd->add_option("--geometry", geometry_path, "geometry file")->required();

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run the property suites");
  verify->add_option("--suite", suite, "all or 1..9")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*pair_info) {
      const Ring& r = parse_ring(ring_s);
      auto p = AdmissiblePair::validate(r, parse_antiauto(r, sigma_s), parse_scalar(r, eps_s));
      std::vector<Scalar> low, up;
      for (const Vec& b : p.lower().basis()) low.push_back(from_base_coords(r, b));
      for (const Vec& b : p.upper().basis()) up.push_back(from_base_coords(r, b));
      emit(Json{{"ring", r.spec()},
                {"pair", p.str()},
                {"trace_type", p.trace_type()},
                {"lower", {{"basis", scalars_json(low)}, {"size", base_size(r, low.size())}}},
                {"upper", {{"basis", scalars_json(up)}, {"size", base_size(r, up.size())}}}});
    } else if (*form_eval) {
      auto q = read_form_file(form_path);
      Vec x = parse_vector(q.ring(), vector_s);
      if (x.size() != q.dim())
        fail("dimension-mismatch", "vector of length " + std::to_string(x.size()) + ", expected " + std::to_string(q.dim()));
      CosetElement v = eval_q(q, x);
      emit(Json{{"vector", vec_to_json(x)},
                {"value", v.rep().str()},
                {"codefect", q.codefect().str()},
                {"singular", is_singular(q, x)}});
    } else if (*enumerate) {
      auto q = read_form_file(form_path);
      bool use_f = source == "f" || (source == "auto" && q.codefect().is_full());
      PolarSpace s = use_f ? polar_space(q.f()) : polar_space(q);
      if (!geometry_out.empty()) {
        std::ofstream out(geometry_out, std::ios::binary);
        if (!out) fail("file-not-found", "cannot write '" + geometry_out + "'");
        out << geometry_to_text(geometry_of(s, q.ring()));
      }
      emit(polar_to_json(s));
    } else if (*quotient) {
      auto q = read_form_file(form_path);
      Basis u = parse_basis(q.ring(), subspace_s, q.dim());
      auto quot = quotient_form(q, u);
      emit(Json{{"form", form_to_json(quot.form)},
                {"provenance", {{"op", "quotient"}, {"U", basis_json(quot.u)}, {"keep", quot.keep}}}});
    } else if (*cover || *dominant) {
      auto q = read_form_file(form_path);
      std::optional<Basis> e;
      if (!basis_s.empty()) e = parse_basis(q.ring(), basis_s, q.dim());
      if (*dominant) {
        CoverSpec spec = dominant_spec(q, e);
        emit(Json{{"form", form_to_json(cover_form(spec))},
                  {"provenance",
                   {{"op", "dominant-cover"}, {"S", scalars_json(spec.s_gens())}, {"T", Json::array()}, {"basis", basis_json(spec.basis())}}}});
      } else {
        if (is_trivial(q)) fail("trivial-form", "covers of trivial forms are not constructed");
        auto s = parse_scalars(q.ring(), s_s), t = parse_scalars(q.ring(), t_s);
        CoverSpec spec(q, s, t, e ? *e : find_singular_basis(q, seed));
        emit(Json{{"form", form_to_json(cover_form(spec))},
                  {"provenance", {{"op", "cover"}, {"S", scalars_json(s)}, {"T", scalars_json(t)}, {"basis", basis_json(spec.basis())}}}});
      }
    } else if (*classify_cmd) {
      auto g = read_geometry_file(geometry_path);
      emit(classification_to_json(classify(g)));
    } else if (*hull_cmd) {
      auto g = read_geometry_file(geometry_path);
      auto c = classify(g);
      auto h = hull(c, g);
      emit(Json{{"branch", h.branch},
                {"verdict", c.verdict == Verdict::alternating ? "alternating" : "generalized-pseudo-quadratic"},
                {"form", form_to_json(h.form)},
                {"dim", h.form.dim()},
                {"lifted", basis_json(h.lifted)}});
    } else if (*verify) {
      std::vector<int> ids;
      if (suite == "all") {
        for (int i = 1; i <= kSuiteCount; ++i) ids.push_back(i);
      } else {
        int id = 0;
        try {
          id = std::stoi(suite);
        } catch (const std::exception&) {
          throw ParseError("--suite: expected all or 1.." + std::to_string(kSuiteCount));
        }
        ids.push_back(id);
      }
      Json suites = Json::array();
      std::size_t passed = 0;
      for (int id : ids) {
        SuiteResult r = run_suite(id, seed);
        std::cerr << (r.passed() ? "PASS " : "FAIL ") << r.id << " " << r.name << " (" << r.seconds << "s)\n";
        passed += r.passed();
        Json j{{"id", r.id}, {"name", r.name}, {"checks", r.checks}, {"failures", r.failures}, {"passed", r.passed()}};
        if (r.budget > 0) j["budget_seconds"] = r.budget;
        if (!r.detail.empty()) j["first_failure"] = r.detail;
        suites.push_back(j);
      }
      emit(Json{{"seed", seed}, {"suites", suites}, {"passed", passed}, {"failed", ids.size() - passed}});
      return passed == ids.size() ? 0 : 1;
    }
  } catch (const ParseError& e) {
    Json err{{"code", e.code()}, {"message", e.what()}};
    if (e.line()) err["line"] = e.line();
    if (e.column()) err["column"] = e.column();
    std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
    try {
      emit(Json{{"error", err}});
    } catch (const Error&) {
    }
    return 2;
  } catch (const Error& e) {
    std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
    try {
      emit(Json{{"error", {{"code", e.code()}, {"message", e.what()}}}});
    } catch (const Error&) {
    }
    return 1;
  }
  return 0;
}
