#include "gpq/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "gpq/error.hpp"
#include "gpq/textutil.hpp"

namespace gpq {

namespace {

struct Statement {
  std::string value;
  std::size_t line = 0, column = 0;
};

unsigned parse_uint(const std::string& s, const std::string& what) {
  std::string t = trim(s);
  if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(what + ": expected a non-negative integer, got '" + t + "'");
  try {
    return static_cast<unsigned>(std::stoul(t));
  } catch (const std::exception&) {
    throw ParseError(what + ": integer out of range '" + t + "'");
  }
}

// q = p^n, p prime
std::pair<unsigned, unsigned> prime_power(unsigned q) {
  if (q < 2) throw ParseError("field order must be a prime power, got " + std::to_string(q));
  unsigned p = 2;
  while (q % p) ++p;
  unsigned n = 0;
  for (unsigned x = q; x > 1; x /= p) {
    if (x % p) throw ParseError("field order must be a prime power, got " + std::to_string(q));
    ++n;
  }
  return {p, n};
}

std::string strip_comment(const std::string& line) {
  auto h = line.find('#');
  return h == std::string::npos ? line : line.substr(0, h);
}

int depth_delta(const std::string& s) {
  int d = 0;
  for (char c : s) {
    if (c == '(' || c == '[') ++d;
    if (c == ')' || c == ']') --d;
  }
  return d;
}

std::map<std::string, Statement> statements(const std::string& text) {
  std::map<std::string, Statement> out;
  std::istringstream in(text);
  std::string raw, acc;
  std::size_t lineno = 0, start = 0;
  int depth = 0;
  auto flush = [&] {
    std::string s = trim(acc);
    acc.clear();
    if (s.empty()) return;
    auto eq = s.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'key = value'", start, 1);
    std::string key = trim(s.substr(0, eq));
    if (out.count(key)) throw ParseError("duplicate key '" + key + "'", start, 1);
    out[key] = Statement{trim(s.substr(eq + 1)), start, eq + 2};
  };
  while (std::getline(in, raw)) {
    ++lineno;
    std::string s = strip_comment(raw);
    if (trim(s).empty() && depth == 0) continue;
    if (depth == 0) start = lineno;
    acc += " " + s;
    depth += depth_delta(s);
    if (depth < 0) throw ParseError("unbalanced brackets", lineno, 1);
    if (depth == 0) flush();
  }
  if (depth != 0) throw ParseError("unterminated bracket", start, 1);
  return out;
}

template <class F>
auto at(const Statement& st, F&& f) -> decltype(f(st.value)) {
  try {
    return f(st.value);
  } catch (const ParseError& e) {
    if (e.line() != 0) throw;
    throw ParseError(e.what(), st.line, st.column);
  }
}

Json scalar_json(const Scalar& s) { return s.str(); }

std::string json_scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw ParseError("expected an element string, got " + j.dump());
}

std::string list_text(const Json& j) {
  if (!j.is_array()) throw ParseError("expected a list, got " + j.dump());
  std::string s = "[";
  for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + json_scalar_text(j[i]);
  return s + "]";
}

std::string nested_text(const Json& j) {
  if (!j.is_array()) throw ParseError("expected a list of rows, got " + j.dump());
  std::string s = "[";
  for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + list_text(j[i]);
  return s + "]";
}

// JSON objects become the same statements as the text format
std::map<std::string, Statement> json_statements(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("JSON: ") + e.what());
  }
  if (j.contains("form")) j = j["form"];
  if (!j.is_object()) throw ParseError("JSON form must be an object");
  std::map<std::string, Statement> out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& k = it.key();
    const Json& v = it.value();
    std::string s;
    if (k == "gram")
      s = nested_text(v);
    else if (k == "values" || k == "labels")
      s = list_text(v);
    else if (k == "twist") {
      s = "[";
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + (v[i].is_null() ? "none" : json_scalar_text(v[i]));
      s += "]";
    } else if (k == "dim")
      s = v.is_number() ? std::to_string(v.get<long long>()) : json_scalar_text(v);
    else if (v.is_string())
      s = v.get<std::string>();
    else
      continue;
    out[k] = Statement{s, 0, 0};
  }
  return out;
}

const Statement& need(const std::map<std::string, Statement>& st, const std::string& key) {
  auto it = st.find(key);
  if (it == st.end()) throw ParseError("missing key '" + key + "'");
  return it->second;
}

}  // namespace

const Ring& parse_ring(const std::string& text) {
  std::string t = trim(text);
  auto open = t.find('(');
  if (open == std::string::npos || t.back() != ')') throw ParseError("ring: expected field(p, n), funcfield2(t) or quaternions()");
  std::string head = trim(t.substr(0, open));
  std::string body = trim(t.substr(open + 1, t.size() - open - 2));
  if (head == "field") {
    auto parts = split_top(body, ',');
    if (parts.size() == 1) {
      auto [p, n] = prime_power(parse_uint(parts[0], "field"));
      return Ring::finite_field(p, n);
    }
    if (parts.size() != 2) throw ParseError("field: expected field(p, n)");
    unsigned p = parse_uint(parts[0], "field"), n = parse_uint(parts[1], "field");
    if (prime_power(p).second != 1) throw ParseError("field: " + std::to_string(p) + " is not prime");
    if (n == 0) throw ParseError("field: degree must be positive");
    return Ring::finite_field(p, n);
  }
  if (head == "funcfield2") return Ring::funcfield2(body.empty() ? "t" : body);
  if (head == "quaternions") {
    if (!body.empty()) throw ParseError("quaternions() takes no arguments");
    return Ring::quaternions();
  }
  throw ParseError("unknown ring '" + head + "'");
}

GenPseudoQuadraticForm parse_form(const std::string& text) {
  std::string t = trim(text);
  auto st = !t.empty() && t[0] == '{' ? json_statements(t) : statements(text);
  for (const auto& kv : st) {
    static const char* known[] = {"ring", "pair", "dim", "gram", "values", "codefect", "labels", "twist"};
    bool ok = false;
    for (const char* k : known) ok = ok || kv.first == k;
    if (!ok) throw ParseError("unknown key '" + kv.first + "'", kv.second.line, 1);
  }
  const Ring& r = at(need(st, "ring"), [](const std::string& v) -> const Ring& { return parse_ring(v); });
  const Statement& ps = need(st, "pair");
  AdmissiblePair pair = at(ps, [&](const std::string& v) { return parse_pair(r, v); });
  std::size_t n = at(need(st, "dim"), [](const std::string& v) { return parse_uint(v, "dim"); });
  const Statement& gs = need(st, "gram");
  Mat gram = at(gs, [&](const std::string& v) {
    Mat g;
    for (const auto& row : parse_nested(v)) {
      Vec rv;
      for (const auto& e : row) rv.push_back(parse_scalar(r, e));
      if (rv.size() != n) throw ParseError("gram: row of length " + std::to_string(rv.size()) + ", expected " + std::to_string(n));
      g.push_back(rv);
    }
    if (g.size() != n) throw ParseError("gram: " + std::to_string(g.size()) + " rows, expected " + std::to_string(n));
    return g;
  });
  Vec values = zero_vec(r, n);
  if (st.count("values"))
    values = at(st.at("values"), [&](const std::string& v) {
      Vec out;
      for (const auto& e : parse_list(v)) out.push_back(parse_scalar(r, e));
      if (out.size() != n) throw ParseError("values: expected " + std::to_string(n) + " entries");
      return out;
    });
  ClosedSubgroup codefect = ClosedSubgroup::zero(pair);
  if (st.count("codefect"))
    codefect = at(st.at("codefect"), [&](const std::string& v) { return parse_codefect(pair, v); });
  VectorSpaceSpec sp = VectorSpaceSpec::standard(r, n);
  if (st.count("labels"))
    sp.labels = at(st.at("labels"), [&](const std::string& v) {
      auto l = parse_list(v);
      if (l.size() != n) throw ParseError("labels: expected " + std::to_string(n) + " entries");
      return l;
    });
  if (st.count("twist"))
    sp.twist = at(st.at("twist"), [&](const std::string& v) {
      std::vector<std::optional<Scalar>> tw;
      for (const auto& e : parse_list(v)) {
        if (e == "none" || e == "null" || e == "-")
          tw.emplace_back();
        else
          tw.emplace_back(parse_scalar(r, e));
      }
      if (tw.size() != n) throw ParseError("twist: expected " + std::to_string(n) + " entries");
      return tw;
    });
  return GenPseudoQuadraticForm(pair, gram, values, codefect, sp);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("file-not-found", "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GenPseudoQuadraticForm read_form_file(const std::string& path) { return parse_form(read_text_file(path)); }

Json vec_to_json(const Vec& v) {
  Json j = Json::array();
  for (const Scalar& s : v) j.push_back(scalar_json(s));
  return j;
}

Json sesquilinear_to_json(const SesquilinearForm& f) {
  Json g = Json::array();
  for (const Vec& row : f.gram()) g.push_back(vec_to_json(row));
  return Json{{"ring", f.ring().spec()}, {"pair", f.pair().str()}, {"dim", f.dim()}, {"gram", g}};
}

Json form_to_json(const GenPseudoQuadraticForm& q) {
  Json j = sesquilinear_to_json(q.f());
  j["values"] = vec_to_json(q.values());
  j["codefect"] = q.codefect().str();
  j["labels"] = q.space().labels;
  if (q.space().tagged_count() > 0) {
    Json tw = Json::array();
    for (const auto& t : q.space().twist) tw.push_back(t ? Json(t->str()) : Json(nullptr));
    j["twist"] = tw;
  }
  return j;
}

std::string form_to_text(const GenPseudoQuadraticForm& q) {
  auto row = [](const Vec& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
    return s + "]";
  };
  std::string s = "ring = " + q.ring().spec() + "\n";
  s += "pair = " + q.pair().str() + "\n";
  s += "dim = " + std::to_string(q.dim()) + "\n";
  s += "gram = [";
  for (std::size_t i = 0; i < q.dim(); ++i) s += (i ? ",\n        " : "") + row(q.gram()[i]);
  s += "]\n";
  s += "values = " + row(q.values()) + "\n";
  s += "codefect = " + q.codefect().str() + "\n";
  if (q.space().tagged_count() > 0) {
    std::string l = "[", t = "[";
    for (std::size_t i = 0; i < q.dim(); ++i) {
      l += (i ? ", " : "") + q.space().labels[i];
      t += (i ? ", " : "") + (q.space().twist[i] ? q.space().twist[i]->str() : std::string("none"));
    }
    s += "labels = " + l + "]\ntwist = " + t + "]\n";
  }
  return s;
}

EmbeddedGeometry parse_geometry(const std::string& text) {
  EmbeddedGeometry g;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  bool header = false;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string s = trim(strip_comment(raw));
    if (s.empty()) continue;
    try {
      if (!header) {
        for (const std::string& item : split_top(s, ',')) {
          auto [k, v] = key_value(item);
          if (k == "ambient")
            g.ring = &parse_ring(v);
          else if (k == "dim")
            g.dim = parse_uint(v, "dim");
          else
            throw ParseError("geometry header: unknown key '" + k + "'");
        }
        if (g.ring == nullptr || g.dim == 0) throw ParseError("geometry header needs ambient = field(p, n), dim = d");
        if (!g.ring->finite()) fail("invalid-geometry", "geometries live over finite fields");
        header = true;
        continue;
      }
      for (char& c : s)
        if (c == ',') c = ' ';
      std::istringstream ls(s);
      std::string kind, tok;
      ls >> kind;
      std::vector<std::string> toks;
      while (ls >> tok) toks.push_back(tok);
      if (kind == "point") {
        if (toks.size() != g.dim)
          throw ParseError("point has " + std::to_string(toks.size()) + " coordinates, expected " + std::to_string(g.dim));
        Vec v;
        for (const auto& x : toks) v.push_back(parse_scalar(*g.ring, x));
        if (is_zero(v)) fail("invalid-geometry", "point " + std::to_string(g.points.size()) + " is the zero vector");
        g.points.push_back(projective_normalize(v));
      } else if (kind == "line") {
        std::vector<std::size_t> l;
        for (const auto& x : toks) l.push_back(parse_uint(x, "line"));
        g.lines.push_back(l);
      } else {
        throw ParseError("expected 'point' or 'line', got '" + kind + "'");
      }
    } catch (const ParseError& e) {
      if (e.line() != 0) throw;
      throw ParseError(e.what(), lineno, 1);
    }
  }
  if (!header) throw ParseError("empty geometry file");
  return g;
}

EmbeddedGeometry read_geometry_file(const std::string& path) { return parse_geometry(read_text_file(path)); }

std::string geometry_to_text(const EmbeddedGeometry& g) {
  std::string s = "ambient = " + g.ring->spec() + ", dim = " + std::to_string(g.dim) + "\n";
  for (const Vec& v : g.points) {
    s += "point";
    for (const Scalar& x : v) s += " " + x.str();
    s += "\n";
  }
  for (const auto& l : g.lines) {
    s += "line";
    for (std::size_t i : l) s += " " + std::to_string(i);
    s += "\n";
  }
  return s;
}

Json polar_to_json(const PolarSpace& s) {
  Json pts = Json::array(), rad = Json::array();
  for (const Vec& v : s.points) pts.push_back(vec_to_json(v));
  for (const Vec& v : s.radical) rad.push_back(vec_to_json(v));
  return Json{{"source", s.source}, {"dim", s.dim},          {"points", pts},
              {"lines", s.lines},   {"rank", s.rank},        {"radical", rad},
              {"num_points", s.points.size()}, {"num_lines", s.lines.size()}};
}

Json classification_to_json(const Classification& c) {
  Json basis = Json::array(), gamma = Json::array();
  for (const Vec& v : c.gr.e) basis.push_back(vec_to_json(v));
  for (const Scalar& x : c.gr.gamma) gamma.push_back(x.str());
  Json j{{"verdict", c.verdict == Verdict::alternating ? "alternating" : "generalized-pseudo-quadratic"},
         {"sesquilinear", sesquilinear_to_json(c.f)},
         {"form", form_to_json(c.form)},
         {"basis", basis},
         {"gamma", gamma},
         {"codefect", c.gr.r.str()}};
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace gpq
