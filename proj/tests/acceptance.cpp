// Acceptance criteria 1..9: one PASS/FAIL line each, exit status = failures.
#include <cstdio>
#include <functional>
#include <set>
#include <vector>

#include "gpq/verify.hpp"

using namespace gpq;

namespace {

// brute force over F_2 with bitmasks
using Pred = std::function<bool(unsigned, unsigned)>;  // (x, y) pairwise test, x == y for points

struct Oracle {
  std::size_t points = 0, lines = 0, rank = 0;
};

unsigned parity(unsigned x) { return __builtin_popcount(x) & 1u; }

Oracle brute(unsigned n, const std::function<bool(unsigned)>& singular, const Pred& perp) {
  std::vector<unsigned> pts;
  for (unsigned v = 1; v < (1u << n); ++v)
    if (singular(v)) pts.push_back(v);
  auto totally = [&](const std::vector<unsigned>& gens) {
    std::size_t k = gens.size();
    for (unsigned c = 1; c < (1u << k); ++c) {
      unsigned v = 0;
      for (std::size_t i = 0; i < k; ++i)
        if (c >> i & 1) v ^= gens[i];
      if (!singular(v)) return false;
    }
    for (unsigned a : gens)
      for (unsigned b : gens)
        if (!perp(a, b)) return false;
    return true;
  };
  Oracle o;
  o.points = pts.size();
  std::set<std::set<unsigned>> lines;
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b)
      if (totally({pts[a], pts[b]})) lines.insert({pts[a], pts[b], pts[a] ^ pts[b]});
  o.lines = lines.size();
  o.rank = o.points ? 1 : 0;
  if (!lines.empty()) o.rank = 2;
  for (std::size_t a = 0; a < pts.size() && o.rank < 3; ++a)
    for (const auto& l : lines) {
      unsigned x = *l.begin(), y = *std::next(l.begin());
      if (l.count(pts[a]) || pts[a] == (x ^ y)) continue;
      if (totally({x, y, pts[a]})) {
        o.rank = 3;
        break;
      }
    }
  return o;
}

// coordinates as bits 0..n-1, x_1 in bit 0
unsigned bit(unsigned v, unsigned i) { return v >> i & 1u; }

Oracle hyperbolic(unsigned m) {
  auto q = [m](unsigned v) {
    unsigned s = 0;
    for (unsigned k = 0; k < m; ++k) s ^= bit(v, 2 * k) & bit(v, 2 * k + 1);
    return s == 0;
  };
  return brute(2 * m, q, [](unsigned, unsigned) { return true; });
}

Oracle parabolic2() {
  auto q = [](unsigned v) { return ((bit(v, 0) & bit(v, 1)) ^ (bit(v, 2) & bit(v, 3)) ^ bit(v, 4)) == 0; };
  return brute(5, q, [](unsigned, unsigned) { return true; });
}

Oracle symplectic2() {
  auto b = [](unsigned x, unsigned y) {
    unsigned s = (bit(x, 0) & bit(y, 1)) ^ (bit(x, 1) & bit(y, 0)) ^ (bit(x, 2) & bit(y, 3)) ^ (bit(x, 3) & bit(y, 2));
    return s == 0;
  };
  return brute(4, [](unsigned) { return true; }, b);
}

int failures = 0;

void line(int id, bool ok, const std::string& text) {
  std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", id, text.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

}  // namespace

int main() {
  // oracle counts must match the locked regression values
  std::vector<Oracle> oracle{hyperbolic(2), symplectic2(), hyperbolic(3), parabolic2()};
  auto locks = enumeration_locks();
  bool oracle_ok = true;
  std::string oracle_note;
  for (std::size_t i = 0; i < locks.size(); ++i) {
    bool ok = oracle[i].points == locks[i].points && oracle[i].rank == locks[i].rank &&
              (locks[i].lines == PolarSpace::npos || oracle[i].lines == locks[i].lines);
    if (!ok) oracle_note += " oracle disagrees on " + locks[i].name + ";";
    oracle_ok = oracle_ok && ok;
  }
  // W(3,2) hull: 15 points and 15 lines, same as the brute-force S_f
  bool hull_lock_ok = oracle[1].points == 15 && oracle[1].lines == 15;

  for (int id = 1; id <= kSuiteCount; ++id) {
    SuiteResult r = run_suite(id, kDefaultSeed);
    bool ok = r.passed();
    if (id == 4) ok = ok && hull_lock_ok;
    if (id == 5) ok = ok && oracle_ok;
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s (%zu checks, %zu failed, %.2fs", r.name.c_str(), r.checks, r.failures, r.seconds);
    std::string text = buf;
    if (r.budget > 0) {
      std::snprintf(buf, sizeof buf, ", budget %.0fs", r.budget);
      text += buf;
    }
    text += ")";
    if (!r.detail.empty()) text += " first failure: " + r.detail;
    if (id == 5 && !oracle_ok) text += oracle_note;
    line(id, ok, text);
  }
  return failures;
}
