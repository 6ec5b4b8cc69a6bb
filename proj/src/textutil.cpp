#include "gpq/textutil.hpp"

#include <cctype>

#include "gpq/error.hpp"

namespace gpq {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  bool quoted = false;
  std::string cur;
  for (char c : s) {
    if (c == '"') quoted = !quoted;
    if (!quoted) {
      if (c == '(' || c == '[') ++depth;
      if (c == ')' || c == ']') --depth;
      if (depth < 0) throw ParseError("unbalanced brackets in '" + s + "'");
      if (c == sep && depth == 0) {
        out.push_back(trim(cur));
        cur.clear();
        continue;
      }
    }
    cur += c;
  }
  if (depth != 0 || quoted) throw ParseError("unbalanced brackets in '" + s + "'");
  std::string last = trim(cur);
  if (!last.empty() || !out.empty()) out.push_back(last);
  return out;
}

std::string call_body(const std::string& s, const std::string& name) {
  std::string t = trim(s);
  if (t.rfind(name, 0) != 0) throw ParseError("expected " + name + "(...), got '" + t + "'");
  std::string rest = trim(t.substr(name.size()));
  if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')')
    throw ParseError("expected " + name + "(...), got '" + t + "'");
  return rest.substr(1, rest.size() - 2);
}

std::pair<std::string, std::string> key_value(const std::string& s) {
  auto eq = s.find('=');
  if (eq == std::string::npos) throw ParseError("expected key = value, got '" + s + "'");
  return {trim(s.substr(0, eq)), trim(s.substr(eq + 1))};
}

std::vector<std::string> parse_list(const std::string& s) {
  std::string t = trim(s);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') throw ParseError("expected [...], got '" + t + "'");
  std::string body = trim(t.substr(1, t.size() - 2));
  if (body.empty()) return {};
  auto items = split_top(body, ',');
  for (auto& it : items) {
    if (it.empty()) throw ParseError("empty list entry in '" + t + "'");
    if (it.size() >= 2 && it.front() == '"' && it.back() == '"') it = it.substr(1, it.size() - 2);
  }
  return items;
}

std::vector<std::vector<std::string>> parse_nested(const std::string& s) {
  std::vector<std::vector<std::string>> out;
  for (const std::string& row : parse_list(s)) out.push_back(parse_list(row));
  return out;
}

}  // namespace gpq
