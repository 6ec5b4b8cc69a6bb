#pragma once

#include <string>
#include <utility>
#include <vector>

namespace gpq {

std::string trim(const std::string& s);
// split on sep outside (), [] and quotes
std::vector<std::string> split_top(const std::string& s, char sep);
// "name(body)" -> body
std::string call_body(const std::string& s, const std::string& name);
// "key = value" -> (key, value), both trimmed
std::pair<std::string, std::string> key_value(const std::string& s);
// "[a, b, c]" -> {"a", "b", "c"}
std::vector<std::string> parse_list(const std::string& s);
// "[[a, b], [c, d]]"
std::vector<std::vector<std::string>> parse_nested(const std::string& s);

}  // namespace gpq
