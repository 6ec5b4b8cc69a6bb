#pragma once

#include <string>

#include "gpq/classify.hpp"
#include "gpq/forms.hpp"
#include "gpq/polar.hpp"

#include "json.hpp"

namespace gpq {

using Json = nlohmann::json;

// field(p, n), field(q) with q a prime power, funcfield2(t), quaternions()
const Ring& parse_ring(const std::string& text);

// Line-oriented "key = value" file or a JSON object with the same keys.
GenPseudoQuadraticForm parse_form(const std::string& text);
GenPseudoQuadraticForm read_form_file(const std::string& path);
Json form_to_json(const GenPseudoQuadraticForm& q);
Json sesquilinear_to_json(const SesquilinearForm& f);
std::string form_to_text(const GenPseudoQuadraticForm& q);

// ambient = field(p, n), dim = d / point <coords> / line <i j ...>
EmbeddedGeometry parse_geometry(const std::string& text);
EmbeddedGeometry read_geometry_file(const std::string& path);
std::string geometry_to_text(const EmbeddedGeometry& g);

Json vec_to_json(const Vec& v);
Json polar_to_json(const PolarSpace& s);
Json classification_to_json(const Classification& c);

std::string read_text_file(const std::string& path);
// sorted keys, two-space indent, trailing newline
std::string dump(const Json& j);

}  // namespace gpq
