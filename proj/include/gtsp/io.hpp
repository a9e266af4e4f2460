#pragma once

#include "gtsp/modules.hpp"
#include "gtsp/oscillator.hpp"
#include "gtsp/verify.hpp"

#include <json.hpp>

#include <string>
#include <variant>

namespace gtsp {

using nlohmann::json;

json to_json(const Rational& q);
json to_json(const Vec& v);
json to_json(const IndexSet& s);
json to_json(const TableauC& t);
json to_json(const TableauD& t);
json to_json(const ModuleSpec& s);
json to_json(const Report& r);
json to_json(const OscSpec& s);
json to_json(const TableauVector& v);

// Rationals are accepted as strings ("-1/2") or integers; anything else is a ParseError.
Rational rational_from_json(const json& j);
Vec vec_from_json(const json& j);
IndexSet index_set_from_json(const json& j);
std::variant<TableauC, TableauD> tableau_from_json(const json& j);
TableauC tableau_c_from_json(const json& j);
ModuleSpec spec_from_json(const json& j);
OscSpec osc_spec_from_json(const json& j);

json read_json_file(const std::string& path);

}  // namespace gtsp
