#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "infotile/info_expr.hpp"

namespace infotile {

using nlohmann::json;

// Top-level object with each array element on its own line; byte-stable.
void write_json_doc(std::ostream& os, const json& doc);
std::string json_doc_string(const json& doc);
json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

json varset_json(const VarSet& s);
VarSet varset_from_json(const json& j);
json expr_json(const InfoExpr& e);
InfoExpr expr_from_json(const json& j);
json rational_json(const Rational& q);
Rational rational_from_json(const json& j);

}  // namespace infotile
