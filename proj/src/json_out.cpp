#include <fstream>
#include <sstream>
#include <stdexcept>

#include "infotile/json_io.hpp"

namespace infotile {

void write_json_doc(std::ostream& os, const json& doc) {
  if (!doc.is_object()) {
    os << doc.dump() << '\n';
    return;
  }
  os << "{";
  bool first = true;
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    os << (first ? "\n" : ",\n") << json(it.key()).dump() << ":";
    first = false;
    const json& v = it.value();
    if (v.is_array() && !v.empty()) {
      os << "[\n";
      for (size_t i = 0; i < v.size(); ++i) os << v[i].dump() << (i + 1 < v.size() ? ",\n" : "\n");
      os << "]";
    } else {
      os << v.dump();
    }
  }
  os << "\n}\n";
}

std::string json_doc_string(const json& doc) {
  std::ostringstream ss;
  write_json_doc(ss, doc);
  return ss.str();
}

json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open '" + path + "'");
  try {
    return json::parse(f);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
  f << text;
}

json varset_json(const VarSet& s) { return s.names(); }

VarSet varset_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("variable set must be an array of names");
  return VarSet::of_names(j.get<std::vector<std::string>>());
}

json rational_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<int64_t>()));
  throw std::invalid_argument("rational must be a \"p/q\" string or an integer");
}

json expr_json(const InfoExpr& e) {
  json out = json::array();
  for (auto& [s, c] : e.terms()) out.push_back({{"coef", rational_json(c)}, {"set", varset_json(s)}});
  return out;
}

InfoExpr expr_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expression must be an array of terms");
  InfoExpr e;
  for (auto& t : j) {
    VarSet s = varset_from_json(t.at("set"));
    if (s.empty()) throw std::invalid_argument("empty variable set in expression");
    e.add(s, rational_from_json(t.at("coef")));
  }
  return e;
}

}  // namespace infotile
