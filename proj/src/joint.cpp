#include "infotile/joint.hpp"

#include <fstream>
#include <iostream>
#include <stdexcept>

#include "json.hpp"

namespace infotile {

using nlohmann::json;

uint32_t FactoredJoint::add_seed(const std::string& name, std::vector<Rational> probs) {
  if (probs.empty()) throw std::invalid_argument("seed '" + name + "' has no atoms");
  if (seed_index_.count(name)) throw std::invalid_argument("duplicate seed '" + name + "'");
  Rational total = 0;
  for (auto& p : probs) {
    if (p < 0) throw std::invalid_argument("negative probability in seed '" + name + "'");
    total += p;
  }
  if (total != 1) throw std::invalid_argument("probabilities of seed '" + name + "' sum to " + to_string(total));
  Seed s;
  s.name = name;
  s.uniform = true;
  for (auto& p : probs) {
    s.pd.push_back(p.get_d());
    if (p != probs[0]) s.uniform = false;
  }
  s.probs = std::move(probs);
  uint32_t id = static_cast<uint32_t>(seeds_.size());
  seed_index_[name] = id;
  seeds_.push_back(std::move(s));
  return id;
}

uint32_t FactoredJoint::add_uniform_seed(const std::string& name, uint32_t size) {
  return add_seed(name, std::vector<Rational>(size, frac(1, size)));
}

void FactoredJoint::add_var(VarId name, std::vector<uint32_t> seeds, std::vector<uint32_t> table) {
  if (index_.count(name)) throw std::invalid_argument("duplicate variable '" + name.name() + "'");
  for (size_t i = 0; i < seeds.size(); ++i) {
    if (seeds[i] >= seeds_.size()) throw std::invalid_argument("variable '" + name.name() + "' references unknown seed");
    for (size_t j = 0; j < i; ++j)
      if (seeds[j] == seeds[i]) throw std::invalid_argument("variable '" + name.name() + "' repeats a seed");
  }
  uint64_t n = product_size(seeds);
  if (table.size() != n)
    throw std::invalid_argument("table of '" + name.name() + "' has " + std::to_string(table.size()) +
                                " entries, expected " + std::to_string(n));
  JointVar v;
  v.name = name;
  v.seeds = std::move(seeds);
  v.table = std::move(table);
  uint32_t mx = 0;
  for (auto x : v.table) mx = std::max(mx, x);
  v.range = mx + 1;
  index_[name] = vars_.size();
  vars_.push_back(std::move(v));
}

const JointVar& FactoredJoint::var(VarId v) const {
  auto it = index_.find(v);
  if (it == index_.end()) throw std::out_of_range("unknown variable '" + v.name() + "'");
  return vars_[it->second];
}

std::optional<uint32_t> FactoredJoint::find_seed(const std::string& name) const {
  auto it = seed_index_.find(name);
  if (it == seed_index_.end()) return std::nullopt;
  return it->second;
}

uint64_t FactoredJoint::product_size(const std::vector<uint32_t>& seeds) const {
  uint64_t n = 1;
  for (auto s : seeds) n *= seeds_.at(s).probs.size();
  return n;
}

std::vector<uint32_t> FactoredJoint::digits(const JointVar& v, uint64_t index) const {
  std::vector<uint32_t> d(v.seeds.size());
  for (size_t i = v.seeds.size(); i-- > 0;) {
    uint64_t r = seeds_[v.seeds[i]].probs.size();
    d[i] = static_cast<uint32_t>(index % r);
    index /= r;
  }
  return d;
}

void write_joint(std::ostream& os, const FactoredJoint& j) {
  os << "{\"seeds\":[\n";
  for (size_t i = 0; i < j.seeds().size(); ++i) {
    const Seed& s = j.seeds()[i];
    os << "{\"name\":" << json(s.name).dump() << ",\"size\":" << s.probs.size() << ",\"probs\":[";
    for (size_t k = 0; k < s.probs.size(); ++k) os << (k ? "," : "") << '"' << to_string(s.probs[k]) << '"';
    os << "]}" << (i + 1 < j.seeds().size() ? ",\n" : "\n");
  }
  os << "],\n\"vars\":[\n";
  for (size_t i = 0; i < j.vars().size(); ++i) {
    const JointVar& v = j.vars()[i];
    os << "{\"name\":" << json(v.name.name()).dump() << ",\"seeds\":[";
    for (size_t k = 0; k < v.seeds.size(); ++k) os << (k ? "," : "") << json(j.seeds()[v.seeds[k]].name).dump();
    os << "],\"table\":[";
    for (size_t k = 0; k < v.table.size(); ++k) {
      if (k) os << ',';
      os << v.table[k];
    }
    os << "]}" << (i + 1 < j.vars().size() ? ",\n" : "\n");
  }
  os << "]}\n";
}

namespace {

// SAX reader so large witness tables never become a DOM.
class JointSax : public nlohmann::json_sax<json> {
 public:
  FactoredJoint out;

  bool null() override { return fail("unexpected null"); }
  bool boolean(bool) override { return fail("unexpected boolean"); }
  bool number_integer(number_integer_t v) override {
    if (v < 0) return fail("negative integer");
    return number(static_cast<uint64_t>(v));
  }
  bool number_unsigned(number_unsigned_t v) override { return number(v); }
  bool number_float(number_float_t, const string_t&) override { return fail("unexpected float"); }
  bool string(string_t& s) override {
    const std::string& k = key_at(3);
    if (section_ == "seeds") {
      if (depth() == 3 && k == "name") { seed_name_ = s; return true; }
      if (depth() == 4 && k == "probs") { probs_.push_back(parse_rational(s)); return true; }
    } else if (section_ == "vars") {
      if (depth() == 3 && k == "name") { var_name_ = s; has_name_ = true; return true; }
      if (depth() == 4 && k == "seeds") {
        auto id = out.find_seed(s);
        if (!id) return fail("unknown seed '" + s + "'");
        var_seeds_.push_back(*id);
        return true;
      }
    }
    return fail("unexpected string");
  }
  bool binary(binary_t&) override { return fail("unexpected binary"); }
  bool start_object(std::size_t) override {
    stack_.push_back('o');
    keys_.emplace_back();
    if (depth() == 3) reset_record();
    return true;
  }
  bool end_object() override {
    if (depth() == 3) {
      if (section_ == "seeds") {
        if (size_ && *size_ != probs_.size()) return fail("seed size mismatch for '" + seed_name_ + "'");
        out.add_seed(seed_name_, std::move(probs_));
      } else if (section_ == "vars") {
        if (!has_name_) return fail("variable without name");
        out.add_var(VarId(var_name_), std::move(var_seeds_), std::move(table_));
      }
    }
    stack_.pop_back();
    keys_.pop_back();
    return true;
  }
  bool start_array(std::size_t) override {
    stack_.push_back('a');
    keys_.emplace_back();
    if (depth() == 2) section_ = key_at(1);
    return true;
  }
  bool end_array() override {
    stack_.pop_back();
    keys_.pop_back();
    return true;
  }
  bool key(string_t& k) override {
    keys_.back() = k;
    return true;
  }
  bool parse_error(std::size_t pos, const std::string&, const nlohmann::detail::exception& ex) override {
    throw std::invalid_argument("joint JSON parse error at byte " + std::to_string(pos) + ": " + ex.what());
  }

 private:
  std::vector<char> stack_;
  std::vector<std::string> keys_;
  std::string section_;
  std::string seed_name_, var_name_;
  std::optional<uint64_t> size_;
  std::vector<Rational> probs_;
  std::vector<uint32_t> var_seeds_, table_;
  bool has_name_ = false;

  size_t depth() const { return stack_.size(); }
  const std::string& key_at(size_t level) const {
    static const std::string none;
    return level >= 1 && level <= keys_.size() ? keys_[level - 1] : none;
  }
  void reset_record() {
    seed_name_.clear();
    var_name_.clear();
    has_name_ = false;
    size_.reset();
    probs_.clear();
    var_seeds_.clear();
    table_.clear();
  }
  bool number(uint64_t v) {
    if (section_ == "seeds") {
      if (depth() == 3 && key_at(3) == "size") { size_ = v; return true; }
      if (depth() == 4 && key_at(3) == "probs") { probs_.push_back(Rational(static_cast<unsigned long>(v))); return true; }
    } else if (section_ == "vars") {
      if (depth() == 4 && key_at(3) == "table") {
        if (v > 0xffffffffULL) return fail("table value too large");
        table_.push_back(static_cast<uint32_t>(v));
        return true;
      }
    }
    return fail("unexpected number");
  }
  bool fail(const std::string& what) { throw std::invalid_argument("malformed joint JSON: " + what); }
};

}  // namespace

FactoredJoint read_joint(std::istream& is) {
  JointSax sax;
  json::sax_parse(is, &sax);
  return std::move(sax.out);
}

FactoredJoint read_joint_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open '" + path + "'");
  return read_joint(f);
}

void write_joint_file(const std::string& path, const FactoredJoint& j) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
  write_joint(f, j);
}

}  // namespace infotile
