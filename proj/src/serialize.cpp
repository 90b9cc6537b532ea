#include "coha/serialize.hpp"

#include <utility>
#include <vector>

#include "coha/errors.hpp"

namespace coha::io {

namespace {

template <class T>
T get_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad field '") + key + "': " + e.what());
  }
}

const json& get_array(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_array()) {
    throw ParseError(std::string("missing array field '") + key + "'");
  }
  return j.at(key);
}

json vector_json(const IntVector& v) { return json(v); }

IntVector vector_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected an integer array");
  IntVector out;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<long long>() < 0) throw ParseError("expected non-negative integers");
    out.push_back(x.get<int>());
  }
  return out;
}

json terms_json(const PartitionElement::TermMap& terms) {
  json arr = json::array();
  for (const auto& [p, c] : terms) arr.push_back({{"partition", to_json(p)}, {"coeff", to_json(c)}});
  return arr;
}

// One rendered summand: coefficient times a (possibly empty) basis label.
struct Summand {
  QLaurent coeff;
  std::string body;
};

std::string join(const std::vector<Summand>& summands, bool latex) {
  if (summands.empty()) return "0";
  std::string out;
  const std::string times = latex ? "\\cdot " : "·";
  for (std::size_t idx = 0; idx < summands.size(); ++idx) {
    const auto& [c, body] = summands[idx];
    const bool single = c.coeffs().size() == 1;
    const bool negative = single && c.coeffs().front().sign() < 0;
    const QLaurent mag = negative ? -c : c;
    std::string text;
    if (body.empty()) {
      text = latex ? mag.to_latex() : mag.to_string();
      if (!single) text = "(" + text + ")";
    } else if (mag == QLaurent(1)) {
      text = body;
    } else {
      text = latex ? mag.to_latex() : mag.to_string();
      if (!single) text = "(" + text + ")";
      text += times + body;
    }
    if (idx == 0) {
      out += negative ? "-" + text : text;
    } else if (latex) {
      out += (negative ? "-" : "+") + text;
    } else {
      out += (negative ? " - " : " + ") + text;
    }
  }
  return out;
}

std::string tuple_text(const Partition& p, bool latex) {
  if (!latex) return p.to_string();
  std::string out = "(";
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i) out += ", ";
    out += std::to_string(p[i]);
  }
  return out + ")";
}

std::string monomial_text(const ExponentVector& e, bool latex) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (latex) {
      out += "x_{" + std::to_string(i + 1) + "}";
      if (e[i] != 1) out += "^{" + std::to_string(e[i]) + "}";
    } else {
      if (!out.empty()) out += " ";
      out += "x_" + std::to_string(i + 1);
      if (e[i] != 1) out += "^" + std::to_string(e[i]);
    }
  }
  return out;
}

std::string render(const MPoly& p, bool latex) {
  std::vector<Summand> s;
  for (const auto& [e, c] : p.sorted_terms()) s.push_back({c, monomial_text(e, latex)});
  return join(s, latex);
}

std::string render(const PartitionElement& e, bool latex) {
  std::vector<Summand> s;
  for (const auto& [p, c] : e.terms()) s.push_back({c, tuple_text(p, latex)});
  return join(s, latex);
}

std::string render(const GradedSymmetricElement& f, bool latex) {
  std::vector<Summand> s;
  for (const auto& [arity, component] : f.components()) {
    for (const auto& [p, c] : component.terms()) {
      s.push_back({c, latex ? "m_{" + tuple_text(p, true) + "}" : "m" + p.to_string()});
    }
  }
  return join(s, latex);
}

std::string render(const std::map<Partition, Rational>& values, bool latex) {
  std::vector<Summand> s;
  for (const auto& [p, v] : values) s.push_back({QLaurent(v), tuple_text(p, latex)});
  return join(s, latex);
}

std::string render(const StructureConstantTable& table, bool latex) {
  std::string out;
  for (const auto& entry : table.entries()) {
    if (latex) {
      out += "c_{" + std::to_string(table.spec().m) + "," + std::to_string(table.spec().n) + "}^{" +
             vector_to_string(entry.a) + "," + vector_to_string(entry.b) + "} = " + entry.coeff.to_latex() + "\\\\\n";
    } else {
      out += "c^{" + vector_to_string(entry.a) + "," + vector_to_string(entry.b) + "} = " + entry.coeff.to_string() +
             "\n";
    }
  }
  if (!out.empty()) out.pop_back();
  return out;
}

}  // namespace

json to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw ParseError("rational must be a string \"p/q\" or an integer");
}

json to_json(const QLaurent& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_json(c));
  return {{"offset", p.offset()}, {"coeffs", coeffs}};
}

QLaurent qlaurent_from_json(const json& j) {
  const int offset = get_field<int>(j, "offset");
  std::vector<Rational> coeffs;
  for (const auto& c : get_array(j, "coeffs")) coeffs.push_back(rational_from_json(c));
  return QLaurent(offset, std::move(coeffs));
}

json to_json(const MPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.sorted_terms()) terms.push_back({{"exp", vector_json(e)}, {"coeff", to_json(c)}});
  return {{"arity", p.arity()}, {"terms", terms}};
}

MPoly mpoly_from_json(const json& j) {
  MPoly p(get_field<std::size_t>(j, "arity"));
  for (const auto& t : get_array(j, "terms")) {
    if (!t.contains("exp") || !t.contains("coeff")) throw ParseError("polynomial term needs exp and coeff");
    const IntVector e = vector_from_json(t.at("exp"));
    if (e.size() != p.arity()) throw ParseError("exponent vector length differs from arity");
    p.add_term(e, qlaurent_from_json(t.at("coeff")));
  }
  return p;
}

json to_json(const Partition& p) { return vector_json(p.parts()); }

Partition partition_from_json(const json& j) {
  IntVector v = vector_from_json(j);
  try {
    return Partition(std::move(v));
  } catch (const ShapeError& e) {
    throw ParseError(e.what());
  }
}

json to_json(const PartitionElement& e, std::optional<int> d) {
  json out = {{"terms", terms_json(e.terms())}};
  if (d) out["d"] = *d;
  return out;
}

PartitionElement partition_element_from_json(const json& j) {
  PartitionElement e;
  for (const auto& t : get_array(j, "terms")) {
    if (!t.is_object() || !t.contains("partition") || !t.contains("coeff")) {
      throw ParseError("element term needs partition and coeff");
    }
    e.add(partition_from_json(t.at("partition")), qlaurent_from_json(t.at("coeff")));
  }
  return e;
}

json to_json(const SymmetricElement& f) {
  return {{"arity", f.arity()}, {"basis", "m"}, {"terms", terms_json(f.terms())}};
}

json to_json(const GradedSymmetricElement& f, std::optional<int> d) {
  json components = json::array();
  for (const auto& [arity, component] : f.components()) {
    components.push_back({{"arity", arity}, {"terms", terms_json(component.terms())}});
  }
  json out = {{"basis", "m"}, {"components", components}};
  if (d) out["d"] = *d;
  return out;
}

json to_json(const StructureConstantTable& table) {
  json entries = json::array();
  for (const auto& e : table.entries()) {
    entries.push_back({{"a", vector_json(e.a)}, {"b", vector_json(e.b)}, {"coeff", to_json(e.coeff)}});
  }
  return {{"m", table.spec().m}, {"n", table.spec().n}, {"d", table.spec().d}, {"entries", entries}};
}

json to_json(const std::map<Partition, Rational>& values, const Rational& at) {
  json terms = json::array();
  for (const auto& [p, v] : values) terms.push_back({{"partition", to_json(p)}, {"value", to_json(v)}});
  return {{"at_q", to_json(at)}, {"terms", terms}};
}

json to_json(const CheckReport& report) {
  json out = {{"name", report.name}, {"passed", report.passed}, {"instances", report.instances},
              {"notes", report.notes}};
  out["counterexample"] = report.counterexample ? json(*report.counterexample) : json(nullptr);
  return out;
}

std::string to_text(const MPoly& p) { return render(p, false); }
std::string to_latex(const MPoly& p) { return render(p, true); }
std::string to_text(const PartitionElement& e) { return render(e, false); }
std::string to_latex(const PartitionElement& e) { return render(e, true); }
std::string to_text(const GradedSymmetricElement& f) { return render(f, false); }
std::string to_latex(const GradedSymmetricElement& f) { return render(f, true); }
std::string to_text(const std::map<Partition, Rational>& values) { return render(values, false); }
std::string to_latex(const std::map<Partition, Rational>& values) { return render(values, true); }
std::string to_text(const StructureConstantTable& table) { return render(table, false); }
std::string to_latex(const StructureConstantTable& table) { return render(table, true); }

}  // namespace coha::io
