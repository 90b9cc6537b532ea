#pragma once

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "coha/kernel.hpp"
#include "coha/mpoly.hpp"
#include "coha/partition.hpp"
#include "coha/partition_algebra.hpp"
#include "coha/qlaurent.hpp"
#include "coha/rational.hpp"
#include "coha/report.hpp"
#include "coha/shuffle.hpp"

namespace coha::io {

using nlohmann::json;

// JSON encodings. Decoders throw ParseError on malformed input.

json to_json(const Rational& r);  // "p/q" or "p"
Rational rational_from_json(const json& j);

json to_json(const QLaurent& p);  // {"offset": int, "coeffs": [string, ...]}
QLaurent qlaurent_from_json(const json& j);

json to_json(const MPoly& p);  // {"arity": n, "terms": [{"exp": [...], "coeff": ...}]}, lex-sorted
MPoly mpoly_from_json(const json& j);

json to_json(const Partition& p);  // increasing integer array
Partition partition_from_json(const json& j);

/// {"d": D, "terms": [{"partition": [...], "coeff": ...}]} with terms in (length, lex) order.
json to_json(const PartitionElement& e, std::optional<int> d = std::nullopt);
PartitionElement partition_element_from_json(const json& j);

/// {"arity": n, "basis": "m", "terms": [...]}
json to_json(const SymmetricElement& f);
/// {"basis": "m", "d": D, "components": [{"arity": n, "terms": [...]}]}
json to_json(const GradedSymmetricElement& f, std::optional<int> d = std::nullopt);

/// {"m", "n", "d", "entries": [{"a": [...], "b": [...], "coeff": ...}]}
json to_json(const StructureConstantTable& table);

/// {"at_q": value, "terms": [{"partition": [...], "value": string}]}
json to_json(const std::map<Partition, Rational>& values, const Rational& at);

json to_json(const CheckReport& report);

// Human-readable and LaTeX renderings.

std::string to_text(const MPoly& p);
std::string to_latex(const MPoly& p);
std::string to_text(const PartitionElement& e);
std::string to_latex(const PartitionElement& e);
std::string to_text(const GradedSymmetricElement& f);
std::string to_latex(const GradedSymmetricElement& f);
std::string to_text(const std::map<Partition, Rational>& values);
std::string to_latex(const std::map<Partition, Rational>& values);
std::string to_text(const StructureConstantTable& table);
std::string to_latex(const StructureConstantTable& table);

}  // namespace coha::io
