#include "cli.hpp"

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "coha/bipartite.hpp"
#include "coha/kernel.hpp"
#include "coha/partition_algebra.hpp"
#include "coha/serialize.hpp"
#include "coha/shuffle.hpp"
#include "coha/suites.hpp"

namespace coha::cli {

namespace {

using io::json;

enum class Format { json, text, latex };

struct RunConfig {
  int d = 2;
  Format format = Format::json;
  Limits limits;
  std::uint64_t seed = SuiteOptions{}.seed;
  std::optional<Rational> at_q;
};

struct Inputs {
  std::string left;
  std::string right;
  std::string partition;
  std::string element;
  std::string basis = "M";
  std::string at_q;
  int m = 1;
  int n = 1;
  int shift = 0;
  bool table = false;
  bool list = false;
  std::string suite;
  std::string ds;
  int max_len = 2;
  int max_part = 2;
  int random_cases = 0;
  int random_max_len = 3;
  int random_max_part = 2;
};

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

// A partition such as "0,2,7", or an element given as JSON.
PartitionElement element_arg(const std::string& text) {
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '{') return io::partition_element_from_json(parse_json(text));
  return PartitionElement(parse_partition(text), QLaurent(1));
}

Partition partition_arg(const std::string& text, const char* what) {
  if (text.find('{') != std::string::npos) throw InvalidArgument(std::string(what) + " must be a single partition");
  return parse_partition(text);
}

std::map<Partition, Rational> specialize_symmetric(const SymmetricElement& f, const Rational& value) {
  std::map<Partition, Rational> out;
  for (const auto& [p, c] : f.terms()) {
    Rational v = c.eval(value);
    if (!v.is_zero()) out.emplace(p, v);
  }
  return out;
}

class Emitter {
 public:
  Emitter(const RunConfig& config, std::ostream& out) : config_(config), out_(out) {}

  void element(const PartitionElement& e, std::optional<int> d) {
    if (config_.at_q) return values(specialize(e, *config_.at_q));
    emit(io::to_json(e, d), io::to_text(e), io::to_latex(e));
  }
  void values(const std::map<Partition, Rational>& v) {
    emit(io::to_json(v, *config_.at_q), io::to_text(v), io::to_latex(v));
  }
  void graded(const GradedSymmetricElement& f, std::optional<int> d) {
    emit(io::to_json(f, d), io::to_text(f), io::to_latex(f));
  }
  void emit(const json& j, const std::string& text, const std::string& latex) {
    switch (config_.format) {
      case Format::json:
        out_ << j.dump(2) << "\n";
        break;
      case Format::text:
        out_ << text << "\n";
        break;
      case Format::latex:
        out_ << latex << "\n";
        break;
    }
  }

 private:
  const RunConfig& config_;
  std::ostream& out_;
};

int cmd_multiply(const RunConfig& config, const Inputs& in, std::ostream& out) {
  const LoopCount d(config.d);
  const PartitionElement result = product(element_arg(in.left), element_arg(in.right), d, config.limits);
  Emitter(config, out).element(result, config.d);
  return kOk;
}

SymmetricElement symmetric_arg(const std::string& text, const std::string& basis) {
  if (text.find('{') != std::string::npos) {
    const json j = parse_json(text);
    if (!j.contains("arity") || !j.at("arity").is_number_unsigned()) throw ParseError("symmetric element needs arity");
    SymmetricElement f(j.at("arity").get<std::size_t>());
    for (const auto& [p, c] : io::partition_element_from_json(j).terms()) {
      if (p.length() != f.arity()) throw ParseError("term length differs from arity");
      f.add(p, c);
    }
    return f;
  }
  const Partition p = parse_partition(text);
  if (basis == "M") return SymmetricElement::M(p);
  if (basis == "m") return SymmetricElement::m(p);
  throw InvalidArgument("basis must be M or m");
}

int cmd_shuffle(const RunConfig& config, const Inputs& in, std::ostream& out) {
  const SymmetricElement result = shuffle_product(symmetric_arg(in.left, in.basis), symmetric_arg(in.right, in.basis),
                                                  LoopCount(config.d), config.limits);
  Emitter emitter(config, out);
  if (config.at_q) {
    emitter.values(specialize_symmetric(result, *config.at_q));
  } else {
    emitter.graded(GradedSymmetricElement(result), config.d);
  }
  return kOk;
}

int cmd_phi(const RunConfig& config, const Inputs& in, std::ostream& out) {
  if (in.partition.empty() == in.element.empty()) throw InvalidArgument("phi needs exactly one of --partition, --element");
  const PartitionElement e =
      in.element.empty() ? PartitionElement(parse_partition(in.partition), QLaurent(1)) : element_arg(in.element);
  Emitter(config, out).graded(phi(e), std::nullopt);
  return kOk;
}

int cmd_g(const RunConfig& config, const Inputs& in, std::ostream& out) {
  const KernelSpec spec{in.m, in.n, config.d, in.shift};
  spec.validate();
  Emitter emitter(config, out);
  if (in.table) {
    if (in.shift != 0) throw InvalidArgument("--table needs --shift 0");
    const StructureConstantTable table = structure_constants(spec, config.limits);
    emitter.emit(io::to_json(table), io::to_text(table), io::to_latex(table));
  } else {
    const MPoly g = build_g(spec, config.limits);
    const json j = {{"m", spec.m}, {"n", spec.n}, {"d", spec.d}, {"shift", spec.shift}, {"polynomial", io::to_json(g)}};
    emitter.emit(j, io::to_text(g), io::to_latex(g));
  }
  return kOk;
}

int cmd_graphs(const RunConfig& config, const Inputs& in, std::ostream& out) {
  if (config.d != 2) throw InvalidArgument("the graph model is defined for d = 2 only");
  const Partition mu = partition_arg(in.left, "--left");
  const Partition nu = partition_arg(in.right, "--right");
  json listed = json::array();
  std::string listed_text;
  const PartitionElement result =
      product_via_graphs(mu, nu, config.limits, [&](std::uint64_t id, const GraphTerm& term) {
        if (!in.list) return;
        listed.push_back({{"id", id}, {"partition", io::to_json(term.partition)}, {"coeff", io::to_json(term.coefficient)}});
        listed_text += std::to_string(id) + ": " + io::to_text(PartitionElement(term.partition, term.coefficient)) + "\n";
      });
  if (config.at_q) {
    Emitter(config, out).values(specialize(result, *config.at_q));
    return kOk;
  }
  json j = io::to_json(result, 2);
  if (in.list) j["graphs"] = listed;
  Emitter(config, out).emit(j, io::to_text(result) + (in.list ? "\n" + listed_text : ""),
                            io::to_latex(result) + (in.list ? "\n" + listed_text : ""));
  return kOk;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw ParseError("bad integer '" + item + "'");
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw ParseError("bad integer '" + item + "'");
    }
  }
  if (out.empty()) throw ParseError("empty list of loop counts");
  return out;
}

int cmd_verify(const RunConfig& config, const Inputs& in, bool d_given, std::ostream& out) {
  SuiteOptions options;
  options.ds = in.ds.empty() ? std::vector<int>{config.d} : parse_int_list(in.ds);
  if (!d_given && in.ds.empty() && in.suite == "lemma31") options.ds = {2, 3};
  for (int d : options.ds) LoopCount{d};
  if (in.max_len < 0 || in.max_part < 0 || in.random_cases < 0 || in.random_max_len < 0 || in.random_max_part < 0) {
    throw InvalidArgument("grid sizes must be non-negative");
  }
  options.max_len = in.max_len;
  options.max_part = in.max_part;
  options.random_cases = in.random_cases;
  options.random_max_len = in.random_max_len;
  options.random_max_part = in.random_max_part;
  options.seed = config.seed;
  options.limits = config.limits;
  const SuiteResult result = run_suite(in.suite, options);

  json sections = json::array();
  std::string text = in.suite + (result.passed() ? ": PASS\n" : ": FAIL\n");
  for (const auto& s : result.sections) {
    sections.push_back(io::to_json(s));
    text += "  " + s.name + ": " + (s.passed ? "PASS" : "FAIL") + " (" + std::to_string(s.instances) + " checks)\n";
    if (s.counterexample) text += "    first counterexample: " + *s.counterexample + "\n";
    for (const auto& note : s.notes) text += "    " + note + "\n";
  }
  for (const auto& line : result.instances) text += line + "\n";
  text.pop_back();
  const json j = {{"suite", in.suite}, {"passed", result.passed()}, {"seed", options.seed}, {"ds", options.ds},
                  {"max_len", options.max_len}, {"max_part", options.max_part}, {"sections", sections},
                  {"instances", result.instances}};
  Emitter(config, out).emit(j, text, text);
  return result.passed() ? kOk : kCheckFailed;
}

int cmd_specialize(const RunConfig& config, const Inputs& in, std::ostream& out) {
  if (!config.at_q) throw InvalidArgument("specialize needs --at-q");
  Emitter(config, out).values(specialize(element_arg(in.element), *config.at_q));
  return kOk;
}

void write_error(std::ostream& err, const std::string& kind, const std::string& message) {
  err << json{{"error", kind}, {"message", message}}.dump() << "\n";
}

// One request object per line; each field becomes the matching flag.
std::vector<std::string> request_args(const json& request) {
  if (!request.is_object() || !request.contains("command") || !request.at("command").is_string()) {
    throw ParseError("request needs a string field 'command'");
  }
  const std::string command = request.at("command").get<std::string>();
  if (command == "batch") throw InvalidArgument("batch requests cannot nest");
  std::vector<std::string> args{"--format", "json", command};
  for (const auto& [key, value] : request.items()) {
    if (key == "command" || key == "format") continue;
    if (key == "suite") {
      if (!value.is_string()) throw ParseError("suite must be a string");
      args.push_back(value.get<std::string>());
      continue;
    }
    std::string flag = "--" + key;
    std::replace(flag.begin(), flag.end(), '_', '-');
    if (value.is_boolean()) {
      if (value.get<bool>()) args.push_back(flag);
    } else if (value.is_array()) {
      std::string joined;
      for (const auto& x : value) {
        if (!x.is_number_integer()) throw ParseError("array field '" + key + "' must hold integers");
        joined += (joined.empty() ? "" : ",") + std::to_string(x.get<long long>());
      }
      args.push_back(flag);
      args.push_back(joined);
    } else if (value.is_string()) {
      args.push_back(flag);
      args.push_back(value.get<std::string>());
    } else {
      args.push_back(flag);
      args.push_back(value.dump());
    }
  }
  return args;
}

int cmd_batch(std::istream& in, std::ostream& out) {
  int worst = kOk;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::ostringstream sub_out;
    std::ostringstream sub_err;
    std::istringstream no_input;
    int code = kOk;
    json response;
    try {
      code = run(request_args(parse_json(line)), no_input, sub_out, sub_err);
    } catch (const Error& e) {
      code = kBadInput;
      write_error(sub_err, e.kind(), e.what());
    }
    response["exit_code"] = code;
    if (!sub_out.str().empty()) response["result"] = json::parse(sub_out.str());
    if (!sub_err.str().empty()) response["error"] = json::parse(sub_err.str());
    out << response.dump() << "\n";
    worst = std::max(worst, code);
  }
  return worst;
}

int exit_code_for(const Error& e) {
  return dynamic_cast<const ResourceLimitError*>(&e) != nullptr ? kResourceLimit : kBadInput;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Partition algebra and quantized shuffle algebra of the d-loop quiver"};
  app.name("coha");
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  Inputs inputs;
  std::string format = "json";
  std::size_t term_cap = config.limits.term_cap;
  std::size_t max_subsets = config.limits.max_subsets;
  int graph_bits = config.limits.graph_bits;
  auto* d_opt = app.add_option("--d", config.d, "number of loops, d >= 1")->capture_default_str();
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text", "latex"}))->capture_default_str();
  app.add_option("--term-cap", term_cap, "maximum number of terms in any polynomial")->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--max-subsets", max_subsets, "maximum number of subsets in a shuffle product")
      ->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--graph-bits", graph_bits, "maximum n*k for the orientation enumeration")
      ->check(CLI::Range(0, 62))->capture_default_str();
  app.add_option("--seed", config.seed, "seed for randomized verification")->capture_default_str();
  app.add_option("--at-q", inputs.at_q, "specialize the result at this rational value of q");

  auto* multiply = app.add_subcommand("multiply", "product in the partition algebra");
  multiply->add_option("--left", inputs.left, "partition like 0,2 or element JSON")->required();
  multiply->add_option("--right", inputs.right, "partition like 1 or element JSON")->required();

  auto* shuffle = app.add_subcommand("shuffle", "shuffle product of M or m basis elements, by subset expansion");
  shuffle->add_option("--left", inputs.left, "partition, or symmetric element JSON in the m basis")->required();
  shuffle->add_option("--right", inputs.right, "partition, or symmetric element JSON in the m basis")->required();
  shuffle->add_option("--basis", inputs.basis, "basis of partition arguments")
      ->check(CLI::IsMember({"M", "m"}))->capture_default_str();

  auto* phi_cmd = app.add_subcommand("phi", "image of an element in the shuffle algebra");
  phi_cmd->add_option("--partition", inputs.partition, "basis partition");
  phi_cmd->add_option("--element", inputs.element, "element JSON");

  auto* g_cmd = app.add_subcommand("g", "kernel polynomial g_{m,n} or its structure constants");
  g_cmd->add_option("--m", inputs.m)->required();
  g_cmd->add_option("--n", inputs.n)->required();
  g_cmd->add_option("--shift", inputs.shift, "shifted kernel g_{m,n}[l]")->capture_default_str();
  g_cmd->add_flag("--table", inputs.table, "list the structure constants instead");

  auto* graphs = app.add_subcommand("graphs", "d = 2 product as a sum over oriented bipartite graphs");
  graphs->add_option("--left", inputs.left)->required();
  graphs->add_option("--right", inputs.right)->required();
  graphs->add_flag("--list", inputs.list, "also list every orientation id with its term");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", inputs.suite)
      ->required()
      ->check(CLI::IsMember({"assoc", "iso", "quasi", "graphs", "lemma31", "prop41", "prop43"}));
  verify->add_option("--ds", inputs.ds, "comma-separated loop counts (default: --d)");
  verify->add_option("--max-len", inputs.max_len)->capture_default_str();
  verify->add_option("--max-part", inputs.max_part)->capture_default_str();
  verify->add_option("--random", inputs.random_cases, "extra seeded random cases (assoc)")->capture_default_str();
  verify->add_option("--random-max-len", inputs.random_max_len)->capture_default_str();
  verify->add_option("--random-max-part", inputs.random_max_part)->capture_default_str();

  auto* specialize_cmd = app.add_subcommand("specialize", "evaluate an element at a rational q");
  specialize_cmd->add_option("--element", inputs.element, "element JSON or a partition")->required();

  auto* batch = app.add_subcommand("batch", "read one JSON request per line from stdin");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    write_error(err, "usage", e.what());
    return kBadInput;
  }

  try {
    config.format = format == "text" ? Format::text : format == "latex" ? Format::latex : Format::json;
    config.limits.term_cap = term_cap;
    config.limits.max_subsets = max_subsets;
    config.limits.graph_bits = graph_bits;
    if (!inputs.at_q.empty()) config.at_q = Rational::parse(inputs.at_q);
    LoopCount{config.d};

    if (*multiply) return cmd_multiply(config, inputs, out);
    if (*shuffle) return cmd_shuffle(config, inputs, out);
    if (*phi_cmd) return cmd_phi(config, inputs, out);
    if (*g_cmd) return cmd_g(config, inputs, out);
    if (*graphs) return cmd_graphs(config, inputs, out);
    if (*verify) return cmd_verify(config, inputs, d_opt->count() > 0, out);
    if (*specialize_cmd) return cmd_specialize(config, inputs, out);
    if (*batch) return cmd_batch(in, out);
  } catch (const Error& e) {
    write_error(err, e.kind(), e.what());
    return exit_code_for(e);
  } catch (const std::bad_alloc&) {
    write_error(err, "resource-limit", "out of memory");
    return kResourceLimit;
  }
  return kBadInput;
}

}  // namespace coha::cli
