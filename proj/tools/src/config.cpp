#include "nps7_cli/config.hpp"

#include "nps7/error.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace nps7::cli {

namespace {

namespace pt = boost::property_tree;

class Section {
 public:
  Section(std::string name, const pt::ptree* tree) : name_(std::move(name)), tree_(tree) {}

  bool present() const { return tree_ != nullptr; }
  bool has(const std::string& key) const {
    return tree_ != nullptr && tree_->find(key) != tree_->not_found();
  }

  std::string text(const std::string& key) const {
    if (!has(key)) throw ValidationError("missing key '" + key + "' in [" + name_ + "]");
    used_.insert(key);
    return tree_->get<std::string>(key);
  }

  double real(const std::string& key) const {
    const std::string value = text(key);
    double out = 0.0;
    const auto result = std::from_chars(value.data(), value.data() + value.size(), out);
    if (result.ec != std::errc() || result.ptr != value.data() + value.size()) {
      throw ValidationError("[" + name_ + "] " + key + ": expected a number, got '" + value + "'");
    }
    return out;
  }

  int integer(const std::string& key) const {
    const std::string value = text(key);
    int out = 0;
    const auto result = std::from_chars(value.data(), value.data() + value.size(), out);
    if (result.ec != std::errc() || result.ptr != value.data() + value.size()) {
      throw ValidationError("[" + name_ + "] " + key + ": expected an integer, got '" + value + "'");
    }
    return out;
  }

  ExactRational rational(const std::string& key) const {
    try {
      return ExactRational::parse(text(key));
    } catch (const ParseError& e) {
      throw ValidationError("[" + name_ + "] " + key + ": " + e.what());
    }
  }

  ForceExpr expression(const std::string& key) const {
    try {
      return parse_force(text(key));
    } catch (const ParseError& e) {
      throw ValidationError("[" + name_ + "] " + key + ": " + e.what());
    }
  }

  bool flag(const std::string& key, bool fallback) const {
    if (!has(key)) return fallback;
    const std::string value = text(key);
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    throw ValidationError("[" + name_ + "] " + key + ": expected true or false");
  }

  void reject_unknown() const {
    if (tree_ == nullptr) return;
    for (const auto& [key, value] : *tree_) {
      if (!used_.contains(key)) {
        throw ValidationError("unknown key '" + key + "' in [" + name_ + "]");
      }
    }
  }

 private:
  std::string name_;
  const pt::ptree* tree_;
  mutable std::set<std::string> used_;
};

Section section(const pt::ptree& root, const std::string& name) {
  const auto it = root.find(name);
  return Section(name, it == root.not_found() ? nullptr : &it->second);
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw ValidationError("empty entry in n_list");
    item = item.substr(first, last - first + 1);
    int value = 0;
    const auto result = std::from_chars(item.data(), item.data() + item.size(), value);
    if (result.ec != std::errc() || result.ptr != item.data() + item.size()) {
      throw ValidationError("n_list entry '" + item + "' is not an integer");
    }
    out.push_back(value);
  }
  return out;
}

ProblemSpec read_problem(const Section& s) {
  ProblemSpec spec;
  spec.problem.a = s.real("a");
  spec.problem.b = s.real("b");
  spec.problem.f = s.has("f") ? s.expression("f") : ForceExpr();
  spec.problem.g = s.has("g") ? s.expression("g") : ForceExpr();
  for (std::size_t m = 0; m < spec.problem.u.size(); ++m) {
    spec.problem.u[m] = s.real("u" + std::to_string(m));
  }
  if (s.has("exact")) spec.exact = s.expression("exact");
  spec.problem.validate();
  return spec;
}

CascadeSpec read_cascade(const Section& s) {
  CascadeSpec spec;
  auto& model = spec.model;
  model.scales = s.integer("N");
  if (model.scales < 1 || model.scales > 64) throw ValidationError("[cascade] N must lie in 1..64");
  model.gamma = s.real("gamma");
  model.a = s.has("a") ? s.real("a") : 0.0;
  model.b = s.has("b") ? s.real("b") : 1.0;
  for (int k = 1; k <= model.scales; ++k) {
    const std::string force_key = "L" + std::to_string(k);
    model.forces.push_back(s.has(force_key) ? s.expression(force_key) : ForceExpr());
    model.init_velocities.push_back(s.real("v" + std::to_string(k)));
  }
  model.validate();
  return spec;
}

MethodSpec read_method(const Section& s, Subcommand subcommand, CascadeSpec* cascade) {
  if (!s.present()) throw ValidationError("missing [method] section");
  MethodSpec method;
  method.mode = parse_mode(s.text("mode"));

  const bool explicit_params = s.has("alpha") || s.has("beta") || s.has("gamma_") || s.has("delta");
  const int choices = int(explicit_params) + int(s.has("delta_opt")) + int(s.has("theta"));
  if (choices != 1) {
    throw ValidationError(
        "[method] needs exactly one of alpha/beta/gamma_/delta, delta_opt or theta");
  }
  if (explicit_params) {
    method.params = ExplicitParams{
        {s.rational("alpha"), s.rational("beta"), s.rational("gamma_"), s.rational("delta")}};
  } else if (s.has("delta_opt")) {
    method.params = OptimalDelta{s.rational("delta_opt")};
  } else {
    method.params = ThetaChoice{s.real("theta")};
  }
  validate(resolve(method.params));

  if (s.has("n") == s.has("n_list")) throw ValidationError("[method] needs exactly one of n or n_list");
  method.n_list = s.has("n") ? std::vector<int>{s.integer("n")} : parse_int_list(s.text("n_list"));
  if (subcommand != Subcommand::Converge && method.n_list.size() != 1) {
    throw ValidationError(std::string(to_string(subcommand)) + " takes a single n");
  }
  for (int n : method.n_list) {
    if (n < min_intervals(method.mode)) {
      throw ValidationError(std::string(nps7::to_string(method.mode)) +
                            " end conditions need n >= " +
                            std::to_string(min_intervals(method.mode)) + ", got " +
                            std::to_string(n));
    }
  }
  if (s.has("precision")) method.precision = parse_precision(s.text("precision"));
  method.normalize_rows = s.flag("normalize_rows", false);

  if (cascade != nullptr) {
    if (s.has("reference")) {
      const std::string reference = s.text("reference");
      if (reference == "direct") {
        cascade->direct_reference = true;
      } else if (reference != "none") {
        throw ValidationError("[method] reference must be none or direct");
      }
    }
    if (s.has("direct_steps")) cascade->direct_steps = s.integer("direct_steps");
  }
  return method;
}

}  // namespace

std::string_view to_string(Subcommand subcommand) {
  switch (subcommand) {
    case Subcommand::Solve:
      return "solve";
    case Subcommand::Cascade:
      return "cascade";
    case Subcommand::Converge:
      return "converge";
  }
  return "?";
}

SplineParams resolve(const ParamChoice& choice) {
  if (const auto* p = std::get_if<ExplicitParams>(&choice)) return p->params;
  if (const auto* d = std::get_if<OptimalDelta>(&choice)) return optimal_family(d->delta);
  return from_theta(std::get<ThetaChoice>(choice).theta);
}

RunConfig parse_config(std::string_view text, Subcommand subcommand,
                       const std::filesystem::path& base_dir) {
  pt::ptree root;
  try {
    std::istringstream stream{std::string(text)};
    pt::ini_parser::read_ini(stream, root);
  } catch (const pt::ini_parser_error& e) {
    throw ValidationError(std::string("config: ") + e.what());
  }
  for (const auto& [name, tree] : root) {
    if (name != "problem" && name != "cascade" && name != "method" && name != "output") {
      throw ValidationError("unknown config section [" + name + "]");
    }
    if (tree.empty() && !tree.data().empty()) {
      throw ValidationError("key '" + name + "' outside of a section");
    }
  }

  RunConfig config;
  config.subcommand = subcommand;
  const Section problem = section(root, "problem");
  const Section cascade = section(root, "cascade");
  const Section method = section(root, "method");
  const Section output = section(root, "output");

  if (subcommand == Subcommand::Cascade) {
    if (!cascade.present()) throw ValidationError("cascade needs a [cascade] section");
    if (problem.present()) throw ValidationError("cascade config must not have a [problem] section");
    config.cascade = read_cascade(cascade);
  } else {
    if (!problem.present()) throw ValidationError("missing [problem] section");
    if (cascade.present()) {
      throw ValidationError("[cascade] section is only valid for the cascade subcommand");
    }
    config.problem = read_problem(problem);
  }
  config.method = read_method(method, subcommand, config.cascade ? &*config.cascade : nullptr);

  if (!output.present()) throw ValidationError("missing [output] section");
  config.csv_path = base_dir / output.text("csv_path");
  if (output.has("g_path")) {
    config.g_path = base_dir / output.text("g_path");
  } else {
    config.g_path = config.csv_path;
    config.g_path += ".g.txt";
  }

  problem.reject_unknown();
  cascade.reject_unknown();
  method.reject_unknown();
  output.reject_unknown();
  return config;
}

RunConfig load_config(const std::filesystem::path& path, Subcommand subcommand) {
  std::ifstream file(path);
  if (!file) throw ValidationError("cannot open config '" + path.string() + "'");
  std::stringstream buffer;
  buffer << file.rdbuf();
  return parse_config(buffer.str(), subcommand);
}

}  // namespace nps7::cli
