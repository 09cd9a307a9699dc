#include "taylor/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "taylor/jet.hpp"
#include "taylor/laws.hpp"
#include "taylor/parser.hpp"

namespace taylor {

namespace {

using nlohmann::json;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::vector<Rational> parse_numbers(const std::string& text, const std::string& what) {
  std::vector<Rational> out;
  for (const auto& item : split(text, ',')) {
    try {
      out.push_back(Rational::parse(item));
    } catch (const DomainError&) {
      throw ConfigError("invalid number '" + item + "' in " + what);
    }
  }
  if (out.empty()) throw ConfigError(what + " is empty");
  return out;
}

/// u_1..u_k from the --jet text, each of length `arity`.
std::vector<std::vector<Rational>> parse_directions(const RunConfig& cfg, std::size_t arity) {
  std::vector<std::vector<Rational>> dirs;
  if (!cfg.jet) {
    if (cfg.order > 0) dirs.emplace_back(arity, Rational(1));
    return dirs;
  }
  if (arity == 1 && cfg.jet->find(';') == std::string::npos) {
    for (const Rational& r : parse_numbers(*cfg.jet, "--jet")) dirs.push_back({r});
  } else {
    for (const auto& part : split(*cfg.jet, ';')) {
      auto v = parse_numbers(part, "--jet");
      if (v.size() != arity) {
        throw ConfigError("--jet vector '" + part + "' has " + std::to_string(v.size()) + " entries, expected " +
                          std::to_string(arity));
      }
      dirs.push_back(std::move(v));
    }
  }
  if (dirs.size() > cfg.order) {
    throw ConfigError("--jet gives " + std::to_string(dirs.size()) + " direction vectors but --order is " +
                      std::to_string(cfg.order));
  }
  return dirs;
}

template <Scalar T>
Jet<T> build_jet(const std::vector<Rational>& point, const std::vector<std::vector<Rational>>& dirs,
                 std::size_t order) {
  const std::size_t d = point.size();
  std::vector<T> flat((order + 1) * d, T(0));
  for (std::size_t c = 0; c < d; ++c) flat[c] = from_rational<T>(point[c]);
  for (std::size_t k = 0; k < dirs.size(); ++k) {
    for (std::size_t c = 0; c < d; ++c) flat[(k + 1) * d + c] = from_rational<T>(dirs[k][c]);
  }
  return Jet<T>(order, d, std::move(flat));
}

std::string format(const Rational& r) { return r.to_string(); }
std::string format(double d) { return to_string(d); }

json to_json(const Rational& r) { return r.to_string(); }
json to_json(double d) { return d; }

template <Scalar T>
std::string format_coeff(const Jet<T>& j, std::size_t k) {
  const std::span<const T> c = j.coeff(k);
  if (c.size() == 1) return format(c[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i > 0) s += ", ";
    s += format(c[i]);
  }
  return s + ")";
}

template <Scalar T>
json coeffs_json(const Jet<T>& j) {
  json coeffs = json::array();
  for (std::size_t k = 0; k <= j.order(); ++k) {
    json row = json::array();
    for (const T& x : j.coeff(k)) row.push_back(to_json(x));
    coeffs.push_back(row);
  }
  return coeffs;
}

bool same(const Rational& a, const Rational& b) { return a == b; }
bool same(double a, double b) { return approx_eq(a, b, 1e-9, 1e-12); }

struct Problem {
  SmoothMap f;
  std::vector<Rational> point;
  std::vector<std::vector<Rational>> dirs;
};

Problem prepare(const RunConfig& cfg) {
  if (cfg.expr.empty()) throw ConfigError("--expr is required");
  if (cfg.point.empty()) throw ConfigError("--point is required");
  if (cfg.scalar != "rational" && cfg.scalar != "f64") {
    throw ConfigError("unknown scalar '" + cfg.scalar + "' (expected rational or f64)");
  }
  if (cfg.output != "text" && cfg.output != "json") {
    throw ConfigError("unknown output '" + cfg.output + "' (expected text or json)");
  }
  std::vector<Rational> point = parse_numbers(cfg.point, "--point");
  SmoothMap f = parse_map(cfg.expr);
  if (f.arity() > point.size()) {
    throw ConfigError("expression uses " + std::to_string(f.arity()) + " variables but --point has " +
                      std::to_string(point.size()) + " coordinates");
  }
  f = SmoothMap(point.size(), f.body());
  if (cfg.scalar == "rational" && !f.is_algebraic()) {
    throw ConfigError("sin, cos, exp and ln need --scalar f64");
  }
  auto dirs = parse_directions(cfg, point.size());
  return {std::move(f), std::move(point), std::move(dirs)};
}

Method method_from(const std::string& name) {
  auto m = parse_method(name);
  if (!m) throw ConfigError("unknown method '" + name + "' (expected operational, direct, inductive, tower or bis)");
  return *m;
}

void check_config_order(std::size_t order, Method m) {
  if (order > max_order(m)) {
    throw ConfigError("order " + std::to_string(order) + " exceeds the limit of " + std::to_string(max_order(m)) +
                      " for method " + std::string(method_name(m)));
  }
}

template <Scalar T>
int expand(const RunConfig& cfg, const Problem& p, std::ostream& out) {
  const Method m = method_from(cfg.method);
  check_config_order(cfg.order, m);
  const Jet<T> result = taylor_push(p.f, build_jet<T>(p.point, p.dirs, cfg.order), m);
  if (cfg.output == "json") {
    json doc;
    doc["order"] = cfg.order;
    doc["method"] = std::string(method_name(m));
    doc["scalar"] = cfg.scalar;
    doc["coeffs"] = coeffs_json(result);
    out << doc.dump() << "\n";
    return exit_ok;
  }
  for (std::size_t k = 0; k <= result.order(); ++k) out << "c" << k << " = " << format_coeff(result, k) << "\n";
  return exit_ok;
}

template <Scalar T>
int compare(const RunConfig& cfg, const Problem& p, std::ostream& out, std::ostream& err) {
  const Jet<T> j = build_jet<T>(p.point, p.dirs, cfg.order);
  TaylorPlan plan(p.f);
  std::vector<Method> methods;
  std::vector<Method> skipped;
  for (Method m : equivalent_methods()) (cfg.order <= max_order(m) ? methods : skipped).push_back(m);
  if (methods.empty()) throw ConfigError("order " + std::to_string(cfg.order) + " is above every method's limit");
  std::vector<Jet<T>> results;
  for (Method m : methods) results.push_back(plan.push(j, m));
  const bool bis_applies = cfg.order <= max_order(Method::Bis);
  std::optional<Jet<T>> bis;
  if (bis_applies) bis = plan.push(j, Method::Bis);

  // First disagreement against the first method.
  std::optional<std::string> disagreement;
  for (std::size_t r = 1; r < results.size() && !disagreement; ++r) {
    for (std::size_t k = 0; k <= cfg.order && !disagreement; ++k) {
      for (std::size_t c = 0; c < p.f.coarity(); ++c) {
        if (!same(results[0].coeff(k)[c], results[r].coeff(k)[c])) {
          disagreement = "methods disagree at coefficient " + std::to_string(k) + ", component " + std::to_string(c) +
                         ": " + std::string(method_name(methods[0])) + " = " + format(results[0].coeff(k)[c]) + ", " +
                         std::string(method_name(methods[r])) + " = " + format(results[r].coeff(k)[c]);
          break;
        }
      }
    }
  }
  std::optional<std::size_t> bis_divergence;
  if (bis) {
    for (std::size_t k = 0; k <= cfg.order && !bis_divergence; ++k) {
      for (std::size_t c = 0; c < p.f.coarity(); ++c) {
        if (!same(results[0].coeff(k)[c], bis->coeff(k)[c])) {
          bis_divergence = k;
          break;
        }
      }
    }
  }

  if (cfg.output == "json") {
    json doc;
    doc["order"] = cfg.order;
    doc["scalar"] = cfg.scalar;
    json by_method = json::object();
    for (std::size_t r = 0; r < methods.size(); ++r) by_method[std::string(method_name(methods[r]))] = coeffs_json(results[r]);
    doc["methods"] = by_method;
    doc["agree"] = !disagreement.has_value();
    if (bis) {
      doc["bis"] = {{"coeffs", coeffs_json(*bis)},
                    {"first_divergence", bis_divergence ? json(*bis_divergence) : json(nullptr)}};
    }
    out << doc.dump() << "\n";
  } else {
    std::vector<std::vector<std::string>> table;
    std::vector<std::string> header{"coefficient"};
    for (Method m : methods) header.emplace_back(method_name(m));
    header.emplace_back("bis (informational)");
    table.push_back(header);
    for (std::size_t k = 0; k <= cfg.order; ++k) {
      std::vector<std::string> row{"c" + std::to_string(k)};
      for (const auto& r : results) row.push_back(format_coeff(r, k));
      row.push_back(bis ? format_coeff(*bis, k) : "-");
      table.push_back(row);
    }
    std::vector<std::size_t> width(header.size(), 0);
    for (const auto& row : table) {
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    for (const auto& row : table) {
      std::string line;
      for (std::size_t i = 0; i < row.size(); ++i) {
        line += row[i];
        if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
      }
      out << line << "\n";
    }
    for (Method m : skipped) {
      out << "skipped " << method_name(m) << ": order above its limit of " << max_order(m) << "\n";
    }
    out << (disagreement ? "methods disagree" : "all methods agree") << "\n";
    if (bis) {
      if (bis_divergence) {
        out << "bis differs from " << method_name(methods[0]) << " from coefficient " << *bis_divergence << "\n";
      } else {
        out << "bis matches at every coefficient\n";
      }
    }
  }
  if (disagreement) {
    err << *disagreement << "\n";
    return exit_failed;
  }
  return exit_ok;
}

std::uint64_t resolve_seed(const RunConfig& cfg) {
  if (cfg.seed) return *cfg.seed;
  if (const char* env = std::getenv("TAYLOR_SEED")) {
    const std::string text(env);
    try {
      std::size_t used = 0;
      const auto value = std::stoull(text, &used);
      if (used == text.size()) return value;
    } catch (const std::exception&) {
    }
    throw ConfigError("TAYLOR_SEED '" + text + "' is not an unsigned integer");
  }
  return 1;
}

int laws(const RunConfig& cfg, std::ostream& out) {
  if (cfg.cases == 0) throw ConfigError("--cases must be positive");
  if (cfg.output != "text" && cfg.output != "json") {
    throw ConfigError("unknown output '" + cfg.output + "' (expected text or json)");
  }
  LawRunOptions options;
  options.cases = cfg.cases;
  options.seed = resolve_seed(cfg);
  options.filter = cfg.laws_filter;
  options.context.inject_fault = cfg.inject_fault;
  const auto outcomes = run_laws(options);

  struct Control {
    std::string name;
    std::string statement;
    std::optional<Witness> witness;
  };
  std::vector<Control> controls;
  auto wanted = [&](const std::string& name) {
    return cfg.laws_filter.empty() || name.find(cfg.laws_filter) != std::string::npos;
  };
  if (wanted("control-bis-mu-naturality")) {
    controls.push_back({"control-bis-mu-naturality", "Tbar_2 f o mu != mu o Tbar_2 Tbar_2 f",
                        find_bis_mu_witness(options.seed)});
  }
  if (wanted("control-stree-lift-square")) {
    controls.push_back({"control-stree-lift-square", "(stree . stree) o lift != lift o stree",
                        stree_lift_square(Jet<Rational>(2, 1, {Rational(0), Rational(1), Rational(0)}))});
  }
  if (outcomes.empty() && controls.empty()) throw ConfigError("no law matches '" + cfg.laws_filter + "'");

  std::size_t failed = 0;
  for (const auto& o : outcomes) failed += o.passed ? 0 : 1;
  for (const auto& c : controls) failed += c.witness ? 0 : 1;

  if (cfg.output == "json") {
    json doc;
    doc["seed"] = options.seed;
    doc["cases"] = options.cases;
    json list = json::array();
    for (const auto& o : outcomes) {
      list.push_back({{"name", o.name},
                      {"group", o.group},
                      {"statement", o.statement},
                      {"cases", o.cases_run},
                      {"passed", o.passed},
                      {"reproducer", o.reproducer}});
    }
    doc["laws"] = list;
    json ctrl = json::array();
    for (const auto& c : controls) {
      json entry{{"name", c.name}, {"statement", c.statement}, {"passed", c.witness.has_value()}};
      if (c.witness) entry["witness"] = {{"instance", c.witness->instance}, {"lhs", c.witness->lhs}, {"rhs", c.witness->rhs}};
      ctrl.push_back(entry);
    }
    doc["controls"] = ctrl;
    doc["passed"] = failed == 0;
    out << doc.dump(2) << "\n";
    return failed == 0 ? exit_ok : exit_failed;
  }

  out << "seed " << options.seed << ", " << options.cases << " cases per law\n";
  for (const auto& o : outcomes) {
    out << (o.passed ? "PASS " : "FAIL ") << o.name << " [" << o.group << "] " << o.statement << "\n";
    if (!o.passed) out << "  reproducer: " << o.reproducer << "\n";
  }
  for (const auto& c : controls) {
    out << (c.witness ? "PASS " : "FAIL ") << c.name << " [negative control] " << c.statement << "\n";
    if (c.witness) {
      out << "  witness: " << c.witness->instance << "\n  lhs " << c.witness->lhs << "\n  rhs " << c.witness->rhs
          << "\n";
    } else {
      out << "  no witness found\n";
    }
  }
  out << (outcomes.size() + controls.size() - failed) << " passed, " << failed << " failed\n";
  return failed == 0 ? exit_ok : exit_failed;
}

void add_expression_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--expr", cfg.expr, "Expression, e.g. \"x0^3\" or \"(x0*x1, sin(x0))\"")->required();
  sub->add_option("--point", cfg.point, "Base point, comma-separated")->required();
  sub->add_option("--jet", cfg.jet, "Directions u_1;u_2;... (default u_1 = ones)");
  sub->add_option("--order", cfg.order, "Expansion order");
  sub->add_option("--scalar", cfg.scalar, "rational or f64");
  sub->add_option("--output", cfg.output, "text or json");
  sub->add_option("--seed", cfg.seed, "Random seed (default TAYLOR_SEED, then 1)");
}

}  // namespace

int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.command == "laws") return laws(cfg, out);
    if (cfg.command != "expand" && cfg.command != "compare") throw ConfigError("unknown command '" + cfg.command + "'");
    const Problem p = prepare(cfg);
    if (cfg.command == "expand") {
      return cfg.scalar == "f64" ? expand<double>(cfg, p, out) : expand<Rational>(cfg, p, out);
    }
    return cfg.scalar == "f64" ? compare<double>(cfg, p, out, err) : compare<Rational>(cfg, p, out, err);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return exit_config_error;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return exit_input_error;
  } catch (const BoundError& e) {
    err << "error: " << e.what() << "\n";
    return exit_config_error;
  } catch (const DomainError& e) {
    err << "evaluation error: " << e.what() << "\n";
    return exit_input_error;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Higher-order forward-mode Taylor expansion on truncated jets", "taylor"};
  app.require_subcommand(1);

  auto* expand_cmd = app.add_subcommand("expand", "Print the Taylor coefficients c_0..c_n");
  add_expression_options(expand_cmd, cfg);
  expand_cmd->add_option("--method", cfg.method, "operational, direct, inductive, tower or bis");

  auto* compare_cmd = app.add_subcommand("compare", "Compute every method and check they agree");
  add_expression_options(compare_cmd, cfg);

  auto* laws_cmd = app.add_subcommand("laws", "Run the seeded law suite");
  laws_cmd->add_option("--laws", cfg.laws_filter, "Only laws whose name contains this text");
  laws_cmd->add_option("--cases", cfg.cases, "Cases per law");
  laws_cmd->add_option("--seed", cfg.seed, "Random seed (default TAYLOR_SEED, then 1)");
  laws_cmd->add_option("--output", cfg.output, "text or json");
  laws_cmd->add_flag("--inject-fault", cfg.inject_fault, "Corrupt one Stree weight (self-test)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_config_error;
  }
  for (auto* sub : {expand_cmd, compare_cmd, laws_cmd}) {
    if (sub->parsed()) cfg.command = sub->get_name();
  }
  return run_command(cfg, out, err);
}

}  // namespace taylor
