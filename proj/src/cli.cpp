#include "mhg/cli.hpp"

#include <chrono>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "mhg/algebra.hpp"
#include "mhg/antipodal.hpp"
#include "mhg/enumerate.hpp"
#include "mhg/io.hpp"
#include "mhg/params.hpp"
#include "mhg/sumop.hpp"

namespace mhg::cli {

namespace {

enum class Format { Json, Csv };

struct RunConfig {
  std::string params_path;
  std::optional<int> delta;
  std::string k1, k2, c0, c1;
  std::string henson_path;
  std::optional<int> m;
  std::optional<int> max_size;
  std::string format = "json";
  int jobs = 0;
  std::size_t budget_types = Budget{}.max_types_per_size;
  std::optional<int> budget_seconds;
  std::string space_a, space_b, space;

  Format fmt() const { return format == "csv" ? Format::Csv : Format::Json; }
  int size_or(int fallback) const { return max_size.value_or(fallback); }
  EnumOptions enum_options() const {
    EnumOptions o;
    o.jobs = jobs;
    o.budget.max_types_per_size = budget_types;
    if (budget_seconds) o.budget.max_time = std::chrono::seconds(*budget_seconds);
    return o;
  }
};

class Violated : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ParameterSequence load_params(const RunConfig& cfg) {
  if (!cfg.params_path.empty()) {
    json j = load_json(cfg.params_path);
    if (!cfg.henson_path.empty()) {
      json h = load_json(cfg.henson_path);
      j["henson"] = h.is_object() && h.contains("henson") ? h["henson"] : h;
    }
    return params_from_json(j);
  }
  if (!cfg.delta || cfg.k1.empty() || cfg.k2.empty() || cfg.c0.empty() || cfg.c1.empty())
    throw InvalidParameters("give --params <file> or all of --delta --k1 --k2 --c0 --c1");
  std::vector<MetricSpace> henson;
  if (!cfg.henson_path.empty()) {
    json h = load_json(cfg.henson_path);
    if (h.is_object() && h.contains("henson")) h = h["henson"];
    if (!h.is_array()) throw InvalidParameters("--henson must hold an array of spaces");
    for (const auto& s : h) henson.push_back(space_from_json(s));
  }
  return ParameterSequence(*cfg.delta, ExtNat::parse(cfg.k1), ExtNat::parse(cfg.k2), ExtNat::parse(cfg.c0),
                           ExtNat::parse(cfg.c1), HensonSet(std::move(henson)));
}

// M for commands whose precondition is M in the magic window.
Distance windowed_m(const RunConfig& cfg, const ParameterSequence& p) {
  const MagicRange r = magic_range(p);
  if (!cfg.m) return r.valid_set.front();
  if (!r.contains(*cfg.m))
    throw InvalidInput("M=" + std::to_string(*cfg.m) + " is outside the magic window of " + p.to_string());
  return *cfg.m;
}

// M for commands that accept any distance (closure, sum, decompose).
Distance any_m(const RunConfig& cfg, const ParameterSequence& p) {
  if (cfg.m) {
    if (*cfg.m < 1) throw InvalidInput("M must be a positive distance");
    return *cfg.m;
  }
  return static_cast<Distance>(magic_range(p).default_m);
}

std::string csv_join(const json& arr) {
  std::string s;
  for (std::size_t i = 0; i < arr.size(); ++i) s += (i ? " " : "") + arr[i].dump();
  return s;
}

int emit_report(const Report& r, const RunConfig& cfg, std::ostream& out) {
  if (cfg.fmt() == Format::Csv) {
    out << "check,status,degree,message\n"
        << r.check << "," << (r.pass ? "pass" : "fail") << "," << r.degree << ",\"" << r.message << "\"\n";
  } else {
    out << r.to_json().dump(2) << '\n';
  }
  return r.pass ? kOk : kViolated;
}

int emit_sequence(const std::string& name, const json& seq, const RunConfig& cfg, std::ostream& out,
                  int first_index) {
  if (cfg.fmt() == Format::Csv) {
    out << "n," << name << "\n";
    for (std::size_t i = 0; i < seq.size(); ++i) out << (first_index + static_cast<int>(i)) << "," << seq[i] << "\n";
  } else {
    out << json{{name, seq}}.dump() << '\n';
  }
  return kOk;
}

int cmd_validate(const RunConfig& cfg, std::ostream& out) {
  const ParameterSequence p = load_params(cfg);
  const AdmissibilityVerdict v = classify_admissible(p);
  json failures = json::array();
  for (const auto& f : v.failures)
    failures.push_back(json{{"condition", condition_name(f.condition)}, {"text", condition_text(f.condition)}});
  json warnings = json::array();
  if (!p.henson().empty())
    warnings.push_back("Henson constraints are checked for shape only; catalog admissibility is assumed");
  if (cfg.fmt() == Format::Csv) {
    out << "verdict,admissible,failures\n" << v.label() << "," << (v.admissible() ? "true" : "false") << ",\"";
    for (std::size_t i = 0; i < v.failures.size(); ++i) out << (i ? ";" : "") << condition_name(v.failures[i].condition);
    out << "\"\n";
  } else {
    out << json{{"params", to_json(p)},
                {"verdict", v.label()},
                {"admissible", v.admissible()},
                {"failures", failures},
                {"warnings", warnings}}
               .dump(2)
        << '\n';
  }
  return v.admissible() ? kOk : kViolated;
}

int cmd_triangles(const RunConfig& cfg, std::ostream& out) {
  const ParameterSequence p = load_params(cfg);
  const auto forbidden = forbidden_triangles(p);
  if (cfg.fmt() == Format::Csv) {
    out << "i,j,k,perimeter\n";
    for (const auto& t : forbidden) out << t.i << "," << t.j << "," << t.k << "," << t.perimeter() << "\n";
  } else {
    json arr = json::array();
    for (const auto& t : forbidden) arr.push_back({t.i, t.j, t.k});
    out << json{{"forbidden", arr}}.dump() << '\n';
  }
  return kOk;
}

int cmd_magic(const RunConfig& cfg, std::ostream& out) {
  const ParameterSequence p = load_params(cfg);
  MagicRange r;
  try {
    r = magic_range(p);
  } catch (const EmptyRange& e) {
    if (cfg.fmt() == Format::Csv)
      out << "status,message\nempty,\"" << e.what() << "\"\n";
    else
      out << json{{"status", "empty"}, {"message", e.what()}}.dump(2) << '\n';
    return kViolated;
  }
  if (cfg.fmt() == Format::Csv) {
    out << "lo,hi,default,valid,excluded\n"
        << r.lo << "," << r.hi << "," << r.default_m << "," << csv_join(r.valid_set) << "," << csv_join(r.excluded)
        << "\n";
  } else {
    out << json{{"lo", r.lo}, {"hi", r.hi}, {"default", r.default_m}, {"valid", r.valid_set}, {"excluded", r.excluded}}
               .dump(2)
        << '\n';
  }
  return kOk;
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
  const ParameterSequence p = load_params(cfg);
  const Level level = enumerate_age(p, cfg.size_or(3), cfg.enum_options());
  if (cfg.fmt() == Format::Csv) {
    out << "code,n,upper\n";
    for (const auto& t : level) {
      std::string up;
      for (std::size_t i = 0; i < t.rep.upper().size(); ++i) up += (i ? " " : "") + std::to_string(t.rep.upper()[i]);
      out << "\"" << t.code.to_string() << "\"," << t.rep.size() << "," << up << "\n";
    }
  } else {
    write_dump(out, level);
  }
  return kOk;
}

int cmd_profile(const RunConfig& cfg, std::ostream& out) {
  const ParameterSequence p = load_params(cfg);
  return emit_sequence("profile", to_json(profile(p, cfg.size_or(6), cfg.enum_options())), cfg, out, 0);
}

int cmd_census(const RunConfig& cfg, std::ostream& out) {
  const ParameterSequence p = load_params(cfg);
  const Distance m = windowed_m(cfg, p);
  return emit_sequence("census", to_json(indecomposable_census(p, m, cfg.size_or(6), cfg.enum_options())), cfg, out,
                       1);
}

int cmd_sum(const RunConfig& cfg, std::ostream& out) {
  const ParameterSequence p = load_params(cfg);
  if (cfg.space_a.empty() || cfg.space_b.empty()) throw InvalidInput("sum needs --a and --b");
  const MetricSpace a = space_from_json(load_json(cfg.space_a));
  const MetricSpace b = space_from_json(load_json(cfg.space_b));
  const Distance m = any_m(cfg, p);
  json result{{"a", to_json(a)}, {"b", to_json(b)}, {"m", m}};
  int status = kOk;
  try {
    const MetricSpace s = sum_m(a, b, m);
    result["sum"] = to_json(s);
    result["code"] = canonical_code(s).tokens();
    const auto why = age_violation(p, s);
    result["in_age"] = !why.has_value();
    if (why) {
      result["violation"] = *why;
      status = kViolated;
    }
  } catch (const TriangleViolation& e) {
    result["sum"] = nullptr;
    result["violation"] = e.what();
    result["witness"] = {e.x, e.y, e.z};
    status = kViolated;
  }
  out << result.dump(2) << '\n';
  return status;
}

int cmd_decompose(const RunConfig& cfg, std::ostream& out) {
  const ParameterSequence p = load_params(cfg);
  if (cfg.space.empty()) throw InvalidInput("decompose needs --space");
  const MetricSpace a = space_from_json(load_json(cfg.space));
  const Distance m = any_m(cfg, p);
  const Decomposition d = decompose(a, m);
  json factors = json::array();
  for (std::size_t i = 0; i < d.factors.size(); ++i)
    factors.push_back(json{{"code", d.codes[i].tokens()}, {"space", to_json(d.factors[i])}});
  out << json{{"m", m}, {"space", to_json(a)}, {"indecomposable", d.factors.size() == 1}, {"factors", factors}}.dump(2)
      << '\n';
  return kOk;
}

Report oracle_report(const ParameterSequence& p, int max_size, const EnumOptions& opt) {
  Report r;
  r.check = "oracle";
  r.degree = max_size;
  const auto levels = enumerate_levels(p, max_size, opt);
  json rows = json::array();
  for (int n = 0; n <= max_size; ++n) {
    const std::size_t fast = levels[static_cast<std::size_t>(n)].size();
    const std::size_t slow = oracle_enumerate(p, n, std::max(max_size, kOracleBound));
    rows.push_back({n, fast, slow});
    if (fast != slow && r.pass) {
      r.pass = false;
      r.witness = json{{"n", n}, {"enumerated", fast}, {"oracle", slow}};
      r.message = "enumeration and oracle disagree at n=" + std::to_string(n);
    }
  }
  r.details["counts"] = rows;
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ages of metrically homogeneous graphs: admissibility, enumeration, +_M sums and orbit algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;

  app.add_option("--params", cfg.params_path, "parameter file (JSON)");
  app.add_option("--delta", cfg.delta, "diameter");
  app.add_option("--k1", cfg.k1, "K1 (integer or inf)");
  app.add_option("--k2", cfg.k2, "K2 (integer or inf)");
  app.add_option("--c0", cfg.c0, "even perimeter bound C0 (integer or inf)");
  app.add_option("--c1", cfg.c1, "odd perimeter bound C1 (integer or inf)");
  app.add_option("--henson", cfg.henson_path, "Henson constraints (JSON array of spaces)");
  app.add_option("--m", cfg.m, "sum parameter M");
  app.add_option("--max-size", cfg.max_size, "largest size or degree")->check(CLI::NonNegativeNumber);
  app.add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--jobs", cfg.jobs, "worker threads (1 = serial reference path)")->check(CLI::NonNegativeNumber);
  app.add_option("--budget-types", cfg.budget_types, "maximum types per size");
  app.add_option("--budget-seconds", cfg.budget_seconds, "wall-time budget");

  std::function<int()> action;
  auto sub = [&](CLI::App* parent, const std::string& name, const std::string& help,
                 std::function<int()> fn) {
    CLI::App* s = parent->add_subcommand(name, help);
    s->callback([&action, fn] { action = fn; });
    return s;
  };

  sub(&app, "validate", "classify admissibility", [&] { return cmd_validate(cfg, out); });
  sub(&app, "triangles", "list forbidden triangle types", [&] { return cmd_triangles(cfg, out); });
  sub(&app, "magic", "magic window for M", [&] { return cmd_magic(cfg, out); });
  sub(&app, "enumerate", "dump the types of one size", [&] { return cmd_enumerate(cfg, out); });
  sub(&app, "profile", "type counts per size", [&] { return cmd_profile(cfg, out); });
  sub(&app, "census", "indecomposable type counts per size", [&] { return cmd_census(cfg, out); });
  auto* sum_cmd = sub(&app, "sum", "A +_M B", [&] { return cmd_sum(cfg, out); });
  sum_cmd->add_option("--a", cfg.space_a, "first space (file or inline JSON)");
  sum_cmd->add_option("--b", cfg.space_b, "second space (file or inline JSON)");
  auto* dec_cmd = sub(&app, "decompose", "indecomposable factors under +_M", [&] { return cmd_decompose(cfg, out); });
  dec_cmd->add_option("--space", cfg.space, "space (file or inline JSON)");

  CLI::App* verify = app.add_subcommand("verify", "run a verification");
  verify->require_subcommand(1);
  sub(verify, "closure", "closure of the age under +_M", [&] {
    const ParameterSequence p = load_params(cfg);
    return emit_report(verify_closure(p, any_m(cfg, p), cfg.size_or(6), cfg.jobs), cfg, out);
  });
  sub(verify, "freeness", "free decomposition order", [&] {
    const ParameterSequence p = load_params(cfg);
    return emit_report(verify_freeness(p, windowed_m(cfg, p), cfg.size_or(4), cfg.jobs), cfg, out);
  });
  sub(verify, "hilbert", "profile against the Euler transform of the census", [&] {
    const ParameterSequence p = load_params(cfg);
    return emit_report(verify_hilbert(p, windowed_m(cfg, p), cfg.size_or(6), cfg.enum_options()), cfg, out);
  });
  sub(verify, "polynomial", "rank of generator monomials", [&] {
    const ParameterSequence p = load_params(cfg);
    return emit_report(verify_polynomial_rank(p, windowed_m(cfg, p), cfg.size_or(4), cfg.enum_options()), cfg, out);
  });
  sub(verify, "oracle", "enumeration against brute force", [&] {
    const ParameterSequence p = load_params(cfg);
    return emit_report(oracle_report(p, cfg.size_or(kOracleBound), cfg.enum_options()), cfg, out);
  });

  CLI::App* anti = app.add_subcommand("antipodal", "bipartite antipodal diameter-3 age");
  anti->require_subcommand(1);
  sub(anti, "profile", "a_n from signatures", [&] {
    return emit_sequence("profile", to_json(antipodal_profile(cfg.size_or(8))), cfg, out, 0);
  });
  sub(anti, "verify", "three-way profile agreement and alpha/beta bijection", [&] {
    const int n = cfg.size_or(6);
    return emit_report(verify_antipodal(std::max(n, 8), n, std::min(n, 5), cfg.enum_options()), cfg, out);
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  try {
    return action ? action() : kInvalidInput;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const EmptyRange& e) {
    err << "no admissible M: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const nlohmann::json::exception& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  }
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, out, err);
}

}  // namespace mhg::cli
