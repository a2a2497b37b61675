#include "lierigid/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "lierigid/acceptance.hpp"
#include "lierigid/fubini.hpp"
#include "lierigid/grading.hpp"
#include "lierigid/kernel.hpp"
#include "lierigid/rigidity.hpp"

namespace lierigid {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kCacheEnv = "LIERIGID_CACHE_DIR";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GroupSpec {
  std::string type;
  std::string nodes;
  std::string weight;
};

struct CommandConfig {
  GroupSpec group;
  std::string format = "table";
  std::string cache_dir;
  int verbosity = 0;
  bool serial = false;

  bool no_enforce = false;           // q
  std::string save_path;             // rep build
  int order = 0;                     // fubini
  std::string convention = "invariant";
  std::string method = "tensor";
  bool graded = false;
  std::string json_path;
  int degree_bound = 0;              // kernel
  int which = 1;                     // tables
  bool markdown = false;

  bool json() const { return format == "json"; }
  Exec exec() const { return serial ? Exec::Serial : Exec::Parallel; }
};

struct Group {
  RootSystem rs;
  NodeSet nodes;
  Weight pi;
};

// Nodes default to the support of the weight, the weight to the sum of the
// fundamental weights over the nodes.
Group resolve(const GroupSpec& g) {
  if (g.type.empty()) throw UsageError("--type is required");
  Group out{root_system(g.type), {}, {}};
  if (!g.nodes.empty()) out.nodes = parse_nodes(out.rs, g.nodes);
  if (!g.weight.empty())
    out.pi = parse_weight(out.rs, g.weight);
  else if (!out.nodes.empty())
    out.pi = weight_for_nodes(out.rs, out.nodes);
  else
    throw UsageError("give --nodes, --weight or both");
  if (out.nodes.empty()) out.nodes = out.pi.support();
  return out;
}

std::string format_nodes(const NodeSet& s) {
  std::string out;
  for (int j : s) out += (out.empty() ? "" : ",") + std::to_string(j);
  return out;
}

Json group_json(const Group& g) {
  Json j;
  j["type"] = g.rs.label();
  j["nodes"] = std::vector<int>(g.nodes.begin(), g.nodes.end());
  j["weight"] = format_weight(g.rs, g.pi);
  return j;
}

std::string pad(const std::string& s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); }

class Log {
 public:
  Log(std::ostream& err, int verbosity) : err_(err), verbosity_(verbosity) {}
  void info(const std::string& msg) const {
    if (verbosity_ > 0) err_ << msg << '\n';
  }
  template <class F>
  auto timed(const std::string& what, F&& f) const {
    const auto start = std::chrono::steady_clock::now();
    auto result = f();
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    info(what + ": " + std::to_string(s) + " s");
    return result;
  }

 private:
  std::ostream& err_;
  int verbosity_;
};

std::string cache_file(const std::string& dir, const Group& g) {
  return (std::filesystem::path(dir) / (g.rs.label() + "_" + format_weight(g.rs, g.pi) + ".json")).string();
}

// Loads the realization from the cache directory when a valid entry exists,
// otherwise builds it and stores it there.
IrrepRealization obtain(const Group& g, const CommandConfig& cfg, const Log& log) {
  if (!cfg.cache_dir.empty()) {
    const std::string path = cache_file(cfg.cache_dir, g);
    if (std::filesystem::exists(path)) {
      try {
        IrrepRealization rep = load_realization(path);
        if (rep.root_system().label() == g.rs.label() && rep.highest_weight() == g.pi) {
          log.info("loaded " + path);
          return rep;
        }
        log.info("cache entry " + path + " is for a different module; rebuilding");
      } catch (const Error& e) {
        log.info(std::string("ignoring cache entry: ") + e.what());
      }
    }
    IrrepRealization rep = log.timed("build", [&] { return build_irrep(g.rs, g.pi); });
    std::filesystem::create_directories(cfg.cache_dir);
    save_realization(rep, path);
    log.info("stored " + path);
    return rep;
  }
  return log.timed("build", [&] { return build_irrep(g.rs, g.pi); });
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int cmd_q(const CommandConfig& cfg, std::ostream& out) {
  const Group g = resolve(cfg.group);
  const Rational q = q_value(g.rs, g.nodes, g.pi, !cfg.no_enforce);
  if (cfg.json()) {
    Json j = group_json(g);
    j["q"] = to_string(q);
    emit(out, j);
  } else {
    out << to_string(q) << '\n';
  }
  return 0;
}

int cmd_grade_g(const CommandConfig& cfg, std::ostream& out) {
  if (cfg.group.nodes.empty()) throw UsageError("grade-g needs --nodes");
  const Group g = resolve(cfg.group);
  const GradingProfile gp = grading_element(g.rs, g.nodes);
  if (cfg.json()) {
    Json j;
    j["type"] = g.rs.label();
    j["nodes"] = std::vector<int>(g.nodes.begin(), g.nodes.end());
    j["depth"] = gp.max_grade;
    Json dims = Json::object();
    for (const auto& [d, n] : gp.g_dims) dims[std::to_string(d)] = n;
    j["g_dims"] = dims;
    Json roots = Json::array();
    for (int k = 0; k < g.rs.num_positive_roots(); ++k)
      roots.push_back({{"root", g.rs.positive_roots()[static_cast<std::size_t>(k)]},
                       {"grade", gp.root_grades[static_cast<std::size_t>(k)]}});
    j["positive_roots"] = roots;
    emit(out, j);
    return 0;
  }
  out << g.rs.label() << " graded by nodes {" << format_nodes(g.nodes) << "}, depth " << gp.max_grade << "\n";
  out << pad("grade", 8) << "dim\n";
  for (const auto& [d, n] : gp.g_dims) out << pad(std::to_string(d), 8) << n << '\n';
  out << "\n" << pad("grade", 8) << "positive root\n";
  for (int k = 0; k < g.rs.num_positive_roots(); ++k) {
    std::string root;
    for (int c : g.rs.positive_roots()[static_cast<std::size_t>(k)]) root += (root.empty() ? "" : ",") + std::to_string(c);
    out << pad(std::to_string(gp.root_grades[static_cast<std::size_t>(k)]), 8) << "[" << root << "]\n";
  }
  return 0;
}

int cmd_rep_build(const CommandConfig& cfg, std::ostream& out, const Log& log) {
  const Group g = resolve(cfg.group);
  const IrrepRealization rep = obtain(g, cfg, log);
  const RelationReport rel = verify_relations(rep);
  const GradingProfile gp = grading_element(g.rs, rep.nodes());
  const auto module = graded_module_dims(gp, rep);
  const OsculatingFiltration osc = osculating_dims(rep);
  if (!cfg.save_path.empty()) save_realization(rep, cfg.save_path);
  if (cfg.json()) {
    Json j = group_json(g);
    j["dim"] = rep.dim();
    j["weyl_dim"] = to_string(weyl_dim(g.rs, g.pi));
    j["tangent_dim"] = rep.m();
    j["top_grade"] = to_string(rep.top_grade());
    Json dims = Json::array();
    for (auto it = module.rbegin(); it != module.rend(); ++it) dims.push_back({{"grade", to_string(it->first)}, {"dim", it->second}});
    j["graded_dims"] = dims;
    j["osculating_dims"] = osc.dims;
    j["relations_ok"] = rel.ok;
    if (!rel.ok) j["first_violation"] = rel.first_violation;
    emit(out, j);
  } else {
    out << "module " << g.rs.label() << " [" << format_weight(g.rs, g.pi) << "]\n";
    out << "dim " << rep.dim() << " (Weyl " << to_string(weyl_dim(g.rs, g.pi)) << "), tangent dim " << rep.m() << "\n";
    out << "grades:";
    for (auto it = module.rbegin(); it != module.rend(); ++it) out << ' ' << to_string(it->first) << ':' << it->second;
    out << "\nosculating spans:";
    for (int d : osc.dims) out << ' ' << d;
    out << "\nrelations: " << (rel.ok ? "ok" : rel.first_violation) << '\n';
  }
  return rel.ok ? 0 : 1;
}

SignConvention parse_convention(const std::string& s) {
  if (s == "invariant") return SignConvention::Invariant;
  if (s == "literal") return SignConvention::Literal;
  throw UsageError("unknown convention '" + s + "'");
}

int cmd_fubini(const CommandConfig& cfg, std::ostream& out, const Log& log) {
  const Group g = resolve(cfg.group);
  const SignConvention conv = parse_convention(cfg.convention);
  if (cfg.method == "tensor" && conv == SignConvention::Literal)
    throw UsageError("the literal convention needs --method coefficients");
  const IrrepRealization rep = obtain(g, cfg, log);
  const Rational q = q_value(g.rs, rep.nodes(), g.pi);
  const int order = cfg.order > 0 ? cfg.order : default_max_order(q);
  if (order < 2) throw Error("order must be at least 2");
  const FramedModule fm = framed(rep);

  FubiniFormTable table;
  std::vector<std::string> asymmetries;
  if (cfg.method == "tensor") {
    table = log.timed("tensor route", [&] { return fubini_recurse(fm, order - 1, cfg.exec()); });
  } else if (cfg.method == "coefficients") {
    auto r = log.timed("coefficient recursion", [&] { return fubini_coeff_recursion(fm, order - 1, conv, cfg.exec()); });
    table = std::move(r.table);
    asymmetries = std::move(r.asymmetries);
  } else {
    throw UsageError("unknown method '" + cfg.method + "'");
  }
  const GradedFubini graded = graded_fubini(fm, table);

  auto degree_of = [&](const MultiIndex& a) {
    int d = 0;
    for (int alpha : a) d += fm.u_grades[static_cast<std::size_t>(alpha - 1)];
    return d;
  };

  const bool to_json = cfg.json() || !cfg.json_path.empty();
  if (to_json) {
    Json j = group_json(g);
    j["q"] = to_string(q);
    j["order"] = order;
    j["convention"] = to_string(table.convention);
    j["method"] = cfg.method;
    j["dim"] = fm.dim;
    j["tangent_dim"] = fm.m;
    j["normal_levels"] = std::vector<int>(fm.levels.begin() + fm.m + 1, fm.levels.end());
    Json coeffs = Json::array();
    for (const auto& [k, cs] : table.orders)
      for (const auto& [key, c] : cs) {
        Json e{{"order", k}, {"mu", key.first}, {"alphas", key.second}, {"value", to_string(c)}};
        if (cfg.graded) e["graded_degree"] = degree_of(key.second);
        coeffs.push_back(e);
      }
    j["coefficients"] = coeffs;
    if (cfg.graded) j["graded_violations"] = graded.violations;
    if (!asymmetries.empty()) j["asymmetries"] = asymmetries;
    if (cfg.json_path.empty() || cfg.json_path == "-") {
      emit(out, j);
    } else {
      std::ofstream f(cfg.json_path);
      if (!f) throw Error("cannot write " + cfg.json_path);
      emit(f, j);
    }
  }
  if (!to_json || (!cfg.json_path.empty() && cfg.json_path != "-")) {
    out << "Fubini coefficients of " << g.rs.label() << " [" << format_weight(g.rs, g.pi) << "], q = " << to_string(q)
        << ", orders 2.." << order << ", " << to_string(table.convention) << " convention\n";
    out << "tangent indices 1.." << fm.m << ", normal indices " << fm.m + 1 << ".." << fm.dim - 1 << "\n";
    for (const auto& [k, cs] : table.orders) {
      out << "order " << k << ": " << cs.size() << " nonzero\n";
      for (const auto& [key, c] : cs) {
        out << "  r^" << key.first << "_" << format_multi_index(key.second) << " = " << to_string(c);
        if (cfg.graded) out << "  (degree " << degree_of(key.second) << ")";
        out << '\n';
      }
    }
    if (cfg.graded) out << "graded violations: " << graded.violations.size() << '\n';
    for (const auto& a : asymmetries) out << "asymmetry: " << a << '\n';
  }
  return asymmetries.empty() && (!cfg.graded || graded.violations.empty()) ? 0 : 1;
}

int cmd_kernel(const CommandConfig& cfg, std::ostream& out, const Log& log) {
  const Group g = resolve(cfg.group);
  const IrrepRealization rep = obtain(g, cfg, log);
  const KernelReport r = log.timed("kernel", [&] { return compute_kernel(rep, cfg.degree_bound, cfg.exec()); });
  const bool ok = r.g_in_k && r.contains_scalars && r.bracket_closed && r.g_module;
  // enlargements are expected only for the families with a larger symmetry group
  const auto family = rigidity_order(g.rs, rep.nodes(), g.pi).g0_enlargement;
  const bool unexpected = r.enlargement > 0 && !family;
  if (cfg.json()) {
    Json j = group_json(g);
    j["dim_v"] = r.dim_v;
    j["degree_bound"] = r.degree_bound;
    j["constraint_rank"] = r.rows;
    j["dim_k"] = r.dim_k;
    j["dim_g"] = r.dim_g;
    j["enlargement"] = r.enlargement;
    j["contains_scalars"] = r.contains_scalars;
    j["scalars_in_g"] = r.scalars_in_g;
    j["g_in_k"] = r.g_in_k;
    j["bracket_closed"] = r.bracket_closed;
    j["g_module"] = r.g_module;
    j["unexpected_enlargement"] = unexpected;
    if (family) j["symmetry_note"] = *family;
    emit(out, j);
  } else {
    out << "kernel for " << g.rs.label() << " [" << format_weight(g.rs, g.pi) << "], degree bound " << r.degree_bound << "\n";
    out << "dim V = " << r.dim_v << ", constraint rank " << r.rows << "\n";
    out << "dim k = " << r.dim_k << ", dim g = " << r.dim_g << ", enlargement " << r.enlargement << "\n";
    out << "scalars in k: " << (r.contains_scalars ? "yes" : "no") << ", g in k: " << (r.g_in_k ? "yes" : "no")
        << ", closed: " << (r.bracket_closed ? "yes" : "no") << ", g-stable: " << (r.g_module ? "yes" : "no") << '\n';
    if (family) out << "note: " << *family << '\n';
    if (unexpected) out << "warning: enlargement outside the known families\n";
  }
  return ok ? 0 : 1;
}

int cmd_rigidity(const CommandConfig& cfg, std::ostream& out) {
  const Group g = resolve(cfg.group);
  const RigidityVerdict v = rigidity_order(g.rs, g.nodes, g.pi);
  if (cfg.json()) {
    Json j = group_json(g);
    j["q"] = v.q;
    j["clause_a"] = v.clause_a_applies;
    j["clause_b"] = v.clause_b_applies;
    j["order"] = v.order ? Json(*v.order) : Json(nullptr);
    Json factors = Json::array();
    for (const auto& d : v.factor_diagnostics)
      factors.push_back({{"factor", d.factor},
                         {"nodes", std::vector<int>(d.local_nodes.begin(), d.local_nodes.end())},
                         {"labelings", d.labelings},
                         {"quadric_type", d.is_quadric_type},
                         {"A_with_extreme_node", d.is_A_with_extreme_node}});
    j["factors"] = factors;
    if (v.g0_enlargement) j["symmetry_note"] = *v.g0_enlargement;
    emit(out, j);
    return 0;
  }
  out << g.rs.label() << " nodes {" << format_nodes(g.nodes) << "} weight [" << format_weight(g.rs, g.pi) << "]: q = " << v.q
      << "\n";
  for (const auto& d : v.factor_diagnostics) {
    out << "  factor " << d.factor << " {" << format_nodes(d.local_nodes) << "}:";
    for (const auto& l : d.labelings) out << ' ' << l;
    if (d.is_quadric_type) out << "  quadric-type";
    if (d.is_A_with_extreme_node) out << "  A with extreme node";
    out << '\n';
  }
  if (v.clause_a_applies)
    out << "rigid at order " << *v.order << " (clause a)\n";
  else if (v.clause_b_applies)
    out << "rigid at order " << *v.order << " (clause b)\n";
  else
    out << "no rigidity clause applies\n";
  if (v.g0_enlargement) out << "note: " << *v.g0_enlargement << '\n';
  return 0;
}

int cmd_tables(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.which != 1 && cfg.which != 2) throw UsageError("--which must be 1 or 2");
  const QTable t = cfg.which == 1 ? table1_generate(cfg.exec()) : table2_generate(cfg.exec());
  if (cfg.json()) {
    Json rows = Json::array();
    for (const auto& e : t.entries)
      rows.push_back({{"group", e.group}, {"node", e.node}, {"q", to_string(e.q)}, {"expected", to_string(e.expected)}});
    emit(out, Json{{"title", t.title}, {"matches", t.matches()}, {"entries", rows}});
  } else {
    out << t.render(cfg.markdown, false);
  }
  if (t.matches()) return 0;
  for (const auto& e : t.entries)
    if (e.q != e.expected)
      err << "mismatch: " << e.group << " node " << e.node << ": " << to_string(e.q) << " vs " << to_string(e.expected) << '\n';
  return 1;
}

int cmd_verify(const CommandConfig& cfg, std::ostream& out) {
  const auto results = run_acceptance(out, cfg.exec());
  const bool ok = all_passed(results);
  out << (ok ? "all checks passed" : "verification failed") << '\n';
  return ok ? 0 : 1;
}

void add_group_options(CLI::App* cmd, GroupSpec& g, bool weight = true) {
  cmd->add_option("--type", g.type, "Group type, e.g. B3 or A2xG2")->required();
  cmd->add_option("--nodes", g.nodes, "Crossed nodes, e.g. 1,3");
  if (weight) cmd->add_option("--weight", g.weight, "Highest weight in fundamental coordinates, factor blocks separated by x");
}

}  // namespace

int parse_and_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CommandConfig cfg;
  if (const char* dir = std::getenv(kCacheEnv)) cfg.cache_dir = dir;

  CLI::App app{"Rigidity data for rational homogeneous varieties", "lierigid"};
  app.require_subcommand(1);
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"table", "json"}));
  app.add_flag("-v,--verbose", cfg.verbosity, "Report timings and cache activity on stderr");
  app.add_flag("--serial", cfg.serial, "Disable the parallel kernels");
  app.add_option("--cache-dir", cfg.cache_dir, std::string("Module cache directory (default $") + kCacheEnv + ")");

  auto* q = app.add_subcommand("q", "q = pi(E) + pi*(E)");
  add_group_options(q, cfg.group);
  q->add_flag("--no-enforce", cfg.no_enforce, "Allow nodes that differ from the support of the weight");

  auto* grade = app.add_subcommand("grade-g", "Graded dimensions of g for a node set");
  add_group_options(grade, cfg.group, false);

  auto* rep = app.add_subcommand("rep", "Module construction");
  rep->require_subcommand(1);
  auto* build = rep->add_subcommand("build", "Build and check an irreducible module");
  add_group_options(build, cfg.group);
  build->add_option("--save", cfg.save_path, "Write the realization to this file");

  auto* fub = app.add_subcommand("fubini", "Fubini form coefficients");
  add_group_options(fub, cfg.group);
  fub->add_option("--order", cfg.order, "Highest order (default min(q + 1, 6))");
  fub->add_option("--convention", cfg.convention, "invariant or literal")->check(CLI::IsMember({"invariant", "literal"}));
  fub->add_option("--method", cfg.method, "tensor or coefficients")->check(CLI::IsMember({"tensor", "coefficients"}));
  fub->add_flag("--graded", cfg.graded, "Report graded degrees and check graded vanishing");
  fub->add_option("--json", cfg.json_path, "Write JSON to this file, or - for stdout");

  auto* ker = app.add_subcommand("kernel", "Symmetry algebra of the Fubini data");
  add_group_options(ker, cfg.group);
  ker->add_option("--degree-bound", cfg.degree_bound, "Word degree bound (default 2q)");

  auto* rig = app.add_subcommand("rigidity", "Which rigidity clause applies, and at what order");
  add_group_options(rig, cfg.group);

  auto* tab = app.add_subcommand("tables", "Regenerate the q tables");
  tab->add_option("--which", cfg.which, "1: G/P_i in V_{pi_i}; 2: G/B in V_rho")->required();
  tab->add_flag("--markdown", cfg.markdown, "Markdown table");

  app.add_subcommand("verify", "Run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  const Log log(err, cfg.verbosity);
  try {
    if (*q) return cmd_q(cfg, out);
    if (*grade) return cmd_grade_g(cfg, out);
    if (*build) return cmd_rep_build(cfg, out, log);
    if (*fub) return cmd_fubini(cfg, out, log);
    if (*ker) return cmd_kernel(cfg, out, log);
    if (*rig) return cmd_rigidity(cfg, out);
    if (*tab) return cmd_tables(cfg, out, err);
    return cmd_verify(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace lierigid
