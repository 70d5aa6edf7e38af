// pentaca: command line front end for the pentagrid automaton library
#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "pentaca/coords.hpp"
#include "pentaca/engine.hpp"
#include "pentaca/geometry.hpp"
#include "pentaca/render.hpp"
#include "pentaca/rules.hpp"
#include "pentaca/scenario.hpp"

using namespace pentaca;
namespace fs = std::filesystem;

namespace {

enum Exit { kOk = 0, kFailed = 1, kInput = 2, kInternal = 3 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

RuleTable rules_file(const std::string& path) {
  if (!fs::exists(path)) throw InputError("rule file not found: " + path);
  return load_rule_table(path);
}

RuleTable rules_from(const std::string& flag) {
  std::string path = flag;
  if (path.empty())
    if (const char* env = std::getenv("PENTACA_RULES")) path = env;
  if (path.empty()) return builtin_rules();
  return rules_file(path);
}

Scenario scenario_from(const std::string& name) {
  if (const Scenario* s = find_builtin(name)) return *s;
  if (fs::exists(name)) return load_scenario(name);
  throw InputError("no built-in scenario or file named '" + name + "' (see 'scenario list')");
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

int rules_check(const std::string& file, const std::string& tsv) {
  RuleTable t = rules_file(file);
  auto conflicts = check_determinism(t);
  std::cout << t.size() << " rules, " << conflicts.size() << " determinism conflicts\n";
  std::string out = "rule_a\trule_b\n";
  for (auto& c : conflicts) {
    std::cout << "  rules " << c.rule_a << " and " << c.rule_b << " share a neighbourhood but disagree\n";
    out += std::to_string(c.rule_a) + "\t" + std::to_string(c.rule_b) + "\n";
  }
  if (!tsv.empty()) write_file(tsv, out);
  return conflicts.empty() ? kOk : kFailed;
}

int rules_rotations(const std::string& file, const std::string& tsv, const std::string& orbits_out) {
  RuleTable t = rules_file(file);
  auto conflicts = find_rotation_conflicts(t);
  auto orbits = rotation_orbits(t);
  size_t multi = 0;
  for (auto& o : orbits) multi += o.members.size() > 1;
  std::cout << conflicts.size() << " conflict pairs\n";
  for (auto& c : conflicts)
    std::cout << "  " << c.rule_a << " ~ " << c.rule_b << " under shift " << c.shift << " (" << to_char(t.find(c.rule_a)->next)
              << " vs " << to_char(t.find(c.rule_b)->next) << ")\n";
  std::cout << orbits.size() << " rotation orbits, " << multi << " with more than one rule\n";
  if (!tsv.empty()) write_file(tsv, conflicts_tsv(conflicts));
  if (!orbits_out.empty()) write_file(orbits_out, orbits_tsv(orbits));
  return kOk;
}

int grid_gen(int radius, const std::string& out) {
  Patch p = build_patch(radius);
  std::string text = "tiles " + std::to_string(p.tiles.size()) + "\n" + dump_patch(p);
  if (out.empty()) std::cout << text;
  else write_file(out, text);
  return kOk;
}

int run_cmd(const std::string& rules_flag, const std::string& name, int steps, const std::string& trace) {
  RuleTable t = rules_from(rules_flag);
  Scenario s = scenario_from(name);
  std::vector<StepTrace> traces;
  try {
    traces = run(s, t, steps);
  } catch (const NoRuleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  } catch (const BoundaryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  std::string tsv = trace_tsv(traces, t);
  if (trace.empty()) std::cout << tsv;
  else {
    write_file(trace, tsv);
    std::cout << traces.size() << " steps of " << s.name << " written to " << trace << "\n";
  }
  return kOk;
}

int verify_cmd(const std::string& rules_flag, const std::string& name, bool all) {
  RuleTable t = rules_from(rules_flag);
  if (all) {
    auto groups = verify_groups(builtin_scenarios(), t);
    size_t ok = 0;
    for (auto& g : groups) {
      ok += g.passed();
      std::cout << (g.passed() ? "PASS " : "FAIL ") << g.group << "\n";
      for (auto& m : g.members)
        if (!m.passed()) std::cout << "  in " << m.name << ":\n" << m.describe();
    }
    std::cout << ok << " of " << groups.size() << " tables pass\n";
    return ok == groups.size() ? kOk : kFailed;
  }
  Scenario s = scenario_from(name);
  auto rep = verify(s, t);
  std::cout << (rep.passed() ? "PASS " : "FAIL ") << s.name << "\n" << rep.describe();
  return rep.passed() ? kOk : kFailed;
}

int render_cmd(const std::string& rules_flag, const std::string& name, int steps, const std::string& dir,
               bool labels) {
  RuleTable t = rules_from(rules_flag);
  Scenario s = scenario_from(name);
  if (steps < 0) steps = s.steps;
  RenderStyle style;
  style.labels = labels;
  std::vector<std::string> docs;
  try {
    docs = render_run(s, t, steps, style);
  } catch (const NoRuleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  fs::create_directories(dir);
  for (size_t k = 0; k < docs.size(); ++k) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "frame_%03zu.svg", k);
    write_file((fs::path(dir) / buf).string(), docs[k]);
  }
  std::cout << docs.size() << " frames written to " << dir << "\n";
  return kOk;
}

int scenario_list() {
  for (auto& s : builtin_scenarios())
    std::cout << s.name << "\t" << s.group << "\t" << s.steps << " steps from " << s.start << "\t" << s.title << "\n";
  return kOk;
}

int scenario_export(const std::string& name, const std::string& dir) {
  fs::create_directories(dir);
  int n = 0;
  for (auto& s : builtin_scenarios()) {
    if (!name.empty() && s.name != name) continue;
    save_scenario(s, (fs::path(dir) / (s.name + ".scn")).string());
    ++n;
  }
  if (!name.empty() && n == 0) throw InputError("no built-in scenario named '" + name + "'");
  write_file((fs::path(dir) / "rules.txt").string(), std::string(builtin_rules_text()));
  std::cout << n << " scenarios and rules.txt written to " << dir << "\n";
  return kOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-state automaton on the pentagrid: rule checks, traces, rendering"};
  app.require_subcommand(1);

  std::string rules_flag, scenario, trace, out_dir, out, tsv, orbits_file, rule_file;
  int steps = -1, radius = 0;
  bool all = false, labels = false;

  auto* rules = app.add_subcommand("rules", "inspect a rule table");
  rules->require_subcommand(1);
  auto* check = rules->add_subcommand("check", "parse and look for contradictory rules");
  check->add_option("file", rule_file, "rule file")->required();
  check->add_option("--tsv", tsv, "write the conflict list as TSV");
  auto* rot = rules->add_subcommand("rotations", "rules that clash once rotations are allowed");
  rot->add_option("file", rule_file, "rule file")->required();
  rot->add_option("--tsv", tsv, "write the conflict pairs as TSV");
  rot->add_option("--orbits", orbits_file, "write every rotation orbit as TSV");

  auto* grid = app.add_subcommand("grid", "tiling patches");
  grid->require_subcommand(1);
  auto* gen = grid->add_subcommand("gen", "dump a patch built by reflections");
  gen->add_option("--radius", radius, "reflection depth")->required()->check(CLI::Range(0, kMaxRadius));
  gen->add_option("--out", out, "output file instead of stdout");

  auto* runc = app.add_subcommand("run", "run a scenario and print the rule trace");
  runc->add_option("--rules", rules_flag, "rule file (default $PENTACA_RULES or the built-in table)");
  runc->add_option("--scenario", scenario, "built-in name or scenario file")->required();
  runc->add_option("--steps", steps, "number of steps (default: the scenario's)")->check(CLI::NonNegativeNumber);
  runc->add_option("--trace", trace, "write the TSV trace here");

  auto* ver = app.add_subcommand("verify", "compare traces against the expected rule ids");
  ver->add_option("--rules", rules_flag, "rule file (default $PENTACA_RULES or the built-in table)");
  auto* vs = ver->add_option("--scenario", scenario, "built-in name or scenario file");
  auto* va = ver->add_flag("--all", all, "every built-in scenario, one line per table");
  vs->excludes(va);
  ver->require_option(1, 2);

  auto* ren = app.add_subcommand("render", "write SVG frames of a scenario run");
  ren->add_option("--rules", rules_flag, "rule file (default $PENTACA_RULES or the built-in table)");
  ren->add_option("--scenario", scenario, "built-in name or scenario file")->required();
  ren->add_option("--steps", steps, "number of frames (default: the scenario's)")->check(CLI::NonNegativeNumber);
  ren->add_option("--out-dir", out_dir, "directory for frame_000.svg ...")->required();
  ren->add_flag("--labels", labels, "print coordinates inside the tiles");

  auto* sc = app.add_subcommand("scenario", "built-in fixtures");
  sc->require_subcommand(1);
  auto* list = sc->add_subcommand("list", "list the built-in scenarios");
  auto* exp = sc->add_subcommand("export", "write the fixtures and rule table as editable files");
  exp->add_option("--out-dir", out_dir, "target directory")->required();
  exp->add_option("--name", scenario, "only this scenario");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*check) return rules_check(rule_file, tsv);
    if (*rot) return rules_rotations(rule_file, tsv, orbits_file);
    if (*gen) return grid_gen(radius, out);
    if (*runc) return run_cmd(rules_flag, scenario, steps, trace);
    if (*ver) return verify_cmd(rules_flag, scenario, all);
    if (*ren) return render_cmd(rules_flag, scenario, steps, out_dir, labels);
    if (*list) return scenario_list();
    if (*exp) return scenario_export(scenario, out_dir);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const RuleParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const ScenarioError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const CoordError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
