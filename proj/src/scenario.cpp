#include "pentaca/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "embedded.hpp"

namespace pentaca {

const char* to_string(CellRole r) {
  switch (r) {
    case CellRole::Track: return "track";
    case CellRole::Special: return "special";
    case CellRole::Milestone: return "milestone";
  }
  return "?";
}

std::vector<TileCoord> Scenario::active_cells() const {
  std::vector<TileCoord> out;
  for (auto& [c, r] : cells)
    if (r != CellRole::Milestone) out.push_back(c);
  return out;
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

int parse_int(const std::string& s, const std::string& where, int line) {
  int v = 0;
  auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size()) throw ScenarioError(where, line, "bad integer '" + s + "'");
  return v;
}

} // namespace

Scenario parse_scenario(const std::string& text, const std::string& where) {
  Scenario s;
  std::istringstream in(text);
  std::string raw, section;
  int line_no = 0;
  bool header_comments = true, have_name = false, have_steps = false;
  std::map<TileCoord, int> cell_line;
  std::set<TileCoord> tracked_set;
  auto coord = [&](const std::string& t) {
    try {
      TileCoord c = parse_coord(t);
      if (!scenario_grid().contains(c)) throw CoordError("coordinate " + t + " lies outside the scenario grid");
      return c;
    } catch (const CoordError& e) {
      throw ScenarioError(where, line_no, e.what());
    }
  };
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    auto first = raw.find_first_not_of(" \t");
    if (first != std::string::npos && raw[first] == '#') {
      if (header_comments) {
        std::string body = raw.substr(first + 1);
        if (!body.empty() && body[0] == ' ') body.erase(0, 1);
        if (s.title.empty() && s.notes.empty()) s.title = body;
        else s.notes.push_back(body);
      }
      continue;
    }
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    auto tok = split(raw);
    if (tok.empty()) continue;
    header_comments = false;
    if (tok[0].front() == '[') {
      if (tok.size() != 1 || tok[0].back() != ']') throw ScenarioError(where, line_no, "bad section header");
      section = tok[0].substr(1, tok[0].size() - 2);
      static const std::set<std::string> known = {"cells", "orientations", "initial", "locomotive", "tracked", "expected"};
      if (!known.count(section)) throw ScenarioError(where, line_no, "unknown section [" + section + "]");
      continue;
    }
    if (section.empty()) {
      if (tok.size() != 2) throw ScenarioError(where, line_no, "expected '<key> <value>'");
      if (tok[0] == "name") s.name = tok[1], have_name = true;
      else if (tok[0] == "group") s.group = tok[1];
      else if (tok[0] == "start") s.start = parse_int(tok[1], where, line_no);
      else if (tok[0] == "steps") s.steps = parse_int(tok[1], where, line_no), have_steps = true;
      else throw ScenarioError(where, line_no, "unknown key '" + tok[0] + "'");
    } else if (section == "cells") {
      if (tok.size() != 2) throw ScenarioError(where, line_no, "expected '<cell> <role>'");
      CellRole r;
      if (tok[1] == "track") r = CellRole::Track;
      else if (tok[1] == "special") r = CellRole::Special;
      else if (tok[1] == "milestone") r = CellRole::Milestone;
      else throw ScenarioError(where, line_no, "unknown role '" + tok[1] + "'");
      TileCoord c = coord(tok[0]);
      if (cell_line.count(c)) throw ScenarioError(where, line_no, "cell " + tok[0] + " listed twice");
      cell_line[c] = line_no;
      s.cells.push_back({c, r});
    } else if (section == "orientations") {
      if (tok.size() != 2) throw ScenarioError(where, line_no, "expected '<cell> <shift>'");
      TileCoord c = coord(tok[0]);
      int v = parse_int(tok[1], where, line_no);
      if (v < 0 || v > 4) throw ScenarioError(where, line_no, "shift must be in 0..4");
      if (!cell_line.count(c)) throw ScenarioError(where, line_no, "orientation for " + tok[0] + " which is not in [cells]");
      s.orientations[c] = v;
    } else if (section == "initial" || section == "locomotive") {
      auto& dst = section == "initial" ? s.initial : s.locomotive;
      for (auto& t : tok) dst.insert(coord(t));
    } else if (section == "tracked") {
      for (auto& t : tok) {
        TileCoord c = coord(t);
        if (!cell_line.count(c)) throw ScenarioError(where, line_no, "tracked cell " + t + " is not in [cells]");
        if (!tracked_set.insert(c).second) throw ScenarioError(where, line_no, "cell " + t + " tracked twice");
        s.tracked.push_back(c);
      }
    } else if (section == "expected") {
      TileCoord c = coord(tok[0]);
      if (!tracked_set.count(c)) throw ScenarioError(where, line_no, "expected row for untracked cell " + tok[0]);
      if (s.expected.count(c)) throw ScenarioError(where, line_no, "second expected row for " + tok[0]);
      std::vector<int> ids;
      for (size_t i = 1; i < tok.size(); ++i) ids.push_back(parse_int(tok[i], where, line_no));
      if (static_cast<int>(ids.size()) != s.steps)
        throw ScenarioError(where, line_no,
                            "expected row has " + std::to_string(ids.size()) + " ids, steps is " + std::to_string(s.steps));
      s.expected[c] = std::move(ids);
    }
  }
  if (!have_name || s.name.empty()) throw ScenarioError(where, 0, "missing name");
  if (!have_steps || s.steps < 0) throw ScenarioError(where, 0, "missing or negative steps");
  if (s.start < 0) throw ScenarioError(where, 0, "negative start");
  if (s.group.empty()) s.group = s.name;
  for (auto c : s.tracked)
    if (!s.expected.count(c)) throw ScenarioError(where, 0, "no expected row for tracked cell " + to_string(c));
  for (auto c : s.locomotive)
    if (!s.initial.count(c)) throw ScenarioError(where, 0, "locomotive cell " + to_string(c) + " is not in [initial]");
  const Grid& g = scenario_grid();
  for (auto c : s.initial)
    if (!g.interior(g.id(c))) throw ScenarioError(where, 0, "initial cell " + to_string(c) + " is not interior");
  for (auto c : s.active_cells())
    if (!g.interior(g.id(c))) throw ScenarioError(where, cell_line[c], "cell " + to_string(c) + " is not interior");
  return s;
}

std::string format_scenario(const Scenario& s) {
  std::string o;
  if (!s.title.empty() || !s.notes.empty()) o += "# " + s.title + "\n";
  for (auto& n : s.notes) o += "# " + n + "\n";
  o += "name " + s.name + "\ngroup " + s.group + "\nstart " + std::to_string(s.start) + "\nsteps " +
       std::to_string(s.steps) + "\n\n[cells]\n";
  for (auto& [c, r] : s.cells) o += to_string(c) + " " + to_string(r) + "\n";
  o += "\n[orientations]\n";
  for (auto& [c, v] : s.orientations) o += to_string(c) + " " + std::to_string(v) + "\n";
  auto list = [&](const std::set<TileCoord>& cs) {
    std::string line;
    for (auto c : cs) line += (line.empty() ? "" : " ") + to_string(c);
    return line + "\n";
  };
  o += "\n[initial]\n" + list(s.initial);
  o += "\n[locomotive]\n" + list(s.locomotive);
  o += "\n[tracked]\n";
  std::string tl;
  size_t width = 0;
  for (auto c : s.tracked) {
    tl += (tl.empty() ? "" : " ") + to_string(c);
    width = std::max(width, to_string(c).size());
  }
  o += tl + "\n\n[expected]\n";
  for (auto c : s.tracked) {
    std::string name = to_string(c);
    name.resize(width, ' ');
    o += name;
    for (int id : s.expected.at(c)) {
      std::string v = std::to_string(id);
      o += " " + std::string(v.size() < 3 ? 3 - v.size() : 0, ' ') + v;
    }
    o += "\n";
  }
  return o;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError(path, 0, "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str(), path);
}

void save_scenario(const Scenario& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ScenarioError(path, 0, "cannot write file");
  out << format_scenario(s);
}

const std::vector<Scenario>& builtin_scenarios() {
  static const std::vector<Scenario> all = [] {
    std::vector<Scenario> v;
    for (std::size_t i = 0; i < embedded::scenario_file_count; ++i)
      v.push_back(parse_scenario(embedded::scenario_files[i].text, embedded::scenario_files[i].name));
    std::sort(v.begin(), v.end(), [](const Scenario& a, const Scenario& b) { return a.name < b.name; });
    return v;
  }();
  return all;
}

const Scenario* find_builtin(const std::string& name) {
  for (auto& s : builtin_scenarios())
    if (s.name == name) return &s;
  return nullptr;
}

namespace {

Scenario builtin(const std::string& name) {
  const Scenario* s = find_builtin(name);
  if (!s) throw std::logic_error("missing built-in scenario " + name);
  return *s;
}

std::string loco(LocoKind k) { return k == LocoKind::Simple ? "simple" : "double"; }

} // namespace

Scenario vertical_track(Direction d, LocoKind k) {
  return builtin(std::string("vertical-") + (d == Direction::Down ? "down-" : "up-") + loco(k));
}

Scenario horizontal_track(NodeColour node, Chirality c, LocoKind k) {
  return builtin(std::string("horizontal-") + (node == NodeColour::Black ? "black-" : "white-") +
                 (c == Chirality::Clockwise ? "cw-" : "ccw-") + loco(k));
}

Scenario fixed_switch(EntrySide side, LocoKind k) {
  return builtin(std::string("fixed-") + (side == EntrySide::Left ? "left-" : "right-") + loco(k));
}

Scenario doubler() { return builtin("doubler"); }

Scenario fork() { return builtin("fork"); }

Scenario selector(LocoKind k) { return builtin("selector-" + loco(k)); }

Scenario controller(NodeColour colour, ControlMode mode) {
  bool black = colour == NodeColour::Black;
  if (mode == ControlMode::Passage) return builtin(black ? "controller-black-passage" : "controller-white-passage");
  return builtin(black ? "controller-signal-black-to-white" : "controller-signal-white-to-black");
}

Scenario controller_sensor(NodeColour colour, ControlMode mode) {
  bool black = colour == NodeColour::Black;
  if (mode == ControlMode::Passage) return builtin(black ? "sensor-black-passage" : "sensor-white-passage");
  if (black) return builtin("sensor-signal-black-to-white");
  throw std::invalid_argument("no fixture for a signal reaching a white sensor");
}

std::vector<std::string> families() {
  return {"vertical", "horizontal", "fixed", "doubler", "fork", "selector", "controller", "sensor"};
}

std::string family(const Scenario& s) {
  for (auto& f : families())
    if (s.name.rfind(f, 0) == 0) return f;
  return s.name;
}

Scenario idle(const Scenario& s) {
  Scenario out = s;
  out.name = s.name + "-idle";
  out.group = out.name;
  for (auto c : s.locomotive) out.initial.erase(c);
  out.locomotive.clear();
  out.start = 0;
  out.steps = 0;
  out.tracked.clear();
  out.expected.clear();
  return out;
}

const Grid& scenario_grid() {
  static const Grid g(kScenarioDepth);
  return g;
}

Engine make_engine(const Scenario& s, const RuleTable& rules) {
  return Engine(scenario_grid(), rules, s.orientations, s.active_cells());
}

std::vector<StepTrace> run(const Scenario& s, const RuleTable& rules, int steps, ScanMode mode,
                           std::vector<Configuration>* frames) {
  Engine e = make_engine(s, rules);
  return e.run(s.initial_configuration(), steps < 0 ? s.steps : steps, s.tracked, s.start, mode, frames);
}

std::string VerifyReport::describe() const {
  std::string o;
  if (error) o += "  error: " + *error + "\n";
  for (auto& m : mismatches)
    o += "  " + to_string(m.cell) + " step " + std::to_string(m.step) + ": expected " + std::to_string(m.expected) +
         ", got " + std::to_string(m.actual) + "\n";
  return o;
}

VerifyReport verify(const Scenario& s, const RuleTable& rules) {
  VerifyReport rep{s.name, {}, std::nullopt};
  std::vector<StepTrace> traces;
  try {
    traces = run(s, rules);
  } catch (const std::exception& e) {
    rep.error = e.what();
    return rep;
  }
  for (int k = 0; k < s.steps; ++k)
    for (auto c : s.tracked) {
      int want = s.expected.at(c)[k];
      int got = traces[k].applied.at(c);
      if (want != got) rep.mismatches.push_back({c, s.start + k, want, got});
    }
  return rep;
}

bool GroupReport::passed() const {
  return std::all_of(members.begin(), members.end(), [](const VerifyReport& r) { return r.passed(); });
}

std::vector<GroupReport> verify_groups(const std::vector<Scenario>& scenarios, const RuleTable& rules) {
  std::map<std::string, GroupReport> groups;
  for (auto& s : scenarios) {
    auto& g = groups[s.group];
    g.group = s.group;
    g.members.push_back(verify(s, rules));
  }
  std::vector<GroupReport> out;
  for (auto& [k, g] : groups) out.push_back(std::move(g));
  return out;
}

} // namespace pentaca
