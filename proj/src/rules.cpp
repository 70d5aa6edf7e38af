#include "pentaca/rules.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "embedded.hpp"

namespace pentaca {

char to_char(State s) { return s == State::B ? 'B' : 'W'; }

State parse_state(char c) {
  if (c == 'W') return State::W;
  if (c == 'B') return State::B;
  throw std::invalid_argument(std::string("bad state letter '") + c + "'");
}

NeighborWord parse_word(std::string_view letters) {
  if (letters.size() != 10) throw std::invalid_argument("neighbour word must have 10 letters: '" + std::string(letters) + "'");
  NeighborWord w;
  for (int i = 0; i < 10; ++i) w[i] = parse_state(letters[i]);
  return w;
}

std::string to_string(const NeighborWord& w) {
  std::string s(10, 'W');
  for (int i = 0; i < 10; ++i) s[i] = to_char(w[i]);
  return s;
}

std::uint16_t pack(const NeighborWord& w) {
  std::uint16_t p = 0;
  for (int i = 0; i < 10; ++i)
    if (w[i] == State::B) p |= std::uint16_t(1u << i);
  return p;
}

Rule parse_rule(std::string_view line, int line_no) {
  std::istringstream is{std::string(line)};
  std::string id, cur, word, next, extra;
  if (!(is >> id >> cur >> word >> next)) throw RuleParseError(line_no, "expected '<id> <state> <10 letters> <state>'");
  if (is >> extra) throw RuleParseError(line_no, "trailing text '" + extra + "'");
  Rule r;
  auto res = std::from_chars(id.data(), id.data() + id.size(), r.id);
  if (res.ec != std::errc() || res.ptr != id.data() + id.size()) throw RuleParseError(line_no, "bad rule id '" + id + "'");
  try {
    if (cur.size() != 1 || next.size() != 1) throw std::invalid_argument("state must be a single letter W or B");
    r.current = parse_state(cur[0]);
    r.word = parse_word(word);
    r.next = parse_state(next[0]);
  } catch (const std::invalid_argument& e) {
    throw RuleParseError(line_no, e.what());
  }
  return r;
}

std::string format_rule(const Rule& r) {
  return std::to_string(r.id) + " " + to_char(r.current) + " " + to_string(r.word) + " " + to_char(r.next);
}

RuleTable::RuleTable(std::vector<Rule> rules) : rules_(std::move(rules)) {
  for (size_t i = 0; i < rules_.size(); ++i) {
    auto k = key(rules_[i].current, pack(rules_[i].word));
    if (index_[k] < 0) index_[k] = static_cast<int>(i);
  }
}

const Rule* RuleTable::lookup(State current, const NeighborWord& w) const { return lookup(current, pack(w)); }

const Rule* RuleTable::find(int id) const {
  for (auto& r : rules_)
    if (r.id == id) return &r;
  return nullptr;
}

RuleTable parse_rule_table(std::string_view text) {
  std::vector<Rule> rules;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    rules.push_back(parse_rule(line, line_no));
  }
  return RuleTable(std::move(rules));
}

RuleTable load_rule_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open rule file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_rule_table(ss.str());
}

std::string_view builtin_rules_text() { return embedded::rules_text; }

const RuleTable& builtin_rules() {
  static const RuleTable t = parse_rule_table(embedded::rules_text);
  return t;
}

std::vector<DeterminismConflict> check_determinism(const RuleTable& t) {
  std::map<std::pair<State, std::uint16_t>, std::vector<const Rule*>> groups;
  for (auto& r : t.rules()) groups[{r.current, pack(r.word)}].push_back(&r);
  std::vector<DeterminismConflict> out;
  for (auto& [k, rs] : groups)
    for (size_t i = 0; i < rs.size(); ++i)
      for (size_t j = i + 1; j < rs.size(); ++j)
        if (rs[i]->next != rs[j]->next) out.push_back({rs[i]->id, rs[j]->id});
  return out;
}

NeighborWord rotate_word(const NeighborWord& w, int shift) {
  shift = ((shift % 5) + 5) % 5;
  NeighborWord out;
  for (int i = 0; i < 5; ++i) out[(i + shift) % 5] = w[i];
  for (int j = 0; j < 5; ++j) out[5 + (j + shift) % 5] = w[5 + j];
  return out;
}

namespace {

std::uint16_t canonical_rotation(const NeighborWord& w) {
  std::uint16_t best = 0xffff;
  for (int s = 0; s < 5; ++s) best = std::min(best, pack(rotate_word(w, s)));
  return best;
}

int shift_between(const NeighborWord& a, const NeighborWord& b) {
  for (int s = 0; s < 5; ++s)
    if (rotate_word(a, s) == b) return s;
  return -1;
}

} // namespace

std::vector<Orbit> rotation_orbits(const RuleTable& t) {
  std::map<std::pair<State, std::uint16_t>, std::vector<const Rule*>> groups;
  for (auto& r : t.rules()) groups[{r.current, canonical_rotation(r.word)}].push_back(&r);
  std::vector<Orbit> out;
  for (auto& [k, rs] : groups) {
    std::sort(rs.begin(), rs.end(), [](auto* a, auto* b) { return a->id < b->id; });
    Orbit o{k.first, {}};
    for (auto* r : rs) o.members.push_back({r->id, shift_between(rs.front()->word, r->word)});
    out.push_back(std::move(o));
  }
  std::sort(out.begin(), out.end(), [](const Orbit& a, const Orbit& b) { return a.members.front().id < b.members.front().id; });
  return out;
}

std::vector<RotationConflict> find_rotation_conflicts(const RuleTable& t) {
  std::map<std::pair<State, std::uint16_t>, std::vector<const Rule*>> groups;
  for (auto& r : t.rules()) groups[{r.current, canonical_rotation(r.word)}].push_back(&r);
  std::vector<RotationConflict> out;
  for (auto& [k, m] : groups) {
    std::sort(m.begin(), m.end(), [](auto* a, auto* b) { return a->id < b->id; });
    for (size_t i = 0; i < m.size(); ++i)
      for (size_t j = i + 1; j < m.size(); ++j) {
        const Rule* a = m[i];
        const Rule* b = m[j];
        if (a->id == b->id || a->next == b->next) continue;
        int s = -1;
        for (int k = 1; k < 5 && s < 0; ++k)
          if (rotate_word(a->word, k) == b->word) s = k;
        if (s > 0) out.push_back({a->id, b->id, s});
      }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string conflicts_tsv(const std::vector<RotationConflict>& cs) {
  std::string s = "rule_a\trule_b\tshift\n";
  for (auto& c : cs) s += std::to_string(c.rule_a) + "\t" + std::to_string(c.rule_b) + "\t" + std::to_string(c.shift) + "\n";
  return s;
}

std::string orbits_tsv(const std::vector<Orbit>& orbits) {
  std::string s = "orbit\tstate\trule\tshift\n";
  for (auto& o : orbits)
    for (auto& m : o.members)
      s += std::to_string(o.members.front().id) + "\t" + to_char(o.current) + "\t" + std::to_string(m.id) + "\t" +
           std::to_string(m.shift) + "\n";
  return s;
}

} // namespace pentaca
