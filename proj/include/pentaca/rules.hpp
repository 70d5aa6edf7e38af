#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pentaca {

enum class State : std::uint8_t { W = 0, B = 1 };

char to_char(State s);
State parse_state(char c);

// Neighbour states at positions 1..10 (index 0..9).
using NeighborWord = std::array<State, 10>;

NeighborWord parse_word(std::string_view letters);
std::string to_string(const NeighborWord& w);
std::uint16_t pack(const NeighborWord& w);

struct Rule {
  int id = 0;
  State current = State::W;
  NeighborWord word{};
  State next = State::W;
  bool operator==(const Rule&) const = default;
};

class RuleParseError : public std::runtime_error {
 public:
  RuleParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// "<id> <W|B> <10 letters> <W|B>"
Rule parse_rule(std::string_view line, int line_no = 1);
std::string format_rule(const Rule& r);

class RuleTable {
 public:
  RuleTable() = default;
  explicit RuleTable(std::vector<Rule> rules);

  const std::vector<Rule>& rules() const { return rules_; }
  size_t size() const { return rules_.size(); }
  // first rule with this (current, word), if any
  const Rule* lookup(State current, const NeighborWord& w) const;
  const Rule* lookup(State current, std::uint16_t packed) const {
    int i = index_[key(current, packed)];
    return i < 0 ? nullptr : &rules_[i];
  }
  const Rule* find(int id) const;

 private:
  static size_t key(State s, std::uint16_t packed) { return (size_t(s) << 10) | packed; }
  std::vector<Rule> rules_;
  std::vector<int> index_ = std::vector<int>(2048, -1);
};

// '#' starts a comment; blank lines are skipped.
RuleTable parse_rule_table(std::string_view text);
RuleTable load_rule_table(const std::string& path);
// The table shipped with the library.
const RuleTable& builtin_rules();
std::string_view builtin_rules_text();

struct DeterminismConflict {
  int rule_a;
  int rule_b;
};

std::vector<DeterminismConflict> check_determinism(const RuleTable& t);

// Position i (1..5) moves to ((i-1+shift) mod 5)+1, vertices 6..10 likewise.
NeighborWord rotate_word(const NeighborWord& w, int shift);

struct OrbitMember {
  int id;
  int shift; // relative to the orbit's lowest id
};

struct Orbit {
  State current;
  std::vector<OrbitMember> members; // sorted by id, first has shift 0
};

std::vector<Orbit> rotation_orbits(const RuleTable& t);

struct RotationConflict {
  int rule_a;
  int rule_b;
  int shift; // rotate_word(word_a, shift) == word_b
  auto operator<=>(const RotationConflict&) const = default;
};

std::vector<RotationConflict> find_rotation_conflicts(const RuleTable& t);

std::string conflicts_tsv(const std::vector<RotationConflict>& cs);
std::string orbits_tsv(const std::vector<Orbit>& orbits);

} // namespace pentaca
