#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "tetravex/rng.hpp"

namespace tvx {

/// Positive 1-in-3-SAT: each clause lists three variable occurrences
/// (1-based, repeats allowed) and exactly one occurrence must be true.
struct OneInThreeInstance {
  int n = 0;
  std::vector<std::array<int, 3>> clauses;

  [[nodiscard]] int m() const noexcept { return static_cast<int>(clauses.size()); }
  friend bool operator==(const OneInThreeInstance&, const OneInThreeInstance&) = default;
};

/// Throws InvalidArgument unless n >= 1, m >= 1 and every index is in 1..n.
void check(const OneInThreeInstance& formula);

/// values[i-1] is variable i.
struct Assignment {
  std::vector<bool> values;

  [[nodiscard]] bool operator[](int variable) const { return values[static_cast<std::size_t>(variable - 1)]; }
  friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// "100" means x1 true, x2 and x3 false.
std::string to_string(const Assignment& a);
/// Throws InvalidArgument on characters other than '0'/'1'.
Assignment parse_assignment(std::string_view bits);

/// Exactly one true occurrence per clause; (x,x,x) counts x three times.
bool satisfies(const OneInThreeInstance& formula, const Assignment& a);

/// `p 1in3 <n> <m>` then m lines `<a> <b> <c>`. Blank lines and lines
/// starting with 'c' are ignored.
OneInThreeInstance parse_1in3(std::string_view text);
std::string serialize_1in3(const OneInThreeInstance& formula);

inline constexpr int kOracleMaxVariables = 20;

/// Every satisfying assignment, by enumeration of all 2^n candidates, in
/// ascending order of the bitmask with variable i at bit i-1.
/// Throws Refusal when n > kOracleMaxVariables.
std::vector<Assignment> sat_oracle(const OneInThreeInstance& formula);

/// m clauses with variables drawn uniformly from 1..n.
OneInThreeInstance random_formula(int n, int m, SplitMix64& rng);

}  // namespace tvx
