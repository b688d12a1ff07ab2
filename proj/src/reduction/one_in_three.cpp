#include "tetravex/one_in_three.hpp"

#include "tetravex/error.hpp"
#include "tetravex/text_lines.hpp"

namespace tvx {

void check(const OneInThreeInstance& formula) {
  if (formula.n < 1) throw InvalidArgument("1in3 instance needs at least one variable");
  if (formula.clauses.empty()) throw InvalidArgument("1in3 instance needs at least one clause");
  for (const auto& clause : formula.clauses) {
    for (int v : clause) {
      if (v < 1 || v > formula.n) {
        throw InvalidArgument("variable " + std::to_string(v) + " outside 1.." +
                              std::to_string(formula.n));
      }
    }
  }
}

std::string to_string(const Assignment& a) {
  std::string out;
  out.reserve(a.values.size());
  for (bool b : a.values) out += b ? '1' : '0';
  return out;
}

Assignment parse_assignment(std::string_view bits) {
  Assignment a;
  for (char ch : bits) {
    if (ch != '0' && ch != '1') throw InvalidArgument("assignment must be a string of 0/1");
    a.values.push_back(ch == '1');
  }
  return a;
}

bool satisfies(const OneInThreeInstance& formula, const Assignment& a) {
  if (a.values.size() != static_cast<std::size_t>(formula.n)) return false;
  for (const auto& clause : formula.clauses) {
    int trues = 0;
    for (int v : clause) trues += a[v] ? 1 : 0;
    if (trues != 1) return false;
  }
  return true;
}

OneInThreeInstance parse_1in3(std::string_view text) {
  LineReader reader(text, /*skip_blank_and_comments=*/true);
  auto header = reader.next();
  if (!header) throw ParseError(1, "empty input, expected 'p 1in3 <n> <m>'");
  if (header->tokens.size() != 4 || header->tokens[0] != "p" || header->tokens[1] != "1in3") {
    throw ParseError(header->number, "expected header 'p 1in3 <n> <m>'");
  }
  OneInThreeInstance formula;
  formula.n = parse_positive(header->tokens[2], header->number, "variable count");
  const int m = parse_positive(header->tokens[3], header->number, "clause count");

  for (int p = 0; p < m; ++p) {
    auto line = reader.next();
    if (!line) {
      throw ParseError(0, "header declares " + std::to_string(m) + " clauses but only " +
                              std::to_string(p) + " present");
    }
    if (line->tokens.size() != 3) {
      throw ParseError(line->number, "clause must have exactly 3 variables, got " +
                                         std::to_string(line->tokens.size()));
    }
    std::array<int, 3> clause{};
    for (std::size_t k = 0; k < 3; ++k) {
      const int v = parse_int(line->tokens[k], line->number, "variable index");
      if (v < 0) {
        throw ParseError(line->number, "negative literal " + std::to_string(v) +
                                           " (only positive clauses are supported)");
      }
      if (v == 0 || v > formula.n) {
        throw ParseError(line->number, "variable index " + std::to_string(v) + " outside 1.." +
                                           std::to_string(formula.n));
      }
      clause[k] = v;
    }
    formula.clauses.push_back(clause);
  }
  reader.expect_end("more clauses than the header's " + std::to_string(m));
  return formula;
}

std::string serialize_1in3(const OneInThreeInstance& formula) {
  std::string out = "p 1in3 " + std::to_string(formula.n) + ' ' + std::to_string(formula.m()) + '\n';
  for (const auto& c : formula.clauses) {
    out += std::to_string(c[0]) + ' ' + std::to_string(c[1]) + ' ' + std::to_string(c[2]) + '\n';
  }
  return out;
}

std::vector<Assignment> sat_oracle(const OneInThreeInstance& formula) {
  check(formula);
  if (formula.n > kOracleMaxVariables) {
    throw Refusal("sat_oracle: " + std::to_string(formula.n) + " variables exceeds the limit of " +
                  std::to_string(kOracleMaxVariables));
  }
  std::vector<Assignment> out;
  Assignment a;
  a.values.resize(static_cast<std::size_t>(formula.n));
  const std::uint32_t total = 1u << formula.n;
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    for (int i = 0; i < formula.n; ++i) a.values[static_cast<std::size_t>(i)] = (mask >> i) & 1u;
    if (satisfies(formula, a)) out.push_back(a);
  }
  return out;
}

OneInThreeInstance random_formula(int n, int m, SplitMix64& rng) {
  OneInThreeInstance formula;
  formula.n = n;
  for (int p = 0; p < m; ++p) {
    std::array<int, 3> clause{};
    for (int& v : clause) v = 1 + static_cast<int>(rng.uniform(static_cast<std::uint64_t>(n)));
    formula.clauses.push_back(clause);
  }
  check(formula);
  return formula;
}

}  // namespace tvx
