#pragma once

#include "fibercone/filtration.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fibercone {

// Statements are `key = value;` or `key value;`, `#` starts a comment.
// Keys: ring, filtration, I1..IN, J, bound, seed, order.
struct ProblemSpec {
  CoefField field = CoefField::rationals();
  std::vector<std::string> variables;
  std::vector<std::string> defining;
  FiltrationKind kind = FiltrationKind::Adic;
  std::vector<std::string> terms;  // I1..IN as generator lists
  std::optional<std::string> reduction;
  std::optional<int> bound;
  std::uint64_t seed = 1;
  std::string order = "grevlex";
};

// Throws ParseError with the line and column of the offending text.
ProblemSpec parse_problem(std::string_view text);
std::string to_problem_text(const ProblemSpec& spec);

struct Problem {
  RingPtr ring;
  Filtration filtration;
  std::optional<std::vector<Polynomial>> reduction;
};
// Throws FiltrationError and friends for semantically invalid input.
Problem build_problem(const ProblemSpec& spec);
RingPtr build_ring(const ProblemSpec& spec);

}  // namespace fibercone
