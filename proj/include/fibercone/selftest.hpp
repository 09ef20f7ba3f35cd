#pragma once

#include "fibercone/problem.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace fibercone {

// One engine-vs-oracle comparison.  `skipped` when the oracle cannot decide
// (non-monomial terms, prime field, or a quotient too large for dense algebra).
struct InvariantResult {
  std::string name;
  bool pass = true;
  bool skipped = false;
  std::string engine;
  std::string oracle;
};

struct SelftestCase {
  std::string name;
  std::string problem;
  std::vector<InvariantResult> results;
  std::string error;  // engine or oracle threw
  std::optional<std::string> minimized;  // smaller problem failing the same way
  bool pass() const;
  std::vector<std::string> failing() const;
};

struct SelftestOptions {
  int trials = 20;
  std::uint64_t seed = 1;
  int bound = 10;
  bool corpus = true;
  // Perturbs one engine value so the comparison machinery can be seen to fire.
  bool inject_fault = false;
  bool minimize = true;
};

struct SelftestReport {
  std::vector<SelftestCase> cases;
  int passed = 0;
  int failed = 0;
};

// Random m-primary monomial filtration (adic or a two-term table) in 1..3 variables.
ProblemSpec random_monomial_problem(std::mt19937_64& rng);

// Compares lengths, mu, reduction certificates, the mod-J tables, socles,
// A/I_1, and the CM and Gorenstein verdicts in the range the oracle can reach.
// `bound` applies when the problem sets none.
SelftestCase compare_with_oracle(const std::string& name, const ProblemSpec& spec, int bound,
                                 bool inject_fault = false);

SelftestReport run_selftest(const SelftestOptions& opts);
std::string to_text(const SelftestReport& r);

// Random monomial ideal (not necessarily m-primary) compared on length, mu
// and membership of random monomials.
SelftestCase compare_monomial_ideal(std::mt19937_64& rng, int index);

}  // namespace fibercone
