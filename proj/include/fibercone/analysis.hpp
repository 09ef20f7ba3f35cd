#pragma once

#include "fibercone/criteria.hpp"
#include "fibercone/problem.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fibercone {

struct AnalysisOptions {
  std::optional<int> bound;  // overrides the problem file
  std::optional<std::uint64_t> seed;
  std::vector<int> veronese_factors{2, 3};
  bool diagnostics = true;
};

struct StageFailure {
  std::string stage;
  std::string error;
};

struct NamedCheck {
  std::string name;
  bool applies = false;
  bool pass = true;
  int bound = 0;
  std::string detail;
};

enum class AnalysisStatus { Analyzed, InputError, Inconsistent };

struct AnalysisReport {
  AnalysisStatus status = AnalysisStatus::Analyzed;
  // echo
  std::string ring;
  std::string filtration;
  std::string problem_text;
  int bound = 0;
  std::uint64_t seed = 0;
  bool explicit_reduction = false;

  int dim = 0;
  bool hilbert = false;
  std::optional<ReductionData> reduction;
  std::vector<std::string> reduction_text;

  std::optional<SeriesTable> fiber, graded;
  std::optional<ModJTables> mod_j;
  std::optional<SocleTable> socle_G, socle_F, socle_F_reduction;
  std::optional<SeriesTable> canonical, canonical_fixed;
  std::optional<ColonPowerSeries> colon_powers;

  std::optional<CmCheck> f_cm, g_cm;
  std::optional<GorensteinVerdict> g_gor, f_criterion, f_oracle;
  std::optional<BaseQuotient> base;
  std::optional<AInvariants> a_inv;
  std::optional<Regularity> reg;
  std::optional<Multiplicities> e0;
  std::optional<E0Comparison> e0_cmp;
  std::optional<RegOmegaCheck> reg_omega;
  std::vector<IdentityCheck> identities;
  std::vector<VeroneseCheck> veronese;

  std::vector<NamedCheck> cross_checks;
  std::vector<Diagnostic> diagnostics;
  std::vector<std::string> warnings;
  std::vector<StageFailure> failures;
};

AnalysisReport analyze(const ProblemSpec& spec, const AnalysisOptions& opts = {});
AnalysisReport analyze_text(std::string_view text, const AnalysisOptions& opts = {});

// 0 analyzed, 1 input error, 2 internal inconsistency.
int exit_code(const AnalysisReport& r);
std::string to_json(const AnalysisReport& r);
std::string to_text(const AnalysisReport& r);

}  // namespace fibercone
