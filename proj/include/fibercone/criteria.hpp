#pragma once

#include "fibercone/blowup.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fibercone {

enum class Tri { Yes, No, HypothesesFailed };
std::string to_string(Tri t);

struct CriterionRow {
  int n = 0;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool pass = false;
};

struct CmCheck {
  bool cm = false;
  int bound = 0;
  std::vector<CriterionRow> rows;
  // G only: lambda(I_n/(I_{n+1} + J I_{n-1})) against the same alternating sums.
  std::vector<CriterionRow> module_rows;
  std::optional<CriterionRow> first_failure() const;
};

// rows: lambda(I_n/(m I_n + J I_{n-1})) against sum (-1)^i C(d,i) mu-hat(I_{n-i}), 0 <= n <= B.
CmCheck fiber_cm_check(const ReducedFiltration& rf, const ModJTables& t, const SeriesTable& fiber);
// rows: G(F/J)_n against sum (-1)^i C(d,i) lambda-hat(I_{n-i}/I_{n-i+1}), 0 <= n < B.
CmCheck g_cm_check(const ReducedFiltration& rf, const ModJTables& t, const SeriesTable& graded);

struct SocleTable {
  SeriesTable table;
  int colon_depth = 0;             // conditions for 1 <= j <= colon_depth
  std::vector<int> evaluated_j;    // the rest follow from j = 1 since I_j = I_1 I_{j-1}
};
SocleTable graded_socle_G_modJ(const ReducedFiltration& rf);
SocleTable graded_socle_F_modJ(const ReducedFiltration& rf);
// Socle of the Artinian reduction F/J*F; agrees with the previous table when G is Cohen-Macaulay.
SocleTable graded_socle_F_reduction(const ReducedFiltration& rf);

struct GorensteinVerdict {
  std::string subject;
  bool cm = false;
  Tri gorenstein = Tri::HypothesesFailed;
  std::vector<CriterionRow> rows;         // decisive rows
  std::vector<CriterionRow> sanity_rows;  // criterion rows beyond r
  std::optional<std::int64_t> socle_total;
  std::vector<std::string> notes;
  int bound = 0;
};

GorensteinVerdict g_gorenstein_check(const CmCheck& g_cm, const SocleTable& socle_G);

struct BaseQuotient {
  bool gorenstein = false;
  std::int64_t length = 0;  // lambda((I_1:m)/I_1)
};
BaseQuotient base_quotient_gorenstein(const Filtration& f);

GorensteinVerdict fiber_gorenstein_criterion(const ReducedFiltration& rf, const GorensteinVerdict& g_gor,
                                             const CmCheck& f_cm, const SeriesTable& fiber,
                                             const BaseQuotient& base);
GorensteinVerdict fiber_gorenstein_oracle(const CmCheck& f_cm, const SocleTable& socle_F_reduction);

struct E0Comparison {
  bool leq = false;
  bool equal = false;
  bool i1_is_m = false;
  bool reliable = false;          // both CM certificates
  bool equality_clause = false;   // additionally G Gorenstein
  bool equality_holds = true;     // equal == i1_is_m, when the clause applies
};
E0Comparison e0_comparison(const Filtration& f, const Multiplicities& e, Tri g_gor);

struct IdentityCheck {
  std::string name;
  bool pass = true;
  int bound = 0;
  std::vector<CriterionRow> rows;
  std::vector<std::string> failures;
};
IdentityCheck mu_alternating_identity_check(const ReducedFiltration& rf, int k, const SeriesTable& fiber, bool cm_F,
                                            bool cm_G);
// d = 1 directly; d > 1 after passing to A/(x_1..x_{d-1}), which needs both CM certificates.
IdentityCheck length_identity_check(const ReducedFiltration& rf, bool cm_F, bool cm_G);

struct RegOmegaCheck {
  bool pass = false;
  int value = 0;
  bool support_equal = false;
  bool reliable = false;
};
RegOmegaCheck reg_omega_check(const ReducedFiltration& rf, const ModJTables& t, bool cm_F, bool cm_G);

// dim of omega_F in degree n from the h-vector F(F/J) of a CM fiber cone.
std::int64_t omega_dimension(const SeriesTable& h, int d, int n);

struct CrossCheck {
  bool applies = false;
  bool pass = true;
  int bound = 0;
  std::vector<int> mismatches;
};
// canonical socle series (offset r-d) against omega_F dimensions.
CrossCheck duality_cross_check(const SeriesTable& canonical, const ModJTables& t, int d, Tri g_gor, bool cm_F);

}  // namespace fibercone
