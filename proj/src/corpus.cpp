#include "fibercone/corpus.hpp"

#include <stdexcept>

namespace fibercone {

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = {
      {"E1", "m-adic filtration of Q[x,y]", "ring Q[x,y];\nfiltration adic;\nI1 = x, y;\n"},
      {"E2", "(x^2,y^2)-adic filtration of Q[x,y]", "ring Q[x,y];\nfiltration adic;\nI1 = x^2, y^2;\n"},
      {"E3", "m^2-adic filtration of Q[x,y]", "ring Q[x,y];\nfiltration adic;\nI1 = x^2, x*y, y^2;\n"},
      {"E4", "(x^4,x^3y,xy^3,y^4)-adic filtration of Q[x,y]",
       "ring Q[x,y];\nfiltration adic;\nI1 = x^4, x^3*y, x*y^3, y^4;\n"},
      {"E5", "m-adic filtration of the cusp Q[x,y]/(y^2-x^3)", "ring Q[x,y]/(y^2 - x^3);\nfiltration adic;\nI1 = x, y;\n"},
      {"E6", "(x,y^2)-adic filtration of Q[x,y]", "ring Q[x,y];\nfiltration adic;\nI1 = x, y^2;\n"},
      {"E7", "(x^3,x^2y,y^3)-adic filtration of Q[x,y]", "ring Q[x,y];\nfiltration adic;\nI1 = x^3, x^2*y, y^3;\n"},
      {"E8", "table filtration I1 = (x^2,y^2), I2 = (x^4,x^2y^2,y^4,x^3y^3) of Q[x,y]",
       "ring Q[x,y];\nfiltration table;\nI1 = x^2, y^2;\nI2 = x^4, x^2*y^2, y^4, x^3*y^3;\n"},
      {"E9", "m-adic filtration of Q[x,y,z]", "ring Q[x,y,z];\nfiltration adic;\nI1 = x, y, z;\n"},
  };
  return entries;
}

const CorpusEntry& corpus_entry(std::string_view name) {
  for (const auto& e : corpus())
    if (e.name == name) return e;
  throw std::out_of_range("no corpus entry named " + std::string(name));
}

}  // namespace fibercone
