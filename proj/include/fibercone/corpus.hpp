#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace fibercone {

struct CorpusEntry {
  std::string name;
  std::string summary;
  std::string text;  // problem file
};

const std::vector<CorpusEntry>& corpus();
const CorpusEntry& corpus_entry(std::string_view name);  // throws std::out_of_range

}  // namespace fibercone
