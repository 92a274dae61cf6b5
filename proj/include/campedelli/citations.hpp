#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace campedelli {

/// A cited fact: a stable key, a short label for where it lives in the source
/// argument, and a statement of the fact.
struct Citation {
  std::string key;
  std::string location;
  std::string statement;
};

class UnknownCitation : public std::runtime_error {
 public:
  explicit UnknownCitation(const std::string& key) : std::runtime_error("unknown citation key '" + key + "'") {}
};

const std::vector<Citation>& citation_table();
const Citation& find_citation(const std::string& key);
bool has_citation(const std::string& key);

}  // namespace campedelli
