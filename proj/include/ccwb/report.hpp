#pragma once

#include <string>
#include <vector>

namespace ccwb {

struct Report {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

}  // namespace ccwb
