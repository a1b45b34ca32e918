#pragma once

#include <string>
#include <vector>

namespace ufact {

/// Result of a desk-scale verification routine: an overall verdict plus
/// human-readable evidence lines.
struct CheckReport {
  bool passed = true;
  std::vector<std::string> lines;

  void note(const std::string& line) { lines.push_back(line); }
  void fail(const std::string& line) {
    passed = false;
    lines.push_back("FAIL: " + line);
  }
  void require(bool ok, const std::string& line) {
    if (ok)
      lines.push_back(line);
    else
      fail(line);
  }
};

}  // namespace ufact
