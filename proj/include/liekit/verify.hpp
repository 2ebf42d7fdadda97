#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace liekit {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SectionReport {
  std::string tag;
  std::string title;
  std::vector<CheckResult> checks;
  double seconds = 0;

  bool passed() const;
};

/// sec6, sec7, char3, nonredu, vanishing, structural, appA, appB.
std::vector<std::string> verify_tags();

/// Throws UnknownName for an unknown tag. Exceptions inside a check are recorded as failures.
SectionReport run_section(std::string_view tag);

/// Runs the sections (all when empty), concurrently when `parallel`; the result follows the order of `tags`.
std::vector<SectionReport> verify_paper(const std::vector<std::string>& tags = {}, bool parallel = true);

}  // namespace liekit
