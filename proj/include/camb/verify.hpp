#pragma once

#include <string>
#include <vector>

#include "camb/fan.hpp"
#include "camb/sortable.hpp"

namespace camb {

struct Report {
  std::string suite;
  std::vector<FanViolation> violations;
  long checks = 0;
  bool pass() const { return violations.empty(); }
};

/// Property suites mirroring the library's invariants, run against an
/// arbitrary group at the given length cap. Violations are report content,
/// not exceptions.
Report verify_forms(const CoxGroup& g, const CoxWord& c, int max_length);
Report verify_sortable(const CoxGroup& g, const CoxWord& c, int max_length);
Report verify_lattice(const CoxGroup& g, const CoxWord& c, int max_length);
Report verify_fan(const CoxGroup& g, const CoxWord& c, int max_length, int margin = 2);

std::vector<Report> verify_suites(const CoxGroup& g, const CoxWord& c, const std::string& suite,
                                  int max_length);

}  // namespace camb
