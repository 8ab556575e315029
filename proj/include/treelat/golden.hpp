#pragma once

#include <string>
#include <vector>

namespace treelat {

struct criterion_result {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // counts / first counterexample; deterministic
};

// Criteria 1..8 computed fresh on every call (shared lattice builders are
// memoized; everything else is recomputed).
std::vector<criterion_result> run_criteria();

// text block with one line per criterion 1..8
std::string render_criteria(const std::vector<criterion_result>& results);

// full report: criteria 1..8 plus criterion 9 (two consecutive renders of
// the suite must agree byte for byte)
std::string golden_report(bool* all_pass = nullptr);

}  // namespace treelat
