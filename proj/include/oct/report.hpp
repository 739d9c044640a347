#pragma once

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "solver.hpp"

namespace oct {

/// Result of one solver run, ready for line-oriented emission. The default
/// rendering is one status line plus, on YES, the witness on one line;
/// counters ride behind "c" lines so parsers that skip comments still work.
/// Everything except the elapsed-time line is deterministic for a fixed
/// input in sequential mode.
struct RunReport {
  bool yes = false;
  std::vector<std::string> witness;  // external labels; only meaningful when yes
  int k = 0;
  double elapsed_ms = 0.0;
  SolveStats stats;

  std::string render(bool include_stats) const {
    std::ostringstream os;
    os << (yes ? "YES" : "NO") << '\n';
    if (yes) {
      for (std::size_t i = 0; i < witness.size(); ++i) {
        if (i) os << ' ';
        os << witness[i];
      }
      os << '\n';
    }
    if (include_stats) {
      os << "c k " << k << '\n';
      os << "c witness_size " << (yes ? witness.size() : 0) << '\n';
      os << "c compress_calls " << stats.compress_calls << '\n';
      os << "c subsets_tried " << stats.totals.subsets_tried << '\n';
      os << "c assignments_enumerated " << stats.totals.assignments_enumerated << '\n';
      os << "c assignments_surviving_filter " << stats.totals.assignments_surviving_filter << '\n';
      os << "c matching_calls " << stats.totals.matching_calls << '\n';
      os << "c max_assignments_per_compress " << stats.max_assignments_per_compress << '\n';
      os << "c elapsed_ms " << std::fixed << std::setprecision(3) << elapsed_ms << '\n';
    }
    return os.str();
  }
};

}  // namespace oct
