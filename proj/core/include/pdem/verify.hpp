#ifndef PDEM_VERIFY_HPP
#define PDEM_VERIFY_HPP

#include <string>
#include <vector>

#include "pdem/runconfig.hpp"

namespace pdem::verify {

struct CheckRow {
  std::string name;
  double measured = 0.0;
  double bound = 0.0;
  bool pass = false;
  bool informational = false;  // reported, never a failure
};

// suite in {classical, algebra, coherent, stats, all}.
std::vector<CheckRow> run_suite(const std::string& suite,
                                const cli::RunConfig& cfg);

// True iff every non-informational row passed.
bool all_passed(const std::vector<CheckRow>& rows);

}  // namespace pdem::verify

#endif
