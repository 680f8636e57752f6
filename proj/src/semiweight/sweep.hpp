#pragma once

#include <string>

#include "semiweight/explorer.hpp"

namespace semiweight {

struct SweepOutput {
  std::string csv;
  std::string notes;  // one line per out-of-domain cell, for diagnostics
};

// Grid sweep over a JSON spec:
//   {"N": [ints], "gamma": [ints], "g": {"lo": int, "hi": int},
//    "kinds": [strings], "n_max": int, "search_max": bool}
// n_max defaults to 5 and search_max to false. Out-of-domain cells produce a
// row with empty value fields plus a note; they are never skipped.
SweepOutput run_sweep(const std::string& spec_json,
                      const ExploreOptions& options = {});

}  // namespace semiweight
