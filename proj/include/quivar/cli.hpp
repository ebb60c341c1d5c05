#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quivar {

/// Command line driver. Verbs: roots, decompose, classify, slice, bordism,
/// verify. Emits canonical JSON on `out`; human readable summaries go to
/// `err` under --verbose. Returns 0 on success, 1 on usage errors, 2 on
/// domain errors (reported as {"error": ...}).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace quivar
