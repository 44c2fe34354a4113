#pragma once

#include <string>
#include <vector>

#include "novikov/document.hpp"

namespace novikov {

struct CommandOptions {
  std::uint64_t tau_chain_cap = 1'000'000;
  int jobs = 1;
  // Extra query points appended after the document's own (the --xi flag).
  std::vector<Character> extra_points;
};

// Runs one batch command against a parsed document and returns the report
// text.  Commands: vanish, check, betti, euler, positive (report lines),
// and fox / torus (the constructed complex as a canonical document).
// Payloads other than `complex` are converted through their front-end
// first, so every command accepts every payload it can make sense of.
std::string execute_command(const std::string& command,
                            const ProblemDocument& doc,
                            const CommandOptions& options = {});

}  // namespace novikov
