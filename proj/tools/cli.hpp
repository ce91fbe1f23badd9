#pragma once

namespace gsub::cli {

/// Exit codes: 0 ok, 1 mismatch / oracle disagreement, 2 usage, 3 invalid input.
int run(int argc, char** argv);

}  // namespace gsub::cli
