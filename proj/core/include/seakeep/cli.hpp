#pragma once

namespace seakeep {

/// Batch front-end. Exit codes: 0 success, 1 usage error, 2 data/format
/// error, 3 numerical failure.
int run_cli(int argc, const char* const* argv);

}  // namespace seakeep
