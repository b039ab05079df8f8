#pragma once

namespace crosskit {

// Entry point shared by the crosskit binary and the CLI tests.
// Returns 0 on success, 1 when a requested component fails, 2 on usage errors.
int cli_main(int argc, const char* const* argv);

}  // namespace crosskit
