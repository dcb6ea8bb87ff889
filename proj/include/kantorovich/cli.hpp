#pragma once

#include <ostream>

namespace kantorovich {

/// Entry point of the `kantorovich` command. Returns 0 on success, 1 when a
/// checked law or property fails, 2 on usage, parse or validation errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kantorovich
