#pragma once

#include "relhom/io.hpp"

namespace relhom {

inline constexpr const char* kEngineVersion = "0.1.0";

// exit codes: 0 expected match, 1 verdict mismatch, 2 input error,
// 3 hypothesis or budget error
int cli_main(int argc, const char* const* argv);

}  // namespace relhom
