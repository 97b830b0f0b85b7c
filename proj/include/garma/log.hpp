#pragma once

#include <string>

namespace garma::log {

// Verbosity from the GARMA_LOG environment variable: "quiet", "warn"
// (default), "info" or "debug". Messages go to stderr.
enum class Level { Quiet = 0, Warn = 1, Info = 2, Debug = 3 };

Level level();

void warn(const std::string& msg);
void info(const std::string& msg);
void debug(const std::string& msg);

} // namespace garma::log
