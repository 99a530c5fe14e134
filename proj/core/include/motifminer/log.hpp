#pragma once

#include <sstream>
#include <string>

namespace motifminer {

enum class LogLevel { Error = 0, Warn = 1, Info = 2, Debug = 3 };

/// Current verbosity. Initialized from the MOTIFMINER_LOG environment variable
/// (error | warn | info | debug); defaults to warn.
LogLevel log_level();
void set_log_level(LogLevel level);
void log_message(LogLevel level, const std::string& message);

namespace detail {
template <typename... Args>
std::string concat(const Args&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}
}  // namespace detail

template <typename... Args>
void log(LogLevel level, const Args&... args) {
  if (static_cast<int>(level) <= static_cast<int>(log_level()))
    log_message(level, detail::concat(args...));
}

}  // namespace motifminer
