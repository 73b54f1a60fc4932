#include "nmt/common.hpp"

#include <cstring>

namespace nmt {

namespace {

LogLevel initial_level() {
  const char* env = std::getenv("DIMNMT_LOG");
  if (!env) return LogLevel::kInfo;
  if (std::strcmp(env, "debug") == 0) return LogLevel::kDebug;
  if (std::strcmp(env, "info") == 0) return LogLevel::kInfo;
  if (std::strcmp(env, "warn") == 0) return LogLevel::kWarn;
  if (std::strcmp(env, "error") == 0) return LogLevel::kError;
  return LogLevel::kInfo;
}

LogLevel g_level = initial_level();

const char* level_tag(LogLevel level) {
  switch (level) {
    case LogLevel::kDebug: return "D";
    case LogLevel::kInfo: return "I";
    case LogLevel::kWarn: return "W";
    case LogLevel::kError: return "E";
  }
  return "?";
}

}  // namespace

LogLevel log_level() { return g_level; }

void set_log_level(LogLevel level) { g_level = level; }

namespace detail {

void log_line(LogLevel level, const std::string& msg) {
  std::cerr << "[" << level_tag(level) << "] " << msg << "\n";
}

}  // namespace detail

}  // namespace nmt
