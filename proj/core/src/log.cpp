#include "mols/log.hpp"

#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace mols::log {

static Level parse_level() noexcept {
  const char* v = std::getenv("MOLS_LOG");
  if (!v || !*v) return Level::off;
  if (std::strcmp(v, "debug") == 0 || std::strcmp(v, "3") == 0) return Level::debug;
  if (std::strcmp(v, "info") == 0 || std::strcmp(v, "2") == 0) return Level::info;
  if (std::strcmp(v, "error") == 0 || std::strcmp(v, "1") == 0) return Level::error;
  return Level::off;
}

Level level() noexcept {
  static const Level lv = parse_level();
  return lv;
}

bool enabled(Level lv) noexcept { return static_cast<int>(lv) <= static_cast<int>(level()); }

static void vwrite(Level lv, const char* fmt, va_list ap) {
  if (!enabled(lv)) return;
  static const char* names[] = {"", "error", "info", "debug"};
  std::fprintf(stderr, "[mols %s] ", names[static_cast<int>(lv)]);
  std::vfprintf(stderr, fmt, ap);
  std::fputc('\n', stderr);
}

void write(Level lv, const char* fmt, ...) {
  va_list ap;
  va_start(ap, fmt);
  vwrite(lv, fmt, ap);
  va_end(ap);
}

void error(const char* fmt, ...) {
  va_list ap;
  va_start(ap, fmt);
  vwrite(Level::error, fmt, ap);
  va_end(ap);
}

void info(const char* fmt, ...) {
  va_list ap;
  va_start(ap, fmt);
  vwrite(Level::info, fmt, ap);
  va_end(ap);
}

void debug(const char* fmt, ...) {
  va_list ap;
  va_start(ap, fmt);
  vwrite(Level::debug, fmt, ap);
  va_end(ap);
}

} // namespace mols::log
