#pragma once

namespace mols::log {

// Level is read once from the MOLS_LOG environment variable
// (off|error|info|debug, default off). Output goes to stderr so it never
// contaminates machine-readable stdout or output files.
enum class Level { off = 0, error = 1, info = 2, debug = 3 };

Level level() noexcept;
bool enabled(Level lv) noexcept;

void write(Level lv, const char* fmt, ...) __attribute__((format(printf, 2, 3)));

void error(const char* fmt, ...) __attribute__((format(printf, 1, 2)));
void info(const char* fmt, ...) __attribute__((format(printf, 1, 2)));
void debug(const char* fmt, ...) __attribute__((format(printf, 1, 2)));

} // namespace mols::log
