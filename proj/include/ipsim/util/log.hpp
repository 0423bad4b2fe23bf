#pragma once

#include <string>

namespace ipsim::log {

enum class Level { Debug = 0, Info = 1, Warn = 2, Error = 3 };

void set_level(Level lvl);
Level level();
void set_level(const std::string& name);  // "debug" | "info" | "warn" | "error"

void write(Level lvl, const std::string& msg);

inline void debug(const std::string& msg) { write(Level::Debug, msg); }
inline void info(const std::string& msg) { write(Level::Info, msg); }
inline void warn(const std::string& msg) { write(Level::Warn, msg); }
inline void error(const std::string& msg) { write(Level::Error, msg); }

}  // namespace ipsim::log
