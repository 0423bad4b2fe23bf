#include "ipsim/util/log.hpp"

#include <atomic>
#include <cstdio>
#include <mutex>

#include "ipsim/common.hpp"

namespace ipsim::log {

namespace {
std::atomic<Level> g_level{Level::Info};
std::mutex g_mutex;
const char* tag(Level l) {
    switch (l) {
        case Level::Debug: return "debug";
        case Level::Info: return "info";
        case Level::Warn: return "warn";
        case Level::Error: return "error";
    }
    return "?";
}
}  // namespace

void set_level(Level lvl) { g_level.store(lvl); }
Level level() { return g_level.load(); }

void set_level(const std::string& name) {
    if (name == "debug") set_level(Level::Debug);
    else if (name == "info") set_level(Level::Info);
    else if (name == "warn") set_level(Level::Warn);
    else if (name == "error") set_level(Level::Error);
    else throw ConfigError("unknown log level '" + name + "'");
}

void write(Level lvl, const std::string& msg) {
    if (lvl < g_level.load()) return;
    std::lock_guard<std::mutex> lock(g_mutex);
    std::fprintf(stderr, "[%s] %s\n", tag(lvl), msg.c_str());
}

}  // namespace ipsim::log
