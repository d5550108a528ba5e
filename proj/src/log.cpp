#include "mpxgat/log.hpp"

#include <cstdio>
#include <cstdlib>
#include <mutex>

namespace mpxgat {

LogLevel log_level() {
    static LogLevel level = [] {
        const char* env = std::getenv("MPXGAT_LOG");
        if (!env) return LogLevel::info;
        std::string v(env);
        if (v == "error") return LogLevel::error;
        if (v == "debug") return LogLevel::debug;
        return LogLevel::info;
    }();
    return level;
}

void log_msg(LogLevel level, const std::string& msg) {
    if (static_cast<int>(level) > static_cast<int>(log_level())) return;
    static std::mutex mu;
    const char* tag = level == LogLevel::error ? "error" : level == LogLevel::info ? "info" : "debug";
    std::lock_guard<std::mutex> lock(mu);
    std::fprintf(stderr, "[mpxgat %s] %s\n", tag, msg.c_str());
}

} // namespace mpxgat
