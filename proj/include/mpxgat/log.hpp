#pragma once

#include <sstream>
#include <string>

namespace mpxgat {

enum class LogLevel { error = 0, info = 1, debug = 2 };

// Level comes from MPXGAT_LOG in {error,info,debug}; default info.
LogLevel log_level();
void log_msg(LogLevel level, const std::string& msg);

inline void log_error(const std::string& msg) { log_msg(LogLevel::error, msg); }
inline void log_info(const std::string& msg) { log_msg(LogLevel::info, msg); }
inline void log_debug(const std::string& msg) { log_msg(LogLevel::debug, msg); }

// strcat("epoch ", 3, " loss ", 0.5) -> "epoch 3 loss 0.5"
template <typename... Args>
std::string strcat(Args&&... args) {
    std::ostringstream os;
    (os << ... << args);
    return os.str();
}

} // namespace mpxgat
