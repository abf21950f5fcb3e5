#pragma once
// Minimal stderr logger. Level is process-global.

#include <cstdio>
#include <mutex>
#include <string>

namespace gistchain::logging {

enum class Level { debug = 0, info = 1, warn = 2, error = 3, off = 4 };

inline Level& threshold() {
    static Level lv = Level::info;
    return lv;
}

inline void set_level(Level lv) { threshold() = lv; }

inline void emit(Level lv, const std::string& msg) {
    if (lv < threshold()) return;
    static const char* names[] = {"debug", "info", "warn", "error"};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    std::fprintf(stderr, "[%s] %s\n", names[static_cast<int>(lv)], msg.c_str());
}

inline void debug(const std::string& msg) { emit(Level::debug, msg); }
inline void info(const std::string& msg) { emit(Level::info, msg); }
inline void warn(const std::string& msg) { emit(Level::warn, msg); }
inline void error(const std::string& msg) { emit(Level::error, msg); }

} // namespace gistchain::logging
