#include "garma/log.hpp"

#include <cstdlib>
#include <iostream>
#include <mutex>

namespace garma::log {

namespace {

Level parse_level() {
    const char* env = std::getenv("GARMA_LOG");
    if (!env) return Level::Warn;
    const std::string s(env);
    if (s == "quiet" || s == "off" || s == "0") return Level::Quiet;
    if (s == "info") return Level::Info;
    if (s == "debug") return Level::Debug;
    return Level::Warn;
}

std::mutex& mutex() {
    static std::mutex m;
    return m;
}

void emit(const char* tag, const std::string& msg) {
    std::lock_guard<std::mutex> lock(mutex());
    std::cerr << "[garma " << tag << "] " << msg << '\n';
}

} // namespace

Level level() {
    static const Level l = parse_level();
    return l;
}

void warn(const std::string& msg) {
    if (level() >= Level::Warn) emit("warn", msg);
}

void info(const std::string& msg) {
    if (level() >= Level::Info) emit("info", msg);
}

void debug(const std::string& msg) {
    if (level() >= Level::Debug) emit("debug", msg);
}

} // namespace garma::log
