#include "intake/log.hpp"

#include <cstdlib>
#include <iostream>
#include <string_view>

namespace intake::log {
namespace {

Level parse_level(const char* raw) {
    if (raw == nullptr) {
        return Level::warn;
    }
    const std::string_view v(raw);
    if (v == "debug") return Level::debug;
    if (v == "info") return Level::info;
    if (v == "warn") return Level::warn;
    if (v == "error") return Level::error;
    if (v == "off") return Level::off;
    return Level::warn;
}

const char* level_tag(Level level) {
    switch (level) {
        case Level::debug: return "debug";
        case Level::info: return "info";
        case Level::warn: return "warn";
        case Level::error: return "error";
        case Level::off: return "off";
    }
    return "?";
}

} // namespace

Level threshold() {
    static const Level cached = parse_level(std::getenv("INTAKE_LOG"));
    return cached;
}

void write(Level level, const std::string& message) {
    if (level < threshold()) {
        return;
    }
    std::cerr << "[intake " << level_tag(level) << "] " << message << '\n';
}

} // namespace intake::log
