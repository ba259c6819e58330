#include "netevolve/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

namespace netevolve {

unsigned threads_from_env(unsigned fallback) {
    const char* raw = std::getenv("NETEVOLVE_THREADS");
    if (raw == nullptr) return fallback;
    const std::string_view text(raw);
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) return fallback;
    return value;
}

}  // namespace netevolve
