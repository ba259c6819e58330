#include "netevolve/timestamp.hpp"

#include <charconv>
#include <chrono>
#include <cstdio>

#include "netevolve/errors.hpp"

namespace netevolve {
namespace {

bool parse_int(std::string_view text, std::int64_t& out) {
    if (text.empty()) return false;
    const char* first = text.data();
    const char* last = first + text.size();
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

bool parse_fixed(std::string_view text, std::size_t pos, std::size_t width, int& out) {
    if (pos + width > text.size()) return false;
    int value = 0;
    for (std::size_t i = pos; i < pos + width; ++i) {
        const char c = text[i];
        if (c < '0' || c > '9') return false;
        value = value * 10 + (c - '0');
    }
    out = value;
    return true;
}

std::chrono::sys_days civil_day(std::int64_t seconds) {
    auto day_count = seconds / 86400;
    if (seconds % 86400 < 0) --day_count;
    return std::chrono::sys_days{std::chrono::days{day_count}};
}

[[noreturn]] void bad_timestamp(std::string_view text) {
    throw ParseError("malformed timestamp '" + std::string(text) + "'");
}

}  // namespace

Timestamp Timestamp::parse(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r'))
        text.remove_suffix(1);

    if (std::int64_t idx = 0; parse_int(text, idx)) return Timestamp::index(idx);

    if (!text.empty() && text.back() == 'Z') text.remove_suffix(1);

    // YYYY-MM-DD[THH:MM[:SS]]
    int y = 0, mo = 0, d = 0, h = 0, mi = 0, s = 0;
    if (text.size() < 10 || !parse_fixed(text, 0, 4, y) || text[4] != '-' || !parse_fixed(text, 5, 2, mo) ||
        text[7] != '-' || !parse_fixed(text, 8, 2, d))
        bad_timestamp(text);
    if (text.size() > 10) {
        if ((text[10] != 'T' && text[10] != ' ') || !parse_fixed(text, 11, 2, h) || text.size() < 16 ||
            text[13] != ':' || !parse_fixed(text, 14, 2, mi))
            bad_timestamp(text);
        if (text.size() > 16) {
            if (text.size() != 19 || text[16] != ':' || !parse_fixed(text, 17, 2, s)) bad_timestamp(text);
        }
    }
    const std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{static_cast<unsigned>(mo)},
                                          std::chrono::day{static_cast<unsigned>(d)}};
    if (!ymd.ok() || h > 23 || mi > 59 || s > 59) bad_timestamp(text);
    const auto day_count = std::chrono::sys_days{ymd}.time_since_epoch().count();
    return Timestamp::instant(static_cast<std::int64_t>(day_count) * 86400 + h * 3600 + mi * 60 + s);
}

Timestamp Timestamp::end_of_year(Kind kind, int y) {
    if (kind == Kind::Index) return Timestamp::index(y);
    const auto next =
        std::chrono::sys_days{std::chrono::year{y + 1} / std::chrono::January / 1}.time_since_epoch().count();
    return Timestamp::instant(static_cast<std::int64_t>(next) * 86400 - 1);
}

int Timestamp::year() const {
    if (kind_ == Kind::Index) return static_cast<int>(value_);
    const std::chrono::year_month_day ymd{civil_day(value_)};
    return static_cast<int>(ymd.year());
}

std::string Timestamp::to_string() const {
    if (kind_ == Kind::Index) return std::to_string(value_);
    auto secs = value_ % 86400;
    if (secs < 0) secs += 86400;
    const std::chrono::year_month_day ymd{civil_day(value_)};
    char buf[32];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02d:%02d:%02d", static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()),
                  static_cast<int>(secs / 3600), static_cast<int>(secs / 60 % 60), static_cast<int>(secs % 60));
    return buf;
}

std::strong_ordering Timestamp::operator<=>(const Timestamp& other) const {
    if (kind_ != other.kind_) throw InvalidArgument("cannot compare a period index with a calendar timestamp");
    return value_ <=> other.value_;
}

}  // namespace netevolve
