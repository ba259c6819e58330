#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace netevolve {

/// A point in time attached to an interaction.
///
/// Two flavours exist: a bare integer period index ("3", "2005") and an
/// ISO-8601 calendar instant ("2009-02-07", "2009-02-07T13:05",
/// "2009-02-07T13:05:30", optionally with a trailing "Z"). Instants are stored
/// as seconds since 1970-01-01T00:00:00 UTC. Ordering is defined only between
/// timestamps of the same kind; mixing kinds is rejected.
class Timestamp {
public:
    enum class Kind : std::uint8_t { Index, Instant };

    constexpr Timestamp() = default;

    static constexpr Timestamp index(std::int64_t value) { return Timestamp{Kind::Index, value}; }
    static constexpr Timestamp instant(std::int64_t seconds) { return Timestamp{Kind::Instant, seconds}; }

    /// Throws ParseError on malformed text.
    static Timestamp parse(std::string_view text);

    /// End of the calendar year: the index itself for Index timestamps,
    /// 31 Dec 23:59:59 for instants.
    static Timestamp end_of_year(Kind kind, int year);

    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] std::int64_t value() const { return value_; }

    /// Calendar year; for Index timestamps the index is taken to be the year.
    [[nodiscard]] int year() const;

    /// Canonical text: the integer for indices, "YYYY-MM-DDTHH:MM:SS" for instants.
    [[nodiscard]] std::string to_string() const;

    bool operator==(const Timestamp&) const = default;

    /// Throws InvalidArgument if the kinds differ.
    std::strong_ordering operator<=>(const Timestamp& other) const;

private:
    constexpr Timestamp(Kind kind, std::int64_t value) : kind_(kind), value_(value) {}

    Kind kind_ = Kind::Index;
    std::int64_t value_ = 0;
};

}  // namespace netevolve
