#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cpmm {

// Shortest round-trippable decimal form of a double ("%.17g").
std::string fmt_double(double v);

// Fixed significant-digit form for presentation columns ("%.6g").
std::string fmt_double_short(double v);

// Civil UTC date for a day number (days since 1970-01-01), "YYYY-MM-DD".
std::string fmt_date(std::int64_t day);

// UTC day number containing a unix timestamp in seconds.
std::int64_t day_of_timestamp(std::int64_t unix_seconds);

// Day number for a civil "YYYY-MM-DD" UTC date; nullopt when malformed.
std::optional<std::int64_t> parse_date(std::string_view text);

// Splits one CSV line on commas. No quoting; fields are trimmed of
// surrounding whitespace.
std::vector<std::string_view> split_csv(std::string_view line);

}  // namespace cpmm
