#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace econlex {

/// Error type thrown by all loaders and numerical routines.
/// Messages for file input carry "path:line" so failures point at the data.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

[[noreturn]] void fail(const std::string& msg);
[[noreturn]] void fail_at(const std::filesystem::path& file, std::size_t line, const std::string& msg);

// ---------------------------------------------------------------------------
// Calendar dates. Monthly series use day == 1.

struct Date {
    int year = 0;
    int month = 0;  // 1..12
    int day = 1;    // 1..31

    auto operator<=>(const Date&) const = default;
};

bool is_valid_date(int year, int month, int day);

/// Accepts "YYYY-MM-DD" or "YYYY-MM" (day defaults to 1). Throws Error.
Date parse_date(std::string_view s);

/// First day of the date's month.
Date month_of(Date d);

/// Shift by whole months, clamping the day to the target month length.
Date add_months(Date d, int months);

std::string format_date(Date d);   // YYYY-MM-DD
std::string format_month(Date d);  // YYYY-MM

// ---------------------------------------------------------------------------
// Text helpers.

/// ASCII lowercase; bytes >= 0x80 pass through untouched.
std::string ascii_lower(std::string_view s);

/// Shortest decimal form that round-trips through double.
std::string format_double(double v);

/// Strict double parse of a whole field. Throws Error on trailing garbage.
double parse_double(std::string_view field, const std::filesystem::path& file, std::size_t line);

/// Split on a single-character delimiter; no quoting.
std::vector<std::string_view> split(std::string_view s, char delim);

std::string_view trim(std::string_view s);

/// FNV-1a 64-bit over a file's bytes; used for run manifests.
std::uint64_t fnv1a64_file(const std::filesystem::path& p);

std::string read_file(const std::filesystem::path& p);

}  // namespace econlex
