#include "econlex/common.hpp"

#include <array>
#include <cctype>
#include <fstream>
#include <sstream>

namespace econlex {

void fail(const std::string& msg) { throw Error(msg); }

void fail_at(const std::filesystem::path& file, std::size_t line, const std::string& msg) {
    throw Error(file.string() + ":" + std::to_string(line) + ": " + msg);
}

// ---------------------------------------------------------------------------

namespace {

int days_in_month(int year, int month) {
    static constexpr std::array<int, 12> days = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (month == 2) {
        const bool leap = (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
        return leap ? 29 : 28;
    }
    return days[static_cast<std::size_t>(month - 1)];
}

bool parse_int_field(std::string_view s, int& out) {
    if (s.empty()) return false;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

bool is_valid_date(int year, int month, int day) {
    return month >= 1 && month <= 12 && day >= 1 && day <= days_in_month(year, month);
}

Date parse_date(std::string_view s) {
    const auto parts = split(s, '-');
    if (parts.size() != 2 && parts.size() != 3) fail("bad date '" + std::string(s) + "' (want YYYY-MM-DD or YYYY-MM)");
    Date d;
    int day = 1;
    if (!parse_int_field(parts[0], d.year) || !parse_int_field(parts[1], d.month) ||
        (parts.size() == 3 && !parse_int_field(parts[2], day))) {
        fail("bad date '" + std::string(s) + "'");
    }
    d.day = day;
    if (!is_valid_date(d.year, d.month, d.day)) fail("bad date '" + std::string(s) + "'");
    return d;
}

Date month_of(Date d) { return Date{d.year, d.month, 1}; }

Date add_months(Date d, int months) {
    const int total = d.year * 12 + (d.month - 1) + months;
    Date r;
    r.year = total >= 0 ? total / 12 : -((-total + 11) / 12);
    r.month = total - r.year * 12 + 1;
    r.day = std::min(d.day, days_in_month(r.year, r.month));
    return r;
}

namespace {
void append_padded(std::string& out, int value, int width) {
    std::string v = std::to_string(value);
    for (int i = static_cast<int>(v.size()); i < width; ++i) out += '0';
    out += v;
}
}  // namespace

std::string format_date(Date d) {
    std::string out;
    append_padded(out, d.year, 4);
    out += '-';
    append_padded(out, d.month, 2);
    out += '-';
    append_padded(out, d.day, 2);
    return out;
}

std::string format_month(Date d) {
    std::string out;
    append_padded(out, d.year, 4);
    out += '-';
    append_padded(out, d.month, 2);
    return out;
}

// ---------------------------------------------------------------------------

std::string ascii_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
}

std::string format_double(double v) {
    if (v == 0.0) v = 0.0;  // canonicalize -0
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

double parse_double(std::string_view field, const std::filesystem::path& file, std::size_t line) {
    const std::string_view t = trim(field);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size()) {
        fail_at(file, line, "malformed number '" + std::string(field) + "'");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view s, char delim) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(delim, start);
        if (pos == std::string_view::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::uint64_t fnv1a64_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) fail("cannot open " + p.string());
    std::uint64_t h = 0xcbf29ce484222325ULL;
    char c;
    while (in.get(c)) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) fail("cannot open " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace econlex
