#include "apv/time.hpp"

#include "apv/errors.hpp"

#include <charconv>
#include <fmt/format.h>

namespace apv {

using namespace std::chrono;

UtcTime make_utc(int year, unsigned month, unsigned day, int hour, int minute, int second) {
    const year_month_day ymd{std::chrono::year{year}, std::chrono::month{month}, std::chrono::day{day}};
    if (!ymd.ok()) {
        throw InputError(fmt::format("invalid calendar date {:04d}-{:02d}-{:02d}", year, month, day));
    }
    if (hour < 0 || hour > 23 || minute < 0 || minute > 59 || second < 0 || second > 59) {
        throw InputError(fmt::format("invalid time of day {:02d}:{:02d}:{:02d}", hour, minute, second));
    }
    return sys_days{ymd} + hours{hour} + minutes{minute} + seconds{second};
}

namespace {

bool read_int(std::string_view s, std::size_t pos, std::size_t len, int& out) {
    if (pos + len > s.size()) {
        return false;
    }
    const char* first = s.data() + pos;
    const char* last = first + len;
    for (const char* p = first; p != last; ++p) {
        if (*p < '0' || *p > '9') {
            return false;
        }
    }
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

}  // namespace

UtcTime parse_utc(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '"')) {
        text.remove_prefix(1);
    }
    while (!text.empty() && (text.back() == ' ' || text.back() == '"' || text.back() == '\r')) {
        text.remove_suffix(1);
    }

    int y = 0, mo = 0, d = 0, h = 0, mi = 0, sec = 0;
    auto fail = [&]() -> UtcTime { throw InputError(fmt::format("unparseable timestamp '{}'", text)); };

    // PVGIS: 20150101:0010
    if (text.size() == 13 && text[8] == ':') {
        if (!read_int(text, 0, 4, y) || !read_int(text, 4, 2, mo) || !read_int(text, 6, 2, d) ||
            !read_int(text, 9, 2, h) || !read_int(text, 11, 2, mi)) {
            return fail();
        }
        return make_utc(y, static_cast<unsigned>(mo), static_cast<unsigned>(d), h, mi, 0);
    }

    if (text.size() < 16 || text[4] != '-' || text[7] != '-' || (text[10] != 'T' && text[10] != ' ') ||
        text[13] != ':') {
        return fail();
    }
    if (!read_int(text, 0, 4, y) || !read_int(text, 5, 2, mo) || !read_int(text, 8, 2, d) ||
        !read_int(text, 11, 2, h) || !read_int(text, 14, 2, mi)) {
        return fail();
    }
    std::size_t pos = 16;
    if (pos < text.size() && text[pos] == ':') {
        if (!read_int(text, pos + 1, 2, sec)) {
            return fail();
        }
        pos += 3;
    }
    if (pos < text.size() && text[pos] == 'Z') {
        ++pos;
    } else if (pos + 6 == text.size() && text.substr(pos) == "+00:00") {
        pos += 6;
    }
    if (pos != text.size()) {
        return fail();
    }
    return make_utc(y, static_cast<unsigned>(mo), static_cast<unsigned>(d), h, mi, sec);
}

CivilFields civil_fields(UtcTime t) {
    const auto day = floor<days>(t);
    const year_month_day ymd{day};
    const hh_mm_ss hms{t - day};
    const auto jan1 = sys_days{ymd.year() / January / 1};
    return CivilFields{
        static_cast<int>(ymd.year()),
        static_cast<unsigned>(ymd.month()),
        static_cast<unsigned>(ymd.day()),
        static_cast<int>(hms.hours().count()),
        static_cast<int>(hms.minutes().count()),
        static_cast<int>(hms.seconds().count()),
        static_cast<int>((day - jan1).count()) + 1,
    };
}

std::string format_utc(UtcTime t) {
    const auto c = civil_fields(t);
    if (c.second != 0) {
        return fmt::format("{:04d}-{:02d}-{:02d}T{:02d}:{:02d}:{:02d}Z", c.year, c.month, c.day, c.hour, c.minute,
                           c.second);
    }
    return fmt::format("{:04d}-{:02d}-{:02d}T{:02d}:{:02d}Z", c.year, c.month, c.day, c.hour, c.minute);
}

bool is_leap_year(int year) { return std::chrono::year{year}.is_leap(); }

unsigned days_in_month(int year, unsigned month) {
    const auto last = std::chrono::year{year} / std::chrono::month{month} / std::chrono::last;
    return static_cast<unsigned>(last.day());
}

}  // namespace apv
