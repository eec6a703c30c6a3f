#pragma once

#include <chrono>
#include <string>
#include <string_view>

namespace apv {

// All instants are UTC, whole seconds.
using UtcTime = std::chrono::sys_seconds;

UtcTime make_utc(int year, unsigned month, unsigned day, int hour = 0, int minute = 0, int second = 0);

// Accepts "YYYY-MM-DDTHH:MM[:SS][Z]", "YYYY-MM-DD HH:MM[:SS]" and the PVGIS
// form "YYYYMMDD:HHMM". Throws InputError on anything else.
UtcTime parse_utc(std::string_view text);

// "YYYY-MM-DDTHH:MMZ" (seconds appended only when non-zero).
std::string format_utc(UtcTime t);

struct CivilFields {
    int year;
    unsigned month;
    unsigned day;
    int hour;
    int minute;
    int second;
    int day_of_year;  // 1-based
};

CivilFields civil_fields(UtcTime t);

bool is_leap_year(int year);
unsigned days_in_month(int year, unsigned month);

}  // namespace apv
