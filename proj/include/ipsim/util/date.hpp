#pragma once

#include <cstdint>
#include <string>

namespace ipsim {

/// Calendar date (proleptic Gregorian). Stored as year/month/day; converts
/// to a day serial (days since 1970-01-01) for arithmetic.
struct Date {
    int year = 1970;
    int month = 1;  // 1..12
    int day = 1;    // 1..31

    static Date from_serial(std::int64_t days_since_epoch);
    std::int64_t serial() const;

    /// 0 = Monday ... 6 = Sunday.
    int weekday() const;

    Date plus_days(std::int64_t n) const { return from_serial(serial() + n); }
    /// Calendar-month shift, day clamped to the target month's length.
    Date plus_months(int n) const;

    bool operator==(const Date& o) const = default;
    bool operator<(const Date& o) const { return serial() < o.serial(); }
    bool operator<=(const Date& o) const { return serial() <= o.serial(); }

    std::string str() const;  // YYYY-MM-DD
};

/// Parses "YYYY-MM-DD"; throws DataError on malformed input.
Date parse_date(const std::string& s);

/// Instant in time, seconds since the Unix epoch (UTC).
using UtcSeconds = std::int64_t;

/// Wall-clock time in some local timezone.
struct LocalTime {
    Date date;
    int minute_of_day = 0;  // 0..1439
};

/// Timezone handling. "cet" follows the EU daylight-saving rule
/// (UTC+1, switching to UTC+2 between the last Sundays of March and
/// October at 01:00 UTC). "utc" has no transitions.
enum class TimeZone { Utc, Cet };

TimeZone parse_timezone(const std::string& name);
std::string timezone_name(TimeZone tz);

/// UTC offset in minutes at the given instant.
int utc_offset_minutes(TimeZone tz, UtcSeconds t);

LocalTime to_local(TimeZone tz, UtcSeconds t);

/// Parses an ISO-8601 timestamp with explicit offset or 'Z', e.g.
/// "2022-03-27T14:30:00+02:00". Throws DataError if the offset is missing.
UtcSeconds parse_iso8601(const std::string& s);

/// Formats an instant as ISO-8601 in the given timezone.
std::string format_iso8601(TimeZone tz, UtcSeconds t);

}  // namespace ipsim
