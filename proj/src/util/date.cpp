#include "ipsim/util/date.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>

#include "ipsim/common.hpp"

namespace ipsim {

namespace {

// Howard Hinnant's civil date algorithms (public domain).
std::int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * static_cast<unsigned>(m + (m > 2 ? -3 : 9)) + 2u) / 5u +
                         static_cast<unsigned>(d) - 1u;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& y, int& m, int& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t yy = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
    m = static_cast<int>(mp + (mp < 10 ? 3 : -9));
    y = static_cast<int>(yy + (m <= 2));
}

int days_in_month(int y, int m) {
    static constexpr std::array<int, 12> len = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (m == 2) {
        const bool leap = (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
        return leap ? 29 : 28;
    }
    return len[static_cast<std::size_t>(m - 1)];
}

// Day serial of the last Sunday of the given month.
std::int64_t last_sunday(int year, int month) {
    const std::int64_t end = days_from_civil(year, month, days_in_month(year, month));
    // weekday: 1970-01-01 was a Thursday (weekday index 3 with Monday=0).
    const int wd = static_cast<int>(((end % 7) + 7 + 3) % 7);  // 0=Mon..6=Sun
    return end - ((wd + 1) % 7);
}

}  // namespace

Date Date::from_serial(std::int64_t days_since_epoch) {
    Date r;
    civil_from_days(days_since_epoch, r.year, r.month, r.day);
    return r;
}

std::int64_t Date::serial() const { return days_from_civil(year, month, day); }

int Date::weekday() const { return static_cast<int>(((serial() % 7) + 7 + 3) % 7); }

Date Date::plus_months(int n) const {
    int ym = year * 12 + (month - 1) + n;
    int y = ym / 12;
    int m = ym % 12;
    if (m < 0) {
        m += 12;
        y -= 1;
    }
    Date r{y, m + 1, day};
    const int dim = days_in_month(r.year, r.month);
    if (r.day > dim) r.day = dim;
    return r;
}

std::string Date::str() const {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", year, month, day);
    return buf;
}

Date parse_date(const std::string& s) {
    int y = 0, m = 0, d = 0;
    if (std::sscanf(s.c_str(), "%d-%d-%d", &y, &m, &d) != 3 || m < 1 || m > 12 || d < 1 ||
        d > days_in_month(y, m)) {
        throw DataError("malformed date: '" + s + "'");
    }
    return Date{y, m, d};
}

TimeZone parse_timezone(const std::string& name) {
    if (name == "UTC" || name == "utc") return TimeZone::Utc;
    if (name == "CET" || name == "cet" || name == "Europe/Berlin") return TimeZone::Cet;
    throw ConfigError("unknown timezone '" + name + "' (supported: UTC, CET/Europe/Berlin)");
}

std::string timezone_name(TimeZone tz) { return tz == TimeZone::Utc ? "UTC" : "CET"; }

int utc_offset_minutes(TimeZone tz, UtcSeconds t) {
    if (tz == TimeZone::Utc) return 0;
    const std::int64_t day = (t >= 0 ? t : t - 86399) / 86400;
    int y, m, d;
    civil_from_days(day, y, m, d);
    const std::int64_t dst_on = last_sunday(y, 3) * 86400 + 3600;    // 01:00 UTC
    const std::int64_t dst_off = last_sunday(y, 10) * 86400 + 3600;  // 01:00 UTC
    return (t >= dst_on && t < dst_off) ? 120 : 60;
}

LocalTime to_local(TimeZone tz, UtcSeconds t) {
    const std::int64_t shifted = t + static_cast<std::int64_t>(utc_offset_minutes(tz, t)) * 60;
    std::int64_t day = shifted / 86400;
    std::int64_t rem = shifted % 86400;
    if (rem < 0) {
        rem += 86400;
        day -= 1;
    }
    LocalTime lt;
    lt.date = Date::from_serial(day);
    lt.minute_of_day = static_cast<int>(rem / 60);
    return lt;
}

UtcSeconds parse_iso8601(const std::string& s) {
    int y = 0, mo = 0, d = 0, h = 0, mi = 0, sec = 0;
    int n = 0;
    if (std::sscanf(s.c_str(), "%d-%d-%dT%d:%d:%d%n", &y, &mo, &d, &h, &mi, &sec, &n) != 6) {
        throw DataError("malformed ISO-8601 timestamp: '" + s + "'");
    }
    const char* rest = s.c_str() + n;
    std::int64_t offset_min = 0;
    if (*rest == 'Z') {
        offset_min = 0;
    } else if (*rest == '+' || *rest == '-') {
        int oh = 0, om = 0;
        if (std::sscanf(rest + 1, "%d:%d", &oh, &om) < 1) {
            throw DataError("malformed timezone offset in '" + s + "'");
        }
        offset_min = oh * 60 + om;
        if (*rest == '-') offset_min = -offset_min;
    } else {
        throw DataError("timestamp '" + s + "' lacks an explicit timezone offset");
    }
    const std::int64_t day = days_from_civil(y, mo, d);
    return day * 86400 + h * 3600 + mi * 60 + sec - offset_min * 60;
}

std::string format_iso8601(TimeZone tz, UtcSeconds t) {
    const int off = utc_offset_minutes(tz, t);
    const std::int64_t shifted = t + static_cast<std::int64_t>(off) * 60;
    std::int64_t day = shifted / 86400;
    std::int64_t rem = shifted % 86400;
    if (rem < 0) {
        rem += 86400;
        day -= 1;
    }
    int y, m, d;
    civil_from_days(day, y, m, d);
    char buf[40];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02d%+03d:%02d", y, m, d,
                  static_cast<int>(rem / 3600), static_cast<int>((rem % 3600) / 60),
                  static_cast<int>(rem % 60), off / 60, std::abs(off) % 60);
    return buf;
}

}  // namespace ipsim
