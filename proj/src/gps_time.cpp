// This file is part of casim, a GPS L1 C/A signal simulation and
// receiver verification toolkit.
//
// SPDX-License-Identifier: MIT

#include "casim/gps_time.hpp"

#include <cmath>

namespace casim {

GpsTime GpsTime::normalized() const {
    GpsTime t = *this;
    while (t.sow >= kSecondsPerWeek) {
        t.sow -= kSecondsPerWeek;
        ++t.week;
    }
    while (t.sow < 0.0) {
        t.sow += kSecondsPerWeek;
        --t.week;
    }
    return t;
}

GpsTime GpsTime::operator+(double seconds) const {
    return GpsTime{week, sow + seconds}.normalized();
}

double gps_diff(const GpsTime& t1, const GpsTime& t2) {
    return (t1.week - t2.week) * kSecondsPerWeek + (t1.sow - t2.sow);
}

int day_of_year(const CalendarDate& date) {
    static const int cum[12] = {0, 31, 59, 90, 120, 151, 181, 212, 243, 273, 304, 334};
    const int y = date.year;
    const bool leap = (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
    int doy = cum[date.month - 1] + date.day;
    if (leap && date.month > 2) {
        ++doy;
    }
    return doy;
}

std::int64_t days_from_civil(const CalendarDate& date) {
    // Howard Hinnant's algorithm, days since 1970-01-01.
    std::int64_t y = date.year;
    const int m = date.month;
    const int d = date.day;
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

GpsTime gps_time_from_date(const CalendarDate& date, int hour, int minute, double second) {
    // GPS epoch: 1980-01-06 00:00:00.
    const std::int64_t gps_epoch_days = days_from_civil(CalendarDate{1980, 1, 6});
    const std::int64_t days = days_from_civil(date) - gps_epoch_days;
    const std::int64_t week = days / 7;
    const std::int64_t dow = days - week * 7;
    return GpsTime{static_cast<int>(week),
                   dow * 86400.0 + hour * 3600.0 + minute * 60.0 + second}
        .normalized();
}

}  // namespace casim
