// This file is part of casim, a GPS L1 C/A signal simulation and
// receiver verification toolkit.
//
// SPDX-License-Identifier: MIT

#pragma once

#include <cstdint>

namespace casim {

constexpr double kSecondsPerWeek = 604800.0;

/// GPS time as full week number plus seconds of week. Weeks are stored
/// unwrapped (no 1024-week rollover); arithmetic uses continuous time.
struct GpsTime {
    int week = 0;
    double sow = 0.0;

    double continuous() const { return week * kSecondsPerWeek + sow; }

    /// Normalize so that 0 <= sow < 604800.
    GpsTime normalized() const;
    GpsTime operator+(double seconds) const;
};

/// t1 - t2 in seconds, week-aware.
double gps_diff(const GpsTime& t1, const GpsTime& t2);

struct CalendarDate {
    int year = 0;
    int month = 0;   // 1..12
    int day = 0;     // 1..31
};

/// Day of year, 1..366.
int day_of_year(const CalendarDate& date);

/// Days since the civil epoch 1970-01-01 (proleptic Gregorian).
std::int64_t days_from_civil(const CalendarDate& date);

/// Calendar date + time of day to GPS time. The input is taken as GPS
/// time directly; no leap-second correction is applied.
GpsTime gps_time_from_date(const CalendarDate& date, int hour, int minute, double second);

}  // namespace casim
