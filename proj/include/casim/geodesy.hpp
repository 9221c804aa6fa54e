// This file is part of casim, a GPS L1 C/A signal simulation and
// receiver verification toolkit.
//
// SPDX-License-Identifier: MIT

#pragma once

#include "casim/errors.hpp"

namespace casim {

// WGS-84 ellipsoid.
constexpr double kWgs84SemiMajorAxisM = 6378137.0;
constexpr double kWgs84Flattening = 1.0 / 298.257223563;

/// Latitude/longitude in degrees, height in meters above the WGS-84
/// ellipsoid.
struct GeodeticPosition {
    double lat_deg = 0.0;   // -90..90
    double lon_deg = 0.0;   // -180..180]
    double alt_m = 0.0;
};

struct EcefPosition {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

struct EcefVelocity {
    double vx = 0.0;
    double vy = 0.0;
    double vz = 0.0;
};

/// Observer-to-target geometry in the observer's local east-north-up frame.
/// Azimuth is measured clockwise from north, in [0, 360).
struct LookAngles {
    double elevation_deg = 0.0;
    double azimuth_deg = 0.0;
    double range_m = 0.0;
};

class DegenerateInput : public Error {
public:
    using Error::Error;
};

EcefPosition geodetic_to_ecef(const GeodeticPosition& g);

/// Inverse of geodetic_to_ecef to better than 1e-6 m equivalent position
/// error. Longitude at the poles is 0 by convention.
/// Throws DegenerateInput within 1 m of the geocenter.
GeodeticPosition ecef_to_geodetic(const EcefPosition& p);

/// Throws DegenerateInput for coincident points or a geocentric observer.
LookAngles look_angles(const EcefPosition& observer, const EcefPosition& target);

double ecef_distance(const EcefPosition& a, const EcefPosition& b);

}  // namespace casim
