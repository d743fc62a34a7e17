#pragma once

#include <cmath>

#include "fleetopt/errors.hpp"

namespace fleetopt {

inline constexpr double kEarthRadiusKm = 6371.0;

struct GeoPoint {
  double lat = 0.0;  ///< degrees in [-90, 90]
  double lon = 0.0;  ///< degrees in [-180, 180]

  bool operator==(const GeoPoint&) const = default;
};

inline bool is_valid(const GeoPoint& p) {
  return std::isfinite(p.lat) && std::isfinite(p.lon) && p.lat >= -90.0 &&
         p.lat <= 90.0 && p.lon >= -180.0 && p.lon <= 180.0;
}

/// Great-circle distance in km on a sphere of radius 6371 km.
inline double haversine_km(const GeoPoint& a, const GeoPoint& b) {
  constexpr double kDegToRad = 3.14159265358979323846 / 180.0;
  const double lat1 = a.lat * kDegToRad;
  const double lat2 = b.lat * kDegToRad;
  const double dlat = (b.lat - a.lat) * kDegToRad;
  const double dlon = (b.lon - a.lon) * kDegToRad;
  const double sl = std::sin(dlat / 2.0);
  const double so = std::sin(dlon / 2.0);
  const double h = sl * sl + std::cos(lat1) * std::cos(lat2) * so * so;
  return 2.0 * kEarthRadiusKm * std::asin(std::min(1.0, std::sqrt(h)));
}

/// Driving time in minutes between two points at a constant average speed.
inline double travel_minutes(const GeoPoint& a, const GeoPoint& b, double speed_kph) {
  if (!is_valid(a) || !is_valid(b)) throw DomainError("travel_minutes: invalid coordinates");
  if (!(speed_kph > 0.0) || !std::isfinite(speed_kph))
    throw DomainError("travel_minutes: speed must be positive");
  return haversine_km(a, b) / speed_kph * 60.0;
}

}  // namespace fleetopt
