#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace saferoute {

// Spherical earth model; all distances in miles.
inline constexpr double kEarthRadiusMiles = 3958.7613;
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kMilesPerDegreeLat = kEarthRadiusMiles * kPi / 180.0;

struct GeoPoint {
  double lat = 0.0;  // degrees in [-90, 90]
  double lon = 0.0;  // degrees in [-180, 180)
};

bool is_valid(const GeoPoint& p);

/// Great-circle distance in miles.
double haversine_miles(const GeoPoint& a, const GeoPoint& b);

/// Initial great-circle bearing from a to b in [0, 360), 0 = due north,
/// clockwise. Throws std::domain_error for coincident points.
double bearing_degrees(const GeoPoint& a, const GeoPoint& b);

/// Great-circle midpoint of the segment a-b.
GeoPoint great_circle_midpoint(const GeoPoint& a, const GeoPoint& b);

// The eight discrete movement directions, indexed 0..7 clockwise from north.
enum class CompassAction : std::uint8_t { N = 0, NE, E, SE, S, SW, W, NW };
inline constexpr int kCompassActions = 8;

/// Maps a bearing to its 45-degree sector. N covers [337.5, 360) u [0, 22.5),
/// NE covers [22.5, 67.5), and so on; sector lower bounds are inclusive.
CompassAction compass_sector(double bearing_deg);

double sector_center_degrees(CompassAction a);
std::string_view to_string(CompassAction a);
std::optional<CompassAction> compass_from_string(std::string_view s);
CompassAction compass_from_index(int idx);

}  // namespace saferoute
