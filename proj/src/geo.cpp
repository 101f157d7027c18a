#include "saferoute/geo.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace saferoute {

namespace {

double deg2rad(double d) { return d * kPi / 180.0; }
double rad2deg(double r) { return r * 180.0 / kPi; }

}  // namespace

bool is_valid(const GeoPoint& p) {
  return std::isfinite(p.lat) && std::isfinite(p.lon) && p.lat >= -90.0 &&
         p.lat <= 90.0 && p.lon >= -180.0 && p.lon < 180.0;
}

double haversine_miles(const GeoPoint& a, const GeoPoint& b) {
  const double phi1 = deg2rad(a.lat);
  const double phi2 = deg2rad(b.lat);
  const double dphi = deg2rad(b.lat - a.lat);
  const double dlam = deg2rad(b.lon - a.lon);
  const double sp = std::sin(dphi / 2.0);
  const double sl = std::sin(dlam / 2.0);
  double h = sp * sp + std::cos(phi1) * std::cos(phi2) * sl * sl;
  if (h < 0.0) h = 0.0;
  if (h > 1.0) h = 1.0;
  return 2.0 * kEarthRadiusMiles * std::asin(std::sqrt(h));
}

double bearing_degrees(const GeoPoint& a, const GeoPoint& b) {
  if (a.lat == b.lat && a.lon == b.lon) {
    throw std::domain_error("undefined bearing: coincident points");
  }
  const double phi1 = deg2rad(a.lat);
  const double phi2 = deg2rad(b.lat);
  const double dlam = deg2rad(b.lon - a.lon);
  const double y = std::sin(dlam) * std::cos(phi2);
  const double x = std::cos(phi1) * std::sin(phi2) -
                   std::sin(phi1) * std::cos(phi2) * std::cos(dlam);
  double deg = rad2deg(std::atan2(y, x));
  deg = std::fmod(deg + 360.0, 360.0);
  if (deg >= 360.0) deg = 0.0;
  return deg;
}

GeoPoint great_circle_midpoint(const GeoPoint& a, const GeoPoint& b) {
  const double phi1 = deg2rad(a.lat);
  const double phi2 = deg2rad(b.lat);
  const double lam1 = deg2rad(a.lon);
  const double dlam = deg2rad(b.lon - a.lon);
  const double bx = std::cos(phi2) * std::cos(dlam);
  const double by = std::cos(phi2) * std::sin(dlam);
  const double cp1 = std::cos(phi1);
  const double phim =
      std::atan2(std::sin(phi1) + std::sin(phi2),
                 std::sqrt((cp1 + bx) * (cp1 + bx) + by * by));
  const double lamm = lam1 + std::atan2(by, cp1 + bx);
  GeoPoint m{rad2deg(phim), rad2deg(lamm)};
  while (m.lon >= 180.0) m.lon -= 360.0;
  while (m.lon < -180.0) m.lon += 360.0;
  return m;
}

CompassAction compass_sector(double bearing_deg) {
  double b = std::fmod(bearing_deg, 360.0);
  if (b < 0.0) b += 360.0;
  const int idx = static_cast<int>(std::floor((b + 22.5) / 45.0)) % 8;
  return static_cast<CompassAction>(idx);
}

double sector_center_degrees(CompassAction a) {
  return 45.0 * static_cast<int>(a);
}

std::string_view to_string(CompassAction a) {
  static constexpr std::array<std::string_view, 8> names = {
      "N", "NE", "E", "SE", "S", "SW", "W", "NW"};
  return names[static_cast<int>(a)];
}

std::optional<CompassAction> compass_from_string(std::string_view s) {
  for (int i = 0; i < kCompassActions; ++i) {
    if (to_string(static_cast<CompassAction>(i)) == s) {
      return static_cast<CompassAction>(i);
    }
  }
  return std::nullopt;
}

CompassAction compass_from_index(int idx) {
  if (idx < 0 || idx >= kCompassActions) {
    throw std::out_of_range("compass index out of range");
  }
  return static_cast<CompassAction>(idx);
}

}  // namespace saferoute
