#pragma once

// Geodetic positions and distances on the WGS-84 ellipsoid.
//
// The inverse geodesic uses Vincenty's iteration, which is good to well
// below a millimetre over the baselines this toolkit handles (< 2000 km).
// Nearly antipodal pairs can defeat the iteration; that case raises
// GeodesicError instead of returning a half-converged number.

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace mcloran {

inline constexpr double WGS84_A = 6378137.0;               // semi-major axis (m)
inline constexpr double WGS84_F = 1.0 / 298.257223563;     // flattening
inline constexpr double WGS84_B = WGS84_A * (1.0 - WGS84_F);
inline constexpr double WGS84_E2 = WGS84_F * (2.0 - WGS84_F);

inline constexpr double DEG_TO_RAD = std::numbers::pi / 180.0;
inline constexpr double RAD_TO_DEG = 180.0 / std::numbers::pi;

class GeodesicError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Normalize a longitude into [-180, 180).
inline double normalize_longitude(double lon_deg) {
    double lon = std::fmod(lon_deg + 180.0, 360.0);
    if (lon < 0.0) lon += 360.0;
    return lon - 180.0;
}

/// A geodetic position on the WGS-84 ellipsoid surface.
/// Latitude must lie in [-90, 90]; longitude is normalized to [-180, 180).
struct GeoPoint {
    double lat_deg = 0.0;
    double lon_deg = 0.0;

    GeoPoint() = default;
    GeoPoint(double lat, double lon) : lat_deg(lat), lon_deg(normalize_longitude(lon)) {
        if (!(lat >= -90.0 && lat <= 90.0)) {
            throw std::out_of_range("GeoPoint: latitude " + std::to_string(lat) +
                                    " outside [-90, 90]");
        }
    }

    bool operator==(const GeoPoint&) const = default;
};

/// Meridian radius of curvature M(lat) in meters.
inline double meridian_radius(double lat_rad) {
    const double s = std::sin(lat_rad);
    const double w = 1.0 - WGS84_E2 * s * s;
    return WGS84_A * (1.0 - WGS84_E2) / (w * std::sqrt(w));
}

/// Prime-vertical radius of curvature N(lat) in meters.
inline double prime_vertical_radius(double lat_rad) {
    const double s = std::sin(lat_rad);
    return WGS84_A / std::sqrt(1.0 - WGS84_E2 * s * s);
}

struct GeodesicInverse {
    double distance_m = 0.0;
    double azimuth1_rad = 0.0;  // forward azimuth at the first point, clockwise from north
};

/// Inverse geodesic problem (Vincenty): distance and forward azimuth from a to b.
inline GeodesicInverse geodesic_inverse(const GeoPoint& a, const GeoPoint& b) {
    if (a.lat_deg == b.lat_deg && a.lon_deg == b.lon_deg) return {0.0, 0.0};

    const double phi1 = a.lat_deg * DEG_TO_RAD;
    const double phi2 = b.lat_deg * DEG_TO_RAD;
    const double L = normalize_longitude(b.lon_deg - a.lon_deg) * DEG_TO_RAD;

    const double U1 = std::atan((1.0 - WGS84_F) * std::tan(phi1));
    const double U2 = std::atan((1.0 - WGS84_F) * std::tan(phi2));
    const double sinU1 = std::sin(U1), cosU1 = std::cos(U1);
    const double sinU2 = std::sin(U2), cosU2 = std::cos(U2);

    double lambda = L;
    double sin_sigma = 0.0, cos_sigma = 0.0, sigma = 0.0;
    double cos_sq_alpha = 0.0, cos_2sigma_m = 0.0;
    double sin_lambda = 0.0, cos_lambda = 0.0;

    bool converged = false;
    for (int it = 0; it < 200; ++it) {
        sin_lambda = std::sin(lambda);
        cos_lambda = std::cos(lambda);
        const double t1 = cosU2 * sin_lambda;
        const double t2 = cosU1 * sinU2 - sinU1 * cosU2 * cos_lambda;
        sin_sigma = std::hypot(t1, t2);
        if (sin_sigma == 0.0) return {0.0, 0.0};  // coincident after reduction
        cos_sigma = sinU1 * sinU2 + cosU1 * cosU2 * cos_lambda;
        sigma = std::atan2(sin_sigma, cos_sigma);
        const double sin_alpha = cosU1 * cosU2 * sin_lambda / sin_sigma;
        cos_sq_alpha = 1.0 - sin_alpha * sin_alpha;
        cos_2sigma_m = (cos_sq_alpha != 0.0)
                           ? cos_sigma - 2.0 * sinU1 * sinU2 / cos_sq_alpha
                           : 0.0;  // equatorial line
        const double C = WGS84_F / 16.0 * cos_sq_alpha * (4.0 + WGS84_F * (4.0 - 3.0 * cos_sq_alpha));
        const double lambda_prev = lambda;
        lambda = L + (1.0 - C) * WGS84_F * sin_alpha *
                         (sigma + C * sin_sigma *
                                      (cos_2sigma_m +
                                       C * cos_sigma * (-1.0 + 2.0 * cos_2sigma_m * cos_2sigma_m)));
        if (std::abs(lambda - lambda_prev) < 1e-13) {
            converged = true;
            break;
        }
    }
    if (!converged) {
        throw GeodesicError("geodesic_inverse: Vincenty iteration did not converge "
                            "(nearly antipodal points)");
    }

    const double u_sq = cos_sq_alpha * (WGS84_A * WGS84_A - WGS84_B * WGS84_B) / (WGS84_B * WGS84_B);
    const double A = 1.0 + u_sq / 16384.0 * (4096.0 + u_sq * (-768.0 + u_sq * (320.0 - 175.0 * u_sq)));
    const double B = u_sq / 1024.0 * (256.0 + u_sq * (-128.0 + u_sq * (74.0 - 47.0 * u_sq)));
    const double delta_sigma =
        B * sin_sigma *
        (cos_2sigma_m +
         B / 4.0 *
             (cos_sigma * (-1.0 + 2.0 * cos_2sigma_m * cos_2sigma_m) -
              B / 6.0 * cos_2sigma_m * (-3.0 + 4.0 * sin_sigma * sin_sigma) *
                  (-3.0 + 4.0 * cos_2sigma_m * cos_2sigma_m)));

    GeodesicInverse out;
    out.distance_m = WGS84_B * A * (sigma - delta_sigma);
    out.azimuth1_rad = std::atan2(cosU2 * sin_lambda, cosU1 * sinU2 - sinU1 * cosU2 * cos_lambda);
    return out;
}

/// Geodesic distance in meters between two points.
inline double geodesic_distance(const GeoPoint& a, const GeoPoint& b) {
    return geodesic_inverse(a, b).distance_m;
}

/// Horizontal positioning error: the geodesic distance between an estimate
/// and the true position. Named separately so every evaluation path shares
/// one definition of "error".
inline double horizontal_error(const GeoPoint& estimate, const GeoPoint& truth) {
    return geodesic_distance(estimate, truth);
}

}  // namespace mcloran
