#pragma once

#include <cmath>
#include <vector>

#include "rissim/errors.hpp"

namespace rissim {

inline constexpr double kSpeedOfLight = 299792458.0; // m/s
inline constexpr double kPi = 3.14159265358979323846;

inline double deg2rad(double deg) { return deg * (kPi / 180.0); }
inline double rad2deg(double rad) { return rad * (180.0 / kPi); }

// Wrap an angle into [0, 360).
double wrap_deg(double deg);

// Distance between two phases on the circle, in [0, 180].
double circular_distance_deg(double a, double b);

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }
Vec3 normalized(const Vec3& v);

// Planar reconfigurable surface in the z = 0 plane; the reflection
// hemisphere is z > 0 and incident waves arrive with a negative
// z-component. Element (i, j) sits at
//   x = (j - (n_cols-1)/2) * pitch,  y = ((n_rows-1)/2 - i) * pitch,
// so row index i increases downward (-y). Row-major order (i outer,
// j inner) is used for every per-element array in the library.
struct ArrayGeometry {
    int n_rows = 0;
    int n_cols = 0;
    double pitch = 0.0;     // element period in meters, both axes
    double frequency = 0.0; // operating frequency in Hz

    ArrayGeometry(int n_rows, int n_cols, double pitch, double frequency);

    int n_elements() const { return n_rows * n_cols; }
    double wavelength() const { return kSpeedOfLight / frequency; }
    double wavenumber() const { return 2.0 * kPi / wavelength(); }
};

// Direction in the reflection hemisphere. theta is the polar angle from
// +z in [0, 90] degrees, phi the azimuth from +x in [0, 360).
struct Direction {
    double theta_deg = 0.0;
    double phi_deg = 0.0;

    Direction() = default;
    Direction(double theta_deg, double phi_deg);

    Vec3 unit_vector() const;
};

// Great-circle angle between two directions, degrees.
double angle_between_deg(const Direction& a, const Direction& b);
double angle_between_deg(const Vec3& a, const Vec3& b);

// Element positions in row-major order; centroid at the origin.
std::vector<Vec3> element_positions(const ArrayGeometry& geometry);

// Fraunhofer plane-wave distance 2 D^2 / lambda with D the diagonal of
// the physical aperture.
double far_field_distance(const ArrayGeometry& geometry);

} // namespace rissim
