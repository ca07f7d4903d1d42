#include "rissim/geometry.hpp"

#include <algorithm>
#include <string>

namespace rissim {

double wrap_deg(double deg) {
    double w = std::fmod(deg, 360.0);
    if (w < 0.0)
        w += 360.0;
    if (w >= 360.0)
        w = 0.0;
    return w;
}

double circular_distance_deg(double a, double b) {
    double d = std::fabs(wrap_deg(a) - wrap_deg(b));
    return d <= 180.0 ? d : 360.0 - d;
}

Vec3 normalized(const Vec3& v) {
    double n = norm(v);
    if (n <= 0.0)
        throw ValidationError("cannot normalize a zero vector");
    return {v.x / n, v.y / n, v.z / n};
}

ArrayGeometry::ArrayGeometry(int n_rows_, int n_cols_, double pitch_, double frequency_)
    : n_rows(n_rows_), n_cols(n_cols_), pitch(pitch_), frequency(frequency_) {
    if (n_rows < 1)
        throw ValidationError("geometry: n_rows must be >= 1, got " + std::to_string(n_rows));
    if (n_cols < 1)
        throw ValidationError("geometry: n_cols must be >= 1, got " + std::to_string(n_cols));
    if (!(pitch > 0.0))
        throw ValidationError("geometry: pitch must be > 0 m");
    if (!(frequency > 0.0))
        throw ValidationError("geometry: frequency must be > 0 Hz");
}

Direction::Direction(double theta, double phi) : theta_deg(theta), phi_deg(wrap_deg(phi)) {
    if (!(theta >= 0.0 && theta <= 90.0))
        throw ValidationError("direction: theta_deg must be in [0, 90], got " +
                              std::to_string(theta));
}

Vec3 Direction::unit_vector() const {
    double t = deg2rad(theta_deg);
    double p = deg2rad(phi_deg);
    double st = std::sin(t);
    return {st * std::cos(p), st * std::sin(p), std::cos(t)};
}

double angle_between_deg(const Vec3& a, const Vec3& b) {
    double c = dot(normalized(a), normalized(b));
    c = std::clamp(c, -1.0, 1.0);
    return rad2deg(std::acos(c));
}

double angle_between_deg(const Direction& a, const Direction& b) {
    return angle_between_deg(a.unit_vector(), b.unit_vector());
}

std::vector<Vec3> element_positions(const ArrayGeometry& g) {
    std::vector<Vec3> pos;
    pos.reserve(static_cast<std::size_t>(g.n_elements()));
    double cx = (g.n_cols - 1) / 2.0;
    double cy = (g.n_rows - 1) / 2.0;
    for (int i = 0; i < g.n_rows; ++i)
        for (int j = 0; j < g.n_cols; ++j)
            pos.push_back({(j - cx) * g.pitch, (cy - i) * g.pitch, 0.0});
    return pos;
}

double far_field_distance(const ArrayGeometry& g) {
    double diag = std::hypot(g.n_cols * g.pitch, g.n_rows * g.pitch);
    return 2.0 * diag * diag / g.wavelength();
}

} // namespace rissim
