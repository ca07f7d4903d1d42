#pragma once

#include "rissim/geometry.hpp"

namespace rissim {

// Illumination of the aperture: a spherical-wave feed with a cos^q taper,
// or an incident plane wave. The plane-wave incidence Direction is the
// arrival direction (where the wave comes from); propagation is toward the
// -z half-space.
class SourceModel {
public:
    enum class Kind { spherical, plane };

    static SourceModel spherical(const Vec3& position, double taper_exponent);
    static SourceModel plane(const Direction& incidence, double amplitude = 1.0);

    Kind kind() const { return kind_; }
    const Vec3& position() const { return position_; }
    double taper_exponent() const { return taper_exponent_; }
    const Direction& incidence() const { return incidence_; }
    double amplitude() const { return amplitude_; }

private:
    SourceModel() = default;

    Kind kind_ = Kind::plane;
    Vec3 position_{};
    double taper_exponent_ = 0.0;
    Direction incidence_{};
    double amplitude_ = 1.0;
};

} // namespace rissim
