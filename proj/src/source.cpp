#include "rissim/source.hpp"

namespace rissim {

SourceModel SourceModel::spherical(const Vec3& position, double taper_exponent) {
    if (!(position.z > 0.0))
        throw ValidationError("source: spherical feed must sit above the surface (z > 0)");
    if (taper_exponent < 0.0)
        throw ValidationError("source: feed taper exponent must be >= 0");
    SourceModel s;
    s.kind_ = Kind::spherical;
    s.position_ = position;
    s.taper_exponent_ = taper_exponent;
    return s;
}

SourceModel SourceModel::plane(const Direction& incidence, double amplitude) {
    if (!(amplitude > 0.0))
        throw ValidationError("source: plane-wave amplitude must be > 0");
    SourceModel s;
    s.kind_ = Kind::plane;
    s.incidence_ = incidence;
    s.amplitude_ = amplitude;
    return s;
}

} // namespace rissim
