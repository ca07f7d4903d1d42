#include "rissim/synthesis.hpp"

#include <cmath>

#include "rissim/fields.hpp"

namespace rissim {

PhaseMap ideal_phase_profile(const ArrayGeometry& geometry, const SourceModel& source,
                             const Direction& steer, double offset_deg) {
    std::vector<Vec3> positions = element_positions(geometry);
    double k = geometry.wavenumber();
    Vec3 u0 = steer.unit_vector();

    PhaseMap map{geometry, {}};
    map.phases_deg.reserve(positions.size());
    if (source.kind() == SourceModel::Kind::spherical) {
        Vec3 feed = source.position();
        for (const Vec3& r : positions) {
            double phase = k * norm(r - feed) - k * dot(u0, r);
            map.phases_deg.push_back(wrap_deg(rad2deg(phase) + offset_deg));
        }
    } else {
        Vec3 u_src = source.incidence().unit_vector();
        for (const Vec3& r : positions) {
            double phase = -k * dot(u_src, r) - k * dot(u0, r);
            map.phases_deg.push_back(wrap_deg(rad2deg(phase) + offset_deg));
        }
    }
    return map;
}

QuantizedMap quantize_phase_map(const PhaseMap& map, const std::vector<PhaseState>& states) {
    if (states.size() < 2)
        throw ValidationError("quantize_phase_map: need at least 2 states");
    QuantizedMap out{map.geometry, {}, {}};
    out.state_indices.reserve(map.phases_deg.size());
    out.realized.reserve(map.phases_deg.size());
    for (double phase : map.phases_deg) {
        int best = 0;
        double best_dist = circular_distance_deg(phase, states[0].phase_deg);
        for (std::size_t n = 1; n < states.size(); ++n) {
            double d = circular_distance_deg(phase, states[n].phase_deg);
            if (d < best_dist) {
                best_dist = d;
                best = static_cast<int>(n);
            }
        }
        const PhaseState& s = states[static_cast<std::size_t>(best)];
        out.state_indices.push_back(best);
        out.realized.push_back(std::polar(s.magnitude, deg2rad(s.phase_deg)));
    }
    return out;
}

std::vector<std::complex<double>> continuous_reflection(const PhaseMap& map) {
    std::vector<std::complex<double>> out;
    out.reserve(map.phases_deg.size());
    for (double phase : map.phases_deg)
        out.push_back(std::polar(1.0, deg2rad(phase)));
    return out;
}

OffsetResult optimize_offset(const ArrayGeometry& geometry, const SourceModel& source,
                             const Direction& steer, const std::vector<PhaseState>& states,
                             const std::vector<double>& candidate_offsets_deg) {
    if (candidate_offsets_deg.empty())
        throw ValidationError("optimize_offset: empty candidate list");
    constexpr double kTieEpsDb = 1e-6;

    std::vector<std::complex<double>> excitation = illuminate(geometry, source);
    bool have_best = false;
    OffsetResult best{};
    for (double offset : candidate_offsets_deg) {
        PhaseMap map = ideal_phase_profile(geometry, source, steer, offset);
        QuantizedMap qmap = quantize_phase_map(map, states);
        double level = std::abs(field_at(geometry, excitation, qmap.realized, steer));
        double level_db = 20.0 * std::log10(level);
        bool better = !have_best || level_db > best.level_db + kTieEpsDb ||
                      (std::fabs(level_db - best.level_db) <= kTieEpsDb &&
                       offset < best.offset_deg);
        if (better) {
            best = {offset, level_db};
            have_best = true;
        }
    }
    return best;
}

QuantizedMap uniform_map(const ArrayGeometry& geometry, int state_index,
                         const std::vector<PhaseState>& states) {
    if (state_index < 0 || static_cast<std::size_t>(state_index) >= states.size())
        throw ValidationError("uniform_map: state index " + std::to_string(state_index) +
                              " out of range");
    const PhaseState& s = states[static_cast<std::size_t>(state_index)];
    std::size_t n = static_cast<std::size_t>(geometry.n_elements());
    QuantizedMap out{geometry, std::vector<int>(n, state_index),
                     std::vector<std::complex<double>>(n, std::polar(s.magnitude,
                                                                     deg2rad(s.phase_deg)))};
    return out;
}

} // namespace rissim
