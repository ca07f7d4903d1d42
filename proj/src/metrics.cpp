#include "rissim/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace rissim {

namespace {

constexpr double kHalfPowerDb = -3.0102999566398120; // 10 log10(1/2)

// Grid indices of a direction known to lie on the grid.
std::pair<int, int> grid_indices(const Pattern& p, const Direction& d) {
    double fi = d.theta_deg / p.grid.dtheta_deg;
    double fj = wrap_deg(d.phi_deg) / p.grid.dphi_deg;
    int i = static_cast<int>(std::round(fi));
    int j = static_cast<int>(std::round(fj)) % p.n_phi;
    if (std::fabs(fi - std::round(fi)) > 1e-6 || std::fabs(fj - std::round(fj)) > 1e-6)
        throw ValidationError("metrics: direction not on the pattern grid");
    return {i, j};
}

double max_within_window(const Pattern& p, const Vec3& center, double window_deg) {
    double best = 0.0;
    for (int it = 0; it < p.n_theta; ++it)
        for (int jp = 0; jp < p.n_phi; ++jp) {
            Vec3 u = p.direction_at(it, jp).unit_vector();
            if (angle_between_deg(u, center) <= window_deg)
                best = std::max(best, std::abs(p.at(it, jp)));
        }
    return best;
}

} // namespace

PeakInfo find_peak(const Pattern& pattern) {
    PeakInfo info;
    double best = -1.0;
    for (int it = 0; it < pattern.n_theta; ++it)
        for (int jp = 0; jp < pattern.n_phi; ++jp) {
            double mag = std::abs(pattern.at(it, jp));
            if (mag > best) {
                best = mag;
                info.direction = pattern.direction_at(it, jp);
            }
        }
    info.level = std::max(best, 0.0);
    info.degenerate = !(best > 0.0);
    return info;
}

double half_power_beamwidth_deg(const Pattern& pattern, const Direction& peak) {
    Cut cut = pattern_cut(pattern, peak.phi_deg);
    // the positive-angle half of the cut is at the peak's azimuth
    double peak_angle = peak.theta_deg;
    std::size_t ipk = 0;
    double best = 1e300;
    for (std::size_t i = 0; i < cut.samples.size(); ++i) {
        double d = std::fabs(cut.samples[i].angle_deg - peak_angle);
        if (d < best) {
            best = d;
            ipk = i;
        }
    }
    double ref_db = cut.samples[ipk].power_db_rel;
    double threshold = ref_db + kHalfPowerDb;

    auto crossing = [&](std::size_t inner, std::size_t outer) {
        double a1 = cut.samples[inner].angle_deg, p1 = cut.samples[inner].power_db_rel;
        double a2 = cut.samples[outer].angle_deg, p2 = cut.samples[outer].power_db_rel;
        if (p1 == p2)
            return a2;
        return a1 + (threshold - p1) * (a2 - a1) / (p2 - p1);
    };

    double right = cut.samples.back().angle_deg;
    for (std::size_t i = ipk + 1; i < cut.samples.size(); ++i)
        if (cut.samples[i].power_db_rel < threshold) {
            right = crossing(i - 1, i);
            break;
        }
    double left = cut.samples.front().angle_deg;
    for (std::size_t i = ipk; i-- > 0;)
        if (cut.samples[i].power_db_rel < threshold) {
            left = crossing(i + 1, i);
            break;
        }
    return right - left;
}

double side_lobe_level_db(const Pattern& pattern, const Direction& main) {
    auto [mi, mj] = grid_indices(pattern, main);
    double main_level = std::abs(pattern.at(mi, mj));
    if (main_level <= 0.0)
        throw ComputationError("side_lobe_level: main-lobe level is zero");

    double radius = 2.0 * half_power_beamwidth_deg(pattern, main);
    Vec3 u_main = main.unit_vector();
    double best = -1.0;
    for (int it = 0; it < pattern.n_theta; ++it)
        for (int jp = 0; jp < pattern.n_phi; ++jp) {
            Vec3 u = pattern.direction_at(it, jp).unit_vector();
            if (angle_between_deg(u, u_main) > radius)
                best = std::max(best, std::abs(pattern.at(it, jp)));
        }
    if (best < 0.0)
        throw ComputationError("side_lobe_level: main-lobe exclusion covers the whole grid");
    if (best == 0.0)
        return -400.0;
    return 20.0 * std::log10(best / main_level);
}

double quantization_lobe_level_db(const Pattern& pattern, const Direction& steer,
                                  const Direction& specular) {
    constexpr double kWindowDeg = 3.0;
    Vec3 t = steer.unit_vector();
    Vec3 s = specular.unit_vector();
    Vec3 m = 2.0 * dot(t, s) * s - t;
    if (m.z < -1e-9)
        throw ComputationError("quantization_lobe_level: mirror direction outside hemisphere");
    double main_level = max_within_window(pattern, t, kWindowDeg);
    if (main_level <= 0.0)
        throw ComputationError("quantization_lobe_level: no main-lobe energy at the steer "
                               "direction");
    double mirror_level = max_within_window(pattern, m, kWindowDeg);
    if (mirror_level <= 0.0)
        return -400.0;
    return 20.0 * std::log10(mirror_level / main_level);
}

double peak_directivity_db(const Pattern& pattern) {
    PeakInfo peak = find_peak(pattern);
    if (peak.degenerate)
        throw ComputationError("peak_directivity: pattern is identically zero");
    double dtheta = deg2rad(pattern.grid.dtheta_deg);
    double dphi = deg2rad(pattern.grid.dphi_deg);
    double power = 0.0;
    for (int it = 0; it < pattern.n_theta; ++it) {
        double w = (it == 0 || it == pattern.n_theta - 1) ? 0.5 : 1.0;
        double st = std::sin(deg2rad(pattern.theta_at(it)));
        double row = 0.0;
        for (int jp = 0; jp < pattern.n_phi; ++jp)
            row += std::norm(pattern.at(it, jp));
        power += w * row * st * dtheta * dphi;
    }
    if (power <= 0.0)
        throw ComputationError("peak_directivity: zero radiated power");
    return 10.0 * std::log10(4.0 * kPi * peak.level * peak.level / power);
}

std::vector<ScanRow> scan_sweep(const ArrayGeometry& geometry, const SourceModel& source,
                                const std::vector<PhaseState>& states,
                                const std::vector<Direction>& angles, const GridSpec& grid,
                                double element_exponent, double offset_deg) {
    std::vector<std::complex<double>> excitation = illuminate(geometry, source);
    std::vector<ScanRow> rows;
    rows.reserve(angles.size());
    for (const Direction& steer : angles) {
        ScanRow row;
        row.steer = steer;
        try {
            PhaseMap map = ideal_phase_profile(geometry, source, steer, offset_deg);
            QuantizedMap qmap = quantize_phase_map(map, states);
            Pattern pattern = radiate(geometry, excitation, qmap, grid, element_exponent);
            PeakInfo peak = find_peak(pattern);
            if (peak.degenerate)
                throw ComputationError("pattern is identically zero");
            row.peak_level_db = 20.0 * std::log10(peak.level);
            row.sll_db = side_lobe_level_db(pattern, peak.direction);
            row.pointing_error_deg = angle_between_deg(steer, peak.direction);
            row.ok = true;
        } catch (const std::exception& e) {
            row.ok = false;
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<LossRow> quantization_loss_study(const ArrayGeometry& geometry,
                                             const SourceModel& source,
                                             const std::vector<int>& bit_depths,
                                             const std::vector<Direction>& steer_set,
                                             const std::vector<double>& offset_set_deg,
                                             double element_exponent) {
    if (bit_depths.empty() || steer_set.empty() || offset_set_deg.empty())
        throw ValidationError("quantization_loss_study: empty bit depth, steer, or offset set");
    std::vector<std::complex<double>> excitation = illuminate(geometry, source);
    std::vector<std::vector<PhaseState>> codebooks;
    codebooks.reserve(bit_depths.size());
    for (int bits : bit_depths)
        codebooks.push_back(ideal_states(bits));

    std::vector<double> loss_sum(bit_depths.size(), 0.0);
    for (const Direction& steer : steer_set) {
        for (double offset : offset_set_deg) {
            PhaseMap map = ideal_phase_profile(geometry, source, steer, offset);
            double level_cont = std::abs(field_at(geometry, excitation,
                                                  continuous_reflection(map), steer,
                                                  element_exponent));
            for (std::size_t b = 0; b < codebooks.size(); ++b) {
                QuantizedMap qmap = quantize_phase_map(map, codebooks[b]);
                double level_q = std::abs(field_at(geometry, excitation, qmap.realized, steer,
                                                   element_exponent));
                loss_sum[b] += 20.0 * std::log10(level_cont / level_q);
            }
        }
    }
    double count = static_cast<double>(steer_set.size() * offset_set_deg.size());
    std::vector<LossRow> rows;
    rows.reserve(bit_depths.size());
    for (std::size_t b = 0; b < bit_depths.size(); ++b)
        rows.push_back({bit_depths[b], loss_sum[b] / count});
    return rows;
}

} // namespace rissim
