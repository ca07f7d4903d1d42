// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <random>
#include <vector>

#include "helpers.hpp"
#include "rissim/control.hpp"
#include "rissim/fields.hpp"
#include "rissim/metrics.hpp"

using namespace rissim;
using rissim::testing::oracle_field;
using rissim::testing::random_excitation;

namespace {

int failures = 0;

void report(const char* name, bool pass, const std::string& detail) {
    std::printf("[%s] %s: %s\n", pass ? "PASS" : "FAIL", name, detail.c_str());
    if (!pass)
        ++failures;
}

std::string fmt(const char* format, ...) {
    va_list args;
    va_start(args, format);
    char buf[512];
    std::vsnprintf(buf, sizeof buf, format, args);
    va_end(args);
    return buf;
}

double now_seconds() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

const ArrayGeometry kArray(20, 20, 0.0046, 26e9);

void check_equivalent_bits_closed_forms() {
    double t0 = now_seconds();
    double two = equivalent_bits({{0, 1}, {90, 1}, {180, 1}, {270, 1}});
    double one = equivalent_bits({{0, 1}, {180, 1}});
    double elapsed = now_seconds() - t0;
    bool pass = std::fabs(two - 2.0) <= 1e-9 && std::fabs(one - 1.0) <= 1e-9 &&
                elapsed < 1e-3;
    report("equivalent-bits closed forms", pass,
           fmt("ideal 2-bit = %.12f, 1-bit = %.12f (tol 1e-9), %.3f us", two, one,
               elapsed * 1e6));
}

void check_quantization_loss() {
    double t0 = now_seconds();
    SourceModel src = SourceModel::plane(Direction(0, 0));
    std::vector<Direction> steers;
    for (int t = 10; t <= 50; t += 10)
        steers.emplace_back(t, 90.0);
    std::vector<double> offsets;
    for (int o = 0; o < 360; o += 10)
        offsets.push_back(o);
    auto rows = quantization_loss_study(kArray, src, {1, 2, 3}, steers, offsets, 1.0);
    double elapsed = now_seconds() - t0;
    bool pass = std::fabs(rows[0].mean_loss_db - 3.0) <= 1.0 &&
                std::fabs(rows[1].mean_loss_db - 0.6) <= 0.4 &&
                std::fabs(rows[2].mean_loss_db - 0.2) <= 0.2 && elapsed < 60.0;
    report("quantization loss 3.0/0.6/0.2 dB", pass,
           fmt("1-bit %.3f dB (3.0+-1.0), 2-bit %.3f dB (0.6+-0.4), 3-bit %.3f dB "
               "(0.2+-0.2), %.2f s",
               rows[0].mean_loss_db, rows[1].mean_loss_db, rows[2].mean_loss_db, elapsed));
}

void check_qll_suppression() {
    SourceModel src = SourceModel::plane(Direction(0, 0));
    Direction steer(30, 90), specular(0, 0);
    auto excitation = illuminate(kArray, src);
    PhaseMap map = ideal_phase_profile(kArray, src, steer, 0.0);

    QuantizedMap one_bit = quantize_phase_map(map, ideal_states(1));
    QuantizedMap two_bit = quantize_phase_map(map, ideal_states(2));
    double qll1 = quantization_lobe_level_db(radiate(kArray, excitation, one_bit), steer,
                                             specular);
    double qll2 = quantization_lobe_level_db(radiate(kArray, excitation, two_bit), steer,
                                             specular);
    bool pass = qll1 >= -3.0 && qll2 <= -10.0 && (qll1 - qll2) >= 10.0;
    report("quantization lobe suppression", pass,
           fmt("1-bit QLL %.2f dB (>= -3), 2-bit QLL %.2f dB (<= -10), gap %.2f dB (>= 10)",
               qll1, qll2, qll1 - qll2));
}

void check_far_field_distance() {
    double d = far_field_distance(kArray);
    report("far-field distance", std::fabs(d - 2.9) <= 0.1,
           fmt("2 D^2 / lambda = %.3f m (2.9 +- 0.1)", d));
}

void check_scan_sweep() {
    SourceModel feed = SourceModel::spherical({-0.125, 0.0, 0.2165063509461097}, 6.5);
    std::vector<Direction> angles;
    for (int t = 0; t <= 50; t += 10)
        angles.emplace_back(t, 0.0);
    auto rows = scan_sweep(kArray, feed, ideal_states(2), angles, {}, 0.5, 0.0);
    double lo = 1e300, hi = -1e300, worst_sll = -1e300, worst_err = 0.0;
    bool all_ok = true;
    for (const auto& r : rows) {
        all_ok = all_ok && r.ok;
        if (!r.ok)
            continue;
        lo = std::min(lo, r.peak_level_db);
        hi = std::max(hi, r.peak_level_db);
        worst_sll = std::max(worst_sll, r.sll_db);
        worst_err = std::max(worst_err, r.pointing_error_deg);
    }
    bool pass = all_ok && (hi - lo) <= 3.0 && worst_sll <= -10.0 && worst_err <= 1.0;
    report("beam scan 0-50 degrees", pass,
           fmt("peak spread %.2f dB (<= 3), worst SLL %.2f dB (<= -10), worst pointing "
               "error %.2f deg (<= 1)",
               hi - lo, worst_sll, worst_err));
}

void check_bandwidth_extraction() {
    // four states at 0 / 90+d / 180 / 270+d drift apart away from 26 GHz;
    // the equivalent bits cross 1.7 at 26 +- 1.2438 GHz (d = 37.3153 deg)
    double sample_spacing = 0.25e9;
    std::vector<double> freqs;
    std::vector<std::vector<PhaseState>> entries;
    for (double f = 24.0e9; f <= 28.0e9 + 1.0; f += sample_spacing) {
        double d = 60.0 * std::fabs(f - 26.0e9) / 2.0e9;
        freqs.push_back(f);
        entries.push_back({{0.0, 1.0}, {90.0 + d, 1.0}, {180.0, 1.0}, {wrap_deg(270.0 + d), 1.0}});
    }
    PhaseCodebook synthetic(freqs, entries);
    auto bands = effective_bandwidth(synthetic, 1.7);
    double expected_d = std::sqrt((std::pow(360.0, 3) / std::pow(2.0, 3.4) -
                                   2.0 * std::pow(90.0, 3) - 2.0 * std::pow(90.0, 3)) /
                                  (12.0 * 90.0));
    double expected_lo = 26.0e9 - 2.0e9 * expected_d / 60.0;
    double expected_hi = 26.0e9 + 2.0e9 * expected_d / 60.0;
    bool pass = bands.size() == 1 &&
                std::fabs(bands[0].first - expected_lo) <= sample_spacing &&
                std::fabs(bands[0].second - expected_hi) <= sample_spacing;

    std::vector<std::vector<PhaseState>> ideal_entries(freqs.size(), ideal_states(2));
    PhaseCodebook ideal_cb(freqs, ideal_entries);
    auto full = effective_bandwidth(ideal_cb, 1.7);
    pass = pass && full.size() == 1 && full[0].first == freqs.front() &&
           full[0].second == freqs.back();

    if (bands.size() == 1)
        report("effective bandwidth extraction", pass,
               fmt("edges %.4f / %.4f GHz vs designed %.4f / %.4f (one sample = %.2f GHz); "
                   "ideal codebook spans the full range: %s",
                   bands[0].first / 1e9, bands[0].second / 1e9, expected_lo / 1e9,
                   expected_hi / 1e9, sample_spacing / 1e9,
                   full.size() == 1 ? "yes" : "no"));
    else
        report("effective bandwidth extraction", false,
               fmt("expected 1 band, got %zu", bands.size()));
}

void check_oracle_equivalence() {
    ArrayGeometry g(4, 4, 0.0046, 26e9);
    std::mt19937 rng(987654321);
    GridSpec grid{15.0, 30.0};
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        auto excitation = random_excitation(rng, 16);
        auto reflection = random_excitation(rng, 16);
        Pattern pattern = radiate(g, excitation, reflection, grid, 1.0);
        double scale = pattern.peak_magnitude();
        for (int it = 0; it < pattern.n_theta; ++it)
            for (int jp = 0; jp < pattern.n_phi; ++jp) {
                std::complex<double> expected =
                    oracle_field(g, excitation, reflection, pattern.theta_at(it),
                                 pattern.phi_at(jp), 1.0);
                worst = std::max(worst, std::abs(pattern.at(it, jp) - expected) / scale);
            }
    }
    report("array-factor oracle equivalence", worst <= 1e-10,
           fmt("1000 random 4x4 excitations, worst relative deviation %.2e (<= 1e-10)", worst));
}

void check_directivity() {
    auto excitation = illuminate(kArray, SourceModel::plane(Direction(0, 0)));
    std::vector<std::complex<double>> unit(static_cast<std::size_t>(kArray.n_elements()),
                                           {1.0, 0.0});
    Pattern pattern = radiate(kArray, excitation, unit, {}, 1.0);
    double d = peak_directivity_db(pattern);
    double area = (kArray.n_cols * kArray.pitch) * (kArray.n_rows * kArray.pitch);
    double bound = 10.0 * std::log10(4.0 * kPi * area /
                                     (kArray.wavelength() * kArray.wavelength()));
    report("hemisphere directivity sanity", std::fabs(d - bound) <= 1.5,
           fmt("integrated %.2f dB vs aperture bound %.2f dB (+- 1.5)", d, bound));
}

void check_control_round_trip() {
    StateMapping mapping = StateMapping::standard();
    ChainConfig chain;
    std::mt19937 rng(13579);
    std::uniform_int_distribution<int> state(0, 3);
    auto states = ideal_states(2);

    bool round_trip_ok = true, exclusivity_ok = true;
    for (int trial = 0; trial < 100 && round_trip_ok && exclusivity_ok; ++trial) {
        std::vector<int> indices(static_cast<std::size_t>(kArray.n_elements()));
        for (auto& idx : indices)
            idx = state(rng);
        QuantizedMap map{kArray, indices, {}};
        map.realized.resize(indices.size());
        for (std::size_t e = 0; e < indices.size(); ++e)
            map.realized[e] = std::polar(1.0, deg2rad(states[static_cast<std::size_t>(
                                                                 indices[e])].phase_deg));
        BiasFrame frame = apply_mapping(map, mapping);
        auto bits = serialize_frame(frame, chain);
        for (std::size_t b = 0; b < bits.size(); b += 2)
            exclusivity_ok = exclusivity_ok && ((bits[b] ^ bits[b + 1]) == 1);
        BiasFrame recovered = parse_lines(simulate_chain(bits, chain), kArray.n_elements());
        round_trip_ok = round_trip_ok &&
                        recover_state_indices(recovered, mapping) == indices;
    }

    QuantizedMap sample{kArray, std::vector<int>(400, 1), {}};
    sample.realized.assign(400, std::polar(1.0, deg2rad(90.0)));
    auto bits = serialize_frame(apply_mapping(sample, mapping), chain);
    bool size_ok = bits.size() == 1600;

    report("control chain round trip", round_trip_ok && exclusivity_ok && size_ok,
           fmt("100 random frames round-trip %s, polarity exclusivity %s, 20x20 stream "
               "%zu bits (= 1600)",
               round_trip_ok ? "ok" : "FAILED", exclusivity_ok ? "ok" : "FAILED",
               bits.size()));
}

} // namespace

int main() {
    check_equivalent_bits_closed_forms();
    check_quantization_loss();
    check_qll_suppression();
    check_far_field_distance();
    check_scan_sweep();
    check_bandwidth_extraction();
    check_oracle_equivalence();
    check_directivity();
    check_control_round_trip();
    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
