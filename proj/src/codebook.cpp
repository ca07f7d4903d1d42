#include "rissim/codebook.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>

#include "rissim/geometry.hpp"

namespace rissim {

namespace {

constexpr double kFullCircleCubed = 360.0 * 360.0 * 360.0;

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = line.find(',', start);
        std::string tok = line.substr(start, comma == std::string::npos ? comma : comma - start);
        // trim surrounding whitespace
        std::size_t b = tok.find_first_not_of(" \t\r");
        std::size_t e = tok.find_last_not_of(" \t\r");
        out.push_back(b == std::string::npos ? std::string() : tok.substr(b, e - b + 1));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return out;
}

double parse_double(const std::string& tok, const std::string& where) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ValidationError(where + ": expected a number, got '" + tok + "'");
    return value;
}

} // namespace

PhaseCodebook::PhaseCodebook(std::vector<double> frequencies,
                             std::vector<std::vector<PhaseState>> states_per_frequency)
    : frequencies_(std::move(frequencies)), states_(std::move(states_per_frequency)) {
    if (frequencies_.empty())
        throw ValidationError("codebook: no frequency entries");
    if (frequencies_.size() != states_.size())
        throw ValidationError("codebook: entry count mismatch");
    for (std::size_t i = 1; i < frequencies_.size(); ++i)
        if (!(frequencies_[i] > frequencies_[i - 1]))
            throw ValidationError("codebook: frequencies must be strictly increasing");
    std::size_t s = states_[0].size();
    if (s < 2)
        throw ValidationError("codebook: need at least 2 states per entry");
    for (const auto& entry : states_)
        if (entry.size() != s)
            throw ValidationError("codebook: inconsistent state count across entries");
}

std::vector<PhaseState> PhaseCodebook::states_at(double frequency) const {
    if (frequency < frequencies_.front() || frequency > frequencies_.back())
        throw ValidationError("codebook: frequency " + std::to_string(frequency) +
                              " Hz outside sampled span [" +
                              std::to_string(frequencies_.front()) + ", " +
                              std::to_string(frequencies_.back()) + "]");
    auto it = std::lower_bound(frequencies_.begin(), frequencies_.end(), frequency);
    std::size_t hi = static_cast<std::size_t>(it - frequencies_.begin());
    if (hi < frequencies_.size() && frequencies_[hi] == frequency)
        return states_[hi];
    std::size_t lo = hi - 1;
    double t = (frequency - frequencies_[lo]) / (frequencies_[hi] - frequencies_[lo]);
    std::vector<PhaseState> out(n_states());
    for (std::size_t n = 0; n < out.size(); ++n) {
        const PhaseState& a = states_[lo][n];
        const PhaseState& b = states_[hi][n];
        // unwrap the step between the two samples into (-180, 180]
        double step = std::remainder(b.phase_deg - a.phase_deg, 360.0);
        out[n].phase_deg = wrap_deg(a.phase_deg + t * step);
        out[n].magnitude = a.magnitude + t * (b.magnitude - a.magnitude);
    }
    return out;
}

std::vector<double> adjacent_phase_differences(const std::vector<PhaseState>& states) {
    if (states.size() < 2)
        throw ValidationError("adjacent_phase_differences: need at least 2 states");
    std::vector<double> phases;
    phases.reserve(states.size());
    for (const auto& s : states)
        phases.push_back(wrap_deg(s.phase_deg));
    std::sort(phases.begin(), phases.end());
    std::vector<double> gaps;
    gaps.reserve(phases.size());
    for (std::size_t i = 0; i + 1 < phases.size(); ++i)
        gaps.push_back(phases[i + 1] - phases[i]);
    gaps.push_back(360.0 - (phases.back() - phases.front()));
    return gaps;
}

double equivalent_bits(const std::vector<PhaseState>& states, bool* degenerate) {
    if (degenerate)
        *degenerate = false;
    std::vector<double> gaps = adjacent_phase_differences(states);
    double sum_cubes = 0.0;
    for (double g : gaps) {
        if (g >= 360.0 - 1e-12) {
            // all states share one phase
            if (degenerate)
                *degenerate = true;
            return 0.0;
        }
        sum_cubes += g * g * g;
    }
    return 0.5 * std::log2(kFullCircleCubed / sum_cubes);
}

double average_magnitude_db(const std::vector<PhaseState>& states) {
    if (states.empty())
        throw ValidationError("average_magnitude_db: need at least 1 state");
    double mean = 0.0;
    for (const auto& s : states)
        mean += s.magnitude;
    mean /= static_cast<double>(states.size());
    return 20.0 * std::log10(mean);
}

std::vector<std::pair<double, double>> effective_bandwidth(const PhaseCodebook& codebook,
                                                           double threshold) {
    if (codebook.n_entries() < 2)
        throw ValidationError("effective_bandwidth: need at least 2 frequency entries");
    const auto& freqs = codebook.frequencies();
    std::vector<double> nbit(freqs.size());
    for (std::size_t i = 0; i < freqs.size(); ++i)
        nbit[i] = equivalent_bits(codebook.entry(i));

    auto crossing = [&](std::size_t lo, std::size_t hi) {
        double dn = nbit[hi] - nbit[lo];
        if (dn == 0.0)
            return freqs[hi];
        return freqs[lo] + (threshold - nbit[lo]) * (freqs[hi] - freqs[lo]) / dn;
    };

    std::vector<std::pair<double, double>> intervals;
    bool open = false;
    double lo_edge = 0.0;
    for (std::size_t i = 0; i < freqs.size(); ++i) {
        bool above = nbit[i] > threshold;
        if (above && !open) {
            lo_edge = (i == 0) ? freqs[0] : crossing(i - 1, i);
            open = true;
        } else if (!above && open) {
            intervals.emplace_back(lo_edge, crossing(i - 1, i));
            open = false;
        }
    }
    if (open)
        intervals.emplace_back(lo_edge, freqs.back());
    return intervals;
}

PhaseCodebook load_codebook(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ValidationError("codebook: cannot open '" + path + "'");

    std::string line;
    int line_no = 0;
    auto next_line = [&]() {
        while (std::getline(in, line)) {
            ++line_no;
            if (line.empty() || line[0] == '#')
                continue;
            return true;
        }
        return false;
    };

    if (!next_line())
        throw ValidationError(path + ": empty file");
    std::vector<std::string> header = split_csv(line);
    if (header.size() < 5 || header.size() % 2 == 0)
        throw ValidationError(path + ":" + std::to_string(line_no) +
                              ": header must be freq_hz,phase1_deg,...,mag1_db,... "
                              "(odd column count >= 5)");
    std::size_t n_states = (header.size() - 1) / 2;
    if (header[0] != "freq_hz")
        throw ValidationError(path + ":" + std::to_string(line_no) +
                              ": first column must be freq_hz");
    for (std::size_t n = 0; n < n_states; ++n) {
        std::string want_phase = "phase" + std::to_string(n + 1) + "_deg";
        std::string want_mag = "mag" + std::to_string(n + 1) + "_db";
        if (header[1 + n] != want_phase)
            throw ValidationError(path + ":" + std::to_string(line_no) + ": expected column '" +
                                  want_phase + "', got '" + header[1 + n] + "'");
        if (header[1 + n_states + n] != want_mag)
            throw ValidationError(path + ":" + std::to_string(line_no) + ": expected column '" +
                                  want_mag + "', got '" + header[1 + n_states + n] + "'");
    }

    std::vector<double> freqs;
    std::vector<std::vector<PhaseState>> entries;
    while (next_line()) {
        std::string where = path + ":" + std::to_string(line_no);
        std::vector<std::string> cols = split_csv(line);
        if (cols.size() != header.size())
            throw ValidationError(where + ": expected " + std::to_string(header.size()) +
                                  " columns, got " + std::to_string(cols.size()));
        double f = parse_double(cols[0], where);
        if (!freqs.empty() && !(f > freqs.back()))
            throw ValidationError(where + ": frequency not strictly increasing");
        std::vector<PhaseState> states(n_states);
        for (std::size_t n = 0; n < n_states; ++n) {
            states[n].phase_deg = wrap_deg(parse_double(cols[1 + n], where));
            double mag_db = parse_double(cols[1 + n_states + n], where);
            double linear = std::pow(10.0, mag_db / 20.0);
            if (linear > 1.0 + 1e-6)
                throw ValidationError(where + ": magnitude " + cols[1 + n_states + n] +
                                      " dB exceeds 0 dB (passive reflection)");
            states[n].magnitude = std::min(linear, 1.0);
        }
        freqs.push_back(f);
        entries.push_back(std::move(states));
    }
    if (freqs.empty())
        throw ValidationError(path + ": no data rows");
    return PhaseCodebook(std::move(freqs), std::move(entries));
}

std::vector<PhaseState> ideal_states(int bits) {
    if (bits < 1 || bits > 16)
        throw ValidationError("ideal_states: bits must be in [1, 16], got " +
                              std::to_string(bits));
    return uniform_states(1 << bits);
}

std::vector<PhaseState> uniform_states(int count) {
    if (count < 2)
        throw ValidationError("uniform_states: need at least 2 states");
    std::vector<PhaseState> states(static_cast<std::size_t>(count));
    for (int n = 0; n < count; ++n)
        states[static_cast<std::size_t>(n)] = {n * 360.0 / count, 1.0};
    return states;
}

} // namespace rissim
