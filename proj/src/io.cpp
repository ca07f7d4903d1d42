#include "rissim/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace rissim {

std::string OutputMeta::comment_line() const {
    std::string line = "# ";
    line += kToolName;
    line += " ";
    line += kToolVersion;
    line += " config=";
    line += config_hash.empty() ? "none" : config_hash;
    line += "\n";
    return line;
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ValidationError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void atomic_write(const std::string& path, const std::string& content) {
    std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw ValidationError("cannot write '" + tmp.string() + "'");
        out << content;
        if (!out)
            throw ValidationError("write failed for '" + tmp.string() + "'");
    }
    std::filesystem::rename(tmp, target);
}

std::string format_number(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", value);
    return buf;
}

std::string render_map_csv(const PhaseMap& ideal, const QuantizedMap& quantized,
                           const OutputMeta& meta) {
    std::string out = meta.comment_line();
    out += "row,col,ideal_phase_deg,state_index,realized_phase_deg,realized_mag_lin\n";
    const ArrayGeometry& g = ideal.geometry;
    std::size_t e = 0;
    for (int i = 0; i < g.n_rows; ++i)
        for (int j = 0; j < g.n_cols; ++j, ++e) {
            double realized_phase = wrap_deg(rad2deg(std::arg(quantized.realized[e])));
            double realized_mag = std::abs(quantized.realized[e]);
            out += std::to_string(i) + "," + std::to_string(j) + "," +
                   format_number(ideal.phases_deg[e]) + "," +
                   std::to_string(quantized.state_indices[e]) + "," +
                   format_number(realized_phase) + "," + format_number(realized_mag) + "\n";
        }
    return out;
}

std::string render_pattern_csv(const Pattern& pattern, const OutputMeta& meta) {
    double peak = pattern.peak_magnitude();
    std::string out = meta.comment_line();
    out += "theta_deg,phi_deg,re,im,power_db_rel\n";
    for (int it = 0; it < pattern.n_theta; ++it)
        for (int jp = 0; jp < pattern.n_phi; ++jp) {
            const std::complex<double>& s = pattern.at(it, jp);
            double mag = std::abs(s);
            double db = (peak > 0.0 && mag > 0.0)
                            ? std::max(20.0 * std::log10(mag / peak), -400.0)
                            : -400.0;
            out += format_number(pattern.theta_at(it)) + "," +
                   format_number(pattern.phi_at(jp)) + "," + format_number(s.real()) + "," +
                   format_number(s.imag()) + "," + format_number(db) + "\n";
        }
    return out;
}

std::string render_cut_csv(const Cut& cut, const OutputMeta& meta) {
    std::string out = meta.comment_line();
    out += "angle_deg,power_db_rel\n";
    for (const CutSample& s : cut.samples)
        out += format_number(s.angle_deg) + "," + format_number(s.power_db_rel) + "\n";
    return out;
}

std::string render_scan_csv(const std::vector<ScanRow>& rows, const OutputMeta& meta) {
    std::string out = meta.comment_line();
    out += "theta_deg,phi_deg,peak_level_db,sll_db,pointing_error_deg,status\n";
    for (const ScanRow& r : rows) {
        out += format_number(r.steer.theta_deg) + "," + format_number(r.steer.phi_deg) + ",";
        if (r.ok) {
            out += format_number(r.peak_level_db) + "," + format_number(r.sll_db) + "," +
                   format_number(r.pointing_error_deg) + ",ok\n";
        } else {
            std::string message = r.error;
            std::replace(message.begin(), message.end(), ',', ';');
            out += ",,,error: " + message + "\n";
        }
    }
    return out;
}

std::string render_loss_csv(const std::vector<LossRow>& rows, const OutputMeta& meta) {
    std::string out = meta.comment_line();
    out += "bits,mean_loss_db\n";
    for (const LossRow& r : rows)
        out += std::to_string(r.bits) + "," + format_number(r.mean_loss_db) + "\n";
    return out;
}

std::string render_nbit_csv(const PhaseCodebook& codebook, const OutputMeta& meta) {
    std::string out = meta.comment_line();
    out += "freq_hz,n_bit,avg_mag_db\n";
    for (std::size_t i = 0; i < codebook.n_entries(); ++i) {
        const auto& states = codebook.entry(i);
        out += format_number(codebook.frequencies()[i]) + "," +
               format_number(equivalent_bits(states)) + "," +
               format_number(average_magnitude_db(states)) + "\n";
    }
    return out;
}

std::vector<MapRow> parse_map_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot open '" + path + "'");
    std::vector<MapRow> rows;
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#')
            continue;
        if (!header_seen) {
            if (line != "row,col,ideal_phase_deg,state_index,realized_phase_deg,realized_mag_lin")
                throw ValidationError(path + ":" + std::to_string(line_no) +
                                      ": unexpected map CSV header");
            header_seen = true;
            continue;
        }
        MapRow row;
        const char* p = line.data();
        const char* end = line.data() + line.size();
        auto field = [&](auto& value) {
            auto [next, ec] = std::from_chars(p, end, value);
            if (ec != std::errc())
                throw ValidationError(path + ":" + std::to_string(line_no) + ": bad field");
            p = next;
            if (p != end) {
                if (*p != ',')
                    throw ValidationError(path + ":" + std::to_string(line_no) +
                                          ": expected comma");
                ++p;
            }
        };
        field(row.row);
        field(row.col);
        field(row.ideal_phase_deg);
        field(row.state_index);
        field(row.realized_phase_deg);
        field(row.realized_mag_lin);
        rows.push_back(row);
    }
    if (!header_seen)
        throw ValidationError(path + ": missing map CSV header");
    return rows;
}

} // namespace rissim
