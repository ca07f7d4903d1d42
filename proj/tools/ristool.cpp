#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rissim/commands.hpp"
#include "rissim/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitComputation = 2;

void print_synth(const rissim::SynthResult& r) {
    std::printf("elements: %d\n", r.n_elements);
    std::printf("offset_deg: %g\n", r.offset_deg);
    std::printf("state histogram:");
    for (std::size_t n = 0; n < r.state_histogram.size(); ++n)
        std::printf(" %zu:%d", n, r.state_histogram[n]);
    std::printf("\nwrote %s\n", r.map_csv.c_str());
}

void print_pattern(const rissim::PatternResult& r) {
    std::printf("peak: theta %.2f deg, phi %.2f deg, level %.2f dB\n", r.peak.theta_deg,
                r.peak.phi_deg, r.peak_level_db);
    std::printf("hpbw: %.2f deg, sll: %.2f dB", r.hpbw_deg, r.sll_db);
    if (r.qll_db)
        std::printf(", qll: %.2f dB", *r.qll_db);
    std::printf("\nwrote %s %s %s %s\n", r.pattern_csv.c_str(), r.e_cut_csv.c_str(),
                r.h_cut_csv.c_str(), r.metrics_json.c_str());
}

void print_codebook(const rissim::CodebookResult& r) {
    if (r.bands.empty())
        std::printf("no band exceeds %.3g bits\n", r.threshold);
    for (const auto& b : r.bands)
        std::printf("band: %.4g - %.4g GHz (%.1f%%)\n", b.f_low_hz / 1e9, b.f_high_hz / 1e9,
                    100.0 * b.relative_bandwidth);
    std::printf("wrote %s %s\n", r.nbit_csv.c_str(), r.band_json.c_str());
}

void print_sweep(const rissim::SweepResult& r) {
    for (const auto& row : r.rows) {
        if (row.ok)
            std::printf("theta %5.1f: peak %7.2f dB, sll %7.2f dB, pointing error %.2f deg\n",
                        row.steer.theta_deg, row.peak_level_db, row.sll_db,
                        row.pointing_error_deg);
        else
            std::printf("theta %5.1f: error: %s\n", row.steer.theta_deg, row.error.c_str());
    }
    std::printf("wrote %s\n", r.table_csv.c_str());
}

void print_bitstream(const rissim::BitstreamResult& r, bool verify) {
    std::printf("data bits: %d, registers: %d\n", r.data_bits, r.registers);
    if (verify)
        std::printf("round-trip verify: %s\n", r.verified ? "PASS" : "FAIL");
    std::printf("wrote %s %s\n", r.hex_path.c_str(), r.sidecar_path.c_str());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Phase synthesis, quantization analysis, and pattern simulation for "
                 "PIN-diode reconfigurable surfaces"};
    app.set_version_flag("--version", std::string(rissim::kToolVersion));
    app.require_subcommand(1);

    std::string config_path;
    std::string out_prefix = "out";
    std::string csv_path;
    std::string map_csv;
    std::string out_csv = "sweep.csv";
    std::vector<double> angles;
    double threshold = 1.7;
    bool verify = false;

    CLI::App* synth = app.add_subcommand("synth", "Synthesize and quantize a phase map");
    synth->add_option("--config", config_path, "JSON run configuration")->required();
    synth->add_option("--out-prefix", out_prefix, "Output file prefix");

    CLI::App* pattern = app.add_subcommand("pattern", "Radiated/scattered pattern and metrics");
    pattern->add_option("--config", config_path, "JSON run configuration")->required();
    pattern->add_option("--out-prefix", out_prefix, "Output file prefix");

    CLI::App* codebook = app.add_subcommand("codebook", "Equivalent-bits band report");
    codebook->add_option("--csv", csv_path, "Codebook CSV")->required();
    codebook->add_option("--threshold", threshold, "Equivalent-bits threshold");
    codebook->add_option("--out-prefix", out_prefix, "Output file prefix");

    CLI::App* sweep = app.add_subcommand("sweep", "Beam-scan study over polar angles");
    sweep->add_option("--config", config_path, "JSON run configuration")->required();
    sweep->add_option("--angles", angles, "Polar angles in degrees")->delimiter(',');
    sweep->add_option("--out", out_csv, "Output table CSV");

    CLI::App* bitstream = app.add_subcommand("bitstream", "Serialize a map into the bias "
                                                          "bitstream");
    bitstream->add_option("--config", config_path, "JSON run configuration")->required();
    bitstream->add_option("--map", map_csv, "Map CSV from the synth command")->required();
    bitstream->add_option("--out-prefix", out_prefix, "Output file prefix");
    bitstream->add_flag("--verify", verify, "Re-simulate the register chain and check");

    CLI11_PARSE(app, argc, argv);

    try {
        if (synth->parsed()) {
            print_synth(rissim::cmd_synth(rissim::load_run_config(config_path), out_prefix));
        } else if (pattern->parsed()) {
            print_pattern(rissim::cmd_pattern(rissim::load_run_config(config_path), out_prefix));
        } else if (codebook->parsed()) {
            print_codebook(rissim::cmd_codebook(csv_path, threshold, out_prefix));
        } else if (sweep->parsed()) {
            print_sweep(rissim::cmd_sweep(rissim::load_run_config(config_path), angles, out_csv));
        } else if (bitstream->parsed()) {
            print_bitstream(rissim::cmd_bitstream(rissim::load_run_config(config_path), map_csv,
                                                  out_prefix, verify),
                            verify);
        }
    } catch (const rissim::ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitValidation;
    } catch (const rissim::ComputationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitComputation;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitComputation;
    }
    return kExitOk;
}
