#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rissim/commands.hpp"
#include "rissim/control.hpp"
#include "rissim/fields.hpp"
#include "rissim/io.hpp"
#include "rissim/metrics.hpp"

namespace py = pybind11;
using namespace rissim;

namespace {

py::array_t<std::complex<double>> pattern_samples(const Pattern& p) {
    py::array_t<std::complex<double>> out({p.n_theta, p.n_phi});
    auto view = out.mutable_unchecked<2>();
    for (int it = 0; it < p.n_theta; ++it)
        for (int jp = 0; jp < p.n_phi; ++jp)
            view(it, jp) = p.at(it, jp);
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Phase synthesis, quantization analysis, and pattern simulation for "
              "PIN-diode reconfigurable surfaces";
    m.attr("__version__") = kToolVersion;
    m.attr("SPEED_OF_LIGHT") = kSpeedOfLight;

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<ComputationError>(m, "ComputationError", PyExc_RuntimeError);

    py::class_<Vec3>(m, "Vec3")
        .def(py::init<double, double, double>(), py::arg("x"), py::arg("y"), py::arg("z"))
        .def_readonly("x", &Vec3::x)
        .def_readonly("y", &Vec3::y)
        .def_readonly("z", &Vec3::z)
        .def("__repr__", [](const Vec3& v) {
            return "Vec3(" + std::to_string(v.x) + ", " + std::to_string(v.y) + ", " +
                   std::to_string(v.z) + ")";
        });

    py::class_<ArrayGeometry>(m, "ArrayGeometry")
        .def(py::init<int, int, double, double>(), py::arg("n_rows"), py::arg("n_cols"),
             py::arg("pitch"), py::arg("frequency"))
        .def_readonly("n_rows", &ArrayGeometry::n_rows)
        .def_readonly("n_cols", &ArrayGeometry::n_cols)
        .def_readonly("pitch", &ArrayGeometry::pitch)
        .def_readonly("frequency", &ArrayGeometry::frequency)
        .def_property_readonly("n_elements", &ArrayGeometry::n_elements)
        .def_property_readonly("wavelength", &ArrayGeometry::wavelength)
        .def_property_readonly("wavenumber", &ArrayGeometry::wavenumber);

    py::class_<Direction>(m, "Direction")
        .def(py::init<double, double>(), py::arg("theta_deg"), py::arg("phi_deg"))
        .def_readonly("theta_deg", &Direction::theta_deg)
        .def_readonly("phi_deg", &Direction::phi_deg)
        .def("unit_vector", &Direction::unit_vector)
        .def("__repr__", [](const Direction& d) {
            return "Direction(theta=" + std::to_string(d.theta_deg) +
                   ", phi=" + std::to_string(d.phi_deg) + ")";
        });

    m.def("element_positions", &element_positions, py::arg("geometry"));
    m.def("far_field_distance", &far_field_distance, py::arg("geometry"));
    m.def("angle_between_deg",
          py::overload_cast<const Direction&, const Direction&>(&angle_between_deg));

    py::class_<PhaseState>(m, "PhaseState")
        .def(py::init<double, double>(), py::arg("phase_deg"), py::arg("magnitude") = 1.0)
        .def_readwrite("phase_deg", &PhaseState::phase_deg)
        .def_readwrite("magnitude", &PhaseState::magnitude);

    py::class_<PhaseCodebook>(m, "PhaseCodebook")
        .def(py::init<std::vector<double>, std::vector<std::vector<PhaseState>>>(),
             py::arg("frequencies"), py::arg("states_per_frequency"))
        .def_property_readonly("n_entries", &PhaseCodebook::n_entries)
        .def_property_readonly("n_states", &PhaseCodebook::n_states)
        .def_property_readonly("frequencies", &PhaseCodebook::frequencies)
        .def("entry", &PhaseCodebook::entry, py::arg("index"))
        .def("states_at", &PhaseCodebook::states_at, py::arg("frequency"));

    m.def("adjacent_phase_differences", &adjacent_phase_differences, py::arg("states"));
    m.def(
        "equivalent_bits",
        [](const std::vector<PhaseState>& states) { return equivalent_bits(states); },
        py::arg("states"));
    m.def("average_magnitude_db", &average_magnitude_db, py::arg("states"));
    m.def("effective_bandwidth", &effective_bandwidth, py::arg("codebook"),
          py::arg("threshold") = 1.7);
    m.def("load_codebook", &load_codebook, py::arg("path"));
    m.def("ideal_states", &ideal_states, py::arg("bits"));
    m.def("uniform_states", &uniform_states, py::arg("count"));

    py::class_<SourceModel>(m, "SourceModel")
        .def_static("spherical", &SourceModel::spherical, py::arg("position"),
                    py::arg("taper_exponent"))
        .def_static("plane", &SourceModel::plane, py::arg("incidence"),
                    py::arg("amplitude") = 1.0);

    py::class_<PhaseMap>(m, "PhaseMap")
        .def_readonly("geometry", &PhaseMap::geometry)
        .def_readonly("phases_deg", &PhaseMap::phases_deg);

    py::class_<QuantizedMap>(m, "QuantizedMap")
        .def_readonly("geometry", &QuantizedMap::geometry)
        .def_readonly("state_indices", &QuantizedMap::state_indices)
        .def_readonly("realized", &QuantizedMap::realized);

    m.def("ideal_phase_profile", &ideal_phase_profile, py::arg("geometry"), py::arg("source"),
          py::arg("steer"), py::arg("offset_deg") = 0.0);
    m.def("quantize_phase_map", &quantize_phase_map, py::arg("map"), py::arg("states"));
    m.def("continuous_reflection", &continuous_reflection, py::arg("map"));
    m.def("uniform_map", &uniform_map, py::arg("geometry"), py::arg("state_index"),
          py::arg("states"));

    py::class_<OffsetResult>(m, "OffsetResult")
        .def_readonly("offset_deg", &OffsetResult::offset_deg)
        .def_readonly("level_db", &OffsetResult::level_db);
    m.def("optimize_offset", &optimize_offset, py::arg("geometry"), py::arg("source"),
          py::arg("steer"), py::arg("states"), py::arg("candidate_offsets_deg"));

    py::class_<GridSpec>(m, "GridSpec")
        .def(py::init<>())
        .def(py::init<double, double>(), py::arg("dtheta_deg"), py::arg("dphi_deg"))
        .def_readwrite("dtheta_deg", &GridSpec::dtheta_deg)
        .def_readwrite("dphi_deg", &GridSpec::dphi_deg);

    py::class_<Pattern>(m, "Pattern")
        .def_readonly("n_theta", &Pattern::n_theta)
        .def_readonly("n_phi", &Pattern::n_phi)
        .def_readonly("frequency", &Pattern::frequency)
        .def_readonly("annotation", &Pattern::annotation)
        .def_readonly("metadata", &Pattern::metadata)
        .def_property_readonly("grid", [](const Pattern& p) { return p.grid; })
        .def("theta_at", &Pattern::theta_at, py::arg("i"))
        .def("phi_at", &Pattern::phi_at, py::arg("j"))
        .def("samples", &pattern_samples)
        .def("peak_magnitude", &Pattern::peak_magnitude);

    py::class_<CutSample>(m, "CutSample")
        .def_readonly("angle_deg", &CutSample::angle_deg)
        .def_readonly("power_db_rel", &CutSample::power_db_rel);
    py::class_<Cut>(m, "Cut")
        .def_readonly("phi_deg", &Cut::phi_deg)
        .def_readonly("samples", &Cut::samples);

    m.def("illuminate", &illuminate, py::arg("geometry"), py::arg("source"));
    m.def("radiate",
          py::overload_cast<const ArrayGeometry&, const std::vector<std::complex<double>>&,
                            const std::vector<std::complex<double>>&, const GridSpec&, double>(
              &radiate),
          py::arg("geometry"), py::arg("excitation"), py::arg("reflection"),
          py::arg("grid") = GridSpec{}, py::arg("element_exponent") = 1.0);
    m.def("radiate_map",
          py::overload_cast<const ArrayGeometry&, const std::vector<std::complex<double>>&,
                            const QuantizedMap&, const GridSpec&, double>(&radiate),
          py::arg("geometry"), py::arg("excitation"), py::arg("map"),
          py::arg("grid") = GridSpec{}, py::arg("element_exponent") = 1.0);
    m.def("field_at", &field_at, py::arg("geometry"), py::arg("excitation"),
          py::arg("reflection"), py::arg("direction"), py::arg("element_exponent") = 1.0);
    m.def("pattern_cut", &pattern_cut, py::arg("pattern"), py::arg("phi0_deg"));
    m.def("rcs_response", &rcs_response, py::arg("geometry"), py::arg("incidence"),
          py::arg("map"), py::arg("grid") = GridSpec{}, py::arg("element_exponent") = 1.0);

    py::class_<PeakInfo>(m, "PeakInfo")
        .def_readonly("direction", &PeakInfo::direction)
        .def_readonly("level", &PeakInfo::level)
        .def_readonly("degenerate", &PeakInfo::degenerate);

    m.def("find_peak", &find_peak, py::arg("pattern"));
    m.def("half_power_beamwidth_deg", &half_power_beamwidth_deg, py::arg("pattern"),
          py::arg("peak"));
    m.def("side_lobe_level_db", &side_lobe_level_db, py::arg("pattern"), py::arg("main"));
    m.def("quantization_lobe_level_db", &quantization_lobe_level_db, py::arg("pattern"),
          py::arg("steer"), py::arg("specular"));
    m.def("enhancement_db", &enhancement_db, py::arg("on_level_db"), py::arg("off_level_db"));
    m.def("peak_directivity_db", &peak_directivity_db, py::arg("pattern"));

    py::class_<ScanRow>(m, "ScanRow")
        .def_readonly("steer", &ScanRow::steer)
        .def_readonly("peak_level_db", &ScanRow::peak_level_db)
        .def_readonly("sll_db", &ScanRow::sll_db)
        .def_readonly("pointing_error_deg", &ScanRow::pointing_error_deg)
        .def_readonly("ok", &ScanRow::ok)
        .def_readonly("error", &ScanRow::error);
    m.def("scan_sweep", &scan_sweep, py::arg("geometry"), py::arg("source"), py::arg("states"),
          py::arg("angles"), py::arg("grid") = GridSpec{}, py::arg("element_exponent") = 1.0,
          py::arg("offset_deg") = 0.0);

    py::class_<LossRow>(m, "LossRow")
        .def_readonly("bits", &LossRow::bits)
        .def_readonly("mean_loss_db", &LossRow::mean_loss_db);
    m.def("quantization_loss_study", &quantization_loss_study, py::arg("geometry"),
          py::arg("source"), py::arg("bit_depths"), py::arg("steer_set"),
          py::arg("offset_set_deg"), py::arg("element_exponent") = 1.0);

    py::class_<DiodeStates>(m, "DiodeStates")
        .def(py::init<bool, bool>(), py::arg("diode1_on"), py::arg("diode2_on"))
        .def_readwrite("diode1_on", &DiodeStates::diode1_on)
        .def_readwrite("diode2_on", &DiodeStates::diode2_on);

    py::class_<StateMapping>(m, "StateMapping")
        .def(py::init<std::vector<DiodeStates>>(), py::arg("table"))
        .def_static("standard", &StateMapping::standard)
        .def("at", &StateMapping::at, py::arg("state_index"))
        .def("state_for", &StateMapping::state_for, py::arg("diodes"));

    py::class_<BiasFrame>(m, "BiasFrame")
        .def_readonly("n_cells", &BiasFrame::n_cells)
        .def_readonly("positive", &BiasFrame::positive);

    py::class_<ChainConfig>(m, "ChainConfig")
        .def(py::init<>())
        .def(py::init<int>(), py::arg("register_width"))
        .def_readwrite("register_width", &ChainConfig::register_width);

    m.def("apply_mapping", &apply_mapping, py::arg("map"), py::arg("mapping"));
    m.def("serialize_frame", &serialize_frame, py::arg("frame"), py::arg("chain"));
    m.def("simulate_chain", &simulate_chain, py::arg("bits"), py::arg("chain"));
    m.def("parse_lines", &parse_lines, py::arg("lines"), py::arg("n_cells"));
    m.def("recover_state_indices", &recover_state_indices, py::arg("frame"), py::arg("mapping"));
    m.def("bits_to_hex", &bits_to_hex, py::arg("bits"));
    m.def("hex_to_bits", &hex_to_bits, py::arg("hex"));
}
