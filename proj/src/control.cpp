#include "rissim/control.hpp"

#include <algorithm>

namespace rissim {

StateMapping::StateMapping(std::vector<DiodeStates> table) : table_(std::move(table)) {
    if (table_.size() != 4)
        throw ValidationError("state mapping: need exactly 4 entries, got " +
                              std::to_string(table_.size()));
    for (std::size_t a = 0; a < table_.size(); ++a)
        for (std::size_t b = a + 1; b < table_.size(); ++b)
            if (table_[a] == table_[b])
                throw ValidationError("state mapping: diode pair reused for states " +
                                      std::to_string(a) + " and " + std::to_string(b));
}

StateMapping StateMapping::standard() {
    return StateMapping({{false, false}, {false, true}, {true, false}, {true, true}});
}

const DiodeStates& StateMapping::at(int state_index) const {
    if (state_index < 0 || static_cast<std::size_t>(state_index) >= table_.size())
        throw ValidationError("state mapping: index " + std::to_string(state_index) +
                              " outside mapping domain");
    return table_[static_cast<std::size_t>(state_index)];
}

int StateMapping::state_for(const DiodeStates& diodes) const {
    for (std::size_t n = 0; n < table_.size(); ++n)
        if (table_[n] == diodes)
            return static_cast<int>(n);
    throw ValidationError("state mapping: diode pair not present in mapping");
}

BiasFrame apply_mapping(const QuantizedMap& map, const StateMapping& mapping) {
    BiasFrame frame;
    frame.n_cells = map.geometry.n_elements();
    frame.positive.reserve(map.state_indices.size());
    for (std::size_t c = 0; c < map.state_indices.size(); ++c) {
        int idx = map.state_indices[c];
        if (idx < 0 || static_cast<std::size_t>(idx) >= mapping.size()) {
            int i = static_cast<int>(c) / map.geometry.n_cols;
            int j = static_cast<int>(c) % map.geometry.n_cols;
            throw ValidationError("apply_mapping: cell (" + std::to_string(i) + "," +
                                  std::to_string(j) + ") state index " + std::to_string(idx) +
                                  " outside mapping domain");
        }
        const DiodeStates& d = mapping.at(idx);
        frame.positive.push_back({d.diode1_on, d.diode2_on});
    }
    return frame;
}

std::vector<std::uint8_t> serialize_frame(const BiasFrame& frame, const ChainConfig& chain) {
    if (chain.register_width < 1)
        throw ValidationError("chain: register width must be >= 1");
    std::vector<std::uint8_t> bits;
    bits.reserve(static_cast<std::size_t>(frame.n_cells) * 4);
    for (const auto& cell : frame.positive)
        for (int d = 0; d < 2; ++d) {
            bits.push_back(cell[static_cast<std::size_t>(d)] ? 1 : 0); // positive line
            bits.push_back(cell[static_cast<std::size_t>(d)] ? 0 : 1); // negative line
        }
    std::size_t width = static_cast<std::size_t>(chain.register_width);
    while (bits.size() % width != 0)
        bits.push_back(0);
    return bits;
}

std::vector<std::uint8_t> simulate_chain(const std::vector<std::uint8_t>& bits,
                                         const ChainConfig& chain) {
    if (chain.register_width < 1)
        throw ValidationError("chain: register width must be >= 1");
    if (bits.empty() || bits.size() % static_cast<std::size_t>(chain.register_width) != 0)
        throw ValidationError("simulate_chain: bit count " + std::to_string(bits.size()) +
                              " is not a positive multiple of the register width " +
                              std::to_string(chain.register_width));
    std::vector<std::uint8_t> stage(bits.size(), 0);
    for (std::uint8_t b : bits) {
        for (std::size_t s = stage.size() - 1; s > 0; --s)
            stage[s] = stage[s - 1];
        stage[0] = b;
    }
    // latch: line l reads the stage holding the l-th shifted bit
    std::vector<std::uint8_t> lines(stage.size());
    for (std::size_t l = 0; l < lines.size(); ++l)
        lines[l] = stage[stage.size() - 1 - l];
    return lines;
}

BiasFrame parse_lines(const std::vector<std::uint8_t>& lines, int n_cells) {
    std::size_t needed = static_cast<std::size_t>(n_cells) * 4;
    if (lines.size() < needed)
        throw ValidationError("parse_lines: " + std::to_string(lines.size()) +
                              " lines cannot hold " + std::to_string(n_cells) + " cells");
    BiasFrame frame;
    frame.n_cells = n_cells;
    frame.positive.reserve(static_cast<std::size_t>(n_cells));
    for (int c = 0; c < n_cells; ++c) {
        std::array<bool, 2> cell{};
        for (int d = 0; d < 2; ++d) {
            std::uint8_t pos = lines[static_cast<std::size_t>(c) * 4 +
                                     static_cast<std::size_t>(d) * 2];
            std::uint8_t neg = lines[static_cast<std::size_t>(c) * 4 +
                                     static_cast<std::size_t>(d) * 2 + 1];
            if (pos == neg)
                throw ValidationError("parse_lines: cell " + std::to_string(c) + " diode " +
                                      std::to_string(d + 1) + " has invalid bias (pos=" +
                                      std::to_string(pos) + ", neg=" + std::to_string(neg) +
                                      ")");
            cell[static_cast<std::size_t>(d)] = pos != 0;
        }
        frame.positive.push_back(cell);
    }
    return frame;
}

std::vector<int> recover_state_indices(const BiasFrame& frame, const StateMapping& mapping) {
    std::vector<int> indices;
    indices.reserve(frame.positive.size());
    for (const auto& cell : frame.positive)
        indices.push_back(mapping.state_for({cell[0], cell[1]}));
    return indices;
}

std::string bits_to_hex(const std::vector<std::uint8_t>& bits) {
    if (bits.size() % 8 != 0)
        throw ValidationError("bits_to_hex: bit count must be a multiple of 8");
    static const char* digits = "0123456789abcdef";
    std::string hex;
    hex.reserve(bits.size() / 4);
    for (std::size_t i = 0; i < bits.size(); i += 8) {
        unsigned byte = 0;
        for (std::size_t b = 0; b < 8; ++b)
            byte = (byte << 1) | (bits[i + b] ? 1u : 0u); // first-shifted bit is the MSB
        hex.push_back(digits[byte >> 4]);
        hex.push_back(digits[byte & 0xF]);
    }
    return hex;
}

std::vector<std::uint8_t> hex_to_bits(const std::string& hex) {
    if (hex.size() % 2 != 0)
        throw ValidationError("hex_to_bits: odd hex digit count");
    auto nibble = [](char c) -> unsigned {
        if (c >= '0' && c <= '9')
            return static_cast<unsigned>(c - '0');
        if (c >= 'a' && c <= 'f')
            return static_cast<unsigned>(c - 'a' + 10);
        if (c >= 'A' && c <= 'F')
            return static_cast<unsigned>(c - 'A' + 10);
        throw ValidationError(std::string("hex_to_bits: invalid hex character '") + c + "'");
    };
    std::vector<std::uint8_t> bits;
    bits.reserve(hex.size() * 4);
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        unsigned byte = (nibble(hex[i]) << 4) | nibble(hex[i + 1]);
        for (int b = 7; b >= 0; --b)
            bits.push_back((byte >> b) & 1u);
    }
    return bits;
}

} // namespace rissim
