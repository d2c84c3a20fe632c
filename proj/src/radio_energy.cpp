#include "ringcluster/radio_energy.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace ringcluster {
namespace {

void require_positive(double value, const char* name) {
    if (!(value > 0.0)) {
        throw std::domain_error(std::string("radio params: ") + name +
                                " must be strictly positive");
    }
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_number(const std::string& text, const std::string& path, int line) {
    std::size_t consumed = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &consumed);
    } catch (const std::exception&) {
        consumed = 0;
    }
    if (consumed != text.size() || text.empty()) {
        throw std::runtime_error("radio params: malformed number '" + text + "' (" + path +
                                 ":" + std::to_string(line) + ")");
    }
    return value;
}

}  // namespace

void validate(const RadioParams& radio) {
    require_positive(radio.e_elec, "e_elec");
    require_positive(radio.e_da, "e_da");
    require_positive(radio.eps_fs, "eps_fs");
    require_positive(radio.eps_mp, "eps_mp");
    require_positive(radio.d_threshold_m, "d_threshold_m");
    require_positive(radio.packet_bits, "packet_bits");
    require_positive(radio.initial_energy_j, "initial_energy_j");
}

double analytic_crossover_m(const RadioParams& radio) {
    return std::sqrt(radio.eps_fs / radio.eps_mp);
}

std::optional<std::string> crossover_note(const RadioParams& radio) {
    const double crossover = analytic_crossover_m(radio);
    const double deviation = std::abs(radio.d_threshold_m - crossover) / crossover;
    if (deviation <= 1e-3) return std::nullopt;
    std::ostringstream msg;
    msg << "d_threshold_m = " << radio.d_threshold_m
        << " m differs from the amplifier crossover sqrt(eps_fs/eps_mp) = " << crossover
        << " m (" << deviation * 100.0 << "%); the configured threshold is used as-is";
    return msg.str();
}

RadioParams load_radio_params(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("radio params: cannot open '" + path + "'");

    RadioParams radio;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw std::runtime_error("radio params: expected key=value (" + path + ":" +
                                     std::to_string(line_no) + ")");
        }
        const std::string key = trim(stripped.substr(0, eq));
        const double value = parse_number(trim(stripped.substr(eq + 1)), path, line_no);
        if (key == "e_elec_nj_per_bit") {
            radio.e_elec = value * 1e-9;
        } else if (key == "e_da_nj_per_bit_signal") {
            radio.e_da = value * 1e-9;
        } else if (key == "eps_fs_pj_per_bit_m2") {
            radio.eps_fs = value * 1e-12;
        } else if (key == "eps_mp_pj_per_bit_m4") {
            radio.eps_mp = value * 1e-12;
        } else if (key == "d_threshold_m") {
            radio.d_threshold_m = value;
        } else if (key == "packet_bytes") {
            radio.packet_bits = value * 8.0;
        } else if (key == "initial_energy_j") {
            radio.initial_energy_j = value;
        } else {
            throw std::runtime_error("radio params: unknown key '" + key + "' (" + path + ":" +
                                     std::to_string(line_no) + ")");
        }
    }
    validate(radio);
    return radio;
}

}  // namespace ringcluster
