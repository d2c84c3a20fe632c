#pragma once
#include <optional>
#include <stdexcept>
#include <string>

namespace ringcluster {

// Which transmit-amplifier branch to charge.  The analytic planner forces
// free space for member links and multipath for head-to-BS links; the
// simulator can instead pick by the distance threshold.
enum class TxMode { thresholded, force_free_space, force_multipath };

// First-order radio model parameters, SI units.  Defaults are the reference
// hardware profile (50 nJ/bit electronics, 5 nJ/bit/signal aggregation,
// 10 pJ/bit/m^2 and 0.0013 pJ/bit/m^4 amplifiers, 500-byte packets, 0.5 J
// initial budget).
struct RadioParams {
    double e_elec = 50e-9;          // TX/RX electronics (J/bit)
    double e_da = 5e-9;             // data aggregation (J/bit/signal)
    double eps_fs = 10e-12;         // free-space amplifier (J/bit/m^2)
    double eps_mp = 0.0013e-12;     // multipath amplifier (J/bit/m^4)
    double d_threshold_m = 87.0;    // amplifier crossover distance (m)
    double packet_bits = 4000.0;    // payload per round (bits)
    double initial_energy_j = 0.5;  // per-node energy budget (J)
};

// Throws std::domain_error unless every parameter is strictly positive.
void validate(const RadioParams& radio);

// Crossover distance implied by the amplifier coefficients:
// sqrt(eps_fs / eps_mp).
double analytic_crossover_m(const RadioParams& radio);

// Human-readable note when d_threshold_m disagrees with the analytic
// crossover by more than 0.1% (the reference profile's 87 m vs 87.7 m
// triggers it).  Never an error; callers decide where to print it.
std::optional<std::string> crossover_note(const RadioParams& radio);

// Flat key=value file; keys are e_elec_nj_per_bit, e_da_nj_per_bit_signal,
// eps_fs_pj_per_bit_m2, eps_mp_pj_per_bit_m4, d_threshold_m, packet_bytes,
// initial_energy_j.  Missing keys keep the defaults above; unknown keys and
// malformed numbers are errors naming the line.
RadioParams load_radio_params(const std::string& path);

// Energy to transmit `bits` over `distance_m`:
// bits * (e_elec + eps_fs * d^2) below the crossover, bits * (e_elec +
// eps_mp * d^4) at or above it.  Forced modes charge their branch at any
// distance.
inline double tx_energy(const RadioParams& radio, double bits, double distance_m,
                        TxMode mode = TxMode::thresholded) {
    if (bits < 0.0) throw std::domain_error("tx_energy: bits must be non-negative");
    if (distance_m < 0.0) throw std::domain_error("tx_energy: distance must be non-negative");
    const bool multipath = mode == TxMode::force_multipath ||
                           (mode == TxMode::thresholded && distance_m >= radio.d_threshold_m);
    const double d2 = distance_m * distance_m;
    const double amplifier = multipath ? radio.eps_mp * d2 * d2 : radio.eps_fs * d2;
    return bits * (radio.e_elec + amplifier);
}

// Energy to receive `bits`: electronics only.
inline double rx_energy(const RadioParams& radio, double bits) {
    if (bits < 0.0) throw std::domain_error("rx_energy: bits must be non-negative");
    return bits * radio.e_elec;
}

// Energy to aggregate `signal_count` packets of `bits` each into one.
inline double aggregation_energy(const RadioParams& radio, double bits, double signal_count) {
    if (bits < 0.0) throw std::domain_error("aggregation_energy: bits must be non-negative");
    if (signal_count < 0.0)
        throw std::domain_error("aggregation_energy: signal count must be non-negative");
    return bits * signal_count * radio.e_da;
}

}  // namespace ringcluster
