#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "ringcluster/radio_energy.hpp"

using namespace ringcluster;

namespace {

// Writes `text` to a fresh temp file and returns its path.
std::string temp_config(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path, std::ios::trunc);
    out << text;
    out.close();
    return path.string();
}

}  // namespace

TEST_CASE("defaults describe the reference hardware profile") {
    RadioParams radio;
    CHECK(radio.e_elec == 50e-9);
    CHECK(radio.e_da == 5e-9);
    CHECK(radio.eps_fs == 10e-12);
    CHECK(radio.eps_mp == 0.0013e-12);
    CHECK(radio.d_threshold_m == 87.0);
    CHECK(radio.packet_bits == 4000.0);
    CHECK(radio.initial_energy_j == 0.5);
    CHECK_NOTHROW(validate(radio));
}

TEST_CASE("validate rejects non-positive parameters") {
    for (auto mutate : {+[](RadioParams& r) { r.e_elec = 0.0; },
                        +[](RadioParams& r) { r.e_da = -1e-9; },
                        +[](RadioParams& r) { r.eps_fs = 0.0; },
                        +[](RadioParams& r) { r.eps_mp = -0.0013e-12; },
                        +[](RadioParams& r) { r.d_threshold_m = 0.0; },
                        +[](RadioParams& r) { r.packet_bits = 0.0; },
                        +[](RadioParams& r) { r.initial_energy_j = 0.0; }}) {
        RadioParams radio;
        mutate(radio);
        CHECK_THROWS_AS(validate(radio), std::domain_error);
    }
}

TEST_CASE("transmit energy charges the branch the distance demands") {
    RadioParams radio;

    // Electronics only at zero distance.
    CHECK(tx_energy(radio, 4000.0, 0.0) == doctest::Approx(0.0002).epsilon(1e-12));
    // Free space below the threshold: 4000 (50n + 10p * 2500) = 0.0003.
    CHECK(tx_energy(radio, 4000.0, 50.0) == doctest::Approx(0.0003).epsilon(1e-12));
    // Multipath above it: 4000 (50n + 0.0013p * 1e8) = 0.00072.
    CHECK(tx_energy(radio, 4000.0, 100.0) == doctest::Approx(0.00072).epsilon(1e-12));
    // The threshold itself belongs to the multipath branch.
    CHECK(tx_energy(radio, 4000.0, 87.0) == doctest::Approx(0.0004979067572).epsilon(1e-12));
    CHECK(tx_energy(radio, 4000.0, 87.0, TxMode::force_free_space) ==
          doctest::Approx(0.00050276).epsilon(1e-12));
    CHECK(tx_energy(radio, 4000.0, 87.0, TxMode::force_multipath) ==
          tx_energy(radio, 4000.0, 87.0));
}

TEST_CASE("forced branches ignore the threshold") {
    RadioParams radio;
    // Multipath well below the crossover costs less than free space would
    // only because the forced branch is charged regardless of distance.
    const double d = 10.0;
    CHECK(tx_energy(radio, 4000.0, d, TxMode::force_free_space) ==
          doctest::Approx(4000.0 * (50e-9 + 10e-12 * d * d)).epsilon(1e-12));
    CHECK(tx_energy(radio, 4000.0, d, TxMode::force_multipath) ==
          doctest::Approx(4000.0 * (50e-9 + 0.0013e-12 * d * d * d * d)).epsilon(1e-12));
}

TEST_CASE("receive and aggregation energies") {
    RadioParams radio;
    CHECK(rx_energy(radio, 4000.0) == doctest::Approx(0.0002).epsilon(1e-12));
    CHECK(aggregation_energy(radio, 4000.0, 11.0) == doctest::Approx(2.2e-4).epsilon(1e-12));
    CHECK(aggregation_energy(radio, 4000.0, 0.0) == 0.0);
}

TEST_CASE("negative arguments are rejected") {
    RadioParams radio;
    CHECK_THROWS_AS(tx_energy(radio, -1.0, 10.0), std::domain_error);
    CHECK_THROWS_AS(tx_energy(radio, 4000.0, -0.1), std::domain_error);
    CHECK_THROWS_AS(rx_energy(radio, -4000.0), std::domain_error);
    CHECK_THROWS_AS(aggregation_energy(radio, -1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(aggregation_energy(radio, 4000.0, -1.0), std::domain_error);
}

TEST_CASE("crossover distance and the configuration note") {
    RadioParams radio;
    const double crossover = analytic_crossover_m(radio);
    CHECK(crossover == doctest::Approx(std::sqrt(10.0 / 0.0013)).epsilon(1e-15));
    // The default profile's 87 m sits ~0.8% away from sqrt(eps_fs/eps_mp),
    // so the note fires.
    const auto note = crossover_note(radio);
    REQUIRE(note.has_value());
    CHECK(note->find("87") != std::string::npos);

    RadioParams aligned = radio;
    aligned.d_threshold_m = crossover;
    CHECK_FALSE(crossover_note(aligned).has_value());
}

TEST_CASE("radio file: full profile with unit conversion") {
    const std::string path = temp_config("ringcluster_radio_full.conf",
                                         "# hardware profile\n"
                                         "e_elec_nj_per_bit = 100\n"
                                         "e_da_nj_per_bit_signal = 10\n"
                                         "eps_fs_pj_per_bit_m2 = 20\n"
                                         "eps_mp_pj_per_bit_m4 = 0.0026\n"
                                         "d_threshold_m = 90\n"
                                         "packet_bytes = 250\n"
                                         "initial_energy_j = 1.5\n");
    const RadioParams radio = load_radio_params(path);
    CHECK(radio.e_elec == doctest::Approx(100e-9).epsilon(1e-12));
    CHECK(radio.e_da == doctest::Approx(10e-9).epsilon(1e-12));
    CHECK(radio.eps_fs == doctest::Approx(20e-12).epsilon(1e-12));
    CHECK(radio.eps_mp == doctest::Approx(0.0026e-12).epsilon(1e-12));
    CHECK(radio.d_threshold_m == 90.0);
    CHECK(radio.packet_bits == 2000.0);
    CHECK(radio.initial_energy_j == 1.5);
    std::filesystem::remove(path);
}

TEST_CASE("radio file: missing keys keep defaults; comments and blanks skipped") {
    const std::string path = temp_config("ringcluster_radio_partial.conf",
                                         "\n# only override one knob\n"
                                         "d_threshold_m = 87.7\n\n");
    const RadioParams radio = load_radio_params(path);
    CHECK(radio.d_threshold_m == 87.7);
    CHECK(radio.e_elec == 50e-9);
    CHECK(radio.packet_bits == 4000.0);
    std::filesystem::remove(path);
}

TEST_CASE("radio file: unknown key names the line") {
    const std::string path = temp_config("ringcluster_radio_unknown.conf",
                                         "e_elec_nj_per_bit = 50\nbogus_key = 1\n");
    try {
        load_radio_params(path);
        FAIL("expected an error for the unknown key");
    } catch (const std::runtime_error& e) {
        const std::string what = e.what();
        CHECK(what.find("bogus_key") != std::string::npos);
        CHECK(what.find(":2") != std::string::npos);
    }
    std::filesystem::remove(path);
}

TEST_CASE("radio file: malformed lines and numbers are errors") {
    for (const char* text : {"e_elec_nj_per_bit\n", "e_elec_nj_per_bit = fast\n",
                             "e_elec_nj_per_bit = 50 trailing\n", "packet_bytes = -250\n"}) {
        const std::string path = temp_config("ringcluster_radio_bad.conf", text);
        CHECK_THROWS_AS(load_radio_params(path), std::exception);
        std::filesystem::remove(path);
    }
}

TEST_CASE("radio file: missing file is an error naming the path") {
    try {
        load_radio_params("/nonexistent/ringcluster.conf");
        FAIL("expected an error for the missing file");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("/nonexistent/ringcluster.conf") != std::string::npos);
    }
}
