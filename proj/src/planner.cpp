#include "ringcluster/planner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ringcluster {
namespace {

double pow6(double x) {
    const double x2 = x * x;
    return x2 * x2 * x2;
}

double sixth_diff(int ring) {
    return pow6(ring + 1.0) - pow6(static_cast<double>(ring));
}

void require_k(double k) {
    if (!(k > 0.0)) throw std::domain_error("planner: head count k must be positive");
}

double require_nodes(const NetworkConfig& config, int ring) {
    if (ring < 0 || ring >= config.ring_count) {
        throw std::out_of_range("planner: ring index " + std::to_string(ring) + " outside [0, " +
                                std::to_string(config.ring_count) + ")");
    }
    const double n_i = config.expected_nodes(ring);
    if (!(n_i > 0.0)) {
        throw std::domain_error("planner: ring " + std::to_string(ring) +
                                " has no expected nodes");
    }
    return n_i;
}

}  // namespace

double k_opt_unclamped(const NetworkConfig& config, const RadioParams& radio, int ring) {
    require_nodes(config, ring);
    const double odd = 2.0 * ring + 1.0;
    const double r2 = config.area_m2 / std::numbers::pi;  // network radius squared
    return std::sqrt(3.0 * radio.eps_fs * config.node_count * odd * odd * odd /
                     (2.0 * radio.eps_mp * r2 * sixth_diff(ring)));
}

double k_opt(const NetworkConfig& config, const RadioParams& radio, int ring) {
    const double n_i = require_nodes(config, ring);
    return std::min(n_i, std::max(1.0, k_opt_unclamped(config, radio, ring)));
}

double head_count(const NetworkConfig& config, const RadioParams& radio, int ring,
                  ModelKind model) {
    const double n_i = require_nodes(config, ring);
    return model == ModelKind::uepem ? k_opt(config, radio, ring) : config.epem_p * n_i;
}

double election_probability(const NetworkConfig& config, const RadioParams& radio, int ring,
                            ModelKind model) {
    if (model == ModelKind::epem) {
        require_nodes(config, ring);
        return config.epem_p;
    }
    return k_opt(config, radio, ring) / require_nodes(config, ring);
}

double ch_energy_j(const NetworkConfig& config, const RadioParams& radio, int ring, double k) {
    require_k(k);
    const double n_i = require_nodes(config, ring);
    const Ring r = make_ring(config, ring);
    return radio.packet_bits *
           ((radio.e_elec + radio.e_da) * (n_i / k) + radio.eps_mp * mean_quad_dist_to_bs_m4(r));
}

double member_energy_j(const NetworkConfig& config, const RadioParams& radio, int ring,
                       double k) {
    require_k(k);
    require_nodes(config, ring);
    const Ring r = make_ring(config, ring);
    return radio.packet_bits * (radio.e_elec + radio.eps_fs * mean_sq_dist_to_head_m2(r, k));
}

double cluster_energy_j(const NetworkConfig& config, const RadioParams& radio, int ring,
                        double k) {
    require_k(k);
    const double n_i = require_nodes(config, ring);
    const Ring r = make_ring(config, ring);
    const double w2 = r.width_m * r.width_m;
    const double odd = 2.0 * ring + 1.0;
    return radio.packet_bits *
           ((2.0 * radio.e_elec + radio.e_da) * n_i / k +
            radio.eps_mp * mean_quad_dist_to_bs_m4(r) +
            radio.eps_fs * w2 * odd * n_i / (2.0 * k * k));
}

double ring_total_energy_j(const NetworkConfig& config, const RadioParams& radio, int ring,
                           double k) {
    require_k(k);
    const double n_i = require_nodes(config, ring);
    const Ring r = make_ring(config, ring);
    const double w2 = r.width_m * r.width_m;
    const double odd = 2.0 * ring + 1.0;
    return radio.packet_bits *
           ((2.0 * radio.e_elec + radio.e_da) * n_i +
            k * radio.eps_mp * mean_quad_dist_to_bs_m4(r) +
            radio.eps_fs * w2 * odd * n_i / (2.0 * k));
}

double ring_total_excl_electronics_j(const NetworkConfig& config, const RadioParams& radio,
                                     int ring, double k) {
    const double n_i = require_nodes(config, ring);
    return ring_total_energy_j(config, radio, ring, k) -
           radio.packet_bits * (2.0 * radio.e_elec + radio.e_da) * n_i;
}

RingPlan make_ring_plan(const NetworkConfig& config, const RadioParams& radio, int ring,
                        ModelKind model) {
    const double n_i = require_nodes(config, ring);
    RingPlan plan;
    plan.ring = ring;
    plan.expected_nodes = n_i;
    plan.head_count = head_count(config, radio, ring, model);
    plan.head_count_unclamped =
        model == ModelKind::uepem ? k_opt_unclamped(config, radio, ring) : plan.head_count;
    plan.election_probability = election_probability(config, radio, ring, model);
    plan.cluster_radius_m = cluster_radius_m(make_ring(config, ring), plan.head_count);
    plan.cluster_size = n_i / plan.head_count;
    plan.e_head_j = ch_energy_j(config, radio, ring, plan.head_count);
    plan.e_member_j = member_energy_j(config, radio, ring, plan.head_count);
    plan.e_cluster_j = cluster_energy_j(config, radio, ring, plan.head_count);
    plan.e_ring_total_j = ring_total_energy_j(config, radio, ring, plan.head_count);
    plan.e_ring_excl_electronics_j =
        ring_total_excl_electronics_j(config, radio, ring, plan.head_count);
    return plan;
}

NetworkPlan make_network_plan(const NetworkConfig& config, const RadioParams& radio) {
    validate(config);
    validate(radio);
    NetworkPlan plan;
    plan.config = config;
    plan.radio = radio;
    plan.epem.reserve(config.ring_count);
    plan.uepem.reserve(config.ring_count);
    for (int ring = 0; ring < config.ring_count; ++ring) {
        plan.epem.push_back(make_ring_plan(config, radio, ring, ModelKind::epem));
        plan.uepem.push_back(make_ring_plan(config, radio, ring, ModelKind::uepem));
        plan.epem_total_j += plan.epem.back().e_ring_total_j;
        plan.uepem_total_j += plan.uepem.back().e_ring_total_j;
    }
    return plan;
}

std::vector<SweepPoint> ring_sweep(const NetworkConfig& config, const RadioParams& radio,
                                   int m_min, int m_max) {
    if (m_min < 1) throw std::domain_error("ring_sweep: minimum ring count must be >= 1");
    if (m_max < m_min)
        throw std::domain_error("ring_sweep: maximum ring count must be >= the minimum");
    std::vector<SweepPoint> sweep;
    sweep.reserve(m_max - m_min + 1);
    for (int m = m_min; m <= m_max; ++m) {
        NetworkConfig swept = config;
        swept.ring_count = m;
        const NetworkPlan plan = make_network_plan(swept, radio);
        sweep.push_back({m, plan.uepem_total_j, plan.epem_total_j,
                         plan.uepem_total_j / plan.epem_total_j});
    }
    return sweep;
}

std::vector<int> hetero_deployment(const NetworkConfig& config, const RadioParams& radio) {
    validate(config);
    validate(radio);
    std::vector<int> counts;
    counts.reserve(config.ring_count);
    for (int ring = 0; ring < config.ring_count; ++ring) {
        counts.push_back(static_cast<int>(std::ceil(k_opt(config, radio, ring))));
    }
    return counts;
}

}  // namespace ringcluster
