#pragma once
#include <vector>

#include "ringcluster/radio_energy.hpp"
#include "ringcluster/ring_model.hpp"

namespace ringcluster {

// Cluster-head election models.  EPEM elects with one fixed probability
// everywhere; UEPEM elects with a per-ring probability derived from the
// per-ring optimal head count.
enum class ModelKind { epem, uepem };

// Optimal head count for a ring, from minimizing the ring's per-round total
// over k (head-to-BS multipath term vs member-to-head free-space term):
// sqrt(3 eps_fs N (2i+1)^3 / (2 eps_mp R^2 ((i+1)^6 - i^6))).
double k_opt_unclamped(const NetworkConfig& config, const RadioParams& radio, int ring);

// The same, clamped to the feasible range [1, N_i].
double k_opt(const NetworkConfig& config, const RadioParams& radio, int ring);

// Expected heads in a ring: UEPEM = clamped optimum, EPEM = p * N_i
// (deliberately unclamped; fixed-probability election can expect < 1 head).
double head_count(const NetworkConfig& config, const RadioParams& radio, int ring,
                  ModelKind model);

// Per-node election probability: head_count / N_i (UEPEM lands in (0, 1]
// by construction of the clamp; EPEM is the configured p).
double election_probability(const NetworkConfig& config, const RadioParams& radio, int ring,
                            ModelKind model);

// Per-round energy of one cluster head in ring i with k heads: receive and
// aggregate N_i/k signals (own packet included in aggregation), then one
// multipath transmission to the BS at the ring's mean quartic distance:
// l ((e_elec + e_da) N_i/k + eps_mp E[Y^4]).
double ch_energy_j(const NetworkConfig& config, const RadioParams& radio, int ring, double k);

// Per-round energy of one member node: one free-space transmission at the
// cluster's mean squared distance: l (e_elec + eps_fs w^2 (2i+1) / (2k)).
double member_energy_j(const NetworkConfig& config, const RadioParams& radio, int ring,
                       double k);

// Per-round energy of one whole cluster (head plus its N_i/k members).
double cluster_energy_j(const NetworkConfig& config, const RadioParams& radio, int ring,
                        double k);

// Per-round energy of every node in the ring: k clusters.
double ring_total_energy_j(const NetworkConfig& config, const RadioParams& radio, int ring,
                           double k);

// ring_total minus the load-independent electronics floor
// l (2 e_elec + e_da) N_i; isolates the distance-dependent amplifier terms.
double ring_total_excl_electronics_j(const NetworkConfig& config, const RadioParams& radio,
                                     int ring, double k);

// One ring under one election model.
struct RingPlan {
    int ring = 0;                      // zero-based index
    double expected_nodes = 0.0;       // N_i
    double head_count = 0.0;           // k_i
    double head_count_unclamped = 0.0; // UEPEM: raw optimum; EPEM: same as head_count
    double election_probability = 0.0;
    double cluster_radius_m = 0.0;
    double cluster_size = 0.0;         // nodes per cluster, N_i / k_i
    double e_head_j = 0.0;             // per head per round
    double e_member_j = 0.0;           // per member per round
    double e_cluster_j = 0.0;          // per cluster per round
    double e_ring_total_j = 0.0;       // whole ring per round
    double e_ring_excl_electronics_j = 0.0;
};

RingPlan make_ring_plan(const NetworkConfig& config, const RadioParams& radio, int ring,
                        ModelKind model);

struct NetworkPlan {
    NetworkConfig config;
    RadioParams radio;
    std::vector<RingPlan> epem;   // one entry per ring
    std::vector<RingPlan> uepem;
    double epem_total_j = 0.0;    // network-wide per-round totals
    double uepem_total_j = 0.0;
};

NetworkPlan make_network_plan(const NetworkConfig& config, const RadioParams& radio);

// One row of the ring-count sweep: the same field re-planned with M rings.
struct SweepPoint {
    int ring_count = 0;
    double uepem_total_j = 0.0;
    double epem_total_j = 0.0;
    double ratio = 0.0;  // uepem / epem
};

// Network totals for every ring count in [m_min, m_max].
std::vector<SweepPoint> ring_sweep(const NetworkConfig& config, const RadioParams& radio,
                                   int m_min, int m_max);

// Nodes per ring that need the larger category-I battery when heads are
// provisioned statically: ceil of the clamped optimal head count.
std::vector<int> hetero_deployment(const NetworkConfig& config, const RadioParams& radio);

}  // namespace ringcluster
