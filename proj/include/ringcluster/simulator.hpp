#pragma once
#include <cstdint>
#include <vector>

#include "ringcluster/planner.hpp"

namespace ringcluster {

// How members pick a head.  nearest_global is the plain Voronoi rule over
// all heads; nearest_in_ring restricts candidates to the member's own ring
// and falls back to a direct BS uplink when that ring elected no head.
enum class AssignPolicy { nearest_global, nearest_in_ring };

// paper_faithful charges the analytic branch convention (members free
// space, heads multipath, any distance); thresholded picks each branch by
// the radio's crossover distance.
enum class BranchMode { paper_faithful, thresholded };

struct Node {
    int id = 0;
    double x_m = 0.0;
    double y_m = 0.0;
    double dist_to_bs_m = 0.0;
    int ring = 0;
};

struct Deployment {
    NetworkConfig config;
    std::uint64_t seed = 0;
    std::vector<Node> nodes;            // node_count entries, id == index
    std::vector<int> ring_node_count;   // realized population per ring
};

// N i.i.d. positions uniform over the disk, by radius inversion
// (d = R sqrt(u)) and a uniform angle.  Deterministic in (config, seed).
Deployment deploy(const NetworkConfig& config, std::uint64_t seed);

// Independent Bernoulli head election, one draw per node in id order, with
// the node's ring probability.  Probabilities must be in [0, 1], one per
// ring.  Deterministic in (deployment, probabilities, seed).
std::vector<std::uint8_t> elect_heads(const Deployment& deployment,
                                      const std::vector<double>& ring_probability,
                                      std::uint64_t seed);

struct Assignment {
    AssignPolicy policy = AssignPolicy::nearest_global;
    std::vector<int> head_ids;          // elected heads, ascending node id
    std::vector<int> head_of;           // per node: head id; own id for heads; -1 fallback
    std::vector<double> dist_to_head_m; // per node: 0 for heads; BS distance for fallback
    int fallback_members = 0;           // members with no in-ring head
};

// Ties in distance go to the lower head id.  Throws std::runtime_error when
// the election produced no head anywhere (members under nearest_in_ring
// with a headless ring fall back instead of erroring).
Assignment assign_members(const Deployment& deployment, const std::vector<std::uint8_t>& is_head,
                          AssignPolicy policy);

struct RingBreakdown {
    double total_j = 0.0;        // head_j + member_j
    double head_j = 0.0;         // energy spent by heads positioned in the ring
    double member_j = 0.0;       // energy spent by members living in the ring
    double electronics_j = 0.0;  // total minus amplifier terms
    int heads = 0;
    int members = 0;
    int fallback_members = 0;
};

struct RoundOutcome {
    BranchMode branch = BranchMode::paper_faithful;
    std::vector<double> node_energy_j;   // per node
    std::vector<int> cluster_sizes;      // members per head, head_ids order
    std::vector<RingBreakdown> rings;
    double total_j = 0.0;
    int fallback_members = 0;
};

// One communication round.  Members transmit their packet to their head
// (free space when paper_faithful, thresholded otherwise); fallback members
// transmit straight to the BS, always thresholded; heads receive every
// member packet, aggregate members+1 signals (their own included, no
// self-reception), and uplink once to the BS (multipath when
// paper_faithful, thresholded otherwise).
RoundOutcome simulate_round(const Deployment& deployment, const Assignment& assignment,
                            const RadioParams& radio, BranchMode branch);

struct MomentEstimate {
    int ring = 0;
    double k = 0.0;
    long samples = 0;
    double z2_mean_m2 = 0.0;    // squared member-to-head distance, sampled
    double z2_se_m2 = 0.0;
    double z2_closed_m2 = 0.0;  // mean_sq_dist_to_head
    double y4_mean_m4 = 0.0;    // quartic head-to-BS distance, sampled
    double y4_se_m4 = 0.0;
    double y4_closed_m4 = 0.0;  // mean_quad_dist_to_bs
};

// Monte Carlo check of the two closed-form moments: Z^2 from uniform draws
// over a disk of radius cluster_radius(ring, k); Y^4 from uniform draws
// over the ring annulus.  One k per ring.
std::vector<MomentEstimate> estimate_moments(const NetworkConfig& config,
                                             const std::vector<double>& k_per_ring,
                                             long samples, std::uint64_t seed);

struct Stat {
    double mean = 0.0;
    double sd = 0.0;  // sample standard deviation (0 when trials == 1)
    double se = 0.0;  // sd / sqrt(trials)
};

struct TrialSummary {
    ModelKind model = ModelKind::uepem;
    AssignPolicy policy = AssignPolicy::nearest_global;
    BranchMode branch = BranchMode::paper_faithful;
    int trials = 0;
    std::uint64_t base_seed = 0;
    std::vector<double> ring_probability;  // election probability used per ring
    std::vector<double> binomial_heads;    // expected heads per ring, N p_i (2i+1)/M^2
    std::vector<Stat> total_j;             // per-ring, across trials
    std::vector<Stat> head_j;
    std::vector<Stat> member_j;
    std::vector<Stat> electronics_j;
    std::vector<Stat> head_count;
    std::vector<Stat> node_count;
    std::vector<Stat> fallback_members;
    Stat network_total_j;
};

// Independent trials; trial t deploys and elects with seeds derived from
// (base_seed, t).  threads = 0 picks a worker count automatically; results
// are byte-identical for any thread count because per-trial rows are stored
// by index and reduced in order.
TrialSummary run_trials(const NetworkConfig& config, const RadioParams& radio, ModelKind model,
                        int trials, std::uint64_t base_seed, AssignPolicy policy,
                        BranchMode branch, int threads = 0);

}  // namespace ringcluster
