#include "ringcluster/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>

#include "ringcluster/rng.hpp"

namespace ringcluster {
namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// Mean / sample sd / standard error of one column across trials.
Stat reduce(const std::vector<double>& values) {
    Stat s;
    const std::size_t n = values.size();
    if (n == 0) return s;
    double sum = 0.0;
    for (double v : values) sum += v;
    s.mean = sum / static_cast<double>(n);
    if (n > 1) {
        double ss = 0.0;
        for (double v : values) {
            const double d = v - s.mean;
            ss += d * d;
        }
        s.sd = std::sqrt(ss / static_cast<double>(n - 1));
        s.se = s.sd / std::sqrt(static_cast<double>(n));
    }
    return s;
}

}  // namespace

Deployment deploy(const NetworkConfig& config, std::uint64_t seed) {
    validate(config);
    Deployment d;
    d.config = config;
    d.seed = seed;
    d.nodes.resize(config.node_count);
    d.ring_node_count.assign(config.ring_count, 0);

    const double radius = config.network_radius_m();
    std::mt19937_64 rng(seed);
    for (int id = 0; id < config.node_count; ++id) {
        const double dist = radius * std::sqrt(uniform01(rng));
        const double angle = two_pi * uniform01(rng);
        Node& node = d.nodes[id];
        node.id = id;
        node.x_m = dist * std::cos(angle);
        node.y_m = dist * std::sin(angle);
        node.dist_to_bs_m = dist;
        node.ring = ring_of_distance(config, dist);
        ++d.ring_node_count[node.ring];
    }
    return d;
}

std::vector<std::uint8_t> elect_heads(const Deployment& deployment,
                                      const std::vector<double>& ring_probability,
                                      std::uint64_t seed) {
    if (static_cast<int>(ring_probability.size()) != deployment.config.ring_count) {
        throw std::invalid_argument("elect_heads: need one probability per ring");
    }
    for (double p : ring_probability) {
        if (!(p >= 0.0) || p > 1.0)
            throw std::domain_error("elect_heads: probabilities must be in [0, 1]");
    }
    std::vector<std::uint8_t> is_head(deployment.nodes.size(), 0);
    std::mt19937_64 rng(seed);
    for (const Node& node : deployment.nodes) {
        is_head[node.id] = uniform01(rng) < ring_probability[node.ring] ? 1 : 0;
    }
    return is_head;
}

Assignment assign_members(const Deployment& deployment, const std::vector<std::uint8_t>& is_head,
                          AssignPolicy policy) {
    const std::size_t n = deployment.nodes.size();
    if (is_head.size() != n)
        throw std::invalid_argument("assign_members: role vector does not match deployment");

    Assignment a;
    a.policy = policy;
    a.head_of.assign(n, -1);
    a.dist_to_head_m.assign(n, 0.0);
    for (std::size_t id = 0; id < n; ++id) {
        if (is_head[id]) a.head_ids.push_back(static_cast<int>(id));
    }
    if (a.head_ids.empty()) {
        throw std::runtime_error("assign_members: election produced no cluster heads anywhere");
    }

    // Heads per ring, for the in-ring policy.
    std::vector<std::vector<int>> ring_heads(deployment.config.ring_count);
    for (int head : a.head_ids) ring_heads[deployment.nodes[head].ring].push_back(head);

    for (const Node& node : deployment.nodes) {
        if (is_head[node.id]) {
            a.head_of[node.id] = node.id;
            continue;
        }
        const std::vector<int>& candidates =
            policy == AssignPolicy::nearest_in_ring ? ring_heads[node.ring] : a.head_ids;
        if (candidates.empty()) {
            // Headless ring under the in-ring policy: uplink straight to the BS.
            a.head_of[node.id] = -1;
            a.dist_to_head_m[node.id] = node.dist_to_bs_m;
            ++a.fallback_members;
            continue;
        }
        int best = -1;
        double best_d2 = std::numeric_limits<double>::infinity();
        for (int head : candidates) {
            const double dx = node.x_m - deployment.nodes[head].x_m;
            const double dy = node.y_m - deployment.nodes[head].y_m;
            const double d2 = dx * dx + dy * dy;
            // Ties go to the lower head id; candidates are ascending.
            if (d2 < best_d2) {
                best_d2 = d2;
                best = head;
            }
        }
        a.head_of[node.id] = best;
        a.dist_to_head_m[node.id] = std::sqrt(best_d2);
    }
    return a;
}

RoundOutcome simulate_round(const Deployment& deployment, const Assignment& assignment,
                            const RadioParams& radio, BranchMode branch) {
    const std::size_t n = deployment.nodes.size();
    if (assignment.head_of.size() != n || assignment.dist_to_head_m.size() != n)
        throw std::invalid_argument("simulate_round: assignment does not match deployment");
    validate(radio);

    RoundOutcome out;
    out.branch = branch;
    out.node_energy_j.assign(n, 0.0);
    out.cluster_sizes.assign(assignment.head_ids.size(), 0);
    out.rings.assign(deployment.config.ring_count, RingBreakdown{});
    out.fallback_members = assignment.fallback_members;

    // Head index in head_ids order, for membership counting.
    std::vector<int> head_slot(n, -1);
    for (std::size_t slot = 0; slot < assignment.head_ids.size(); ++slot)
        head_slot[assignment.head_ids[slot]] = static_cast<int>(slot);

    const double l = radio.packet_bits;
    const TxMode member_mode =
        branch == BranchMode::paper_faithful ? TxMode::force_free_space : TxMode::thresholded;
    const TxMode head_mode =
        branch == BranchMode::paper_faithful ? TxMode::force_multipath : TxMode::thresholded;

    // Members first, so cluster sizes are known before heads are charged.
    for (const Node& node : deployment.nodes) {
        const int head = assignment.head_of[node.id];
        if (head == node.id) continue;
        RingBreakdown& ring = out.rings[node.ring];
        ++ring.members;
        double energy = 0.0;
        if (head < 0) {
            // Fallback member: direct BS uplink, thresholded regardless of mode.
            energy = tx_energy(radio, l, node.dist_to_bs_m, TxMode::thresholded);
            ++ring.fallback_members;
        } else {
            energy = tx_energy(radio, l, assignment.dist_to_head_m[node.id], member_mode);
            ++out.cluster_sizes[head_slot[head]];
        }
        out.node_energy_j[node.id] = energy;
        ring.member_j += energy;
        ring.electronics_j += l * radio.e_elec;  // amplifier part excluded
    }

    for (std::size_t slot = 0; slot < assignment.head_ids.size(); ++slot) {
        const Node& node = deployment.nodes[assignment.head_ids[slot]];
        const double members = out.cluster_sizes[slot];
        const double receive = members * rx_energy(radio, l);
        const double aggregate = aggregation_energy(radio, l, members + 1.0);
        const double uplink = tx_energy(radio, l, node.dist_to_bs_m, head_mode);
        const double energy = receive + aggregate + uplink;
        out.node_energy_j[node.id] = energy;
        RingBreakdown& ring = out.rings[node.ring];
        ++ring.heads;
        ring.head_j += energy;
        ring.electronics_j += receive + aggregate + l * radio.e_elec;
    }

    for (RingBreakdown& ring : out.rings) {
        ring.total_j = ring.head_j + ring.member_j;
        out.total_j += ring.total_j;
    }
    return out;
}

std::vector<MomentEstimate> estimate_moments(const NetworkConfig& config,
                                             const std::vector<double>& k_per_ring,
                                             long samples, std::uint64_t seed) {
    validate(config);
    if (static_cast<int>(k_per_ring.size()) != config.ring_count)
        throw std::invalid_argument("estimate_moments: need one k per ring");
    if (samples < 2) throw std::domain_error("estimate_moments: need at least 2 samples");

    std::vector<MomentEstimate> estimates;
    estimates.reserve(config.ring_count);
    for (int ring = 0; ring < config.ring_count; ++ring) {
        const Ring r = make_ring(config, ring);
        const double k = k_per_ring[ring];
        MomentEstimate est;
        est.ring = ring;
        est.k = k;
        est.samples = samples;
        est.z2_closed_m2 = mean_sq_dist_to_head_m2(r, k);
        est.y4_closed_m4 = mean_quad_dist_to_bs_m4(r);

        // Z: uniform over a disk of the equal-area cluster radius.
        const double cluster_r = cluster_radius_m(r, k);
        std::mt19937_64 z_rng(derive_seed(seed, 2 * static_cast<std::uint64_t>(ring)));
        double z_sum = 0.0, z_ss = 0.0;
        for (long s = 0; s < samples; ++s) {
            const double z2 = cluster_r * cluster_r * uniform01(z_rng);  // d = a sqrt(u)
            z_sum += z2;
            z_ss += z2 * z2;
        }
        const double ns = static_cast<double>(samples);
        est.z2_mean_m2 = z_sum / ns;
        est.z2_se_m2 = std::sqrt(std::max(0.0, (z_ss - ns * est.z2_mean_m2 * est.z2_mean_m2) /
                                                   (ns - 1.0)) /
                                 ns);

        // Y: uniform over the ring annulus, by area inversion.
        const double in2 = r.inner_radius_m * r.inner_radius_m;
        const double out2 = r.outer_radius_m * r.outer_radius_m;
        std::mt19937_64 y_rng(derive_seed(seed, 2 * static_cast<std::uint64_t>(ring) + 1));
        double y_sum = 0.0, y_ss = 0.0;
        for (long s = 0; s < samples; ++s) {
            const double d2 = in2 + (out2 - in2) * uniform01(y_rng);
            const double y4 = d2 * d2;
            y_sum += y4;
            y_ss += y4 * y4;
        }
        est.y4_mean_m4 = y_sum / ns;
        est.y4_se_m4 = std::sqrt(std::max(0.0, (y_ss - ns * est.y4_mean_m4 * est.y4_mean_m4) /
                                                   (ns - 1.0)) /
                                 ns);
        estimates.push_back(est);
    }
    return estimates;
}

TrialSummary run_trials(const NetworkConfig& config, const RadioParams& radio, ModelKind model,
                        int trials, std::uint64_t base_seed, AssignPolicy policy,
                        BranchMode branch, int threads) {
    validate(config);
    validate(radio);
    if (trials < 1) throw std::domain_error("run_trials: trials must be >= 1");

    const int rings = config.ring_count;
    std::vector<double> probability(rings);
    for (int ring = 0; ring < rings; ++ring)
        probability[ring] = election_probability(config, radio, ring, model);

    // One row per trial per column; reduced in trial order afterwards, so the
    // result is independent of how trials were scheduled across threads.
    struct Columns {
        std::vector<std::vector<double>> total, head, member, electronics, heads, nodes, fallback;
        std::vector<double> network;
        explicit Columns(int rings, int trials)
            : total(rings, std::vector<double>(trials)),
              head(rings, std::vector<double>(trials)),
              member(rings, std::vector<double>(trials)),
              electronics(rings, std::vector<double>(trials)),
              heads(rings, std::vector<double>(trials)),
              nodes(rings, std::vector<double>(trials)),
              fallback(rings, std::vector<double>(trials)),
              network(trials) {}
    };
    Columns columns(rings, trials);

    const auto run_one = [&](int trial) {
        const std::uint64_t trial_seed = derive_seed(base_seed, static_cast<std::uint64_t>(trial));
        const Deployment d = deploy(config, derive_seed(trial_seed, 0));
        const auto heads = elect_heads(d, probability, derive_seed(trial_seed, 1));
        const Assignment assignment = assign_members(d, heads, policy);
        const RoundOutcome outcome = simulate_round(d, assignment, radio, branch);
        for (int ring = 0; ring < rings; ++ring) {
            const RingBreakdown& b = outcome.rings[ring];
            columns.total[ring][trial] = b.total_j;
            columns.head[ring][trial] = b.head_j;
            columns.member[ring][trial] = b.member_j;
            columns.electronics[ring][trial] = b.electronics_j;
            columns.heads[ring][trial] = b.heads;
            columns.nodes[ring][trial] = d.ring_node_count[ring];
            columns.fallback[ring][trial] = b.fallback_members;
        }
        columns.network[trial] = outcome.total_j;
    };

    int workers = threads;
    if (workers <= 0) {
        workers = static_cast<int>(std::thread::hardware_concurrency());
        if (workers < 1) workers = 1;
    }
    workers = std::min(workers, trials);
    if (workers <= 1) {
        for (int trial = 0; trial < trials; ++trial) run_one(trial);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (int trial = w; trial < trials; trial += workers) run_one(trial);
            });
        }
        for (std::thread& t : pool) t.join();
    }

    TrialSummary summary;
    summary.model = model;
    summary.policy = policy;
    summary.branch = branch;
    summary.trials = trials;
    summary.base_seed = base_seed;
    summary.ring_probability = probability;
    summary.binomial_heads.resize(rings);
    for (int ring = 0; ring < rings; ++ring)
        summary.binomial_heads[ring] = probability[ring] * config.expected_nodes(ring);
    summary.total_j.resize(rings);
    summary.head_j.resize(rings);
    summary.member_j.resize(rings);
    summary.electronics_j.resize(rings);
    summary.head_count.resize(rings);
    summary.node_count.resize(rings);
    summary.fallback_members.resize(rings);
    for (int ring = 0; ring < rings; ++ring) {
        summary.total_j[ring] = reduce(columns.total[ring]);
        summary.head_j[ring] = reduce(columns.head[ring]);
        summary.member_j[ring] = reduce(columns.member[ring]);
        summary.electronics_j[ring] = reduce(columns.electronics[ring]);
        summary.head_count[ring] = reduce(columns.heads[ring]);
        summary.node_count[ring] = reduce(columns.nodes[ring]);
        summary.fallback_members[ring] = reduce(columns.fallback[ring]);
    }
    summary.network_total_j = reduce(columns.network);
    return summary;
}

}  // namespace ringcluster
