#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"
#include "ringcluster/rng.hpp"
#include "ringcluster/simulator.hpp"

using namespace ringcluster;

namespace {
const NetworkConfig kConfig;
const RadioParams kRadio;

std::vector<double> uepem_probabilities(const NetworkConfig& config, const RadioParams& radio) {
    std::vector<double> p;
    for (int i = 0; i < config.ring_count; ++i)
        p.push_back(election_probability(config, radio, i, ModelKind::uepem));
    return p;
}
}  // namespace

TEST_CASE("seed derivation and the uniform mapping") {
    // Reference SplitMix64 vector (seed 0).
    std::uint64_t state = 0;
    const std::uint64_t first = splitmix64(state);
    CHECK(first == 0xE220A8397B1DCDAFULL);
    CHECK(state == 0x9E3779B97F4A7C15ULL);

    CHECK(derive_seed(1, 0) == derive_seed(1, 0));
    CHECK(derive_seed(1, 0) != derive_seed(1, 1));
    CHECK(derive_seed(1, 0) != derive_seed(2, 0));

    std::mt19937_64 rng(7);
    for (int i = 0; i < 1000; ++i) {
        const double u = uniform01(rng);
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("deployment is deterministic and geometrically consistent") {
    const Deployment a = deploy(kConfig, 42);
    const Deployment b = deploy(kConfig, 42);
    const Deployment c = deploy(kConfig, 43);

    REQUIRE(a.nodes.size() == 500);
    bool same = true;
    bool different = false;
    for (std::size_t i = 0; i < a.nodes.size(); ++i) {
        same = same && a.nodes[i].x_m == b.nodes[i].x_m && a.nodes[i].y_m == b.nodes[i].y_m;
        different = different || a.nodes[i].x_m != c.nodes[i].x_m;
    }
    CHECK(same);
    CHECK(different);

    int counted[10] = {0};
    const double radius = kConfig.network_radius_m();
    for (const Node& node : a.nodes) {
        CHECK(node.id == &node - a.nodes.data());
        const double dist = std::hypot(node.x_m, node.y_m);
        CHECK(dist == doctest::Approx(node.dist_to_bs_m).epsilon(1e-12));
        CHECK(node.dist_to_bs_m <= radius);
        CHECK(node.ring == ring_of_distance(kConfig, node.dist_to_bs_m));
        ++counted[node.ring];
    }
    int total = 0;
    for (int i = 0; i < 10; ++i) {
        CHECK(a.ring_node_count[i] == counted[i]);
        total += counted[i];
    }
    CHECK(total == 500);

    // Radius inversion puts mass where area is: E[d^2] = R^2 / 2.  A loose
    // band is enough for one seeded draw of 500 points.
    double mean_d2 = 0.0;
    for (const Node& node : a.nodes) mean_d2 += node.dist_to_bs_m * node.dist_to_bs_m;
    mean_d2 /= 500.0;
    CHECK(mean_d2 / (radius * radius) == doctest::Approx(0.5).epsilon(0.1));
}

TEST_CASE("head election follows the per-ring probabilities") {
    const Deployment deployment = deploy(kConfig, 7);

    std::vector<double> all(10, 1.0), none(10, 0.0);
    const auto everyone = elect_heads(deployment, all, 3);
    const auto nobody = elect_heads(deployment, none, 3);
    CHECK(std::count(everyone.begin(), everyone.end(), 1) == 500);
    CHECK(std::count(nobody.begin(), nobody.end(), 1) == 0);

    const auto p = uepem_probabilities(kConfig, kRadio);
    const auto heads = elect_heads(deployment, p, 3);
    CHECK(heads == elect_heads(deployment, p, 3));
    CHECK(heads != elect_heads(deployment, p, 4));
    // Ring 1 elects with probability one: every ring-1 node is a head.
    for (const Node& node : deployment.nodes)
        if (node.ring == 0) CHECK(heads[node.id] == 1);

    CHECK_THROWS_AS(elect_heads(deployment, std::vector<double>(9, 0.5), 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(elect_heads(deployment, std::vector<double>(10, 1.5), 3), std::domain_error);
    CHECK_THROWS_AS(elect_heads(deployment, std::vector<double>(10, -0.1), 3), std::domain_error);
}

TEST_CASE("global assignment is the Voronoi rule with lowest-id ties") {
    const Deployment deployment = deploy(kConfig, 99);
    const auto heads = elect_heads(deployment, uepem_probabilities(kConfig, kRadio), 7);
    const Assignment assignment = assign_members(deployment, heads, AssignPolicy::nearest_global);

    REQUIRE(!assignment.head_ids.empty());
    CHECK(std::is_sorted(assignment.head_ids.begin(), assignment.head_ids.end()));
    CHECK(assignment.fallback_members == 0);  // global policy never falls back

    for (const Node& node : deployment.nodes) {
        if (heads[node.id]) {
            CHECK(assignment.head_of[node.id] == node.id);
            CHECK(assignment.dist_to_head_m[node.id] == 0.0);
            continue;
        }
        // Brute force the nearest head; ties resolve to the lower id.
        int best = -1;
        double best_d2 = 0.0;
        for (int head : assignment.head_ids) {
            const double dx = node.x_m - deployment.nodes[head].x_m;
            const double dy = node.y_m - deployment.nodes[head].y_m;
            const double d2 = dx * dx + dy * dy;
            if (best < 0 || d2 < best_d2) {
                best = head;
                best_d2 = d2;
            }
        }
        CHECK(assignment.head_of[node.id] == best);
        CHECK(assignment.dist_to_head_m[node.id] ==
              doctest::Approx(std::sqrt(best_d2)).epsilon(1e-12));
    }
}

TEST_CASE("in-ring assignment stays inside the ring and falls back when empty") {
    const Deployment deployment = deploy(kConfig, 11);

    // Heads only in ring 1: everyone else falls back to a direct BS uplink.
    std::vector<double> inner_only(10, 0.0);
    inner_only[0] = 1.0;
    const auto heads = elect_heads(deployment, inner_only, 5);
    const Assignment assignment = assign_members(deployment, heads, AssignPolicy::nearest_in_ring);

    const int outside = 500 - deployment.ring_node_count[0];
    CHECK(assignment.fallback_members == outside);
    for (const Node& node : deployment.nodes) {
        if (node.ring == 0) continue;
        CHECK(assignment.head_of[node.id] == -1);
        CHECK(assignment.dist_to_head_m[node.id] == node.dist_to_bs_m);
    }

    // With heads everywhere, every member's head shares its ring.
    const auto p = uepem_probabilities(kConfig, kRadio);
    const auto heads2 = elect_heads(deployment, p, 5);
    const Assignment in_ring = assign_members(deployment, heads2, AssignPolicy::nearest_in_ring);
    for (const Node& node : deployment.nodes) {
        const int head = in_ring.head_of[node.id];
        if (head >= 0 && head != node.id)
            CHECK(deployment.nodes[head].ring == node.ring);
    }

    // No heads at all is an error, not a silent all-fallback round.
    const std::vector<std::uint8_t> no_heads(500, 0);
    CHECK_THROWS_AS(assign_members(deployment, no_heads, AssignPolicy::nearest_in_ring),
                    std::runtime_error);
    CHECK_THROWS_AS(assign_members(deployment, no_heads, AssignPolicy::nearest_global),
                    std::runtime_error);
}

TEST_CASE("round energies decompose exactly") {
    const Deployment deployment = deploy(kConfig, 3);
    const auto heads = elect_heads(deployment, uepem_probabilities(kConfig, kRadio), 9);
    const Assignment assignment = assign_members(deployment, heads, AssignPolicy::nearest_in_ring);
    const RoundOutcome outcome =
        simulate_round(deployment, assignment, kRadio, BranchMode::paper_faithful);

    const double l = kRadio.packet_bits;

    double node_sum = 0.0;
    for (double e : outcome.node_energy_j) node_sum += e;
    CHECK(outcome.total_j == doctest::Approx(node_sum).epsilon(1e-9));

    double ring_sum = 0.0;
    int head_total = 0, member_total = 0, fallback_total = 0;
    for (const RingBreakdown& ring : outcome.rings) {
        CHECK(ring.total_j == doctest::Approx(ring.head_j + ring.member_j).epsilon(1e-9));
        CHECK(ring.electronics_j <= ring.total_j);
        ring_sum += ring.total_j;
        head_total += ring.heads;
        member_total += ring.members;
        fallback_total += ring.fallback_members;
    }
    CHECK(outcome.total_j == doctest::Approx(ring_sum).epsilon(1e-9));
    CHECK(head_total == static_cast<int>(assignment.head_ids.size()));
    CHECK(head_total + member_total == 500);
    CHECK(fallback_total == assignment.fallback_members);
    CHECK(outcome.fallback_members == assignment.fallback_members);

    int members_in_clusters = 0;
    for (int size : outcome.cluster_sizes) members_in_clusters += size;
    CHECK(members_in_clusters == member_total - fallback_total);

    // Spot-check the charges node by node against the radio model.
    for (const Node& node : deployment.nodes) {
        const int head = assignment.head_of[node.id];
        if (head == node.id) continue;  // heads checked below
        const double expected =
            head < 0 ? tx_energy(kRadio, l, node.dist_to_bs_m, TxMode::thresholded)
                     : tx_energy(kRadio, l, assignment.dist_to_head_m[node.id],
                                 TxMode::force_free_space);
        CHECK(outcome.node_energy_j[node.id] == doctest::Approx(expected).epsilon(1e-12));
    }
    for (std::size_t slot = 0; slot < assignment.head_ids.size(); ++slot) {
        const Node& node = deployment.nodes[assignment.head_ids[slot]];
        const double members = outcome.cluster_sizes[slot];
        const double expected = members * rx_energy(kRadio, l) +
                                aggregation_energy(kRadio, l, members + 1.0) +
                                tx_energy(kRadio, l, node.dist_to_bs_m, TxMode::force_multipath);
        CHECK(outcome.node_energy_j[node.id] == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("thresholded rounds charge every link by its distance") {
    const Deployment deployment = deploy(kConfig, 3);
    const auto heads = elect_heads(deployment, uepem_probabilities(kConfig, kRadio), 9);
    const Assignment assignment = assign_members(deployment, heads, AssignPolicy::nearest_global);
    const RoundOutcome outcome =
        simulate_round(deployment, assignment, kRadio, BranchMode::thresholded);

    const double l = kRadio.packet_bits;
    for (const Node& node : deployment.nodes) {
        const int head = assignment.head_of[node.id];
        if (head == node.id) continue;
        const double dist = head < 0 ? node.dist_to_bs_m : assignment.dist_to_head_m[node.id];
        CHECK(outcome.node_energy_j[node.id] ==
              doctest::Approx(tx_energy(kRadio, l, dist, TxMode::thresholded)).epsilon(1e-12));
    }
    for (std::size_t slot = 0; slot < assignment.head_ids.size(); ++slot) {
        const Node& node = deployment.nodes[assignment.head_ids[slot]];
        const double members = outcome.cluster_sizes[slot];
        const double expected = members * rx_energy(kRadio, l) +
                                aggregation_energy(kRadio, l, members + 1.0) +
                                tx_energy(kRadio, l, node.dist_to_bs_m, TxMode::thresholded);
        CHECK(outcome.node_energy_j[node.id] == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("a lone self-elected node pays aggregation and uplink only") {
    NetworkConfig tiny;
    tiny.node_count = 1;
    tiny.ring_count = 1;
    tiny.epem_p = 1.0;
    const Deployment deployment = deploy(tiny, 5);
    const auto heads = elect_heads(deployment, {1.0}, 5);
    const Assignment assignment = assign_members(deployment, heads, AssignPolicy::nearest_global);
    const RoundOutcome outcome =
        simulate_round(deployment, assignment, kRadio, BranchMode::paper_faithful);

    const double expected =
        aggregation_energy(kRadio, kRadio.packet_bits, 1.0) +
        tx_energy(kRadio, kRadio.packet_bits, deployment.nodes[0].dist_to_bs_m,
                  TxMode::force_multipath);
    CHECK(outcome.total_j == doctest::Approx(expected).epsilon(1e-12));
    CHECK(outcome.cluster_sizes == std::vector<int>{0});
}

TEST_CASE("moment estimates agree with the closed forms") {
    std::vector<double> k_per_ring;
    for (int i = 0; i < 10; ++i) k_per_ring.push_back(k_opt(kConfig, kRadio, i));

    const auto moments = estimate_moments(kConfig, k_per_ring, 1000000, 7);
    REQUIRE(moments.size() == 10);
    for (const MomentEstimate& m : moments) {
        CHECK(m.samples == 1000000);
        CHECK(std::abs(m.z2_mean_m2 - m.z2_closed_m2) < 3.0 * m.z2_se_m2);
        CHECK(std::abs(m.y4_mean_m4 - m.y4_closed_m4) < 3.0 * m.y4_se_m4);
        CHECK(std::abs(m.z2_mean_m2 - m.z2_closed_m2) / m.z2_closed_m2 < 0.01);
        CHECK(std::abs(m.y4_mean_m4 - m.y4_closed_m4) / m.y4_closed_m4 < 0.01);
        CHECK(m.z2_se_m2 > 0.0);
        CHECK(m.y4_se_m4 > 0.0);
    }

    // Same seed, same numbers; different seed, different numbers.
    const auto again = estimate_moments(kConfig, k_per_ring, 10000, 7);
    const auto other = estimate_moments(kConfig, k_per_ring, 10000, 8);
    const auto third = estimate_moments(kConfig, k_per_ring, 10000, 7);
    CHECK(again[0].z2_mean_m2 == third[0].z2_mean_m2);
    CHECK(again[0].z2_mean_m2 != other[0].z2_mean_m2);

    CHECK_THROWS_AS(estimate_moments(kConfig, k_per_ring, 1, 7), std::domain_error);
    CHECK_THROWS_AS(estimate_moments(kConfig, {1.0, 2.0}, 100, 7), std::invalid_argument);
}

TEST_CASE("trial aggregation is deterministic for any worker count") {
    const auto one = run_trials(kConfig, kRadio, ModelKind::uepem, 16, 1,
                                AssignPolicy::nearest_in_ring, BranchMode::paper_faithful, 1);
    const auto four = run_trials(kConfig, kRadio, ModelKind::uepem, 16, 1,
                                 AssignPolicy::nearest_in_ring, BranchMode::paper_faithful, 4);
    const auto many = run_trials(kConfig, kRadio, ModelKind::uepem, 16, 1,
                                 AssignPolicy::nearest_in_ring, BranchMode::paper_faithful, 13);
    for (int i = 0; i < 10; ++i) {
        CHECK(one.total_j[i].mean == four.total_j[i].mean);
        CHECK(one.total_j[i].sd == four.total_j[i].sd);
        CHECK(one.total_j[i].mean == many.total_j[i].mean);
        CHECK(one.head_count[i].mean == four.head_count[i].mean);
        CHECK(one.fallback_members[i].mean == four.fallback_members[i].mean);
    }
    CHECK(one.network_total_j.mean == four.network_total_j.mean);
    CHECK(one.network_total_j.sd == many.network_total_j.sd);
}

TEST_CASE("trial summary bookkeeping") {
    const auto summary = run_trials(kConfig, kRadio, ModelKind::uepem, 40, 1,
                                    AssignPolicy::nearest_global, BranchMode::paper_faithful, 0);
    CHECK(summary.trials == 40);
    CHECK(summary.model == ModelKind::uepem);
    REQUIRE(summary.total_j.size() == 10);

    // Ring populations are a fixed split of N in expectation.
    double node_mean_sum = 0.0;
    for (int i = 0; i < 10; ++i) node_mean_sum += summary.node_count[i].mean;
    CHECK(node_mean_sum == doctest::Approx(500.0).epsilon(1e-12));

    // Network mean is the sum of the per-ring means.
    double ring_mean_sum = 0.0;
    for (int i = 0; i < 10; ++i) ring_mean_sum += summary.total_j[i].mean;
    CHECK(summary.network_total_j.mean == doctest::Approx(ring_mean_sum).epsilon(1e-9));

    // The election-probability and binomial-mean columns come straight from
    // the plan: ring 1 elects everyone (5 expected), ring 10 about one head.
    CHECK(summary.ring_probability[0] == 1.0);
    CHECK(summary.binomial_heads[0] == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(summary.binomial_heads[9] == doctest::Approx(1.030177705519083).epsilon(1e-12));

    // Global assignment never produces fallback members.
    for (int i = 0; i < 10; ++i) CHECK(summary.fallback_members[i].mean == 0.0);

    // Realized head counts should hover near the binomial means.
    for (int i = 0; i < 10; ++i) {
        const double se = summary.head_count[i].se;
        CHECK(std::abs(summary.head_count[i].mean - summary.binomial_heads[i]) <=
              4.0 * se + 1e-12);
    }

    const auto single = run_trials(kConfig, kRadio, ModelKind::epem, 1, 9,
                                   AssignPolicy::nearest_global, BranchMode::paper_faithful, 1);
    CHECK(single.total_j[0].sd == 0.0);
    CHECK(single.total_j[0].se == 0.0);

    CHECK_THROWS_AS(run_trials(kConfig, kRadio, ModelKind::uepem, 0, 1,
                               AssignPolicy::nearest_global, BranchMode::paper_faithful, 1),
                    std::domain_error);
}
