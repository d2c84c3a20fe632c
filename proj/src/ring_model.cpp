#include "ringcluster/ring_model.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace ringcluster {

double NetworkConfig::network_radius_m() const {
    return std::sqrt(area_m2 / std::numbers::pi);
}

double NetworkConfig::ring_width_m() const {
    return network_radius_m() / ring_count;
}

double NetworkConfig::expected_nodes(int ring) const {
    const double m = ring_count;
    return node_count * (2.0 * ring + 1.0) / (m * m);
}

void validate(const NetworkConfig& config) {
    if (config.node_count < 1) throw std::domain_error("config: node_count must be >= 1");
    if (!(config.area_m2 > 0.0)) throw std::domain_error("config: area_m2 must be positive");
    if (config.ring_count < 1) throw std::domain_error("config: ring_count must be >= 1");
    if (!(config.epem_p > 0.0) || config.epem_p > 1.0)
        throw std::domain_error("config: epem_p must be in (0, 1]");
}

namespace {

void require_ring_index(const NetworkConfig& config, int ring) {
    if (ring < 0 || ring >= config.ring_count) {
        throw std::out_of_range("ring index " + std::to_string(ring) + " outside [0, " +
                                std::to_string(config.ring_count) + ")");
    }
}

// x^6 via squaring; exact in doubles for every realistic ring count.
double pow6(double x) {
    const double x2 = x * x;
    return x2 * x2 * x2;
}

}  // namespace

Ring make_ring(const NetworkConfig& config, int ring) {
    require_ring_index(config, ring);
    const double width = config.ring_width_m();
    Ring r;
    r.index = ring;
    r.inner_radius_m = ring * width;
    r.outer_radius_m = (ring + 1) * width;
    r.width_m = width;
    r.area_m2 = std::numbers::pi * width * width * (2.0 * ring + 1.0);
    r.expected_nodes = config.expected_nodes(ring);
    return r;
}

int ring_of_distance(const NetworkConfig& config, double distance_m) {
    const double radius = config.network_radius_m();
    if (!(distance_m >= 0.0) || distance_m > radius) {
        throw std::domain_error("distance " + std::to_string(distance_m) +
                                " m outside the network disk [0, " + std::to_string(radius) +
                                "]");
    }
    const int ring = static_cast<int>(distance_m / config.ring_width_m());
    return ring >= config.ring_count ? config.ring_count - 1 : ring;
}

double mean_sq_dist_to_head_m2(const Ring& ring, double k) {
    if (!(k > 0.0)) throw std::domain_error("mean_sq_dist_to_head: k must be positive");
    return ring.width_m * ring.width_m * (2.0 * ring.index + 1.0) / (2.0 * k);
}

double mean_quad_dist_to_bs_m4(const Ring& ring) {
    const double w2 = ring.width_m * ring.width_m;
    const double sixth_diff = pow6(ring.index + 1.0) - pow6(static_cast<double>(ring.index));
    return w2 * w2 * sixth_diff / (3.0 * (2.0 * ring.index + 1.0));
}

double cluster_radius_m(const Ring& ring, double k) {
    if (!(k > 0.0)) throw std::domain_error("cluster_radius: k must be positive");
    return ring.width_m * std::sqrt((2.0 * ring.index + 1.0) / k);
}

}  // namespace ringcluster
