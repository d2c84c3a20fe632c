#pragma once
#include <stdexcept>

namespace ringcluster {

// Disk-shaped field with the base station at the center, divided into
// ring_count concentric rings of equal width.  Ring indices are zero-based
// in code; report output labels them 1-based.
struct NetworkConfig {
    int node_count = 500;     // N, deployed uniformly over the disk
    double area_m2 = 250000.0;
    int ring_count = 10;      // M
    double epem_p = 0.05;     // fixed election probability of the EPEM model

    double network_radius_m() const;  // sqrt(area / pi)
    double ring_width_m() const;      // network_radius / ring_count
    // Expected population of ring i under uniform deployment: N(2i+1)/M^2.
    double expected_nodes(int ring) const;
};

// Throws std::domain_error on non-positive counts/area or epem_p outside (0, 1].
void validate(const NetworkConfig& config);

struct Ring {
    int index = 0;             // zero-based
    double inner_radius_m = 0.0;  // index * width
    double outer_radius_m = 0.0;  // (index + 1) * width
    double width_m = 0.0;
    double area_m2 = 0.0;         // pi * width^2 * (2i + 1)
    double expected_nodes = 0.0;  // N(2i+1)/M^2
};

// Throws std::out_of_range for ring outside [0, ring_count).
Ring make_ring(const NetworkConfig& config, int ring);

// Ring containing a point at `distance_m` from the base station.  The outer
// boundary of the last ring is inclusive.  Throws std::domain_error outside
// [0, network_radius].
int ring_of_distance(const NetworkConfig& config, double distance_m);

// Expected squared member-to-head distance when the ring is split into k
// equal-area circular clusters: width^2 (2i+1) / (2k).
double mean_sq_dist_to_head_m2(const Ring& ring, double k);

// Expected fourth power of distance to the base station for a point uniform
// over the ring annulus: width^4 ((i+1)^6 - i^6) / (3(2i+1)).
double mean_quad_dist_to_bs_m4(const Ring& ring);

// Radius of one of k equal-area clusters covering the ring:
// width * sqrt((2i+1)/k).
double cluster_radius_m(const Ring& ring, double k);

}  // namespace ringcluster
