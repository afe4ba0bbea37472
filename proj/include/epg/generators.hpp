#pragma once

#include <cstdint>

#include "epg/graph.hpp"

namespace epg {

// Sun over an n-clique: hub vertices x_i = 1..n, rays y_i = n+i with
// y_i adjacent to x_i and x_{i+1} (indices wrap). Requires n >= 3.
Graph gen_nsun(int n);

Graph gen_cycle(int r);  // r >= 3
Graph gen_path(int n);   // n >= 1

Graph gen_m1();
Graph gen_m2();
Graph gen_m3();

// Two diagonalized 4-cycles joined by a chain of ell triangles; ell = 0
// merges the two attachment vertices. Requires ell >= 0.
Graph gen_m1_ell(int ell);

// Same family with either diagonal per 4-cycle; used by the direct
// obstruction detectors, since attachment degree differs per diagonal.
Graph gen_m1_ell_variant(int ell, bool diag_a_through_attach, bool diag_b_through_attach);

// All three are pure functions of (n, seed).
Graph gen_rand_maximal_outerplanar(int n, std::uint64_t seed);  // n >= 3
Graph gen_rand_cactus(int n, std::uint64_t seed);               // n >= 1
Graph gen_rand_connected_outerplanar(int n, std::uint64_t seed);  // n >= 1

}  // namespace epg
