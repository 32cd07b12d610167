#pragma once

#include "wagon/graph.hpp"

#include <string>
#include <vector>

namespace wagon {

/// Named reference graphs used throughout the test harness.
///
///   mycielski_grotzsch  11-vertex, 20-edge Mycielski construction over C5:
///                       outer cycle v1..v5, shadows u1..u5 (u_i adjacent to
///                       the cycle neighbours of v_i), apex w adjacent to all
///                       u_i. Triangle-free with chromatic number 4.
///   fig3_w3x4           triangle A = {1,2,3} plus two rows of four vertices;
///                       row N_i is attached to clique vertex i only, and the
///                       rows carry a fixed matching pattern. Clique number 3,
///                       chromatic number 4.
///   fig5_base           outer 5-cycle BL,L,T,R,BR plus a centre adjacent to
///                       BL, BR and T. 2K2-free and diamond-free, imperfect,
///                       with clique number = chromatic number = 3.
Graph fixture(const std::string& name);

std::vector<std::string> fixture_names();

/// fig5_base with each of L, T, R multiplied by an independent set of size k.
Graph fig5_blow_up(int k);

} // namespace wagon
