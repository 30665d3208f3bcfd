#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "euorient/errors.hpp"

namespace euorient {
namespace oracle {

// Rooted combinatorial map as a rotation system on darts. sigma is the
// rotation at each vertex, alpha the fixed-point-free pairing of darts
// into edges, dart 0 the root. Genus 0 is a property checked via Euler's
// formula, not an invariant of the container.
struct RotationMap {
    int n_edges = 0;
    int n_vertices = 1;
    std::vector<int> sigma; // dart -> next dart around its vertex
    std::vector<int> alpha; // dart -> opposite dart of the same edge
    std::vector<int> vert;  // dart -> vertex id
    int root_dart = 0;

    friend bool operator==(const RotationMap& x, const RotationMap& y) {
        return x.n_edges == y.n_edges && x.n_vertices == y.n_vertices && x.sigma == y.sigma &&
               x.alpha == y.alpha && x.vert == y.vert && x.root_dart == y.root_dart;
    }
};

bool valid_involution(const RotationMap& m);
bool is_transitive(const RotationMap& m);
int face_count(const RotationMap& m);
bool is_planar(const RotationMap& m); // Euler: V - E + F = 2
std::vector<int> vertex_degrees(const RotationMap& m);

// Relabel darts by breadth-first traversal from the root dart; a map is
// emitted by the generator iff it equals its own canonical form.
RotationMap canonicalize(const RotationMap& m);

struct VertexPredicate {
    // final acceptance on the full degree vector; null accepts everything
    std::function<bool(const std::vector<int>&)> accept;
    int degree_cap = 0;   // prune any vertex exceeding this degree (0 = off)
    int max_vertices = 0; // prune once more vertices appear (0 = off)
};

constexpr int kMaxOracleEdges = 7;

// Yields each rooted planar map with n_edges exactly once, in canonical
// labeling, built by incremental canonical construction (vertices in
// discovery order, rotations read from the discovery dart).
void enumerate_rooted_planar_maps(int n_edges, const VertexPredicate& pred,
                                  const std::function<void(const RotationMap&)>& emit);

// Direction assignments with in-degree = out-degree everywhere; 0 when a
// vertex has odd degree. A loop contributes one in and one out whichever
// way its bit points, so it doubles the count without moving budgets.
uint64_t count_eulerian_orientations(const RotationMap& m);

uint64_t count_rooted_maps(int n_edges); // all rooted planar maps (Tutte check)

uint64_t oracle_U(int n_edges);
uint64_t oracle_A(int n_vertices);
uint64_t oracle_eulerian_maps(int n_edges);

} // namespace oracle
} // namespace euorient
