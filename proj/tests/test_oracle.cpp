#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "euorient/engine.hpp"
#include "euorient/oracle.hpp"

using namespace euorient;
using namespace euorient::oracle;

namespace {

std::string encode(const RotationMap& m) {
    std::ostringstream ss;
    ss << m.n_vertices << "|";
    for (size_t i = 0; i < m.sigma.size(); i++) ss << m.sigma[i] << "," << m.alpha[i] << ";";
    return ss.str();
}

std::vector<RotationMap> all_maps(int n) {
    std::vector<RotationMap> out;
    enumerate_rooted_planar_maps(n, {}, [&](const RotationMap& m) { out.push_back(m); });
    return out;
}

} // namespace

TEST_CASE("one-edge maps: the loop and the bridge") {
    auto maps = all_maps(1);
    REQUIRE(maps.size() == 2);
    int loops = 0, bridges = 0;
    for (const auto& m : maps) {
        if (m.n_vertices == 1) {
            loops++;
            CHECK(count_eulerian_orientations(m) == 2); // both directions valid
        } else {
            bridges++;
            CHECK(m.n_vertices == 2);
            CHECK(count_eulerian_orientations(m) == 0); // odd degrees
        }
    }
    CHECK(loops == 1);
    CHECK(bridges == 1);
}

TEST_CASE("rooted planar map counts match the closed form 2*3^n (2n)!/(n!(n+2)!)") {
    // 1, 2, 9, 54, 378, 2916
    const uint64_t want[] = {1, 2, 9, 54, 378, 2916};
    for (int n = 0; n <= 5; n++) CHECK(count_rooted_maps(n) == want[n]);
}

TEST_CASE("every emitted map satisfies the type invariants and is canonical") {
    for (int n = 1; n <= 4; n++) {
        std::set<std::string> seen;
        enumerate_rooted_planar_maps(n, {}, [&](const RotationMap& m) {
            CHECK(valid_involution(m));
            CHECK(is_transitive(m));
            CHECK(is_planar(m));
            RotationMap canon = canonicalize(m);
            CHECK(canon == m); // emitted in canonical form
            CHECK(canonicalize(canon) == canon);
            CHECK(seen.insert(encode(m)).second); // no duplicates
        });
    }
}

TEST_CASE("canonicalize is invariant under dart relabeling") {
    // rotate the double-edge map's dart labels and check the canonical
    // form comes back unchanged
    RotationMap m;
    m.n_edges = 2;
    m.n_vertices = 2;
    m.sigma = {1, 0, 3, 2};
    m.alpha = {2, 3, 0, 1};
    m.vert = {0, 0, 1, 1};
    REQUIRE(valid_involution(m));
    REQUIRE(is_planar(m));
    RotationMap c1 = canonicalize(m);
    RotationMap relab;
    relab.n_edges = 2;
    relab.n_vertices = 2;
    // swap the two darts at the far vertex (same map, different labels)
    relab.sigma = {1, 0, 3, 2};
    relab.alpha = {3, 2, 1, 0};
    relab.vert = {0, 0, 1, 1};
    REQUIRE(valid_involution(relab));
    CHECK(canonicalize(relab) == c1);
}

TEST_CASE("oracle_U small values") {
    CHECK(oracle_U(0) == 1);
    CHECK(oracle_U(1) == 2);  // the rooted loop, two directions
    CHECK(oracle_U(2) == 10); // two-loop maps (2x4) + double edge (1x2)
}

TEST_CASE("oracle_A(1) = 8: two one-vertex 4-regular maps, four orientations each") {
    CHECK(oracle_A(0) == 1);
    CHECK(oracle_A(1) == 8);
}

TEST_CASE("oracle_eulerian_maps matches the M(t) closed form") {
    auto mt = mt_series_exact(4); // 1, 1, 3, 12, 56
    CHECK(mt[0] == 1);
    CHECK(mt[1] == 1);
    CHECK(mt[2] == 3);
    CHECK(mt[3] == 12);
    CHECK(mt[4] == 56);
    for (int n = 0; n <= 4; n++) CHECK(BigInt(oracle_eulerian_maps(n)) == mt[n]);
}

TEST_CASE("enumeration limit") {
    CHECK_THROWS_AS(all_maps(kMaxOracleEdges + 1), LimitExceeded);
}
