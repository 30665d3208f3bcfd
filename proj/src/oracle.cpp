#include "euorient/oracle.hpp"

#include <algorithm>
#include <string>

namespace euorient {
namespace oracle {

bool valid_involution(const RotationMap& m) {
    int nd = (int)m.alpha.size();
    if (nd != 2 * m.n_edges) return false;
    for (int d = 0; d < nd; d++) {
        if (m.alpha[d] < 0 || m.alpha[d] >= nd) return false;
        if (m.alpha[d] == d || m.alpha[m.alpha[d]] != d) return false;
    }
    return true;
}

bool is_transitive(const RotationMap& m) {
    int nd = (int)m.sigma.size();
    if (nd == 0) return m.n_vertices == 1;
    std::vector<char> seen(nd, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
        int d = stack.back();
        stack.pop_back();
        for (int e : {m.sigma[d], m.alpha[d]}) {
            if (!seen[e]) {
                seen[e] = 1;
                cnt++;
                stack.push_back(e);
            }
        }
    }
    return cnt == nd;
}

int face_count(const RotationMap& m) {
    int nd = (int)m.sigma.size();
    if (nd == 0) return 1;
    std::vector<char> seen(nd, 0);
    int faces = 0;
    for (int d = 0; d < nd; d++) {
        if (seen[d]) continue;
        faces++;
        int e = d;
        do {
            seen[e] = 1;
            e = m.sigma[m.alpha[e]];
        } while (e != d);
    }
    return faces;
}

bool is_planar(const RotationMap& m) {
    return m.n_vertices - m.n_edges + face_count(m) == 2;
}

std::vector<int> vertex_degrees(const RotationMap& m) {
    std::vector<int> deg(m.n_vertices, 0);
    for (int v : m.vert) deg[v]++;
    return deg;
}

RotationMap canonicalize(const RotationMap& m) {
    int nd = (int)m.sigma.size();
    RotationMap out;
    out.n_edges = m.n_edges;
    out.n_vertices = m.n_vertices;
    out.root_dart = 0;
    if (nd == 0) return out;

    std::vector<int> newlab(nd, -1), vdisc(m.n_vertices, -1), vnew(m.n_vertices, -1);
    std::vector<int> queue; // discovery darts of discovered vertices, in order
    queue.push_back(m.root_dart);
    vdisc[m.vert[m.root_dart]] = m.root_dart;
    vnew[m.vert[m.root_dart]] = 0;
    int next_label = 0, next_vertex = 1;
    std::vector<int> order;
    order.reserve(nd);
    std::vector<int> block_start, block_len;
    for (size_t qi = 0; qi < queue.size(); qi++) {
        int start = queue[qi];
        block_start.push_back(next_label);
        int len = 0;
        int d = start;
        do {
            newlab[d] = next_label++;
            order.push_back(d);
            len++;
            int pv = m.vert[m.alpha[d]];
            if (vdisc[pv] < 0) {
                vdisc[pv] = m.alpha[d];
                vnew[pv] = next_vertex++;
                queue.push_back(m.alpha[d]);
            }
            d = m.sigma[d];
        } while (d != start);
        block_len.push_back(len);
    }
    out.sigma.assign(nd, -1);
    out.alpha.assign(nd, -1);
    out.vert.assign(nd, -1);
    for (size_t b = 0; b < block_start.size(); b++) {
        int s = block_start[b], l = block_len[b];
        for (int k = 0; k < l; k++) out.sigma[s + k] = s + (k + 1) % l;
    }
    for (int d = 0; d < nd; d++) {
        out.alpha[newlab[d]] = newlab[m.alpha[d]];
        out.vert[newlab[d]] = vnew[m.vert[d]];
    }
    return out;
}

namespace {

// Incremental canonical construction. Darts are labeled in canonical
// (BFS) order as they are created, so every complete assignment is its
// own canonical form and no two assignments give the same rooted map.
struct Generator {
    int target_darts;
    const VertexPredicate& pred;
    const std::function<void(const RotationMap&)>& emit;

    std::vector<int> vert;                  // dart -> vertex
    std::vector<int> partner;               // dart -> partner, -1 pending
    std::vector<std::vector<int>> vlist;    // vertex -> darts in rotation order
    int pending = 0;

    Generator(int n, const VertexPredicate& p, const std::function<void(const RotationMap&)>& e)
        : target_darts(2 * n), pred(p), emit(e) {}

    int darts() const { return (int)vert.size(); }

    int oldest_pending() const {
        for (int d = 0; d < darts(); d++)
            if (partner[d] < 0) return d;
        return -1;
    }

    void complete() {
        RotationMap m;
        m.n_edges = target_darts / 2;
        m.n_vertices = (int)vlist.size();
        m.vert = vert;
        m.alpha = partner;
        m.sigma.assign(darts(), -1);
        for (const auto& lst : vlist) {
            int l = (int)lst.size();
            for (int k = 0; k < l; k++) m.sigma[lst[k]] = lst[(k + 1) % l];
        }
        if (!is_planar(m)) return;
        if (pred.accept && !pred.accept(vertex_degrees(m))) return;
        emit(m);
    }

    int new_dart(int v) {
        vert.push_back(v);
        partner.push_back(-1);
        vlist[v].push_back(darts() - 1);
        pending++;
        return darts() - 1;
    }

    void drop_dart(int v) {
        if (partner.back() < 0) pending--;
        vlist[v].pop_back();
        vert.pop_back();
        partner.pop_back();
    }

    // process vertex u whose rotation list already holds >= 1 dart
    void process(int u) {
        // close u: the oldest pending dart discovers the next vertex
        if (pending == 0) {
            if (darts() == target_darts) complete();
        } else if (darts() < target_darts) {
            int pd = oldest_pending();
            int v = (int)vlist.size();
            if (!pred.max_vertices || v + 1 <= pred.max_vertices) {
                vlist.emplace_back();
                int d = new_dart(v);
                partner[d] = pd;
                partner[pd] = d;
                pending -= 2;
                process(v);
                pending += 2;
                partner[pd] = -1;
                partner[d] = -1;
                drop_dart(v);
                vlist.pop_back();
            }
        }
        // extend u, when its degree cap and the dart budget allow
        if (darts() >= target_darts) return;
        if (pred.degree_cap && (int)vlist[u].size() >= pred.degree_cap) return;
        // back edge to any pending dart (including u's own: a loop)
        for (int pd = 0; pd < darts(); pd++) {
            if (partner[pd] >= 0) continue;
            int e = new_dart(u);
            partner[e] = pd;
            partner[pd] = e;
            pending -= 2;
            process(u);
            pending += 2;
            partner[pd] = -1;
            partner[e] = -1;
            drop_dart(u);
        }
        // fresh pending dart whose partner lives at a future vertex
        if (pending + 1 <= target_darts - (darts() + 1)) {
            new_dart(u);
            process(u);
            drop_dart(u);
        }
    }

    void run() {
        if (target_darts == 0) {
            RotationMap atomic;
            if (!pred.accept || pred.accept({0})) {
                if (!pred.max_vertices || 1 <= pred.max_vertices) emit(atomic);
            }
            return;
        }
        vlist.emplace_back();
        new_dart(0); // the root dart
        process(0);
    }
};

} // namespace

void enumerate_rooted_planar_maps(int n_edges, const VertexPredicate& pred,
                                  const std::function<void(const RotationMap&)>& emit) {
    if (n_edges < 0 || n_edges > kMaxOracleEdges)
        throw LimitExceeded("enumerate_rooted_planar_maps: n_edges beyond supported limit " +
                            std::to_string(kMaxOracleEdges));
    Generator g(n_edges, pred, emit);
    g.run();
}

uint64_t count_eulerian_orientations(const RotationMap& m) {
    auto deg = vertex_degrees(m);
    for (int d : deg)
        if (d & 1) return 0;
    std::vector<int> in(m.n_vertices), out(m.n_vertices);
    for (int v = 0; v < m.n_vertices; v++) in[v] = out[v] = deg[v] / 2;
    std::vector<std::pair<int, int>> edges;
    uint64_t loop_factor = 1;
    for (int d = 0; d < 2 * m.n_edges; d++) {
        if (d > m.alpha[d]) continue;
        int u = m.vert[d], v = m.vert[m.alpha[d]];
        if (u == v) {
            in[u]--;
            out[u]--;
            if (in[u] < 0 || out[u] < 0) return 0;
            loop_factor *= 2;
        } else {
            edges.emplace_back(u, v);
        }
    }
    uint64_t count = 0;
    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == edges.size()) {
            count++;
            return;
        }
        auto [u, v] = edges[k];
        if (out[u] > 0 && in[v] > 0) {
            out[u]--;
            in[v]--;
            rec(k + 1);
            out[u]++;
            in[v]++;
        }
        if (out[v] > 0 && in[u] > 0) {
            out[v]--;
            in[u]--;
            rec(k + 1);
            out[v]++;
            in[u]++;
        }
    };
    rec(0);
    return count * loop_factor;
}

uint64_t count_rooted_maps(int n_edges) {
    uint64_t total = 0;
    enumerate_rooted_planar_maps(n_edges, {}, [&](const RotationMap&) { total++; });
    return total;
}

uint64_t oracle_U(int n_edges) {
    uint64_t total = n_edges == 0 ? 1 : 0;
    if (n_edges > 0)
        enumerate_rooted_planar_maps(
            n_edges, {}, [&](const RotationMap& m) { total += count_eulerian_orientations(m); });
    return total;
}

uint64_t oracle_A(int n_vertices) {
    if (n_vertices == 0) return 1;
    if (2 * n_vertices > kMaxOracleEdges)
        throw LimitExceeded("oracle_A: vertex count beyond supported limit");
    VertexPredicate pred;
    pred.degree_cap = 4;
    pred.max_vertices = n_vertices;
    pred.accept = [n_vertices](const std::vector<int>& deg) {
        if ((int)deg.size() != n_vertices) return false;
        for (int d : deg)
            if (d != 4) return false;
        return true;
    };
    uint64_t total = 0;
    enumerate_rooted_planar_maps(2 * n_vertices, pred, [&](const RotationMap& m) {
        total += count_eulerian_orientations(m);
    });
    return total;
}

uint64_t oracle_eulerian_maps(int n_edges) {
    if (n_edges == 0) return 1;
    VertexPredicate pred;
    pred.accept = [](const std::vector<int>& deg) {
        for (int d : deg)
            if (d & 1) return false;
        return true;
    };
    uint64_t total = 0;
    enumerate_rooted_planar_maps(n_edges, pred, [&](const RotationMap&) { total++; });
    return total;
}

} // namespace oracle
} // namespace euorient
