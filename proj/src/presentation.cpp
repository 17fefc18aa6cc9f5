#include "homcert/presentation.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "homcert/smith.hpp"

namespace homcert {

std::vector<int> reduce_word(const std::vector<int>& w, bool cyclically) {
    std::vector<int> out;
    for (int letter : w) {
        if (!out.empty() && out.back() == -letter)
            out.pop_back();
        else
            out.push_back(letter);
    }
    if (cyclically) {
        while (out.size() >= 2 && out.front() == -out.back()) {
            out.erase(out.begin());
            out.pop_back();
        }
    }
    return out;
}

GroupPresentation edge_path_presentation(const SimplicialComplex& K) {
    require(!K.is_empty(), errc::empty_complex, "presentation of the empty complex");
    require(K.is_connected(), errc::disconnected_complex,
            "edge-path presentation requires a connected complex");

    const auto& edges = K.faces(1);
    const int ne = static_cast<int>(edges.size());

    // BFS spanning tree from the least vertex, neighbors in ascending order.
    std::vector<std::vector<std::pair<VertexId, int>>> nbrs(K.vertex_count());
    for (int e = 0; e < ne; ++e) {
        nbrs[edges[e].v[0]].push_back({edges[e].v[1], e});
        nbrs[edges[e].v[1]].push_back({edges[e].v[0], e});
    }
    for (auto& vs : nbrs) std::sort(vs.begin(), vs.end());
    std::vector<char> in_tree(ne, 0), seen(K.vertex_count(), 0);
    std::queue<VertexId> q;
    q.push(0);
    seen[0] = 1;
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        for (auto [u, e] : nbrs[v]) {
            if (!seen[u]) {
                seen[u] = 1;
                in_tree[e] = 1;
                q.push(u);
            }
        }
    }

    GroupPresentation p;
    std::vector<int> gen_of_edge(ne, 0);  // 0 for tree edges, else 1-based id
    for (int e = 0; e < ne; ++e)
        if (!in_tree[e]) gen_of_edge[e] = ++p.generators;

    // One relator per triangle {a<b<c}: x_ab x_bc x_ac^{-1}.
    for (const auto& t : K.faces(2)) {
        Simplex ab{{t.v[0], t.v[1]}}, bc{{t.v[1], t.v[2]}}, ac{{t.v[0], t.v[2]}};
        std::vector<int> w;
        int g;
        if ((g = gen_of_edge[K.face_index(ab)]) != 0) w.push_back(g);
        if ((g = gen_of_edge[K.face_index(bc)]) != 0) w.push_back(g);
        if ((g = gen_of_edge[K.face_index(ac)]) != 0) w.push_back(-g);
        w = reduce_word(w, true);
        if (!w.empty()) p.relators.push_back(std::move(w));
    }
    return p;
}

GroupDescriptor presentation_abelianization(const GroupPresentation& p) {
    IntegerMatrix m(static_cast<int>(p.relators.size()), p.generators);
    for (int r = 0; r < static_cast<int>(p.relators.size()); ++r)
        for (int letter : p.relators[r])
            m.add_to(r, std::abs(letter) - 1, letter > 0 ? 1 : -1);
    SNFResult snf = smith_normal_form(m, false);
    GroupDescriptor g;
    g.free_rank = p.generators - snf.rank;
    for (const Int& d : snf.divisors)
        if (d > 1) g.torsion.push_back(d);
    return g;
}

}  // namespace homcert
