#include "homcert/cover.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "homcert/permutation.hpp"

namespace homcert {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

int position_in(const Simplex& f, VertexId x) {
    auto it = std::lower_bound(f.v.begin(), f.v.end(), x);
    return static_cast<int>(it - f.v.begin());
}

}  // namespace

bool is_coherent_orientation(const SimplicialComplex& K, const std::vector<int>& signs) {
    const auto& facets = K.facet_list();
    if (signs.size() != facets.size()) return false;
    std::map<Simplex, long long> boundary;
    for (size_t i = 0; i < facets.size(); ++i) {
        const Simplex& f = facets[i];
        for (size_t p = 0; p < f.v.size(); ++p) {
            Simplex w = f;
            w.v.erase(w.v.begin() + static_cast<long>(p));
            if (w.empty()) continue;
            boundary[w] += (p % 2 == 0 ? 1 : -1) * signs[i];
        }
    }
    // Coherent means every codimension-one face shared by two facets cancels;
    // faces with a single facet (boundary faces) carry coefficient +-1.
    std::map<Simplex, int> degree;
    for (const auto& f : facets)
        for (size_t p = 0; p < f.v.size(); ++p) {
            Simplex w = f;
            w.v.erase(w.v.begin() + static_cast<long>(p));
            if (!w.empty()) degree[w]++;
        }
    for (const auto& [w, coeff] : boundary) {
        if (degree[w] >= 2 && coeff != 0) return false;
    }
    return true;
}

OrientabilityResult orientability_and_double_cover(const SimplicialComplex& K) {
    require(!K.is_empty(), errc::empty_complex, "cover of the empty complex");
    require(K.is_pure(), errc::not_a_pseudomanifold, "complex is not pure");
    const auto& facets = K.facet_list();
    const int nf = static_cast<int>(facets.size());
    const int fsize = K.dimension() + 1;

    // Facet adjacency across codimension-one faces with orientation
    // transport factors.
    struct Adj {
        int f, g;
        int rel;  // sign(G) = rel * sign(F) for coherence
        Simplex shared;
    };
    std::vector<Adj> adjacency;
    if (K.dimension() == 0) {
        require(nf <= 2, errc::not_a_pseudomanifold,
                "more than two facets share a codimension-one face");
        if (nf == 2) adjacency.push_back({0, 1, -1, Simplex{}});
    } else {
        std::map<Simplex, std::vector<int>> by_face;
        for (int i = 0; i < nf; ++i) {
            const Simplex& f = facets[i];
            for (size_t p = 0; p < f.v.size(); ++p) {
                Simplex w = f;
                w.v.erase(w.v.begin() + static_cast<long>(p));
                by_face[w].push_back(i);
            }
        }
        for (const auto& [w, fs] : by_face) {
            require(fs.size() <= 2, errc::not_a_pseudomanifold,
                    "codimension-one face '" + K.label_of(w) + "' lies in " +
                        std::to_string(fs.size()) + " facets");
            if (fs.size() == 2) {
                VertexId x = facets[fs[0]].minus(w).v[0];
                VertexId y = facets[fs[1]].minus(w).v[0];
                int rel = -1 * ((position_in(facets[fs[0]], x) + position_in(facets[fs[1]], y)) % 2 == 0
                                    ? 1
                                    : -1);
                adjacency.push_back({fs[0], fs[1], rel, w});
            }
        }
    }

    // Strong connectivity along codimension-one faces.
    {
        std::vector<std::vector<int>> nbrs(nf);
        for (const auto& a : adjacency) {
            nbrs[a.f].push_back(a.g);
            nbrs[a.g].push_back(a.f);
        }
        std::vector<char> seen(nf, 0);
        std::queue<int> q;
        q.push(0);
        seen[0] = 1;
        int reached = 1;
        while (!q.empty()) {
            int f = q.front();
            q.pop();
            for (int g : nbrs[f])
                if (!seen[g]) {
                    seen[g] = 1;
                    ++reached;
                    q.push(g);
                }
        }
        require(reached == nf, errc::not_a_pseudomanifold,
                "complex is not strongly connected along codimension-one faces");
    }

    // Sheeted-facet graph on nodes (facet, sign); vertex lifts are classes of
    // (vertex, facet, sign) under transport across shared faces.
    auto node = [&](int f, int o01) { return f * 2 + o01; };
    auto vnode = [&](int f, int o01, int pos) { return (f * 2 + o01) * fsize + pos; };
    UnionFind sheets(nf * 2);
    UnionFind classes(nf * 2 * fsize);
    for (const auto& a : adjacency) {
        for (int o = 0; o < 2; ++o) {
            int sign_f = o == 0 ? 1 : -1;
            int sign_g = a.rel * sign_f;
            int og = sign_g == 1 ? 0 : 1;
            sheets.unite(node(a.f, o), node(a.g, og));
            for (VertexId v : a.shared.v) {
                classes.unite(vnode(a.f, o, position_in(facets[a.f], v)),
                              vnode(a.g, og, position_in(facets[a.g], v)));
            }
        }
    }

    // Each base vertex must have exactly two lift classes.
    std::vector<std::vector<int>> roots_of_vertex(K.vertex_count());
    for (int f = 0; f < nf; ++f)
        for (int o = 0; o < 2; ++o)
            for (int p = 0; p < fsize; ++p) {
                VertexId v = facets[f].v[p];
                int r = classes.find(vnode(f, o, p));
                auto& rs = roots_of_vertex[v];
                if (std::find(rs.begin(), rs.end(), r) == rs.end()) rs.push_back(r);
            }
    for (VertexId v = 0; v < K.vertex_count(); ++v)
        require(roots_of_vertex[v].size() == 2, errc::not_a_pseudomanifold,
                "star of vertex '" + K.token(v) + "' does not support a two-sheeted cover");

    // Sheet naming: the class through (v, least facet containing v, +) is
    // sheet 0.
    std::map<int, int> sheet_of_root;
    for (VertexId v = 0; v < K.vertex_count(); ++v) {
        int fmin = -1;
        for (int f = 0; f < nf && fmin < 0; ++f)
            if (facets[f].contains(v)) fmin = f;
        int r0 = classes.find(vnode(fmin, 0, position_in(facets[fmin], v)));
        sheet_of_root[r0] = 0;
        for (int r : roots_of_vertex[v])
            if (r != r0) sheet_of_root[r] = 1;
    }

    auto lift_token = [&](int f, int o, VertexId v) {
        int r = classes.find(vnode(f, o, position_in(facets[f], v)));
        return K.token(v) + "~" + std::to_string(sheet_of_root.at(r));
    };

    std::vector<std::vector<std::string>> cover_facets;
    for (int f = 0; f < nf; ++f)
        for (int o = 0; o < 2; ++o) {
            std::vector<std::string> cf;
            for (VertexId v : facets[f].v) cf.push_back(lift_token(f, o, v));
            cover_facets.push_back(std::move(cf));
        }

    OrientabilityResult out;
    DoubleCover& cov = out.cover;
    cov.base = K;
    cov.total = SimplicialComplex::from_facets(cover_facets);

    // Deck and projection on vertices. Tokens are "<base>~<sheet>".
    cov.deck.resize(cov.total.vertex_count());
    cov.projection.resize(cov.total.vertex_count());
    for (VertexId v = 0; v < cov.total.vertex_count(); ++v) {
        const std::string& t = cov.total.token(v);
        std::string base_tok = t.substr(0, t.size() - 2);
        char sheet = t.back();
        cov.projection[v] = K.vertex_id(base_tok);
        cov.deck[v] = cov.total.vertex_id(base_tok + "~" + (sheet == '0' ? "1" : "0"));
    }

    // Covering property: every base simplex has exactly two preimages.
    for (int d = 0; d <= K.dimension(); ++d) {
        std::map<Simplex, int> count;
        for (const auto& s : cov.total.faces(d)) count[cov.project(s)]++;
        require(static_cast<int>(count.size()) == K.face_count(d), errc::internal,
                "cover projection misses base simplices");
        for (const auto& [s, c] : count)
            require(c == 2, errc::internal, "cover is not two-to-one on simplices");
    }

    // Canonical orientation of the total space: the lift (F, o) carries o
    // transported through the vertex relabeling.
    const auto& tf = cov.total.facet_list();
    cov.total_orientation.assign(tf.size(), 0);
    std::vector<int> sheet_sign_of_total_facet(tf.size(), 0);
    for (int f = 0; f < nf; ++f)
        for (int o = 0; o < 2; ++o) {
            std::vector<VertexId> lifted;
            for (VertexId v : facets[f].v)
                lifted.push_back(cov.total.vertex_id(lift_token(f, o, v)));
            int sgn = sort_permutation_sign(lifted);
            std::sort(lifted.begin(), lifted.end());
            Simplex fs{lifted};
            auto it = std::lower_bound(tf.begin(), tf.end(), fs);
            require(it != tf.end() && *it == fs, errc::internal, "lifted facet not found");
            int idx = static_cast<int>(it - tf.begin());
            cov.total_orientation[idx] = (o == 0 ? 1 : -1) * sgn;
            sheet_sign_of_total_facet[idx] = node(f, o);
        }
    require(is_coherent_orientation(cov.total, cov.total_orientation), errc::internal,
            "constructed cover orientation is not coherent");

    // Orientable iff the sheeted-facet graph has two components.
    std::set<int> comp_roots;
    for (int f = 0; f < nf; ++f)
        for (int o = 0; o < 2; ++o) comp_roots.insert(sheets.find(node(f, o)));
    out.orientable = comp_roots.size() == 2;
    cov.base_orientable = out.orientable;

    if (out.orientable) {
        // The induced base orientation reads off the sheet-0 component: the
        // one containing the positive lift of the least facet.
        int comp0 = sheets.find(node(0, 0));
        cov.base_orientation.assign(nf, 0);
        for (int f = 0; f < nf; ++f) {
            int o = sheets.find(node(f, 0)) == comp0 ? 0 : 1;
            cov.base_orientation[f] = o == 0 ? 1 : -1;
        }
        require(is_coherent_orientation(K, cov.base_orientation), errc::internal,
                "induced base orientation is not coherent");
    }
    return out;
}

std::pair<Simplex, Simplex> DoubleCover::lifts_of(const Simplex& s) const {
    std::vector<Simplex> found;
    for (const auto& c : total.faces(s.dim()))
        if (project(c) == s) found.push_back(c);
    require(found.size() == 2, errc::internal, "simplex does not have two lifts");
    std::sort(found.begin(), found.end());
    return {found[0], found[1]};
}

Simplex DoubleCover::deck_image(const Simplex& s) const {
    Simplex out;
    for (VertexId v : s.v) out.v.push_back(deck.at(v));
    std::sort(out.v.begin(), out.v.end());
    return out;
}

Simplex DoubleCover::project(const Simplex& s) const {
    Simplex out;
    for (VertexId v : s.v) out.v.push_back(projection.at(v));
    std::sort(out.v.begin(), out.v.end());
    return out;
}

}  // namespace homcert
