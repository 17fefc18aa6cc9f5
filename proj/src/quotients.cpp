#include "homcert/quotients.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace homcert {

std::vector<int> compose_perms(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
    return c;
}

std::vector<int> invert_perm(const std::vector<int>& a) {
    std::vector<int> c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[a[i]] = static_cast<int>(i);
    return c;
}

namespace {

std::vector<int> identity_perm(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    return p;
}

std::vector<std::vector<int>> enumerate_elements(int degree,
                                                 const std::vector<std::vector<int>>& gens) {
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> frontier{identity_perm(degree)};
    seen.insert(frontier[0]);
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& e : frontier) {
            for (const auto& g : gens) {
                auto h = compose_perms(g, e);
                if (seen.insert(h).second) next.push_back(std::move(h));
            }
        }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

PermGroup make_group(std::string name, int degree, std::vector<std::vector<int>> gens,
                     long long expected_order) {
    PermGroup g;
    g.name = std::move(name);
    g.degree = degree;
    g.generators = std::move(gens);
    g.elements = enumerate_elements(degree, g.generators);
    g.order = static_cast<long long>(g.elements.size());
    require(expected_order == 0 || g.order == expected_order, errc::internal,
            "catalog group '" + g.name + "' has unexpected order");
    return g;
}

std::vector<int> cycle_perm(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = (i + 1) % n;
    return p;
}

PermGroup cyclic_group(int k) {
    return make_group("Z/" + std::to_string(k), k, {cycle_perm(k)}, k);
}

PermGroup abelian_product(const std::vector<int>& factors) {
    int degree = 0;
    for (int k : factors) degree += k;
    std::vector<std::vector<int>> gens;
    std::string name;
    int offset = 0;
    long long order = 1;
    for (int k : factors) {
        std::vector<int> p = identity_perm(degree);
        for (int i = 0; i < k; ++i) p[offset + i] = offset + (i + 1) % k;
        gens.push_back(std::move(p));
        if (!name.empty()) name += "x";
        name += "Z/" + std::to_string(k);
        offset += k;
        order *= k;
    }
    return make_group(name, degree, gens, order);
}

PermGroup dihedral_group(int n) {
    std::vector<int> refl(n);
    for (int i = 0; i < n; ++i) refl[i] = (n - i) % n;
    return make_group("Dih" + std::to_string(n), n, {cycle_perm(n), refl}, 2LL * n);
}

PermGroup dicyclic_group(int n) {
    // Points are (i, j) with i mod 2n, j mod 2, encoded i + 2n*j; right
    // multiplication by the standard generators a (order 2n) and b with
    // b^2 = a^n, b a b^{-1} = a^{-1}.
    const int m = 2 * n;
    std::vector<int> a(2 * m), b(2 * m);
    for (int i = 0; i < m; ++i) {
        a[i] = (i + 1) % m;              // (i,0) -> (i+1,0)
        a[m + i] = m + (i + m - 1) % m;  // (i,1) -> (i-1,1)
        b[i] = m + i;                    // (i,0) -> (i,1)
        b[m + i] = (i + n) % m;          // (i,1) -> (i+n,0)
    }
    return make_group("Dic" + std::to_string(n), 2 * m, {a, b}, 4LL * n);
}

std::vector<int> perm_from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> p = identity_perm(degree);
    for (const auto& c : cycles)
        for (size_t i = 0; i < c.size(); ++i) p[c[i]] = c[(i + 1) % c.size()];
    return p;
}

PermGroup sl2_group(int q, long long expected_order) {
    // Action on the nonzero vectors of F_q^2.
    std::vector<std::pair<int, int>> pts;
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y)
            if (x || y) pts.push_back({x, y});
    auto index_of = [&](int x, int y) {
        return static_cast<int>(std::lower_bound(pts.begin(), pts.end(), std::make_pair(x, y)) -
                                pts.begin());
    };
    auto act = [&](int a, int b, int c, int d) {
        std::vector<int> p(pts.size());
        for (size_t i = 0; i < pts.size(); ++i) {
            int x = pts[i].first, y = pts[i].second;
            int nx = (a * x + b * y) % q, ny = (c * x + d * y) % q;
            p[i] = index_of(nx, ny);
        }
        return p;
    };
    return make_group("SL(2," + std::to_string(q) + ")", static_cast<int>(pts.size()),
                      {act(1, 1, 0, 1), act(0, q - 1, 1, 0)}, expected_order);
}

}  // namespace

std::vector<PermGroup> quotient_catalog(int order_bound) {
    require(order_bound >= 2, errc::bad_argument, "quotient order bound must be at least 2");
    std::vector<PermGroup> cat;
    for (int k = 2; k <= order_bound; ++k) cat.push_back(cyclic_group(k));
    static const std::vector<std::vector<int>> kAbelianProducts = {
        {2, 2},    {2, 4},    {2, 6},       {2, 8},  {2, 10}, {2, 12}, {4, 4},
        {4, 8},    {6, 6},    {2, 2, 2},    {2, 2, 4}, {2, 2, 6}, {2, 4, 4},
        {2, 2, 2, 2}, {3, 3}, {3, 9},       {3, 3, 3}, {5, 5},  {7, 7},
    };
    for (const auto& f : kAbelianProducts) {
        long long order = 1;
        for (int k : f) order *= k;
        if (order <= order_bound) cat.push_back(abelian_product(f));
    }
    for (int n = 3; 2 * n <= order_bound; ++n) cat.push_back(dihedral_group(n));
    for (int n = 2; 4 * n <= order_bound; ++n) cat.push_back(dicyclic_group(n));
    if (order_bound >= 12)
        cat.push_back(make_group("A4", 4,
                                 {perm_from_cycles(4, {{0, 1, 2}}),
                                  perm_from_cycles(4, {{0, 1}, {2, 3}})},
                                 12));
    if (order_bound >= 24)
        cat.push_back(make_group(
            "S4", 4, {perm_from_cycles(4, {{0, 1, 2, 3}}), perm_from_cycles(4, {{0, 1}})}, 24));
    if (order_bound >= 24) cat.push_back(sl2_group(3, 24));
    if (order_bound >= 60)
        cat.push_back(make_group(
            "A5", 5, {perm_from_cycles(5, {{0, 1, 2, 3, 4}}), perm_from_cycles(5, {{0, 1, 2}})},
            60));
    if (order_bound >= 120)
        cat.push_back(make_group(
            "S5", 5, {perm_from_cycles(5, {{0, 1, 2, 3, 4}}), perm_from_cycles(5, {{0, 1}})},
            120));
    if (order_bound >= 120) cat.push_back(sl2_group(5, 120));

    std::sort(cat.begin(), cat.end(), [](const PermGroup& a, const PermGroup& b) {
        return a.order != b.order ? a.order < b.order : a.name < b.name;
    });
    // Identical presentations under different family names (Dih3 covers S3,
    // Dic2 is the quaternion group): keep one entry per (order, name).
    cat.erase(std::unique(cat.begin(), cat.end(),
                          [](const PermGroup& a, const PermGroup& b) {
                              return a.order == b.order && a.name == b.name;
                          }),
              cat.end());
    return cat;
}

namespace {

struct Search {
    const GroupPresentation& p;
    const PermGroup& G;
    long long nodes_left;
    std::vector<std::vector<int>> images;
    std::vector<std::vector<const std::vector<int>*>> relators_by_max_gen;

    Search(const GroupPresentation& pres, const PermGroup& grp, long long budget)
        : p(pres), G(grp), nodes_left(budget) {
        relators_by_max_gen.resize(p.generators + 1);
        for (const auto& r : p.relators) {
            int mx = 0;
            for (int letter : r) mx = std::max(mx, std::abs(letter));
            relators_by_max_gen[mx].push_back(&r);
        }
    }

    bool relator_is_identity(const std::vector<int>& r) const {
        std::vector<int> acc = identity_perm(G.degree);
        for (int letter : r) {
            const std::vector<int>& img = images[std::abs(letter) - 1];
            acc = letter > 0 ? compose_perms(img, acc) : compose_perms(invert_perm(img), acc);
        }
        return acc == identity_perm(G.degree);
    }

    bool surjective() const {
        return static_cast<long long>(enumerate_elements(G.degree, images).size()) == G.order;
    }

    bool assign(int g) {
        if (g == p.generators) return surjective();
        for (const auto& candidate : G.elements) {
            if (--nodes_left <= 0) return false;
            images.push_back(candidate);
            bool ok = true;
            for (const auto* r : relators_by_max_gen[g + 1])
                if (!relator_is_identity(*r)) {
                    ok = false;
                    break;
                }
            if (ok && assign(g + 1)) return true;
            images.pop_back();
            if (nodes_left <= 0) return false;
        }
        return false;
    }
};

}  // namespace

std::optional<EpiEvidence> find_epimorphism(const GroupPresentation& p, const PermGroup& G,
                                            long long node_budget) {
    if (p.generators == 0) return std::nullopt;  // trivial group, no surjection
    Search s(p, G, node_budget);
    // Relators not referencing any generator are identities by convention.
    if (!s.assign(0)) return std::nullopt;
    EpiEvidence ev;
    ev.group_name = G.name;
    ev.group_order = G.order;
    ev.degree = G.degree;
    ev.generator_images = s.images;
    return ev;
}

bool verify_epimorphism(const GroupPresentation& p, const PermGroup& G, const EpiEvidence& ev) {
    if (static_cast<int>(ev.generator_images.size()) != p.generators) return false;
    for (const auto& img : ev.generator_images)
        if (static_cast<int>(img.size()) != G.degree ||
            !std::binary_search(G.elements.begin(), G.elements.end(), img))
            return false;
    for (const auto& r : p.relators) {
        std::vector<int> acc = identity_perm(G.degree);
        for (int letter : r) {
            const auto& img = ev.generator_images[std::abs(letter) - 1];
            acc = letter > 0 ? compose_perms(img, acc) : compose_perms(invert_perm(img), acc);
        }
        if (acc != identity_perm(G.degree)) return false;
    }
    return static_cast<long long>(enumerate_elements(G.degree, ev.generator_images).size()) ==
           G.order;
}

const PermGroup* find_group(const std::vector<PermGroup>& catalog, const std::string& name) {
    for (const auto& g : catalog)
        if (g.name == name) return &g;
    return nullptr;
}

std::vector<long long> quotient_order_spectrum(const GroupPresentation& p,
                                               const std::vector<PermGroup>& catalog,
                                               long long node_budget) {
    std::set<long long> orders;
    for (const auto& G : catalog) {
        if (orders.count(G.order)) continue;
        if (find_epimorphism(p, G, node_budget)) orders.insert(G.order);
    }
    return {orders.begin(), orders.end()};
}

}  // namespace homcert
