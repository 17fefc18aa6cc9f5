#include "homcert/generators.hpp"

#include <cstdio>

namespace homcert {

namespace {

std::string padded(const char* prefix, int i) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%s%02d", prefix, i);
    return buf;
}

}  // namespace

SimplicialComplex boundary_sphere(int n) {
    require(n >= 0, errc::bad_argument, "sphere dimension must be nonnegative");
    std::vector<std::vector<std::string>> facets;
    const int verts = n + 2;
    for (int omit = 0; omit < verts; ++omit) {
        std::vector<std::string> f;
        for (int v = 0; v < verts; ++v)
            if (v != omit) f.push_back(padded("v", v));
        facets.push_back(std::move(f));
    }
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex solid_simplex(int n) {
    require(n >= 0, errc::bad_argument, "simplex dimension must be nonnegative");
    std::vector<std::string> f;
    for (int v = 0; v <= n; ++v) f.push_back(padded("v", v));
    return SimplicialComplex::from_facets({f});
}

SimplicialComplex rp2_six_vertex() {
    static const int facets[10][3] = {
        {1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 6}, {1, 5, 6},
        {2, 3, 6}, {2, 4, 5}, {2, 5, 6}, {3, 4, 5}, {3, 4, 6},
    };
    std::vector<std::vector<std::string>> out;
    for (const auto& f : facets)
        out.push_back({padded("r", f[0]), padded("r", f[1]), padded("r", f[2])});
    return SimplicialComplex::from_facets(out);
}

SimplicialComplex torus_seven_vertex() {
    std::vector<std::vector<std::string>> out;
    for (int i = 0; i < 7; ++i) {
        out.push_back({padded("t", i), padded("t", (i + 1) % 7), padded("t", (i + 3) % 7)});
        out.push_back({padded("t", i), padded("t", (i + 2) % 7), padded("t", (i + 3) % 7)});
    }
    return SimplicialComplex::from_facets(out);
}

SimplicialComplex poincare_sphere() {
    // A 16-vertex, 90-facet triangulation of the Poincare homology 3-sphere.
    // The build and test suites certify it: closed homology 3-manifold,
    // H_* = (Z, 0, 0, Z), trivial abelianized edge-path group, and an
    // epimorphism of the edge-path group onto A5.
    static const int facets[90][4] = {
        {1, 2, 4, 9},    {1, 2, 4, 15},   {1, 2, 6, 14},   {1, 2, 6, 15},   {1, 2, 9, 14},
        {1, 3, 4, 12},   {1, 3, 4, 15},   {1, 3, 7, 10},   {1, 3, 7, 12},   {1, 3, 10, 15},
        {1, 4, 9, 12},   {1, 5, 6, 13},   {1, 5, 6, 14},   {1, 5, 8, 11},   {1, 5, 8, 13},
        {1, 5, 11, 14},  {1, 6, 13, 15},  {1, 7, 8, 10},   {1, 7, 8, 11},   {1, 7, 11, 12},
        {1, 8, 10, 13},  {1, 9, 11, 12},  {1, 9, 11, 14},  {1, 10, 13, 15}, {2, 3, 5, 10},
        {2, 3, 5, 11},   {2, 3, 7, 10},   {2, 3, 7, 13},   {2, 3, 11, 13},  {2, 4, 9, 13},
        {2, 4, 11, 13},  {2, 4, 11, 15},  {2, 5, 8, 11},   {2, 5, 8, 12},   {2, 5, 10, 12},
        {2, 6, 10, 12},  {2, 6, 10, 14},  {2, 6, 12, 15},  {2, 7, 9, 13},   {2, 7, 9, 14},
        {2, 7, 10, 14},  {2, 8, 11, 15},  {2, 8, 12, 15},  {3, 4, 5, 14},   {3, 4, 5, 15},
        {3, 4, 12, 14},  {3, 5, 10, 15},  {3, 5, 11, 14},  {3, 7, 12, 13},  {3, 11, 13, 14},
        {3, 12, 13, 14}, {4, 5, 6, 7},    {4, 5, 6, 14},   {4, 5, 7, 15},   {4, 6, 7, 11},
        {4, 6, 10, 11},  {4, 6, 10, 14},  {4, 7, 11, 15},  {4, 8, 9, 12},   {4, 8, 9, 13},
        {4, 8, 10, 13},  {4, 8, 10, 14},  {4, 8, 12, 14},  {4, 10, 11, 13}, {5, 6, 7, 13},
        {5, 7, 9, 13},   {5, 7, 9, 15},   {5, 8, 9, 12},   {5, 8, 9, 13},   {5, 9, 10, 12},
        {5, 9, 10, 15},  {6, 7, 11, 12},  {6, 7, 12, 13},  {6, 10, 11, 12}, {6, 12, 13, 15},
        {7, 8, 10, 14},  {7, 8, 11, 15},  {7, 8, 14, 15},  {7, 9, 14, 15},  {8, 12, 14, 15},
        {9, 10, 11, 12}, {9, 10, 11, 16}, {9, 10, 15, 16}, {9, 11, 14, 16}, {9, 14, 15, 16},
        {10, 11, 13, 16}, {10, 13, 15, 16}, {11, 13, 14, 16}, {12, 13, 14, 15}, {13, 14, 15, 16},
    };
    std::vector<std::vector<std::string>> out;
    for (const auto& f : facets)
        out.push_back({padded("p", f[0]), padded("p", f[1]), padded("p", f[2]), padded("p", f[3])});
    return SimplicialComplex::from_facets(out);
}

SimplicialComplex double_suspension_poincare() {
    // join(S^0 * S^0, P): the suspension circle is a 4-cycle.
    SimplicialComplex circle = boundary_sphere(0).suspension();
    return join(circle, poincare_sphere());
}

SimplicialComplex triple_suspension_rp2() { return rp2_six_vertex().suspension_iterated(3); }

SimplicialComplex generate_named(const std::string& name, const std::vector<std::string>& args) {
    auto want_int = [&](size_t i) {
        require(args.size() > i, errc::bad_argument, "generator '" + name + "' needs a dimension");
        try {
            return std::stoi(args[i]);
        } catch (const std::exception&) {
            fail(errc::bad_argument, "generator argument '" + args[i] + "' is not an integer");
        }
    };
    if (name == "sphere") return boundary_sphere(want_int(0));
    if (name == "simplex") return solid_simplex(want_int(0));
    if (name == "rp2") return rp2_six_vertex();
    if (name == "torus") return torus_seven_vertex();
    if (name == "poincare") return poincare_sphere();
    if (name == "sigma2p") return double_suspension_poincare();
    if (name == "sigma3rp2") return triple_suspension_rp2();
    fail(errc::bad_argument, "unknown generator '" + name + "'");
}

}  // namespace homcert
