#include "homcert/subdivision.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace homcert {

std::string barycenter_token(const SimplicialComplex& base, const Simplex& face) {
    std::string t = "d";
    int d = face.dim();
    t += static_cast<char>('0' + d / 10);
    t += static_cast<char>('0' + d % 10);
    t += '(';
    for (size_t i = 0; i < face.v.size(); ++i) {
        if (i) t += ',';
        t += base.token(face.v[i]);
    }
    t += ')';
    return t;
}

VertexId SubdividedComplex::barycenter_id(const Simplex& base_face) const {
    return complex.vertex_id(barycenter_token(base, base_face));
}

bool SubdividedComplex::verify_flag_property() const {
    for (int d = 1; d <= complex.dimension(); ++d) {
        for (const auto& s : complex.faces(d)) {
            for (size_t i = 0; i + 1 < s.v.size(); ++i) {
                const Simplex& a = carrier[s.v[i]];
                const Simplex& b = carrier[s.v[i + 1]];
                if (a == b || !b.contains(a)) return false;
            }
        }
    }
    return true;
}

namespace {

// Enumerate the maximal flags of K lying inside facet F and starting at
// `bottom` (all carriers contain bottom). Each flag is reported as the list
// of carriers in ascending dimension, starting with `bottom` itself.
void enumerate_upper_flags(const Simplex& bottom, const Simplex& facet,
                           const std::function<void(const std::vector<Simplex>&)>& emit) {
    Simplex rest = facet.minus(bottom);
    std::vector<Simplex> flag{bottom};
    std::vector<VertexId> remaining = rest.v;
    std::function<void()> rec = [&]() {
        if (remaining.empty()) {
            emit(flag);
            return;
        }
        for (size_t i = 0; i < remaining.size(); ++i) {
            VertexId u = remaining[i];
            std::vector<VertexId> next = remaining;
            next.erase(next.begin() + static_cast<long>(i));
            Simplex grown = flag.back().united(Simplex{{u}});
            flag.push_back(grown);
            std::swap(remaining, next);
            rec();
            std::swap(remaining, next);
            flag.pop_back();
        }
    };
    rec();
}

SimplicialComplex complex_from_flag_facets(const SimplicialComplex& base,
                                           const std::set<std::vector<Simplex>>& flags) {
    std::vector<std::vector<std::string>> facets;
    facets.reserve(flags.size());
    for (const auto& flag : flags) {
        std::vector<std::string> f;
        f.reserve(flag.size());
        for (const auto& c : flag) f.push_back(barycenter_token(base, c));
        facets.push_back(std::move(f));
    }
    return SimplicialComplex::from_facets(facets);
}

std::vector<Simplex> carriers_for(const SimplicialComplex& base, const SimplicialComplex& sd) {
    // Recover the carrier of each subdivision vertex from its token.
    std::map<std::string, Simplex> by_token;
    for (int d = 0; d <= base.dimension(); ++d)
        for (const auto& f : base.faces(d)) by_token[barycenter_token(base, f)] = f;
    std::vector<Simplex> carrier(sd.vertex_count());
    for (VertexId v = 0; v < sd.vertex_count(); ++v) {
        auto it = by_token.find(sd.token(v));
        require(it != by_token.end(), errc::token_collision,
                "subdivision vertex token does not name a face of the base complex");
        carrier[v] = it->second;
    }
    return carrier;
}

}  // namespace

SubdividedComplex barycentric_subdivision(const SimplicialComplex& K) {
    require(!K.is_empty(), errc::empty_complex, "cannot subdivide the empty complex");
    std::set<std::vector<Simplex>> flags;
    for (const auto& f : K.facet_list()) {
        for (VertexId u : f.v) {
            enumerate_upper_flags(Simplex{{u}}, f,
                                  [&](const std::vector<Simplex>& flag) { flags.insert(flag); });
        }
    }
    SubdividedComplex out;
    out.base = K;
    out.complex = complex_from_flag_facets(K, flags);
    out.carrier = carriers_for(K, out.complex);

    // Injectivity of token -> carrier (guards against pathological base
    // tokens containing the separator characters).
    std::set<std::string> toks;
    for (int d = 0; d <= K.dimension(); ++d)
        for (const auto& f : K.faces(d))
            require(toks.insert(barycenter_token(K, f)).second, errc::token_collision,
                    "barycenter token collision; base tokens are ambiguous");
    return out;
}

DualCone dual_cone(const SimplicialComplex& K, const Simplex& s) {
    require(K.contains(s), errc::missing_simplex, "dual_cone: simplex not in complex");
    DualCone out;
    out.base = s;
    std::set<std::vector<Simplex>> cone_flags;
    for (const auto& f : K.facets_containing(s)) {
        enumerate_upper_flags(s, f,
                              [&](const std::vector<Simplex>& flag) { cone_flags.insert(flag); });
    }
    out.cone_complex = complex_from_flag_facets(K, cone_flags);
    // Link part: drop the apex from every maximal flag.
    std::set<std::vector<Simplex>> link_flags;
    for (const auto& flag : cone_flags) {
        if (flag.size() > 1)
            link_flags.insert(std::vector<Simplex>(flag.begin() + 1, flag.end()));
    }
    if (!link_flags.empty()) out.link_part = complex_from_flag_facets(K, link_flags);
    return out;
}

void DualCone::verify_invariants(const SimplicialComplex& K) const {
    const std::string apex = barycenter_token(K, base);
    // Every simplex of the cone complex meets the base simplex in at most the
    // barycenter vertex: no vertex may be the barycenter of a proper face of
    // the base, and the only base-face barycenter allowed is the apex.
    std::set<std::string> forbidden;
    const int n = static_cast<int>(base.v.size());
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        Simplex f;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) f.v.push_back(base.v[i]);
        if (f != base) forbidden.insert(barycenter_token(K, f));
    }
    for (VertexId v = 0; v < cone_complex.vertex_count(); ++v)
        require(!forbidden.count(cone_complex.token(v)), errc::internal,
                "dual cone contains the barycenter of a proper face of its base");

    // Cone structure: facets are exactly apex * (facets of link part), and
    // every facet contains the apex.
    for (const auto& f : cone_complex.facet_list())
        require(f.contains(cone_complex.vertex_id(apex)), errc::internal,
                "dual cone facet missing the apex");
    if (!link_part.is_empty()) {
        std::set<std::vector<std::string>> expect;
        for (const auto& f : link_part.facet_list()) {
            std::vector<std::string> toks = link_part.tokens_of(f);
            toks.push_back(apex);
            std::sort(toks.begin(), toks.end());
            expect.insert(toks);
        }
        std::set<std::vector<std::string>> got;
        for (const auto& f : cone_complex.facet_list()) {
            std::vector<std::string> toks = cone_complex.tokens_of(f);
            std::sort(toks.begin(), toks.end());
            got.insert(toks);
        }
        require(expect == got, errc::internal, "dual cone is not the cone on its link part");
    }
}

int interval_face_count(const SimplicialComplex& K, const Simplex& t, const Simplex& s) {
    if (!s.contains(t)) return 0;
    Simplex extra = s.minus(t);
    return 1 << extra.v.size();
}

long long poset_chain_count(const SimplicialComplex& K, int d) {
    // Count chains f_0 < f_1 < ... < f_d in the face poset by dynamic
    // programming over faces sorted by dimension.
    std::vector<Simplex> all;
    for (int k = 0; k <= K.dimension(); ++k)
        for (const auto& f : K.faces(k)) all.push_back(f);
    std::map<Simplex, long long> chains_ending;  // chains of current length ending at face
    for (const auto& f : all) chains_ending[f] = 1;
    for (int len = 1; len <= d; ++len) {
        std::map<Simplex, long long> next;
        for (const auto& f : all) {
            long long total = 0;
            // proper faces of f
            const int n = static_cast<int>(f.v.size());
            for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
                Simplex sub;
                for (int i = 0; i < n; ++i)
                    if (mask & (1u << i)) sub.v.push_back(f.v[i]);
                auto it = chains_ending.find(sub);
                if (it != chains_ending.end()) total += it->second;
            }
            if (total) next[f] = total;
        }
        chains_ending = std::move(next);
    }
    long long total = 0;
    for (const auto& [f, c] : chains_ending) total += c;
    return total;
}

}  // namespace homcert
