#include "homcert/complex.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace homcert {

bool Simplex::contains(VertexId u) const {
    return std::binary_search(v.begin(), v.end(), u);
}

bool Simplex::contains(const Simplex& s) const {
    return std::includes(v.begin(), v.end(), s.v.begin(), s.v.end());
}

Simplex Simplex::minus(const Simplex& s) const {
    Simplex out;
    std::set_difference(v.begin(), v.end(), s.v.begin(), s.v.end(),
                        std::back_inserter(out.v));
    return out;
}

Simplex Simplex::united(const Simplex& s) const {
    Simplex out;
    std::set_union(v.begin(), v.end(), s.v.begin(), s.v.end(),
                   std::back_inserter(out.v));
    return out;
}

bool Simplex::disjoint(const Simplex& s) const {
    auto a = v.begin();
    auto b = s.v.begin();
    while (a != v.end() && b != s.v.end()) {
        if (*a == *b) return false;
        if (*a < *b) ++a; else ++b;
    }
    return true;
}

SimplicialComplex SimplicialComplex::from_facets(
    const std::vector<std::vector<std::string>>& facets) {
    require(!facets.empty(), errc::empty_complex, "facet list is empty");

    std::set<std::string> token_set;
    for (const auto& f : facets) {
        require(!f.empty(), errc::malformed_facet, "empty facet");
        std::set<std::string> seen;
        for (const auto& t : f) {
            require(seen.insert(t).second, errc::malformed_facet,
                    "duplicate vertex '" + t + "' within one facet");
            token_set.insert(t);
        }
    }

    std::vector<std::string> tokens(token_set.begin(), token_set.end());
    std::map<std::string, VertexId> ids;
    for (int i = 0; i < static_cast<int>(tokens.size()); ++i) ids[tokens[i]] = i;

    std::vector<Simplex> raw;
    raw.reserve(facets.size());
    for (const auto& f : facets) {
        Simplex s;
        for (const auto& t : f) s.v.push_back(ids.at(t));
        std::sort(s.v.begin(), s.v.end());
        raw.push_back(std::move(s));
    }
    return build_from_id_facets(std::move(tokens), std::move(raw));
}

SimplicialComplex SimplicialComplex::build_from_id_facets(std::vector<std::string> tokens,
                                                          std::vector<Simplex> raw_facets) {
    std::sort(raw_facets.begin(), raw_facets.end());
    raw_facets.erase(std::unique(raw_facets.begin(), raw_facets.end()), raw_facets.end());

    // Close downward; a raw facet is absorbed iff it shows up as a proper
    // face of another.
    int maxdim = -1;
    for (const auto& f : raw_facets) maxdim = std::max(maxdim, f.dim());
    std::vector<std::set<Simplex>> face_sets(maxdim + 1);
    std::set<Simplex> proper;
    for (const auto& f : raw_facets) {
        const int n = static_cast<int>(f.v.size());
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            Simplex s;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) s.v.push_back(f.v[i]);
            if (static_cast<int>(s.v.size()) < n) proper.insert(s);
            face_sets[s.dim()].insert(std::move(s));
        }
    }

    SimplicialComplex K;
    K.tokens_ = std::move(tokens);
    for (int i = 0; i < static_cast<int>(K.tokens_.size()); ++i)
        K.token_ids_[K.tokens_[i]] = i;
    K.dim_ = maxdim;
    for (const auto& f : raw_facets)
        if (!proper.count(f)) K.facets_.push_back(f);
    K.faces_.resize(maxdim + 1);
    K.index_.resize(maxdim + 1);
    for (int d = 0; d <= maxdim; ++d) {
        K.faces_[d].assign(face_sets[d].begin(), face_sets[d].end());
        for (int i = 0; i < static_cast<int>(K.faces_[d].size()); ++i)
            K.index_[d][K.faces_[d][i]] = i;
    }
    return K;
}

VertexId SimplicialComplex::vertex_id(const std::string& t) const {
    auto it = token_ids_.find(t);
    require(it != token_ids_.end(), errc::missing_simplex, "unknown vertex token '" + t + "'");
    return it->second;
}

const std::vector<Simplex>& SimplicialComplex::faces(int dim) const {
    static const std::vector<Simplex> kEmpty;
    if (dim < 0 || dim > dim_) return kEmpty;
    return faces_[dim];
}

int SimplicialComplex::total_face_count() const {
    int n = 0;
    for (int d = 0; d <= dim_; ++d) n += face_count(d);
    return n;
}

bool SimplicialComplex::contains(const Simplex& s) const {
    if (s.empty() || s.dim() > dim_) return false;
    return index_[s.dim()].count(s) > 0;
}

int SimplicialComplex::face_index(const Simplex& s) const {
    require(!s.empty() && s.dim() <= dim_, errc::missing_simplex, "simplex not in complex");
    auto it = index_[s.dim()].find(s);
    require(it != index_[s.dim()].end(), errc::missing_simplex, "simplex not in complex");
    return it->second;
}

bool SimplicialComplex::is_facet(const Simplex& s) const {
    return std::binary_search(facets_.begin(), facets_.end(), s);
}

Simplex SimplicialComplex::simplex_from_tokens(const std::vector<std::string>& toks) const {
    Simplex s;
    for (const auto& t : toks) s.v.push_back(vertex_id(t));
    std::sort(s.v.begin(), s.v.end());
    require(std::adjacent_find(s.v.begin(), s.v.end()) == s.v.end(), errc::malformed_facet,
            "duplicate vertex in simplex");
    require(contains(s), errc::missing_simplex, "simplex not in complex");
    return s;
}

std::vector<std::string> SimplicialComplex::tokens_of(const Simplex& s) const {
    std::vector<std::string> out;
    out.reserve(s.v.size());
    for (VertexId u : s.v) out.push_back(token(u));
    return out;
}

std::string SimplicialComplex::label_of(const Simplex& s) const {
    std::string out;
    for (size_t i = 0; i < s.v.size(); ++i) {
        if (i) out += ' ';
        out += token(s.v[i]);
    }
    return out;
}

std::vector<int> SimplicialComplex::f_vector() const {
    std::vector<int> f;
    for (int d = 0; d <= dim_; ++d) f.push_back(face_count(d));
    return f;
}

long long SimplicialComplex::euler_characteristic() const {
    long long chi = 0;
    for (int d = 0; d <= dim_; ++d) chi += (d % 2 == 0 ? 1LL : -1LL) * face_count(d);
    return chi;
}

bool SimplicialComplex::is_pure() const {
    for (const auto& f : facets_)
        if (f.dim() != dim_) return false;
    return true;
}

bool SimplicialComplex::is_connected() const {
    if (is_empty()) return true;
    const int n = vertex_count();
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : faces(1)) {
        int a = find(e.v[0]), b = find(e.v[1]);
        if (a != b) parent[a] = b;
    }
    int root = find(0);
    for (int i = 1; i < n; ++i)
        if (find(i) != root) return false;
    return true;
}

std::vector<Simplex> SimplicialComplex::facets_containing(const Simplex& s) const {
    std::vector<Simplex> out;
    for (const auto& f : facets_)
        if (f.contains(s)) out.push_back(f);
    return out;
}

SimplicialComplex SimplicialComplex::link(const Simplex& s) const {
    require(contains(s), errc::missing_simplex, "link: simplex not in complex");
    std::vector<std::vector<std::string>> facets;
    for (const auto& f : facets_containing(s)) {
        Simplex rest = f.minus(s);
        if (rest.empty()) continue;
        facets.push_back(tokens_of(rest));
    }
    if (facets.empty()) return SimplicialComplex();  // link of a facet
    return from_facets(facets);
}

SimplicialComplex SimplicialComplex::star(const Simplex& s) const {
    require(contains(s), errc::missing_simplex, "star: simplex not in complex");
    std::vector<std::vector<std::string>> facets;
    for (const auto& f : facets_containing(s)) facets.push_back(tokens_of(f));
    return from_facets(facets);
}

namespace {

std::string free_indexed_token(const SimplicialComplex& K, const std::string& prefix) {
    for (int i = 0;; ++i) {
        std::string t = prefix + std::to_string(i);
        if (!K.has_token(t)) return t;
    }
}

SimplicialComplex point_complex(const std::string& token) {
    return SimplicialComplex::from_facets({{token}});
}

}  // namespace

SimplicialComplex SimplicialComplex::cone() const {
    return join(*this, point_complex(free_indexed_token(*this, "@c")));
}

SimplicialComplex SimplicialComplex::suspension() const {
    // Pick the first index with both poles free; the poles themselves must
    // not collide with existing tokens.
    int i = 0;
    while (has_token("@n" + std::to_string(i)) && has_token("@s" + std::to_string(i))) ++i;
    std::string n = "@n" + std::to_string(i), s = "@s" + std::to_string(i);
    return join(*this, SimplicialComplex::from_facets({{n}, {s}}));
}

SimplicialComplex SimplicialComplex::suspension_iterated(int k) const {
    SimplicialComplex out = *this;
    for (int i = 0; i < k; ++i) out = out.suspension();
    return out;
}

bool SimplicialComplex::same_labeled_complex(const SimplicialComplex& other) const {
    if (is_empty() || other.is_empty()) return is_empty() && other.is_empty();
    std::set<std::vector<std::string>> a, b;
    for (const auto& f : facets_) a.insert(tokens_of(f));
    for (const auto& f : other.facets_) b.insert(other.tokens_of(f));
    return a == b;
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.is_empty()) return b;
    if (b.is_empty()) return a;
    for (const auto& t : b.tokens_)
        require(!a.has_token(t), errc::token_collision,
                "join: vertex token '" + t + "' present in both complexes");
    std::vector<std::vector<std::string>> facets;
    for (const auto& fa : a.facets_) {
        for (const auto& fb : b.facets_) {
            std::vector<std::string> f = a.tokens_of(fa);
            for (const auto& t : b.tokens_of(fb)) f.push_back(t);
            facets.push_back(std::move(f));
        }
    }
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex SimplicialComplex::read_facet_stream(std::istream& in) {
    std::vector<std::vector<std::string>> facets;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ss(line);
        std::vector<std::string> toks;
        std::string t;
        while (ss >> t) toks.push_back(t);
        if (toks.empty()) continue;
        std::set<std::string> seen(toks.begin(), toks.end());
        require(seen.size() == toks.size(), errc::malformed_facet,
                "line " + std::to_string(lineno) + ": duplicate vertex within facet");
        facets.push_back(std::move(toks));
    }
    require(!facets.empty(), errc::empty_complex, "no facets in input");
    return from_facets(facets);
}

SimplicialComplex SimplicialComplex::read_facet_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), errc::parse_error, "cannot open '" + path + "'");
    return read_facet_stream(in);
}

void SimplicialComplex::write_facet_stream(std::ostream& out) const {
    for (const auto& f : facets_) out << label_of(f) << "\n";
}

}  // namespace homcert
