#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "homcert/errors.hpp"

namespace homcert {

using VertexId = int;

/// An abstract simplex, stored as a strictly increasing list of vertex ids.
/// Ids are local to the complex owning the simplex; the sorted list is the
/// canonical identity.
struct Simplex {
    std::vector<VertexId> v;

    Simplex() = default;
    explicit Simplex(std::vector<VertexId> verts) : v(std::move(verts)) {}

    int dim() const { return static_cast<int>(v.size()) - 1; }
    bool empty() const { return v.empty(); }

    bool contains(VertexId u) const;
    bool contains(const Simplex& s) const;  // s subset of this
    Simplex minus(const Simplex& s) const;
    Simplex united(const Simplex& s) const;  // disjoint union, resorted
    bool disjoint(const Simplex& s) const;

    auto operator<=>(const Simplex&) const = default;
};

struct OrientedSimplex {
    Simplex simplex;
    int sign = +1;  // relative to the sorted vertex order
};

/// Immutable finite abstract simplicial complex given by its facets.
/// Vertices are identified by unique string tokens; vertex ids are assigned
/// in lexicographic token order, and faces of each dimension are enumerated
/// lexicographically by id list. All operations return new complexes.
class SimplicialComplex {
public:
    SimplicialComplex() = default;  // the empty complex, dimension -1

    /// Build from a list of token facets. Facets that are faces of other
    /// facets are absorbed. Throws malformed-facet on duplicated vertices
    /// within one facet and empty-complex on empty input.
    static SimplicialComplex from_facets(const std::vector<std::vector<std::string>>& facets);

    bool is_empty() const { return tokens_.empty(); }
    int dimension() const { return dim_; }
    int vertex_count() const { return static_cast<int>(tokens_.size()); }

    const std::string& token(VertexId v) const { return tokens_.at(v); }
    bool has_token(const std::string& t) const { return token_ids_.count(t) > 0; }
    VertexId vertex_id(const std::string& t) const;

    const std::vector<Simplex>& faces(int dim) const;
    int face_count(int dim) const { return static_cast<int>(faces(dim).size()); }
    const std::vector<Simplex>& facet_list() const { return facets_; }
    int total_face_count() const;

    bool contains(const Simplex& s) const;
    /// Position of s within its dimension's enumeration; throws missing-simplex.
    int face_index(const Simplex& s) const;
    bool is_facet(const Simplex& s) const;

    Simplex simplex_from_tokens(const std::vector<std::string>& toks) const;
    std::vector<std::string> tokens_of(const Simplex& s) const;
    std::string label_of(const Simplex& s) const;  // tokens joined by ' '

    std::vector<int> f_vector() const;
    long long euler_characteristic() const;
    bool is_pure() const;
    bool is_connected() const;  // via the 1-skeleton (true for empty)

    /// Facets of K containing s, as a list (lex order).
    std::vector<Simplex> facets_containing(const Simplex& s) const;

    SimplicialComplex link(const Simplex& s) const;
    SimplicialComplex star(const Simplex& s) const;

    /// Cone with an auto-generated apex token ("@c<i>", first free i).
    /// A user token equal to the generated one is a token-collision error.
    SimplicialComplex cone() const;
    /// Suspension: join with a two-point complex "@n<i>", "@s<i>".
    SimplicialComplex suspension() const;
    SimplicialComplex suspension_iterated(int k) const;

    /// Equality as labeled complexes: same token facet sets.
    bool same_labeled_complex(const SimplicialComplex& other) const;

    static SimplicialComplex read_facet_stream(std::istream& in);
    static SimplicialComplex read_facet_file(const std::string& path);
    void write_facet_stream(std::ostream& out) const;

private:
    static SimplicialComplex build_from_id_facets(std::vector<std::string> tokens,
                                                  std::vector<Simplex> raw_facets);

    std::vector<std::string> tokens_;           // id -> token, lex sorted
    std::map<std::string, VertexId> token_ids_;
    std::vector<Simplex> facets_;               // lex sorted, mutually non-nested
    std::vector<std::vector<Simplex>> faces_;   // per dimension, lex sorted
    std::vector<std::map<Simplex, int>> index_; // per dimension
    int dim_ = -1;

    friend SimplicialComplex join(const SimplicialComplex&, const SimplicialComplex&);
};

/// Join of two complexes on disjoint token sets (token-collision otherwise).
/// join(empty, K) = K.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

}  // namespace homcert
