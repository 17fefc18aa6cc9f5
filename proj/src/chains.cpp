#include "homcert/chains.hpp"

#include <algorithm>
#include <map>

#include "homcert/smith.hpp"

namespace homcert {

namespace {
const IntegerMatrix kEmptyMatrix;

void add_into(IntegerMatrix& dst, const IntegerMatrix& src) {
    for (int r = 0; r < src.rows(); ++r)
        for (const auto& [c, v] : src.row(r)) dst.add_to(r, c, v);
}
}  // namespace

const IntegerMatrix& FreeComplex::plain(int d) const {
    if (d < 0 || d >= static_cast<int>(d_plain.size())) return kEmptyMatrix;
    return d_plain[d];
}

const IntegerMatrix& FreeComplex::twist(int d) const {
    if (d < 0 || d >= static_cast<int>(d_twist.size())) return kEmptyMatrix;
    return d_twist[d];
}

void FreeComplex::verify_dd_zero() const {
    // (p1 + t q1)(p2 + t q2) = (p1 p2 + q1 q2) + t (p1 q2 + q1 p2)
    for (int d = 1; d <= top; ++d) {
        IntegerMatrix even = plain(d) * plain(d + 1);
        add_into(even, twist(d) * twist(d + 1));
        IntegerMatrix odd = plain(d) * twist(d + 1);
        add_into(odd, twist(d) * plain(d + 1));
        require(even.is_zero() && odd.is_zero(), errc::internal,
                "chain complex differential does not square to zero");
    }
}

FreeComplex simplicial_chains(const SimplicialComplex& K) {
    FreeComplex c;
    if (K.is_empty()) return c;
    c.top = K.dimension();
    c.size.resize(c.top + 1);
    c.labels.resize(c.top + 1);
    for (int d = 0; d <= c.top; ++d) {
        c.size[d] = K.face_count(d);
        for (const auto& s : K.faces(d)) c.labels[d].push_back(K.label_of(s));
    }
    c.d_plain.resize(c.top + 2);
    c.d_twist.resize(c.top + 2);
    c.d_plain[0] = IntegerMatrix(0, c.size[0]);
    c.d_twist[0] = IntegerMatrix(0, c.size[0]);
    for (int d = 1; d <= c.top; ++d) {
        IntegerMatrix m(c.size[d - 1], c.size[d]);
        const auto& cells = K.faces(d);
        for (int j = 0; j < static_cast<int>(cells.size()); ++j) {
            const Simplex& s = cells[j];
            for (size_t p = 0; p < s.v.size(); ++p) {
                Simplex f = s;
                f.v.erase(f.v.begin() + static_cast<long>(p));
                m.set(K.face_index(f), j, p % 2 == 0 ? 1 : -1);
            }
        }
        c.d_plain[d] = std::move(m);
        c.d_twist[d] = IntegerMatrix(c.size[d - 1], c.size[d]);
    }
    c.d_plain[c.top + 1] = IntegerMatrix(c.size[c.top], 0);
    c.d_twist[c.top + 1] = IntegerMatrix(c.size[c.top], 0);
    return c;
}

FreeComplex cover_chains(const DoubleCover& cover) {
    const SimplicialComplex& T = cover.total;
    const SimplicialComplex& B = cover.base;
    FreeComplex c;
    c.equivariant = true;
    c.top = B.dimension();
    c.size.resize(c.top + 1);
    c.labels.resize(c.top + 1);

    // Orbit representatives: the lexicographically smaller lift per base
    // simplex, indexed like the base enumeration.
    std::vector<std::map<Simplex, std::pair<int, bool>>> lift_info(c.top + 1);
    std::vector<std::vector<Simplex>> reps(c.top + 1);
    for (int d = 0; d <= c.top; ++d) {
        std::map<Simplex, std::vector<Simplex>> by_base;
        for (const auto& s : T.faces(d)) by_base[cover.project(s)].push_back(s);
        const auto& base_faces = B.faces(d);
        reps[d].resize(base_faces.size());
        for (int j = 0; j < static_cast<int>(base_faces.size()); ++j) {
            auto it = by_base.find(base_faces[j]);
            require(it != by_base.end() && it->second.size() == 2, errc::internal,
                    "cover is not two-to-one");
            std::sort(it->second.begin(), it->second.end());
            reps[d][j] = it->second[0];
            lift_info[d][it->second[0]] = {j, true};
            lift_info[d][it->second[1]] = {j, false};
        }
        c.size[d] = static_cast<int>(base_faces.size());
        for (const auto& s : base_faces) c.labels[d].push_back(B.label_of(s));
    }

    c.d_plain.resize(c.top + 2);
    c.d_twist.resize(c.top + 2);
    c.d_plain[0] = IntegerMatrix(0, c.size[0]);
    c.d_twist[0] = IntegerMatrix(0, c.size[0]);
    for (int d = 1; d <= c.top; ++d) {
        IntegerMatrix p(c.size[d - 1], c.size[d]);
        IntegerMatrix q(c.size[d - 1], c.size[d]);
        for (int j = 0; j < c.size[d]; ++j) {
            const Simplex& rep = reps[d][j];
            for (size_t pos = 0; pos < rep.v.size(); ++pos) {
                Simplex f = rep;
                f.v.erase(f.v.begin() + static_cast<long>(pos));
                auto [idx, is_rep] = lift_info[d - 1].at(f);
                int sign = pos % 2 == 0 ? 1 : -1;
                if (is_rep)
                    p.add_to(idx, j, sign);
                else
                    q.add_to(idx, j, sign);
            }
        }
        c.d_plain[d] = std::move(p);
        c.d_twist[d] = std::move(q);
    }
    c.d_plain[c.top + 1] = IntegerMatrix(c.size[c.top], 0);
    c.d_twist[c.top + 1] = IntegerMatrix(c.size[c.top], 0);
    return c;
}

FreeComplex augmented_shifted(const FreeComplex& c) {
    require(!c.equivariant, errc::internal, "augmentation of equivariant complexes unsupported");
    FreeComplex a;
    a.top = c.top + 1;
    a.size.assign(a.top + 1, 0);
    a.labels.resize(a.top + 1);
    a.size[0] = 1;
    a.labels[0] = {"(augmentation)"};
    for (int d = 0; d <= c.top; ++d) {
        a.size[d + 1] = c.size[d];
        a.labels[d + 1] = c.labels[d];
    }
    a.d_plain.resize(a.top + 2);
    a.d_twist.resize(a.top + 2);
    a.d_plain[0] = IntegerMatrix(0, 1);
    a.d_twist[0] = IntegerMatrix(0, 1);
    IntegerMatrix aug(1, c.size_at(0));
    for (int j = 0; j < c.size_at(0); ++j) aug.set(0, j, 1);
    a.d_twist[1] = IntegerMatrix(1, c.size_at(0));
    a.d_plain[1] = std::move(aug);
    for (int d = 1; d <= c.top + 1; ++d) {
        a.d_plain[d + 1] = c.plain(d);
        a.d_twist[d + 1] = c.twist(d);
    }
    return a;
}

FreeComplex dualized(const FreeComplex& c) {
    FreeComplex x;
    x.equivariant = c.equivariant;
    x.top = c.top;
    if (c.top < 0) return x;
    x.size.resize(c.top + 1);
    x.labels.resize(c.top + 1);
    for (int j = 0; j <= c.top; ++j) {
        x.size[j] = c.size[c.top - j];
        x.labels[j] = c.labels[c.top - j];
    }
    x.d_plain.resize(c.top + 2);
    x.d_twist.resize(c.top + 2);
    for (int j = 0; j <= c.top + 1; ++j) {
        // X_j -> X_{j-1} is the coboundary from (top-j)-cochains: the
        // transpose of the (top-j+1)-boundary.
        int d = c.top - j + 1;
        if (d < 0 || d > c.top + 1) {
            x.d_plain[j] = IntegerMatrix(x.size_at(j - 1), x.size_at(j));
            x.d_twist[j] = x.d_plain[j];
        } else {
            x.d_plain[j] = c.plain(d).transpose();
            x.d_twist[j] = c.twist(d).transpose();
        }
    }
    return x;
}

const IntegerMatrix& ChainComplexData::boundary_at(int d) const {
    if (d < 0 || d >= static_cast<int>(boundary.size())) return kEmptyMatrix;
    return boundary[d];
}

void ChainComplexData::verify_dd_zero() const {
    for (int d = 1; d <= top; ++d) {
        IntegerMatrix prod = boundary_at(d) * boundary_at(d + 1);
        require(prod.is_zero(), errc::internal, "assembled boundary does not square to zero");
    }
}

ChainComplexData assemble(const FreeComplex& c, const CoefficientSystem& coeffs) {
    ChainComplexData out;
    out.coeffs = coeffs;
    if (c.top < 0) return out;
    const int g = coeffs.generators();
    const int r = coeffs.relation_count();
    const IntegerMatrix& R = coeffs.relations();
    const bool tw = coeffs.twisted();

    // The mapping cone of (chains (x) relations) -> (chains (x) generators):
    //   T_d = C_d (x) Z^g  (+)  C_{d-1} (x) Z^r,
    //   D(x, y) = (D x + (1 (x) R^T) y, -D y).
    // With independent relation rows the cone computes H_*( - ; A) exactly.
    out.top = c.top + (r > 0 ? 1 : 0);
    auto cells_at = [&](int d) { return (d < 0 || d > c.top) ? 0 : c.size[d]; };
    out.size.resize(out.top + 1);
    out.cells.resize(out.top + 1);
    out.labels.resize(out.top + 1);
    for (int d = 0; d <= out.top; ++d) {
        out.cells[d] = cells_at(d);
        out.size[d] = cells_at(d) * g + cells_at(d - 1) * r;
        for (int i = 0; i < cells_at(d); ++i) {
            if (g == 1 && r == 0)
                out.labels[d].push_back(c.labels[d][i]);
            else
                for (int a = 0; a < g; ++a)
                    out.labels[d].push_back(c.labels[d][i] + "#g" + std::to_string(a));
        }
        for (int i = 0; i < cells_at(d - 1); ++i)
            for (int b = 0; b < r; ++b)
                out.labels[d].push_back(c.labels[d - 1][i] + "#r" + std::to_string(b));
    }

    // Expand a group-ring matrix block into the assembled matrix with the
    // coefficient action on the twisted part.
    auto expand = [&](const IntegerMatrix& plain, const IntegerMatrix& twist, int gen_dim,
                      const IntegerMatrix& act, IntegerMatrix& dst, int r0, int c0, int scale) {
        for (int row = 0; row < plain.rows(); ++row)
            for (const auto& [col, v] : plain.row(row))
                for (int a = 0; a < gen_dim; ++a)
                    dst.add_to(r0 + row * gen_dim + a, c0 + col * gen_dim + a, v * scale);
        for (int row = 0; row < twist.rows(); ++row)
            for (const auto& [col, v] : twist.row(row)) {
                if (tw) {
                    for (int a = 0; a < gen_dim; ++a)
                        for (const auto& [b, t] : act.row(a))
                            dst.add_to(r0 + row * gen_dim + a, c0 + col * gen_dim + b,
                                       v * t * scale);
                } else {
                    for (int a = 0; a < gen_dim; ++a)
                        dst.add_to(r0 + row * gen_dim + a, c0 + col * gen_dim + a, v * scale);
                }
            }
    };

    out.boundary.resize(out.top + 2);
    out.boundary[0] = IntegerMatrix(0, out.size[0]);
    for (int d = 1; d <= out.top + 1; ++d) {
        IntegerMatrix m(out.size_at(d - 1), out.size_at(d));
        expand(c.plain(d), c.twist(d), g, coeffs.twist(), m, 0, 0, 1);
        if (r > 0) {
            const int col0 = cells_at(d) * g;
            // 1 (x) R^T from the relation block into the generator rows.
            for (int i = 0; i < cells_at(d - 1); ++i)
                for (int b = 0; b < r; ++b)
                    for (const auto& [a, v] : R.row(b)) m.add_to(i * g + a, col0 + i * r + b, v);
            // -D_{d-1} (x) id_r between the relation blocks.
            const int row0 = cells_at(d - 1) * g;
            expand(c.plain(d - 1), c.twist(d - 1), r, coeffs.relation_twist(), m, row0, col0, -1);
        }
        out.boundary[d] = std::move(m);
    }
    return out;
}

ChainComplexData simplicial_chain_complex(const SimplicialComplex& K,
                                          const CoefficientSystem& coeffs) {
    if (coeffs.twisted()) {
        auto orient = orientability_and_double_cover(K);
        return assemble(cover_chains(orient.cover), coeffs);
    }
    return assemble(simplicial_chains(K), coeffs);
}

GroupDescriptor homology_of(const ChainComplexData& data, int d) {
    if (d < 0 || d > data.top) return GroupDescriptor{};
    SNFResult out_snf = smith_normal_form(data.boundary_at(d), false);
    SNFResult in_snf = smith_normal_form(data.boundary_at(d + 1), false);
    GroupDescriptor g;
    g.free_rank = data.size_at(d) - out_snf.rank - in_snf.rank;
    for (const Int& t : in_snf.divisors)
        if (t > 1) g.torsion.push_back(t);
    return g;
}

GroupDescriptor homology(const SimplicialComplex& K, int d, const CoefficientSystem& coeffs) {
    if (K.is_empty()) return GroupDescriptor{};
    ChainComplexData data = simplicial_chain_complex(K, coeffs);
    return homology_of(data, d);
}

GroupDescriptor cohomology(const SimplicialComplex& K, int d, const CoefficientSystem& coeffs) {
    if (K.is_empty()) return GroupDescriptor{};
    require(!coeffs.twisted(), errc::bad_argument, "cohomology expects an untwisted system");
    FreeComplex x = dualized(simplicial_chains(K));
    ChainComplexData data = assemble(x, coeffs);
    return homology_of(data, x.top - d);  // H^d at reversed degree top - d
}

TwistedHomologyResult twisted_homology(const DoubleCover& cover, int d,
                                       const CoefficientSystem& coeffs) {
    TwistedHomologyResult res;
    if (!coeffs.twisted()) {
        res.note = "untwisted coefficients: equal to the ordinary homology of the base";
        res.group = homology(cover.base, d, coeffs);
        return res;
    }
    ChainComplexData data = assemble(cover_chains(cover), coeffs);
    res.group = homology_of(data, d);
    return res;
}

ReducedHomology reduced_homology(const SimplicialComplex& K) {
    ReducedHomology out;
    if (K.is_empty()) {
        out.empty_complex = true;
        return out;
    }
    ChainComplexData data =
        assemble(augmented_shifted(simplicial_chains(K)), CoefficientSystem::integers());
    out.groups.resize(K.dimension() + 1);
    for (int d = 0; d <= K.dimension(); ++d) out.groups[d] = homology_of(data, d + 1);
    return out;
}

long long euler_characteristic_mod_p(const SimplicialComplex& K, const Int& p) {
    ChainComplexData data = simplicial_chain_complex(K, CoefficientSystem::integers_mod(p));
    long long chi = 0;
    for (int d = 0; d <= K.dimension(); ++d) {
        GroupDescriptor g = homology_of(data, d);
        long long betti = g.free_rank + static_cast<long long>(g.torsion.size());
        chi += (d % 2 == 0 ? 1 : -1) * betti;
    }
    return chi;
}

std::vector<std::vector<Int>> apply_differential(const FreeComplex& c, int d,
                                                 const CoefficientSystem& coeffs,
                                                 const std::vector<std::vector<Int>>& values) {
    const int g = coeffs.generators();
    require(static_cast<int>(values.size()) == c.size_at(d), errc::bad_argument,
            "apply_differential: value count mismatch");
    std::vector<std::vector<Int>> out(c.size_at(d - 1), std::vector<Int>(g, 0));
    const IntegerMatrix& P = c.plain(d);
    const IntegerMatrix& Q = c.twist(d);
    for (int row = 0; row < c.size_at(d - 1); ++row)
        for (const auto& [col, v] : P.row(row))
            for (int a = 0; a < g; ++a) out[row][a] += v * values[col][a];
    for (int row = 0; row < c.size_at(d - 1); ++row)
        for (const auto& [col, v] : Q.row(row)) {
            if (coeffs.twisted()) {
                for (int a = 0; a < g; ++a)
                    for (const auto& [b, t] : coeffs.twist().row(a))
                        out[row][a] += v * t * values[col][b];
            } else {
                for (int a = 0; a < g; ++a) out[row][a] += v * values[col][a];
            }
        }
    return out;
}

}  // namespace homcert
