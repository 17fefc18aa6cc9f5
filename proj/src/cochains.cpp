#include "homcert/cochains.hpp"

#include <algorithm>

namespace homcert {

std::string ClassHandle::coords_string() const {
    std::string s = "(";
    bool first = true;
    for (const Int& c : torsion_coords) {
        if (!first) s += ", ";
        s += c.str();
        first = false;
    }
    for (const Int& c : free_coords) {
        if (!first) s += ", ";
        s += c.str();
        first = false;
    }
    return s + ")";
}

ComplexCalculator::DegreeData& ComplexCalculator::degree(int d) {
    auto it = degree_cache_.find(d);
    if (it != degree_cache_.end()) return it->second;

    DegreeData dd;
    dd.out_snf = smith_normal_form(data_.boundary_at(d));
    const int n = data_.size_at(d);
    dd.kernel_dim = n - dd.out_snf.rank;

    // Image of D_{d+1} written in kernel coordinates: rows rank..n of
    // Vinv * D_{d+1}.
    const IntegerMatrix& din = data_.boundary_at(d + 1);
    dd.image_in_kernel = IntegerMatrix(dd.kernel_dim, din.cols());
    for (int i = 0; i < dd.kernel_dim; ++i) {
        for (const auto& [k, v] : dd.out_snf.Vinv.row(dd.out_snf.rank + i))
            for (const auto& [c, w] : din.row(k)) dd.image_in_kernel.add_to(i, c, v * w);
    }
    dd.image_snf = smith_normal_form(dd.image_in_kernel);

    dd.group.free_rank = dd.kernel_dim - dd.image_snf.rank;
    for (int i = 0; i < dd.image_snf.rank; ++i) {
        if (dd.image_snf.divisors[i] > 1) {
            dd.group.torsion.push_back(dd.image_snf.divisors[i]);
            dd.torsion_positions.push_back(i);
        }
    }
    for (int i = dd.image_snf.rank; i < dd.kernel_dim; ++i) dd.free_positions.push_back(i);

    return degree_cache_.emplace(d, std::move(dd)).first->second;
}

const SNFResult& ComplexCalculator::incoming_snf(int d) {
    auto it = incoming_cache_.find(d);
    if (it != incoming_cache_.end()) return it->second;
    return incoming_cache_.emplace(d, smith_normal_form(data_.boundary_at(d + 1))).first->second;
}

GroupDescriptor ComplexCalculator::group(int d) {
    if (d < 0 || d > data_.top) return GroupDescriptor{};
    auto cached = group_cache_.find(d);
    if (cached != group_cache_.end()) return cached->second;
    auto deg = degree_cache_.find(d);
    GroupDescriptor g =
        deg != degree_cache_.end() ? deg->second.group : homology_of(data_, d);
    group_cache_[d] = g;
    return g;
}

bool ComplexCalculator::is_cycle(int d, const std::vector<Int>& x) const {
    const IntegerMatrix& m = data_.boundary_at(d);
    require(static_cast<int>(x.size()) == data_.size_at(d), errc::bad_argument,
            "is_cycle: size mismatch");
    std::vector<Int> y = m.apply(x);
    for (const Int& v : y)
        if (v != 0) return false;
    return true;
}

ClassHandle ComplexCalculator::class_of(int d, const std::vector<Int>& x) {
    require(is_cycle(d, x), errc::not_a_cocycle, "class_of: vector is not closed");
    DegreeData& dd = degree(d);

    std::vector<Int> y = dd.out_snf.Vinv.apply(x);
    for (int i = 0; i < dd.out_snf.rank; ++i)
        require(y[i] == 0, errc::internal, "cycle has coordinates outside the kernel");
    std::vector<Int> ky(y.begin() + dd.out_snf.rank, y.end());

    std::vector<Int> c = dd.image_snf.U.apply(ky);
    ClassHandle h;
    h.group = dd.group;
    for (size_t t = 0; t < dd.torsion_positions.size(); ++t) {
        const Int& m = dd.group.torsion[t];
        Int v = c[dd.torsion_positions[t]] % m;
        if (v < 0) v += m;
        h.torsion_coords.push_back(v);
    }
    for (int pos : dd.free_positions) h.free_coords.push_back(c[pos]);
    return h;
}

std::optional<std::vector<Int>> ComplexCalculator::boundary_witness(int d,
                                                                    const std::vector<Int>& x) {
    if (d + 1 > data_.top) {
        bool zero = true;
        for (const Int& v : x) zero = zero && v == 0;
        if (zero) return std::vector<Int>(data_.size_at(d + 1), 0);
        return std::nullopt;
    }
    return incoming_snf(d).solve(x);
}

std::vector<Int> ComplexCalculator::representative(int d, const std::vector<Int>& torsion_coords,
                                                   const std::vector<Int>& free_coords) {
    DegreeData& dd = degree(d);
    require(torsion_coords.size() == dd.torsion_positions.size() &&
                free_coords.size() == dd.free_positions.size(),
            errc::bad_argument, "representative: coordinate count mismatch");
    std::vector<Int> c(dd.kernel_dim, 0);
    for (size_t t = 0; t < dd.torsion_positions.size(); ++t)
        c[dd.torsion_positions[t]] = torsion_coords[t];
    for (size_t f = 0; f < dd.free_positions.size(); ++f) c[dd.free_positions[f]] = free_coords[f];
    std::vector<Int> ky = dd.image_snf.Uinv.apply(c);
    // Back to chain coordinates through the kernel basis (columns rank.. of V).
    std::vector<Int> x(data_.size_at(d), 0);
    for (int j = 0; j < data_.size_at(d); ++j) {
        for (const auto& [col, v] : dd.out_snf.V.row(j)) {
            int i = col - dd.out_snf.rank;
            if (i >= 0 && ky[i] != 0) x[j] += v * ky[i];
        }
    }
    return x;
}

std::vector<Int> ComplexCalculator::canonical_cycle(int d, const std::vector<Int>& x) {
    ClassHandle h = class_of(d, x);
    return representative(d, h.torsion_coords, h.free_coords);
}

CochainCalculator::CochainCalculator(FreeComplex complex, CoefficientSystem coeffs,
                                     std::string basis_name, Mode mode)
    : complex_(std::move(complex)),
      graded_(mode == Mode::cochain ? dualized(complex_) : complex_),
      coeffs_(std::move(coeffs)),
      data_(assemble(graded_, coeffs_)),
      calc_(data_),
      basis_name_(std::move(basis_name)),
      mode_(mode) {
    if (coeffs_.relation_count() > 0)
        relation_solver_ = smith_normal_form(coeffs_.relations().transpose());
}

const std::vector<std::string>& CochainCalculator::labels_at(int d) const {
    static const std::vector<std::string> kNone;
    if (d < 0 || d > complex_.top) return kNone;
    return complex_.labels[d];
}

GroupDescriptor CochainCalculator::group_at(int d) {
    int j = internal_degree(d);
    if (d < 0 || d > complex_.top) return GroupDescriptor{};
    return calc_.group(j);
}

Cochain CochainCalculator::zero_at(int d) const {
    return Cochain::zero(d, basis_name_, coeffs_.generators(), complex_.size_at(d));
}

void CochainCalculator::check_shape(const Cochain& x) const {
    require(x.coeff_generators == coeffs_.generators(), errc::bad_argument,
            "cochain coefficient width does not match the coefficient system");
    require(static_cast<int>(x.values.size()) == complex_.size_at(x.dimension),
            errc::bad_argument, "cochain length does not match the basis");
}

Cochain CochainCalculator::differential(const Cochain& x) const {
    check_shape(x);
    int j = internal_degree(x.dimension);
    std::vector<std::vector<Int>> out = apply_differential(graded_, j, coeffs_, x.values);
    Cochain y;
    y.dimension = mode_ == Mode::cochain ? x.dimension + 1 : x.dimension - 1;
    y.basis = basis_name_;
    y.coeff_generators = coeffs_.generators();
    y.values = std::move(out);
    return y;
}

std::vector<Int> CochainCalculator::embed(const Cochain& x) {
    check_shape(x);
    const int j = internal_degree(x.dimension);
    const int g = coeffs_.generators();
    const int r = coeffs_.relation_count();
    std::vector<Int> assembled(data_.size_at(j), 0);
    for (size_t i = 0; i < x.values.size(); ++i)
        for (int a = 0; a < g; ++a) assembled[i * g + a] = x.values[i][a];
    if (r == 0) {
        require(calc_.is_cycle(j, assembled), errc::not_a_cocycle,
                "values are not closed under the differential");
        return assembled;
    }
    // Relation witness: solve R^T y = -(d x) cellwise.
    Cochain dx = differential(x);
    const int lower_cells = graded_.size_at(j - 1);
    const int offset = graded_.size_at(j) * g;
    for (int e = 0; e < lower_cells; ++e) {
        std::vector<Int> rhs(g, 0);
        for (int a = 0; a < g; ++a) rhs[a] = -dx.values[e][a];
        auto y = relation_solver_->solve(rhs);
        require(y.has_value(), errc::not_a_cocycle,
                "values are not closed modulo the coefficient relations");
        for (int b = 0; b < r; ++b) assembled[offset + e * r + b] = (*y)[b];
    }
    require(calc_.is_cycle(j, assembled), errc::internal,
            "relation witness failed to close the assembled cycle");
    return assembled;
}

Cochain CochainCalculator::extract(int d, const std::vector<Int>& assembled) const {
    const int g = coeffs_.generators();
    Cochain out = zero_at(d);
    for (size_t i = 0; i < out.values.size(); ++i)
        for (int a = 0; a < g; ++a) out.values[i][a] = assembled[i * g + a];
    return out;
}

bool CochainCalculator::is_closed(const Cochain& x) {
    try {
        embed(x);
        return true;
    } catch (const Error& e) {
        if (e.code() == errc::not_a_cocycle) return false;
        throw;
    }
}

ClassHandle CochainCalculator::class_of(const Cochain& x) {
    return calc_.class_of(internal_degree(x.dimension), embed(x));
}

std::optional<Cochain> CochainCalculator::witness(const Cochain& x) {
    std::vector<Int> assembled = embed(x);
    const int j = internal_degree(x.dimension);
    auto w = calc_.boundary_witness(j, assembled);
    if (!w) return std::nullopt;
    int wd = mode_ == Mode::cochain ? x.dimension - 1 : x.dimension + 1;
    return extract(wd, *w);
}

Cochain CochainCalculator::reduce_representative(const Cochain& x) {
    const int j = internal_degree(x.dimension);
    std::vector<Int> canon = calc_.canonical_cycle(j, embed(x));
    return extract(x.dimension, canon);
}

Cochain CochainCalculator::generator(int d, int idx) {
    const int j = internal_degree(d);
    GroupDescriptor g = calc_.group(j);
    const int nt = static_cast<int>(g.torsion.size());
    require(idx >= 0 && idx < nt + g.free_rank, errc::bad_argument,
            "generator index out of range");
    std::vector<Int> tc(nt, 0), fc(g.free_rank, 0);
    if (idx < nt)
        tc[idx] = 1;
    else
        fc[idx - nt] = 1;
    return extract(d, calc_.representative(j, tc, fc));
}

Cochain CochainCalculator::from_class(int d, const ClassHandle& h) {
    const int j = internal_degree(d);
    return extract(d, calc_.representative(j, h.torsion_coords, h.free_coords));
}

}  // namespace homcert
