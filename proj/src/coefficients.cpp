#include "homcert/coefficients.hpp"

#include "homcert/smith.hpp"

namespace homcert {

CoefficientSystem CoefficientSystem::integers() {
    CoefficientSystem c;
    c.kind_ = Kind::integers;
    c.generators_ = 1;
    c.relations_ = IntegerMatrix(0, 1);
    return c;
}

CoefficientSystem CoefficientSystem::integers_mod(const Int& k) {
    require(k > 1, errc::bad_argument, "integers_mod requires modulus > 1");
    CoefficientSystem c;
    c.kind_ = Kind::integers_mod;
    c.generators_ = 1;
    c.relations_ = IntegerMatrix(1, 1);
    c.relations_.set(0, 0, k);
    return c;
}

CoefficientSystem CoefficientSystem::presented(int generators, const IntegerMatrix& relations) {
    require(generators >= 0, errc::bad_argument, "negative generator count");
    require(relations.cols() == generators, errc::bad_argument,
            "relation matrix column count must equal generator count");
    CoefficientSystem c;
    c.kind_ = Kind::presented;
    c.generators_ = generators;
    c.relations_ = relations;
    c.normalize_relations();
    return c;
}

void CoefficientSystem::normalize_relations() {
    if (relations_.rows() == 0) return;
    // Replace the relation rows by an independent basis of the same row
    // lattice: the nonzero rows of S * Vinv from the SNF of R.
    SNFResult snf = smith_normal_form(relations_);
    IntegerMatrix out(snf.rank, generators_);
    for (int i = 0; i < snf.rank; ++i) {
        for (int c = 0; c < generators_; ++c) {
            Int v = snf.Vinv.get(i, c) * snf.divisors[i];
            if (v != 0) out.set(i, c, v);
        }
    }
    relations_ = std::move(out);
}

CoefficientSystem CoefficientSystem::with_orientation_twist() const {
    IntegerMatrix neg(generators_, generators_);
    for (int i = 0; i < generators_; ++i) neg.set(i, i, -1);
    return with_twist(neg);
}

CoefficientSystem CoefficientSystem::with_twist(const IntegerMatrix& automorphism) const {
    require(automorphism.rows() == generators_ && automorphism.cols() == generators_,
            errc::bad_argument, "twist automorphism has wrong shape");
    CoefficientSystem c = *this;
    c.twisted_ = true;
    c.twist_ = automorphism;
    c.derive_relation_twist();
    // Involution on the quotient: T^2 - I must land rows in the relation
    // lattice.
    IntegerMatrix sq = automorphism * automorphism;
    for (int i = 0; i < generators_; ++i) {
        std::vector<Int> row(generators_, 0);
        for (int j = 0; j < generators_; ++j) row[j] = sq.get(i, j) - (i == j ? 1 : 0);
        bool zero = true;
        for (const Int& v : row) zero = zero && v == 0;
        if (!zero)
            require(c.relation_lattice_contains(row), errc::bad_argument,
                    "twist automorphism is not an involution on the quotient");
    }
    return c;
}

CoefficientSystem CoefficientSystem::untwisted() const {
    CoefficientSystem c = *this;
    c.twisted_ = false;
    c.twist_ = IntegerMatrix();
    c.relation_twist_ = IntegerMatrix();
    return c;
}

void CoefficientSystem::derive_relation_twist() {
    const int r = relations_.rows();
    relation_twist_ = IntegerMatrix(r, r);
    if (r == 0) return;
    // Solve twist * R^T = R^T * X column by column; existence means the
    // twist preserves the relation lattice.
    IntegerMatrix rt = relations_.transpose();  // g x r
    SNFResult snf = smith_normal_form(rt);
    for (int j = 0; j < r; ++j) {
        std::vector<Int> col(generators_, 0);
        for (int i = 0; i < generators_; ++i) {
            for (const auto& [c, v] : twist_.row(i))
                col[i] += v * relations_.get(j, c);
        }
        auto x = snf.solve(col);
        require(x.has_value(), errc::bad_argument,
                "twist automorphism does not preserve the relation lattice");
        for (int i = 0; i < r; ++i)
            if ((*x)[i] != 0) relation_twist_.set(i, j, (*x)[i]);
    }
}

GroupDescriptor CoefficientSystem::classify() const {
    GroupDescriptor g;
    if (relations_.rows() == 0) {
        g.free_rank = generators_;
        return g;
    }
    SNFResult snf = smith_normal_form(relations_, false);
    g.free_rank = generators_ - snf.rank;
    for (const Int& d : snf.divisors)
        if (d > 1) g.torsion.push_back(d);
    return g;
}

bool CoefficientSystem::relation_lattice_contains(const std::vector<Int>& v) const {
    bool zero = true;
    for (const Int& x : v) zero = zero && x == 0;
    if (zero) return true;
    if (relations_.rows() == 0) return false;
    SNFResult snf = smith_normal_form(relations_.transpose());
    return snf.solve(v).has_value();
}

std::string CoefficientSystem::describe() const {
    std::string s;
    switch (kind_) {
        case Kind::integers: s = "Z"; break;
        case Kind::integers_mod: s = "Z/" + relations_.get(0, 0).str(); break;
        case Kind::presented: s = classify().to_string(); break;
    }
    if (twisted_) s += " (orientation-twisted)";
    return s;
}

}  // namespace homcert
