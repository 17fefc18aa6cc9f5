#pragma once

#include <optional>
#include <string>

#include "homcert/descriptor.hpp"
#include "homcert/matrix.hpp"

namespace homcert {

/// A coefficient system: a finitely presented abelian group Z^g / rowspace(R)
/// with an optional Z/2 action (the generator of Z/2 acts through `twist`,
/// an involution preserving the relation lattice). The orientation twist is
/// negation.
class CoefficientSystem {
public:
    enum class Kind { integers, integers_mod, presented };

    CoefficientSystem() = default;  // the integers

    static CoefficientSystem integers();
    static CoefficientSystem integers_mod(const Int& k);
    static CoefficientSystem presented(int generators, const IntegerMatrix& relations);

    CoefficientSystem with_orientation_twist() const;
    CoefficientSystem with_twist(const IntegerMatrix& automorphism) const;
    CoefficientSystem untwisted() const;

    Kind kind() const { return kind_; }
    int generators() const { return generators_; }
    /// Relations with independent rows (normalized at construction; the
    /// presented group is unchanged).
    const IntegerMatrix& relations() const { return relations_; }
    int relation_count() const { return relations_.rows(); }
    bool twisted() const { return twisted_; }
    const IntegerMatrix& twist() const { return twist_; }
    /// Action induced on the relation module (solves twist * R^T = R^T * X).
    const IntegerMatrix& relation_twist() const { return relation_twist_; }

    /// Classification of the underlying group (reporting only).
    GroupDescriptor classify() const;

    /// Membership of v in the relation lattice.
    bool relation_lattice_contains(const std::vector<Int>& v) const;

    std::string describe() const;

private:
    void normalize_relations();
    void derive_relation_twist();

    Kind kind_ = Kind::integers;
    int generators_ = 1;
    IntegerMatrix relations_{0, 1};
    bool twisted_ = false;
    IntegerMatrix twist_;
    IntegerMatrix relation_twist_;
};

}  // namespace homcert
