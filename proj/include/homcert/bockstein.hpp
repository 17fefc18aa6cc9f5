#pragma once

#include <optional>

#include "homcert/cochains.hpp"

namespace homcert {

/// A short exact sequence of coefficient systems 0 -> A -> B -> C -> 0 given
/// by explicit generator maps. Exactness is verified on construction.
struct CoefficientSequence {
    CoefficientSystem sub;   // A
    CoefficientSystem mid;   // B
    CoefficientSystem quot;  // C
    IntegerMatrix incl;      // generators(A) -> generators(B)
    IntegerMatrix proj;      // generators(B) -> generators(C)

    void verify_exact() const;

    /// 0 -> Z --k--> Z -> Z/k -> 0.
    static CoefficientSequence multiplication_by(const Int& k);
};

struct BocksteinResult {
    ClassHandle cls;         // in H^{d+1}( - ; A)
    Cochain representative;  // an A-valued (d+1)-cocycle
};

/// Connecting homomorphism of the coefficient sequence: lift the C-valued
/// cocycle to B entrywise, take the coboundary, divide back into A, and take
/// the class. The cochain complex is the one underlying `calcC` (cochains of
/// a free complex); the same free complex is reused over A.
BocksteinResult bockstein(const FreeComplex& complex, const std::string& basis_name,
                          const Cochain& x, const CoefficientSequence& seq);

/// Direct-solve oracle for exactness: does x lift to a B-valued cocycle up
/// to a C-coboundary? Equivalent to bockstein(x) = 0.
bool lifts_to_middle(const FreeComplex& complex, const Cochain& x,
                     const CoefficientSequence& seq);

}  // namespace homcert
