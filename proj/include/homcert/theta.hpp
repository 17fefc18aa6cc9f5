#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homcert/bockstein.hpp"
#include "homcert/coefficients.hpp"
#include "homcert/manifold.hpp"

namespace homcert {

/// Invariant profile of a homology-sphere link: reduced homology by degree,
/// simple-connectivity verdict, and the sorted orders of finite quotients
/// found up to the catalog bound. Profiles are invariants, not complete;
/// unrecognized profiles get fresh conservative labels.
struct LinkProfile {
    std::vector<GroupDescriptor> homology;
    SCVerdictResult::Value sc = SCVerdictResult::Value::unknown;
    std::vector<long long> quotient_orders;

    std::string key() const;
};

struct LinkClassLabel {
    std::string name;
    LinkProfile profile;
    bool recognized = false;  // matched a registered profile ("S3", "Poincare")
    std::string warning;
};

/// The coefficient model for the group of homology 3-spheres up to homology
/// cobordism: free abelian on named link classes unless relations are
/// supplied, each generator carrying an optional Rokhlin value in Z/2.
/// Orientation reversal acts by negation.
class ThetaModel {
public:
    ThetaModel() = default;

    static ThetaModel free_on(const std::vector<std::pair<std::string, int>>& generators);
    static ThetaModel from_json_text(const std::string& text);
    std::string to_json_text() const;

    int generator_count() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    int index_of(const std::string& name) const;  // -1 when absent
    const std::optional<int>& rok(int i) const { return rok_.at(i); }
    void set_rok(const std::string& name, int value);
    const IntegerMatrix& relations() const { return relations_; }
    void set_relations(IntegerMatrix relations);

    bool auto_extend = true;
    /// Appends a generator with unassigned Rokhlin value; returns its index.
    int add_generator(const std::string& name);

    /// rok as a coefficient-sequence datum: each relation must have even
    /// rok-sum over assigned generators.
    void validate() const;

    /// Underlying coefficient system (orientation twist = negation).
    CoefficientSystem coefficient_system(bool twisted) const;

    /// rok applied to a value vector; error when an unassigned generator
    /// contributes (never silently zero).
    int rok_of_value(const std::vector<Int>& value) const;
    bool rok_surjective() const;
    bool rok_all_zero_or_unassigned() const;

    /// The kernel-of-rok sequence 0 -> ker(rok) -> model -> Z/2 -> 0.
    /// Requires a surjective rok.
    CoefficientSequence rok_kernel_sequence() const;

private:
    std::vector<std::string> names_;
    std::vector<std::optional<int>> rok_;
    IntegerMatrix relations_{0, 0};
};

/// Rokhlin value of the Poincare-sphere class from the E8 form: one eighth
/// of the signature of the 8x8 E8 intersection matrix, mod 2.
int poincare_rok_from_e8();
IntegerMatrix e8_intersection_matrix();

/// The model shipped by default: free on "Poincare" with the oracle value.
ThetaModel default_theta_model();

/// Classify the link of an (n-4)-simplex by invariant profile. The link must
/// have the homology of the 3-sphere. Registered profiles:
///   simply connected (verdict Yes)            -> "S3"
///   quotient orders containing {60, 120}      -> "Poincare"
/// Everything else gets a fresh profile-keyed label with a warning.
LinkClassLabel link_class_of(const SimplicialComplex& K, const Simplex& sigma,
                             const Budgets& budgets);

}  // namespace homcert
