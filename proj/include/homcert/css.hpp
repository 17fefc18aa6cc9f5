#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homcert/bockstein.hpp"
#include "homcert/cochains.hpp"
#include "homcert/conical.hpp"
#include "homcert/cover.hpp"
#include "homcert/theta.hpp"

namespace homcert {

struct CssOptions {
    Budgets budgets;
    bool flip_orientation = false;  // negate the global orientation choice
    bool verify_conical_homology = true;
};

/// Everything the codimension-four pipeline produces for one complex.
struct CssReport {
    int dimension = -1;
    bool orientable = false;
    ThetaModel model;  // possibly auto-extended with fresh labels

    std::vector<std::string> cone_labels;  // dual 4-cone basis ((n-4)-simplices)
    std::vector<std::string> link_label_names;  // per cone: class label name
    Cochain cochain;                            // model-valued 4-cochain on dual cones
    bool is_cocycle = false;

    ClassHandle css_class;  // in the dual-cone model of H^4( - ; model)
    std::optional<Cochain> class_witness;  // coboundary witness when the class vanishes
    std::vector<std::string> witness_labels;  // dual 3-cone basis ((n-3)-simplices)
    bool h4_descriptors_match = false;     // dual-cone H^4 vs simplicial H^4 (orientable)

    Cochain ksm;  // Z/2 reduction
    bool ksm_is_cocycle = false;

    GroupDescriptor obstruction_group;  // H^5( - ; ker rok), dual-cone model
    ClassHandle obstruction;
    bool obstruction_defined = false;
    bool obstruction_lift_consistent = false;  // beta = 0 <=> ksm lifts (oracle)
    std::string obstruction_note;

    Cochain homology_chain;  // model-valued on (n-4)-simplices (cover orbit basis)
    Cochain homology_chain_sheet0;  // the same chain through the sheet-0 transport
    ClassHandle homology_class;  // in twisted H_{n-4}(cover; model with negation)
    bool chain_is_cycle = false;

    bool duality = false;
    bool incidence_permutation = false;

    std::vector<std::string> warnings;
};

/// Orientation bookkeeping shared by the cochain and the chain routes.
struct CssOrientations {
    DoubleCover cover;
    bool orientable = false;
    std::vector<int> base_orientation;   // per base facet (orientable only)
    std::vector<int> cover_orientation;  // per cover facet
    std::vector<int> vertex_component;   // cover vertex -> component id (0 = sheet 0)
    int component_count = 1;

    bool simplex_in_sheet0(const Simplex& cover_simplex) const;
};

CssOrientations css_orientations(const SimplicialComplex& K, bool flip);

/// The model-valued 4-cochain on dual cones: the value on +cone(s) is the
/// class of link(s) with the orientation induced by the sorted orientation
/// of s together with the global orientation; links labeled "S3" contribute
/// zero. Auto-extends the model with fresh labels unless disabled.
Cochain css_cochain(const SimplicialComplex& K, const ManifoldReport& cert, ThetaModel& model,
                    const CssOptions& options = {});

/// delta(cochain) = 0 in the conical complex; exact.
bool verify_cocycle(const ConicalChainComplex& conical, const ThetaModel& model,
                    const Cochain& cochain);

ClassHandle css_class(const ConicalChainComplex& conical, const ThetaModel& model,
                      const Cochain& cochain);

/// Entrywise Rokhlin reduction; missing rok on a contributing generator is
/// an error, never silently zero.
Cochain rokhlin_reduction(const Cochain& cochain, const ThetaModel& model);

struct ObstructionResult {
    GroupDescriptor group;
    ClassHandle cls;
    bool zero = false;
    bool lift_exists = false;
    bool defined = false;  // false when ker(rok) collapses the question
    std::string note;
};

/// Bockstein of the Kirby-Siebenmann cochain through
/// 0 -> ker(rok) -> model -> Z/2 -> 0 over an arbitrary cochain context
/// (simplicial chains of any complex, or a conical complex).
ObstructionResult triangulation_obstruction(const FreeComplex& context,
                                            const std::string& basis_name, const Cochain& ksm,
                                            const ThetaModel& model);

struct TwistedClassResult {
    Cochain chain;  // model-valued coefficients on the (n-4) orbit basis
    ClassHandle cls;
    bool is_cycle = false;
};

/// The homology-picture class: the chain assigning to each (n-4)-simplex the
/// class of its link, oriented by the canonical orientation of the double
/// cover, with its class in the orientation-twisted homology.
TwistedClassResult css_homology_class(const SimplicialComplex& K, const ManifoldReport& cert,
                                      ThetaModel& model, const CssOptions& options = {});

/// Entrywise match of the cochain and chain pictures under the simplex/dual
/// cone bijection (sheet-0 transport), plus the incidence permutation check.
bool duality_match(const SimplicialComplex& K, const CssReport& report);

/// Full pipeline.
CssReport compute_css_report(const SimplicialComplex& K, const ManifoldReport& cert,
                             const ThetaModel& model, const CssOptions& options = {});

}  // namespace homcert
