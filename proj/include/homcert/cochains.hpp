#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homcert/chains.hpp"
#include "homcert/smith.hpp"

namespace homcert {

/// Coefficient-valued cells: one Z^g value per basis element of a fixed
/// degree. Serves as cochain (basis "simplices" or "dual_cones") and, on the
/// homology side, as a chain with module coefficients.
struct Cochain {
    int dimension = 0;
    std::string basis = "simplices";
    int coeff_generators = 1;
    std::vector<std::vector<Int>> values;

    bool is_zero() const {
        for (const auto& v : values)
            for (const Int& x : v)
                if (x != 0) return false;
        return true;
    }
    static Cochain zero(int dimension, const std::string& basis, int g, int cells) {
        Cochain c;
        c.dimension = dimension;
        c.basis = basis;
        c.coeff_generators = g;
        c.values.assign(cells, std::vector<Int>(g, 0));
        return c;
    }
};

/// A homology or cohomology class in SNF-canonical coordinates: torsion
/// coordinates (reduced mod the matching torsion order) first, free
/// coordinates after.
struct ClassHandle {
    GroupDescriptor group;
    std::vector<Int> torsion_coords;
    std::vector<Int> free_coords;

    bool is_zero() const {
        for (const Int& c : torsion_coords)
            if (c != 0) return false;
        for (const Int& c : free_coords)
            if (c != 0) return false;
        return true;
    }
    std::string coords_string() const;
};

/// Exact homology-of-a-complex calculator with per-degree caches of the SNF
/// data needed for class handles, representatives, and boundary witnesses.
class ComplexCalculator {
public:
    explicit ComplexCalculator(ChainComplexData data) : data_(std::move(data)) {}
    const ChainComplexData& data() const { return data_; }

    GroupDescriptor group(int d);
    bool is_cycle(int d, const std::vector<Int>& x) const;
    ClassHandle class_of(int d, const std::vector<Int>& x);
    /// Solve D_{d+1} w = x; nullopt when x is not a boundary.
    std::optional<std::vector<Int>> boundary_witness(int d, const std::vector<Int>& x);
    /// Cycle with the given class coordinates (SNF-canonical basis).
    std::vector<Int> representative(int d, const std::vector<Int>& torsion_coords,
                                    const std::vector<Int>& free_coords);
    std::vector<Int> canonical_cycle(int d, const std::vector<Int>& x);

private:
    struct DegreeData {
        SNFResult out_snf;  // SNF(D_d), with transforms
        int kernel_dim = 0;
        IntegerMatrix image_in_kernel;  // rows: kernel coords, cols: (d+1)-cells
        SNFResult image_snf;            // SNF of the above, with transforms
        std::vector<int> torsion_positions;
        std::vector<int> free_positions;
        GroupDescriptor group;
    };
    DegreeData& degree(int d);
    const SNFResult& incoming_snf(int d);  // SNF(D_{d+1}) with transforms

    ChainComplexData data_;
    std::map<int, DegreeData> degree_cache_;
    std::map<int, SNFResult> incoming_cache_;
    std::map<int, GroupDescriptor> group_cache_;
};

/// Cochain (or coefficient-chain) calculus over a free complex with a
/// coefficient system: cocycle tests modulo relations, class handles,
/// coboundary witnesses, canonical representatives and generators.
class CochainCalculator {
public:
    enum class Mode { cochain, chain };

    CochainCalculator(FreeComplex complex, CoefficientSystem coeffs, std::string basis_name,
                      Mode mode = Mode::cochain);

    const FreeComplex& complex() const { return complex_; }
    const CoefficientSystem& coeffs() const { return coeffs_; }
    const std::string& basis_name() const { return basis_name_; }
    int top() const { return complex_.top; }

    GroupDescriptor group_at(int d);
    Cochain zero_at(int d) const;

    /// Raw differential value (coboundary in cochain mode, boundary in chain
    /// mode); not reduced modulo relations.
    Cochain differential(const Cochain& x) const;
    bool is_closed(const Cochain& x);
    ClassHandle class_of(const Cochain& x);
    std::optional<Cochain> witness(const Cochain& x);  // d(b) = x modulo relations
    Cochain reduce_representative(const Cochain& x);
    /// Representative of the idx-th canonical generator (torsion slots first,
    /// then free slots).
    Cochain generator(int d, int idx);
    Cochain from_class(int d, const ClassHandle& h);

    const std::vector<std::string>& labels_at(int d) const;

private:
    std::vector<Int> embed(const Cochain& x);  // assembled cycle; throws not-a-cocycle
    Cochain extract(int d, const std::vector<Int>& assembled) const;
    int internal_degree(int d) const { return mode_ == Mode::cochain ? complex_.top - d : d; }
    void check_shape(const Cochain& x) const;

    FreeComplex complex_;
    FreeComplex graded_;  // the complex in internal grading (dualized in cochain mode)
    CoefficientSystem coeffs_;
    ChainComplexData data_;
    ComplexCalculator calc_;
    std::optional<SNFResult> relation_solver_;
    std::string basis_name_;
    Mode mode_;
};

}  // namespace homcert
