#include "homcert/bockstein.hpp"

namespace homcert {

namespace {

// Lattice membership: v in (row space of R), via SNF solve on R^T.
bool in_row_lattice(const IntegerMatrix& R, const std::vector<Int>& v) {
    bool zero = true;
    for (const Int& x : v) zero = zero && x == 0;
    if (zero) return true;
    if (R.rows() == 0) return false;
    return smith_normal_form(R.transpose()).solve(v).has_value();
}

// [M | R^T] as one matrix: solves M a + R^T u = rhs, i.e. M a = rhs mod
// relations.
IntegerMatrix augmented_with_relations(const IntegerMatrix& M, const IntegerMatrix& R) {
    IntegerMatrix A(M.rows(), M.cols() + R.rows());
    insert_block(A, M, 0, 0);
    insert_block(A, R.transpose(), 0, M.cols());
    return A;
}

std::vector<Int> column_of(const IntegerMatrix& M, int c) {
    std::vector<Int> v(M.rows(), 0);
    for (int r = 0; r < M.rows(); ++r) v[r] = M.get(r, c);
    return v;
}

}  // namespace

void CoefficientSequence::verify_exact() const {
    const int gA = sub.generators(), gB = mid.generators(), gC = quot.generators();
    require(incl.rows() == gB && incl.cols() == gA, errc::bad_argument,
            "inclusion matrix shape mismatch");
    require(proj.rows() == gC && proj.cols() == gB, errc::bad_argument,
            "projection matrix shape mismatch");
    require(!sub.twisted() && !mid.twisted() && !quot.twisted(), errc::bad_argument,
            "coefficient sequences are untwisted");

    // Relations map forward: i(rel_A) in rel_B lattice, p(rel_B) in rel_C.
    for (int j = 0; j < sub.relation_count(); ++j) {
        std::vector<Int> r(gA, 0);
        for (const auto& [c, v] : sub.relations().row(j)) r[c] = v;
        require(in_row_lattice(mid.relations(), incl.apply(r)), errc::bad_argument,
                "inclusion does not respect relations");
    }
    for (int j = 0; j < mid.relation_count(); ++j) {
        std::vector<Int> r(gB, 0);
        for (const auto& [c, v] : mid.relations().row(j)) r[c] = v;
        require(in_row_lattice(quot.relations(), proj.apply(r)), errc::bad_argument,
                "projection does not respect relations");
    }

    // p o i = 0 in C.
    IntegerMatrix pi = proj * incl;
    for (int c = 0; c < gA; ++c)
        require(in_row_lattice(quot.relations(), column_of(pi, c)), errc::bad_argument,
                "sequence is not a complex (p o i != 0)");

    // p surjective onto C.
    {
        SNFResult s = smith_normal_form(augmented_with_relations(proj, quot.relations()), false);
        bool onto = s.rank == gC;
        for (const Int& d : s.divisors) onto = onto && d == 1;
        require(onto, errc::bad_argument, "projection is not surjective");
    }

    // Exactness at B: preimage-of-relations lattice of p equals im(i) + rel_B.
    {
        IntegerMatrix k(gC, gB + quot.relation_count());
        insert_block(k, proj, 0, 0);
        insert_block(k, quot.relations().transpose(), 0, gB, -1);
        SNFResult s = smith_normal_form(k);
        IntegerMatrix divide = augmented_with_relations(incl, mid.relations());
        SNFResult divide_snf = smith_normal_form(divide);
        for (const auto& gen : s.kernel_basis()) {
            std::vector<Int> v(gen.begin(), gen.begin() + gB);
            require(divide_snf.solve(v).has_value(), errc::bad_argument,
                    "sequence is not exact at the middle term");
        }
    }

    // Injectivity of A -> B modulo relations.
    {
        IntegerMatrix k(gB, gA + mid.relation_count());
        insert_block(k, incl, 0, 0);
        insert_block(k, mid.relations().transpose(), 0, gA, -1);
        SNFResult s = smith_normal_form(k);
        for (const auto& gen : s.kernel_basis()) {
            std::vector<Int> v(gen.begin(), gen.begin() + gA);
            require(in_row_lattice(sub.relations(), v), errc::bad_argument,
                    "sequence is not exact at the subgroup term");
        }
    }
}

CoefficientSequence CoefficientSequence::multiplication_by(const Int& k) {
    require(k > 1, errc::bad_argument, "multiplication_by requires k > 1");
    CoefficientSequence s;
    s.sub = CoefficientSystem::integers();
    s.mid = CoefficientSystem::integers();
    s.quot = CoefficientSystem::integers_mod(k);
    s.incl = IntegerMatrix(1, 1);
    s.incl.set(0, 0, k);
    s.proj = IntegerMatrix::identity(1);
    s.verify_exact();
    return s;
}

BocksteinResult bockstein(const FreeComplex& complex, const std::string& basis_name,
                          const Cochain& x, const CoefficientSequence& seq) {
    seq.verify_exact();
    CochainCalculator calcC(complex, seq.quot, basis_name);
    require(calcC.is_closed(x), errc::not_a_cocycle, "bockstein input is not a cocycle");

    const int gB = seq.mid.generators();
    const int gA = seq.sub.generators();
    const int d = x.dimension;

    // Lift entrywise through p (solve p b = x mod rel_C).
    SNFResult lift_solver =
        smith_normal_form(augmented_with_relations(seq.proj, seq.quot.relations()));
    Cochain b = Cochain::zero(d, basis_name, gB, complex.size_at(d));
    for (int e = 0; e < complex.size_at(d); ++e) {
        auto sol = lift_solver.solve(x.values[e]);
        require(sol.has_value(), errc::internal, "surjective projection failed to lift a value");
        for (int a = 0; a < gB; ++a) b.values[e][a] = (*sol)[a];
    }

    // Coboundary of the lift over B.
    CochainCalculator calcB(complex, seq.mid, basis_name);
    Cochain db = calcB.differential(b);

    // Divide back into A (solve i a = db mod rel_B).
    SNFResult divide_solver =
        smith_normal_form(augmented_with_relations(seq.incl, seq.mid.relations()));
    Cochain a = Cochain::zero(d + 1, basis_name, gA, complex.size_at(d + 1));
    for (int e = 0; e < complex.size_at(d + 1); ++e) {
        auto sol = divide_solver.solve(db.values[e]);
        require(sol.has_value(), errc::internal,
                "coboundary of the lift does not come from the subgroup");
        for (int i = 0; i < gA; ++i) a.values[e][i] = (*sol)[i];
    }

    CochainCalculator calcA(complex, seq.sub, basis_name);
    require(calcA.is_closed(a), errc::internal, "connecting cochain is not a cocycle");
    BocksteinResult out;
    out.cls = calcA.class_of(a);
    out.representative = calcA.reduce_representative(a);
    return out;
}

bool lifts_to_middle(const FreeComplex& complex, const Cochain& x,
                     const CoefficientSequence& seq) {
    const int d = x.dimension;
    const int gB = seq.mid.generators();
    const int gC = seq.quot.generators();
    const int rB = seq.mid.relation_count();
    const int rC = seq.quot.relation_count();
    const int nd = complex.size_at(d);
    const int ndm1 = complex.size_at(d - 1);
    const int ndp1 = complex.size_at(d + 1);

    // Unknowns: z (B-cochain, degree d), c (C-cochain, degree d-1),
    // t (relation slack per d-cell), s (relation slack per (d+1)-cell).
    // Equations: p z - delta c - RC^T t = x; delta z - RB^T s = 0.
    const int col_z = 0;
    const int col_c = nd * gB;
    const int col_t = col_c + ndm1 * gC;
    const int col_s = col_t + nd * rC;
    const int cols = col_s + ndp1 * rB;
    const int row_x = 0;
    const int row_z = nd * gC;
    const int rows = row_z + ndp1 * gB;

    IntegerMatrix delta_d = complex.plain(d).transpose();      // (d-1)-cochains -> d
    IntegerMatrix delta_up = complex.plain(d + 1).transpose(); // d-cochains -> d+1

    IntegerMatrix M(rows, cols);
    for (int e = 0; e < nd; ++e) {
        for (int i = 0; i < gC; ++i)
            for (const auto& [j, v] : seq.proj.row(i)) M.add_to(row_x + e * gC + i, col_z + e * gB + j, v);
        for (int b = 0; b < rC; ++b)
            for (const auto& [i, v] : seq.quot.relations().row(b))
                M.add_to(row_x + e * gC + i, col_t + e * rC + b, -v);
    }
    for (int e = 0; e < nd; ++e)
        for (const auto& [f, v] : delta_d.row(e))
            for (int i = 0; i < gC; ++i) M.add_to(row_x + e * gC + i, col_c + f * gC + i, -v);
    for (int f = 0; f < ndp1; ++f) {
        for (const auto& [e, v] : delta_up.row(f))
            for (int j = 0; j < gB; ++j) M.add_to(row_z + f * gB + j, col_z + e * gB + j, v);
        for (int b = 0; b < rB; ++b)
            for (const auto& [j, v] : seq.mid.relations().row(b))
                M.add_to(row_z + f * gB + j, col_s + f * rB + b, -v);
    }

    std::vector<Int> rhs(rows, 0);
    for (int e = 0; e < nd; ++e)
        for (int i = 0; i < gC; ++i) rhs[row_x + e * gC + i] = x.values[e][i];

    return smith_normal_form(M).solve(rhs).has_value();
}

}  // namespace homcert
