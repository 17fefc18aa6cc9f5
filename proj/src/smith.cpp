#include "homcert/smith.hpp"

#include <algorithm>
#include <set>

namespace homcert {

namespace {

// Row-major accumulator for the unimodular transforms. Every SNF step is
// mirrored as a row operation here: U and Vinv directly, Uinv and V through
// their transposes, so no column scans are needed.
struct RowMat {
    std::vector<std::map<int, Int>> r;
    explicit RowMat(int n) : r(n) {
        for (int i = 0; i < n; ++i) r[i][i] = 1;
    }
    void addmul(int r1, int r2, const Int& q) {  // row r1 += q * row r2
        if (q == 0) return;
        for (const auto& [c, v] : r[r2]) {
            auto it = r[r1].find(c);
            if (it == r[r1].end()) {
                r[r1][c] = q * v;
            } else {
                it->second += q * v;
                if (it->second == 0) r[r1].erase(it);
            }
        }
    }
    void swap_rows(int r1, int r2) { std::swap(r[r1], r[r2]); }
    void negate(int row) {
        for (auto& [c, v] : r[row]) v = -v;
    }
    IntegerMatrix materialize(bool transposed) const {
        int n = static_cast<int>(r.size());
        IntegerMatrix M(n, n);
        for (int i = 0; i < n; ++i)
            for (const auto& [c, v] : r[i]) {
                if (transposed)
                    M.set(c, i, v);
                else
                    M.set(i, c, v);
            }
        return M;
    }
};

struct Worker {
    int rows, cols;
    std::vector<std::map<int, Int>> a;
    std::vector<std::set<int>> col_rows;
    bool track;
    RowMat U, UinvT, VT, Vinv;

    Worker(const IntegerMatrix& A, bool with_transforms)
        : rows(A.rows()),
          cols(A.cols()),
          a(A.rows()),
          col_rows(A.cols()),
          track(with_transforms),
          U(with_transforms ? A.rows() : 0),
          UinvT(with_transforms ? A.rows() : 0),
          VT(with_transforms ? A.cols() : 0),
          Vinv(with_transforms ? A.cols() : 0) {
        for (int r = 0; r < rows; ++r)
            for (const auto& [c, v] : A.row(r)) {
                a[r][c] = v;
                col_rows[c].insert(r);
            }
    }

    void put(int r, int c, Int v) {
        auto it = a[r].find(c);
        if (v == 0) {
            if (it != a[r].end()) {
                a[r].erase(it);
                col_rows[c].erase(r);
            }
        } else {
            if (it == a[r].end()) col_rows[c].insert(r);
            a[r][c] = std::move(v);
        }
    }

    void row_addmul(int r1, int r2, const Int& q) {  // row r1 += q * row r2
        if (q == 0) return;
        std::vector<std::pair<int, Int>> src(a[r2].begin(), a[r2].end());
        for (const auto& [c, v] : src) {
            Int nv = (a[r1].count(c) ? a[r1][c] : Int(0)) + q * v;
            put(r1, c, std::move(nv));
        }
        if (track) {
            U.addmul(r1, r2, q);         // U <- E U
            UinvT.addmul(r2, r1, -q);    // Uinv <- Uinv E^{-1}, transposed
        }
    }

    void col_addmul(int c1, int c2, const Int& q) {  // col c1 += q * col c2
        if (q == 0) return;
        std::vector<int> touched(col_rows[c2].begin(), col_rows[c2].end());
        for (int r : touched) {
            Int nv = (a[r].count(c1) ? a[r][c1] : Int(0)) + q * a[r][c2];
            put(r, c1, std::move(nv));
        }
        if (track) {
            VT.addmul(c1, c2, q);        // V <- V E, transposed
            Vinv.addmul(c2, c1, -q);     // Vinv <- E^{-1} Vinv
        }
    }

    void row_swap(int r1, int r2) {
        if (r1 == r2) return;
        std::vector<int> cs;
        for (const auto& [c, v] : a[r1]) cs.push_back(c);
        for (const auto& [c, v] : a[r2]) cs.push_back(c);
        std::swap(a[r1], a[r2]);
        for (int c : cs) {
            col_rows[c].erase(r1);
            col_rows[c].erase(r2);
            if (a[r1].count(c)) col_rows[c].insert(r1);
            if (a[r2].count(c)) col_rows[c].insert(r2);
        }
        if (track) {
            U.swap_rows(r1, r2);
            UinvT.swap_rows(r1, r2);
        }
    }

    void col_swap(int c1, int c2) {
        if (c1 == c2) return;
        std::set<int> rs = col_rows[c1];
        for (int r : col_rows[c2]) rs.insert(r);
        for (int r : rs) {
            Int v1 = a[r].count(c1) ? a[r][c1] : Int(0);
            Int v2 = a[r].count(c2) ? a[r][c2] : Int(0);
            put(r, c1, std::move(v2));
            put(r, c2, std::move(v1));
        }
        if (track) {
            VT.swap_rows(c1, c2);
            Vinv.swap_rows(c1, c2);
        }
    }

    void row_negate(int r) {
        for (auto& [c, v] : a[r]) v = -v;
        if (track) {
            U.negate(r);
            UinvT.negate(r);
        }
    }

    // Minimal absolute value; among those, least fill-in (Markowitz count),
    // then lowest row and column. The fill-in tie-break keeps the coefficient
    // growth of the transforms in check on unstructured inputs.
    bool find_pivot(int t, int& pr, int& pc) const {
        bool found = false;
        Int best = 0;
        long long best_cost = 0;
        std::vector<int> row_nnz(rows, 0);
        for (int r = t; r < rows; ++r)
            for (const auto& [c, v] : a[r])
                if (c >= t) ++row_nnz[r];
        for (int r = t; r < rows; ++r) {
            for (const auto& [c, v] : a[r]) {
                if (c < t) continue;
                Int av = abs(v);
                long long col_nnz = 0;
                for (int rr : col_rows[c])
                    if (rr >= t) ++col_nnz;
                long long cost = static_cast<long long>(row_nnz[r] - 1) * (col_nnz - 1);
                if (!found || av < best || (av == best && cost < best_cost)) {
                    found = true;
                    best = av;
                    best_cost = cost;
                    pr = r;
                    pc = c;
                }
            }
        }
        return found;
    }

    bool column_clean(int t) const {
        return col_rows[t].size() == 1 && col_rows[t].count(t) == 1;
    }
    bool row_clean(int t) const { return a[t].size() == 1 && a[t].count(t) == 1; }
};

}  // namespace

SNFResult smith_normal_form(const IntegerMatrix& A, bool with_transforms) {
    Worker w(A, with_transforms);
    const int n = std::min(A.rows(), A.cols());

    for (int t = 0; t < n; ++t) {
        int pr = t, pc = t;
        if (!w.find_pivot(t, pr, pc)) break;
        w.row_swap(t, pr);
        w.col_swap(t, pc);

        // Balanced quotient: remainder in (-|p|/2, |p|/2]; keeps entries small.
        auto balanced_quotient = [](const Int& a, const Int& p) {
            Int q = a / p;
            Int r = a - q * p;
            Int ap = abs(p);
            if (2 * r > ap) q += p > 0 ? 1 : -1;
            if (2 * r <= -ap) q -= p > 0 ? 1 : -1;
            return q;
        };
        for (;;) {
            // Euclidean steps down the column.
            for (;;) {
                int r = -1;
                for (int cand : w.col_rows[t])
                    if (cand != t) {
                        r = cand;
                        break;
                    }
                if (r < 0) break;
                Int q = balanced_quotient(w.a[r][t], w.a[t][t]);
                w.row_addmul(r, t, -q);
                if (w.a[r].count(t)) w.row_swap(t, r);
            }
            // Euclidean steps along the row.
            for (;;) {
                int c = -1;
                for (const auto& [cand, v] : w.a[t])
                    if (cand != t) {
                        c = cand;
                        break;
                    }
                if (c < 0) break;
                Int q = balanced_quotient(w.a[t][c], w.a[t][t]);
                w.col_addmul(c, t, -q);
                if (w.a[t].count(c)) w.col_swap(t, c);
            }
            if (w.column_clean(t) && w.row_clean(t)) break;
        }

        if (w.a[t][t] < 0) w.row_negate(t);

        // Divisibility: fold a row holding a non-divisible entry into row t
        // and reduce again.
        Int pivot = w.a[t][t];
        bool redo = false;
        for (int r = t + 1; r < w.rows && !redo; ++r) {
            for (const auto& [c, v] : w.a[r]) {
                if (c <= t) continue;
                if (v % pivot != 0) {
                    w.row_addmul(t, r, 1);
                    redo = true;
                    break;
                }
            }
        }
        if (redo) --t;
    }

    SNFResult out;
    out.with_transforms = with_transforms;
    out.S = IntegerMatrix(A.rows(), A.cols());
    for (int t = 0; t < n; ++t) {
        auto it = w.a[t].find(t);
        if (it != w.a[t].end() && it->second != 0) {
            out.S.set(t, t, it->second);
            out.divisors.push_back(it->second);
        }
    }
    out.rank = static_cast<int>(out.divisors.size());
    if (with_transforms) {
        out.U = w.U.materialize(false);
        out.Uinv = w.UinvT.materialize(true);
        out.V = w.VT.materialize(true);
        out.Vinv = w.Vinv.materialize(false);
    }
    return out;
}

std::optional<std::vector<Int>> SNFResult::solve(const std::vector<Int>& b) const {
    require(with_transforms, errc::internal, "solve requires transforms");
    require(static_cast<int>(b.size()) == U.cols(), errc::bad_argument, "solve: size mismatch");
    std::vector<Int> y = U.apply(b);
    std::vector<Int> z(V.cols(), 0);
    const int n = std::min(U.cols(), V.cols());
    for (int i = 0; i < static_cast<int>(y.size()); ++i) {
        Int d = i < n ? S.get(i, i) : Int(0);
        if (d == 0) {
            if (y[i] != 0) return std::nullopt;
        } else {
            if (y[i] % d != 0) return std::nullopt;
            z[i] = y[i] / d;
        }
    }
    return V.apply(z);
}

std::vector<std::vector<Int>> SNFResult::kernel_basis() const {
    require(with_transforms, errc::internal, "kernel basis requires transforms");
    std::vector<std::vector<Int>> basis;
    for (int j = rank; j < V.cols(); ++j) {
        std::vector<Int> col(V.rows(), 0);
        for (int r = 0; r < V.rows(); ++r) col[r] = V.get(r, j);
        basis.push_back(std::move(col));
    }
    return basis;
}

int integer_rank(const IntegerMatrix& A) { return smith_normal_form(A, false).rank; }

int rank_mod_p(const IntegerMatrix& A, const Int& p) {
    SNFResult snf = smith_normal_form(A, false);
    int r = 0;
    for (const Int& d : snf.divisors)
        if (d % p != 0) ++r;
    return r;
}

}  // namespace homcert
