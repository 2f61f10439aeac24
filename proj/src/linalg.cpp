#include "plink/linalg.hpp"

#include <cstddef>
#include <utility>

namespace plink {

namespace {

// Fraction-free forward elimination on an m x n matrix.  Returns the
// number of pivots and the sign flip of row swaps; on exit the matrix is
// in Bareiss row-echelon form (pivot k at [k][pivot_col[k]]).
struct EchelonResult {
    std::size_t pivots = 0;
    int sign = 1;
    std::vector<std::size_t> pivot_cols;
};

EchelonResult bareiss_echelon(IntMatrix& m) {
    EchelonResult res;
    if (m.empty()) return res;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    Int prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r) {
            std::swap(m[piv], m[r]);
            res.sign = -res.sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        res.pivot_cols.push_back(c);
        ++res.pivots;
        ++r;
    }
    return res;
}

}  // namespace

Int det(IntMatrix m) {
    if (m.empty()) return Int(1);
    const std::size_t n = m.size();
    EchelonResult e = bareiss_echelon(m);
    if (e.pivots < n) return Int(0);
    // Bareiss: the last pivot is the determinant up to row-swap sign.
    Int d = m[n - 1][n - 1];
    return e.sign > 0 ? d : Int(-d);
}

std::size_t rank(IntMatrix m) {
    if (m.empty()) return 0;
    return bareiss_echelon(m).pivots;
}

std::optional<std::vector<Rat>> solve_linear(IntMatrix a, std::vector<Int> b) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) a[i].push_back(std::move(b[i]));
    EchelonResult e = bareiss_echelon(a);
    if (e.pivots < n) return std::nullopt;  // singular (rank deficiency in A)
    // Any pivot column equal to n would mean an inconsistent row, which
    // cannot happen here since all n pivots must land in A's columns.
    std::vector<Rat> x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        Rat acc(a[ii][n]);
        for (std::size_t j = ii + 1; j < n; ++j) acc -= Rat(a[ii][j]) * x[j];
        x[ii] = acc / Rat(a[ii][ii]);
    }
    return x;
}

void clear_denominators_rowwise(std::vector<std::vector<Rat>>& a, std::vector<Rat>& b,
                                IntMatrix& a_out, std::vector<Int>& b_out) {
    const std::size_t rows = a.size();
    a_out.assign(rows, {});
    b_out.assign(rows, Int(0));
    for (std::size_t i = 0; i < rows; ++i) {
        Int l = rat_den(b[i]);
        for (const Rat& v : a[i]) l = boost::multiprecision::lcm(l, rat_den(v));
        a_out[i].reserve(a[i].size());
        for (const Rat& v : a[i]) a_out[i].push_back(rat_num(v) * (l / rat_den(v)));
        b_out[i] = rat_num(b[i]) * (l / rat_den(b[i]));
    }
}

}  // namespace plink
