#include "folcone/simplex.hpp"

#include <cassert>
#include <stdexcept>

namespace folcone {

namespace {

// Defensive re-check of whichever certificate the solve produced.
void check_result(const std::vector<QVec>& a, const QVec& b, const FeasibilityResult& res) {
    const std::size_t m = a.size();
    const std::size_t n = m ? a[0].size() : 0;
    if (res.feasible) {
        for (const Rat& v : res.x)
            if (v < 0) throw std::logic_error("simplex: negative coordinate in solution");
        for (std::size_t i = 0; i < m; ++i)
            if (dot(a[i], res.x) != b[i]) throw std::logic_error("simplex: A x != b");
    } else {
        Rat yb = 0;
        for (std::size_t i = 0; i < m; ++i) yb += res.farkas[i] * b[i];
        if (yb <= 0) throw std::logic_error("simplex: farkas y^T b not positive");
        for (std::size_t j = 0; j < n; ++j) {
            Rat col = 0;
            for (std::size_t i = 0; i < m; ++i) col += res.farkas[i] * a[i][j];
            if (col > 0) throw std::logic_error("simplex: farkas y^T A has positive entry");
        }
    }
}

} // namespace

FeasibilityResult solve_equality_feasibility(const std::vector<QVec>& a_rows, const QVec& b) {
    const std::size_t m = a_rows.size();
    const std::size_t n = m ? a_rows[0].size() : 0;

    FeasibilityResult res;
    if (m == 0) {
        res.feasible = true;
        res.x.assign(n, Rat(0));
        return res;
    }

    // Orient rows so the right-hand side is nonnegative.
    std::vector<int> row_sign(m, 1);
    std::vector<QVec> tab(m, QVec(n + m + 1, Rat(0)));
    for (std::size_t i = 0; i < m; ++i) {
        row_sign[i] = (b[i] < 0) ? -1 : 1;
        for (std::size_t j = 0; j < n; ++j) tab[i][j] = row_sign[i] * a_rows[i][j];
        tab[i][n + i] = 1; // artificial variable
        tab[i][n + m] = row_sign[i] * b[i];
    }

    // Reduced costs for minimizing the sum of artificials, which start basic.
    QVec red(n + m, Rat(0));
    Rat obj = 0;
    for (std::size_t i = 0; i < m; ++i) {
        obj += tab[i][n + m];
        for (std::size_t j = 0; j < n; ++j) red[j] -= tab[i][j];
    }

    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    for (;;) {
        // Bland entering rule: lowest index with negative reduced cost.
        std::size_t enter = n + m;
        for (std::size_t j = 0; j < n + m; ++j)
            if (red[j] < 0) { enter = j; break; }
        if (enter == n + m) break;

        // Bland leaving rule: min ratio, ties by lowest basic variable index.
        std::size_t leave = m;
        Rat best_ratio = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (tab[i][enter] <= 0) continue;
            Rat ratio = tab[i][n + m] / tab[i][enter];
            if (leave == m || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        // The objective is bounded below by zero, so a pivot column always
        // has a positive entry.
        assert(leave != m);

        Rat piv = tab[leave][enter];
        for (Rat& v : tab[leave]) v /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || tab[i][enter] == 0) continue;
            Rat f = tab[i][enter];
            for (std::size_t j = 0; j <= n + m; ++j) tab[i][j] -= f * tab[leave][j];
        }
        Rat rc = red[enter];
        obj += rc * tab[leave][n + m];
        for (std::size_t j = 0; j < n + m; ++j) red[j] -= rc * tab[leave][j];
        basis[leave] = enter;
    }

    if (obj == 0) {
        res.feasible = true;
        res.x.assign(n, Rat(0));
        for (std::size_t i = 0; i < m; ++i)
            if (basis[i] < n) res.x[basis[i]] = tab[i][n + m];
    } else {
        res.feasible = false;
        res.farkas.assign(m, Rat(0));
        for (std::size_t i = 0; i < m; ++i)
            res.farkas[i] = row_sign[i] * (1 - red[n + i]);
    }
    check_result(a_rows, b, res);
    return res;
}

FeasibilityResult solve_equality_feasibility(const std::vector<ZVec>& a_rows, const ZVec& b) {
    std::vector<QVec> a;
    a.reserve(a_rows.size());
    for (const ZVec& r : a_rows) a.push_back(qvec_of_zvec(r));
    return solve_equality_feasibility(a, qvec_of_zvec(b));
}

} // namespace folcone
