#include "folcone/linalg.hpp"

#include <algorithm>

namespace folcone {

namespace {

std::size_t pivot_col(const ZVec& row) {
    for (std::size_t j = 0; j < row.size(); ++j)
        if (row[j] != 0) return j;
    return row.size();
}

} // namespace

std::vector<ZVec> rref_basis(const std::vector<ZVec>& rows) {
    if (rows.empty()) return {};
    const std::size_t n = rows[0].size();

    std::vector<QVec> m;
    m.reserve(rows.size());
    for (const ZVec& r : rows) m.push_back(qvec_of_zvec(r));

    std::size_t lead = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t col = 0; col < n && lead < m.size(); ++col) {
        std::size_t sel = m.size();
        for (std::size_t i = lead; i < m.size(); ++i)
            if (m[i][col] != 0) { sel = i; break; }
        if (sel == m.size()) continue;
        std::swap(m[lead], m[sel]);
        Rat inv = 1 / m[lead][col];
        for (std::size_t j = col; j < n; ++j) m[lead][j] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == lead || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[lead][j];
        }
        pivots.push_back(col);
        ++lead;
    }

    std::vector<ZVec> basis;
    basis.reserve(pivots.size());
    for (std::size_t i = 0; i < pivots.size(); ++i) basis.push_back(primitive(m[i]));
    return basis;
}

std::size_t rank_of(const std::vector<ZVec>& rows) { return rref_basis(rows).size(); }

ZVec reduce_mod_subspace(const std::vector<ZVec>& rref_rows, const ZVec& v) {
    ZVec r = v;
    for (const ZVec& row : rref_rows) {
        std::size_t p = pivot_col(row);
        if (p == row.size()) continue;
        if (r[p] == 0) continue;
        // rows of an rref basis have zeros in one another's pivot columns,
        // so each step fixes one coordinate for good
        r = combine(row[p], r, -r[p], row);
    }
    return primitive(r);
}

} // namespace folcone
