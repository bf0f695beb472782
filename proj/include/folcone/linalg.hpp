#pragma once

// Small exact linear algebra: reduced echelon bases of row spaces, rank,
// and reduction of vectors modulo a subspace. Everything stays in integers;
// divisions happen only by gcds.

#include <vector>

#include "folcone/rational.hpp"

namespace folcone {

// Canonical basis of the row space of `rows`: reduced row echelon form with
// each row scaled to a primitive integer vector with positive pivot. Two row
// sets spanning the same subspace produce identical output.
std::vector<ZVec> rref_basis(const std::vector<ZVec>& rows);

std::size_t rank_of(const std::vector<ZVec>& rows);

// Reduce v modulo the subspace spanned by an rref_basis result: zero out the
// pivot coordinates. The output is the canonical coset representative of v,
// scaled primitive. Vectors equal modulo the subspace and positive scaling
// map to the same output.
ZVec reduce_mod_subspace(const std::vector<ZVec>& rref_rows, const ZVec& v);

} // namespace folcone
