#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "wreath/fusion.hpp"
#include "wreath/report.hpp"

namespace wreath {

// Consistency oracles for the wreath fusion rule, each run over an explicit
// finite universe of words and returned as one report item.

/// Σ_w mult(x,y,w)·(w ⊗ z) == Σ_w mult(y,z,w)·(x ⊗ w) for all triples.
ReportItem check_associativity(const BaseRing& ring, const std::vector<Word>& words,
                               const std::string& universe);

/// conj(x ⊗ y) == ȳ ⊗ x̄ as decompositions, for all pairs.
ReportItem check_conjugation_symmetry(const BaseRing& ring, const std::vector<Word>& words,
                                      const std::string& universe);

/// mult(x, y, ∅) == [y == x̄] for all pairs.
ReportItem check_frobenius(const BaseRing& ring, const std::vector<Word>& words,
                           const std::string& universe);

/// ∅ ⊗ y == {y} and x ⊗ ∅ == {x}.
ReportItem check_unit_law(const BaseRing& ring, const std::vector<Word>& words,
                          const std::string& universe);

/// x̄̄ == x and (x,y)‾ == (ȳ, x̄).
ReportItem check_involution(const BaseRing& ring, const std::vector<Word>& words,
                            const std::string& universe);

/// Σ_z mult(z)·dim ω(z) == dim ω(x)·dim ω(y) as exact polynomials.
ReportItem check_dimension_consistency(const DimPolyTable& dims, const std::vector<Word>& words,
                                       const std::string& universe);

/// 1_G^{k-1} ⊗ 1_G == 1_G^k ⊕ 1_G^{k-1} ⊕ 1_G^{k-2} for 2 <= k <= kmax.
ReportItem check_sn_recovery(const BaseRing& ring, std::size_t kmax);

/// dim ω(x) evaluated at N is positive.
ReportItem check_positivity(const DimPolyTable& dims, const std::vector<Word>& words,
                            std::int64_t N, const std::string& universe);

}  // namespace wreath
