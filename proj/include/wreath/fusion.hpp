#pragma once

#include <map>
#include <memory>
#include <shared_mutex>
#include <unordered_map>

#include "wreath/base_ring.hpp"
#include "wreath/dim_poly.hpp"
#include "wreath/word.hpp"

namespace wreath {

/// Direct-sum decomposition ω(x) ⊗ ω(y) = ⊕ mult(z) ω(z). Multiplicities are
/// strictly positive; iteration is in shortlex order.
class Decomposition {
 public:
  using Terms = std::map<Word, Multiplicity>;

  void add(const Word& z, Multiplicity mult);
  /// Adds every term of `other` scaled by `factor`.
  void add(const Decomposition& other, Multiplicity factor = 1);

  Multiplicity mult(const Word& z) const;
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  friend bool operator==(const Decomposition&, const Decomposition&) = default;

 private:
  Terms terms_;
};

/// Fusion rule of the free wreath product: for every split x = (u,t),
/// y = (t̄,v) add ω(u,v) and, when u and v are both nonempty, the fusion
/// words (…, γ, …) for γ ⊂ last(u) ⊗ first(v) with multiplicity N^γ.
Decomposition decompose(const BaseRing& ring, const Word& x, const Word& y);

Multiplicity mult_of(const BaseRing& ring, const Word& x, const Word& y, const Word& z);

/// Memoized dim ω(x) as a polynomial in n. Safe for concurrent use; the memo
/// never changes results.
class DimPolyTable {
 public:
  explicit DimPolyTable(BaseRing ring) : ring_(std::move(ring)) {}

  DimPoly operator()(const Word& x) const;
  const BaseRing& ring() const { return ring_; }

 private:
  DimPoly compute(const Word& x) const;

  BaseRing ring_;
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<Word, DimPoly, WordHash> memo_;
};

DimPoly dimpoly(const BaseRing& ring, const Word& x);

/// dimpoly(x) evaluated at n = N. Requires N >= 1.
BigInt dim_at(const BaseRing& ring, const Word& x, std::int64_t N);

}  // namespace wreath
