#include "wreath/fusion.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>

#include "wreath/errors.hpp"

namespace wreath {

void Decomposition::add(const Word& z, Multiplicity mult) {
  if (mult == 0) return;
  auto& m = terms_[z];
  m += mult;
  if (m == 0) terms_.erase(z);
}

void Decomposition::add(const Decomposition& other, Multiplicity factor) {
  for (const auto& [z, m] : other.terms_) add(z, m * factor);
}

Multiplicity Decomposition::mult(const Word& z) const {
  auto it = terms_.find(z);
  return it == terms_.end() ? 0 : it->second;
}

Decomposition decompose(const BaseRing& ring, const Word& x, const Word& y) {
  require_in_ring(ring, x);
  require_in_ring(ring, y);
  Decomposition out;
  const std::size_t max_split = std::min(x.size(), y.size());
  // Split m peels the length-m suffix t of x against the length-m prefix of
  // y, which must equal t̄ letterwise: y[j] == dual(x[|x|-1-j]) for j < m.
  // The condition for m is a prefix of the condition for m + 1.
  for (std::size_t m = 0; m <= max_split; ++m) {
    if (m > 0 && y[m - 1] != ring.dual(x[x.size() - m])) break;
    const std::size_t ulen = x.size() - m;
    const std::size_t vlen = y.size() - m;

    std::vector<Label> letters;
    letters.reserve(ulen + vlen);
    letters.insert(letters.end(), x.letters().begin(), x.letters().begin() + ulen);
    letters.insert(letters.end(), y.letters().begin() + m, y.letters().end());
    out.add(Word(letters), 1);

    if (ulen > 0 && vlen > 0) {
      const Label last = x[ulen - 1];
      const Label first = y[m];
      std::vector<Label> fused;
      fused.reserve(ulen + vlen - 1);
      fused.insert(fused.end(), x.letters().begin(), x.letters().begin() + ulen - 1);
      fused.push_back(last);
      fused.insert(fused.end(), y.letters().begin() + m + 1, y.letters().end());
      for (const auto& term : ring.fuse(last, first)) {
        fused[ulen - 1] = term.label;
        out.add(Word(fused), term.mult);
      }
    }
  }
  return out;
}

Multiplicity mult_of(const BaseRing& ring, const Word& x, const Word& y, const Word& z) {
  require_in_ring(ring, z);
  return decompose(ring, x, y).mult(z);
}

DimPoly DimPolyTable::operator()(const Word& x) const {
  {
    std::shared_lock lock(mutex_);
    auto it = memo_.find(x);
    if (it != memo_.end()) return it->second;
  }
  DimPoly p = compute(x);
  std::unique_lock lock(mutex_);
  return memo_.try_emplace(x, std::move(p)).first->second;
}

DimPoly DimPolyTable::compute(const Word& x) const {
  require_in_ring(ring_, x);
  if (x.empty()) return DimPoly::constant(1);
  if (x.size() == 1) {
    // r(α) = ω(α) ⊕ δ_{α,1} 1 and dim r(α) = n·d_α.
    DimPoly p = DimPoly::linear(ring_.dim(x[0]));
    if (x[0] == ring_.unit()) p -= DimPoly::constant(1);
    return p;
  }
  // ω(x') ⊗ ω(α) contains ω(x) exactly once; every other summand is shorter
  // than x.
  const Word prefix = x.slice(0, x.size() - 1);
  const Word last{x.back()};
  DimPoly result = (*this)(prefix) * (*this)(last);
  for (const auto& [z, m] : decompose(ring_, prefix, last)) {
    if (z == x) {
      assert(m == 1);
      continue;
    }
    result -= (*this)(z) * BigInt(m);
  }
  return result;
}

DimPoly dimpoly(const BaseRing& ring, const Word& x) { return DimPolyTable(ring)(x); }

BigInt dim_at(const BaseRing& ring, const Word& x, std::int64_t N) {
  if (N < 1) throw PreconditionError("dim_at requires N >= 1");
  return dimpoly(ring, x)(BigInt(N));
}

}  // namespace wreath
