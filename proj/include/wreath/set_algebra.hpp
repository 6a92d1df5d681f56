#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wreath/fusion.hpp"
#include "wreath/report.hpp"
#include "wreath/word.hpp"

namespace wreath {

/// Finite set of words, iterated in shortlex order.
using WordSet = std::set<Word>;

/// Finite slice of a word class: words up to `maxlen` letters over the
/// restricted alphabet.
struct SliceBounds {
  std::size_t maxlen = 4;
  /// Number of base labels used as letters; the unit is always among them.
  /// nullopt means every label of a finite ring.
  std::optional<std::size_t> label_budget = 2;
};

/// Letters used for slices: the unit, then the first non-unit labels in index
/// order, `budget` labels in total. Throws PreconditionError for a generative
/// ring without a budget.
std::vector<Label> slice_alphabet(const BaseRing& ring, std::optional<std::size_t> budget);

/// All words of length <= maxlen over the slice alphabet, shortlex order.
std::vector<Word> enumerate_words(const BaseRing& ring, const SliceBounds& bounds);

WordSet enumerate_class(const BaseRing& ring, WordClassId cls, const SliceBounds& bounds);

/// Union of the supports of x ⊗ y over (x, y) ∈ A × B.
WordSet circ(const BaseRing& ring, const WordSet& A, const WordSet& B);

WordSet conj_set(const BaseRing& ring, const WordSet& A);

std::string describe(const BaseRing& ring, const SliceBounds& bounds);

/// The three conjugating words (α, 1_G), (α, 1_G^3), (α, 1_G^5).
std::vector<Word> stability_words(const BaseRing& ring, Label alpha);

/// Stability lemma, parts (1)–(4), on the given slice. Requires |Irr| >= 2
/// and alpha != unit.
Report verify_stability(const BaseRing& ring, Label alpha, const SliceBounds& bounds);

struct Conjugator {
  Word word;
  Report report;
};

/// Stability lemma, part (5): x = (α, 1_G^k) with k = max |y| + 1 over the
/// support set, and a report checking {x} ∘ support ∘ {x̄} ⊆ G_2.
Conjugator find_conjugator(const BaseRing& ring, const WordSet& support, Label alpha);

/// Word lemma of the fullness argument on the given slice.
Report verify_fullness_lemma(const BaseRing& ring, Label alpha, const SliceBounds& bounds);

/// Throws PreconditionError unless the ring has a non-unit label and
/// alpha is one of them.
void require_nontrivial_alpha(const BaseRing& ring, Label alpha);

}  // namespace wreath
