#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wreath/base_ring.hpp"

namespace wreath {

/// An element of the free monoid over the base labels; indexes the
/// irreducible ω(x) of the free wreath product. The empty word is ∅.
///
/// Ordering is shortlex: by length, then lexicographically by label index.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Label> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Label> letters) : letters_(letters) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::span<const Label> letters() const { return letters_; }
  Label operator[](std::size_t i) const { return letters_[i]; }
  Label front() const { return letters_.front(); }
  Label back() const { return letters_.back(); }

  /// Letters [pos, pos + count).
  Word slice(std::size_t pos, std::size_t count) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::vector<Label> letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

Word concat(const Word& x, const Word& y);
Word concat(const Word& x, Label a);

/// (α_1, …, α_k) ↦ (ᾱ_k, …, ᾱ_1).
Word involute(const BaseRing& ring, const Word& x);

/// The word 1_G^k; ones(ring, 0) is ∅.
Word ones(const BaseRing& ring, std::size_t k);

/// Throws PreconditionError if a letter is not a label of `ring`.
void require_in_ring(const BaseRing& ring, const Word& x);

enum class WordClassId { kE1, kE2, kE3, kS, kG1, kG2 };

/// Membership in the word classes.
///   E1: ∅ or starts with 1_G      E2: only 1_G letters (incl. ∅)
///   E3: E1 \ E2                   S:  not E2
///   G1: starts with a non-unit    G2: starts and ends with non-units
struct WordClass {
  bool e1 = false;
  bool e2 = false;
  bool e3 = false;
  bool s = false;
  bool g1 = false;
  bool g2 = false;

  bool contains(WordClassId c) const;
  friend bool operator==(const WordClass&, const WordClass&) = default;
};

WordClass classify(const BaseRing& ring, const Word& x);
bool in_class(const BaseRing& ring, const Word& x, WordClassId c);

std::string to_string(WordClassId c);
/// Accepts "E_1"/"E1", ..., "G_2"/"G2". Throws ParseError.
WordClassId parse_class(std::string_view name);

/// Parses "(a,1,b)"; "()" is ∅ and "1" always denotes the unit.
Word parse_word(const BaseRing& ring, std::string_view text);
/// Parses a ';'-separated list of words.
std::vector<Word> parse_word_list(const BaseRing& ring, std::string_view text);

/// Renders with label ids, the unit always written "1".
std::string render(const BaseRing& ring, const Word& x);

}  // namespace wreath
