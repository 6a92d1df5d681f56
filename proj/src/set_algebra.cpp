#include "wreath/set_algebra.hpp"

#include <algorithm>

#include "wreath/errors.hpp"
#include "wreath/parallel.hpp"

namespace wreath {

std::vector<Label> slice_alphabet(const BaseRing& ring, std::optional<std::size_t> budget) {
  if (!budget && !ring.finite()) {
    throw PreconditionError("a label budget is required for generative rings");
  }
  const std::size_t want = budget ? *budget : *ring.size();
  std::vector<Label> out;
  if (want == 0) return out;
  out.push_back(ring.unit());
  // Non-unit labels in index order; generative families have the unit at 0.
  const std::size_t scan = ring.finite() ? *ring.size() : want;
  for (Label l : ring.first_labels(scan)) {
    if (out.size() >= want) break;
    if (l != ring.unit()) out.push_back(l);
  }
  return out;
}

std::vector<Word> enumerate_words(const BaseRing& ring, const SliceBounds& bounds) {
  const std::vector<Label> alphabet = slice_alphabet(ring, bounds.label_budget);
  std::vector<Word> out{Word()};
  std::vector<Word> layer{Word()};
  for (std::size_t len = 1; len <= bounds.maxlen && !alphabet.empty(); ++len) {
    std::vector<Word> next;
    next.reserve(layer.size() * alphabet.size());
    for (const Word& w : layer) {
      for (Label a : alphabet) next.push_back(concat(w, a));
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

WordSet enumerate_class(const BaseRing& ring, WordClassId cls, const SliceBounds& bounds) {
  WordSet out;
  for (Word& w : enumerate_words(ring, bounds)) {
    if (in_class(ring, w, cls)) out.insert(std::move(w));
  }
  return out;
}

WordSet circ(const BaseRing& ring, const WordSet& A, const WordSet& B) {
  const std::vector<Word> left(A.begin(), A.end());
  auto parts = parallel_map(left.size(), [&](std::size_t i) {
    std::vector<Word> support;
    for (const Word& y : B) {
      for (const auto& [z, m] : decompose(ring, left[i], y)) support.push_back(z);
    }
    return support;
  });
  WordSet out;
  for (auto& part : parts) {
    for (Word& z : part) out.insert(std::move(z));
  }
  return out;
}

WordSet conj_set(const BaseRing& ring, const WordSet& A) {
  WordSet out;
  for (const Word& x : A) out.insert(involute(ring, x));
  return out;
}

std::string describe(const BaseRing& ring, const SliceBounds& bounds) {
  std::string s = "words of length <= " + std::to_string(bounds.maxlen) + " over {";
  bool first = true;
  for (Label l : slice_alphabet(ring, bounds.label_budget)) {
    if (!first) s += ",";
    first = false;
    s += l == ring.unit() ? std::string("1") : ring.id(l);
  }
  return s + "}";
}

void require_nontrivial_alpha(const BaseRing& ring, Label alpha) {
  if (ring.finite() && *ring.size() < 2) {
    throw PreconditionError("the base ring must have at least two labels (|Irr(G)| >= 2)");
  }
  if (!ring.contains(alpha)) throw PreconditionError("alpha is not a label of the ring");
  if (alpha == ring.unit()) throw PreconditionError("alpha must differ from the unit");
}

std::vector<Word> stability_words(const BaseRing& ring, Label alpha) {
  std::vector<Word> out;
  for (std::size_t k : {1, 3, 5}) out.push_back(concat(Word{alpha}, ones(ring, k)));
  return out;
}

namespace {

std::string slice_name(const BaseRing& ring, WordClassId cls, const SliceBounds& bounds) {
  return to_string(cls) + "-slice of " + describe(ring, bounds);
}

// Fails `item` with the first word (canonical order) of `produced` outside
// `cls`.
void require_subset(const BaseRing& ring, const WordSet& produced, WordClassId cls,
                    ReportItem& item, const std::string& context = {}) {
  item.checked += produced.size();
  if (item.status == Status::kFail) return;
  for (const Word& z : produced) {
    if (!in_class(ring, z, cls)) {
      item.status = Status::kFail;
      item.witness = (context.empty() ? "" : context + ": ") + render(ring, z) + " not in " +
                     to_string(cls);
      return;
    }
  }
}

void require_disjoint(const BaseRing& ring, const WordSet& a, const WordSet& b,
                      ReportItem& item, const std::string& context) {
  item.checked += a.size() + b.size();
  if (item.status == Status::kFail) return;
  for (const Word& z : a) {
    if (b.contains(z)) {
      item.status = Status::kFail;
      item.witness = context + ": " + render(ring, z);
      return;
    }
  }
}

}  // namespace

Report verify_stability(const BaseRing& ring, Label alpha, const SliceBounds& bounds) {
  require_nontrivial_alpha(ring, alpha);
  const std::vector<Word> universe = enumerate_words(ring, bounds);
  const std::string universe_name = describe(ring, bounds);
  const WordSet e1 = enumerate_class(ring, WordClassId::kE1, bounds);
  const WordSet g1 = enumerate_class(ring, WordClassId::kG1, bounds);
  const WordSet g2 = enumerate_class(ring, WordClassId::kG2, bounds);
  const std::vector<Word> xs = stability_words(ring, alpha);
  Report report;

  ReportItem part1{"stability (1): S = E_3 disjoint-union G_1", universe_name, Status::kPass,
                   {}, 0};
  for (const Word& w : universe) {
    ++part1.checked;
    const WordClass c = classify(ring, w);
    if (c.s != (c.e3 || c.g1) || (c.e3 && c.g1)) {
      part1.status = Status::kFail;
      part1.witness = render(ring, w);
      break;
    }
  }
  report.add(std::move(part1));

  ReportItem part2{"stability (2): (G_2 o E_1) cap E_1 = empty",
                   slice_name(ring, WordClassId::kG2, bounds) + " x " +
                       slice_name(ring, WordClassId::kE1, bounds),
                   Status::kPass, {}, 0};
  const WordSet g2e1 = circ(ring, g2, e1);
  part2.checked = g2e1.size();
  for (const Word& z : g2e1) {
    if (in_class(ring, z, WordClassId::kE1)) {
      part2.status = Status::kFail;
      part2.witness = render(ring, z) + " in E_1";
      break;
    }
  }
  report.add(std::move(part2));

  ReportItem part3{"stability (3): ({x_t} o G_1) pairwise disjoint",
                   slice_name(ring, WordClassId::kG1, bounds), Status::kPass, {}, 0};
  std::vector<WordSet> products;
  for (const Word& x : xs) products.push_back(circ(ring, WordSet{x}, g1));
  for (std::size_t t = 0; t < xs.size(); ++t) {
    for (std::size_t s = t + 1; s < xs.size(); ++s) {
      require_disjoint(ring, products[t], products[s], part3,
                       "x_" + std::to_string(t + 1) + "/x_" + std::to_string(s + 1));
    }
  }
  report.add(std::move(part3));

  ReportItem part4{"stability (4): {x_t} o G_2 o {conj x_t} in G_2",
                   slice_name(ring, WordClassId::kG2, bounds), Status::kPass, {}, 0};
  for (std::size_t t = 0; t < xs.size(); ++t) {
    const WordSet conjugated =
        circ(ring, circ(ring, WordSet{xs[t]}, g2), WordSet{involute(ring, xs[t])});
    require_subset(ring, conjugated, WordClassId::kG2, part4, "x_" + std::to_string(t + 1));
  }
  report.add(std::move(part4));
  return report;
}

Conjugator find_conjugator(const BaseRing& ring, const WordSet& support, Label alpha) {
  require_nontrivial_alpha(ring, alpha);
  if (support.empty()) throw PreconditionError("support set must be nonempty");
  std::size_t longest = 0;
  for (const Word& y : support) {
    require_in_ring(ring, y);
    if (!in_class(ring, y, WordClassId::kS)) {
      throw PreconditionError("support not contained in S: " + render(ring, y));
    }
    longest = std::max(longest, y.size());
  }
  Conjugator out;
  out.word = concat(Word{alpha}, ones(ring, longest + 1));
  ReportItem item{"stability (5): {x} o G o {conj x} in G_2",
                  "support set of " + std::to_string(support.size()) + " words, x = " +
                      render(ring, out.word),
                  Status::kPass, {}, 0};
  const WordSet conjugated =
      circ(ring, circ(ring, WordSet{out.word}, support), WordSet{involute(ring, out.word)});
  require_subset(ring, conjugated, WordClassId::kG2, item);
  out.report.add(std::move(item));
  return out;
}

Report verify_fullness_lemma(const BaseRing& ring, Label alpha, const SliceBounds& bounds) {
  require_nontrivial_alpha(ring, alpha);
  const WordSet e3 = enumerate_class(ring, WordClassId::kE3, bounds);
  const WordSet g1 = enumerate_class(ring, WordClassId::kG1, bounds);
  Report report;

  ReportItem part1{"fullness (1): {(alpha)} o E_3 o {(conj alpha)} in G_1",
                   slice_name(ring, WordClassId::kE3, bounds), Status::kPass, {}, 0};
  const WordSet left = circ(ring, circ(ring, WordSet{Word{alpha}}, e3),
                            WordSet{Word{ring.dual(alpha)}});
  require_subset(ring, left, WordClassId::kG1, part1);
  report.add(std::move(part1));

  ReportItem part2{"fullness (2): {1^i} o G_1 o {1^i} in E_3 for i = 2,4",
                   slice_name(ring, WordClassId::kG1, bounds), Status::kPass, {}, 0};
  std::vector<WordSet> sandwiches;
  for (std::size_t i : {2, 4}) {
    const WordSet unit_word{ones(ring, i)};
    sandwiches.push_back(circ(ring, circ(ring, unit_word, g1), unit_word));
    require_subset(ring, sandwiches.back(), WordClassId::kE3, part2, "i = " + std::to_string(i));
  }
  report.add(std::move(part2));

  ReportItem part3{"fullness (3): i = 2 and i = 4 sandwiches disjoint",
                   slice_name(ring, WordClassId::kG1, bounds), Status::kPass, {}, 0};
  require_disjoint(ring, sandwiches[0], sandwiches[1], part3, "i = 2/i = 4");
  report.add(std::move(part3));
  return report;
}

}  // namespace wreath
