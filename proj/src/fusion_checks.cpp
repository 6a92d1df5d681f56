#include "wreath/fusion_checks.hpp"

#include <optional>

#include "wreath/parallel.hpp"

namespace wreath {

namespace {

ReportItem make_item(std::string claim, std::string universe) {
  return ReportItem{std::move(claim), std::move(universe), Status::kPass, {}, 0};
}

void finish(ReportItem& item, const std::vector<std::optional<std::string>>& witnesses,
            std::uint64_t checked) {
  item.checked = checked;
  for (const auto& w : witnesses) {
    if (w) {
      item.status = Status::kFail;
      item.witness = *w;
      return;
    }
  }
}

std::string pair(const BaseRing& ring, const Word& x, const Word& y) {
  return render(ring, x) + " (x) " + render(ring, y);
}

}  // namespace

ReportItem check_associativity(const BaseRing& ring, const std::vector<Word>& words,
                               const std::string& universe) {
  ReportItem item = make_item("fusion associativity", universe);
  const std::size_t n = words.size();
  std::vector<Decomposition> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = decompose(ring, words[i], words[j]);
  }
  auto witnesses = parallel_map(n, [&](std::size_t i) -> std::optional<std::string> {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Decomposition left;
        for (const auto& [w, m] : table[i * n + j]) left.add(decompose(ring, w, words[k]), m);
        Decomposition right;
        for (const auto& [w, m] : table[j * n + k]) right.add(decompose(ring, words[i], w), m);
        if (left != right) {
          return render(ring, words[i]) + " (x) " + render(ring, words[j]) + " (x) " +
                 render(ring, words[k]);
        }
      }
    }
    return std::nullopt;
  });
  finish(item, witnesses, static_cast<std::uint64_t>(n) * n * n);
  return item;
}

ReportItem check_conjugation_symmetry(const BaseRing& ring, const std::vector<Word>& words,
                                      const std::string& universe) {
  ReportItem item = make_item("conjugation symmetry", universe);
  const std::size_t n = words.size();
  auto witnesses = parallel_map(n, [&](std::size_t i) -> std::optional<std::string> {
    const Word& x = words[i];
    for (const Word& y : words) {
      Decomposition conj;
      for (const auto& [z, m] : decompose(ring, x, y)) conj.add(involute(ring, z), m);
      if (conj != decompose(ring, involute(ring, y), involute(ring, x))) return pair(ring, x, y);
    }
    return std::nullopt;
  });
  finish(item, witnesses, static_cast<std::uint64_t>(n) * n);
  return item;
}

ReportItem check_frobenius(const BaseRing& ring, const std::vector<Word>& words,
                           const std::string& universe) {
  ReportItem item = make_item("Frobenius at trivial", universe);
  const std::size_t n = words.size();
  auto witnesses = parallel_map(n, [&](std::size_t i) -> std::optional<std::string> {
    const Word& x = words[i];
    const Word xbar = involute(ring, x);
    for (const Word& y : words) {
      const Multiplicity expect = y == xbar ? 1 : 0;
      if (mult_of(ring, x, y, Word()) != expect) return pair(ring, x, y);
    }
    // x̄ may lie outside the universe; the full match must still give ∅ once.
    if (mult_of(ring, x, xbar, Word()) != 1) return pair(ring, x, xbar);
    return std::nullopt;
  });
  finish(item, witnesses, static_cast<std::uint64_t>(n) * (n + 1));
  return item;
}

ReportItem check_unit_law(const BaseRing& ring, const std::vector<Word>& words,
                          const std::string& universe) {
  ReportItem item = make_item("unit law", universe);
  std::vector<std::optional<std::string>> witnesses;
  for (const Word& x : words) {
    Decomposition expect;
    expect.add(x, 1);
    if (decompose(ring, Word(), x) != expect || decompose(ring, x, Word()) != expect) {
      witnesses.push_back(render(ring, x));
    }
  }
  finish(item, witnesses, words.size());
  return item;
}

ReportItem check_involution(const BaseRing& ring, const std::vector<Word>& words,
                            const std::string& universe) {
  ReportItem item = make_item("word involution", universe);
  std::vector<std::optional<std::string>> witnesses;
  for (const Word& x : words) {
    if (involute(ring, involute(ring, x)) != x) witnesses.push_back(render(ring, x));
    for (const Word& y : words) {
      if (involute(ring, concat(x, y)) != concat(involute(ring, y), involute(ring, x))) {
        witnesses.push_back(pair(ring, x, y));
      }
    }
  }
  finish(item, witnesses, words.size() * (words.size() + 1));
  return item;
}

ReportItem check_dimension_consistency(const DimPolyTable& dims, const std::vector<Word>& words,
                                       const std::string& universe) {
  const BaseRing& ring = dims.ring();
  ReportItem item = make_item("dimension consistency", universe);
  const std::size_t n = words.size();
  auto witnesses = parallel_map(n, [&](std::size_t i) -> std::optional<std::string> {
    const Word& x = words[i];
    for (const Word& y : words) {
      DimPoly sum;
      for (const auto& [z, m] : decompose(ring, x, y)) sum += dims(z) * BigInt(m);
      const DimPoly prod = dims(x) * dims(y);
      if (sum != prod) {
        return pair(ring, x, y) + ": " + to_string(prod) + " != " + to_string(sum);
      }
    }
    return std::nullopt;
  });
  finish(item, witnesses, static_cast<std::uint64_t>(n) * n);
  return item;
}

ReportItem check_sn_recovery(const BaseRing& ring, std::size_t kmax) {
  ReportItem item = make_item("S_N^+ recovery", "2 <= k <= " + std::to_string(kmax));
  std::vector<std::optional<std::string>> witnesses;
  for (std::size_t k = 2; k <= kmax; ++k) {
    Decomposition expect;
    expect.add(ones(ring, k), 1);
    expect.add(ones(ring, k - 1), 1);
    expect.add(ones(ring, k - 2), 1);
    if (decompose(ring, ones(ring, k - 1), ones(ring, 1)) != expect) {
      witnesses.push_back("k = " + std::to_string(k));
    }
  }
  finish(item, witnesses, kmax >= 2 ? kmax - 1 : 0);
  return item;
}

ReportItem check_positivity(const DimPolyTable& dims, const std::vector<Word>& words,
                            std::int64_t N, const std::string& universe) {
  ReportItem item = make_item("positive dimension at N=" + std::to_string(N), universe);
  std::vector<std::optional<std::string>> witnesses;
  for (const Word& x : words) {
    const BigInt d = dims(x)(BigInt(N));
    if (d <= 0) witnesses.push_back(render(dims.ring(), x) + ": " + d.str());
  }
  finish(item, witnesses, words.size());
  return item;
}

}  // namespace wreath
