#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <json.hpp>

#include "wreath/bigint.hpp"
#include "wreath/report.hpp"
#include "wreath/set_algebra.hpp"

namespace wreath {

/// Per-step norm contraction of the averaging map, 0.95 exactly.
inline const Rational kContraction{19, 20};
/// Norm target of the simplicity argument.
inline const Rational kDefaultTarget{1, 4};

/// Smallest m >= 0 with (19/20)^m · c0 < target, in exact arithmetic.
/// Throws PreconditionError unless c0 > 0 and target > 0.
std::size_t contraction_count(const Rational& c0, const Rational& target = kDefaultTarget);

/// Hypotheses of the averaging proposition with C = E_1, D = G_1 on the
/// slice: every word lies in exactly one of E_1, G_1, and the sets
/// {x_t} ∘ G_1 are pairwise disjoint.
Report check_hypotheses(const BaseRing& ring, Label alpha, const SliceBounds& bounds);

struct CertificateOptions {
  Rational c0{1};
  /// Replaces the 1/4 target (unique-trace variant).
  std::optional<Rational> eps;
  std::size_t max_support = 100000;
  bool trace_sets = false;
  SliceBounds hypothesis_bounds{};
};

struct PowersCertificate {
  Word conjugator;
  std::size_t k = 0;
  Rational target{kDefaultTarget};
  Report hypothesis_report;
  /// Conjugator containment and S_i ⊆ G_2 for every recorded step.
  Report support_report;
  std::vector<Rational> norm_bound_trace;
  std::size_t iterations = 0;
  std::vector<std::size_t> support_sizes;
  /// Filled only with CertificateOptions::trace_sets.
  std::vector<WordSet> support_sets;
  bool truncated = false;

  /// True iff every verification item passed and no cap was hit.
  bool passed() const;
};

/// Replays the support and norm bookkeeping of the simplicity argument:
/// S_0 = {x} ∘ support ∘ {x̄}, then S_{i+1} = ⋃_t {x_t} ∘ S_i ∘ {x̄_t} for
/// i < iterations, each checked to lie in G_2. Stops with `truncated` set as
/// soon as a set would exceed max_support.
PowersCertificate build_certificate(const BaseRing& ring, const WordSet& support, Label alpha,
                                    const CertificateOptions& options);

nlohmann::ordered_json to_json(const BaseRing& ring, const PowersCertificate& cert);

std::string to_string(const Rational& q);
/// "p/q" or "p"; q > 0. Throws ParseError.
Rational parse_rational(std::string_view text);

}  // namespace wreath
