#include "wreath/sweep.hpp"

#include "wreath/fusion_checks.hpp"
#include "wreath/powers.hpp"

namespace wreath {

namespace {

void prefix_claims(Report& into, const Report& from, const std::string& prefix) {
  for (ReportItem item : from.items()) {
    item.claim = prefix + item.claim;
    into.add(std::move(item));
  }
}

}  // namespace

Report verify_sweep(const BaseRing& ring, const SweepOptions& options) {
  Report report;
  prefix_claims(report, validate_ring(ring), "ring: ");

  const SliceBounds assoc{options.assoc_maxlen, options.bounds.label_budget};
  const std::vector<Word> small = enumerate_words(ring, assoc);
  const std::vector<Word> words = enumerate_words(ring, options.bounds);
  const std::string small_name = describe(ring, assoc);
  const std::string words_name = describe(ring, options.bounds);
  const DimPolyTable dims(ring);

  report.add(check_involution(ring, words, words_name));
  report.add(check_unit_law(ring, words, words_name));
  report.add(check_frobenius(ring, words, words_name));
  report.add(check_conjugation_symmetry(ring, words, words_name));
  report.add(check_associativity(ring, small, small_name));
  report.add(check_dimension_consistency(dims, small, small_name));
  report.add(check_sn_recovery(ring, options.sn_recovery_kmax));
  const SliceBounds positive{options.positivity_maxlen, options.bounds.label_budget};
  report.add(check_positivity(dims, enumerate_words(ring, positive), options.positivity_N,
                              describe(ring, positive)));

  std::vector<Label> alphas;
  for (Label l : slice_alphabet(ring, options.bounds.label_budget)) {
    if (l != ring.unit()) alphas.push_back(l);
  }
  if (alphas.empty()) {
    for (const char* claim : {"stability lemma", "fullness lemma", "averaging hypotheses"}) {
      report.add(ReportItem{claim, "requires |Irr(G)| >= 2", Status::kSkip, {}, 0});
    }
    return report;
  }
  for (Label alpha : alphas) {
    const std::string prefix = "alpha=" + ring.id(alpha) + ": ";
    prefix_claims(report, verify_stability(ring, alpha, options.bounds), prefix);
    prefix_claims(report, verify_fullness_lemma(ring, alpha, options.bounds), prefix);
    prefix_claims(report, check_hypotheses(ring, alpha, options.bounds), prefix);
  }
  return report;
}

}  // namespace wreath
