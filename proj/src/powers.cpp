#include "wreath/powers.hpp"

#include <algorithm>
#include <cctype>

#include "wreath/errors.hpp"

namespace wreath {

std::size_t contraction_count(const Rational& c0, const Rational& target) {
  if (c0 <= 0) throw PreconditionError("C0 must be positive");
  if (target <= 0) throw PreconditionError("contraction target must be positive");
  std::size_t m = 0;
  Rational bound = c0;
  while (bound >= target) {
    bound *= kContraction;
    ++m;
  }
  return m;
}

Report check_hypotheses(const BaseRing& ring, Label alpha, const SliceBounds& bounds) {
  require_nontrivial_alpha(ring, alpha);
  const std::string universe = describe(ring, bounds);
  Report report;

  ReportItem partition{"hypothesis: M = E_1 disjoint-union G_1", universe, Status::kPass, {},
                       0};
  for (const Word& w : enumerate_words(ring, bounds)) {
    ++partition.checked;
    const WordClass c = classify(ring, w);
    if (c.e1 == c.g1) {
      partition.status = Status::kFail;
      partition.witness = render(ring, w);
      break;
    }
  }
  report.add(std::move(partition));

  ReportItem disjoint{"hypothesis: ({x_t} o G_1) pairwise disjoint",
                      "G_1-slice of " + universe, Status::kPass, {}, 0};
  const WordSet g1 = enumerate_class(ring, WordClassId::kG1, bounds);
  const std::vector<Word> xs = stability_words(ring, alpha);
  std::vector<WordSet> products;
  for (const Word& x : xs) products.push_back(circ(ring, WordSet{x}, g1));
  for (std::size_t t = 0; t < xs.size() && disjoint.status == Status::kPass; ++t) {
    for (std::size_t s = t + 1; s < xs.size(); ++s) {
      disjoint.checked += products[t].size() + products[s].size();
      auto hit = std::find_if(products[t].begin(), products[t].end(),
                              [&](const Word& z) { return products[s].contains(z); });
      if (hit != products[t].end()) {
        disjoint.status = Status::kFail;
        disjoint.witness = "x_" + std::to_string(t + 1) + "/x_" + std::to_string(s + 1) + ": " +
                           render(ring, *hit);
        break;
      }
    }
  }
  report.add(std::move(disjoint));
  return report;
}

bool PowersCertificate::passed() const {
  return !truncated && hypothesis_report.passed() && support_report.passed();
}

namespace {

ReportItem containment_item(const BaseRing& ring, const WordSet& set, std::size_t step) {
  ReportItem item{"S_" + std::to_string(step) + " in G_2",
                  std::to_string(set.size()) + " words", Status::kPass, {}, set.size()};
  for (const Word& z : set) {
    if (!in_class(ring, z, WordClassId::kG2)) {
      item.status = Status::kFail;
      item.witness = render(ring, z);
      break;
    }
  }
  return item;
}

}  // namespace

PowersCertificate build_certificate(const BaseRing& ring, const WordSet& support, Label alpha,
                                    const CertificateOptions& options) {
  PowersCertificate cert;
  cert.target = options.eps.value_or(kDefaultTarget);
  cert.iterations = contraction_count(options.c0, cert.target);

  Conjugator conj = find_conjugator(ring, support, alpha);
  cert.conjugator = conj.word;
  cert.k = conj.word.size() - 1;
  cert.hypothesis_report = check_hypotheses(ring, alpha, options.hypothesis_bounds);
  cert.support_report = conj.report;

  Rational bound = options.c0;
  for (std::size_t i = 0; i <= cert.iterations; ++i) {
    cert.norm_bound_trace.push_back(bound);
    bound *= kContraction;
  }

  WordSet current = circ(ring, circ(ring, WordSet{conj.word}, support),
                         WordSet{involute(ring, conj.word)});
  if (current.size() > options.max_support) {
    cert.truncated = true;
    return cert;
  }
  cert.support_sizes.push_back(current.size());
  cert.support_report.add(containment_item(ring, current, 0));
  if (options.trace_sets) cert.support_sets.push_back(current);

  const std::vector<Word> xs = stability_words(ring, alpha);
  std::vector<Word> xbars;
  for (const Word& x : xs) xbars.push_back(involute(ring, x));

  for (std::size_t step = 1; step <= cert.iterations; ++step) {
    WordSet next;
    for (std::size_t t = 0; t < xs.size() && !cert.truncated; ++t) {
      for (const Word& w : current) {
        for (const auto& [left, m1] : decompose(ring, xs[t], w)) {
          for (const auto& [z, m2] : decompose(ring, left, xbars[t])) next.insert(z);
        }
        if (next.size() > options.max_support) {
          cert.truncated = true;
          break;
        }
      }
    }
    if (cert.truncated) break;
    cert.support_sizes.push_back(next.size());
    cert.support_report.add(containment_item(ring, next, step));
    if (options.trace_sets) cert.support_sets.push_back(next);
    current = std::move(next);
  }
  return cert;
}

std::string to_string(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den.front() == '-' || den.front() == '+') {
    throw ParseError("expected a rational p/q, got '" + std::string(text) + "'");
  }
  const BigInt p(std::string(num.front() == '+' ? num.substr(1) : num));
  const BigInt q{std::string(den)};
  if (q == 0) throw ParseError("rational with zero denominator: '" + std::string(text) + "'");
  return Rational(p, q);
}

nlohmann::ordered_json to_json(const BaseRing& ring, const PowersCertificate& cert) {
  nlohmann::ordered_json j;
  j["passed"] = cert.passed();
  j["conjugator"] = render(ring, cert.conjugator);
  j["k"] = cert.k;
  j["target"] = to_string(cert.target);
  j["iterations"] = cert.iterations;
  nlohmann::ordered_json bounds = nlohmann::ordered_json::array();
  for (const auto& b : cert.norm_bound_trace) bounds.push_back(to_string(b));
  j["norm_bound_trace"] = std::move(bounds);
  j["support_sizes"] = cert.support_sizes;
  j["truncated"] = cert.truncated;
  j["hypothesis_report"] = to_json(cert.hypothesis_report);
  j["support_report"] = to_json(cert.support_report);
  if (!cert.support_sets.empty()) {
    nlohmann::ordered_json sets = nlohmann::ordered_json::array();
    for (const auto& s : cert.support_sets) {
      nlohmann::ordered_json words = nlohmann::ordered_json::array();
      for (const Word& w : s) words.push_back(render(ring, w));
      sets.push_back(std::move(words));
    }
    j["support_sets"] = std::move(sets);
  }
  return j;
}

}  // namespace wreath
