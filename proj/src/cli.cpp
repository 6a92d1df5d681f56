#include "wreath/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "wreath/errors.hpp"
#include "wreath/fusion.hpp"
#include "wreath/powers.hpp"
#include "wreath/set_algebra.hpp"
#include "wreath/sweep.hpp"

namespace wreath::cli {

namespace {

using ojson = nlohmann::ordered_json;

struct RunConfig {
  std::string ring;
  std::string cayley;
  std::int64_t param = 0;
  std::string format = "json";

  std::string x;
  std::string y;
  std::string set_a;
  std::string set_b;
  std::string cls;
  std::string alpha;
  std::string support;

  std::size_t maxlen = 4;
  std::string labels = "2";
  std::size_t assoc_len = 3;

  bool poly = false;
  std::int64_t at = 0;

  std::string c0 = "1";
  std::string eps;
  std::size_t max_support = 100000;
  bool trace_sets = false;

  bool table() const { return format == "table"; }
};

class UsageError : public Error {
 public:
  using Error::Error;
};

BaseRing make_ring(const RunConfig& cfg, bool validate) {
  const std::string& spec = cfg.ring;
  if (spec.empty()) throw UsageError("--ring is required");
  if (spec.rfind("builtin:", 0) == 0) {
    const std::string family = spec.substr(8);
    if (family == "trivial") return make_trivial();
    if (family == "dual-group") {
      if (cfg.cayley.empty()) throw UsageError("builtin:dual-group requires --cayley <file>");
      return make_dual_group(load_cayley_file(cfg.cayley));
    }
    if (family == "interval-step1" || family == "interval-step2") {
      if (cfg.param == 0) throw UsageError(spec + " requires --param M");
      return family == "interval-step1" ? make_interval_step1(cfg.param)
                                        : make_interval_step2(cfg.param);
    }
    throw UsageError("unknown builtin ring '" + family + "'");
  }
  return validate ? load_ring_file(spec) : parse_ring_file(spec);
}

Word word_arg(const BaseRing& ring, const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string(flag) + " is required");
  return parse_word(ring, text);
}

WordSet set_arg(const BaseRing& ring, const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string(flag) + " is required");
  const auto words = parse_word_list(ring, text);
  return WordSet(words.begin(), words.end());
}

Label alpha_arg(const BaseRing& ring, const std::string& text) {
  if (text.empty()) throw UsageError("--alpha is required");
  if (text == "1") return ring.unit();
  if (auto l = ring.find(text)) return *l;
  throw ParseError("unknown label '" + text + "'");
}

SliceBounds bounds_arg(const RunConfig& cfg) {
  SliceBounds b;
  b.maxlen = cfg.maxlen;
  if (cfg.labels == "all") {
    b.label_budget = std::nullopt;
  } else {
    try {
      std::size_t pos = 0;
      const long v = std::stol(cfg.labels, &pos);
      if (pos != cfg.labels.size() || v <= 0) throw std::invalid_argument("labels");
      b.label_budget = static_cast<std::size_t>(v);
    } catch (const std::logic_error&) {
      throw UsageError("--labels expects a positive integer or 'all'");
    }
  }
  return b;
}

ojson word_list(const BaseRing& ring, const WordSet& words) {
  ojson arr = ojson::array();
  for (const Word& w : words) arr.push_back(render(ring, w));
  return arr;
}

void emit(std::ostream& out, const ojson& j) { out << j.dump(2) << '\n'; }

void emit_words(std::ostream& out, const RunConfig& cfg, const BaseRing& ring,
                const WordSet& words, ojson header) {
  if (cfg.table()) {
    for (const auto& [k, v] : header.items()) {
      out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    }
    for (const Word& w : words) out << render(ring, w) << '\n';
    out << words.size() << " words\n";
    return;
  }
  header["count"] = words.size();
  header["words"] = word_list(ring, words);
  emit(out, header);
}

int emit_report(std::ostream& out, const RunConfig& cfg, const Report& report, ojson header) {
  if (cfg.table()) {
    print_table(out, report);
  } else {
    const ojson body = to_json(report);
    for (const auto& [k, v] : body.items()) header[k] = v;
    emit(out, header);
  }
  return report.passed() ? kExitOk : kExitFailed;
}

int cmd_validate_ring(const RunConfig& cfg, std::ostream& out) {
  const BaseRing ring = make_ring(cfg, false);
  ojson header;
  header["ring"] = ring.describe();
  return emit_report(out, cfg, validate_ring(ring), std::move(header));
}

int cmd_decompose(const RunConfig& cfg, std::ostream& out) {
  const BaseRing ring = make_ring(cfg, true);
  const Word x = word_arg(ring, cfg.x, "--x");
  const Word y = word_arg(ring, cfg.y, "--y");
  const Decomposition d = decompose(ring, x, y);
  if (cfg.table()) {
    for (const auto& [z, m] : d) out << std::setw(6) << m << "  " << render(ring, z) << '\n';
    return kExitOk;
  }
  ojson terms = ojson::array();
  for (const auto& [z, m] : d) {
    ojson t;
    t["word"] = render(ring, z);
    t["mult"] = m;
    terms.push_back(std::move(t));
  }
  ojson j;
  j["terms"] = std::move(terms);
  emit(out, j);
  return kExitOk;
}

int cmd_dim(const RunConfig& cfg, bool at_given, std::ostream& out, std::ostream& err) {
  const BaseRing ring = make_ring(cfg, true);
  const Word x = word_arg(ring, cfg.x, "--x");
  const DimPoly p = dimpoly(ring, x);
  if (at_given) {
    if (cfg.at < 1) throw UsageError("--at requires N >= 1");
    if (cfg.at < 4) {
      err << "warning: the fusion-rule labelling is only claimed for N >= 4\n";
    }
    out << p(BigInt(cfg.at)).str() << '\n';
    return kExitOk;
  }
  if (cfg.table()) {
    out << to_string(p) << '\n';
    return kExitOk;
  }
  // Coefficients may exceed 64 bits; write the array by hand.
  out << '[';
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) out << ',';
    out << p.coeffs()[i].str();
  }
  out << "]\n";
  return kExitOk;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  const BaseRing ring = make_ring(cfg, true);
  const Word x = word_arg(ring, cfg.x, "--x");
  const WordClass c = classify(ring, x);
  ojson classes = ojson::array();
  for (auto id : {WordClassId::kE1, WordClassId::kE2, WordClassId::kE3, WordClassId::kS,
                  WordClassId::kG1, WordClassId::kG2}) {
    if (c.contains(id)) classes.push_back(to_string(id));
  }
  if (cfg.table()) {
    out << render(ring, x) << ':';
    for (const auto& name : classes) out << ' ' << name.get<std::string>();
    out << '\n';
    return kExitOk;
  }
  ojson j;
  j["word"] = render(ring, x);
  j["classes"] = std::move(classes);
  emit(out, j);
  return kExitOk;
}

int cmd_classify_enum(const RunConfig& cfg, std::ostream& out) {
  const BaseRing ring = make_ring(cfg, true);
  if (cfg.cls.empty()) throw UsageError("--class is required");
  const WordClassId cls = parse_class(cfg.cls);
  const SliceBounds bounds = bounds_arg(cfg);
  ojson header;
  header["class"] = to_string(cls);
  header["universe"] = describe(ring, bounds);
  emit_words(out, cfg, ring, enumerate_class(ring, cls, bounds), std::move(header));
  return kExitOk;
}

int cmd_circ(const RunConfig& cfg, std::ostream& out) {
  const BaseRing ring = make_ring(cfg, true);
  const WordSet a = set_arg(ring, cfg.set_a, "--a");
  const WordSet b = set_arg(ring, cfg.set_b, "--b");
  emit_words(out, cfg, ring, circ(ring, a, b), ojson::object());
  return kExitOk;
}

int cmd_verify(const std::string& which, const RunConfig& cfg, std::ostream& out) {
  const BaseRing ring = make_ring(cfg, which != "sweep");
  const SliceBounds bounds = bounds_arg(cfg);
  ojson header;
  header["ring"] = ring.describe();
  header["universe"] = describe(ring, bounds);
  if (which == "sweep") {
    SweepOptions options;
    options.bounds = bounds;
    options.assoc_maxlen = cfg.assoc_len;
    return emit_report(out, cfg, verify_sweep(ring, options), std::move(header));
  }
  const Label alpha = alpha_arg(ring, cfg.alpha);
  header["alpha"] = ring.id(alpha);
  const Report report = which == "stability" ? verify_stability(ring, alpha, bounds)
                                             : verify_fullness_lemma(ring, alpha, bounds);
  return emit_report(out, cfg, report, std::move(header));
}

int cmd_powers_cert(const RunConfig& cfg, std::ostream& out) {
  const BaseRing ring = make_ring(cfg, true);
  const WordSet support = set_arg(ring, cfg.support, "--support");
  const Label alpha = alpha_arg(ring, cfg.alpha);
  CertificateOptions options;
  options.c0 = parse_rational(cfg.c0);
  if (!cfg.eps.empty()) options.eps = parse_rational(cfg.eps);
  options.max_support = cfg.max_support;
  options.trace_sets = cfg.trace_sets;
  options.hypothesis_bounds = bounds_arg(cfg);
  const PowersCertificate cert = build_certificate(ring, support, alpha, options);
  if (cfg.table()) {
    out << "conjugator  " << render(ring, cert.conjugator) << " (k = " << cert.k << ")\n"
        << "target      " << to_string(cert.target) << '\n'
        << "iterations  " << cert.iterations << '\n'
        << "final bound " << to_string(cert.norm_bound_trace.back()) << '\n'
        << "supports   ";
    for (std::size_t s : cert.support_sizes) out << ' ' << s;
    out << (cert.truncated ? " (truncated)" : "") << '\n';
    print_table(out, cert.hypothesis_report);
    print_table(out, cert.support_report);
    out << "certificate " << (cert.passed() ? "PASSED" : "FAILED")
        << (cert.truncated ? " (support cap reached)" : "") << '\n';
  } else {
    emit(out, to_json(ring, cert));
  }
  return cert.passed() ? kExitOk : kExitFailed;
}

void add_ring_options(CLI::App& app, RunConfig& cfg) {
  app.add_option("--ring", cfg.ring,
                 "ring JSON file or builtin:trivial|dual-group|interval-step1|interval-step2");
  app.add_option("--cayley", cfg.cayley, "Cayley table JSON for builtin:dual-group");
  app.add_option("--param", cfg.param, "parameter M (>= 4) of the interval families");
  app.add_option("--format", cfg.format, "output mode")
      ->check(CLI::IsMember({"json", "table"}));
}

void add_slice_options(CLI::App& app, RunConfig& cfg) {
  app.add_option("--maxlen", cfg.maxlen, "maximal word length of slices");
  app.add_option("--labels", cfg.labels, "label budget of slices (integer or 'all')");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Fusion rules of free wreath products G wr* S_N^+", "wreath-fusion"};
  app.require_subcommand(1);
  app.fallthrough();
  add_ring_options(app, cfg);

  auto* validate = app.add_subcommand("validate-ring", "check the fusion-ring invariants");

  auto* decompose_cmd = app.add_subcommand("decompose", "decompose w(x) (x) w(y)");
  decompose_cmd->add_option("--x", cfg.x, "left word, e.g. \"(a,1,b)\"");
  decompose_cmd->add_option("--y", cfg.y, "right word");

  auto* dim = app.add_subcommand("dim", "dimension of w(x) as a polynomial in n");
  dim->add_option("--x", cfg.x, "word");
  auto* poly_flag = dim->add_flag("--poly", cfg.poly, "coefficients, low to high (default)");
  auto* at_opt = dim->add_option("--at", cfg.at, "evaluate at n = N");
  poly_flag->excludes(at_opt);

  auto* classify_cmd = app.add_subcommand("classify", "word-class membership");
  classify_cmd->add_option("--x", cfg.x, "word");

  auto* classify_enum = app.add_subcommand("classify-enum", "enumerate a word-class slice");
  classify_enum->add_option("--class", cfg.cls, "E_1, E_2, E_3, S, G_1 or G_2");
  add_slice_options(*classify_enum, cfg);

  auto* circ_cmd = app.add_subcommand("circ", "A o B");
  circ_cmd->add_option("--a", cfg.set_a, "';'-separated words");
  circ_cmd->add_option("--b", cfg.set_b, "';'-separated words");

  auto* verify = app.add_subcommand("verify", "lemma verifiers");
  verify->require_subcommand(1);
  verify->fallthrough();
  std::string which;
  for (const char* name : {"stability", "fullness", "sweep"}) {
    auto* sub = verify->add_subcommand(name);
    sub->callback([&which, name] { which = name; });
    add_slice_options(*sub, cfg);
    if (std::string(name) == "sweep") {
      sub->add_option("--assoc-len", cfg.assoc_len,
                      "word-length bound of the associativity oracle");
    } else {
      sub->add_option("--alpha", cfg.alpha, "non-unit label");
    }
  }

  auto* powers = app.add_subcommand("powers-cert", "support/contraction certificate");
  powers->add_option("--support", cfg.support, "';'-separated words in S");
  powers->add_option("--alpha", cfg.alpha, "non-unit label");
  powers->add_option("--c0", cfg.c0, "initial norm bound p/q");
  powers->add_option("--eps", cfg.eps, "replaces the 1/4 target");
  powers->add_option("--max-support", cfg.max_support, "support size cap");
  powers->add_flag("--trace-sets", cfg.trace_sets, "include the support sets");
  add_slice_options(*powers, cfg);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*validate) return cmd_validate_ring(cfg, out);
    if (*decompose_cmd) return cmd_decompose(cfg, out);
    if (*dim) return cmd_dim(cfg, at_opt->count() > 0, out, err);
    if (*classify_cmd) return cmd_classify(cfg, out);
    if (*classify_enum) return cmd_classify_enum(cfg, out);
    if (*circ_cmd) return cmd_circ(cfg, out);
    if (*verify) return cmd_verify(which, cfg, out);
    if (*powers) return cmd_powers_cert(cfg, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace wreath::cli
