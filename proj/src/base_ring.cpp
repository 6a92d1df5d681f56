#include "wreath/base_ring.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

#include "wreath/errors.hpp"

namespace wreath {

struct BaseRing::Impl {
  RingFamily family = RingFamily::kTable;
  std::int64_t param = 0;
  RingTable table;
  std::unordered_map<std::string, Label> by_id;

  std::size_t size() const { return table.ids.size(); }
};

namespace {

constexpr std::string_view kReservedChars = "*,();\"\\ \t\r\n";

bool valid_id(std::string_view id) {
  return !id.empty() && id.find_first_of(kReservedChars) == std::string_view::npos;
}

BigInt interval_dim(RingFamily family, std::int64_t M, std::uint32_t k) {
  BigInt prev = 1;
  BigInt cur = family == RingFamily::kIntervalStep1 ? BigInt(M - 1) : BigInt(M);
  if (k == 0) return prev;
  const BigInt factor = family == RingFamily::kIntervalStep1 ? BigInt(M - 2) : BigInt(M);
  for (std::uint32_t i = 1; i < k; ++i) {
    BigInt next = factor * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::string pair_id(const BaseRing& ring, Label a, Label b) {
  return "(" + ring.id(a) + "," + ring.id(b) + ")";
}

std::string triple_id(const BaseRing& ring, Label a, Label b, Label c) {
  return "(" + ring.id(a) + "," + ring.id(b) + "," + ring.id(c) + ")";
}

Multiplicity coefficient(const FusionResult& r, Label c) {
  for (const auto& t : r) {
    if (t.label == c) return t.mult;
  }
  return 0;
}

std::map<Label, Multiplicity> as_map(const FusionResult& r) {
  std::map<Label, Multiplicity> m;
  for (const auto& t : r) m[t.label] += t.mult;
  return m;
}

std::string render_fusion(const BaseRing& ring, const std::map<Label, Multiplicity>& m) {
  std::string s = "{";
  bool first = true;
  for (const auto& [l, c] : m) {
    if (!first) s += ",";
    first = false;
    s += ring.id(l) + ":" + std::to_string(c);
  }
  return s + "}";
}

void check_table_shape(const RingTable& t) {
  const std::size_t n = t.ids.size();
  if (n == 0) throw ParseError("ring has no labels");
  if (t.dual.size() != n || t.dims.size() != n || t.fusion.size() != n * n) {
    throw ParseError("ring tables have inconsistent sizes");
  }
  if (t.unit.index >= n) throw ParseError("unit is not a label of the ring");
  for (Label d : t.dual) {
    if (d.index >= n) throw ParseError("dual maps outside the label set");
  }
  for (const auto& r : t.fusion) {
    for (const auto& term : r) {
      if (term.label.index >= n) throw ParseError("fusion produces an unknown label");
      if (term.mult <= 0) throw ParseError("fusion multiplicities must be positive");
    }
  }
}

}  // namespace

BaseRing BaseRing::from_table(RingTable table) {
  check_table_shape(table);
  auto impl = std::make_shared<Impl>();
  for (std::size_t i = 0; i < table.ids.size(); ++i) {
    if (!valid_id(table.ids[i])) throw ParseError("invalid label id '" + table.ids[i] + "'");
    auto [it, inserted] =
        impl->by_id.emplace(table.ids[i], Label{static_cast<std::uint32_t>(i)});
    if (!inserted) throw ParseError("duplicate label id '" + table.ids[i] + "'");
    if (table.ids[i] == "1" && i != table.unit.index) {
      throw ParseError("label id '1' is reserved for the unit");
    }
  }
  for (auto& r : table.fusion) {
    std::sort(r.begin(), r.end(),
              [](const FusionTerm& x, const FusionTerm& y) { return x.label < y.label; });
    for (std::size_t i = 1; i < r.size(); ++i) {
      if (r[i].label == r[i - 1].label) throw ParseError("duplicate fusion entry");
    }
  }
  impl->table = std::move(table);
  return BaseRing(std::move(impl));
}

BaseRing BaseRing::interval(RingFamily family, std::int64_t param) {
  if (family == RingFamily::kTable) {
    throw PreconditionError("interval() requires an interval family");
  }
  if (param < 4) throw PreconditionError("interval families require M >= 4");
  auto impl = std::make_shared<Impl>();
  impl->family = family;
  impl->param = param;
  return BaseRing(std::move(impl));
}

RingFamily BaseRing::family() const { return impl_->family; }

std::optional<std::size_t> BaseRing::size() const {
  if (!finite()) return std::nullopt;
  return impl_->size();
}

std::int64_t BaseRing::param() const { return impl_->param; }

bool BaseRing::contains(Label a) const { return !finite() || a.index < impl_->size(); }

Label BaseRing::unit() const { return finite() ? impl_->table.unit : Label{0}; }

Label BaseRing::dual(Label a) const {
  if (!finite()) return a;
  return impl_->table.dual.at(a.index);
}

BigInt BaseRing::dim(Label a) const {
  if (!finite()) return interval_dim(impl_->family, impl_->param, a.index);
  return impl_->table.dims.at(a.index);
}

FusionResult BaseRing::fuse(Label a, Label b) const {
  if (finite()) return impl_->table.fusion.at(a.index * impl_->size() + b.index);
  const std::uint32_t lo = a.index > b.index ? a.index - b.index : b.index - a.index;
  const std::uint32_t hi = a.index + b.index;
  const std::uint32_t step = impl_->family == RingFamily::kIntervalStep1 ? 1 : 2;
  FusionResult out;
  for (std::uint32_t c = lo; c <= hi; c += step) out.push_back({Label{c}, 1});
  return out;
}

std::string BaseRing::id(Label a) const {
  if (!finite()) return "v" + std::to_string(a.index);
  return impl_->table.ids.at(a.index);
}

std::optional<Label> BaseRing::find(std::string_view id) const {
  if (finite()) {
    auto it = impl_->by_id.find(std::string(id));
    if (it == impl_->by_id.end()) return std::nullopt;
    return it->second;
  }
  if (id.size() < 2 || id.front() != 'v') return std::nullopt;
  std::uint32_t k = 0;
  auto [ptr, ec] = std::from_chars(id.data() + 1, id.data() + id.size(), k);
  if (ec != std::errc() || ptr != id.data() + id.size()) return std::nullopt;
  if (id.size() > 2 && id[1] == '0') return std::nullopt;
  return Label{k};
}

std::vector<Label> BaseRing::first_labels(std::size_t bound) const {
  std::size_t n = bound;
  if (finite()) n = std::min(n, impl_->size());
  std::vector<Label> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(Label{static_cast<std::uint32_t>(i)});
  return out;
}

std::string BaseRing::describe() const {
  switch (impl_->family) {
    case RingFamily::kIntervalStep1:
      return "interval-step1(M=" + std::to_string(impl_->param) + ")";
    case RingFamily::kIntervalStep2:
      return "interval-step2(M=" + std::to_string(impl_->param) + ")";
    case RingFamily::kTable:
      break;
  }
  return "finite ring (" + std::to_string(impl_->size()) + " labels)";
}

BaseRing make_trivial() {
  RingTable t;
  t.ids = {"1"};
  t.unit = Label{0};
  t.dual = {Label{0}};
  t.dims = {1};
  t.fusion = {FusionResult{{Label{0}, 1}}};
  return BaseRing::from_table(std::move(t));
}

namespace {

std::size_t check_group(const CayleyTable& c) {
  const std::size_t n = c.elements.size();
  if (n == 0) throw PreconditionError("Cayley table has no elements");
  if (c.table.size() != n) throw PreconditionError("Cayley table is not square");
  for (const auto& row : c.table) {
    if (row.size() != n) throw PreconditionError("Cayley table is not square");
    for (std::size_t v : row) {
      if (v >= n) throw PreconditionError("Cayley table is not closed");
    }
  }
  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = c.table[e][a] == a && c.table[a][e] == a;
    if (ok) identity = e;
  }
  if (!identity) throw PreconditionError("Cayley table has no identity element");
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t d = 0; d < n; ++d) {
        if (c.table[c.table[a][b]][d] != c.table[a][c.table[b][d]]) {
          throw PreconditionError("Cayley table is not associative at (" + c.elements[a] +
                                  "," + c.elements[b] + "," + c.elements[d] + ")");
        }
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (std::size_t b = 0; b < n && !has_inverse; ++b) {
      has_inverse = c.table[a][b] == *identity && c.table[b][a] == *identity;
    }
    if (!has_inverse) throw PreconditionError("element " + c.elements[a] + " has no inverse");
  }
  return *identity;
}

}  // namespace

BaseRing make_dual_group(const CayleyTable& cayley) {
  const std::size_t identity = check_group(cayley);
  const std::size_t n = cayley.elements.size();
  RingTable t;
  t.ids = cayley.elements;
  t.unit = Label{static_cast<std::uint32_t>(identity)};
  t.dims.assign(n, 1);
  t.dual.resize(n);
  t.fusion.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (cayley.table[a][b] == identity) t.dual[a] = Label{static_cast<std::uint32_t>(b)};
      t.fusion[a * n + b] = {{Label{static_cast<std::uint32_t>(cayley.table[a][b])}, 1}};
    }
  }
  return BaseRing::from_table(std::move(t));
}

BaseRing make_interval_step1(std::int64_t M) {
  return BaseRing::interval(RingFamily::kIntervalStep1, M);
}

BaseRing make_interval_step2(std::int64_t M) {
  return BaseRing::interval(RingFamily::kIntervalStep2, M);
}

CayleyTable cyclic_cayley_table(std::size_t n) {
  CayleyTable c;
  for (std::size_t i = 0; i < n; ++i) {
    c.elements.push_back(i == 0 ? "e" : i == 1 ? "a" : "a" + std::to_string(i));
  }
  c.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) c.table[i][j] = (i + j) % n;
  }
  return c;
}

CayleyTable parse_cayley(const nlohmann::json& doc) {
  try {
    CayleyTable c;
    c.elements = doc.at("elements").get<std::vector<std::string>>();
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < c.elements.size(); ++i) {
      if (!index.emplace(c.elements[i], i).second) {
        throw ParseError("duplicate group element '" + c.elements[i] + "'");
      }
    }
    for (const auto& row : doc.at("table")) {
      std::vector<std::size_t> r;
      for (const auto& cell : row) {
        auto it = index.find(cell.get<std::string>());
        if (it == index.end()) {
          throw ParseError("unknown group element '" + cell.get<std::string>() + "'");
        }
        r.push_back(it->second);
      }
      c.table.push_back(std::move(r));
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed Cayley table: ") + e.what());
  }
}

namespace {

nlohmann::json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace

CayleyTable load_cayley_file(const std::filesystem::path& path) {
  return parse_cayley(read_json_file(path));
}

FusionResult base_fuse(const BaseRing& ring, Label a, Label b) {
  if (!ring.contains(a) || !ring.contains(b)) {
    throw PreconditionError("unknown label index " +
                            std::to_string(ring.contains(a) ? b.index : a.index));
  }
  return ring.fuse(a, b);
}

Report validate_ring(const BaseRing& ring, std::size_t generative_bound) {
  const std::vector<Label> labels = ring.first_labels(
      ring.finite() ? *ring.size() : generative_bound);
  const std::string universe =
      ring.finite() ? "all labels"
                    : "first " + std::to_string(labels.size()) + " labels";
  const Label unit = ring.unit();
  Report report;

  auto run = [&](std::string claim, auto&& body) {
    ReportItem item{std::move(claim), universe, Status::kPass, {}, 0};
    body(item);
    report.add(std::move(item));
  };
  auto fail = [](ReportItem& item, std::string witness) {
    if (item.status == Status::kPass) {
      item.status = Status::kFail;
      item.witness = std::move(witness);
    }
  };

  run("dual involution", [&](ReportItem& item) {
    for (Label a : labels) {
      ++item.checked;
      if (ring.dual(ring.dual(a)) != a) fail(item, "(" + ring.id(a) + ")");
    }
  });
  run("unit self-dual", [&](ReportItem& item) {
    item.checked = 1;
    if (ring.dual(unit) != unit) fail(item, "(" + ring.id(unit) + ")");
  });
  run("unit dimension", [&](ReportItem& item) {
    item.checked = 1;
    if (ring.dim(unit) != 1) fail(item, "(" + ring.id(unit) + "): " + ring.dim(unit).str());
  });
  run("dual dimension", [&](ReportItem& item) {
    for (Label a : labels) {
      ++item.checked;
      if (ring.dim(ring.dual(a)) != ring.dim(a)) fail(item, "(" + ring.id(a) + ")");
    }
  });
  run("positive dimension", [&](ReportItem& item) {
    for (Label a : labels) {
      ++item.checked;
      if (ring.dim(a) <= 0) fail(item, "(" + ring.id(a) + ")");
    }
  });
  run("unit law", [&](ReportItem& item) {
    for (Label a : labels) {
      ++item.checked;
      const FusionResult expect{{a, 1}};
      if (ring.fuse(unit, a) != expect || ring.fuse(a, unit) != expect) {
        fail(item, pair_id(ring, unit, a));
      }
    }
  });
  run("Frobenius at unit", [&](ReportItem& item) {
    for (Label a : labels) {
      for (Label b : labels) {
        ++item.checked;
        const Multiplicity expect = b == ring.dual(a) ? 1 : 0;
        const Multiplicity got = coefficient(ring.fuse(a, b), unit);
        if (got != expect) {
          fail(item, pair_id(ring, a, b) + ": N^unit = " + std::to_string(got) +
                         ", expected " + std::to_string(expect));
        }
      }
    }
  });
  run("dimension identity", [&](ReportItem& item) {
    for (Label a : labels) {
      for (Label b : labels) {
        ++item.checked;
        BigInt sum = 0;
        for (const auto& t : ring.fuse(a, b)) sum += t.mult * ring.dim(t.label);
        const BigInt prod = ring.dim(a) * ring.dim(b);
        if (sum != prod) {
          fail(item, pair_id(ring, a, b) + ": " + prod.str() + " != " + sum.str());
        }
      }
    }
  });
  run("conjugation symmetry", [&](ReportItem& item) {
    for (Label a : labels) {
      for (Label b : labels) {
        ++item.checked;
        std::map<Label, Multiplicity> conj;
        for (const auto& t : ring.fuse(a, b)) conj[ring.dual(t.label)] += t.mult;
        if (conj != as_map(ring.fuse(ring.dual(b), ring.dual(a)))) {
          fail(item, pair_id(ring, a, b));
        }
      }
    }
  });
  run("associativity", [&](ReportItem& item) {
    for (Label a : labels) {
      for (Label b : labels) {
        const FusionResult ab = ring.fuse(a, b);
        for (Label c : labels) {
          ++item.checked;
          std::map<Label, Multiplicity> left;
          for (const auto& d : ab) {
            for (const auto& e : ring.fuse(d.label, c)) left[e.label] += d.mult * e.mult;
          }
          std::map<Label, Multiplicity> right;
          for (const auto& d : ring.fuse(b, c)) {
            for (const auto& e : ring.fuse(a, d.label)) right[e.label] += d.mult * e.mult;
          }
          if (left != right) {
            fail(item, triple_id(ring, a, b, c) + ": " + render_fusion(ring, left) +
                           " != " + render_fusion(ring, right));
          }
        }
      }
    }
  });
  return report;
}

BaseRing parse_ring(const nlohmann::json& doc) {
  RingTable t;
  std::unordered_map<std::string, Label> index;
  auto lookup = [&](const std::string& id, const char* where) {
    auto it = index.find(id);
    if (it == index.end()) {
      throw ParseError(std::string("unknown label '") + id + "' in " + where);
    }
    return it->second;
  };
  try {
    if (!doc.is_object()) throw ParseError("ring document must be a JSON object");
    t.ids = doc.at("labels").get<std::vector<std::string>>();
    const std::size_t n = t.ids.size();
    if (n == 0) throw ParseError("ring has no labels");
    for (std::size_t i = 0; i < n; ++i) {
      if (!valid_id(t.ids[i])) throw ParseError("invalid label id '" + t.ids[i] + "'");
      if (!index.emplace(t.ids[i], Label{static_cast<std::uint32_t>(i)}).second) {
        throw ParseError("duplicate label id '" + t.ids[i] + "'");
      }
    }
    t.unit = lookup(doc.at("unit").get<std::string>(), "unit");

    const auto& dual = doc.at("dual");
    const auto& dims = doc.at("dims");
    if (dual.size() != n) throw ParseError("dual must map every label exactly once");
    if (dims.size() != n) throw ParseError("dims must give every label exactly once");
    t.dual.resize(n);
    t.dims.resize(n);
    for (auto it = dual.begin(); it != dual.end(); ++it) {
      t.dual[lookup(it.key(), "dual").index] = lookup(it.value().get<std::string>(), "dual");
    }
    for (auto it = dims.begin(); it != dims.end(); ++it) {
      const auto d = it.value().get<std::int64_t>();
      if (d <= 0) throw ParseError("dimension of '" + it.key() + "' must be positive");
      t.dims[lookup(it.key(), "dims").index] = d;
    }

    const auto& fusion = doc.at("fusion");
    t.fusion.resize(n * n);
    std::vector<bool> seen(n * n, false);
    for (auto it = fusion.begin(); it != fusion.end(); ++it) {
      const std::string& key = it.key();
      const auto star = key.find('*');
      if (star == std::string::npos || key.find('*', star + 1) != std::string::npos) {
        throw ParseError("fusion key '" + key + "' is not of the form a*b");
      }
      const Label a = lookup(key.substr(0, star), "fusion key");
      const Label b = lookup(key.substr(star + 1), "fusion key");
      const std::size_t slot = a.index * n + b.index;
      seen[slot] = true;
      for (auto term = it.value().begin(); term != it.value().end(); ++term) {
        const auto mult = term.value().get<Multiplicity>();
        if (mult <= 0) {
          throw ParseError("multiplicity in '" + key + "' must be positive");
        }
        t.fusion[slot].push_back({lookup(term.key(), "fusion result"), mult});
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (!seen[a * n + b]) {
          throw ParseError("fusion table is missing pair '" + t.ids[a] + "*" + t.ids[b] + "'");
        }
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed ring document: ") + e.what());
  }

  return BaseRing::from_table(std::move(t));
}

BaseRing load_ring(const nlohmann::json& doc) {
  BaseRing ring = parse_ring(doc);
  const Report report = validate_ring(ring);
  if (const ReportItem* f = report.first_failure()) {
    throw ValidationError(f->claim + " violated at " + f->witness);
  }
  return ring;
}

BaseRing load_ring_file(const std::filesystem::path& path) {
  return load_ring(read_json_file(path));
}

BaseRing parse_ring_file(const std::filesystem::path& path) {
  return parse_ring(read_json_file(path));
}

nlohmann::ordered_json ring_to_json(const BaseRing& ring) {
  if (!ring.finite()) throw PreconditionError("only finite rings can be serialized");
  nlohmann::ordered_json doc;
  const auto labels = ring.first_labels(*ring.size());
  nlohmann::ordered_json ids = nlohmann::ordered_json::array();
  nlohmann::ordered_json dual = nlohmann::ordered_json::object();
  nlohmann::ordered_json dims = nlohmann::ordered_json::object();
  nlohmann::ordered_json fusion = nlohmann::ordered_json::object();
  for (Label a : labels) {
    ids.push_back(ring.id(a));
    dual[ring.id(a)] = ring.id(ring.dual(a));
    dims[ring.id(a)] = ring.dim(a).convert_to<std::int64_t>();
  }
  for (Label a : labels) {
    for (Label b : labels) {
      nlohmann::ordered_json terms = nlohmann::ordered_json::object();
      for (const auto& t : ring.fuse(a, b)) terms[ring.id(t.label)] = t.mult;
      fusion[ring.id(a) + "*" + ring.id(b)] = std::move(terms);
    }
  }
  doc["labels"] = std::move(ids);
  doc["unit"] = ring.id(ring.unit());
  doc["dual"] = std::move(dual);
  doc["dims"] = std::move(dims);
  doc["fusion"] = std::move(fusion);
  return doc;
}

}  // namespace wreath
