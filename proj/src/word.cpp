#include "wreath/word.hpp"

#include <algorithm>

#include "wreath/errors.hpp"

namespace wreath {

Word Word::slice(std::size_t pos, std::size_t count) const {
  return Word(std::vector<Label>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                 letters_.begin() + static_cast<std::ptrdiff_t>(pos + count)));
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                b.letters_.begin(), b.letters_.end());
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  // FNV-1a over the label indices.
  std::size_t h = 1469598103934665603ull;
  for (Label l : w.letters()) {
    h ^= l.index;
    h *= 1099511628211ull;
  }
  return h ^ w.size();
}

Word concat(const Word& x, const Word& y) {
  std::vector<Label> out;
  out.reserve(x.size() + y.size());
  out.insert(out.end(), x.letters().begin(), x.letters().end());
  out.insert(out.end(), y.letters().begin(), y.letters().end());
  return Word(std::move(out));
}

Word concat(const Word& x, Label a) {
  std::vector<Label> out(x.letters().begin(), x.letters().end());
  out.push_back(a);
  return Word(std::move(out));
}

Word involute(const BaseRing& ring, const Word& x) {
  std::vector<Label> out;
  out.reserve(x.size());
  for (auto it = x.letters().rbegin(); it != x.letters().rend(); ++it) {
    out.push_back(ring.dual(*it));
  }
  return Word(std::move(out));
}

Word ones(const BaseRing& ring, std::size_t k) {
  return Word(std::vector<Label>(k, ring.unit()));
}

void require_in_ring(const BaseRing& ring, const Word& x) {
  for (Label l : x.letters()) {
    if (!ring.contains(l)) {
      throw PreconditionError("word letter " + std::to_string(l.index) +
                              " is not a label of the ring");
    }
  }
}

bool WordClass::contains(WordClassId c) const {
  switch (c) {
    case WordClassId::kE1: return e1;
    case WordClassId::kE2: return e2;
    case WordClassId::kE3: return e3;
    case WordClassId::kS: return s;
    case WordClassId::kG1: return g1;
    case WordClassId::kG2: return g2;
  }
  return false;
}

WordClass classify(const BaseRing& ring, const Word& x) {
  const Label unit = ring.unit();
  WordClass c;
  c.e2 = std::all_of(x.letters().begin(), x.letters().end(),
                     [unit](Label l) { return l == unit; });
  c.e1 = x.empty() || x.front() == unit;
  c.e3 = c.e1 && !c.e2;
  c.s = !c.e2;
  c.g1 = !x.empty() && x.front() != unit;
  c.g2 = c.g1 && x.back() != unit;
  return c;
}

bool in_class(const BaseRing& ring, const Word& x, WordClassId c) {
  return classify(ring, x).contains(c);
}

std::string to_string(WordClassId c) {
  switch (c) {
    case WordClassId::kE1: return "E_1";
    case WordClassId::kE2: return "E_2";
    case WordClassId::kE3: return "E_3";
    case WordClassId::kS: return "S";
    case WordClassId::kG1: return "G_1";
    case WordClassId::kG2: return "G_2";
  }
  return "?";
}

WordClassId parse_class(std::string_view name) {
  for (auto c : {WordClassId::kE1, WordClassId::kE2, WordClassId::kE3, WordClassId::kS,
                 WordClassId::kG1, WordClassId::kG2}) {
    std::string full = to_string(c);
    std::string compact = full;
    std::erase(compact, '_');
    if (name == full || name == compact) return c;
  }
  throw ParseError("unknown word class '" + std::string(name) + "'");
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

Word parse_word(const BaseRing& ring, std::string_view text) {
  const std::string_view t = trim(text);
  if (t.size() < 2 || t.front() != '(' || t.back() != ')') {
    throw ParseError("word must be written as (a,b,...): '" + std::string(text) + "'");
  }
  const std::string_view body = trim(t.substr(1, t.size() - 2));
  std::vector<Label> letters;
  if (body.empty()) return Word();
  std::size_t pos = 0;
  while (true) {
    const auto comma = body.find(',', pos);
    const std::string_view token =
        trim(body.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                              : comma - pos));
    if (token.empty()) throw ParseError("empty letter in word '" + std::string(text) + "'");
    if (token == "1") {
      letters.push_back(ring.unit());
    } else if (auto l = ring.find(token)) {
      letters.push_back(*l);
    } else {
      throw ParseError("unknown label '" + std::string(token) + "'");
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Word(std::move(letters));
}

std::vector<Word> parse_word_list(const BaseRing& ring, std::string_view text) {
  std::vector<Word> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto semi = text.find(';', pos);
    const std::string_view item = trim(
        text.substr(pos, semi == std::string_view::npos ? std::string_view::npos : semi - pos));
    if (!item.empty()) out.push_back(parse_word(ring, item));
    if (semi == std::string_view::npos) break;
    pos = semi + 1;
  }
  return out;
}

std::string render(const BaseRing& ring, const Word& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ',';
    s += x[i] == ring.unit() ? std::string("1") : ring.id(x[i]);
  }
  return s + ")";
}

}  // namespace wreath
