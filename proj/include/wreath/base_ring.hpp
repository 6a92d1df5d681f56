#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "wreath/bigint.hpp"
#include "wreath/report.hpp"

namespace wreath {

/// An irreducible of the base quantum group, identified by its ordinal in the
/// ring (declaration order for user rings, numeric order for families).
struct Label {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(Label, Label) = default;
};

using Multiplicity = std::int64_t;

struct FusionTerm {
  Label label;
  Multiplicity mult = 0;

  friend bool operator==(const FusionTerm&, const FusionTerm&) = default;
};

/// Structure constants of a ⊗ b, sorted by label index, multiplicities > 0.
using FusionResult = std::vector<FusionTerm>;

/// Raw tables for a finite ring. `fusion[a * size + b]` holds a ⊗ b.
struct RingTable {
  std::vector<std::string> ids;
  Label unit;
  std::vector<Label> dual;
  std::vector<BigInt> dims;
  std::vector<FusionResult> fusion;
};

enum class RingFamily { kTable, kIntervalStep1, kIntervalStep2 };

/// Fusion data of the base quantum group G of Kac type.
///
/// Immutable value type; copies share the underlying tables. Finite rings are
/// table-backed. The interval families have label set ℕ and generate fusion
/// and dimensions on demand.
class BaseRing {
 public:
  /// Builds a finite ring without validating it; see load_ring / validate_ring.
  static BaseRing from_table(RingTable table);
  static BaseRing interval(RingFamily family, std::int64_t param);

  RingFamily family() const;
  bool finite() const { return family() == RingFamily::kTable; }
  /// Number of labels; nullopt for generative families.
  std::optional<std::size_t> size() const;
  std::int64_t param() const;

  bool contains(Label a) const;
  Label unit() const;
  Label dual(Label a) const;
  BigInt dim(Label a) const;
  FusionResult fuse(Label a, Label b) const;

  std::string id(Label a) const;
  std::optional<Label> find(std::string_view id) const;

  /// First `bound` labels in index order (all labels of a finite ring if
  /// bound exceeds its size).
  std::vector<Label> first_labels(std::size_t bound) const;

  /// Short human-readable description, e.g. "interval-step1(M=8)".
  std::string describe() const;

 private:
  struct Impl;
  explicit BaseRing(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Multiplication table of a finite group: `table[i][j]` = index of
/// elements[i] * elements[j].
struct CayleyTable {
  std::vector<std::string> elements;
  std::vector<std::vector<std::size_t>> table;
};

BaseRing make_trivial();
/// Dual of a finite group: labels are group elements, dims 1, dual = inverse.
/// Throws PreconditionError if the table is not a group.
BaseRing make_dual_group(const CayleyTable& cayley);
/// Requires M >= 4.
BaseRing make_interval_step1(std::int64_t M);
BaseRing make_interval_step2(std::int64_t M);

/// Cayley table of ℤ/n with elements named "e", "a", "a2", ...
CayleyTable cyclic_cayley_table(std::size_t n);
CayleyTable parse_cayley(const nlohmann::json& doc);
CayleyTable load_cayley_file(const std::filesystem::path& path);

/// Unknown label -> PreconditionError.
FusionResult base_fuse(const BaseRing& ring, Label a, Label b);

inline constexpr std::size_t kGenerativeValidationBound = 6;

/// Checks every fusion-ring invariant. Exhaustive for finite rings; for
/// generative families over the first `generative_bound` labels.
Report validate_ring(const BaseRing& ring,
                     std::size_t generative_bound = kGenerativeValidationBound);

/// Parses a ring document and validates it. Throws ParseError for malformed
/// documents and ValidationError (naming the first failing check and its
/// witness) when an invariant fails.
BaseRing load_ring(const nlohmann::json& doc);
BaseRing load_ring_file(const std::filesystem::path& path);

/// Parses a ring document without running validate_ring.
BaseRing parse_ring(const nlohmann::json& doc);
BaseRing parse_ring_file(const std::filesystem::path& path);

nlohmann::ordered_json ring_to_json(const BaseRing& ring);

}  // namespace wreath
