#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "wreath/bigint.hpp"

namespace wreath {

/// Polynomial in the wreath parameter n with exact integer coefficients,
/// stored low-to-high without trailing zeros. The zero polynomial has no
/// coefficients and degree -1.
class DimPoly {
 public:
  DimPoly() = default;
  DimPoly(std::initializer_list<BigInt> coeffs);
  explicit DimPoly(std::vector<BigInt> coeffs);
  static DimPoly constant(BigInt c);
  /// The monomial c·n.
  static DimPoly linear(BigInt c);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff(std::size_t i) const;
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  BigInt operator()(const BigInt& n) const;

  DimPoly& operator+=(const DimPoly& other);
  DimPoly& operator-=(const DimPoly& other);
  DimPoly& operator*=(const BigInt& c);

  friend DimPoly operator+(DimPoly a, const DimPoly& b) { return a += b; }
  friend DimPoly operator-(DimPoly a, const DimPoly& b) { return a -= b; }
  friend DimPoly operator*(DimPoly a, const BigInt& c) { return a *= c; }
  friend DimPoly operator*(const DimPoly& a, const DimPoly& b);
  friend bool operator==(const DimPoly&, const DimPoly&) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// "n^2 - 3n + 1"
std::string to_string(const DimPoly& p);

}  // namespace wreath
