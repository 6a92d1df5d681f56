#include "wreath/dim_poly.hpp"

#include <algorithm>

namespace wreath {

DimPoly::DimPoly(std::initializer_list<BigInt> coeffs) : coeffs_(coeffs) { trim(); }

DimPoly::DimPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

DimPoly DimPoly::constant(BigInt c) { return DimPoly({std::move(c)}); }

DimPoly DimPoly::linear(BigInt c) { return DimPoly({BigInt(0), std::move(c)}); }

BigInt DimPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

BigInt DimPoly::operator()(const BigInt& n) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * n + *it;
  return acc;
}

DimPoly& DimPoly::operator+=(const DimPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

DimPoly& DimPoly::operator-=(const DimPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

DimPoly& DimPoly::operator*=(const BigInt& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

DimPoly operator*(const DimPoly& a, const DimPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return DimPoly(std::move(out));
}

void DimPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string to_string(const DimPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (int i = p.degree(); i >= 0; --i) {
    const BigInt& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || i == 0) s += mag.str();
    if (i >= 1) s += "n";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

}  // namespace wreath
