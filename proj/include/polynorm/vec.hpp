#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "polynorm/rational.hpp"

namespace polynorm {

/// Fixed-length vector of exact rationals. Length is set at construction;
/// mixing dimensions in arithmetic throws InputError.
class Vec {
 public:
  Vec() = default;
  explicit Vec(int dim) : coords_(static_cast<size_t>(dim)) {}
  Vec(std::initializer_list<Rational> xs) : coords_(xs) {}
  explicit Vec(std::vector<Rational> xs) : coords_(std::move(xs)) {}

  int dim() const { return static_cast<int>(coords_.size()); }
  const Rational& operator[](int i) const { return coords_[static_cast<size_t>(i)]; }
  Rational& operator[](int i) { return coords_[static_cast<size_t>(i)]; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;

  friend bool operator==(const Vec& a, const Vec& b) { return a.coords_ == b.coords_; }
  friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }
  /// Lexicographic order on exact coordinates; the canonical vertex order.
  friend bool operator<(const Vec& a, const Vec& b);

  Vec operator-() const;
  Vec operator+(const Vec& other) const;
  Vec operator-(const Vec& other) const;
  Vec operator*(const Rational& s) const;

  std::string str() const;

 private:
  std::vector<Rational> coords_;
};

Rational dot(const Vec& a, const Vec& b);

}  // namespace polynorm
