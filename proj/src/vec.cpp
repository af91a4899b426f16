#include "polynorm/vec.hpp"

#include <sstream>

#include "polynorm/errors.hpp"

namespace polynorm {

namespace {
void require_same_dim(const Vec& a, const Vec& b) {
  if (a.dim() != b.dim())
    throw InputError("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                     std::to_string(b.dim()));
}
}  // namespace

bool Vec::is_zero() const {
  for (const auto& x : coords_)
    if (x != 0) return false;
  return true;
}

bool operator<(const Vec& a, const Vec& b) {
  require_same_dim(a, b);
  for (int i = 0; i < a.dim(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

Vec Vec::operator-() const {
  Vec r(dim());
  for (int i = 0; i < dim(); ++i) r[i] = -coords_[static_cast<size_t>(i)];
  return r;
}

Vec Vec::operator+(const Vec& other) const {
  require_same_dim(*this, other);
  Vec r(dim());
  for (int i = 0; i < dim(); ++i) r[i] = (*this)[i] + other[i];
  return r;
}

Vec Vec::operator-(const Vec& other) const {
  require_same_dim(*this, other);
  Vec r(dim());
  for (int i = 0; i < dim(); ++i) r[i] = (*this)[i] - other[i];
  return r;
}

Vec Vec::operator*(const Rational& s) const {
  Vec r(dim());
  for (int i = 0; i < dim(); ++i) r[i] = (*this)[i] * s;
  return r;
}

Rational dot(const Vec& a, const Vec& b) {
  require_same_dim(a, b);
  Rational acc = 0;
  for (int i = 0; i < a.dim(); ++i) acc += a[i] * b[i];
  return acc;
}

std::string Vec::str() const {
  std::ostringstream out;
  out << '(';
  for (int i = 0; i < dim(); ++i) {
    if (i) out << ", ";
    out << to_string((*this)[i]);
  }
  out << ')';
  return out.str();
}

}  // namespace polynorm
