#pragma once

// Points of the lattice N and of its dual M, with exact rational coordinates.
// The side is a compile-time tag, so an N-side point cannot be passed where an
// M-side point is expected; pairing() takes one of each.

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "toric/errors.hpp"
#include "toric/numeric.hpp"

namespace toric {

enum class Side { N, M };

template <Side S>
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::vector<Rat> coords) : c_(std::move(coords)) {}
  Vec(std::initializer_list<Rat> coords) : c_(coords) {}

  static Vec zero(size_t dim) { return Vec(std::vector<Rat>(dim, Rat(0))); }

  size_t dim() const { return c_.size(); }
  const Rat& operator[](size_t i) const { return c_[i]; }
  Rat& operator[](size_t i) { return c_[i]; }
  const std::vector<Rat>& coords() const { return c_; }

  bool is_zero() const {
    for (const Rat& x : c_)
      if (x != 0) return false;
    return true;
  }

  bool is_integral() const {
    for (const Rat& x : c_)
      if (denominator_of(x) != 1) return false;
    return true;
  }

  friend Vec operator+(const Vec& a, const Vec& b) {
    check_dims(a, b);
    std::vector<Rat> r(a.dim());
    for (size_t i = 0; i < a.dim(); ++i) r[i] = a[i] + b[i];
    return Vec(std::move(r));
  }
  friend Vec operator-(const Vec& a, const Vec& b) {
    check_dims(a, b);
    std::vector<Rat> r(a.dim());
    for (size_t i = 0; i < a.dim(); ++i) r[i] = a[i] - b[i];
    return Vec(std::move(r));
  }
  friend Vec operator-(const Vec& a) {
    std::vector<Rat> r(a.dim());
    for (size_t i = 0; i < a.dim(); ++i) r[i] = -a[i];
    return Vec(std::move(r));
  }
  friend Vec operator*(const Rat& s, const Vec& a) {
    std::vector<Rat> r(a.dim());
    for (size_t i = 0; i < a.dim(); ++i) r[i] = s * a[i];
    return Vec(std::move(r));
  }

  friend bool operator==(const Vec& a, const Vec& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }
  // Lexicographic; gives every container of points a canonical order.
  friend bool operator<(const Vec& a, const Vec& b) {
    check_dims(a, b);
    for (size_t i = 0; i < a.dim(); ++i) {
      if (a[i] < b[i]) return true;
      if (b[i] < a[i]) return false;
    }
    return false;
  }

  friend std::ostream& operator<<(std::ostream& os, const Vec& v) {
    os << "(";
    for (size_t i = 0; i < v.dim(); ++i) {
      if (i) os << ",";
      os << rat_to_string(v[i]);
    }
    return os << ")";
  }

 private:
  static void check_dims(const Vec& a, const Vec& b) {
    if (a.dim() != b.dim()) throw ValidationError("dimension mismatch");
  }

  std::vector<Rat> c_;
};

using NVec = Vec<Side::N>;
using MVec = Vec<Side::M>;

// The canonical pairing N x M -> Q, extended bilinearly.
inline Rat pairing(const NVec& p, const MVec& m) {
  if (p.dim() != m.dim()) throw ValidationError("pairing: dimension mismatch");
  Rat s(0);
  for (size_t i = 0; i < p.dim(); ++i) s += p[i] * m[i];
  return s;
}

// Positive scaling of v to the primitive lattice point on the same ray.
template <Side S>
Vec<S> primitivize(const Vec<S>& v) {
  if (v.is_zero()) throw ValidationError("primitivize: zero vector");
  Int lcm_den(1), gcd_num(0);
  for (const Rat& x : v.coords()) lcm_den = lcm(lcm_den, denominator_of(x));
  std::vector<Rat> r(v.dim());
  for (size_t i = 0; i < v.dim(); ++i) {
    r[i] = v[i] * lcm_den;  // integral now
    gcd_num = gcd(gcd_num, numerator_of(r[i]));
  }
  for (Rat& x : r) x /= gcd_num;
  return Vec<S>(std::move(r));
}

// Unique coefficients a with u = sum a_i * generators[i]. The generators must
// be linearly independent and u must lie in their span.
std::vector<Rat> simplicial_coordinates(const NVec& u, const std::vector<NVec>& generators);

// |det| of a full set of n independent generators; 1 exactly when they form a
// basis of the lattice.
Int cone_multiplicity(const std::vector<NVec>& generators);

}  // namespace toric
