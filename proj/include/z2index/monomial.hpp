#pragma once

// Graded polynomial algebra Z2[w1, ..., wn] with deg wi = i.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace z2index {

/// Raised when operands live over different generator counts or exceed
/// the fixed exponent storage.
class StructuralError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kMaxGenerators = 32;

/// A monomial w1^e1 * ... * wn^en. The unit monomial has all exponents zero.
///
/// Ordered graded-lexicographically: lower degree first, then within a degree
/// the monomial with the larger power of the lowest-index generator comes
/// first (so w1^3 < w1*w2).
class Monomial {
public:
  using Exponent = std::uint8_t;

  Monomial() = default;

  static Monomial unit(int n);
  /// w_i; generator(n, 0) is the unit (w0 = 1).
  static Monomial generator(int n, int i);
  static Monomial from_exponents(std::span<const int> exponents);
  static Monomial from_exponents(std::initializer_list<int> exponents) {
    return from_exponents(std::span<const int>(exponents.begin(), exponents.size()));
  }

  int generators() const { return n_; }
  /// Exponent of w_i, 1-based.
  int exponent(int i) const { return exp_[static_cast<std::size_t>(i - 1)]; }
  int degree() const { return degree_; }
  bool is_unit() const { return degree_ == 0; }
  /// True when w_i divides this monomial.
  bool involves(int i) const { return i >= 1 && i <= n_ && exponent(i) > 0; }

  std::size_t hash() const;

  /// "w1^2*w3"; the unit renders as "1".
  std::string to_string() const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.n_ == b.n_ && a.exp_ == b.exp_;
  }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

  friend Monomial operator*(const Monomial& x, const Monomial& y);

private:
  std::array<Exponent, kMaxGenerators> exp_{};
  std::uint8_t n_ = 0;
  std::uint16_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Mod-2 polynomial: a set of distinct monomials.
class PolyZ2 {
public:
  explicit PolyZ2(int n = 0) : n_(n) {}
  PolyZ2(const Monomial& m) : n_(m.generators()), terms_{m} {}
  /// Builds the canonical form; repeated monomials cancel in pairs.
  PolyZ2(int n, std::vector<Monomial> terms);

  int generators() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Monomial>& terms() const { return terms_; }
  bool contains(const Monomial& m) const;
  bool is_homogeneous() const;
  PolyZ2 homogeneous_part(int degree) const;
  int max_degree() const;

  std::string to_string() const;

  PolyZ2& operator+=(const PolyZ2& other);
  friend PolyZ2 operator+(PolyZ2 a, const PolyZ2& b) { return a += b; }
  friend PolyZ2 operator*(const PolyZ2& p, const PolyZ2& q);
  friend bool operator==(const PolyZ2& a, const PolyZ2& b) { return a.terms_ == b.terms_; }

private:
  int n_;
  std::vector<Monomial> terms_;  // strictly increasing
};

/// All monomials in w1..wn of weighted degree d, in canonical order.
std::vector<Monomial> enumerate_monomials(int n, int d);

/// C(a, b) mod 2 by the Lucas criterion; zero when b > a.
constexpr bool binom_mod2(std::uint64_t a, std::uint64_t b) {
  return b <= a && (b & ~a) == 0;
}

}  // namespace z2index
