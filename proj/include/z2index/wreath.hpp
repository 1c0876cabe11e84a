#pragma once

// Mod-2 cohomology of the classifying space of O(n) wr Z2, presented by
// external squares Sq[x]*c^j and symmetric pairings Od[x, y] of monomials
// in the Stiefel-Whitney classes.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "z2index/monomial.hpp"

namespace z2index {

class WreathBasisElement {
public:
  enum class Kind : std::uint8_t { SqC = 0, Od = 1 };

  /// Sq[x]*c^j. SqC(1, j) is c^j and SqC(1, 0) is the unit.
  static WreathBasisElement sqc(const Monomial& x, int j);
  /// x (.) y with x < y; throws StructuralError otherwise.
  static WreathBasisElement od(const Monomial& x, const Monomial& y);
  /// Sorts the pair; nullopt when u == v (u (.) u vanishes).
  static std::optional<WreathBasisElement> od_canonical(const Monomial& u, const Monomial& v);

  Kind kind() const { return kind_; }
  bool is_sqc() const { return kind_ == Kind::SqC; }
  bool is_od() const { return kind_ == Kind::Od; }
  const Monomial& first() const { return first_; }
  /// Second monomial of an Od pair.
  const Monomial& second() const { return second_; }
  int c_exponent() const { return c_exp_; }
  int generators() const { return first_.generators(); }
  int degree() const;

  std::size_t hash() const;
  std::string to_string() const;

  friend bool operator==(const WreathBasisElement&, const WreathBasisElement&) = default;
  /// Degree first, then SqC before Od, then by monomials.
  friend std::strong_ordering operator<=>(const WreathBasisElement& a, const WreathBasisElement& b);

private:
  WreathBasisElement() = default;

  Monomial first_;
  Monomial second_;
  std::uint16_t c_exp_ = 0;
  Kind kind_ = Kind::SqC;
};

struct WreathBasisElementHash {
  std::size_t operator()(const WreathBasisElement& e) const { return e.hash(); }
};

/// Mod-2 combination of basis elements.
class WreathClass {
public:
  WreathClass() = default;
  WreathClass(const WreathBasisElement& e) : terms_{e} {}
  /// Canonicalizes; repeated elements cancel in pairs.
  explicit WreathClass(std::vector<WreathBasisElement> terms);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<WreathBasisElement>& terms() const { return terms_; }
  bool contains(const WreathBasisElement& e) const;
  bool is_homogeneous() const;
  WreathClass homogeneous_part(int degree) const;
  int max_degree() const;

  /// "c^2 + Sq[w1] + Od[1, w2]"; zero renders as "0".
  std::string to_string() const;

  WreathClass& operator+=(const WreathClass& other);
  friend WreathClass operator+(WreathClass a, const WreathClass& b) { return a += b; }
  friend bool operator==(const WreathClass&, const WreathClass&) = default;

private:
  std::vector<WreathBasisElement> terms_;  // strictly increasing
};

/// c^j as a class over n generators.
WreathClass c_power(int n, int j);

/// External square. Quadratic: Sq(p + q) = Sq p + Sq q + p (.) q.
WreathClass sqe(const PolyZ2& p);

/// Biadditive symmetric pairing with x (.) x = 0.
WreathClass odot(const PolyZ2& p, const PolyZ2& q);

/// Product of two basis elements; emits zero, one or two terms.
void multiply_basis(const WreathBasisElement& a, const WreathBasisElement& b,
                    const std::function<void(const WreathBasisElement&)>& emit);

/// Cup product, dropping every term of degree above cap.
WreathClass mul(const WreathClass& a, const WreathClass& b, int cap);

/// Linear basis of the degree-d component, in a fixed order, with reverse lookup.
class WreathBasis {
public:
  WreathBasis(int n, int degree);

  int generators() const { return n_; }
  int degree() const { return degree_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<WreathBasisElement>& elements() const { return elements_; }
  const WreathBasisElement& operator[](std::size_t i) const { return elements_[i]; }
  std::optional<std::size_t> index_of(const WreathBasisElement& e) const;

private:
  int n_;
  int degree_;
  std::vector<WreathBasisElement> elements_;
  std::unordered_map<WreathBasisElement, std::uint32_t, WreathBasisElementHash> index_;
};

/// Memoized; safe to call from concurrent threads.
std::shared_ptr<const WreathBasis> wreath_basis(int n, int d);

/// Memoized monomial basis of Z2[w1..wn] in degree d.
std::shared_ptr<const std::vector<Monomial>> monomial_basis(int n, int d);

}  // namespace z2index
