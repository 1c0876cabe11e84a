#include "z2index/monomial.hpp"

#include <algorithm>
#include <functional>

namespace z2index {

namespace {

void check_generator_count(int n) {
  if (n < 0 || n > kMaxGenerators)
    throw StructuralError("generator count " + std::to_string(n) + " outside [0, " +
                          std::to_string(kMaxGenerators) + "]");
}

// Sorts, then drops pairs of equal monomials.
template <class T>
void canonicalize_mod2(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  std::size_t out = 0;
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i])
      ++j;
    if ((j - i) % 2 == 1)
      v[out++] = v[i];
    i = j;
  }
  v.resize(out);
}

}  // namespace

Monomial Monomial::unit(int n) {
  check_generator_count(n);
  Monomial m;
  m.n_ = static_cast<std::uint8_t>(n);
  return m;
}

Monomial Monomial::generator(int n, int i) {
  Monomial m = unit(n);
  if (i < 0 || i > n)
    throw StructuralError("generator w" + std::to_string(i) + " does not exist for n = " +
                          std::to_string(n));
  if (i > 0) {
    m.exp_[static_cast<std::size_t>(i - 1)] = 1;
    m.degree_ = static_cast<std::uint16_t>(i);
  }
  return m;
}

Monomial Monomial::from_exponents(std::span<const int> exponents) {
  Monomial m = unit(static_cast<int>(exponents.size()));
  int degree = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0 || exponents[i] > 255)
      throw StructuralError("exponent out of range");
    m.exp_[i] = static_cast<Exponent>(exponents[i]);
    degree += static_cast<int>(i + 1) * exponents[i];
  }
  if (degree > 0xffff)
    throw StructuralError("monomial degree overflow");
  m.degree_ = static_cast<std::uint16_t>(degree);
  return m;
}

std::size_t Monomial::hash() const {
  std::size_t h = n_;
  for (int i = 0; i < n_; ++i)
    h = h * 1099511628211ULL ^ exp_[static_cast<std::size_t>(i)];
  return h;
}

std::string Monomial::to_string() const {
  if (is_unit())
    return "1";
  std::string s;
  for (int i = 1; i <= n_; ++i) {
    int e = exponent(i);
    if (e == 0)
      continue;
    if (!s.empty())
      s += '*';
    s += 'w' + std::to_string(i);
    if (e > 1)
      s += '^' + std::to_string(e);
  }
  return s;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0)
    return c;
  for (std::size_t i = 0; i < a.exp_.size(); ++i) {
    if (a.exp_[i] != b.exp_[i])
      return a.exp_[i] > b.exp_[i] ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.n_ <=> b.n_;
}

Monomial operator*(const Monomial& x, const Monomial& y) {
  if (x.n_ != y.n_)
    throw StructuralError("monomials over different generator counts (" + std::to_string(x.n_) +
                          " vs " + std::to_string(y.n_) + ")");
  Monomial r = x;
  for (int i = 0; i < x.n_; ++i) {
    auto k = static_cast<std::size_t>(i);
    int e = x.exp_[k] + y.exp_[k];
    if (e > 255)
      throw StructuralError("exponent overflow in monomial product");
    r.exp_[k] = static_cast<Monomial::Exponent>(e);
  }
  int degree = x.degree_ + y.degree_;
  if (degree > 0xffff)
    throw StructuralError("monomial degree overflow");
  r.degree_ = static_cast<std::uint16_t>(degree);
  return r;
}

PolyZ2::PolyZ2(int n, std::vector<Monomial> terms) : n_(n), terms_(std::move(terms)) {
  for (const auto& m : terms_)
    if (m.generators() != n_)
      throw StructuralError("polynomial term over a different generator count");
  canonicalize_mod2(terms_);
}

bool PolyZ2::contains(const Monomial& m) const {
  return std::binary_search(terms_.begin(), terms_.end(), m);
}

bool PolyZ2::is_homogeneous() const {
  return terms_.empty() || terms_.front().degree() == terms_.back().degree();
}

PolyZ2 PolyZ2::homogeneous_part(int degree) const {
  PolyZ2 r(n_);
  for (const auto& m : terms_)
    if (m.degree() == degree)
      r.terms_.push_back(m);
  return r;
}

int PolyZ2::max_degree() const {
  return terms_.empty() ? -1 : terms_.back().degree();
}

std::string PolyZ2::to_string() const {
  if (terms_.empty())
    return "0";
  std::string s;
  for (const auto& m : terms_) {
    if (!s.empty())
      s += " + ";
    s += m.to_string();
  }
  return s;
}

PolyZ2& PolyZ2::operator+=(const PolyZ2& other) {
  if (other.is_zero())
    return *this;
  if (is_zero())
    n_ = other.n_;
  else if (n_ != other.n_)
    throw StructuralError("polynomials over different generator counts");
  std::vector<Monomial> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(),
                                other.terms_.end(), std::back_inserter(merged));
  terms_ = std::move(merged);
  return *this;
}

PolyZ2 operator*(const PolyZ2& p, const PolyZ2& q) {
  if (p.is_zero() || q.is_zero())
    return PolyZ2(p.n_);
  if (p.n_ != q.n_)
    throw StructuralError("polynomials over different generator counts");
  std::vector<Monomial> products;
  products.reserve(p.terms_.size() * q.terms_.size());
  for (const auto& x : p.terms_)
    for (const auto& y : q.terms_)
      products.push_back(x * y);
  return PolyZ2(p.n_, std::move(products));
}

std::vector<Monomial> enumerate_monomials(int n, int d) {
  check_generator_count(n);
  std::vector<Monomial> out;
  if (d < 0)
    return out;
  std::vector<int> exps(static_cast<std::size_t>(n), 0);
  // Fill the highest generator first so every exponent vector is produced once.
  std::function<void(int, int)> fill = [&](int i, int remaining) {
    if (i == 0) {
      if (remaining == 0)
        out.push_back(Monomial::from_exponents(exps));
      return;
    }
    for (int e = remaining / i; e >= 0; --e) {
      exps[static_cast<std::size_t>(i - 1)] = e;
      fill(i - 1, remaining - e * i);
    }
    exps[static_cast<std::size_t>(i - 1)] = 0;
  };
  if (n == 0) {
    if (d == 0)
      out.push_back(Monomial::unit(0));
    return out;
  }
  fill(n, d);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace z2index
