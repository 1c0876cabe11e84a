#include "z2index/wreath.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>

namespace z2index {

namespace {

void canonicalize_mod2(std::vector<WreathBasisElement>& v) {
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
  v.erase(v.begin() + static_cast<std::ptrdiff_t>(out), v.end());
}

}  // namespace

WreathBasisElement WreathBasisElement::sqc(const Monomial& x, int j) {
  if (j < 0 || j > 0xffff)
    throw StructuralError("c exponent out of range");
  WreathBasisElement e;
  e.kind_ = Kind::SqC;
  e.first_ = x;
  e.c_exp_ = static_cast<std::uint16_t>(j);
  return e;
}

WreathBasisElement WreathBasisElement::od(const Monomial& x, const Monomial& y) {
  if (x.generators() != y.generators())
    throw StructuralError("Od pair over different generator counts");
  if (!(x < y))
    throw StructuralError("Od pair must be strictly increasing: " + x.to_string() + ", " +
                          y.to_string());
  WreathBasisElement e;
  e.kind_ = Kind::Od;
  e.first_ = x;
  e.second_ = y;
  return e;
}

std::optional<WreathBasisElement> WreathBasisElement::od_canonical(const Monomial& u,
                                                                   const Monomial& v) {
  if (u == v)
    return std::nullopt;
  return u < v ? od(u, v) : od(v, u);
}

int WreathBasisElement::degree() const {
  return is_sqc() ? 2 * first_.degree() + c_exp_ : first_.degree() + second_.degree();
}

std::size_t WreathBasisElement::hash() const {
  std::size_t h = first_.hash();
  h = h * 31 + (is_od() ? second_.hash() : c_exp_);
  return h * 2 + static_cast<std::size_t>(kind_);
}

std::string WreathBasisElement::to_string() const {
  if (is_od())
    return "Od[" + first_.to_string() + ", " + second_.to_string() + "]";
  std::string c;
  if (c_exp_ == 1)
    c = "c";
  else if (c_exp_ > 1)
    c = "c^" + std::to_string(c_exp_);
  if (first_.is_unit())
    return c.empty() ? "1" : c;
  std::string s = "Sq[" + first_.to_string() + "]";
  return c.empty() ? s : s + "*" + c;
}

std::strong_ordering operator<=>(const WreathBasisElement& a, const WreathBasisElement& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0)
    return c;
  if (auto c = a.kind_ <=> b.kind_; c != 0)
    return c;
  if (auto c = a.first_ <=> b.first_; c != 0)
    return c;
  if (auto c = a.second_ <=> b.second_; c != 0)
    return c;
  return a.c_exp_ <=> b.c_exp_;
}

WreathClass::WreathClass(std::vector<WreathBasisElement> terms) : terms_(std::move(terms)) {
  canonicalize_mod2(terms_);
}

bool WreathClass::contains(const WreathBasisElement& e) const {
  return std::binary_search(terms_.begin(), terms_.end(), e);
}

bool WreathClass::is_homogeneous() const {
  return terms_.empty() || terms_.front().degree() == terms_.back().degree();
}

WreathClass WreathClass::homogeneous_part(int degree) const {
  WreathClass r;
  for (const auto& e : terms_)
    if (e.degree() == degree)
      r.terms_.push_back(e);
  return r;
}

int WreathClass::max_degree() const {
  return terms_.empty() ? -1 : terms_.back().degree();
}

std::string WreathClass::to_string() const {
  if (terms_.empty())
    return "0";
  std::string s;
  for (const auto& e : terms_) {
    if (!s.empty())
      s += " + ";
    s += e.to_string();
  }
  return s;
}

WreathClass& WreathClass::operator+=(const WreathClass& other) {
  std::vector<WreathBasisElement> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(),
                                other.terms_.end(), std::back_inserter(merged));
  terms_ = std::move(merged);
  return *this;
}

WreathClass c_power(int n, int j) {
  return WreathClass(WreathBasisElement::sqc(Monomial::unit(n), j));
}

WreathClass sqe(const PolyZ2& p) {
  const auto& xs = p.terms();
  std::vector<WreathBasisElement> out;
  out.reserve(xs.size() * (xs.size() + 1) / 2);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out.push_back(WreathBasisElement::sqc(xs[i], 0));
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      out.push_back(WreathBasisElement::od(xs[i], xs[j]));
  }
  return WreathClass(std::move(out));
}

WreathClass odot(const PolyZ2& p, const PolyZ2& q) {
  std::vector<WreathBasisElement> out;
  for (const auto& x : p.terms())
    for (const auto& y : q.terms())
      if (auto e = WreathBasisElement::od_canonical(x, y))
        out.push_back(*e);
  return WreathClass(std::move(out));
}

void multiply_basis(const WreathBasisElement& a, const WreathBasisElement& b,
                    const std::function<void(const WreathBasisElement&)>& emit) {
  if (a.is_sqc() && b.is_sqc()) {
    emit(WreathBasisElement::sqc(a.first() * b.first(), a.c_exponent() + b.c_exponent()));
    return;
  }
  if (a.is_od() && b.is_od()) {
    // (x.y)(z.t) = (xz).(yt) + (xt).(yz)
    if (auto e = WreathBasisElement::od_canonical(a.first() * b.first(), a.second() * b.second()))
      emit(*e);
    if (auto e = WreathBasisElement::od_canonical(a.first() * b.second(), a.second() * b.first()))
      emit(*e);
    return;
  }
  const auto& sq = a.is_sqc() ? a : b;
  const auto& pair = a.is_sqc() ? b : a;
  // Pairings are annihilated by c.
  if (sq.c_exponent() > 0)
    return;
  if (auto e = WreathBasisElement::od_canonical(sq.first() * pair.first(),
                                                sq.first() * pair.second()))
    emit(*e);
}

WreathClass mul(const WreathClass& a, const WreathClass& b, int cap) {
  std::vector<WreathBasisElement> out;
  for (const auto& x : a.terms()) {
    for (const auto& y : b.terms()) {
      if (x.degree() + y.degree() > cap)
        continue;
      multiply_basis(x, y, [&](const WreathBasisElement& e) { out.push_back(e); });
    }
  }
  return WreathClass(std::move(out));
}

WreathBasis::WreathBasis(int n, int degree) : n_(n), degree_(degree) {
  if (degree < 0)
    return;
  for (int a = 0; 2 * a <= degree; ++a)
    for (const auto& x : *monomial_basis(n, a))
      elements_.push_back(WreathBasisElement::sqc(x, degree - 2 * a));
  for (int a = 0; 2 * a <= degree; ++a) {
    const auto& lows = *monomial_basis(n, a);
    const auto& highs = *monomial_basis(n, degree - a);
    for (const auto& x : lows)
      for (const auto& y : highs)
        if (x < y)
          elements_.push_back(WreathBasisElement::od(x, y));
  }
  std::sort(elements_.begin(), elements_.end());
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i)
    index_.emplace(elements_[i], static_cast<std::uint32_t>(i));
}

std::optional<std::size_t> WreathBasis::index_of(const WreathBasisElement& e) const {
  auto it = index_.find(e);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

namespace {

template <class Value, class Make>
std::shared_ptr<const Value> memoized(std::map<std::pair<int, int>, std::shared_ptr<const Value>>& cache,
                                      std::shared_mutex& mutex, int n, int d, Make make) {
  const auto key = std::make_pair(n, d);
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(key); it != cache.end())
      return it->second;
  }
  auto value = std::make_shared<const Value>(make());
  std::unique_lock lock(mutex);
  auto [it, inserted] = cache.emplace(key, std::move(value));
  return it->second;
}

}  // namespace

std::shared_ptr<const std::vector<Monomial>> monomial_basis(int n, int d) {
  static std::map<std::pair<int, int>, std::shared_ptr<const std::vector<Monomial>>> cache;
  static std::shared_mutex mutex;
  return memoized(cache, mutex, n, d, [&] { return enumerate_monomials(n, d); });
}

std::shared_ptr<const WreathBasis> wreath_basis(int n, int d) {
  static std::map<std::pair<int, int>, std::shared_ptr<const WreathBasis>> cache;
  static std::shared_mutex mutex;
  return memoized(cache, mutex, n, d, [&] { return WreathBasis(n, d); });
}

}  // namespace z2index
