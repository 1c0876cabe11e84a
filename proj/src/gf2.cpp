#include "z2index/gf2.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <istream>
#include <ostream>
#include <string>

namespace z2index::gf2 {

namespace {

constexpr std::array<char, 4> kMagic{'G', 'F', '2', 'E'};
constexpr std::uint8_t kDumpVersion = 1;

void put_u64(std::ostream& out, std::uint64_t v) {
  std::array<char, 8> buf{};
  for (std::size_t i = 0; i < 8; ++i)
    buf[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(buf.data(), buf.size());
}

// False on clean end of stream before the first byte.
bool get_u64(std::istream& in, std::uint64_t& v) {
  std::array<unsigned char, 8> buf{};
  in.read(reinterpret_cast<char*>(buf.data()), buf.size());
  if (in.gcount() == 0)
    return false;
  if (in.gcount() != 8)
    throw StructuralError("truncated echelon dump");
  v = 0;
  for (std::size_t i = 0; i < 8; ++i)
    v |= static_cast<std::uint64_t>(buf[i]) << (8 * i);
  return true;
}

}  // namespace

SparseRow::SparseRow(std::vector<Column> columns) : support_(std::move(columns)) {
  std::sort(support_.begin(), support_.end());
  std::size_t out = 0;
  for (std::size_t i = 0; i < support_.size();) {
    std::size_t j = i;
    while (j < support_.size() && support_[j] == support_[i])
      ++j;
    if ((j - i) % 2 == 1)
      support_[out++] = support_[i];
    i = j;
  }
  support_.resize(out);
}

SparseRow SparseRow::from_sorted(std::vector<Column> columns) {
  SparseRow r;
  r.support_ = std::move(columns);
  return r;
}

bool SparseRow::test(Column c) const {
  return std::binary_search(support_.begin(), support_.end(), c);
}

bool SparseRow::dot(const SparseRow& other) const {
  bool parity = false;
  auto a = support_.begin();
  auto b = other.support_.begin();
  while (a != support_.end() && b != other.support_.end()) {
    if (*a < *b)
      ++a;
    else if (*b < *a)
      ++b;
    else {
      parity = !parity;
      ++a;
      ++b;
    }
  }
  return parity;
}

SparseRow& SparseRow::operator+=(const SparseRow& other) {
  std::vector<Column> merged;
  merged.reserve(support_.size() + other.support_.size());
  std::set_symmetric_difference(support_.begin(), support_.end(), other.support_.begin(),
                                other.support_.end(), std::back_inserter(merged));
  support_ = std::move(merged);
  return *this;
}

EchelonState::EchelonState(std::size_t dimension, double dense_fill)
    : dimension_(dimension),
      words_((dimension + 63) / 64),
      dense_fill_(dense_fill),
      pivot_slot_(dimension, kNoPivot) {
  if (dimension >= kNoPivot)
    throw StructuralError("echelon dimension too large");
}

std::size_t EchelonState::dense_rows() const {
  return static_cast<std::size_t>(
      std::count_if(rows_.begin(), rows_.end(), [](const StoredRow& r) { return r.dense; }));
}

void EchelonState::check_columns(std::span<const Column> cols) const {
  for (Column c : cols)
    if (c >= dimension_)
      throw StructuralError("column " + std::to_string(c) + " outside dimension " +
                            std::to_string(dimension_));
}

void EchelonState::xor_into(const StoredRow& row, std::vector<std::uint64_t>& acc) const {
  if (row.dense) {
    for (std::size_t w = 0; w < row.bits.size(); ++w)
      acc[row.word_offset + w] ^= row.bits[w];
  } else {
    for (Column c : row.sparse)
      acc[c >> 6] ^= std::uint64_t{1} << (c & 63);
  }
}

void EchelonState::reduce(std::vector<std::uint64_t>& acc, std::size_t start_word) const {
  // A stored row only touches columns >= its pivot, so one ascending sweep suffices.
  for (std::size_t w = start_word; w < words_; ++w) {
    unsigned bit = 0;
    while (bit < 64) {
      std::uint64_t rest = acc[w] >> bit;
      if (rest == 0)
        break;
      bit += static_cast<unsigned>(std::countr_zero(rest));
      const auto col = static_cast<Column>(w * 64 + bit);
      if (auto slot = pivot_slot_[col]; slot != kNoPivot)
        xor_into(rows_[slot], acc);
      ++bit;
    }
  }
}

void EchelonState::install(std::vector<std::uint64_t>& acc, std::size_t start_word) {
  std::size_t first = start_word;
  while (first < words_ && acc[first] == 0)
    ++first;
  std::size_t count = 0;
  for (std::size_t w = first; w < words_; ++w)
    count += static_cast<std::size_t>(std::popcount(acc[w]));

  StoredRow row;
  row.pivot = static_cast<Column>(first * 64 + static_cast<unsigned>(std::countr_zero(acc[first])));
  if (static_cast<double>(count) > dense_fill_ * static_cast<double>(dimension_)) {
    row.dense = true;
    row.word_offset = first;
    row.bits.assign(acc.begin() + static_cast<std::ptrdiff_t>(first), acc.end());
  } else {
    row.sparse.reserve(count);
    for (std::size_t w = first; w < words_; ++w) {
      for (std::uint64_t bits = acc[w]; bits != 0; bits &= bits - 1)
        row.sparse.push_back(static_cast<Column>(w * 64 + static_cast<unsigned>(std::countr_zero(bits))));
    }
  }
  pivot_slot_[row.pivot] = static_cast<std::uint32_t>(rows_.size());
  rows_.push_back(std::move(row));
}

bool EchelonState::insert(const SparseRow& row) {
  check_columns(row.support());
  ++insertions_;
  if (row.empty())
    return false;
  std::vector<std::uint64_t> acc(words_, 0);
  for (Column c : row.support())
    acc[c >> 6] ^= std::uint64_t{1} << (c & 63);
  const std::size_t start = row.leading() >> 6;
  reduce(acc, start);
  if (std::all_of(acc.begin() + static_cast<std::ptrdiff_t>(start), acc.end(),
                  [](std::uint64_t w) { return w == 0; }))
    return false;
  install(acc, start);
  return true;
}

MembershipResult EchelonState::membership(const SparseRow& v, bool want_certificate) const {
  check_columns(v.support());
  if (v.empty())
    return {true, std::nullopt};
  std::vector<std::uint64_t> acc(words_, 0);
  for (Column c : v.support())
    acc[c >> 6] ^= std::uint64_t{1} << (c & 63);
  const std::size_t start = v.leading() >> 6;
  reduce(acc, start);
  for (std::size_t w = start; w < words_; ++w) {
    if (acc[w] != 0) {
      MembershipResult r;
      if (want_certificate)
        r.certificate = certificate_for(
            static_cast<Column>(w * 64 + static_cast<unsigned>(std::countr_zero(acc[w]))));
      return r;
    }
  }
  return {true, std::nullopt};
}

SparseRow EchelonState::certificate_for(Column free_column) const {
  // Functional phi with phi(free) = 1, phi = 0 on the other non-pivot columns,
  // and phi(pivot p) chosen so phi(row_p) = 0. Rows only reach rightwards of
  // their pivot, so resolving pivots right to left is well-defined.
  std::vector<std::uint64_t> phi(words_, 0);
  phi[free_column >> 6] |= std::uint64_t{1} << (free_column & 63);
  auto order = pivots();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const StoredRow& row = rows_[pivot_slot_[*it]];
    bool parity = false;
    if (row.dense) {
      std::uint64_t acc = 0;
      for (std::size_t w = 0; w < row.bits.size(); ++w)
        acc ^= row.bits[w] & phi[row.word_offset + w];
      parity = std::popcount(acc) % 2 == 1;
    } else {
      for (Column c : row.sparse)
        parity ^= ((phi[c >> 6] >> (c & 63)) & 1) != 0;
    }
    // phi(pivot) is still 0 here, so parity is the sum over the other columns.
    if (parity)
      phi[*it >> 6] |= std::uint64_t{1} << (*it & 63);
  }
  std::vector<Column> support;
  for (std::size_t w = 0; w < words_; ++w)
    for (std::uint64_t bits = phi[w]; bits != 0; bits &= bits - 1)
      support.push_back(static_cast<Column>(w * 64 + static_cast<unsigned>(std::countr_zero(bits))));
  return SparseRow::from_sorted(std::move(support));
}

SparseRow EchelonState::pivot_row(Column c) const {
  if (!has_pivot(c))
    throw StructuralError("no pivot at column " + std::to_string(c));
  const StoredRow& row = rows_[pivot_slot_[c]];
  if (!row.dense)
    return SparseRow::from_sorted(row.sparse);
  std::vector<Column> support;
  for (std::size_t w = 0; w < row.bits.size(); ++w)
    for (std::uint64_t bits = row.bits[w]; bits != 0; bits &= bits - 1)
      support.push_back(static_cast<Column>((row.word_offset + w) * 64 +
                                            static_cast<unsigned>(std::countr_zero(bits))));
  return SparseRow::from_sorted(std::move(support));
}

std::vector<Column> EchelonState::pivots() const {
  std::vector<Column> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_)
    out.push_back(r.pivot);
  std::sort(out.begin(), out.end());
  return out;
}

void EchelonState::write(std::ostream& out) const {
  out.write(kMagic.data(), kMagic.size());
  out.put(static_cast<char>(kDumpVersion));
  put_u64(out, dimension_);
  for (Column p : pivots()) {
    const SparseRow row = pivot_row(p);
    put_u64(out, p);
    put_u64(out, row.size());
    for (Column c : row.support())
      put_u64(out, c);
  }
}

EchelonState EchelonState::read(std::istream& in) {
  std::array<char, 4> magic{};
  in.read(magic.data(), magic.size());
  if (in.gcount() != 4 || magic != kMagic)
    throw StructuralError("not an echelon dump (bad magic)");
  const int version = in.get();
  if (version != kDumpVersion)
    throw StructuralError("unsupported echelon dump version " + std::to_string(version));
  std::uint64_t dimension = 0;
  if (!get_u64(in, dimension))
    throw StructuralError("truncated echelon dump");
  EchelonState state(dimension);
  std::uint64_t pivot = 0;
  while (get_u64(in, pivot)) {
    std::uint64_t count = 0;
    if (!get_u64(in, count) || count == 0 || count > dimension)
      throw StructuralError("corrupt echelon dump row header");
    std::vector<Column> cols(count);
    for (auto& c : cols) {
      std::uint64_t v = 0;
      if (!get_u64(in, v) || v >= dimension)
        throw StructuralError("corrupt echelon dump row");
      c = static_cast<Column>(v);
    }
    if (!std::is_sorted(cols.begin(), cols.end()) ||
        std::adjacent_find(cols.begin(), cols.end()) != cols.end() || cols.front() != pivot ||
        state.has_pivot(static_cast<Column>(pivot)))
      throw StructuralError("corrupt echelon dump row");
    StoredRow row;
    row.pivot = static_cast<Column>(pivot);
    row.sparse = std::move(cols);
    state.pivot_slot_[row.pivot] = static_cast<std::uint32_t>(state.rows_.size());
    state.rows_.push_back(std::move(row));
  }
  state.insertions_ = state.rows_.size();
  return state;
}

}  // namespace z2index::gf2
