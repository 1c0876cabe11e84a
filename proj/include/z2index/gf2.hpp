#pragma once

// Streaming row echelon form over GF(2).

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "z2index/monomial.hpp"

namespace z2index::gf2 {

using Column = std::uint32_t;

/// Sorted set of column indices carrying a 1.
class SparseRow {
public:
  SparseRow() = default;
  /// Accepts any order; repeated columns cancel in pairs.
  explicit SparseRow(std::vector<Column> columns);
  static SparseRow unit(Column c) { return from_sorted({c}); }
  /// Caller guarantees strictly increasing input.
  static SparseRow from_sorted(std::vector<Column> columns);

  bool empty() const { return support_.empty(); }
  std::size_t size() const { return support_.size(); }
  Column leading() const { return support_.front(); }
  std::span<const Column> support() const { return support_; }
  bool test(Column c) const;
  /// Inner product over GF(2).
  bool dot(const SparseRow& other) const;

  SparseRow& operator+=(const SparseRow& other);
  friend SparseRow operator+(SparseRow a, const SparseRow& b) { return a += b; }
  friend bool operator==(const SparseRow&, const SparseRow&) = default;

private:
  std::vector<Column> support_;
};

struct MembershipResult {
  bool member = false;
  /// Only when !member: a covector vanishing on every stored row with
  /// value 1 on the queried vector.
  std::optional<SparseRow> certificate;
};

/// Rows kept in semi-echelon form: every stored row starts at its own pivot
/// column, holds no column pivoted at the time it was inserted, and pivots
/// are unique. Reduction clears pivot columns in ascending order, so any
/// remainder contains only non-pivot columns.
///
/// Single writer. Const members may be called concurrently.
class EchelonState {
public:
  /// Rows whose density exceeds dense_fill switch to packed bit storage.
  explicit EchelonState(std::size_t dimension, double dense_fill = 1.0 / 16.0);

  std::size_t dimension() const { return dimension_; }
  std::size_t rank() const { return rows_.size(); }
  std::size_t insertions() const { return insertions_; }
  std::size_t dense_rows() const;

  /// Returns true when the row was independent of the stored rows.
  bool insert(const SparseRow& row);

  MembershipResult membership(const SparseRow& v, bool want_certificate = true) const;

  bool has_pivot(Column c) const { return c < pivot_slot_.size() && pivot_slot_[c] != kNoPivot; }
  /// Stored row with the given pivot column.
  SparseRow pivot_row(Column c) const;
  /// Pivot columns in increasing order.
  std::vector<Column> pivots() const;

  /// "GF2E" | version | dimension u64 | per pivot: column u64, count u64, indices u64...
  /// All integers little-endian; pivots in increasing column order.
  void write(std::ostream& out) const;
  static EchelonState read(std::istream& in);

private:
  static constexpr std::uint32_t kNoPivot = 0xffffffffu;

  struct StoredRow {
    Column pivot = 0;
    bool dense = false;
    std::vector<Column> sparse;
    std::size_t word_offset = 0;  // first word held by `bits`
    std::vector<std::uint64_t> bits;
  };

  void check_columns(std::span<const Column> cols) const;
  /// Clears every pivot column of acc, lowest first.
  void reduce(std::vector<std::uint64_t>& acc, std::size_t start_word) const;
  void xor_into(const StoredRow& row, std::vector<std::uint64_t>& acc) const;
  void install(std::vector<std::uint64_t>& acc, std::size_t start_word);
  SparseRow certificate_for(Column free_column) const;

  std::size_t dimension_;
  std::size_t words_;
  double dense_fill_;
  std::size_t insertions_ = 0;
  std::vector<StoredRow> rows_;
  std::vector<std::uint32_t> pivot_slot_;
};

}  // namespace z2index::gf2
