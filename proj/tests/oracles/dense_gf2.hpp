#pragma once

// Textbook dense Gaussian elimination over GF(2) on byte vectors.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

using DenseVec = std::vector<std::uint8_t>;

/// Fully reduced row basis of the span of the given rows.
class DenseSpan {
public:
  explicit DenseSpan(std::size_t dimension) : dim_(dimension) {}

  void add(DenseVec v) { rows_.push_back(std::move(v)); dirty_ = true; }

  std::size_t rank() {
    reduce();
    return basis_.size();
  }

  bool contains(const DenseVec& v) {
    reduce();
    DenseVec w = v;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (w[pivots_[k]]) {
        for (std::size_t c = 0; c < dim_; ++c)
          w[c] ^= basis_[k][c];
      }
    }
    for (auto x : w)
      if (x)
        return false;
    return true;
  }

private:
  void reduce() {
    if (!dirty_)
      return;
    std::vector<DenseVec> m = rows_;
    basis_.clear();
    pivots_.clear();
    std::size_t r = 0;
    for (std::size_t col = 0; col < dim_ && r < m.size(); ++col) {
      std::size_t sel = r;
      while (sel < m.size() && !m[sel][col])
        ++sel;
      if (sel == m.size())
        continue;
      std::swap(m[r], m[sel]);
      for (std::size_t i = 0; i < m.size(); ++i)
        if (i != r && m[i][col])
          for (std::size_t c = 0; c < dim_; ++c)
            m[i][c] ^= m[r][c];
      pivots_.push_back(col);
      ++r;
    }
    m.resize(r);
    basis_ = std::move(m);
    dirty_ = false;
  }

  std::size_t dim_;
  std::vector<DenseVec> rows_;
  std::vector<DenseVec> basis_;
  std::vector<std::size_t> pivots_;
  bool dirty_ = false;
};

}  // namespace oracle
