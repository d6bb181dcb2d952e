// Sparse Gaussian elimination over Q(i), used for the connection-form ansatz.
#pragma once

#include "lfk/gauss_rat.hpp"

#include <map>
#include <vector>

namespace lfk {

using SparseRow = std::map<int, GaussRat>;

/// Incrementally maintained reduced row echelon form. Rows are added one at
/// a time; every stored row has its pivot as its smallest column and the
/// pivot columns are cleared from all other stored rows.
class EchelonSystem {
 public:
  explicit EchelonSystem(int columns) : columns_(columns) {}

  int columns() const { return columns_; }
  int rank() const { return static_cast<int>(pivots_.size()); }

  /// Returns false when the row was already in the span.
  bool add_row(SparseRow row) {
    reduce(row);
    if (row.empty()) return false;
    const int pc = row.begin()->first;
    const GaussRat inv = row.begin()->second.inverse();
    for (auto& [c, v] : row) v *= inv;
    for (auto& [p, other] : pivots_) {
      auto it = other.find(pc);
      if (it == other.end()) continue;
      GaussRat f = it->second;
      axpy(other, row, -f);
    }
    pivots_.emplace(pc, std::move(row));
    return true;
  }

  /// Basis of the null space: one vector per free column, with that column
  /// set to 1. Ordered by free column.
  std::vector<std::vector<GaussRat>> kernel() const {
    std::vector<std::vector<GaussRat>> out;
    for (int f = 0; f < columns_; ++f) {
      if (pivots_.count(f)) continue;
      std::vector<GaussRat> v(columns_);
      v[f] = GaussRat(1);
      for (const auto& [p, row] : pivots_) {
        auto it = row.find(f);
        if (it != row.end()) v[p] = -it->second;
      }
      out.push_back(std::move(v));
    }
    return out;
  }

 private:
  static void axpy(SparseRow& target, const SparseRow& src, const GaussRat& f) {
    for (const auto& [c, v] : src) {
      auto [it, inserted] = target.try_emplace(c, v * f);
      if (!inserted) {
        it->second += v * f;
        if (it->second.is_zero()) target.erase(it);
      }
    }
  }

  void reduce(SparseRow& row) const {
    // Pivot rows are fully reduced, so one pass over the pivots in column
    // order suffices.
    for (auto it = row.begin(); it != row.end();) {
      auto piv = pivots_.find(it->first);
      if (piv == pivots_.end()) {
        ++it;
        continue;
      }
      const int col = it->first;
      GaussRat f = -it->second;
      axpy(row, piv->second, f);
      it = row.upper_bound(col);
    }
  }

  int columns_;
  std::map<int, SparseRow> pivots_;
};

}  // namespace lfk
