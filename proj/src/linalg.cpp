#include "locmat/linalg.hpp"

#include <algorithm>

#include "locmat/error.hpp"

namespace locmat {

SparseVector axpy(const SparseVector& a, const CycElem& factor, const SparseVector& b) {
  SparseVector out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      out.emplace_back(ib->first, factor * ib->second);
      ++ib;
    } else {
      CycElem v = ia->second + factor * ib->second;
      if (!v.is_zero()) out.emplace_back(ia->first, std::move(v));
      ++ia;
      ++ib;
    }
  }
  return out;
}

bool RowEchelon::insert(SparseVector row) {
  for (const auto& [col, value] : row) {
    if (col >= columns_) throw DimensionMismatch("row entry outside the column range");
    if (value.level() != level_) throw LevelMismatch("row level differs from the system level");
  }
  while (!row.empty()) {
    const std::size_t lead = row.front().first;
    auto it = pivots_.find(lead);
    if (it == pivots_.end()) {
      CycElem scale = row.front().second.inv();
      for (auto& entry : row) entry.second *= scale;
      pivots_.emplace(lead, std::move(row));
      return true;
    }
    row = axpy(row, -row.front().second, it->second);
  }
  return false;
}

std::vector<SparseVector> RowEchelon::nullspace() const {
  // Back substitution to reduced row echelon form, highest pivot first.
  std::map<std::size_t, SparseVector> reduced;
  for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
    SparseVector row = it->second;
    std::size_t i = 1;
    while (i < row.size()) {
      auto hit = reduced.find(row[i].first);
      if (hit == reduced.end()) {
        ++i;
        continue;
      }
      row = axpy(row, -row[i].second, hit->second);
    }
    reduced.emplace(it->first, std::move(row));
  }

  std::vector<SparseVector> basis;
  for (std::size_t free = 0; free < columns_; ++free) {
    if (reduced.contains(free)) continue;
    SparseVector v;
    v.emplace_back(free, CycElem::one(level_));
    for (const auto& [pivot, row] : reduced) {
      auto hit = std::lower_bound(row.begin(), row.end(), free,
                                  [](const auto& e, std::size_t c) { return e.first < c; });
      if (hit != row.end() && hit->first == free) v.emplace_back(pivot, -hit->second);
    }
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace locmat
