#include "kmu/linalg.hpp"

#include "kmu/error.hpp"

namespace kmu {

namespace {

/// a - c * b
SparseRow axpy(const SparseRow& a, const Scalar& c, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -(c * b[j].second));
      ++j;
    } else {
      Scalar s = a[i].second - c * b[j].second;
      if (!s.is_zero()) out.emplace_back(a[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SparseRow RowEchelon::reduce(SparseRow row) const {
  SparseRow done;
  while (!row.empty()) {
    auto it = pivots_.find(row.front().first);
    if (it == pivots_.end()) {
      done.push_back(std::move(row.front()));
      row.erase(row.begin());
      continue;
    }
    row = axpy(row, row.front().second, it->second);
  }
  return done;
}

bool RowEchelon::insert(SparseRow row) {
  while (!row.empty()) {
    auto it = pivots_.find(row.front().first);
    if (it == pivots_.end()) break;
    row = axpy(row, row.front().second, it->second);
  }
  if (row.empty()) return false;
  Scalar inv = row.front().second.inverse();
  for (auto& e : row) e.second *= inv;
  const std::size_t col = row.front().first;
  pivots_.emplace(col, std::move(row));
  return true;
}

std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Scalar inv = m[r][c].inverse();
    for (auto& e : m[r]) e *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Scalar f = m[i][c];
      for (std::size_t k = c; k < cols; ++k)
        if (!m[r][k].is_zero()) m[i][k] -= f * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::optional<AffineSolution> solve(const Matrix& a, const std::vector<Scalar>& b, std::size_t ncols,
                                    const Field& field) {
  if (a.size() != b.size()) throw MathError("row count mismatch in linear solve");
  Matrix m;
  m.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != ncols) throw MathError("column count mismatch in linear solve");
    auto row = a[i];
    row.push_back(b[i]);
    m.push_back(std::move(row));
  }
  auto pivots = rref(m);
  if (!pivots.empty() && pivots.back() == ncols) return std::nullopt;

  AffineSolution sol;
  sol.particular.assign(ncols, Scalar::zero(field));
  std::vector<bool> is_pivot(ncols, false);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    is_pivot[pivots[r]] = true;
    sol.particular[pivots[r]] = m[r][ncols];
  }
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(ncols, Scalar::zero(field));
    v[f] = Scalar::one(field);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
    sol.kernel.push_back(std::move(v));
  }
  return sol;
}

}  // namespace kmu
