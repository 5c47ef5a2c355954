#include "contri/smith.hpp"

#include <map>
#include <set>

namespace contri {

namespace {

using boost::multiprecision::abs;

void swap_rows(IntMatrix& a, Eigen::Index i, Eigen::Index j) {
  if (i != j) a.row(i).swap(a.row(j));
}
void swap_cols(IntMatrix& a, Eigen::Index i, Eigen::Index j) {
  if (i != j) a.col(i).swap(a.col(j));
}
// row_i -= q * row_j
void axpy_row(IntMatrix& a, Eigen::Index i, Eigen::Index j, const Integer& q) {
  for (Eigen::Index c = 0; c < a.cols(); ++c)
    if (a(j, c) != 0) a(i, c) -= q * a(j, c);
}
void axpy_col(IntMatrix& a, Eigen::Index i, Eigen::Index j, const Integer& q) {
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    if (a(r, j) != 0) a(r, i) -= q * a(r, j);
}

}  // namespace

std::vector<Integer> SmithForm::torsion() const {
  std::vector<Integer> out;
  for (const auto& f : factors)
    if (f > 1) out.push_back(f);
  return out;
}

SmithDecomposition smith_decomposition(const IntMatrix& m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::Identity(rows, rows);
  IntMatrix v = IntMatrix::Identity(cols, cols);
  Eigen::Index t = 0;
  for (; t < std::min(rows, cols); ++t) {
    // Smallest nonzero entry in the trailing block becomes the pivot.
    Eigen::Index pr = -1, pc = -1;
    for (Eigen::Index i = t; i < rows; ++i)
      for (Eigen::Index j = t; j < cols; ++j)
        if (a(i, j) != 0 && (pr < 0 || abs(a(i, j)) < abs(a(pr, pc)))) {
          pr = i;
          pc = j;
        }
    if (pr < 0) break;
    swap_rows(a, t, pr);
    swap_rows(u, t, pr);
    swap_cols(a, t, pc);
    swap_cols(v, t, pc);
    while (true) {
      bool changed = false;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        const Integer q = a(i, t) / a(t, t);
        axpy_row(a, i, t, q);
        axpy_row(u, i, t, q);
        if (a(i, t) != 0) {
          swap_rows(a, t, i);
          swap_rows(u, t, i);
          changed = true;
        }
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        const Integer q = a(t, j) / a(t, t);
        axpy_col(a, j, t, q);
        axpy_col(v, j, t, q);
        if (a(t, j) != 0) {
          swap_cols(a, t, j);
          swap_cols(v, t, j);
          changed = true;
        }
      }
      if (changed) continue;
      // Row and column are clear; enforce divisibility of the trailing block.
      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < rows && bad < 0; ++i)
        for (Eigen::Index j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      axpy_row(a, t, bad, Integer(-1));
      axpy_row(u, t, bad, Integer(-1));
    }
    if (a(t, t) < 0) {
      a.row(t) = -a.row(t);
      u.row(t) = -u.row(t);
    }
  }
  SmithDecomposition out{std::move(u), std::move(a), std::move(v), {}};
  for (Eigen::Index i = 0; i < t; ++i) out.form.factors.push_back(out.diagonal(i, i));
  out.form.rank = out.form.factors.size();
  return out;
}

SmithForm smith_normal_form(const IntMatrix& m) { return smith_decomposition(m).form; }

IntMatrix to_int_matrix(const Eigen::SparseMatrix<int>& m) {
  IntMatrix out = IntMatrix::Zero(m.rows(), m.cols());
  for (int k = 0; k < m.outerSize(); ++k)
    for (Eigen::SparseMatrix<int>::InnerIterator it(m, k); it; ++it) out(it.row(), it.col()) = it.value();
  return out;
}

SmithForm smith_normal_form(const Eigen::SparseMatrix<int>& m) {
  const auto nrows = static_cast<std::size_t>(m.rows()), ncols = static_cast<std::size_t>(m.cols());
  std::vector<std::map<std::size_t, Integer>> rows(nrows);
  std::vector<std::set<std::size_t>> cols(ncols);
  for (int k = 0; k < m.outerSize(); ++k)
    for (Eigen::SparseMatrix<int>::InnerIterator it(m, k); it; ++it) {
      if (it.value() == 0) continue;
      rows[it.row()][it.col()] = it.value();
      cols[it.col()].insert(it.row());
    }

  std::size_t units = 0;
  while (true) {
    // Markowitz choice among unit pivots.
    std::size_t best_r = 0, best_c = 0, best_cost = SIZE_MAX;
    for (std::size_t c = 0; c < ncols && best_cost > 0; ++c) {
      if (cols[c].empty()) continue;
      for (std::size_t r : cols[c]) {
        const auto& val = rows[r].at(c);
        if (val != 1 && val != -1) continue;
        const std::size_t cost = (rows[r].size() - 1) * (cols[c].size() - 1);
        if (cost < best_cost) {
          best_cost = cost;
          best_r = r;
          best_c = c;
          if (cost == 0) break;
        }
      }
    }
    if (best_cost == SIZE_MAX) break;
    const Integer pivot = rows[best_r].at(best_c);
    const auto pivot_row = rows[best_r];
    const std::vector<std::size_t> targets(cols[best_c].begin(), cols[best_c].end());
    for (std::size_t r : targets) {
      if (r == best_r) continue;
      const Integer f = rows[r].at(best_c) * pivot;
      for (const auto& [c, val] : pivot_row) {
        auto& row = rows[r];
        auto it = row.find(c);
        Integer nv = (it == row.end() ? Integer(0) : it->second) - f * val;
        if (nv == 0) {
          if (it != row.end()) row.erase(it);
          cols[c].erase(r);
        } else if (it == row.end()) {
          row.emplace(c, std::move(nv));
          cols[c].insert(r);
        } else {
          it->second = std::move(nv);
        }
      }
    }
    for (const auto& [c, val] : pivot_row) cols[c].erase(best_r);
    rows[best_r].clear();
    ++units;
  }

  std::vector<std::size_t> live_rows, live_cols;
  for (std::size_t r = 0; r < nrows; ++r)
    if (!rows[r].empty()) live_rows.push_back(r);
  for (std::size_t c = 0; c < ncols; ++c)
    if (!cols[c].empty()) live_cols.push_back(c);
  std::map<std::size_t, Eigen::Index> col_pos;
  for (std::size_t i = 0; i < live_cols.size(); ++i) col_pos[live_cols[i]] = static_cast<Eigen::Index>(i);
  IntMatrix rest = IntMatrix::Zero(static_cast<Eigen::Index>(live_rows.size()), static_cast<Eigen::Index>(live_cols.size()));
  for (std::size_t i = 0; i < live_rows.size(); ++i)
    for (const auto& [c, val] : rows[live_rows[i]]) rest(static_cast<Eigen::Index>(i), col_pos.at(c)) = val;

  SmithForm out;
  out.factors.assign(units, Integer(1));
  const auto tail = smith_normal_form(rest);
  out.factors.insert(out.factors.end(), tail.factors.begin(), tail.factors.end());
  out.rank = out.factors.size();
  return out;
}

}  // namespace contri
