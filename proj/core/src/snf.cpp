#include "bfh/snf.hpp"

#include <cstddef>

namespace bfh {
namespace {

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Integer abs_int(const Integer& x) { return x < 0 ? Integer(-x) : x; }

}  // namespace

SmithResult smith_normal_form(const IntMatrix& a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  SmithResult res{a, identity_matrix(rows), identity_matrix(cols)};
  IntMatrix& d = res.d;

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    std::swap(d[i], d[j]);
    std::swap(res.u[i], res.u[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (auto& row : d) std::swap(row[i], row[j]);
    for (auto& row : res.v) std::swap(row[i], row[j]);
  };
  auto add_row = [&](std::size_t dst, std::size_t src, const Integer& c) {
    for (std::size_t k = 0; k < cols; ++k) d[dst][k] += c * d[src][k];
    for (std::size_t k = 0; k < rows; ++k) res.u[dst][k] += c * res.u[src][k];
  };
  auto add_col = [&](std::size_t dst, std::size_t src, const Integer& c) {
    for (std::size_t k = 0; k < rows; ++k) d[k][dst] += c * d[k][src];
    for (std::size_t k = 0; k < cols; ++k) res.v[k][dst] += c * res.v[k][src];
  };
  auto negate_row = [&](std::size_t i) {
    for (auto& x : d[i]) x = -x;
    for (auto& x : res.u[i]) x = -x;
  };

  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Deterministic pivot: smallest nonzero |entry|, lowest (row, col).
    std::size_t pi = t, pj = t;
    Integer best = 0;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (d[i][j] != 0 && (best == 0 || abs_int(d[i][j]) < best)) {
          best = abs_int(d[i][j]);
          pi = i;
          pj = j;
        }
      }
    }
    if (best == 0) break;
    swap_rows(t, pi);
    swap_cols(t, pj);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d[i][t] == 0) continue;
        Integer q = d[i][t] / d[t][t];
        add_row(i, t, -q);
        if (d[i][t] != 0) {
          // Remainder smaller than the pivot: promote it and restart.
          swap_rows(t, i);
          dirty = true;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d[t][j] == 0) continue;
        Integer q = d[t][j] / d[t][t];
        add_col(j, t, -q);
        if (d[t][j] != 0) {
          swap_cols(t, j);
          dirty = true;
        }
      }
    }
    if (d[t][t] < 0) negate_row(t);
    ++t;
  }

  // Enforce the divisibility chain d[i][i] | d[i+1][i+1].
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < t; ++i) {
      if (d[i + 1][i + 1] % d[i][i] != 0) {
        // Fold d[i+1][i+1] into position (i, i) via the standard 2x2 trick.
        add_col(i, i + 1, 1);
        // Re-run the local elimination on the 2x2 block.
        Integer q = d[i + 1][i] / d[i][i];
        add_row(i + 1, i, -q);
        while (d[i + 1][i] != 0) {
          swap_rows(i, i + 1);
          q = d[i + 1][i] / d[i][i];
          add_row(i + 1, i, -q);
        }
        q = d[i][i + 1] / d[i][i];
        add_col(i + 1, i, -q);
        while (d[i][i + 1] != 0) {
          swap_cols(i, i + 1);
          q = d[i][i + 1] / d[i][i];
          add_col(i + 1, i, -q);
        }
        if (d[i][i] < 0) negate_row(i);
        if (d[i + 1][i + 1] < 0) negate_row(i + 1);
        changed = true;
      }
    }
  }
  return res;
}

bool has_integer_solution(const IntMatrix& a, const std::vector<Integer>& b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  SmithResult s = smith_normal_form(a);
  // a x = b  <=>  d (v^{-1} x) = u b; existence needs d[i][i] | (u b)[i].
  std::vector<Integer> ub(rows, 0);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < rows; ++k) ub[i] += s.u[i][k] * b[k];
  for (std::size_t i = 0; i < rows; ++i) {
    Integer di = (i < cols) ? s.d[i][i] : Integer(0);
    if (di == 0) {
      if (ub[i] != 0) return false;
    } else if (ub[i] % di != 0) {
      return false;
    }
  }
  return true;
}

CokernelDescription cokernel(const IntMatrix& a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  SmithResult s = smith_normal_form(a);
  CokernelDescription out;
  std::size_t rank = 0;
  for (std::size_t i = 0; i < rows && i < cols; ++i) {
    if (s.d[i][i] != 0) {
      ++rank;
      if (s.d[i][i] > 1) out.invariant_factors.push_back(s.d[i][i]);
    }
  }
  out.free_rank = static_cast<int>(rows - rank);
  return out;
}

}  // namespace bfh
