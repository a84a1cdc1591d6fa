#include "minkdec/lp.hpp"

#include <cstddef>
#include <stdexcept>

namespace minkdec::lp {

namespace {

// Dense tableau with explicit basis, Bland's rule throughout. Column layout:
// [0, k) structural, [k, k+m) artificial, last column rhs.
struct Tableau {
  std::size_t m, k;
  std::vector<std::vector<Rat>> t;
  std::vector<std::size_t> basis;

  Tableau(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b)
      : m(A.size()), k(m ? A[0].size() : 0) {
    t.assign(m, std::vector<Rat>(k + m + 1, Rat(0)));
    basis.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      if (A[i].size() != k) throw std::invalid_argument("ragged LP matrix");
      bool flip = b[i] < 0;
      for (std::size_t j = 0; j < k; ++j) t[i][j] = flip ? -A[i][j] : A[i][j];
      t[i][k + m] = flip ? -b[i] : b[i];
      t[i][k + i] = 1;
      basis[i] = k + i;
    }
  }

  std::size_t cols() const { return k + m; }
  Rat& rhs(std::size_t i) { return t[i][k + m]; }

  void pivot(std::size_t row, std::size_t col) {
    Rat p = t[row][col];
    for (auto& v : t[row]) v /= p;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || t[i][col] == 0) continue;
      Rat f = t[i][col];
      for (std::size_t j = 0; j <= cols(); ++j) t[i][j] -= f * t[row][j];
    }
    basis[row] = col;
  }

  // Maximizes the objective with coefficient d_j on column j (columns past
  // `ncols` excluded). Returns false when unbounded.
  bool maximize_obj(const std::vector<Rat>& d, std::size_t ncols) {
    while (true) {
      std::size_t enter = ncols;
      for (std::size_t j = 0; j < ncols && enter == ncols; ++j) {
        bool basic = false;
        for (std::size_t i = 0; i < m; ++i) {
          if (basis[i] == j) { basic = true; break; }
        }
        if (basic) continue;
        Rat reduced = d[j];
        for (std::size_t i = 0; i < m; ++i) {
          if (d[basis[i]] != 0) reduced -= d[basis[i]] * t[i][j];
        }
        if (reduced > 0) enter = j;
      }
      if (enter == ncols) return true;

      std::size_t leave = m;
      Rat best;
      for (std::size_t i = 0; i < m; ++i) {
        if (t[i][enter] <= 0) continue;
        Rat ratio = rhs(i) / t[i][enter];
        if (leave == m || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m) return false;
      pivot(leave, enter);
    }
  }

  Rat objective(const std::vector<Rat>& d) const {
    Rat v = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (d[basis[i]] != 0) v += d[basis[i]] * t[i][k + m];
    }
    return v;
  }
};

}  // namespace

Result maximize(const std::vector<std::vector<Rat>>& A,
                const std::vector<Rat>& b, const std::vector<Rat>& c) {
  if (A.size() != b.size()) throw std::invalid_argument("LP size mismatch");
  Tableau tab(A, b);
  std::size_t m = tab.m, k = tab.k;

  // Phase one: drive the artificial variables to zero.
  std::vector<Rat> phase1(tab.cols(), Rat(0));
  for (std::size_t j = k; j < tab.cols(); ++j) phase1[j] = -1;
  tab.maximize_obj(phase1, tab.cols());
  if (tab.objective(phase1) != 0) {
    return {Status::infeasible, Rat(0), {}};
  }
  // Pivot lingering zero-value artificials out; rows with no structural
  // support are redundant and harmless to keep (their rhs is zero).
  for (std::size_t i = 0; i < m; ++i) {
    if (tab.basis[i] < k) continue;
    for (std::size_t j = 0; j < k; ++j) {
      if (tab.t[i][j] != 0) {
        tab.pivot(i, j);
        break;
      }
    }
  }

  // Phase two over structural columns only.
  std::vector<Rat> phase2(tab.cols(), Rat(0));
  for (std::size_t j = 0; j < k && j < c.size(); ++j) phase2[j] = c[j];
  if (!tab.maximize_obj(phase2, k)) {
    return {Status::unbounded, Rat(0), {}};
  }

  Result res;
  res.status = Status::optimal;
  res.objective = tab.objective(phase2);
  res.x.assign(k, Rat(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (tab.basis[i] < k) res.x[tab.basis[i]] = tab.rhs(i);
  }
  return res;
}

bool feasible(const std::vector<std::vector<Rat>>& A,
              const std::vector<Rat>& b) {
  if (A.size() != b.size()) throw std::invalid_argument("LP size mismatch");
  Tableau tab(A, b);
  std::vector<Rat> phase1(tab.cols(), Rat(0));
  for (std::size_t j = tab.k; j < tab.cols(); ++j) phase1[j] = -1;
  tab.maximize_obj(phase1, tab.cols());
  return tab.objective(phase1) == 0;
}

}  // namespace minkdec::lp
