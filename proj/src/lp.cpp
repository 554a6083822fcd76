#include "hive_polytope.hpp"
#include "hivecomb/errors.hpp"

#include <algorithm>

namespace hivecomb::detail {

Hive HivePolytope::hive_at(const std::vector<Rational>& x) const {
  Hive h = boundary;
  for (std::size_t v = 0; v < vars.size(); ++v) h(vars[v]) = x[v];
  return h;
}

HivePolytope hive_polytope(const BoundaryTriple& t) {
  HivePolytope p;
  p.n = t.n();
  p.boundary = boundary_from_weights(t);
  const HiveShape shape{p.n};
  p.vars = shape.interior();
  std::vector<int> var_of(shape.size(), -1);
  for (std::size_t v = 0; v < p.vars.size(); ++v) var_of[shape.index(p.vars[v].i, p.vars[v].j)] = static_cast<int>(v);
  for (const Rhombus& r : rhombi(p.n)) {
    std::vector<int> row(p.vars.size(), 0);
    Rational k = 0;
    auto add = [&](HiveIndex q, int sign) {
      const int v = var_of[shape.index(q.i, q.j)];
      if (v >= 0)
        row[v] += sign;
      else
        k += sign * p.boundary(q);
    };
    for (int s = 0; s < 2; ++s) {
      add(r.obtuse[s], 1);
      add(r.acute[s], -1);
    }
    p.a.push_back(std::move(row));
    p.k.push_back(std::move(k));
  }
  return p;
}

namespace {

// Dense tableau; the last column is the right-hand side.
struct Tableau {
  std::vector<std::vector<Rational>> rows;
  std::vector<std::size_t> basis;
  std::size_t columns = 0;
  std::size_t pivots = 0;

  void pivot(std::size_t r, std::size_t c) {
    auto& pr = rows[r];
    const Rational inv = 1 / pr[c];
    for (auto& v : pr) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = 0; j <= columns; ++j)
        if (pr[j] != 0) rows[i][j] -= f * pr[j];
    }
    basis[r] = c;
    ++pivots;
  }

  Rational reduced_cost(const std::vector<Rational>& cost, std::size_t j) const {
    Rational d = cost[j];
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (rows[i][j] != 0) d -= cost[basis[i]] * rows[i][j];
    return d;
  }

  // Bland's rule over the allowed columns. Returns false if unbounded.
  bool optimize(const std::vector<Rational>& cost, const std::vector<bool>& allowed) {
    for (;;) {
      std::size_t enter = columns;
      for (std::size_t j = 0; j < columns && enter == columns; ++j) {
        if (!allowed[j] || std::find(basis.begin(), basis.end(), j) != basis.end()) continue;
        if (reduced_cost(cost, j) > 0) enter = j;
      }
      if (enter == columns) return true;
      std::size_t leave = rows.size();
      Rational best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][enter] <= 0) continue;
        const Rational ratio = rows[i][columns] / rows[i][enter];
        if (leave == rows.size() || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows.size()) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

SimplexOutcome simplex_max(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b,
                           const std::vector<Rational>& c) {
  const std::size_t m = A.size(), d = c.size();
  std::size_t artificials = 0;
  for (const auto& v : b) artificials += v < 0;
  Tableau T;
  T.columns = d + m + artificials;
  std::vector<std::size_t> artificial_row;
  std::size_t next = d + m;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Rational> row(T.columns + 1);
    for (std::size_t j = 0; j < d; ++j) row[j] = A[i][j];
    row[d + i] = 1;
    row[T.columns] = b[i];
    if (b[i] < 0) {
      for (auto& v : row) v = -v;
      row[next] = 1;
      T.basis.push_back(next++);
    } else {
      T.basis.push_back(d + i);
    }
    T.rows.push_back(std::move(row));
  }

  if (artificials > 0) {
    std::vector<Rational> phase1(T.columns, 0);
    for (std::size_t j = d + m; j < T.columns; ++j) phase1[j] = -1;
    T.optimize(phase1, std::vector<bool>(T.columns, true));
    Rational value = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (T.basis[i] >= d + m) value -= T.rows[i][T.columns];
    if (value < 0) throw Infeasible("hive polytope is empty");
    // Drive zero-level artificials out of the basis.
    for (std::size_t i = 0; i < T.rows.size();) {
      if (T.basis[i] < d + m) {
        ++i;
        continue;
      }
      std::size_t c_in = d + m;
      for (std::size_t j = 0; j < d + m && c_in == d + m; ++j)
        if (T.rows[i][j] != 0) c_in = j;
      if (c_in < d + m) {
        T.pivot(i, c_in);
        ++i;
      } else {
        T.rows.erase(T.rows.begin() + static_cast<std::ptrdiff_t>(i));
        T.basis.erase(T.basis.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  std::vector<Rational> cost(T.columns, 0);
  for (std::size_t j = 0; j < d; ++j) cost[j] = c[j];
  std::vector<bool> allowed(T.columns, false);
  for (std::size_t j = 0; j < d + m; ++j) allowed[j] = true;
  if (!T.optimize(cost, allowed)) throw Unbounded("objective is unbounded on the hive polytope");

  SimplexOutcome out;
  out.y.assign(d, 0);
  for (std::size_t i = 0; i < T.rows.size(); ++i)
    if (T.basis[i] < d) out.y[T.basis[i]] = T.rows[i][T.columns];
  out.value = 0;
  for (std::size_t j = 0; j < d; ++j) out.value += c[j] * out.y[j];
  out.basis = T.basis;
  std::sort(out.basis.begin(), out.basis.end());
  out.duals.resize(m);
  for (std::size_t i = 0; i < m; ++i) out.duals[i] = -T.reduced_cost(cost, d + i);
  for (std::size_t j = 0; j < d + m; ++j)
    if (!std::binary_search(out.basis.begin(), out.basis.end(), j) && T.reduced_cost(cost, j) == 0)
      out.dual_degenerate = true;
  out.pivots = T.pivots;
  return out;
}

}  // namespace hivecomb::detail
