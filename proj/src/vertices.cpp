// Vertex enumeration of hive polytopes by double description on the
// homogenized cone {(x, t) : a_r . x + k_r t >= 0, t >= 0}. Properness makes
// the cone pointed, so its extreme rays with t > 0 are the vertices.

#include "hive_polytope.hpp"
#include "hivecomb/lift.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <cstdint>

namespace hivecomb {

namespace {

using Vec = std::vector<Rational>;

Rational dot(const Vec& a, const Vec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

void normalize(Vec& v) {
  for (const auto& q : v)
    if (q != 0) {
      const Rational s = abs(q);
      for (auto& x : v) x /= s;
      return;
    }
}

struct Ray {
  Vec v;
  std::vector<std::uint64_t> zeros;  // bitset over processed rows
};

bool subset(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

std::size_t popcount(const std::vector<std::uint64_t>& a) {
  std::size_t c = 0;
  for (auto w : a) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

// Inverse of a square matrix, or empty if singular.
std::vector<Vec> inverse(std::vector<Vec> m) {
  const std::size_t n = m.size();
  std::vector<Vec> inv(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return {};
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    const Rational f = 1 / m[c][c];
    for (auto& x : m[c]) x *= f;
    for (auto& x : inv[c]) x *= f;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const Rational g = m[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= g * m[c][j];
        inv[r][j] -= g * inv[c][j];
      }
    }
  }
  return inv;
}

}  // namespace

std::vector<Hive> hive_polytope_vertices(const BoundaryTriple& t) {
  const detail::HivePolytope P = detail::hive_polytope(t);
  const std::size_t d = P.vars.size(), dim = d + 1;
  if (d == 0) {
    for (const auto& k : P.k)
      if (k < 0) return {};
    return {P.boundary};
  }
  std::vector<Vec> rows;
  {
    Vec tr(dim, 0);
    tr[d] = 1;
    rows.push_back(tr);
  }
  for (std::size_t r = 0; r < P.a.size(); ++r) {
    Vec row(dim);
    for (std::size_t j = 0; j < d; ++j) row[j] = P.a[r][j];
    row[d] = P.k[r];
    rows.push_back(std::move(row));
  }
  const std::size_t words = (rows.size() + 63) / 64;

  // Greedy independent starting rows.
  std::vector<std::size_t> start;
  {
    std::vector<Vec> echelon;
    for (std::size_t r = 0; r < rows.size() && start.size() < dim; ++r) {
      Vec v = rows[r];
      for (const auto& e : echelon) {
        std::size_t lead = 0;
        while (e[lead] == 0) ++lead;
        if (v[lead] != 0) {
          const Rational f = v[lead] / e[lead];
          for (std::size_t j = 0; j < dim; ++j) v[j] -= f * e[j];
        }
      }
      if (std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; })) continue;
      echelon.push_back(v);
      start.push_back(r);
    }
  }
  if (start.size() < dim) return {};  // not pointed; cannot happen for hive boundaries

  std::vector<Vec> B;
  for (auto r : start) B.push_back(rows[r]);
  const auto inv = inverse(B);
  std::vector<Ray> rays;
  for (std::size_t c = 0; c < dim; ++c) {
    Ray ray;
    ray.v.resize(dim);
    for (std::size_t i = 0; i < dim; ++i) ray.v[i] = inv[i][c];
    normalize(ray.v);
    ray.zeros.assign(words, 0);
    rays.push_back(std::move(ray));
  }
  std::vector<bool> done(rows.size(), false);
  auto mark_zeros = [&](std::size_t r) {
    for (auto& ray : rays)
      if (dot(rows[r], ray.v) == 0) ray.zeros[r / 64] |= std::uint64_t{1} << (r % 64);
  };
  for (auto r : start) {
    done[r] = true;
    mark_zeros(r);
  }

  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (done[r]) continue;
    done[r] = true;
    std::vector<Rational> val(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(rows[r], rays[i].v);
      if (val[i] > 0) pos.push_back(i);
      if (val[i] < 0) neg.push_back(i);
    }
    for (std::size_t p : pos)
      for (std::size_t q : neg) {
        std::vector<std::uint64_t> common(words);
        for (std::size_t w = 0; w < words; ++w) common[w] = rays[p].zeros[w] & rays[q].zeros[w];
        if (popcount(common) + 2 < dim) continue;
        bool adjacent = true;
        for (std::size_t o = 0; o < rays.size() && adjacent; ++o)
          if (o != p && o != q && subset(common, rays[o].zeros)) adjacent = false;
        if (!adjacent) continue;
        Ray ray;
        ray.v.resize(dim);
        for (std::size_t j = 0; j < dim; ++j) ray.v[j] = val[p] * rays[q].v[j] - val[q] * rays[p].v[j];
        normalize(ray.v);
        ray.zeros = common;
        ray.zeros[r / 64] |= std::uint64_t{1} << (r % 64);
        next.push_back(std::move(ray));
      }
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (val[i] < 0) continue;
      if (val[i] == 0) rays[i].zeros[r / 64] |= std::uint64_t{1} << (r % 64);
      next.push_back(std::move(rays[i]));
    }
    rays = std::move(next);
  }

  std::vector<Hive> out;
  for (const auto& ray : rays) {
    if (ray.v[d] <= 0) continue;
    Vec x(d);
    for (std::size_t j = 0; j < d; ++j) x[j] = ray.v[j] / ray.v[d];
    out.push_back(P.hive_at(x));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// Weakly decreasing vectors of length len with entries in [lo, hi], first
// to last in lexicographic order.
void decreasing(std::size_t len, std::int64_t lo, std::int64_t hi, std::vector<std::int64_t>& cur,
                std::vector<std::vector<std::int64_t>>& out) {
  if (cur.size() == len) {
    out.push_back(cur);
    return;
  }
  const std::int64_t top = cur.empty() ? hi : cur.back();
  for (std::int64_t v = lo; v <= top; ++v) {
    cur.push_back(v);
    decreasing(len, lo, hi, cur, out);
    cur.pop_back();
  }
}

Weight to_weight(const std::vector<std::int64_t>& v) {
  Weight w;
  for (auto x : v) w.emplace_back(x);
  return w;
}

}  // namespace

std::optional<NonintegralVertex> find_nonintegral_vertex(int n, int bound) {
  if (n < 1 || bound < 0) return std::nullopt;
  std::vector<std::vector<std::int64_t>> parts;
  std::vector<std::int64_t> cur;
  decreasing(static_cast<std::size_t>(n - 1), 0, bound, cur, parts);
  for (auto& p : parts) p.push_back(0);
  for (std::size_t a = 0; a < parts.size(); ++a)
    for (std::size_t b = a; b < parts.size(); ++b) {
      const auto& l = parts[a];
      const auto& m = parts[b];
      const std::int64_t total = std::accumulate(l.begin(), l.end(), std::int64_t{0}) +
                                 std::accumulate(m.begin(), m.end(), std::int64_t{0});
      std::vector<std::vector<std::int64_t>> nus;
      decreasing(static_cast<std::size_t>(n), -(l[0] + m[0]), 0, cur, nus);
      for (const auto& nu : nus) {
        if (std::accumulate(nu.begin(), nu.end(), std::int64_t{0}) != -total) continue;
        BoundaryTriple t{to_weight(l), to_weight(m), to_weight(nu)};
        for (const Hive& h : hive_polytope_vertices(t))
          if (!std::all_of(h.entries().begin(), h.entries().end(), [](const Rational& q) { return is_integer(q); }))
            return NonintegralVertex{t, h};
      }
    }
  return std::nullopt;
}

}  // namespace hivecomb
