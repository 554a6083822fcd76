#include "hivecomb/oracles.hpp"

#include "hivecomb/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace hivecomb::oracles {

Partition normalized(Partition p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] < 0 || (i > 0 && p[i] > p[i - 1])) throw InvalidInput("not a partition");
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

namespace {

std::int64_t size_of(const Partition& p) { return std::accumulate(p.begin(), p.end(), std::int64_t{0}); }

std::int64_t part(const Partition& p, std::size_t i) { return i < p.size() ? p[i] : 0; }

struct Filler {
  Partition outer, inner, content;
  // cells[r][c] for c in [inner_r, outer_r).
  std::vector<std::vector<int>> cells;
  std::vector<std::int64_t> used;
  std::uint64_t count = 0;

  int at(std::size_t r, std::int64_t c) const {
    return cells[r][static_cast<std::size_t>(c - part(inner, r))];
  }

  // Reading order: rows top to bottom, each right to left.
  void fill(std::size_t r, std::int64_t c) {
    if (r == outer.size()) {
      ++count;
      return;
    }
    if (c < part(inner, r)) {
      fill(r + 1, r + 1 < outer.size() ? outer[r + 1] - 1 : 0);
      return;
    }
    for (std::size_t k = 0; k < content.size(); ++k) {
      const int v = static_cast<int>(k) + 1;
      if (used[k] == content[k]) continue;
      if (k > 0 && used[k] + 1 > used[k - 1]) continue;
      if (c + 1 < outer[r] && at(r, c + 1) < v) continue;
      if (r > 0 && c >= part(inner, r - 1) && c < outer[r - 1] && at(r - 1, c) >= v) continue;
      cells[r][static_cast<std::size_t>(c - part(inner, r))] = v;
      ++used[k];
      fill(r, c - 1);
      --used[k];
    }
    cells[r][static_cast<std::size_t>(c - part(inner, r))] = 0;
  }
};

}  // namespace

std::uint64_t lr_coefficient_tableaux(const Partition& lambda_in, const Partition& mu_in, const Partition& nu_in) {
  const Partition lambda = normalized(lambda_in), mu = normalized(mu_in), nu = normalized(nu_in);
  if (size_of(nu) != size_of(lambda) + size_of(mu)) throw SizeMismatch("|nu| must equal |lambda| + |mu|");
  if (lambda.size() > nu.size()) return 0;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    if (lambda[i] > nu[i]) return 0;
  Filler f{nu, lambda, mu, {}, std::vector<std::int64_t>(mu.size(), 0), 0};
  for (std::size_t r = 0; r < nu.size(); ++r)
    f.cells.emplace_back(static_cast<std::size_t>(nu[r] - part(lambda, r)), 0);
  if (nu.empty()) return 1;
  f.fill(0, nu[0] - 1);
  return f.count;
}

std::uint64_t lr_coefficient_for_triple(const BoundaryTriple& t) {
  const std::size_t n = t.lambda.size();
  if (t.mu.size() != n || t.nu.size() != n) throw InvalidInput("weights must have equal length");
  auto ints = [](const Weight& w) {
    std::vector<std::int64_t> v;
    for (const auto& q : w) {
      if (!is_integer(q)) throw InvalidInput("weights must be integral");
      v.push_back(to_int64(q));
    }
    return v;
  };
  const auto l = ints(t.lambda), m = ints(t.mu), v = ints(t.nu);
  if (n == 0) return 1;
  for (const auto* w : {&l, &m, &v})
    for (std::size_t i = 1; i < n; ++i)
      if ((*w)[i] > (*w)[i - 1]) throw NotDominant("weights must be weakly decreasing");
  const std::int64_t total = std::accumulate(l.begin(), l.end(), std::int64_t{0}) +
                             std::accumulate(m.begin(), m.end(), std::int64_t{0}) +
                             std::accumulate(v.begin(), v.end(), std::int64_t{0});
  if (total != 0) throw ZeroSumViolation("weights must sum to zero");
  const std::int64_t sl = l[n - 1], sm = m[n - 1];
  Partition lp, mp, np;
  for (std::size_t i = 0; i < n; ++i) {
    lp.push_back(l[i] - sl);
    mp.push_back(m[i] - sm);
    np.push_back(-v[n - 1 - i] - sl - sm);
  }
  if (np.back() < 0) return 0;
  return lr_coefficient_tableaux(lp, mp, np);
}

Integer weyl_dim(const Weight& lambda) {
  Rational d = 1;
  const std::size_t n = lambda.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      d *= (lambda[i] - lambda[j] + Rational(static_cast<std::int64_t>(j - i))) / Rational(static_cast<std::int64_t>(j - i));
  if (!is_integer(d)) throw InvalidInput("weyl_dim needs an integral dominant weight");
  return numerator(d);
}

namespace {

using Point = std::pair<int, int>;

// Determinant by fraction-free elimination.
__int128 bareiss(std::vector<std::vector<__int128>> m) {
  const std::size_t n = m.size();
  __int128 prev = 1, sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

std::vector<Hive> enumerate_polytope_vertices(const BoundaryTriple& t, bool allow_large) {
  const int n = static_cast<int>(t.lambda.size());
  if (n > 4 && !allow_large) throw TooLarge("vertex enumeration is limited to n <= 4");
  if (t.mu.size() != t.lambda.size() || t.nu.size() != t.lambda.size()) throw InvalidInput("weights must have equal length");

  // Boundary partial sums: lambda along i = 0, mu along i + j = n, nu back
  // along j = 0.
  std::map<Point, Rational> fixed;
  {
    std::vector<Point> path;
    for (int j = 0; j < n; ++j) path.push_back({0, j});
    for (int i = 0; i < n; ++i) path.push_back({i, n - i});
    for (int i = n; i > 0; --i) path.push_back({i, 0});
    std::vector<Rational> steps;
    for (const Weight* w : {&t.lambda, &t.mu, &t.nu}) steps.insert(steps.end(), w->begin(), w->end());
    Rational acc = 0;
    for (std::size_t s = 0; s < path.size(); ++s) {
      fixed[path[s]] = acc;
      acc += steps[s];
    }
    if (acc != 0) throw ZeroSumViolation("weights must sum to zero");
  }
  std::vector<Point> free;
  for (int i = 1; i < n; ++i)
    for (int j = 1; i + j < n; ++j) free.push_back({i, j});
  std::map<Point, std::size_t> var;
  for (std::size_t v = 0; v < free.size(); ++v) var[free[v]] = v;

  // Unit rhombi as pairs of small triangles sharing an edge.
  std::vector<std::array<Point, 3>> tris;
  for (int i = 0; i < n; ++i)
    for (int j = 0; i + j < n; ++j) {
      tris.push_back({Point{i, j}, Point{i + 1, j}, Point{i, j + 1}});
      if (i + j + 2 <= n) tris.push_back({Point{i + 1, j}, Point{i, j + 1}, Point{i + 1, j + 1}});
    }
  std::vector<std::vector<std::int64_t>> rows;
  std::vector<Rational> rhs;  // row . x + rhs >= 0
  for (std::size_t a = 0; a < tris.size(); ++a)
    for (std::size_t b = a + 1; b < tris.size(); ++b) {
      std::set<Point> A(tris[a].begin(), tris[a].end()), B(tris[b].begin(), tris[b].end());
      std::vector<Point> shared, only;
      for (const auto& p : A) (B.count(p) ? shared : only).push_back(p);
      if (shared.size() != 2) continue;
      for (const auto& p : B)
        if (!A.count(p)) only.push_back(p);
      std::vector<std::int64_t> row(free.size(), 0);
      Rational k = 0;
      auto add = [&](const Point& p, int s) {
        if (auto it = var.find(p); it != var.end())
          row[it->second] += s;
        else
          k += s * fixed.at(p);
      };
      for (const auto& p : shared) add(p, 1);
      for (const auto& p : only) add(p, -1);
      rows.push_back(row);
      rhs.push_back(k);
    }

  auto make_hive = [&](const std::vector<Rational>& x) {
    std::vector<Rational> e(HiveShape{n}.size());
    for (const auto& [p, v] : fixed) e[HiveShape{n}.index(p.first, p.second)] = v;
    for (std::size_t v = 0; v < free.size(); ++v) e[HiveShape{n}.index(free[v].first, free[v].second)] = x[v];
    return Hive(n, std::move(e));
  };

  const std::size_t d = free.size();
  std::set<std::vector<Rational>> found;
  if (d == 0) {
    for (const auto& k : rhs)
      if (k < 0) return {};
    return {make_hive({})};
  }
  // Common denominator so the right-hand sides are integers.
  Integer den = 1;
  for (const auto& k : rhs) den = lcm(den, denominator(k));
  std::vector<__int128> b;
  for (const auto& k : rhs) b.push_back(static_cast<__int128>(to_int64(Rational(-k * den))));

  std::vector<std::size_t> pick(d);
  std::iota(pick.begin(), pick.end(), 0);
  const std::size_t m = rows.size();
  for (;;) {
    std::vector<std::vector<__int128>> A(d, std::vector<__int128>(d));
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) A[r][c] = rows[pick[r]][c];
    const __int128 det = bareiss(A);
    if (det != 0) {
      std::vector<Rational> x(d);
      for (std::size_t c = 0; c < d; ++c) {
        auto Ac = A;
        for (std::size_t r = 0; r < d; ++r) Ac[r][c] = b[pick[r]];
        x[c] = Rational(static_cast<std::int64_t>(bareiss(Ac))) / Rational(static_cast<std::int64_t>(det)) / Rational(den);
      }
      bool ok = true;
      for (std::size_t r = 0; r < m && ok; ++r) {
        Rational s = rhs[r];
        for (std::size_t c = 0; c < d; ++c) s += rows[r][c] * x[c];
        ok = s >= 0;
      }
      if (ok) found.insert(x);
    }
    // Next d-subset in lexicographic order.
    std::size_t i = d;
    while (i > 0 && pick[i - 1] == m - d + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < d; ++j) pick[j] = pick[j - 1] + 1;
  }
  std::vector<Hive> out;
  for (const auto& x : found) out.push_back(make_hive(x));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hivecomb::oracles
