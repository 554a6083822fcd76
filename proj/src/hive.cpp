#include "hivecomb/hive.hpp"

#include "hivecomb/errors.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>

namespace hivecomb {

Weight make_weight(std::initializer_list<std::int64_t> values) {
  Weight w;
  for (auto v : values) w.emplace_back(v);
  return w;
}

bool is_dominant(const Weight& w) {
  for (std::size_t k = 1; k < w.size(); ++k)
    if (w[k - 1] < w[k]) return false;
  return true;
}

bool is_integral(const Weight& w) {
  return std::all_of(w.begin(), w.end(), [](const Rational& q) { return is_integer(q); });
}

Rational weight_sum(const Weight& w) {
  Rational s = 0;
  for (const auto& q : w) s += q;
  return s;
}

HiveIndex HiveShape::at(std::size_t k) const {
  int r = 0;
  while (static_cast<std::size_t>((r + 1) * (r + 2) / 2) <= k) ++r;
  const int j = static_cast<int>(k) - r * (r + 1) / 2;
  return {r - j, j};
}

std::vector<HiveIndex> HiveShape::boundary_cycle() const {
  std::vector<HiveIndex> out;
  for (int j = 0; j < n; ++j) out.push_back({0, j});
  for (int i = 0; i < n; ++i) out.push_back({i, n - i});
  for (int k = 0; k < n; ++k) out.push_back({n - k, 0});
  return out;
}

std::vector<HiveIndex> HiveShape::interior() const {
  std::vector<HiveIndex> out;
  for (std::size_t k = 0; k < size(); ++k) {
    const HiveIndex p = at(k);
    if (!is_boundary(p.i, p.j)) out.push_back(p);
  }
  return out;
}

std::vector<Rhombus> rhombi(int n) {
  std::vector<Rhombus> out;
  for (int r = 0; r <= n; ++r)
    for (int j = 0; j <= r; ++j) {
      const int i = r - j;
      if (i + j + 2 <= n) out.push_back({{HiveIndex{i + 1, j}, HiveIndex{i, j + 1}}, {HiveIndex{i, j}, HiveIndex{i + 1, j + 1}}, 0});
      if (j >= 1 && i + j + 1 <= n)
        out.push_back({{HiveIndex{i, j}, HiveIndex{i + 1, j}}, {HiveIndex{i, j + 1}, HiveIndex{i + 1, j - 1}}, 1});
      if (i >= 1 && i + j + 1 <= n)
        out.push_back({{HiveIndex{i, j}, HiveIndex{i, j + 1}}, {HiveIndex{i + 1, j}, HiveIndex{i - 1, j + 1}}, 2});
    }
  return out;
}

Hive::Hive(int n, std::vector<Rational> entries) : shape_{n}, entries_(std::move(entries)) {
  if (n < 1) throw std::invalid_argument("hive size must be positive");
  if (entries_.size() != shape_.size()) throw std::invalid_argument("hive entry count does not match n");
}

Rational rhombus_value(const Hive& h, const Rhombus& r) {
  return h(r.obtuse[0]) + h(r.obtuse[1]) - h(r.acute[0]) - h(r.acute[1]);
}

std::optional<std::size_t> first_violated_rhombus(const Hive& h) {
  const auto rs = rhombi(h.n());
  for (std::size_t k = 0; k < rs.size(); ++k)
    if (rhombus_value(h, rs[k]) < 0) return k;
  return std::nullopt;
}

void validate_hive(const Hive& h) {
  if (auto k = first_violated_rhombus(h))
    throw RhombusViolation(*k, "rhombus " + std::to_string(*k) + " has negative value " +
                                   to_string(rhombus_value(h, rhombi(h.n())[*k])));
}

void BoundaryTriple::validate() const {
  if (lambda.empty()) throw InvalidInput("weights must be nonempty");
  if (mu.size() != lambda.size() || nu.size() != lambda.size())
    throw InvalidInput("lambda, mu, nu must have the same length");
  if (weight_sum(lambda) + weight_sum(mu) + weight_sum(nu) != 0)
    throw ZeroSumViolation("sum of lambda, mu, nu must be zero");
}

bool BoundaryTriple::is_dominant() const {
  return hivecomb::is_dominant(lambda) && hivecomb::is_dominant(mu) && hivecomb::is_dominant(nu);
}

bool BoundaryTriple::is_regular() const {
  for (const Weight* w : {&lambda, &mu, &nu})
    for (std::size_t k = 1; k < w->size(); ++k)
      if (!((*w)[k - 1] > (*w)[k])) return false;
  return true;
}

bool BoundaryTriple::is_integral() const {
  return hivecomb::is_integral(lambda) && hivecomb::is_integral(mu) && hivecomb::is_integral(nu);
}

Hive boundary_from_weights(const BoundaryTriple& t) {
  t.validate();
  const int n = t.n();
  Hive h = Hive::zero(n);
  const auto cycle = h.shape().boundary_cycle();
  Rational acc = 0;
  std::size_t step = 0;
  for (const Weight* w : {&t.lambda, &t.mu, &t.nu})
    for (const auto& q : *w) {
      h(cycle[step].i, cycle[step].j) = acc;
      acc += q;
      ++step;
    }
  return h;
}

BoundaryTriple boundary_of(const Hive& h) {
  const int n = h.n();
  const auto cycle = h.shape().boundary_cycle();
  BoundaryTriple t;
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    const Rational d = h(cycle[(k + 1) % cycle.size()]) - h(cycle[k]);
    (k < static_cast<std::size_t>(n) ? t.lambda : k < static_cast<std::size_t>(2 * n) ? t.mu : t.nu).push_back(d);
  }
  return t;
}

namespace {

// Depth-first search over interior entries in row-major order. Every rhombus
// is checked at its last interior entry, which yields an interval for it.
class LatticeHiveSearch {
 public:
  explicit LatticeHiveSearch(const BoundaryTriple& t) : shape_{t.n()} {
    t.validate();
    if (!t.is_integral()) throw InvalidInput("lattice hive counting needs integral weights");
    const Hive b = boundary_from_weights(t);
    values_.resize(shape_.size());
    for (std::size_t k = 0; k < shape_.size(); ++k) values_[k] = to_int64(b.entries()[k]);
    interior_ = shape_.interior();
    std::vector<int> order(shape_.size(), -1);
    for (std::size_t k = 0; k < interior_.size(); ++k) order[shape_.index(interior_[k].i, interior_[k].j)] = static_cast<int>(k);
    checks_.resize(interior_.size());
    for (const Rhombus& r : rhombi(shape_.n)) {
      Term term;
      int last = -1;
      for (int s = 0; s < 2; ++s) {
        term.obtuse[s] = shape_.index(r.obtuse[s].i, r.obtuse[s].j);
        term.acute[s] = shape_.index(r.acute[s].i, r.acute[s].j);
        last = std::max({last, order[term.obtuse[s]], order[term.acute[s]]});
      }
      if (last < 0) {
        if (value(term) < 0) boundary_ok_ = false;
        continue;
      }
      checks_[last].push_back(term);
    }
  }

  // Calls visit(values) for each lattice hive; visit returns false to stop.
  void run(const std::function<bool(const std::vector<std::int64_t>&)>& visit) {
    if (!boundary_ok_) return;
    stop_ = false;
    dfs(0, visit);
  }

  int n() const { return shape_.n; }

 private:
  struct Term {
    std::array<std::size_t, 2> obtuse{}, acute{};
  };

  std::int64_t value(const Term& t) const {
    return values_[t.obtuse[0]] + values_[t.obtuse[1]] - values_[t.acute[0]] - values_[t.acute[1]];
  }

  void dfs(std::size_t depth, const std::function<bool(const std::vector<std::int64_t>&)>& visit) {
    if (stop_) return;
    if (depth == interior_.size()) {
      if (!visit(values_)) stop_ = true;
      return;
    }
    const std::size_t e = shape_.index(interior_[depth].i, interior_[depth].j);
    std::int64_t lo = std::numeric_limits<std::int64_t>::min(), hi = std::numeric_limits<std::int64_t>::max();
    values_[e] = 0;
    for (const Term& t : checks_[depth]) {
      const std::int64_t rest = value(t);  // with e = 0
      if (t.obtuse[0] == e || t.obtuse[1] == e) lo = std::max(lo, -rest);
      else hi = std::min(hi, rest);
    }
    if (lo == std::numeric_limits<std::int64_t>::min() || hi == std::numeric_limits<std::int64_t>::max())
      throw std::logic_error("hive search: unbounded interior entry");
    for (std::int64_t v = lo; v <= hi && !stop_; ++v) {
      values_[e] = v;
      dfs(depth + 1, visit);
    }
  }

  HiveShape shape_;
  std::vector<std::int64_t> values_;
  std::vector<HiveIndex> interior_;
  std::vector<std::vector<Term>> checks_;
  bool boundary_ok_ = true;
  bool stop_ = false;
};

}  // namespace

std::uint64_t count_lattice_hives(const BoundaryTriple& t) {
  LatticeHiveSearch s(t);
  std::uint64_t count = 0;
  s.run([&](const std::vector<std::int64_t>&) {
    ++count;
    return true;
  });
  return count;
}

std::vector<Hive> enumerate_lattice_hives(const BoundaryTriple& t, std::size_t limit) {
  LatticeHiveSearch s(t);
  std::vector<Hive> out;
  if (limit == 0) return out;
  s.run([&](const std::vector<std::int64_t>& v) {
    out.emplace_back(s.n(), std::vector<Rational>(v.begin(), v.end()));
    return out.size() < limit;
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool has_lattice_hive(const BoundaryTriple& t) { return !enumerate_lattice_hives(t, 1).empty(); }

std::vector<std::pair<Weight, std::uint64_t>> decompose_tensor_product(const Weight& lambda, const Weight& mu) {
  if (lambda.size() != mu.size() || lambda.empty()) throw InvalidInput("lambda and mu must have the same positive length");
  if (!is_integral(lambda) || !is_integral(mu)) throw InvalidInput("weights must be integral");
  if (!is_dominant(lambda) || !is_dominant(mu)) throw NotDominant("weights must be weakly decreasing");
  const std::size_t n = lambda.size();
  const std::int64_t top = to_int64(lambda.front() + mu.front());
  const std::int64_t bottom = to_int64(lambda.back() + mu.back());
  const std::int64_t total = to_int64(weight_sum(lambda) + weight_sum(mu));
  std::vector<std::pair<Weight, std::uint64_t>> out;
  std::vector<std::int64_t> sigma(n);
  std::function<void(std::size_t, std::int64_t, std::int64_t)> rec = [&](std::size_t k, std::int64_t cap, std::int64_t used) {
    if (k + 1 == n) {
      const std::int64_t last = total - used;
      if (last > cap || last < bottom) return;
      sigma[k] = last;
      BoundaryTriple t{lambda, mu, {}};
      for (std::size_t a = 0; a < n; ++a) t.nu.emplace_back(-sigma[n - 1 - a]);
      if (const auto c = count_lattice_hives(t)) out.emplace_back(Weight(sigma.begin(), sigma.end()), c);
      return;
    }
    const std::int64_t remaining = static_cast<std::int64_t>(n - k - 1);
    for (std::int64_t v = cap; v >= bottom; --v) {
      // The rest lies in [bottom, v].
      if (used + v + remaining * v < total) break;
      if (used + v + remaining * bottom > total) continue;
      sigma[k] = v;
      rec(k + 1, v, used + v);
    }
  };
  rec(0, top, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_gt_patterns(const Weight& lambda) {
  if (!is_integral(lambda)) throw InvalidInput("weight must be integral");
  if (!is_dominant(lambda)) throw NotDominant("weight must be weakly decreasing");
  std::map<std::vector<std::int64_t>, std::uint64_t> memo;
  std::function<std::uint64_t(const std::vector<std::int64_t>&)> count = [&](const std::vector<std::int64_t>& row) -> std::uint64_t {
    if (row.size() <= 1) return 1;
    if (auto it = memo.find(row); it != memo.end()) return it->second;
    std::uint64_t total = 0;
    std::vector<std::int64_t> next(row.size() - 1);
    std::function<void(std::size_t)> fill = [&](std::size_t k) {
      if (k == next.size()) {
        total += count(next);
        return;
      }
      for (std::int64_t v = row[k + 1]; v <= row[k]; ++v) {
        next[k] = v;
        fill(k + 1);
      }
    };
    fill(0);
    memo.emplace(row, total);
    return total;
  };
  std::vector<std::int64_t> row;
  for (const auto& q : lambda) row.push_back(to_int64(q));
  return count(row);
}

std::array<HiveIndex, 3> HiveTriangle::corners() const {
  if (up) return {HiveIndex{i, j}, HiveIndex{i + 1, j}, HiveIndex{i, j + 1}};
  return {HiveIndex{i + 1, j}, HiveIndex{i, j + 1}, HiveIndex{i + 1, j + 1}};
}

std::vector<HiveTriangle> hive_triangles(int n) {
  std::vector<HiveTriangle> out;
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= r; ++j) {
      out.push_back({r - j, j, true});
      if (r + 2 <= n) out.push_back({r - j, j, false});
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<HiveTriangle>> flatspace_decomposition(const Hive& h) {
  const auto tris = hive_triangles(h.n());
  auto id = [&](const HiveTriangle& t) {
    return static_cast<std::size_t>(std::lower_bound(tris.begin(), tris.end(), t) - tris.begin());
  };
  std::vector<std::size_t> parent(tris.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Rhombus& r : rhombi(h.n())) {
    if (rhombus_value(h, r) != 0) continue;
    // The up triangle sits at the obtuse/acute corner shared by all types.
    HiveTriangle a, b;
    const HiveIndex o = r.obtuse[0];
    switch (r.orientation) {
      case 0: a = {r.acute[0].i, r.acute[0].j, true}; b = {r.acute[0].i, r.acute[0].j, false}; break;
      case 1: a = {o.i, o.j, true}; b = {o.i, o.j - 1, false}; break;
      default: a = {o.i, o.j, true}; b = {o.i - 1, o.j, false}; break;
    }
    parent[find(id(a))] = find(id(b));
  }
  std::map<std::size_t, std::vector<HiveTriangle>> groups;
  for (std::size_t k = 0; k < tris.size(); ++k) groups[find(k)].push_back(tris[k]);
  std::vector<std::vector<HiveTriangle>> out;
  for (auto& [root, g] : groups) out.push_back(std::move(g));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hivecomb
