#include "hivecomb/cli.hpp"

#include "hivecomb/errors.hpp"
#include "hivecomb/io.hpp"
#include "hivecomb/oracles.hpp"
#include "hivecomb/reconstruct.hpp"
#include "hivecomb/svg.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

namespace hivecomb {

namespace {

constexpr std::uint64_t kDefaultSeed = 1;

class VerificationFailed : public Error {
 public:
  using Error::Error;
};

Weight parse_weight(const std::string& text, const char* name) {
  Weight w;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      w.push_back(parse_rational(part));
    } catch (const std::exception&) {
      throw InvalidInput(std::string("--") + name + ": cannot parse '" + part + "'");
    }
  }
  if (w.empty()) throw InvalidInput(std::string("--") + name + " is empty");
  return w;
}

std::vector<int> parse_permutation(const std::string& text, const char* name) {
  std::vector<int> p;
  for (const Rational& q : parse_weight(text, name)) {
    if (!is_integer(q)) throw InvalidInput(std::string("--") + name + " must list integers");
    p.push_back(static_cast<int>(to_int64(q)));
  }
  return p;
}

BoundaryTriple read_triple(int n, const std::string& l, const std::string& m, const std::string& v, bool integral) {
  BoundaryTriple t{parse_weight(l, "lambda"), parse_weight(m, "mu"), parse_weight(v, "nu")};
  if (t.lambda.size() != static_cast<std::size_t>(n) || t.mu.size() != static_cast<std::size_t>(n) ||
      t.nu.size() != static_cast<std::size_t>(n))
    throw SizeMismatch("each weight needs " + std::to_string(n) + " entries");
  t.validate();
  if (!t.is_dominant()) throw NotDominant("weights must be weakly decreasing");
  if (integral && !t.is_integral()) throw InvalidInput("weights must be integral");
  return t;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw InvalidInput("cannot write " + path);
  f << text;
}

std::string weight_text(const Weight& w) {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + to_string(w[k]);
  return s;
}

Weight scaled(const Weight& w, int factor) {
  Weight out = w;
  for (auto& q : out) q *= factor;
  return out;
}

// A diagram from a hive, honeycomb or diagram document.
Diagram diagram_from_document(const Json& j) {
  if (j.is_array()) return diagram_from_json(j);
  if (j.is_object() && j.contains("type")) return diagram(honeycomb_from_json(j));
  if (j.is_object() && j.contains("entries")) return diagram(hive_to_honeycomb(hive_from_json(j)));
  throw InvalidInput("expected a hive, honeycomb or diagram document");
}

// Real feasibility first: an empty real polytope has no lattice points at any scale.
bool lattice_feasible(const BoundaryTriple& t) {
  try {
    lp_maximize(ObjectiveVector{t.n(), std::vector<Rational>(static_cast<std::size_t>(t.n() + 1) * (t.n() + 2) / 2)}, t);
  } catch (const Infeasible&) {
    return false;
  }
  return has_lattice_hive(t);
}

// Dominant integer vectors of length n with entries in [lo, hi], first entry fastest-decreasing.
void for_each_dominant(int n, std::int64_t lo, std::int64_t hi, const std::function<void(const Weight&)>& f) {
  Weight w(static_cast<std::size_t>(n));
  std::function<void(int, std::int64_t)> rec = [&](int k, std::int64_t top) {
    if (k == n) {
      f(w);
      return;
    }
    for (std::int64_t v = top; v >= lo; --v) {
      w[static_cast<std::size_t>(k)] = v;
      rec(k + 1, v);
    }
  };
  rec(0, hi);
}

struct SaturationSummary {
  std::size_t checked = 0, feasible = 0;
  std::vector<std::string> violations;
};

void check_saturation(const BoundaryTriple& t, int factor, SaturationSummary& s) {
  const bool base = lattice_feasible(t);
  const bool big = lattice_feasible({scaled(t.lambda, factor), scaled(t.mu, factor), scaled(t.nu, factor)});
  ++s.checked;
  s.feasible += base;
  if (base != big)
    s.violations.push_back("lambda=" + weight_text(t.lambda) + " mu=" + weight_text(t.mu) + " nu=" + weight_text(t.nu) +
                           " count(t)>0=" + (base ? "yes" : "no") + " count(N t)>0=" + (big ? "yes" : "no"));
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("HIVECOMB_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InvalidInput("HIVECOMB_SEED must be a nonnegative integer");
    }
  }
  return kDefaultSeed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Littlewood-Richardson coefficients through hives and honeycombs", "hivecomb"};
  app.require_subcommand(1);

  int n = 0;
  std::string lambda, mu, nu, output, w_text, v_text;
  std::vector<std::string> inputs;
  bool verify = false;
  std::uint64_t seed = 0;
  int max_entry = 3, samples = 0, factor = 2, bound = 3;
  double scale = 40, margin = 2;

  auto add_triple = [&](CLI::App* c, bool with_nu) {
    c->add_option("-n", n, "rank")->required()->check(CLI::PositiveNumber);
    c->add_option("--lambda", lambda, "comma-separated weight")->required();
    c->add_option("--mu", mu, "comma-separated weight")->required();
    if (with_nu) c->add_option("--nu", nu, "comma-separated weight")->required();
  };

  auto* lr = app.add_subcommand("lr-count", "count lattice hives with the given boundary");
  add_triple(lr, true);
  lr->add_flag("--verify", verify, "cross-check with the tableaux rule");

  auto* dec = app.add_subcommand("decompose", "decompose V_lambda (x) V_mu");
  add_triple(dec, false);

  auto* lift = app.add_subcommand("lift", "largest lift of the boundary, as JSON");
  add_triple(lift, true);
  auto* seed_opt = lift->add_option("--seed", seed, "weight function seed (default HIVECOMB_SEED or 1)");

  auto* ov = app.add_subcommand("overlay", "overlay two honeycombs");
  ov->add_option("inputs", inputs, "two honeycomb JSON files")->required()->expected(2);
  ov->add_option("-o", output, "output file");

  auto* prv = app.add_subcommand("prv", "overlay of tripods for permutations w, v");
  add_triple(prv, false);
  prv->add_option("--w", w_text, "permutation of 0..n-1")->required();
  prv->add_option("--v", v_text, "permutation of 0..n-1")->required();
  prv->add_option("-o", output, "output file");

  auto* render = app.add_subcommand("render", "SVG of a hive, honeycomb or diagram");
  render->add_option("input", inputs, "JSON file")->required()->expected(1);
  render->add_option("-o", output, "output file");
  render->add_option("--scale", scale, "pixels per unit")->check(CLI::PositiveNumber);
  render->add_option("--margin", margin, "units beyond the furthest vertex")->check(CLI::NonNegativeNumber);

  auto* sat = app.add_subcommand("saturate-check", "check count(N t) > 0 iff count(t) > 0");
  sat->add_option("-n", n, "rank")->required()->check(CLI::PositiveNumber);
  sat->add_option("--max-entry", max_entry, "largest entry of lambda and mu")->check(CLI::NonNegativeNumber);
  sat->add_option("--samples", samples, "random triples; 0 means exhaustive")->check(CLI::NonNegativeNumber);
  sat->add_option("--N", factor, "scale factor")->check(CLI::PositiveNumber);
  auto* sat_seed = sat->add_option("--seed", seed, "sampling seed");

  auto* gt = app.add_subcommand("gt-count", "count Gelfand-Tsetlin patterns");
  gt->add_option("--lambda", lambda, "comma-separated weight")->required();
  gt->add_flag("--verify", verify, "compare with the Weyl dimension formula");

  auto* fnv = app.add_subcommand("find-nonintegral-vertex", "search small boundaries for a nonintegral vertex");
  fnv->add_option("-n", n, "rank")->required()->check(CLI::PositiveNumber);
  fnv->add_option("--bound", bound, "largest entry of lambda and mu")->check(CLI::NonNegativeNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    if (lr->parsed()) {
      const BoundaryTriple t = read_triple(n, lambda, mu, nu, true);
      const std::uint64_t count = count_lattice_hives(t);
      if (verify) {
        const std::uint64_t oracle = oracles::lr_coefficient_for_triple(t);
        if (oracle != count)
          throw VerificationFailed("hive count " + std::to_string(count) + " but tableaux give " + std::to_string(oracle));
      }
      out << count << '\n';
    } else if (dec->parsed()) {
      const Weight l = parse_weight(lambda, "lambda"), m = parse_weight(mu, "mu");
      if (l.size() != static_cast<std::size_t>(n) || m.size() != static_cast<std::size_t>(n))
        throw SizeMismatch("each weight needs " + std::to_string(n) + " entries");
      if (!is_dominant(l) || !is_dominant(m)) throw NotDominant("weights must be weakly decreasing");
      if (!is_integral(l) || !is_integral(m)) throw InvalidInput("weights must be integral");
      auto table = decompose_tensor_product(l, m);
      std::sort(table.begin(), table.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
      std::uint64_t total = 0;
      for (const auto& [sigma, mult] : table) {
        out << weight_text(sigma) << ' ' << mult << '\n';
        total += mult;
      }
      out << "total " << total << '\n';
    } else if (lift->parsed()) {
      const BoundaryTriple t = read_triple(n, lambda, mu, nu, false);
      const std::uint64_t s = seed_opt->count() ? seed : default_seed();
      out << to_json(largest_lift(t, make_weight_function(n, s))).dump(2) << '\n';
    } else if (ov->parsed()) {
      const Honeycomb a = honeycomb_from_json(parse_json(read_file(inputs[0])));
      const Honeycomb b = honeycomb_from_json(parse_json(read_file(inputs[1])));
      emit(to_json(overlay(a, b)).dump(2) + "\n", output, out);
    } else if (prv->parsed()) {
      const Weight l = parse_weight(lambda, "lambda"), m = parse_weight(mu, "mu");
      if (l.size() != static_cast<std::size_t>(n) || m.size() != static_cast<std::size_t>(n))
        throw SizeMismatch("each weight needs " + std::to_string(n) + " entries");
      emit(to_json(prv_witness(l, m, parse_permutation(w_text, "w"), parse_permutation(v_text, "v"))).dump(2) + "\n",
           output, out);
    } else if (render->parsed()) {
      const Diagram d = diagram_from_document(parse_json(read_file(inputs[0])));
      emit(render_svg(d, SvgOptions{scale, margin}), output, out);
    } else if (sat->parsed()) {
      SaturationSummary summary;
      const std::int64_t top = max_entry;
      if (samples == 0) {
        // lambda_n = mu_n = 0 loses nothing: shifting lambda by c and nu by -c preserves counts.
        for_each_dominant(n, 0, top, [&](const Weight& l) {
          if (l.back() != 0) return;
          for_each_dominant(n, 0, top, [&](const Weight& m) {
            if (m.back() != 0) return;
            const Rational target = -(weight_sum(l) + weight_sum(m));
            for_each_dominant(n, -2 * top, 0, [&](const Weight& v) {
              if (weight_sum(v) == target) check_saturation({l, m, v}, factor, summary);
            });
          });
        });
      } else {
        std::mt19937_64 rng(sat_seed->count() ? seed : default_seed());
        auto random_dominant = [&](std::int64_t lo, std::int64_t hi) {
          std::uniform_int_distribution<std::int64_t> d(lo, hi);
          std::vector<std::int64_t> v(static_cast<std::size_t>(n));
          for (auto& x : v) x = d(rng);
          std::sort(v.rbegin(), v.rend());
          Weight w;
          for (auto x : v) w.emplace_back(x);
          return w;
        };
        while (summary.checked < static_cast<std::size_t>(samples)) {
          Weight l = random_dominant(0, top), m = random_dominant(0, top), v = random_dominant(-2 * top, 0);
          l.back() = 0;
          m.back() = 0;
          std::sort(l.rbegin(), l.rend());
          std::sort(m.rbegin(), m.rend());
          // Move the sum defect onto nu's last entry; resample when that breaks dominance.
          v.back() -= weight_sum(l) + weight_sum(m) + weight_sum(v);
          if (!is_dominant(v)) continue;
          check_saturation({l, m, v}, factor, summary);
        }
      }
      std::sort(summary.violations.begin(), summary.violations.end());
      for (const auto& line : summary.violations) out << "violation " << line << '\n';
      out << "checked " << summary.checked << " triples, " << summary.feasible << " feasible, N=" << factor << ", "
          << summary.violations.size() << " violations\n";
      if (!summary.violations.empty()) return kVerificationFailed;
      out << "PASS\n";
    } else if (gt->parsed()) {
      const Weight l = parse_weight(lambda, "lambda");
      if (!is_dominant(l)) throw NotDominant("lambda must be weakly decreasing");
      if (!is_integral(l)) throw InvalidInput("lambda must be integral");
      const std::uint64_t count = count_gt_patterns(l);
      if (verify && Integer(count) != oracles::weyl_dim(l))
        throw VerificationFailed("pattern count " + std::to_string(count) + " but Weyl dimension " +
                                 oracles::weyl_dim(l).str());
      out << count << '\n';
    } else if (fnv->parsed()) {
      const auto found = find_nonintegral_vertex(n, bound);
      Json j{{"found", found.has_value()}};
      if (found) {
        j["boundary"] = to_json(found->boundary);
        j["vertex"] = to_json(found->vertex);
        Json kinds = Json::object();
        for (const auto& v : diagram(hive_to_honeycomb(found->vertex)).vertices()) {
          const std::string k = to_string(v.kind);
          kinds[k] = kinds.value(k, 0) + 1;
        }
        j["vertex_kinds"] = kinds;
      }
      out << j.dump(2) << '\n';
    }
    return kOk;
  } catch (const VerificationFailed& e) {
    err << "verification failed: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const Infeasible& e) {
    err << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const NotADiagram& e) {
    err << "not a diagram: " << e.what() << '\n';
    return kNotADiagram;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const RhombusViolation& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const DirectionViolation& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace hivecomb
