#include "convlab/verify.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <memory>
#include <random>
#include <sstream>

#include "convlab/algebra.hpp"
#include "convlab/convergence.hpp"
#include "convlab/cube.hpp"
#include "convlab/errors.hpp"
#include "convlab/sampling.hpp"
#include "convlab/seqclass.hpp"
#include "convlab/submeasure.hpp"
#include "convlab/topology.hpp"

namespace convlab {

namespace {

using sampling::Rng;

// Everything the criteria share on one carrier.
struct Fixture {
  Carrier carrier;
  Convergence ls, li, s;
  Topology o_ls, o_li, o_s, o_lsi;

  explicit Fixture(int atoms)
      : carrier(atoms),
        ls(ls_convergence(carrier)),
        li(li_convergence(carrier)),
        s(s_convergence(carrier)),
        o_ls(synthesize_O_lambda(ls)),
        o_li(synthesize_O_lambda(li)),
        o_s(synthesize_O_lambda(s)),
        o_lsi(join_topologies(o_ls, o_li)) {}
};

class Context {
 public:
  explicit Context(const VerifyConfig& config) : config_(config) {}

  int exhaustive_max() const { return std::min(config_.atoms, kMaxSweepAtoms); }
  bool sampled_large() const { return config_.atoms > kMaxSweepAtoms; }
  const VerifyConfig& config() const { return config_; }

  const Fixture& fixture(int atoms) {
    auto& slot = fixtures_[atoms];
    if (!slot) slot = std::make_unique<Fixture>(atoms);
    return *slot;
  }

  // Independent stream per (criterion, carrier).
  Rng rng(int criterion, int atoms) const {
    std::seed_seq seq{static_cast<std::uint32_t>(config_.seed),
                      static_cast<std::uint32_t>(config_.seed >> 32),
                      static_cast<std::uint32_t>(criterion), static_cast<std::uint32_t>(atoms)};
    return Rng(seq);
  }

 private:
  VerifyConfig config_;
  std::map<int, std::unique_ptr<Fixture>> fixtures_;
};

// Collects the first failure; everything after it is skipped.
struct Outcome {
  bool ok = true;
  std::string failure;
  std::vector<std::string> notes;

  bool check(bool condition, const std::string& what) {
    if (ok && !condition) {
      ok = false;
      failure = what;
    }
    return condition;
  }
};

std::string range_label(int hi) { return hi == 1 ? "n=1" : "n=1.." + std::to_string(hi); }

// Classes of one to eight distinct elements, small enough for the literal
// star closure at five atoms.
InfClass small_random_class(const Carrier& c, Rng& rng) {
  const auto want = 1 + sampling::below(rng, 8);
  std::uint32_t mask = 0;
  while (static_cast<std::uint64_t>(std::popcount(mask)) < want) {
    mask |= std::uint32_t{1} << sampling::below(rng, c.size());
  }
  return InfClass::from_mask(c, mask);
}

// ---------------------------------------------------------------- criteria

void criterion1(Context& ctx, Outcome& out) {
  std::uint64_t total = 0;
  for (int n = 1; n <= ctx.exhaustive_max() && out.ok; ++n) {
    const Carrier c(n);
    for_each_class(c, [&](const InfClass& s) {
      ++total;
      if (!out.ok) return;
      out.check(lambda_s(s) == (lambda_ls(s) & lambda_li(s)),
                "n=" + std::to_string(n) + " class " + s.to_string());
    });
  }
  out.notes.push_back(range_label(ctx.exhaustive_max()) + ", " + std::to_string(total) +
                      " classes");
  if (ctx.sampled_large() && out.ok) {
    const Carrier c(kMaxAtoms);
    Rng rng = ctx.rng(1, kMaxAtoms);
    for (int i = 0; i < ctx.config().samples && out.ok; ++i) {
      const InfClass s = sampling::random_class(c, rng);
      out.check(lambda_s(s) == (lambda_ls(s) & lambda_li(s)), "n=5 class " + s.to_string());
    }
    out.notes.push_back("n=5: " + std::to_string(ctx.config().samples) + " sampled classes");
  }
}

void criterion2(Context& ctx, Outcome& out) {
  for (int n = 1; n <= ctx.exhaustive_max() && out.ok; ++n) {
    const Fixture& f = ctx.fixture(n);
    const std::string at = "n=" + std::to_string(n) + ": ";
    const Convergence ls_star = star(f.ls), li_star = star(f.li), s_star = star(f.s);
    out.check(equal_conv(ls_star, f.ls), at + "star(lambda_ls) != lambda_ls");
    out.check(equal_conv(li_star, f.li), at + "star(lambda_li) != lambda_li");
    out.check(equal_conv(s_star, f.s), at + "star(lambda_s) != lambda_s");
    out.check(equal_conv(s_star, meet_conv(ls_star, li_star)),
              at + "star(lambda_s) != star(lambda_ls) & star(lambda_li)");
  }
  out.notes.push_back(range_label(ctx.exhaustive_max()) + ", exact table equality");
  if (ctx.sampled_large() && out.ok) {
    const Carrier c(kMaxAtoms);
    Rng rng = ctx.rng(2, kMaxAtoms);
    const Convergence ls = ls_convergence(c), li = li_convergence(c), s = s_convergence(c);
    const int count = std::min(ctx.config().samples, 200);
    for (int i = 0; i < count && out.ok; ++i) {
      const InfClass cls = small_random_class(c, rng);
      const auto ls_star = star_at(ls, cls), li_star = star_at(li, cls);
      out.check(ls_star == ls(cls) && li_star == li(cls) && star_at(s, cls) == s(cls) &&
                    star_at(s, cls) == (ls_star & li_star),
                "n=5 class " + cls.to_string());
    }
    out.notes.push_back("n=5: " + std::to_string(count) + " sampled classes");
  }
}

// Down-sets of P(n) found by testing every subset against every comparable
// pair, without the library's closure helpers.
std::vector<std::uint32_t> brute_force_downsets(int atoms) {
  const std::uint32_t size = std::uint32_t{1} << atoms;
  std::vector<std::uint32_t> out;
  for (std::uint64_t family = 0; family < (std::uint64_t{1} << size); ++family) {
    bool closed = true;
    for (std::uint32_t x = 0; x < size && closed; ++x) {
      if (((family >> x) & 1) == 0) continue;
      for (std::uint32_t y = 0; y < size && closed; ++y) {
        if ((y | x) == x && ((family >> y) & 1) == 0) closed = false;
      }
    }
    if (closed) out.push_back(static_cast<std::uint32_t>(family));
  }
  return out;
}

std::vector<std::uint32_t> masks_of(const std::vector<ElementSet>& family) {
  std::vector<std::uint32_t> out;
  for (const auto& s : family) out.push_back(s.bits());
  std::sort(out.begin(), out.end());
  return out;
}

void criterion3(Context& ctx, Outcome& out) {
  static constexpr std::array<std::uint64_t, 4> kDownsetCounts = {3, 6, 20, 168};
  std::string counts;
  for (int n = 1; n <= ctx.exhaustive_max() && out.ok; ++n) {
    const Fixture& f = ctx.fixture(n);
    const std::string at = "n=" + std::to_string(n) + ": ";
    const auto downsets = brute_force_downsets(n);
    out.check(downsets.size() == kDownsetCounts[n - 1],
              at + "enumerator found " + std::to_string(downsets.size()) + " down-sets");
    out.check(masks_of(f.o_ls.opens()) == downsets, at + "O_ls opens differ from the down-sets");
    const std::uint64_t discrete = std::uint64_t{1} << (std::uint64_t{1} << n);
    out.check(f.o_s.open_count() == discrete && f.o_s == discrete_topology(f.carrier),
              at + "O_s is not discrete");
    counts += (counts.empty() ? "" : ",") + std::to_string(f.o_ls.open_count());
  }
  out.notes.push_back("down-set counts " + counts);
}

void criterion4(Context& ctx, Outcome& out) {
  for (int n = 1; n <= ctx.exhaustive_max() && out.ok; ++n) {
    const Fixture& f = ctx.fixture(n);
    const std::string at = "n=" + std::to_string(n) + ": ";
    out.check(masks_of(f.o_ls.closed_sets()) ==
                  masks_of(order_closed_family(f.carrier, Orientation::upward)),
              at + "closed sets of O_ls are not the up-sets");
    out.check(masks_of(f.o_li.closed_sets()) ==
                  masks_of(order_closed_family(f.carrier, Orientation::downward)),
              at + "closed sets of O_li are not the down-sets");
  }
  out.notes.push_back(range_label(ctx.exhaustive_max()) + ", exact family equality");
}

void criterion5(Context& ctx, Outcome& out) {
  for (int n = 1; n <= ctx.exhaustive_max() && out.ok; ++n) {
    const Fixture& f = ctx.fixture(n);
    const std::string at = "n=" + std::to_string(n) + ": ";
    out.check(f.o_lsi == f.o_s, at + "join(O_ls, O_li) != O_s");
    out.check(metric_topology(Submeasure::counting(f.carrier)).topology == f.o_s,
              at + "counting-measure topology != O_s");
    const Convergence lim_lsi = lim_of_topology_as_convergence(f.o_lsi);
    if (auto w = find_excess(lim_lsi, f.s)) {
      out.check(false, at + "lim_O_lsi exceeds lambda_s at " + w->cls.to_string());
    } else if (auto w2 = find_excess(f.s, lim_lsi)) {
      out.check(false, at + "lambda_s exceeds lim_O_lsi at " + w2->cls.to_string());
    }
  }
  out.notes.push_back(range_label(ctx.exhaustive_max()));
}

void criterion6(Context& ctx, Outcome& out) {
  for (int n = 1; n <= ctx.exhaustive_max() && out.ok; ++n) {
    const Fixture& f = ctx.fixture(n);
    Rng rng = ctx.rng(6, n);
    for (int i = 0; i < ctx.config().samples && out.ok; ++i) {
      const EPSeq x = sampling::random_epseq(f.carrier, rng);
      out.check(lim_topo(f.o_lsi, x) == (lim_topo(f.o_ls, x) & lim_topo(f.o_li, x)),
                "n=" + std::to_string(n) + " sequence " + x.to_string());
    }
  }
  out.notes.push_back(range_label(ctx.exhaustive_max()) + ", " +
                      std::to_string(ctx.config().samples) + " sequences each");
}

std::optional<ElementSet> first_extra_open(const Topology& coarse, const Topology& fine) {
  for (const auto& u : fine.opens()) {
    if (!coarse.is_open(u)) return u;
  }
  return std::nullopt;
}

void criterion7(Context& ctx, Outcome& out) {
  for (int n = 1; n <= ctx.exhaustive_max() && out.ok; ++n) {
    const Fixture& f = ctx.fixture(n);
    const std::string at = "n=" + std::to_string(n) + ": ";
    const InfClass zero = InfClass::singleton(f.carrier.bottom());
    const Element one = f.carrier.top();
    out.check(lambda_ls(zero).contains(one) && !lambda_s(zero).contains(one),
              at + "top is not a witness for lambda_s < lambda_ls at the zero sequence");
    const auto left = first_extra_open(f.o_ls, f.o_lsi);
    const auto right = first_extra_open(f.o_li, f.o_lsi);
    out.check(f.o_ls.coarser_than(f.o_lsi) && left.has_value(), at + "O_ls is not below O_lsi");
    out.check(f.o_li.coarser_than(f.o_lsi) && right.has_value(), at + "O_li is not below O_lsi");
    if (out.ok && n == ctx.exhaustive_max()) {
      out.notes.push_back(at + "witness opens " + left->to_string() + " and " +
                          right->to_string());
    }
  }
}

void criterion8(Context& ctx, Outcome& out) {
  for (int n = 1; n <= ctx.exhaustive_max() && out.ok; ++n) {
    const Fixture& f = ctx.fixture(n);
    const std::string at = "n=" + std::to_string(n) + ": ";
    out.check(complement_homeomorphism_check(f.o_ls, f.o_li),
              at + "complement does not carry O_ls onto O_li");
    const auto p = space_properties(f.o_ls);
    out.check(p.t0 && p.connected && p.compact, at + "O_ls is not T0, connected and compact");
  }
  out.notes.push_back(range_label(ctx.exhaustive_max()));
}

void criterion9(Context& ctx, Outcome& out) {
  const int hi = std::min(ctx.exhaustive_max(), 3);
  std::uint64_t pairs = 0;
  for (int n = 1; n <= hi && out.ok; ++n) {
    const Fixture& f = ctx.fixture(n);
    const std::string at = "n=" + std::to_string(n) + ": ";
    std::vector<Convergence> lambdas{f.ls, f.li, f.s};
    std::vector<Topology> topologies{f.o_ls, f.o_li, f.o_lsi, antidiscrete_topology(f.carrier)};
    auto sweep = [&](const std::vector<Convergence>& ls, const std::vector<Topology>& ts) {
      std::vector<Topology> images;
      for (const auto& l : ls) images.push_back(synthesize_O_lambda(l));
      std::vector<Convergence> limits;
      for (const auto& t : ts) limits.push_back(lim_of_topology_as_convergence(t));
      for (std::size_t i = 0; i < ls.size() && out.ok; ++i) {
        for (std::size_t j = 0; j < ts.size() && out.ok; ++j) {
          ++pairs;
          out.check(ts[j].coarser_than(images[i]) == leq_conv(ls[i], limits[j]),
                    at + "counterexample at convergence #" + std::to_string(i) +
                        ", topology #" + std::to_string(j));
        }
      }
    };
    sweep(lambdas, topologies);
    Rng rng = ctx.rng(9, n);
    std::vector<Convergence> random_lambdas;
    std::vector<Topology> random_topologies;
    for (int i = 0; i < 50; ++i) {
      random_lambdas.push_back(sampling::repair_L1_L2(sampling::random_convergence(f.carrier, rng)));
    }
    for (int i = 0; i < 50; ++i) random_topologies.push_back(sampling::random_topology(f.carrier, rng));
    sweep(random_lambdas, random_topologies);
  }
  out.notes.push_back(range_label(hi) + ", " + std::to_string(pairs) + " pairs");
}

void criterion10(Context& ctx, Outcome& out) {
  Rng rng = ctx.rng(10, 0);
  std::vector<cube::FCSeq> sample;
  for (int i = 0; i < ctx.config().samples; ++i) sample.push_back(sampling::random_fcseq(rng));
  std::uint64_t probes = 0;
  for (const auto& x : sample) {
    if (!out.ok) break;
    const cube::FCSet hi = cube::fc_limsup(x), lo = cube::fc_liminf(x);
    const auto left = cube::lim_alexandrov(x);
    auto candidates = cube::candidate_limits(x);
    for (int k = 0; k < 4; ++k) candidates.push_back(sampling::random_fcset(rng));
    for (const auto& a : candidates) {
      ++probes;
      if (!out.check(left(a) == cube::fc_subset(hi, a),
                     "Alexandrov limit rule fails for " + x.to_string() + " at " + a.to_string())) {
        break;
      }
    }
    const auto cantor = cube::lim_cantor(x);
    out.check(cantor.has_value() == (lo == hi) && (!cantor || *cantor == lo),
              "Cantor limit disagrees with the symmetric rule for " + x.to_string());
  }
  out.check(cube::check_alexandrov_pair_is_cantor(sample),
            "the two Alexandrov-type limits do not characterize the Cantor limit");
  out.check(cube::check_cantor_subbase_split(8, std::vector<cube::FCSet>{
                                                    cube::FCSet::empty(), cube::FCSet::omega(),
                                                    cube::FCSet::finite({0, 2}),
                                                    cube::FCSet::cofinite({1, 7})}),
            "Cantor subbase is not the union of the two Alexandrov subbases");
  out.notes.push_back(std::to_string(sample.size()) + " sequences, " + std::to_string(probes) +
                      " candidate limits");
}

void check_submeasure(Outcome& out, const Submeasure& mu, const std::string& label,
                      bool want_positive, bool with_triangle) {
  const auto ax = validate_submeasure(mu);
  out.check(ax.zero_at_bottom && ax.monotone && ax.subadditive && ax.continuous,
            label + " is not a continuous submeasure");
  if (want_positive) out.check(ax.strictly_positive, label + " is not strictly positive");
  out.check(check_decreasing_continuity(mu), label + " is not continuous along chains");
  if (with_triangle) out.check(check_triangle_inequality(mu), label + " breaks the triangle inequality");
}

void criterion11(Context& ctx, Outcome& out) {
  for (int n = 1; n <= ctx.exhaustive_max() && out.ok; ++n) {
    const Carrier c(n);
    const std::string at = "n=" + std::to_string(n) + ": ";
    check_submeasure(out, Submeasure::counting(c), at + "counting measure", true, n <= 3);
    check_submeasure(out, Submeasure::truncated_cardinality(c), at + "truncated cardinality",
                     false, n <= 3);
  }
  out.notes.push_back(range_label(ctx.exhaustive_max()) + ", triangle inequality for n<=3");
  if (ctx.config().submeasure && out.ok) {
    const Carrier c(ctx.config().atoms);
    const Submeasure mu = load_submeasure(c, *ctx.config().submeasure);
    check_submeasure(out, mu, ctx.config().submeasure->filename().string(), false, true);
    out.notes.push_back("table " + ctx.config().submeasure->filename().string() + " checked");
  }
}

void criterion12(Context& ctx, Outcome& out) {
  std::uint64_t total = 0;
  for (int n = 1; n <= ctx.exhaustive_max() && out.ok; ++n) {
    const auto r = check_hbar(Carrier(n));
    total += r.classes_checked;
    out.check(r.holds, "n=" + std::to_string(n) + ": no witness for " +
                           (r.failure ? r.failure->to_string() : std::string("?")));
    out.check(r.all_witnesses_singleton, "n=" + std::to_string(n) + ": non-singleton witness");
  }
  out.notes.push_back(range_label(ctx.exhaustive_max()) + ", " + std::to_string(total) +
                      " classes");
  if (ctx.sampled_large() && out.ok) {
    const Carrier c(kMaxAtoms);
    Rng rng = ctx.rng(12, kMaxAtoms);
    for (int i = 0; i < ctx.config().samples && out.ok; ++i) {
      const InfClass s = sampling::random_class(c, rng);
      const auto w = hbar_witness(s);
      out.check(w && w->size() == 1, "n=5 class " + s.to_string());
    }
    out.notes.push_back("n=5: " + std::to_string(ctx.config().samples) + " sampled classes");
  }
}

struct Criterion {
  const char* title;
  void (*run)(Context&, Outcome&);
};

constexpr std::array<Criterion, kCriterionCount> kCriteria = {{
    {"lambda_s = lambda_ls & lambda_li on every class", criterion1},
    {"star closure fixes lambda_ls, lambda_li and lambda_s", criterion2},
    {"O_ls opens are the down-sets; O_s is discrete", criterion3},
    {"closed sets of O_ls and O_li are the up-sets and down-sets", criterion4},
    {"join(O_ls, O_li) = O_s = counting-measure topology", criterion5},
    {"limits in O_lsi intersect the one-sided limits", criterion6},
    {"strictness witnesses below O_lsi and lambda_ls", criterion7},
    {"complement map carries O_ls onto O_li", criterion8},
    {"Galois connection between F and G", criterion9},
    {"finite-cofinite cube limits", criterion10},
    {"submeasure axioms and triangle inequality", criterion11},
    {"every class has a singleton hbar witness", criterion12},
}};

}  // namespace

std::vector<CriterionResult> run_verification(
    const VerifyConfig& config, const std::function<void(const CriterionResult&)>& on_result) {
  (void)Carrier(config.atoms);
  if (config.samples < 1) throw ValidationError("samples must be at least 1");
  Context ctx(config);
  std::vector<CriterionResult> results;
  for (std::size_t i = 0; i < kCriteria.size(); ++i) {
    CriterionResult r{static_cast<int>(i + 1), kCriteria[i].title, false, {}};
    Outcome out;
    try {
      kCriteria[i].run(ctx, out);
    } catch (const std::exception& e) {
      out.check(false, std::string("error: ") + e.what());
    }
    r.passed = out.ok;
    if (out.ok) {
      for (std::size_t k = 0; k < out.notes.size(); ++k) r.detail += (k ? "; " : "") + out.notes[k];
    } else {
      r.detail = out.failure;
    }
    if (on_result) on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "[PASS] " : "[FAIL] ") << (r.index < 10 ? " " : "") << r.index << ". "
     << r.title;
  if (!r.detail.empty()) os << " (" << r.detail << ")";
  return os.str();
}

}  // namespace convlab
