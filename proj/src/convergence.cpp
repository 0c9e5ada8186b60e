#include "convlab/convergence.hpp"

#include <bit>

#include "convlab/bits.hpp"

namespace convlab {

namespace {

std::uint32_t full_mask(const Carrier& c) { return static_cast<std::uint32_t>(bits::low_mask(c.size())); }

std::vector<std::uint32_t> tabulate(const Carrier& carrier, const Convergence::Rule& rule) {
  std::vector<std::uint32_t> table(static_cast<std::size_t>(carrier.class_count()) + 1, 0);
  for (std::size_t m = 1; m < table.size(); ++m) {
    const ElementSet v = rule(InfClass::from_mask(carrier, static_cast<std::uint32_t>(m)));
    carrier.require_same(v.carrier());
    table[m] = v.bits();
  }
  return table;
}

void require_same(const Convergence& a, const Convergence& b) {
  a.carrier().require_same(b.carrier());
}

}  // namespace

// ------------------------------------------------------------ Convergence

Convergence::Convergence(const Carrier& carrier, Rule rule, std::string name) {
  auto state = std::make_shared<State>(State{carrier, std::move(name), std::move(rule), {}});
  if (carrier.tabulable()) state->table = tabulate(carrier, state->rule);
  state_ = std::move(state);
}

Convergence Convergence::from_table(const Carrier& carrier, std::vector<std::uint32_t> table,
                                    std::string name) {
  require_tabulable(carrier, "tabulated convergence");
  if (table.size() != carrier.class_count() + 1) {
    throw ValidationError("convergence table needs " + std::to_string(carrier.class_count() + 1) +
                          " entries, got " + std::to_string(table.size()));
  }
  const std::uint32_t full = full_mask(carrier);
  table[0] = 0;
  for (auto v : table) {
    if ((v & ~full) != 0) throw ValidationError("convergence table entry outside the carrier");
  }
  auto state = std::make_shared<State>(State{carrier, std::move(name), nullptr, std::move(table)});
  return Convergence(std::move(state));
}

ElementSet Convergence::operator()(const InfClass& s) const {
  state_->carrier.require_same(s.carrier());
  if (tabulated()) return ElementSet(state_->carrier, state_->table[s.mask()]);
  return state_->rule(s);
}

ElementSet Convergence::at_mask(std::uint32_t class_mask) const {
  return (*this)(InfClass::from_mask(state_->carrier, class_mask));
}

Convergence Convergence::renamed(std::string name) const {
  auto state = std::make_shared<State>(*state_);
  state->name = std::move(name);
  return Convergence(std::move(state));
}

std::span<const std::uint32_t> Convergence::table() const {
  if (!tabulated()) require_tabulable(state_->carrier, "convergence table");
  return state_->table;
}

// -------------------------------------------------------- the three laws

ElementSet lambda_ls(const InfClass& s) {
  ElementSet top(s.carrier());
  top.insert(s.limsup());
  return upset(top);
}

ElementSet lambda_li(const InfClass& s) {
  ElementSet bottom(s.carrier());
  bottom.insert(s.liminf());
  return downset(bottom);
}

ElementSet lambda_s(const InfClass& s) {
  ElementSet out(s.carrier());
  if (s.liminf() == s.limsup()) out.insert(s.liminf());
  return out;
}

Convergence ls_convergence(const Carrier& carrier) {
  return Convergence(carrier, lambda_ls, "lambda_ls");
}

Convergence li_convergence(const Carrier& carrier) {
  return Convergence(carrier, lambda_li, "lambda_li");
}

Convergence s_convergence(const Carrier& carrier) {
  return Convergence(carrier, lambda_s, "lambda_s");
}

Convergence constant_convergence(const ElementSet& value, std::string name) {
  return Convergence(value.carrier(), [value](const InfClass&) { return value; }, std::move(name));
}

// ------------------------------------------------------ pointwise algebra

Convergence meet_conv(const Convergence& a, const Convergence& b) {
  require_same(a, b);
  const std::string name = a.name().empty() || b.name().empty() ? std::string{}
                                                                 : a.name() + " & " + b.name();
  if (a.tabulated() && b.tabulated()) {
    auto ta = a.table();
    auto tb = b.table();
    std::vector<std::uint32_t> t(ta.size());
    for (std::size_t m = 0; m < t.size(); ++m) t[m] = ta[m] & tb[m];
    return Convergence::from_table(a.carrier(), std::move(t), name);
  }
  return Convergence(a.carrier(), [a, b](const InfClass& s) { return a(s) & b(s); }, name);
}

std::optional<ConvergenceExcess> find_excess(const Convergence& a, const Convergence& b) {
  require_same(a, b);
  auto ta = a.table();
  auto tb = b.table();
  const Carrier c = a.carrier();
  for (std::size_t m = 1; m < ta.size(); ++m) {
    const std::uint32_t extra = ta[m] & ~tb[m];
    if (extra != 0) {
      return ConvergenceExcess{InfClass::from_mask(c, static_cast<std::uint32_t>(m)),
                               c.element(31u - static_cast<unsigned>(std::countl_zero(extra)))};
    }
  }
  return std::nullopt;
}

bool leq_conv(const Convergence& a, const Convergence& b) { return !find_excess(a, b); }

bool equal_conv(const Convergence& a, const Convergence& b) {
  require_same(a, b);
  auto ta = a.table();
  auto tb = b.table();
  return std::equal(ta.begin() + 1, ta.end(), tb.begin() + 1);
}

// ----------------------------------------------------------------- axioms

std::optional<Element> find_L1_violation(const Convergence& lambda) {
  for (const auto& a : lambda.carrier().elements()) {
    if (!lambda(InfClass::singleton(a)).contains(a)) return a;
  }
  return std::nullopt;
}

std::optional<L2Violation> find_L2_violation(const Convergence& lambda) {
  // Removing one value at a time reaches every nonempty subclass, so it
  // suffices to compare each class with its one-smaller subclasses.
  auto t = lambda.table();
  const Carrier c = lambda.carrier();
  for (std::size_t m = 1; m < t.size(); ++m) {
    if (std::has_single_bit(m)) continue;
    std::optional<L2Violation> found;
    bits::for_each_bit(m, [&](unsigned i) {
      const std::size_t part = m & ~(std::size_t{1} << i);
      if (!found && (t[m] & ~t[part]) != 0) {
        found = L2Violation{InfClass::from_mask(c, static_cast<std::uint32_t>(m)),
                            InfClass::from_mask(c, static_cast<std::uint32_t>(part))};
      }
    });
    if (found) return found;
  }
  return std::nullopt;
}

bool check_L1(const Convergence& lambda) { return !find_L1_violation(lambda); }
bool check_L2(const Convergence& lambda) { return !find_L2_violation(lambda); }

bool check_L3(const Convergence& lambda) {
  // The (L3) premise for (S, a) says exactly a ∈ λ*(S).
  return leq_conv(star(lambda), lambda);
}

bool is_hausdorff(const Convergence& lambda) {
  for (auto v : lambda.table().subspan(1)) {
    if (std::popcount(v) > 1) return false;
  }
  return true;
}

// ------------------------------------------------------------------- star

ElementSet star_at(const Convergence& lambda, const InfClass& s) {
  const Carrier c = lambda.carrier();
  std::uint32_t result = full_mask(c);
  bits::for_each_nonempty_submask(s.mask(), [&](std::uint64_t outer) {
    std::uint32_t reach = 0;
    bits::for_each_nonempty_submask(outer, [&](std::uint64_t inner) {
      reach |= lambda.at_mask(static_cast<std::uint32_t>(inner)).bits();
      return true;
    });
    result &= reach;
    return true;
  });
  return ElementSet(c, result);
}

Convergence star(const Convergence& lambda, Warnings* warnings) {
  const Carrier c = lambda.carrier();
  const std::string name = lambda.name().empty() ? std::string{} : lambda.name() + "*";
  if (!lambda.tabulated()) {
    return Convergence(c, [lambda](const InfClass& s) { return star_at(lambda, s); }, name);
  }
  if (warnings != nullptr) {
    if (auto v = find_L1_violation(lambda)) {
      warnings->push_back("star: " + (lambda.name().empty() ? "convergence" : lambda.name()) +
                          " violates (L1) at " + v->to_string());
    }
    if (auto v = find_L2_violation(lambda)) {
      warnings->push_back("star: " + (lambda.name().empty() ? "convergence" : lambda.name()) +
                          " violates (L2) at " + v->whole.to_string() + " vs " +
                          v->part.to_string());
    }
  }

  auto t = lambda.table();
  const std::size_t n = c.size();
  // reach[T] = ⋃ λ(S″) over nonempty S″ ⊆ T.
  std::vector<std::uint32_t> reach(t.begin(), t.end());
  reach[0] = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t m = 0; m < reach.size(); ++m) {
      if (m & bit) reach[m] |= reach[m ^ bit];
    }
  }
  // out[S] = ⋂ reach[S′] over nonempty S′ ⊆ S.
  std::vector<std::uint32_t>& out = reach;
  out[0] = full_mask(c);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t m = 0; m < out.size(); ++m) {
      if (m & bit) out[m] &= out[m ^ bit];
    }
  }
  out[0] = 0;
  return Convergence::from_table(c, std::move(out), name);
}

// ------------------------------------------------------------------ (ħ)

std::optional<InfClass> hbar_witness(const InfClass& s) {
  const Carrier c = s.carrier();
  std::optional<InfClass> witness;
  bits::for_each_nonempty_submask(s.mask(), [&](std::uint64_t candidate) {
    const Element top = join_all(ElementSet(c, static_cast<std::uint32_t>(candidate)));
    const bool stable = bits::for_each_nonempty_submask(candidate, [&](std::uint64_t sub) {
      return join_all(ElementSet(c, static_cast<std::uint32_t>(sub))) == top;
    });
    if (stable) witness = InfClass::from_mask(c, static_cast<std::uint32_t>(candidate));
    return !stable;
  });
  return witness;
}

HbarReport check_hbar(const Carrier& carrier) {
  HbarReport report;
  for_each_class(carrier, [&](const InfClass& s) {
    ++report.classes_checked;
    auto w = hbar_witness(s);
    if (!w) {
      if (report.holds) report.failure = s;
      report.holds = false;
      return;
    }
    if (w->size() != 1) report.all_witnesses_singleton = false;
  });
  return report;
}

}  // namespace convlab
