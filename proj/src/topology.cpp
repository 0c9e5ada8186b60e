#include "convlab/topology.hpp"

#include <algorithm>

#include "convlab/bits.hpp"

namespace convlab {

namespace {

std::uint32_t full_mask(const Carrier& c) {
  return static_cast<std::uint32_t>(bits::low_mask(c.size()));
}

bool open_under(std::span<const std::uint32_t> nbhd, std::uint32_t s) {
  bool ok = true;
  bits::for_each_bit(s, [&](unsigned a) { ok = ok && (nbhd[a] & ~s) == 0; });
  return ok;
}

template <class F>
void for_each_subset(const Carrier& c, F&& f) {
  require_tabulable(c, "subset enumeration");
  const std::uint64_t count = std::uint64_t{1} << c.size();
  for (std::uint64_t m = 0; m < count; ++m) f(static_cast<std::uint32_t>(m));
}

}  // namespace

// --------------------------------------------------------------- Topology

Topology Topology::from_neighbourhoods(const Carrier& carrier, std::vector<std::uint32_t> nbhd) {
  if (nbhd.size() != carrier.size()) {
    throw ValidationError("need one neighbourhood per point");
  }
  const std::uint32_t full = full_mask(carrier);
  for (std::uint32_t a = 0; a < carrier.size(); ++a) {
    if ((nbhd[a] & ~full) != 0 || ((nbhd[a] >> a) & 1u) == 0) {
      throw ValidationError("neighbourhood of point " + std::to_string(a) + " is invalid");
    }
    bits::for_each_bit(nbhd[a], [&](unsigned b) {
      if ((nbhd[b] & ~nbhd[a]) != 0) {
        throw ValidationError("neighbourhoods are not transitive at " + std::to_string(a));
      }
    });
  }
  return Topology(carrier, std::move(nbhd));
}

Topology Topology::from_opens(const Carrier& carrier, std::span<const ElementSet> opens) {
  const std::uint32_t full = full_mask(carrier);
  std::vector<std::uint32_t> family;
  for (const auto& s : opens) {
    carrier.require_same(s.carrier());
    family.push_back(s.bits());
  }
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  if (family.empty() || family.front() != 0 || family.back() != full) {
    throw ValidationError("open family must contain the empty set and the carrier");
  }
  std::vector<std::uint32_t> nbhd(carrier.size(), full);
  for (auto s : family) {
    bits::for_each_bit(s, [&](unsigned a) { nbhd[a] &= s; });
  }
  // Every member is a union of the U_a; the family is a topology iff it holds
  // all such unions, i.e. iff it has as many members as there are of them.
  std::uint64_t expected = 0;
  for_each_subset(carrier, [&](std::uint32_t s) { expected += open_under(nbhd, s) ? 1 : 0; });
  if (expected != family.size()) {
    throw ValidationError("open family is not closed under unions and intersections");
  }
  return Topology(carrier, std::move(nbhd));
}

ElementSet Topology::neighbourhood(const Element& a) const {
  carrier_.require_same(a.carrier());
  return ElementSet(carrier_, nbhd_[a.mask()]);
}

bool Topology::is_open(const ElementSet& s) const {
  carrier_.require_same(s.carrier());
  return open_under(nbhd_, s.bits());
}

std::vector<ElementSet> Topology::opens() const {
  std::vector<ElementSet> out;
  for_each_subset(carrier_, [&](std::uint32_t s) {
    if (open_under(nbhd_, s)) out.emplace_back(carrier_, s);
  });
  return out;
}

std::vector<ElementSet> Topology::closed_sets() const {
  std::vector<ElementSet> out;
  for_each_subset(carrier_, [&](std::uint32_t s) {
    if (open_under(nbhd_, ~s & full_mask(carrier_))) out.emplace_back(carrier_, s);
  });
  return out;
}

std::uint64_t Topology::open_count() const {
  std::uint64_t n = 0;
  for_each_subset(carrier_, [&](std::uint32_t s) { n += open_under(nbhd_, s) ? 1 : 0; });
  return n;
}

bool Topology::coarser_than(const Topology& other) const {
  carrier_.require_same(other.carrier_);
  return std::all_of(nbhd_.begin(), nbhd_.end(),
                     [&](std::uint32_t u) { return open_under(other.nbhd_, u); });
}

Topology discrete_topology(const Carrier& carrier) {
  std::vector<std::uint32_t> nbhd(carrier.size());
  for (std::uint32_t a = 0; a < carrier.size(); ++a) nbhd[a] = std::uint32_t{1} << a;
  return Topology::from_neighbourhoods(carrier, std::move(nbhd));
}

Topology antidiscrete_topology(const Carrier& carrier) {
  return Topology::from_neighbourhoods(carrier,
                                       std::vector<std::uint32_t>(carrier.size(), full_mask(carrier)));
}

Topology generate(const Carrier& carrier, std::span<const ElementSet> subbase) {
  std::vector<std::uint32_t> nbhd(carrier.size(), full_mask(carrier));
  for (const auto& s : subbase) {
    carrier.require_same(s.carrier());
    bits::for_each_bit(s.bits(), [&](unsigned a) { nbhd[a] &= s.bits(); });
  }
  return Topology::from_neighbourhoods(carrier, std::move(nbhd));
}

// -------------------------------------------------------------- synthesis

ElementSet sequential_closure_step(const Convergence& lambda, const ElementSet& a) {
  lambda.carrier().require_same(a.carrier());
  std::uint32_t out = 0;
  bits::for_each_nonempty_submask(a.bits(), [&](std::uint64_t s) {
    out |= lambda.at_mask(static_cast<std::uint32_t>(s)).bits();
    return true;
  });
  return ElementSet(a.carrier(), out);
}

namespace {

void require_l1_l2(const Convergence& lambda) {
  const std::string who = lambda.name().empty() ? "convergence" : lambda.name();
  if (auto v = find_L1_violation(lambda)) {
    throw PreconditionError(who + " violates (L1): " + v->to_string() +
                            " is not a limit of its constant sequence");
  }
  if (auto v = find_L2_violation(lambda)) {
    throw PreconditionError(who + " violates (L2): limits of class " + v->whole.to_string() +
                            " are not limits of subclass " + v->part.to_string());
  }
}

Topology synthesize_exhaustive(const Convergence& lambda) {
  const Carrier c = lambda.carrier();
  auto t = lambda.table();
  // reach[A] = u_λ(A), via a subset-union transform of the class table.
  std::vector<std::uint32_t> reach(t.begin(), t.end());
  reach[0] = 0;
  for (std::uint32_t i = 0; i < c.size(); ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t m = 0; m < reach.size(); ++m) {
      if (m & bit) reach[m] |= reach[m ^ bit];
    }
  }
  const std::uint32_t full = full_mask(c);
  std::vector<ElementSet> opens;
  for (std::size_t a = 0; a < reach.size(); ++a) {
    if ((reach[a] & ~a) == 0) opens.emplace_back(c, ~static_cast<std::uint32_t>(a) & full);
  }
  return Topology::from_opens(c, opens);
}

Topology synthesize_by_closure(const Convergence& lambda) {
  const Carrier c = lambda.carrier();
  std::vector<std::uint32_t> point_closure(c.size());
  for (std::uint32_t b = 0; b < c.size(); ++b) {
    ElementSet cl(c, std::uint32_t{1} << b);
    while (true) {
      const ElementSet next = cl | sequential_closure_step(lambda, cl);
      if (next == cl) break;
      cl = next;
    }
    point_closure[b] = cl.bits();
  }
  // a lies in every open set around b iff b lies in the closure of a.
  std::vector<std::uint32_t> nbhd(c.size(), 0);
  for (std::uint32_t b = 0; b < c.size(); ++b) {
    bits::for_each_bit(point_closure[b], [&](unsigned a) { nbhd[a] |= std::uint32_t{1} << b; });
  }
  return Topology::from_neighbourhoods(c, std::move(nbhd));
}

}  // namespace

Topology synthesize_O_lambda(const Convergence& lambda, SynthesisStrategy strategy) {
  require_l1_l2(lambda);
  if (strategy == SynthesisStrategy::automatic) {
    strategy = lambda.carrier().atoms() <= 3 ? SynthesisStrategy::exhaustive
                                             : SynthesisStrategy::closure_iteration;
  }
  return strategy == SynthesisStrategy::exhaustive ? synthesize_exhaustive(lambda)
                                                   : synthesize_by_closure(lambda);
}

// ----------------------------------------------------------------- limits

ElementSet lim_topo(const Topology& o, const InfClass& s) {
  const Carrier c = o.carrier();
  c.require_same(s.carrier());
  std::uint32_t out = 0;
  auto nbhd = o.neighbourhoods();
  for (std::uint32_t a = 0; a < c.size(); ++a) {
    if ((s.mask() & ~nbhd[a]) == 0) out |= std::uint32_t{1} << a;
  }
  return ElementSet(c, out);
}

ElementSet lim_topo(const Topology& o, const EPSeq& x) { return lim_topo(o, inf_class(x)); }

Topology join_topologies(const Topology& a, const Topology& b) {
  a.carrier().require_same(b.carrier());
  const Carrier c = a.carrier();
  std::vector<ElementSet> subbase;
  for (auto u : a.neighbourhoods()) subbase.emplace_back(c, u);
  for (auto u : b.neighbourhoods()) subbase.emplace_back(c, u);
  return generate(c, subbase);
}

Convergence lim_of_topology_as_convergence(const Topology& o) {
  return Convergence(
      o.carrier(), [o](const InfClass& s) { return lim_topo(o, representative(s)); }, "lim_O");
}

bool is_sequential(const Topology& o) {
  return synthesize_O_lambda(lim_of_topology_as_convergence(o)) == o;
}

// ----------------------------------------------------- closed-set shapes

namespace {

// Does every strictly monotone chain inside `f` (decreasing for upward,
// increasing for downward) have its meet (resp. join) inside `f`?
bool chain_limits_inside(const Carrier& c, std::uint32_t f, Orientation orientation) {
  const bool down = orientation == Orientation::upward;
  std::vector<std::uint32_t> chain;
  bool ok = true;
  auto extend = [&](auto&& self) -> void {
    if (!ok) return;
    std::uint32_t limit = down ? c.size() - 1 : 0;
    for (auto e : chain) limit = down ? (limit & e) : (limit | e);
    if (((f >> limit) & 1u) == 0) {
      ok = false;
      return;
    }
    const std::uint32_t last = chain.back();
    bits::for_each_bit(f, [&](unsigned next) {
      const bool strictly = down ? ((next & ~last) == 0 && next != last)
                                 : ((last & ~next) == 0 && next != last);
      if (strictly && ok) {
        chain.push_back(next);
        self(self);
        chain.pop_back();
      }
    });
  };
  bits::for_each_bit(f, [&](unsigned start) {
    chain.assign(1, start);
    extend(extend);
  });
  return ok;
}

}  // namespace

std::vector<ElementSet> order_closed_family(const Carrier& c, Orientation orientation) {
  std::vector<ElementSet> out;
  for_each_subset(c, [&](std::uint32_t f) {
    const ElementSet s(c, f);
    const bool shaped =
        orientation == Orientation::upward ? is_upward_closed(s) : is_downward_closed(s);
    if (shaped && chain_limits_inside(c, f, orientation)) out.push_back(s);
  });
  return out;
}

bool check_closed_char(const Topology& o, Orientation orientation) {
  return o.closed_sets() == order_closed_family(o.carrier(), orientation);
}

bool complement_homeomorphism_check(const Topology& a, const Topology& b) {
  a.carrier().require_same(b.carrier());
  for (const auto& u : a.opens()) {
    if (!b.is_open(complement_image(u))) return false;
  }
  for (const auto& v : b.opens()) {
    if (!a.is_open(complement_image(v))) return false;
  }
  return true;
}

SpaceProperties space_properties(const Topology& o) {
  SpaceProperties p;
  auto nbhd = o.neighbourhoods();
  p.t0 = true;
  for (std::uint32_t a = 0; a < nbhd.size() && p.t0; ++a) {
    for (std::uint32_t b = a + 1; b < nbhd.size(); ++b) {
      if (((nbhd[a] >> b) & 1u) && ((nbhd[b] >> a) & 1u)) {
        p.t0 = false;
        break;
      }
    }
  }
  p.connected = true;
  const std::uint32_t full = full_mask(o.carrier());
  for (const auto& u : o.opens()) {
    if (u.bits() != 0 && u.bits() != full && o.is_closed(u)) {
      p.connected = false;
      break;
    }
  }
  return p;
}

}  // namespace convlab
