#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "convlab/algebra.hpp"
#include "convlab/seqclass.hpp"

namespace convlab {

using Warnings = std::vector<std::string>;

/// A convergence restricted to the class quotient: InfClass -> set of limits.
///
/// On carriers with at most kMaxSweepAtoms atoms the rule is evaluated once
/// per class and stored as a table indexed by class mask; above that it is
/// kept as a lazy rule and only pointwise queries are available.
class Convergence {
 public:
  using Rule = std::function<ElementSet(const InfClass&)>;

  Convergence(const Carrier& carrier, Rule rule, std::string name = {});
  /// `table[m]` holds the limit mask of class m; entry 0 is ignored.
  static Convergence from_table(const Carrier& carrier, std::vector<std::uint32_t> table,
                                std::string name = {});

  ElementSet operator()(const InfClass& s) const;
  ElementSet at_mask(std::uint32_t class_mask) const;

  Carrier carrier() const { return state_->carrier; }
  const std::string& name() const { return state_->name; }
  Convergence renamed(std::string name) const;

  bool tabulated() const noexcept { return !state_->table.empty(); }
  /// Throws ScaleError for lazy convergences.
  std::span<const std::uint32_t> table() const;

 private:
  struct State {
    Carrier carrier;
    std::string name;
    Rule rule;
    std::vector<std::uint32_t> table;
  };
  explicit Convergence(std::shared_ptr<const State> state) : state_(std::move(state)) {}

  std::shared_ptr<const State> state_;
};

/// {limsup}↑
ElementSet lambda_ls(const InfClass& s);
/// {liminf}↓
ElementSet lambda_li(const InfClass& s);
/// {x} when liminf = limsup = x, otherwise empty.
ElementSet lambda_s(const InfClass& s);

Convergence ls_convergence(const Carrier& carrier);
Convergence li_convergence(const Carrier& carrier);
Convergence s_convergence(const Carrier& carrier);
/// λ(S) = value for every class.
Convergence constant_convergence(const ElementSet& value, std::string name = {});

Convergence meet_conv(const Convergence& a, const Convergence& b);
bool leq_conv(const Convergence& a, const Convergence& b);
bool equal_conv(const Convergence& a, const Convergence& b);

/// First class (mask order) where a(S) ⊄ b(S), with the largest offending
/// element.
struct ConvergenceExcess {
  InfClass cls;
  Element element;
};
std::optional<ConvergenceExcess> find_excess(const Convergence& a, const Convergence& b);

std::optional<Element> find_L1_violation(const Convergence& lambda);
/// A pair S′ ⊆ S with λ(S) ⊄ λ(S′).
struct L2Violation {
  InfClass whole;
  InfClass part;
};
std::optional<L2Violation> find_L2_violation(const Convergence& lambda);

bool check_L1(const Convergence& lambda);
bool check_L2(const Convergence& lambda);
bool check_L3(const Convergence& lambda);

bool is_hausdorff(const Convergence& lambda);

/// λ*(S) = ⋂_{∅≠S′⊆S} ⋃_{∅≠S″⊆S′} λ(S″), by literal subset enumeration.
ElementSet star_at(const Convergence& lambda, const InfClass& s);

/// The (L1)–(L3) closure. Tabulated inputs go through two subset transforms;
/// lazy inputs evaluate star_at per query. If `warnings` is given and λ fails
/// (L1) or (L2) a message is appended.
Convergence star(const Convergence& lambda, Warnings* warnings = nullptr);

/// First S′ ⊆ S (mask order) all of whose nonempty subclasses share its join.
std::optional<InfClass> hbar_witness(const InfClass& s);

struct HbarReport {
  bool holds = true;
  std::uint64_t classes_checked = 0;
  bool all_witnesses_singleton = true;
  std::optional<InfClass> failure;
};
HbarReport check_hbar(const Carrier& carrier);

}  // namespace convlab
