#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "condensed/presheaf.hpp"

namespace condensed {

/// A finite ring with explicit operation tables, so every axiom is an
/// exhaustive check.
struct FinRing {
  FinSet carrier;
  std::vector<std::size_t> add;  // carrier.size^2, row-major
  std::vector<std::size_t> mul;
  std::size_t zero = 0;
  std::size_t one = 0;

  std::size_t size() const { return carrier.size; }
  std::size_t plus(std::size_t a, std::size_t b) const { return add[a * size() + b]; }
  std::size_t times(std::size_t a, std::size_t b) const { return mul[a * size() + b]; }

  static FinRing cyclic(std::size_t n);  // Z/n
};

ValidationReport validate_ring(const FinRing& R);

struct FinModule {
  FinRing ring;
  FinSet carrier;
  std::vector<std::size_t> add;     // carrier.size^2
  std::vector<std::size_t> action;  // ring.size x carrier.size
  std::size_t zero = 0;

  std::size_t size() const { return carrier.size; }
  std::size_t plus(std::size_t a, std::size_t b) const { return add[a * size() + b]; }
  std::size_t smul(std::size_t r, std::size_t a) const { return action[r * size() + a]; }

  static FinModule regular(const FinRing& R);  // R over itself
  static FinModule zero_module(const FinRing& R);
};

ValidationReport validate_module(const FinModule& M);

/// A tower presheaf whose value sets carry module structure and whose
/// restrictions are linear.
class ModuleTowerPresheaf : public TowerPresheaf {
 public:
  virtual const FinRing& ring() const = 0;
  virtual Element add(const Tower& S, const Element& a, const Element& b) const = 0;
  virtual Element smul(const Tower& S, std::size_t r, const Element& a) const = 0;
  virtual Element zero(const Tower& S) const = 0;
};

/// S |-> locally constant maps into M with pointwise module structure.
class LocConstModulePresheaf : public ModuleTowerPresheaf {
 public:
  explicit LocConstModulePresheaf(FinModule M) : module_(std::move(M)) {}
  std::string name() const override;
  std::vector<Element> enumerate(const Tower& S, std::size_t cap) const override;
  Element restrict(const TowerMap& g, const Element& x) const override;
  const FinRing& ring() const override { return module_.ring; }
  Element add(const Tower& S, const Element& a, const Element& b) const override;
  Element smul(const Tower& S, std::size_t r, const Element& a) const override;
  Element zero(const Tower& S) const override;
  const FinModule& module() const { return module_; }

 private:
  FinModule module_;
};

/// The hom presheaf into the Z/2-valued Cantor group: level n carries
/// (Z/2)^n with bitwise addition, transitions drop the last coordinate.
/// Deliberately non-discrete, like its set-level counterpart.
class TowerHomModulePresheaf : public ModuleTowerPresheaf {
 public:
  explicit TowerHomModulePresheaf(std::size_t depth);
  std::string name() const override;
  std::vector<Element> enumerate(const Tower& S, std::size_t cap) const override;
  Element restrict(const TowerMap& g, const Element& x) const override;
  std::optional<Element> distinguished_element(const Tower& S) const override;
  const FinRing& ring() const override { return ring_; }
  Element add(const Tower& S, const Element& a, const Element& b) const override;
  Element smul(const Tower& S, std::size_t r, const Element& a) const override;
  Element zero(const Tower& S) const override;

 private:
  FinRing ring_;
  TowerHomPresheaf base_;
};

/// Erases the module structure. Value sets and restrictions are shared, so
/// evaluation commutes with forgetting by construction; tests verify this
/// against an independently built set-level presheaf.
const TowerPresheaf& forget_presheaf(const ModuleTowerPresheaf& Xm);

LocConstModulePresheaf locconst_module(const FinModule& M);

/// The counit of the underlying set-level adjunction at
/// forget(locconst_module(M)) is additive, scalar-equivariant, and
/// bijective, all exhaustively.
bool check_counit_linearity(const FinModule& M, const Tower& S, std::size_t budget,
                            std::string* witness = nullptr);

struct TheoremCReport {
  DiscretenessReport module_level;
  DiscretenessReport set_level;
  bool consistent = false;
};

/// Runs the colimit-condition oracle at module level (the set-level
/// union-find plus well-definedness of the induced module structure) and at
/// set level, and compares the verdicts.
TheoremCReport theorem_c_report(const ModuleTowerPresheaf& Xm, const Tower& t, std::size_t depth,
                                std::size_t budget);

/// Module-level colimit condition: the set-level report, with the linearity
/// of the identification maps verified on all (budget-capped) pairs.
DiscretenessReport module_colimit_condition_report(const ModuleTowerPresheaf& Xm, const Tower& t,
                                                   std::size_t depth, std::size_t budget);

struct ModulePresheafMorphism {
  const ModuleTowerPresheaf* src = nullptr;
  const ModuleTowerPresheaf* dst = nullptr;
  std::function<Element(const Tower&, const Element&)> component;
};

/// g is a componentwise isomorphism iff forget(g) is; verified by direct
/// bijectivity checks on the given towers. Throws NotLinear when a
/// component fails additivity or equivariance.
bool iso_reflection_check(const ModulePresheafMorphism& g, const std::vector<Tower>& corpus,
                          std::size_t budget);

}  // namespace condensed
