#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "condensed/locconst.hpp"
#include "condensed/quotients.hpp"
#include "condensed/tower.hpp"

namespace condensed {

/// An element of a presheaf value set, in the presheaf's own encoding.
/// Equality and ordering are componentwise, so elements can key maps.
using Element = std::vector<std::size_t>;

/// A presheaf on truncated towers: a value set per tower and a restriction
/// along every tower map, both decidable. Elements come in a fixed
/// deterministic order.
class TowerPresheaf {
 public:
  virtual ~TowerPresheaf() = default;
  virtual std::string name() const = 0;

  /// Elements of X(S). At most cap+1 are produced; a result of size cap+1
  /// means the enumeration was cut off by the budget.
  virtual std::vector<Element> enumerate(const Tower& S, std::size_t cap) const = 0;

  /// X(g) : X(g.dst) -> X(g.src) for a tower map g.
  virtual Element restrict(const TowerMap& g, const Element& x) const = 0;

  /// A canonical candidate counterexample in X(S), if the presheaf has one
  /// (the identity tower map for hom presheaves). Oracles test it first so
  /// failure witnesses are the expected ones.
  virtual std::optional<Element> distinguished_element(const Tower& S) const {
    (void)S;
    return std::nullopt;
  }
};

/// S |-> locally constant maps S -> Y; elements are top-level value tables.
class LocConstPresheaf : public TowerPresheaf {
 public:
  explicit LocConstPresheaf(FinSet target) : target_(std::move(target)) {}
  std::string name() const override;
  std::vector<Element> enumerate(const Tower& S, std::size_t cap) const override;
  Element restrict(const TowerMap& g, const Element& x) const override;
  const FinSet& target() const { return target_; }

 private:
  FinSet target_;
};

/// S |-> depth-aligned tower maps S -> M, carried by their table at the
/// aligned level r = min(depth S, depth M). Restrictions push values down
/// exactly and lift with the minimal section where alignment forces a lift,
/// so the presheaf is deliberately lossy: it is the designed non-discrete
/// example when M grows with the level.
class TowerHomPresheaf : public TowerPresheaf {
 public:
  explicit TowerHomPresheaf(Tower target) : target_(std::move(target)) {}
  std::string name() const override;
  std::vector<Element> enumerate(const Tower& S, std::size_t cap) const override;
  Element restrict(const TowerMap& g, const Element& x) const override;
  const Tower& target() const { return target_; }
  std::size_t aligned_level(const Tower& S) const;
  std::optional<Element> distinguished_element(const Tower& S) const override;

 private:
  Tower target_;
};

/// S |-> Y with identity restrictions: deliberately breaks product
/// preservation for |Y| > 1.
class ConstantPresheafNaive : public TowerPresheaf {
 public:
  explicit ConstantPresheafNaive(FinSet value) : value_(std::move(value)) {}
  std::string name() const override;
  std::vector<Element> enumerate(const Tower& S, std::size_t cap) const override;
  Element restrict(const TowerMap& g, const Element& x) const override;

 private:
  FinSet value_;
};

/// The first `depth+1` levels of a tower.
Tower truncate_tower(const Tower& t, std::size_t depth);

/// The collapse-to-a-point map S -> point (depth 0 target).
TowerMap point_map(const Tower& S);

/// The thread through `top_element`, as a map from the point tower of the
/// same depth into S.
TowerMap thread_inclusion(const Tower& S, std::size_t top_element);

/// The projection to the level-n finite quotient (the constant depth-0
/// tower on S_n).
TowerMap level_projection(const Tower& S, std::size_t n);

/// The projection to a discrete quotient (constant depth-0 tower on the
/// block set, aligned at the quotient's canonical level).
TowerMap dq_projection_map(const DiscreteQuotient& q);

/// The underlying set U(X) = X(point): its elements in presheaf order.
std::vector<Element> underlying_elements(const TowerPresheaf& X, std::size_t cap);
FinSet underlying(const TowerPresheaf& X, std::size_t cap);

/// Per-(X, S) context for the counit: enumerates X(S) once, indexes every
/// element by its thread trace (the tuple of restrictions along all thread
/// inclusions, identified with underlying elements), and glues from there.
class CounitContext {
 public:
  CounitContext(const TowerPresheaf& X, Tower S, std::size_t budget);

  const std::vector<Element>& elements() const { return elements_; }
  const std::vector<Element>& underlying_elems() const { return underlying_; }
  FinSet underlying_set() const { return FinSet(underlying_.size()); }

  /// Thread trace of X(S) element i; entries index `underlying_elems()`,
  /// or are npos when the thread restriction is not a transported
  /// underlying element.
  const std::vector<std::size_t>& trace(std::size_t i) const { return traces_[i]; }
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  /// The counit at f : S -> U(X): the unique element whose restriction to
  /// each fibre of f is the transported constant. Throws
  /// ProductPreservationFailed when no (or no unique) such element exists,
  /// ValueNotInUnderlying when f's target is not U(X).
  Element counit(const LocConstMap& f) const;
  std::size_t counit_index(const LocConstMap& f) const;

 private:
  const TowerPresheaf& X_;
  Tower S_;
  std::vector<Element> elements_;
  std::vector<Element> underlying_;
  std::vector<std::vector<std::size_t>> traces_;
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> by_trace_;
};

/// Executable extensionality (elements of X(S) are determined by their
/// thread traces). Returns false with a witness pair when two elements
/// share a trace.
bool presheaf_ext_check(const TowerPresheaf& X, const Tower& S, std::size_t budget,
                        std::pair<Element, Element>* witness = nullptr);

/// Is X(S) -> prod_i X(S_i) bijective for the clopen decomposition of S by
/// the given partition of a level?
bool check_product_preservation(const TowerPresheaf& X, const Tower& S, std::size_t level,
                                const Partition& pieces, std::size_t budget,
                                std::string* witness = nullptr);

/// A morphism of presheaves, given componentwise.
struct PresheafMorphism {
  const TowerPresheaf* src = nullptr;
  const TowerPresheaf* dst = nullptr;
  std::function<Element(const Tower&, const Element&)> component;
};

/// Counit naturality in the tower variable: X(g) . eps_S = eps_T . (- . g)
/// for g : T -> S, checked over all of LocConst(S, U(X)).
bool check_counit_natural_in_S(const TowerPresheaf& X, const TowerMap& g, std::size_t budget,
                               std::string* witness = nullptr);

/// Counit naturality in the presheaf variable for a morphism phi : X -> Y,
/// at the tower S.
bool check_counit_natural_in_X(const PresheafMorphism& phi, const Tower& S, std::size_t budget,
                               std::string* witness = nullptr);

/// Both triangle identities for the constant-sheaf / underlying-set
/// adjunction, instantiated at target Y and tower S (first triangle), and
/// at the presheaf X (second triangle).
bool check_triangle_LY(const FinSet& Y, const Tower& S, std::size_t budget,
                       std::string* witness = nullptr);
bool check_triangle_UX(const TowerPresheaf& X, std::size_t budget,
                       std::string* witness = nullptr);

enum class Verdict { pass, fail, inconclusive };
std::string to_string(Verdict v);

struct DiscretenessReport {
  std::string oracle;
  std::size_t depth = 0;
  Verdict verdict = Verdict::inconclusive;
  std::string witness;  // empty unless verdict == fail (or a budget note)
  std::map<std::string, std::uint64_t> stats;
};

/// Oracle 1: is the counit LocConst(S, U(X)) -> X(S) an isomorphism at
/// this truncation depth?
DiscretenessReport counit_iso_report(const TowerPresheaf& X, const Tower& t, std::size_t depth,
                                     std::size_t budget);

/// Oracle 2: is the canonical map colim_n X(S_n) -> X(S) over the level
/// quotients (computed as a filtered colimit via union-find) bijective?
/// fail carries a witness element not hit by any finite level.
DiscretenessReport colimit_condition_report(const TowerPresheaf& X, const Tower& t,
                                            std::size_t depth, std::size_t budget);

/// X on a finite set k (as a depth-0 constant tower) compared with the
/// product of its points.
bool finite_level_comparison(const TowerPresheaf& X, std::size_t k, std::size_t budget,
                             std::string* witness = nullptr);

struct KanReport {
  bool projection_initial = false;
  bool colimits_bijective = false;
  std::size_t dq_colimit_size = 0;
  std::size_t comma_colimit_size = 0;
};

/// The comparison of Kan-extension shapes: the functor from the discrete
/// quotient poset to the comma category of maps-to-finite-sets is initial,
/// so the colimits of X over both shapes agree.
KanReport kan_comparison(const TowerPresheaf& X, const Tower& t, std::size_t budget,
                         std::size_t partition_bound = kDefaultPartitionBound);

inline constexpr std::size_t kDefaultBudget = 10000;

}  // namespace condensed
