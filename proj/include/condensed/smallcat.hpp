#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "condensed/finset.hpp"

namespace condensed {

inline constexpr std::size_t kNoArrow = std::numeric_limits<std::size_t>::max();

/// A finite category: objects 0..num_objects-1, arrows with explicit
/// source/target, identities per object, and a flat composition table.
/// comp[g * arrows + f] is g . f when cod(f) = dom(g), else kNoArrow.
struct FinCat {
  struct Arrow {
    std::size_t src = 0;
    std::size_t dst = 0;
  };

  std::size_t num_objects = 0;
  std::vector<Arrow> arrows;
  std::vector<std::size_t> ids;   // identity arrow per object
  std::vector<std::size_t> comp;  // arrows.size()^2 entries

  std::size_t num_arrows() const { return arrows.size(); }
  std::size_t compose(std::size_t g, std::size_t f) const { return comp[g * arrows.size() + f]; }
  std::vector<std::size_t> hom(std::size_t a, std::size_t b) const;
  bool is_iso(std::size_t f) const;

  static FinCat discrete(std::size_t n);
  /// Thin category from a reflexive-transitive relation (le[a][b] = a -> b exists).
  static FinCat from_relation(const std::vector<std::vector<bool>>& le);
  static FinCat chain(std::size_t n) ;
  static FinCat opposite(const FinCat& c);
};

struct ValidationIssue {
  std::string what;
};
using ValidationReport = std::vector<ValidationIssue>;

ValidationReport validate_category(const FinCat& c);

struct FunctorData {
  FinCat src;
  FinCat dst;
  std::vector<std::size_t> obj_map;
  std::vector<std::size_t> arrow_map;

  static FunctorData identity(const FinCat& c);
  /// The same object/arrow assignment viewed as a functor between opposites.
  static FunctorData opposite(const FunctorData& f);
};

ValidationReport validate_functor(const FunctorData& f);
FunctorData compose_functors(const FunctorData& g, const FunctorData& f);

struct NatTransData {
  FunctorData src_functor;
  FunctorData dst_functor;
  std::vector<std::size_t> components;  // arrow of dst category per src object
};

bool is_natural(const NatTransData& t);

struct SetDiagram {
  FinCat index;
  std::vector<FinSet> value_sets;
  std::vector<FinMap> value_maps;  // one per arrow of the index
};

ValidationReport validate_diagram(const SetDiagram& d);

/// Full comma category: side=left builds F/D (objects F(X) -> Y),
/// side=right builds D/F (objects Y -> F(X)).
enum class CommaSide { left, right };

struct CommaCategory {
  FinCat cat;
  // object k of cat is the arrow object_arrows[k] of f.dst, with the
  // f.src object recorded alongside
  std::vector<std::size_t> object_arrows;
  std::vector<std::size_t> object_sources;  // object of f.src
};

CommaCategory comma_category(const FunctorData& f, CommaSide side);

/// The slice of the comma category at a fixed target object y: for
/// side=left, arrows F(X) -> y; for side=right, arrows y -> F(X).
CommaCategory comma_slice(const FunctorData& f, CommaSide side, std::size_t y);

/// Nonempty and one component in the undirected graph induced by arrows.
bool is_connected(const FinCat& c);

bool is_initial_functor(const FunctorData& f);
bool is_final_functor(const FunctorData& f);

std::pair<FinSet, std::vector<FinMap>> set_limit(const SetDiagram& d);
std::pair<FinSet, std::vector<FinMap>> set_colimit(const SetDiagram& d);

struct ComparisonReport {
  bool functor_initial = false;
  bool functor_final = false;
  bool limit_bijective = false;    // lim d -> lim (d . f)
  bool colimit_bijective = false;  // colim (d . f) -> colim d
};

/// Restriction of d along f, with canonical comparison maps in both
/// directions. Initiality/finality is computed here so the precondition
/// is never silently skipped; callers read the flags.
ComparisonReport restriction_comparison(const FunctorData& f, const SetDiagram& d);

struct AdjunctionData {
  FunctorData left;       // L : C -> D
  FunctorData right;      // R : D -> C
  NatTransData unit;      // Id_C => R . L
  NatTransData counit;    // L . R => Id_D
};

/// Both triangle identities at every object, plus naturality of unit/counit.
bool check_adjunction(const AdjunctionData& adj);

bool left_adjoint_fully_faithful(const AdjunctionData& adj);

/// Whether the counit at x is an isomorphism. Requires a fully faithful
/// left adjoint; by the essential-image characterization this agrees with
/// brute-force membership (tested externally).
bool counit_detects_essential_image(const AdjunctionData& adj, std::size_t x);

/// Brute-force: exists y with L(y) isomorphic to x.
bool in_essential_image(const AdjunctionData& adj, std::size_t x);

/// Given a natural isomorphism witness R . L => Id, verifies the unit is a
/// componentwise isomorphism and L's hom-maps are bijections.
bool unit_iso_from_counterpart(const AdjunctionData& adj, const NatTransData& witness);

}  // namespace condensed
