#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ringoid/group.hpp"

namespace ringoid {

struct Arrow {
  Elem src;
  Elem tgt;
  bool operator==(const Arrow&) const = default;
};

/// A finite category with dense composition: then(f, g) is g∘f, defined
/// exactly when tgt f = src g (kNone otherwise).
class FiniteCategory {
 public:
  FiniteCategory() = default;
  /// `compose` has |arrows|² entries indexed f·|arrows| + g. Throws
  /// MalformedInput on shape or range errors; laws are left to validate.
  FiniteCategory(std::size_t objects, std::vector<Arrow> arrows, std::vector<Elem> identity, std::vector<Elem> compose);

  std::size_t object_count() const noexcept { return objects_; }
  std::size_t morphism_count() const noexcept { return arrows_.size(); }
  Elem src(Elem f) const { return arrows_[f].src; }
  Elem tgt(Elem f) const { return arrows_[f].tgt; }
  Elem identity(Elem a) const { return identity_[a]; }
  Elem then(Elem f, Elem g) const { return compose_[static_cast<std::size_t>(f) * arrows_.size() + g]; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  const std::vector<Elem>& identities() const noexcept { return identity_; }
  const std::vector<Elem>& compose_table() const noexcept { return compose_; }
  /// Morphisms a -> b in index order.
  const std::vector<Elem>& hom(Elem a, Elem b) const { return hom_[static_cast<std::size_t>(a) * objects_ + b]; }

  bool operator==(const FiniteCategory& o) const {
    return objects_ == o.objects_ && arrows_ == o.arrows_ && identity_ == o.identity_ && compose_ == o.compose_;
  }

 private:
  std::size_t objects_ = 0;
  std::vector<Arrow> arrows_;
  std::vector<Elem> identity_;
  std::vector<Elem> compose_;
  std::vector<std::vector<Elem>> hom_;
};

using CategoryRef = std::shared_ptr<const FiniteCategory>;

CategoryRef make_category(std::size_t objects, std::vector<Arrow> arrows, std::vector<Elem> identity,
                          std::vector<Elem> compose);
/// Fills the composition table from `compose(f, g)` = g∘f on composable pairs.
CategoryRef make_category(std::size_t objects, std::vector<Arrow> arrows, std::vector<Elem> identity,
                          const std::function<Elem(Elem f, Elem g)>& compose);

ValidationReport validate_category(const FiniteCategory& c);

CategoryRef discrete_category(std::size_t n);
/// Exactly one morphism a -> b for every pair, index a·n + b.
CategoryRef codiscrete_category(std::size_t n);
/// 0 -> 1 with identities 0, 1 and the arrow 2.
CategoryRef arrow_category();

Elem inverse(const FiniteCategory& c, Elem f);  // kNone when f is not invertible
bool is_groupoid(const FiniteCategory& c);
/// Object -> component label, components numbered by least object.
std::vector<Elem> connected_components(const FiniteCategory& c);
std::size_t component_count(const FiniteCategory& c);
bool isomorphic_objects(const FiniteCategory& c, Elem a, Elem b);
/// An isomorphism a -> b, the least one by index.
std::optional<Elem> find_iso(const FiniteCategory& c, Elem a, Elem b);

struct Functor {
  CategoryRef source;
  CategoryRef target;
  std::vector<Elem> objects;
  std::vector<Elem> morphisms;

  bool same_maps(const Functor& o) const { return objects == o.objects && morphisms == o.morphisms; }
};

ValidationReport validate_functor(const Functor& f);
Functor identity_functor(const CategoryRef& c);
/// second ∘ first
Functor compose(const Functor& first, const Functor& second);

struct FunctorAnalysis {
  bool faithful = true;
  bool full = true;
  bool essentially_surjective = true;
  bool surjective_on_objects = true;
  bool injective_on_objects = true;
  std::string failure;
  std::vector<Elem> witness;

  bool equivalence() const noexcept { return faithful && full && essentially_surjective; }
  bool strictly_surjective_equivalence() const noexcept { return equivalence() && surjective_on_objects; }
};
/// Exhaustive scan of hom-set maps and object images.
FunctorAnalysis analyze_functor(const Functor& f);

/// components[a] : F a -> G a.
struct NaturalTransformation {
  std::vector<Elem> components;
};
ValidationReport validate_natural(const Functor& f, const Functor& g, const NaturalTransformation& t);
bool is_natural_iso(const Functor& f, const Functor& g, const NaturalTransformation& t);

/// Every natural transformation F => G in lexicographic order of components.
/// `only_isos` restricts to isomorphism components. `visit` returns false to stop.
void enumerate_natural_transformations(const Functor& f, const Functor& g, bool only_isos, const Budget& budget,
                                       const std::function<bool(const NaturalTransformation&)>& visit);
std::size_t count_natural_transformations(const Functor& f, const Functor& g, bool only_isos,
                                          const Budget& budget = {});
std::optional<NaturalTransformation> find_natural_iso(const Functor& f, const Functor& g, const Budget& budget = {});

struct FunctorConstraints {
  std::function<bool(Elem object, Elem image)> object_allowed;
  std::function<bool(Elem morphism, Elem image)> morphism_allowed;
};
/// Every functor source -> target meeting the constraints, in
/// lexicographic order of (object map, morphism map).
void enumerate_functors(const CategoryRef& source, const CategoryRef& target, const FunctorConstraints& constraints,
                        const Budget& budget, const std::function<bool(const Functor&)>& visit);

struct CategoryProduct {
  CategoryRef category;  // objects a·|D| + b, morphisms f·|Mor D| + g
  Functor first;
  Functor second;
};
CategoryProduct product_category(const CategoryRef& c, const CategoryRef& d, const Budget& budget = {});

/// Strict fiber product of F : A -> T and G : B -> T; objects and
/// morphisms are agreeing pairs in lexicographic order.
struct CategoryFiberProduct {
  CategoryRef category;
  Functor first;
  Functor second;
  std::vector<std::pair<Elem, Elem>> objects;
  std::vector<std::pair<Elem, Elem>> morphisms;
};
CategoryFiberProduct fiber_product(const Functor& f, const Functor& g, const Budget& budget = {});

}  // namespace ringoid
