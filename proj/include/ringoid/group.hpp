#pragma once

#include <span>
#include <vector>

#include "ringoid/error.hpp"

namespace ringoid {

/// A finite abelian group given by its addition table. The zero is inferred
/// from the table; negatives are looked up once and stored (kNone when an
/// element has no inverse, which validate() then reports).
class AbelianGroup {
 public:
  AbelianGroup() = default;
  /// Throws MalformedInput when the table has the wrong size, contains an
  /// out-of-range entry, or has no two-sided identity.
  AbelianGroup(std::size_t size, std::vector<Elem> add);

  std::size_t size() const noexcept { return n_; }
  Elem zero() const noexcept { return zero_; }
  Elem add(Elem a, Elem b) const { return add_[static_cast<std::size_t>(a) * n_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem times(long long k, Elem a) const;
  const std::vector<Elem>& add_table() const noexcept { return add_; }

  ValidationReport validate() const;

  bool operator==(const AbelianGroup&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Elem> add_;
  std::vector<Elem> neg_;
  Elem zero_ = 0;
};

AbelianGroup cyclic_group(std::size_t n);
AbelianGroup trivial_group();
/// Carrier a*|B| + b.
AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);
inline Elem pair_index(Elem a, Elem b, std::size_t second_size) {
  return static_cast<Elem>(static_cast<std::size_t>(a) * second_size + b);
}

/// Sorted elements of the subgroup generated by `gens`.
std::vector<Elem> subgroup_closure(const AbelianGroup& g, std::span<const Elem> gens);
bool is_subgroup(const AbelianGroup& g, std::span<const Elem> elements);

/// The subgroup on `elements` (sorted, closed) relabeled 0..k-1 in order.
AbelianGroup restrict_group(const AbelianGroup& g, std::span<const Elem> elements);

/// Cosets of a subgroup, labeled in order of their least representative.
struct GroupQuotient {
  AbelianGroup group;
  std::vector<Elem> projection;      // element -> coset label
  std::vector<Elem> representative;  // coset label -> least element
};
GroupQuotient quotient_group(const AbelianGroup& g, std::span<const Elem> subgroup);

/// Position of each element of a sorted subset, kNone outside it.
std::vector<Elem> index_of_subset(std::size_t ambient, std::span<const Elem> sorted_subset);

}  // namespace ringoid
