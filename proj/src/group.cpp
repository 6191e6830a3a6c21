#include "ringoid/group.hpp"

#include <algorithm>
#include <deque>

namespace ringoid {

AbelianGroup::AbelianGroup(std::size_t size, std::vector<Elem> add)
    : n_(size), add_(std::move(add)) {
  if (n_ == 0) throw MalformedInput("group carrier must be non-empty");
  if (add_.size() != n_ * n_) throw MalformedInput("addition table has wrong size");
  for (Elem e : add_)
    if (e < 0 || static_cast<std::size_t>(e) >= n_)
      throw MalformedInput("addition table entry out of range");
  zero_ = kNone;
  for (std::size_t z = 0; z < n_ && zero_ == kNone; ++z) {
    bool identity = true;
    for (std::size_t a = 0; a < n_ && identity; ++a)
      identity = add_[z * n_ + a] == static_cast<Elem>(a) && add_[a * n_ + z] == static_cast<Elem>(a);
    if (identity) zero_ = static_cast<Elem>(z);
  }
  if (zero_ == kNone) throw MalformedInput("addition table has no identity element");
  neg_.assign(n_, kNone);
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b)
      if (add_[a * n_ + b] == zero_ && add_[b * n_ + a] == zero_) {
        neg_[a] = static_cast<Elem>(b);
        break;
      }
}

Elem AbelianGroup::times(long long k, Elem a) const {
  if (k < 0) return times(-k, neg(a));
  Elem acc = zero_;
  Elem base = a;
  while (k > 0) {
    if (k & 1) acc = add(acc, base);
    base = add(base, base);
    k >>= 1;
  }
  return acc;
}

ValidationReport AbelianGroup::validate() const {
  ValidationReport r;
  const auto n = static_cast<Elem>(n_);
  for (Elem a = 0; a < n; ++a)
    if (neg_[a] == kNone) {
      r.add("additive-inverse", {a});
      break;
    }
  [&] {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        if (add(a, b) != add(b, a)) return r.add("additive-commutativity", {a, b});
  }();
  [&] {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c)
          if (add(add(a, b), c) != add(a, add(b, c))) return r.add("additive-associativity", {a, b, c});
  }();
  return r;
}

AbelianGroup cyclic_group(std::size_t n) {
  std::vector<Elem> add(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) add[a * n + b] = static_cast<Elem>((a + b) % n);
  return AbelianGroup(n, std::move(add));
}

AbelianGroup trivial_group() { return cyclic_group(1); }

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
  const std::size_t na = a.size(), nb = b.size(), n = na * nb;
  std::vector<Elem> add(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Elem s1 = a.add(static_cast<Elem>(x / nb), static_cast<Elem>(y / nb));
      Elem s2 = b.add(static_cast<Elem>(x % nb), static_cast<Elem>(y % nb));
      add[x * n + y] = pair_index(s1, s2, nb);
    }
  return AbelianGroup(n, std::move(add));
}

std::vector<Elem> subgroup_closure(const AbelianGroup& g, std::span<const Elem> gens) {
  std::vector<char> in(g.size(), 0);
  std::deque<Elem> queue;
  in[g.zero()] = 1;
  queue.push_back(g.zero());
  std::vector<Elem> members{g.zero()};
  while (!queue.empty()) {
    Elem e = queue.front();
    queue.pop_front();
    for (Elem s : gens) {
      Elem t = g.add(e, s);
      if (!in[t]) {
        in[t] = 1;
        members.push_back(t);
        queue.push_back(t);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool is_subgroup(const AbelianGroup& g, std::span<const Elem> elements) {
  std::vector<char> in(g.size(), 0);
  for (Elem e : elements) in[e] = 1;
  if (!in[g.zero()]) return false;
  for (Elem a : elements) {
    if (!in[g.neg(a)]) return false;
    for (Elem b : elements)
      if (!in[g.add(a, b)]) return false;
  }
  return true;
}

std::vector<Elem> index_of_subset(std::size_t ambient, std::span<const Elem> sorted_subset) {
  std::vector<Elem> idx(ambient, kNone);
  for (std::size_t i = 0; i < sorted_subset.size(); ++i) idx[sorted_subset[i]] = static_cast<Elem>(i);
  return idx;
}

AbelianGroup restrict_group(const AbelianGroup& g, std::span<const Elem> elements) {
  const auto idx = index_of_subset(g.size(), elements);
  const std::size_t k = elements.size();
  std::vector<Elem> add(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Elem s = idx[g.add(elements[i], elements[j])];
      if (s == kNone) throw PreconditionError("subset is not closed under addition", {elements[i], elements[j]});
      add[i * k + j] = s;
    }
  return AbelianGroup(k, std::move(add));
}

GroupQuotient quotient_group(const AbelianGroup& g, std::span<const Elem> subgroup) {
  const std::size_t n = g.size();
  GroupQuotient q;
  q.projection.assign(n, kNone);
  for (std::size_t a = 0; a < n; ++a) {
    if (q.projection[a] != kNone) continue;
    const auto label = static_cast<Elem>(q.representative.size());
    q.representative.push_back(static_cast<Elem>(a));
    for (Elem s : subgroup) {
      Elem b = g.add(static_cast<Elem>(a), s);
      if (q.projection[b] != kNone && q.projection[b] != label)
        throw PreconditionError("subset is not a subgroup", {static_cast<Elem>(a), s});
      q.projection[b] = label;
    }
  }
  const std::size_t k = q.representative.size();
  if (k * subgroup.size() != n) throw PreconditionError("subset is not a subgroup");
  std::vector<Elem> add(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      add[i * k + j] = q.projection[g.add(q.representative[i], q.representative[j])];
  q.group = AbelianGroup(k, std::move(add));
  return q;
}

}  // namespace ringoid
