#pragma once

#include <cstddef>
#include <iterator>

#include "natbdd/bdd.hpp"
#include "natbdd/nat.hpp"

namespace natbdd {

/// Position of a global rank inside the var-count blocks: block `vars`
/// starts at bsum(vars - 1) and `index` is the offset within it.
struct RankPair {
  VarCount vars;
  Nat index;

  friend bool operator==(const RankPair&, const RankPair&) = default;
  friend bool operator<(const RankPair& a, const RankPair& b) {
    return a.vars != b.vars ? a.vars < b.vars : a.index < b.index;
  }
};

/// bsum(0) = 0, bsum(1) = 2, bsum(n) = bsum(n-1) + 2^(2^(n-1)) for n >= 2.
Nat bsum(VarCount n, VarCount max_vars = default_max_vars);

/// bsum(vars) - bsum(vars - 1) for vars >= 1: 2 for one variable, otherwise
/// 2^(2^(vars-1)). Only the first block_size(k) tables of k variables are
/// reachable from the unranking.
Nat block_size(VarCount vars, VarCount max_vars = default_max_vars);

/// vars = least x with bsum(x) > n, index = n - bsum(vars - 1).
RankPair to_bsum(const Nat& n);

Bdd nat2plain_bdd(const Nat& n, VarCount max_vars = default_max_vars);
Bdd nat2bdd(const Nat& n, VarCount max_vars = default_max_vars);

/// bsum(nv - 1) + plain_inverse_bdd(b). Errc::out_of_image if nv == 0 or the
/// code falls outside the nv block.
Nat plain_bdd2nat(const Bdd& bdd, VarCount max_vars = default_max_vars);
/// bsum(nv - 1) + ev(b), with the same image check.
Nat bdd2nat(const Bdd& bdd, VarCount max_vars = default_max_vars);

enum class BddKind { plain, reduced };

Bdd unrank(BddKind kind, const Nat& n, VarCount max_vars = default_max_vars);
Nat rank(BddKind kind, const Bdd& bdd, VarCount max_vars = default_max_vars);

/// Lazy finite window [from, from + count) of the BDD stream. Each element is
/// unranked when the iterator is dereferenced.
class BddEnumeration {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Bdd;
    using difference_type = std::ptrdiff_t;
    using reference = Bdd;

    iterator() = default;

    Bdd operator*() const { return unrank(owner_->kind_, position_, owner_->max_vars_); }
    iterator& operator++() {
      ++position_;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.position_ == b.position_;
    }

   private:
    friend class BddEnumeration;
    iterator(const BddEnumeration* owner, Nat position)
        : owner_(owner), position_(std::move(position)) {}

    const BddEnumeration* owner_ = nullptr;
    Nat position_;
  };

  BddEnumeration(BddKind kind, Nat from, Nat count, VarCount max_vars = default_max_vars);

  iterator begin() const { return {this, from_}; }
  iterator end() const { return {this, from_ + count_}; }

 private:
  BddKind kind_;
  Nat from_;
  Nat count_;
  VarCount max_vars_;
};

inline BddEnumeration enumerate(BddKind kind, const Nat& from, const Nat& count,
                                VarCount max_vars = default_max_vars) {
  return BddEnumeration(kind, from, count, max_vars);
}

}  // namespace natbdd
