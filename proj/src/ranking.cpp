#include "natbdd/ranking.hpp"

#include <string>

#include "natbdd/error.hpp"
#include "natbdd/truthtab.hpp"

namespace natbdd {

namespace {

void guard_vars(VarCount nv, VarCount max_vars) {
  if (nv > max_vars) {
    throw Error(Errc::resource_guard, "var-count " + std::to_string(nv) +
                                          " exceeds max_vars " + std::to_string(max_vars));
  }
}

// Complete tree of depth nv whose node at height h tests variable h-1.
bool is_complete(const BddNode& node, VarCount height) noexcept {
  if (node.is_leaf()) return height == 0;
  return height > 0 && node.var() == height - 1 && is_complete(node.then_branch(), height - 1) &&
         is_complete(node.else_branch(), height - 1);
}

Nat shift_into_block(const Bdd& bdd, const Nat& local, VarCount max_vars) {
  const VarCount nv = bdd.vars();
  if (local >= block_size(nv, max_vars)) {
    throw Error(Errc::out_of_image, "local index " + format_nat(local) +
                                        " is outside the block of " + std::to_string(nv) +
                                        "-variable BDDs");
  }
  return bsum(nv - 1, max_vars) + local;
}

void require_ranked_vars(const Bdd& bdd) {
  if (bdd.vars() == 0) {
    throw Error(Errc::out_of_image, "0-variable BDDs are not in the enumeration");
  }
}

}  // namespace

Nat bsum(VarCount n, VarCount max_vars) {
  guard_vars(n, max_vars);
  if (n == 0) return 0;
  Nat s = 2;
  for (VarCount m = 1; m < n; ++m) s += pow2(std::size_t{1} << m);
  return s;
}

Nat block_size(VarCount vars, VarCount max_vars) {
  guard_vars(vars, max_vars);
  if (vars == 0) return 0;
  if (vars == 1) return 2;
  return pow2(std::size_t{1} << (vars - 1));
}

RankPair to_bsum(const Nat& n) {
  require_nat(n, "rank");
  VarCount x = 1;
  Nat previous = 0;
  Nat current = 2;
  while (current <= n) {
    previous = current;
    current += pow2(std::size_t{1} << x);
    ++x;
  }
  return {x, n - previous};
}

Bdd nat2plain_bdd(const Nat& n, VarCount max_vars) {
  const RankPair rp = to_bsum(n);
  guard_vars(rp.vars, max_vars);
  return plain_bdd(rp.vars, rp.index, max_vars);
}

Bdd nat2bdd(const Nat& n, VarCount max_vars) {
  const RankPair rp = to_bsum(n);
  guard_vars(rp.vars, max_vars);
  return reduced_bdd(rp.vars, rp.index, max_vars);
}

Nat plain_bdd2nat(const Bdd& bdd, VarCount max_vars) {
  require_ranked_vars(bdd);
  guard_vars(bdd.vars(), max_vars);
  if (!is_complete(bdd.root(), bdd.vars())) {
    throw Error(Errc::out_of_image, "not a complete plain BDD");
  }
  return shift_into_block(bdd, plain_inverse_bdd(bdd), max_vars);
}

Nat bdd2nat(const Bdd& bdd, VarCount max_vars) {
  require_ranked_vars(bdd);
  guard_vars(bdd.vars(), max_vars);
  if (!is_reduced(bdd)) {
    throw Error(Errc::out_of_image, "not a reduced BDD");
  }
  return shift_into_block(bdd, ev(bdd, max_vars), max_vars);
}

Bdd unrank(BddKind kind, const Nat& n, VarCount max_vars) {
  return kind == BddKind::plain ? nat2plain_bdd(n, max_vars) : nat2bdd(n, max_vars);
}

Nat rank(BddKind kind, const Bdd& bdd, VarCount max_vars) {
  return kind == BddKind::plain ? plain_bdd2nat(bdd, max_vars) : bdd2nat(bdd, max_vars);
}

BddEnumeration::BddEnumeration(BddKind kind, Nat from, Nat count, VarCount max_vars)
    : kind_(kind), from_(std::move(from)), count_(std::move(count)), max_vars_(max_vars) {
  require_nat(from_, "enumeration start");
  require_nat(count_, "enumeration count");
}

}  // namespace natbdd
