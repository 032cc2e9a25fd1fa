#pragma once

#include <cstddef>
#include <memory>

#include "natbdd/nat.hpp"

namespace natbdd {

/// Immutable BDD tree node: either a 0/1 leaf or an if-then-else on a
/// variable. Copies are cheap and share structure; equality is structural.
class BddNode {
 public:
  /// Constant-false leaf.
  BddNode() = default;

  static BddNode leaf(bool bit);
  static BddNode ite(VarIndex var, BddNode then_branch, BddNode else_branch);

  bool is_leaf() const noexcept { return !ite_; }

  // Valid only on leaves.
  bool bit() const noexcept { return bit_; }

  // Valid only on ite nodes.
  VarIndex var() const noexcept;
  const BddNode& then_branch() const noexcept;
  const BddNode& else_branch() const noexcept;

  /// Number of nodes, leaves included.
  std::size_t size() const noexcept;

  friend bool operator==(const BddNode& a, const BddNode& b) noexcept;

 private:
  struct Ite;
  std::shared_ptr<const Ite> ite_;
  bool bit_ = false;
};

struct BddNode::Ite {
  VarIndex var;
  BddNode then_branch;
  BddNode else_branch;
};

/// A var-count plus a tree. The constructor checks that every ite variable is
/// below `vars` and that indices strictly decrease along every path.
class Bdd {
 public:
  Bdd(VarCount vars, BddNode root);

  VarCount vars() const noexcept { return vars_; }
  const BddNode& root() const noexcept { return root_; }

  friend bool operator==(const Bdd& a, const Bdd& b) noexcept {
    return a.vars_ == b.vars_ && a.root_ == b.root_;
  }

 private:
  VarCount vars_;
  BddNode root_;
};

/// Complete tree of depth nv built by recursive bitmerge unpairing of tt:
/// even bits feed the then-branch, odd bits the else-branch, and the node at
/// height h tests variable h-1. Errc::table_out_of_range unless
/// tt < 2^(2^nv).
Bdd plain_bdd(VarCount nv, const Nat& tt, VarCount max_vars = default_max_vars);

/// Bottom-up trimming: every ite whose reduced children are equal collapses to
/// that child. No subtree sharing is introduced.
Bdd reduce(const Bdd& bdd);

Bdd reduced_bdd(VarCount nv, const Nat& tt, VarCount max_vars = default_max_vars);

/// Structural code: leaves map to their bit, ite(_, T, E) to
/// bitmerge_pair(code(T), code(E)). Inverts plain_bdd; on reduced trees it
/// yields some other number.
Nat plain_inverse_bdd(const Bdd& bdd);

/// Boolean evaluation over 2^nv-bit truth tables: c(0) -> 0, c(1) -> all ones,
/// ite(k, T, E) -> ite_tt(var_tt(nv, k), ev(T), ev(E)). Inverts both
/// plain_bdd and reduced_bdd.
Nat ev(const Bdd& bdd, VarCount max_vars = default_max_vars);

/// True if no ite node has structurally equal children.
bool is_reduced(const Bdd& bdd) noexcept;

}  // namespace natbdd
