#include "natbdd/bdd.hpp"

#include <string>
#include <vector>

#include "natbdd/error.hpp"
#include "natbdd/pairing.hpp"
#include "natbdd/truthtab.hpp"

namespace natbdd {

BddNode BddNode::leaf(bool bit) {
  BddNode n;
  n.bit_ = bit;
  return n;
}

BddNode BddNode::ite(VarIndex var, BddNode then_branch, BddNode else_branch) {
  BddNode n;
  n.ite_ = std::make_shared<const Ite>(Ite{var, std::move(then_branch), std::move(else_branch)});
  return n;
}

VarIndex BddNode::var() const noexcept { return ite_->var; }
const BddNode& BddNode::then_branch() const noexcept { return ite_->then_branch; }
const BddNode& BddNode::else_branch() const noexcept { return ite_->else_branch; }

std::size_t BddNode::size() const noexcept {
  if (is_leaf()) return 1;
  return 1 + ite_->then_branch.size() + ite_->else_branch.size();
}

bool operator==(const BddNode& a, const BddNode& b) noexcept {
  if (a.ite_ == b.ite_) return a.ite_ || a.bit_ == b.bit_;
  if (!a.ite_ || !b.ite_) return false;
  return a.ite_->var == b.ite_->var && a.ite_->then_branch == b.ite_->then_branch &&
         a.ite_->else_branch == b.ite_->else_branch;
}

namespace {

// Every ite variable must be strictly below `bound`, which starts at the
// var-count and tightens to the parent's variable.
void check_order(const BddNode& node, VarIndex bound) {
  if (node.is_leaf()) return;
  if (node.var() >= bound) {
    throw Error(Errc::malformed_bdd, "ite variable " + std::to_string(node.var()) +
                                         " is not below " + std::to_string(bound));
  }
  check_order(node.then_branch(), node.var());
  check_order(node.else_branch(), node.var());
}

BddNode isplit(VarCount nv, const Nat& tt) {
  if (nv == 0) return BddNode::leaf(tt != 0);
  auto [hi, lo] = bitmerge_unpair(tt);
  BddNode then_branch = isplit(nv - 1, hi);
  BddNode else_branch = isplit(nv - 1, lo);
  return BddNode::ite(nv - 1, std::move(then_branch), std::move(else_branch));
}

BddNode reduce_node(const BddNode& node) {
  if (node.is_leaf()) return node;
  BddNode then_branch = reduce_node(node.then_branch());
  BddNode else_branch = reduce_node(node.else_branch());
  if (then_branch == else_branch) return then_branch;
  return BddNode::ite(node.var(), std::move(then_branch), std::move(else_branch));
}

Nat code_of(const BddNode& node) {
  if (node.is_leaf()) return node.bit() ? 1 : 0;
  return bitmerge_pair(code_of(node.then_branch()), code_of(node.else_branch()));
}

struct Evaluator {
  Nat zero;
  Nat mask;
  std::vector<Nat> columns;

  Nat operator()(const BddNode& node) const {
    if (node.is_leaf()) return node.bit() ? mask : zero;
    return ite_tt(columns[node.var()], (*this)(node.then_branch()), (*this)(node.else_branch()));
  }
};

bool reduced_node(const BddNode& node) noexcept {
  if (node.is_leaf()) return true;
  return !(node.then_branch() == node.else_branch()) && reduced_node(node.then_branch()) &&
         reduced_node(node.else_branch());
}

}  // namespace

Bdd::Bdd(VarCount vars, BddNode root) : vars_(vars), root_(std::move(root)) {
  check_order(root_, vars_);
}

Bdd plain_bdd(VarCount nv, const Nat& tt, VarCount max_vars) {
  require_nat(tt, "truth table");
  const Nat mask = all_ones_mask(nv, max_vars);
  if (tt > mask) {
    throw Error(Errc::table_out_of_range, "truth table must be below 2^(2^" +
                                              std::to_string(nv) + ")");
  }
  return Bdd(nv, isplit(nv, tt));
}

Bdd reduce(const Bdd& bdd) { return Bdd(bdd.vars(), reduce_node(bdd.root())); }

Bdd reduced_bdd(VarCount nv, const Nat& tt, VarCount max_vars) {
  return reduce(plain_bdd(nv, tt, max_vars));
}

Nat plain_inverse_bdd(const Bdd& bdd) { return code_of(bdd.root()); }

Nat ev(const Bdd& bdd, VarCount max_vars) {
  const VarCount nv = bdd.vars();
  Evaluator eval{Nat(0), all_ones_mask(nv, max_vars), {}};
  eval.columns.reserve(nv);
  for (VarIndex k = 0; k < nv; ++k) eval.columns.push_back(var_tt(nv, k, max_vars));
  return eval(bdd.root());
}

bool is_reduced(const Bdd& bdd) noexcept { return reduced_node(bdd.root()); }

}  // namespace natbdd
