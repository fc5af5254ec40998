#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "opcoh/nesting.hpp"
#include "opcoh/tree.hpp"

namespace opcoh {

/// An object of the free categorified operad: a binary syntax tree of partial
/// compositions `left o_slot right` over named generators.
class OperadExpression {
 public:
  static OperadExpression generator(std::string name, int arity);
  /// Throws ArityError unless 1 <= slot <= left.arity().
  static OperadExpression compose(OperadExpression left, int slot, OperadExpression right);

  bool is_generator() const { return !node_->left; }
  int arity() const { return node_->arity; }
  const std::string& name() const { return node_->name; }
  int slot() const { return node_->slot; }
  const OperadExpression& left() const { return *node_->left; }
  const OperadExpression& right() const { return *node_->right; }
  int generator_count() const { return node_->count; }

  /// Text form accepted by parse_expression, e.g. "((a:2 o1 b:1) o2 c:1)".
  std::string to_string() const;

  bool operator==(const OperadExpression& o) const;

 private:
  struct Node {
    std::string name;
    int arity = 0;
    int slot = 0;
    int count = 1;
    std::shared_ptr<const OperadExpression> left;
    std::shared_ptr<const OperadExpression> right;
  };
  explicit OperadExpression(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Grammar: `expr := name ":" arity | "(" expr "o" slot expr ")"`, whitespace
/// insensitive. Throws SyntaxError or ArityError.
OperadExpression parse_expression(std::string_view text);

struct NestedTree {
  PlanarTree tree;
  MaximalNesting nesting;
};

/// Grafts the generator corollas and records one nest per composition node.
NestedTree expression_to_nesting(const OperadExpression& e);

/// Inverse of expression_to_nesting; generator names come from the tree labels.
/// Throws NotMaximal if `nesting` does not decompose binarily.
OperadExpression nesting_to_expression(const PlanarTree& tree, const Nesting& nesting);

}  // namespace opcoh
