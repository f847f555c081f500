#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace ggs {

enum class KindTag { Regular, Cone, CrossCap, Double, Triple, Wedge, Concat };

// Formal type expression of a singular region: one of the basic constructors
// R, C_n, W_n, D_n, T_{2k+1} or a wedge/concatenation of two regions.
// Immutable value type; construction normalizes Regular operands away
// (RQ = Q, QR = Q, wedging a regular summand is absorbed) and collapses
// 1-sheet basic regions to Regular.
class Kind {
 public:
  Kind() : Kind(regular()) {}

  static Kind regular();
  static Kind cone(int n);
  static Kind cross_cap(int n);
  static Kind double_crossing(int n);
  static Kind triple_crossing(int n);  // n odd, n = 2k+1
  static Kind wedge(Kind p, Kind q);
  static Kind concat(Kind p, Kind q);

  KindTag tag() const { return node_->tag; }
  int arity() const { return node_->arity; }  // sheet count n of a basic region
  Kind left() const;
  Kind right() const;

  bool is_regular() const { return tag() == KindTag::Regular; }
  bool is_basic() const { return tag() != KindTag::Wedge && tag() != KindTag::Concat; }
  bool contains(KindTag t) const;

  // Leftmost basic constructor of a concat chain (Def 3.2 shape checks).
  KindTag head_tag() const;

  std::string to_string() const;  // grammar form: R, C3, W2, D2, T5, wedge(..), cat(..)

  bool operator==(const Kind& o) const;

 private:
  struct Node {
    KindTag tag;
    int arity;
    std::shared_ptr<const Node> left, right;
  };
  explicit Kind(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Kind basic(KindTag tag, int arity);

  std::shared_ptr<const Node> node_;
};

// Singular number #s: folds plus cone sheets minus one, computed
// compositionally on the type expression.
int singular_number(const Kind& k);

// The same quantity evaluated by direct pattern-match against the eight
// table rows (R, C_n, W_n, D_n, T_{2k+1}, P v Q, W_n Q, D_n T_{2k+1}).
// Empty when the expression is not one of the table shapes.
std::optional<int> singular_number_table(const Kind& k);

// Parses the input grammar `R | C<n> | W<n> | D<n> | T<n> | wedge(e,e) | cat(e,e)`.
// Input-level cat left operands are restricted to the constructor list
// (cross-cap over double/triple, double over triple); throws std::invalid_argument
// with a message naming the offending token otherwise.
Kind parse_kind(std::string_view text);

}  // namespace ggs
