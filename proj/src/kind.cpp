#include "ggs/kind.hpp"

#include <cassert>
#include <stdexcept>

namespace ggs {

Kind Kind::basic(KindTag tag, int arity) {
  auto n = std::make_shared<Node>();
  n->tag = tag;
  n->arity = arity;
  return Kind(std::move(n));
}

Kind Kind::regular() { return basic(KindTag::Regular, 1); }

Kind Kind::cone(int n) {
  if (n < 1) throw std::invalid_argument("cone arity must be positive");
  if (n == 1) return regular();  // a 1-sheet cone is a disk
  return basic(KindTag::Cone, n);
}

Kind Kind::cross_cap(int n) {
  if (n < 1) throw std::invalid_argument("cross-cap arity must be positive");
  if (n == 1) return regular();
  return basic(KindTag::CrossCap, n);
}

Kind Kind::double_crossing(int n) {
  if (n < 1) throw std::invalid_argument("double-crossing arity must be positive");
  if (n == 1) return regular();
  return basic(KindTag::Double, n);
}

Kind Kind::triple_crossing(int n) {
  if (n < 1 || n % 2 == 0) throw std::invalid_argument("triple-crossing arity must be odd");
  if (n == 1) return regular();
  return basic(KindTag::Triple, n);
}

Kind Kind::wedge(Kind p, Kind q) {
  if (p.is_regular()) return q;  // a regular wedge summand is absorbed
  if (q.is_regular()) return p;
  auto n = std::make_shared<Node>();
  n->tag = KindTag::Wedge;
  n->arity = 0;
  n->left = p.node_;
  n->right = q.node_;
  return Kind(std::move(n));
}

Kind Kind::concat(Kind p, Kind q) {
  if (p.is_regular()) return q;  // RQ = Q
  if (q.is_regular()) return p;  // QR = Q
  auto n = std::make_shared<Node>();
  n->tag = KindTag::Concat;
  n->arity = 0;
  n->left = p.node_;
  n->right = q.node_;
  return Kind(std::move(n));
}

Kind Kind::left() const {
  assert(node_->left);
  return Kind(node_->left);
}

Kind Kind::right() const {
  assert(node_->right);
  return Kind(node_->right);
}

bool Kind::contains(KindTag t) const {
  if (tag() == t) return true;
  if (is_basic()) return false;
  return left().contains(t) || right().contains(t);
}

KindTag Kind::head_tag() const {
  if (is_basic()) return tag();
  return left().head_tag();
}

std::string Kind::to_string() const {
  switch (tag()) {
    case KindTag::Regular: return "R";
    case KindTag::Cone: return "C" + std::to_string(arity());
    case KindTag::CrossCap: return "W" + std::to_string(arity());
    case KindTag::Double: return "D" + std::to_string(arity());
    case KindTag::Triple: return "T" + std::to_string(arity());
    case KindTag::Wedge: return "wedge(" + left().to_string() + "," + right().to_string() + ")";
    case KindTag::Concat: return "cat(" + left().to_string() + "," + right().to_string() + ")";
  }
  return "?";
}

bool Kind::operator==(const Kind& o) const {
  if (tag() != o.tag() || arity() != o.arity()) return false;
  if (is_basic()) return true;
  return left() == o.left() && right() == o.right();
}

int singular_number(const Kind& k) {
  switch (k.tag()) {
    case KindTag::Regular: return 0;
    case KindTag::Cone: return k.arity() - 1;
    case KindTag::CrossCap: return k.arity() - 1;
    case KindTag::Double: return 2 * (k.arity() - 1);
    case KindTag::Triple: return 3 * (k.arity() - 1);  // 6k with n = 2k+1
    case KindTag::Wedge: return singular_number(k.left()) + singular_number(k.right()) + 1;
    case KindTag::Concat: return singular_number(k.left()) + singular_number(k.right());
  }
  return 0;
}

std::optional<int> singular_number_table(const Kind& k) {
  switch (k.tag()) {
    case KindTag::Regular: return 0;
    case KindTag::Cone: return k.arity() - 1;
    case KindTag::CrossCap: return k.arity() - 1;
    case KindTag::Double: return 2 * (k.arity() - 1);
    case KindTag::Triple: {
      int kk = (k.arity() - 1) / 2;
      return 6 * kk;
    }
    case KindTag::Wedge: {
      auto p = singular_number_table(k.left());
      auto q = singular_number_table(k.right());
      if (!p || !q) return std::nullopt;
      return *p + *q + 1;
    }
    case KindTag::Concat: {
      Kind l = k.left(), r = k.right();
      if (l.tag() == KindTag::CrossCap) {
        auto q = singular_number_table(r);
        if (!q) return std::nullopt;
        return (l.arity() - 1) + *q;  // W_n Q row
      }
      if (l.tag() == KindTag::Double && r.tag() == KindTag::Triple) {
        int kk = (r.arity() - 1) / 2;
        return 2 * (l.arity() - 1) + 6 * kk;  // D_n T_{2k+1} row
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

namespace {

struct KindParser {
  std::string_view s;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("kind expression: " + what + " at '" +
                                std::string(s.substr(pos)) + "'");
  }

  char peek() { return pos < s.size() ? s[pos] : '\0'; }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }

  int number() {
    size_t start = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (pos == start) fail("expected sheet count");
    return std::stoi(std::string(s.substr(start, pos - start)));
  }

  bool consume_word(std::string_view w) {
    if (s.substr(pos, w.size()) == w) {
      pos += w.size();
      return true;
    }
    return false;
  }

  Kind expr() {
    if (consume_word("wedge(")) {
      Kind p = expr();
      expect(',');
      Kind q = expr();
      expect(')');
      return Kind::wedge(p, q);
    }
    if (consume_word("cat(")) {
      Kind p = expr();
      expect(',');
      Kind q = expr();
      expect(')');
      return make_concat(p, q);
    }
    char c = peek();
    ++pos;
    switch (c) {
      case 'R': return Kind::regular();
      case 'C': return arity_checked(KindTag::Cone);
      case 'W': return arity_checked(KindTag::CrossCap);
      case 'D': return arity_checked(KindTag::Double);
      case 'T': return arity_checked(KindTag::Triple);
      default:
        --pos;
        fail("unknown constructor");
    }
  }

  Kind arity_checked(KindTag tag) {
    int n = number();
    if (tag == KindTag::Triple) {
      if (n < 3 || n % 2 == 0) fail("triple-crossing arity must be odd and >= 3");
      return Kind::triple_crossing(n);
    }
    if (n < 2) fail("sheet count must be >= 2");
    switch (tag) {
      case KindTag::Cone: return Kind::cone(n);
      case KindTag::CrossCap: return Kind::cross_cap(n);
      case KindTag::Double: return Kind::double_crossing(n);
      default: fail("unknown constructor");
    }
  }

  // Input-syntax concatenations follow the constructor list: W_n over a
  // double/triple chain, D_n over a triple chain. (RQ = Q is a convention,
  // not a distinct region, and is normalized by the factory.)
  Kind make_concat(const Kind& p, const Kind& q) {
    if (p.is_regular() || q.is_regular()) return Kind::concat(p, q);
    bool ok = false;
    if (p.tag() == KindTag::CrossCap)
      ok = q.head_tag() == KindTag::Double || q.head_tag() == KindTag::Triple;
    else if (p.tag() == KindTag::Double)
      ok = q.head_tag() == KindTag::Triple;
    if (!ok) fail("cat(" + p.to_string() + "," + q.to_string() + ") is not a constructible region");
    return Kind::concat(p, q);
  }
};

}  // namespace

Kind parse_kind(std::string_view text) {
  KindParser p{text};
  Kind k = p.expr();
  if (p.pos != text.size()) p.fail("trailing input");
  return k;
}

}  // namespace ggs
