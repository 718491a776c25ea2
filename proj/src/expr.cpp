#include "ineq/expr.hpp"

#include <sstream>
#include <stdexcept>

namespace ineq {

struct Expr::Node {
  enum class Kind { Const, Sum, Product, Pow };
  Kind kind;
  Rational value;           // Const
  std::vector<Expr> kids;   // Sum/Product terms, Pow base (single)
  Rational exponent;        // Pow
};

Expr Expr::constant(Rational v) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Const;
  n->value = std::move(v);
  return Expr(std::move(n));
}

Expr Expr::sum(std::vector<Expr> terms) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Sum;
  n->kids = std::move(terms);
  return Expr(std::move(n));
}

Expr Expr::product(std::vector<Expr> factors) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Product;
  n->kids = std::move(factors);
  return Expr(std::move(n));
}

Expr Expr::pow(Expr base, Rational exponent) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Pow;
  n->kids.push_back(std::move(base));
  n->exponent = std::move(exponent);
  return Expr(std::move(n));
}

std::optional<Rational> Expr::exact() const {
  switch (node_->kind) {
    case Node::Kind::Const:
      return node_->value;
    case Node::Kind::Sum: {
      Rational acc(0);
      for (const auto& k : node_->kids) {
        auto v = k.exact();
        if (!v) return std::nullopt;
        acc += *v;
      }
      return acc;
    }
    case Node::Kind::Product: {
      Rational acc(1);
      for (const auto& k : node_->kids) {
        auto v = k.exact();
        if (!v) return std::nullopt;
        acc *= *v;
      }
      return acc;
    }
    case Node::Kind::Pow: {
      auto base = node_->kids.front().exact();
      if (!base) return std::nullopt;
      if (base->is_zero() && node_->exponent.sign() < 0)
        throw std::domain_error("expr: zero base with negative exponent");
      return pow_exact(*base, node_->exponent);
    }
  }
  return std::nullopt;
}

Interval Expr::enclosure(mpfr_prec_t bits) const {
  if (auto v = exact()) return Interval::of(*v, bits);
  switch (node_->kind) {
    case Node::Kind::Const:
      return Interval::of(node_->value, bits);
    case Node::Kind::Sum: {
      Interval acc = Interval::of_long(0, bits);
      for (const auto& k : node_->kids) acc = acc + k.enclosure(bits);
      return acc;
    }
    case Node::Kind::Product: {
      Interval acc = Interval::of_long(1, bits);
      for (const auto& k : node_->kids) acc = acc * k.enclosure(bits);
      return acc;
    }
    case Node::Kind::Pow:
      return node_->kids.front().enclosure(bits).pow(node_->exponent);
  }
  throw std::logic_error("expr: unreachable");
}

std::string Expr::str() const {
  std::ostringstream os;
  switch (node_->kind) {
    case Node::Kind::Const:
      os << node_->value;
      break;
    case Node::Kind::Sum: {
      os << "(";
      for (std::size_t i = 0; i < node_->kids.size(); ++i)
        os << (i ? " + " : "") << node_->kids[i].str();
      os << ")";
      break;
    }
    case Node::Kind::Product: {
      os << "(";
      for (std::size_t i = 0; i < node_->kids.size(); ++i)
        os << (i ? " * " : "") << node_->kids[i].str();
      os << ")";
      break;
    }
    case Node::Kind::Pow:
      os << node_->kids.front().str() << "^(" << node_->exponent << ")";
      break;
  }
  return os.str();
}

namespace {

std::optional<Rational> gap_between(const Interval& l, const Interval& r) {
  if (!l.finite() || !r.finite()) return std::nullopt;
  Rational a = l.hi_rational() - r.lo_rational();
  Rational b = r.hi_rational() - l.lo_rational();
  Rational g = a > b ? a : b;
  return g.sign() < 0 ? Rational(0) : g;
}

}  // namespace

RefineOutcome refine_until_ordered(const Expr& lhs, const Expr& rhs,
                                   std::span<const mpfr_prec_t> schedule) {
  if (schedule.empty()) throw std::invalid_argument("refine: empty precision schedule");
  for (std::size_t i = 1; i < schedule.size(); ++i)
    if (schedule[i] <= schedule[i - 1])
      throw std::invalid_argument("refine: schedule must be strictly increasing");

  RefineOutcome out;
  for (mpfr_prec_t bits : schedule) {
    Interval l = lhs.enclosure(bits);
    Interval r = rhs.enclosure(bits);
    out.order = rigorous_compare(l, r);
    out.gap_bound = gap_between(l, r);
    out.decided_at = bits;
    if (out.order != TriOrder::Overlap) return out;
  }
  return out;
}

}  // namespace ineq
