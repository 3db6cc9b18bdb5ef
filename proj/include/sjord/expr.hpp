#pragma once

// Generator labels and algebra expressions (sums, ordered products, integer
// powers, scalar multiples) over them. Expressions are immutable trees that
// evaluate homomorphically in any target supporting +, * and HPoly scaling.

#include <compare>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sjord/scalars.hpp"

namespace sjord {

enum class GenKind : std::uint8_t {
  H,         // Cartan-type h_ij / H_ij, i < j
  E,         // root vector e_ij / E_ij, i != j
  T,         // T
  TInv,      // T^{-1}
  THalf,     // T^{1/2}
  TInvHalf,  // T^{-1/2}
  ParityF,   // (-1)^F
  Root,      // sqrt(1 + h^2 e_{1N}^2), classical side
};

/// Generator label. `classical` distinguishes e_ij (undeformed) from E_ij.
struct Label {
  GenKind kind = GenKind::E;
  int i = 0;
  int j = 0;
  bool classical = false;
  bool odd = false;

  static Label h(int i, int j) { return {GenKind::H, i, j, true, false}; }
  static Label e(int i, int j, int n) { return {GenKind::E, i, j, true, (i == n + 1) != (j == n + 1)}; }
  static Label H(int i, int j) { return {GenKind::H, i, j, false, false}; }
  static Label E(int i, int j, int n) { return {GenKind::E, i, j, false, (i == n + 1) != (j == n + 1)}; }
  static Label T() { return {GenKind::T}; }
  static Label TInv() { return {GenKind::TInv}; }
  static Label THalf() { return {GenKind::THalf}; }
  static Label TInvHalf() { return {GenKind::TInvHalf}; }
  static Label ParityF() { return {GenKind::ParityF}; }
  static Label Root() { return {GenKind::Root, 0, 0, true, false}; }

  std::string name() const;

  friend auto operator<=>(const Label&, const Label&) = default;
};

class Expr {
 public:
  enum class Kind { Leaf, Scalar, Sum, Product, Power, DivH };

  Expr() : Expr(HPoly()) {}
  Expr(const Label& l);      // NOLINT(google-explicit-constructor)
  Expr(const HPoly& c);      // NOLINT(google-explicit-constructor)
  Expr(const Rational& c);   // NOLINT(google-explicit-constructor)
  Expr(long c);              // NOLINT(google-explicit-constructor)

  static Expr sum(std::vector<Expr> terms);
  static Expr product(std::vector<Expr> factors);
  static Expr power(const Expr& base, int k);
  /// Exact division by h^k, checked at evaluation time.
  static Expr div_h(const Expr& e, int k = 1);

  Kind kind() const { return node_->kind; }
  const Label& label() const { return node_->label; }
  const HPoly& scalar() const { return node_->scalar; }
  const std::vector<Expr>& children() const { return node_->children; }
  int exponent() const { return node_->exponent; }

  bool is_leaf(const Label& l) const { return kind() == Kind::Leaf && label() == l; }
  bool is_scalar_zero() const { return kind() == Kind::Scalar && scalar().is_zero(); }

  /// Z2 degree when homogeneous; scalars are even.
  std::optional<int> parity() const;

  /// All leaf labels, in first-occurrence order.
  std::vector<Label> leaves() const;

  std::string str() const;

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a);
  friend Expr operator*(const Expr& a, const Expr& b);

 private:
  struct Node {
    Kind kind = Kind::Scalar;
    Label label;
    HPoly scalar;
    std::vector<Expr> children;
    int exponent = 0;
  };
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

Expr pow(const Expr& base, int k);
/// Graded commutator ab - (-1)^{|a||b|} ba; throws UndeclaredParity.
Expr comm(const Expr& a, const Expr& b);
/// The symbol h as a scalar expression.
HPoly h_var();

using LabelMap = std::function<std::optional<Expr>(const Label&)>;

/// Replaces leaves for which `images` returns a value.
Expr substitute(const Expr& e, const LabelMap& images);

/// Antipode image of an expression given images of its leaves. The map is
/// extended anti-multiplicatively; `koszul` adds (-1)^{|a||b|} per swapped pair.
Expr antipode_image(const Expr& e, const LabelMap& leaf_images, bool koszul);

/// Homomorphic evaluation. `one` is the unit of the target, `leaf` the image
/// of a generator, `div_h` exact division by h^k.
template <class V>
struct Evaluator {
  std::function<V()> one;
  std::function<V(const Label&)> leaf;
  std::function<V(const V&, int)> div_h;
};

template <class V>
V evaluate(const Expr& e, const Evaluator<V>& ev) {
  switch (e.kind()) {
    case Expr::Kind::Leaf:
      return ev.leaf(e.label());
    case Expr::Kind::Scalar:
      return e.scalar() * ev.one();
    case Expr::Kind::Sum: {
      V acc = evaluate(e.children().front(), ev);
      for (std::size_t k = 1; k < e.children().size(); ++k) acc = acc + evaluate(e.children()[k], ev);
      return acc;
    }
    case Expr::Kind::Product: {
      HPoly factor(1L);
      std::optional<V> acc;
      for (const auto& c : e.children()) {
        if (c.kind() == Expr::Kind::Scalar) {
          factor = factor * c.scalar();
          continue;
        }
        V v = evaluate(c, ev);
        acc = acc ? V(*acc * v) : std::move(v);
      }
      if (!acc) return factor * ev.one();
      if (factor == HPoly(1L)) return *acc;
      return factor * *acc;
    }
    case Expr::Kind::Power: {
      if (e.exponent() == 0) return ev.one();
      const V base = evaluate(e.children().front(), ev);
      V acc = base;
      for (int k = 1; k < e.exponent(); ++k) acc = acc * base;
      return acc;
    }
    case Expr::Kind::DivH:
      return ev.div_h(evaluate(e.children().front(), ev), e.exponent());
  }
  throw Error("unreachable expression kind");
}

}  // namespace sjord
