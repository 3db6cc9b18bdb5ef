#include "sjord/expr.hpp"

#include <algorithm>
#include <sstream>

namespace sjord {

std::string Label::name() const {
  auto idx = [this] { return std::to_string(i) + std::to_string(j); };
  switch (kind) {
    case GenKind::H:
      return (classical ? "h_" : "H_") + idx();
    case GenKind::E:
      return (classical ? "e_" : "E_") + idx();
    case GenKind::T:
      return "T";
    case GenKind::TInv:
      return "T^-1";
    case GenKind::THalf:
      return "T^1/2";
    case GenKind::TInvHalf:
      return "T^-1/2";
    case GenKind::ParityF:
      return "(-1)^F";
    case GenKind::Root:
      return "sqrt(1+h^2e^2)";
  }
  return "?";
}

Expr::Expr(const Label& l) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Leaf;
  n->label = l;
  node_ = std::move(n);
}

Expr::Expr(const HPoly& c) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Scalar;
  n->scalar = c;
  node_ = std::move(n);
}

Expr::Expr(const Rational& c) : Expr(HPoly(c)) {}
Expr::Expr(long c) : Expr(HPoly(c)) {}

Expr Expr::sum(std::vector<Expr> terms) {
  std::vector<Expr> flat;
  HPoly constant;
  for (auto& t : terms) {
    if (t.kind() == Kind::Sum) {
      for (const auto& c : t.children()) flat.push_back(c);
    } else if (t.kind() == Kind::Scalar) {
      constant += t.scalar();
    } else {
      flat.push_back(std::move(t));
    }
  }
  if (!constant.is_zero()) flat.emplace_back(constant);
  if (flat.empty()) return Expr(HPoly());
  if (flat.size() == 1) return flat.front();
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sum;
  n->children = std::move(flat);
  return Expr(std::shared_ptr<const Node>(std::move(n)));
}

Expr Expr::product(std::vector<Expr> factors) {
  std::vector<Expr> flat;
  HPoly coeff(1L);
  for (auto& f : factors) {
    if (f.kind() == Kind::Product) {
      for (const auto& c : f.children()) {
        if (c.kind() == Kind::Scalar)
          coeff = coeff * c.scalar();
        else
          flat.push_back(c);
      }
    } else if (f.kind() == Kind::Scalar) {
      coeff = coeff * f.scalar();
    } else {
      flat.push_back(std::move(f));
    }
  }
  if (coeff.is_zero()) return Expr(HPoly());
  if (flat.empty()) return Expr(coeff);
  if (coeff != HPoly(1L)) flat.insert(flat.begin(), Expr(coeff));
  if (flat.size() == 1) return flat.front();
  auto n = std::make_shared<Node>();
  n->kind = Kind::Product;
  n->children = std::move(flat);
  return Expr(std::shared_ptr<const Node>(std::move(n)));
}

Expr Expr::power(const Expr& base, int k) {
  if (k < 0) throw Error("negative expression power");
  if (k == 0) return Expr(1L);
  if (k == 1) return base;
  auto n = std::make_shared<Node>();
  n->kind = Kind::Power;
  n->children = {base};
  n->exponent = k;
  return Expr(std::shared_ptr<const Node>(std::move(n)));
}

Expr Expr::div_h(const Expr& e, int k) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::DivH;
  n->children = {e};
  n->exponent = k;
  return Expr(std::shared_ptr<const Node>(std::move(n)));
}

std::optional<int> Expr::parity() const {
  switch (kind()) {
    case Kind::Leaf:
      return label().odd ? 1 : 0;
    case Kind::Scalar:
      return 0;
    case Kind::Sum: {
      std::optional<int> p;
      for (const auto& c : children()) {
        if (c.is_scalar_zero()) continue;
        auto cp = c.parity();
        if (!cp) return std::nullopt;
        if (p && *p != *cp) return std::nullopt;
        p = cp;
      }
      return p ? p : 0;
    }
    case Kind::Product: {
      int p = 0;
      for (const auto& c : children()) {
        auto cp = c.parity();
        if (!cp) return std::nullopt;
        p += *cp;
      }
      return p % 2;
    }
    case Kind::Power: {
      auto cp = children().front().parity();
      if (!cp) return std::nullopt;
      return (*cp * exponent()) % 2;
    }
    case Kind::DivH:
      return children().front().parity();
  }
  return std::nullopt;
}

std::vector<Label> Expr::leaves() const {
  std::vector<Label> out;
  std::function<void(const Expr&)> walk = [&](const Expr& e) {
    if (e.kind() == Kind::Leaf) {
      if (std::find(out.begin(), out.end(), e.label()) == out.end()) out.push_back(e.label());
      return;
    }
    for (const auto& c : e.children()) walk(c);
  };
  walk(*this);
  return out;
}

std::string Expr::str() const {
  switch (kind()) {
    case Kind::Leaf:
      return label().name();
    case Kind::Scalar:
      return to_string(scalar());
    case Kind::Sum: {
      std::string s;
      for (std::size_t k = 0; k < children().size(); ++k) {
        if (k) s += " + ";
        s += children()[k].str();
      }
      return s;
    }
    case Kind::Product: {
      std::string s;
      for (std::size_t k = 0; k < children().size(); ++k) {
        const Expr& c = children()[k];
        if (k) s += '*';
        const bool wrap = c.kind() == Kind::Sum || (c.kind() == Kind::Scalar && c.scalar().coeffs().size() > 1) ||
                          (c.kind() == Kind::Scalar && c.scalar().degree() >= 0 && sgn(c.scalar().lead()) < 0);
        s += wrap ? "(" + c.str() + ")" : c.str();
      }
      return s;
    }
    case Kind::Power: {
      const Expr& b = children().front();
      const std::string inner = b.kind() == Kind::Leaf ? b.str() : "(" + b.str() + ")";
      return inner + "^" + std::to_string(exponent());
    }
    case Kind::DivH:
      return "(" + children().front().str() + ")/h" + (exponent() > 1 ? "^" + std::to_string(exponent()) : "");
  }
  return "?";
}

Expr operator+(const Expr& a, const Expr& b) { return Expr::sum({a, b}); }
Expr operator-(const Expr& a, const Expr& b) { return Expr::sum({a, -b}); }
Expr operator-(const Expr& a) { return Expr::product({Expr(-1L), a}); }
Expr operator*(const Expr& a, const Expr& b) { return Expr::product({a, b}); }

Expr pow(const Expr& base, int k) { return Expr::power(base, k); }

Expr comm(const Expr& a, const Expr& b) {
  const auto pa = a.parity();
  const auto pb = b.parity();
  if (!pa || !pb) throw UndeclaredParity();
  if (*pa * *pb == 1) return a * b + b * a;
  return a * b - b * a;
}

HPoly h_var() { return HPoly::var(); }

Expr substitute(const Expr& e, const LabelMap& images) {
  switch (e.kind()) {
    case Expr::Kind::Leaf: {
      auto img = images(e.label());
      return img ? *img : e;
    }
    case Expr::Kind::Scalar:
      return e;
    case Expr::Kind::Sum: {
      std::vector<Expr> t;
      for (const auto& c : e.children()) t.push_back(substitute(c, images));
      return Expr::sum(std::move(t));
    }
    case Expr::Kind::Product: {
      std::vector<Expr> t;
      for (const auto& c : e.children()) t.push_back(substitute(c, images));
      return Expr::product(std::move(t));
    }
    case Expr::Kind::Power:
      return Expr::power(substitute(e.children().front(), images), e.exponent());
    case Expr::Kind::DivH:
      return Expr::div_h(substitute(e.children().front(), images), e.exponent());
  }
  return e;
}

Expr antipode_image(const Expr& e, const LabelMap& leaf_images, bool koszul) {
  switch (e.kind()) {
    case Expr::Kind::Leaf: {
      auto img = leaf_images(e.label());
      if (!img) throw UnknownGenerator("antipode of " + e.label().name());
      return *img;
    }
    case Expr::Kind::Scalar:
      return e;
    case Expr::Kind::Sum: {
      std::vector<Expr> t;
      for (const auto& c : e.children()) t.push_back(antipode_image(c, leaf_images, koszul));
      return Expr::sum(std::move(t));
    }
    case Expr::Kind::Product: {
      std::vector<Expr> t;
      int swaps = 0;
      int seen_odd = 0;
      for (const auto& c : e.children()) {
        const int p = c.parity().value_or(0);
        swaps += p * seen_odd;
        seen_odd += p;
        t.push_back(antipode_image(c, leaf_images, koszul));
      }
      std::reverse(t.begin(), t.end());
      Expr r = Expr::product(std::move(t));
      return (koszul && swaps % 2 == 1) ? -r : r;
    }
    case Expr::Kind::Power: {
      const Expr& b = e.children().front();
      const int k = e.exponent();
      Expr r = Expr::power(antipode_image(b, leaf_images, koszul), k);
      const int p = b.parity().value_or(0);
      const bool flip = koszul && p == 1 && (k * (k - 1) / 2) % 2 == 1;
      return flip ? -r : r;
    }
    case Expr::Kind::DivH:
      return Expr::div_h(antipode_image(e.children().front(), leaf_images, koszul), e.exponent());
  }
  return e;
}

}  // namespace sjord
