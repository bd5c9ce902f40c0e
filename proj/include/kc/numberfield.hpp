#ifndef KC_NUMBERFIELD_HPP
#define KC_NUMBERFIELD_HPP

#include <memory>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "kc/algebraic.hpp"
#include "kc/interval.hpp"
#include "kc/poly.hpp"

namespace kc {

// Arithmetic context for the real field Q(cos t, sin t) where t is an
// AlgebraicAngle.  Generator a = 2 cos t with irreducible minimal polynomial
// m; elements are P(a) + Q(a) * w with w = sin t = sqrt(1 - a^2/4) > 0.
class NFContext {
 public:
  explicit NFContext(const AlgebraicAngle& angle)
      : root_(angle.two_cos()), m_(angle.two_cos().minpoly()) {
    // u = 1 - a^2/4 reduced mod m
    u_ = Poly(std::vector<Rat>{Rat(1), Rat(0), Rat(-1, 4)}) % m_;
  }

  const Poly& minpoly() const { return m_; }
  const Poly& u() const { return u_; }
  const RealAlgebraic& root() const { return root_; }

  Poly reduce(const Poly& p) const { return p % m_; }

  // inverse in Q[a]/(m) by the extended Euclidean algorithm
  Poly invert_base(const Poly& p) const {
    if (p.is_zero()) throw std::domain_error("NF: inverse of zero");
    Poly r0 = m_, r1 = reduce(p), s0, s1{Rat(1)};
    while (!r1.is_zero()) {
      auto [q, r2] = r0.divmod(r1);
      Poly s2 = s0 - q * s1;
      r0 = std::move(r1);
      r1 = std::move(r2);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    if (r0.degree() != 0) throw std::logic_error("NF: minpoly not irreducible");
    return reduce(s0 * (Rat(1) / r0.coeff(0)));
  }

  // exact sign of p(a) for p reduced mod m
  int sign_base(const Poly& p) const {
    if (reduce(p).is_zero()) return 0;
    Poly q = reduce(p);
    for (;;) {
      RatI v = eval_interval(q);
      if (!v.contains_zero()) return v.sign();
      root_.refine();
    }
  }

  RatI eval_interval(const Poly& p) const {
    RatI x{root_.lo(), root_.hi()};
    RatI acc{Rat(0)};
    for (int i = p.degree(); i >= 0; --i) acc = acc * x + RatI{p.coeff(i)};
    return acc;
  }

  RatI sin_interval(long prec) const {
    RatI x{root_.lo(), root_.hi()};
    RatI u = RatI{Rat(1)} - x * x * Rat(1, 4);
    if (sgn(u.lo) < 0) u.lo = Rat(0);
    return sqrt_enclosure(u, prec);
  }

 private:
  mutable RealAlgebraic root_;
  Poly m_, u_;
};

using NFCtxPtr = std::shared_ptr<const NFContext>;

// Element of Q(cos t, sin t).
class NFElt {
 public:
  NFElt() = default;
  NFElt(NFCtxPtr ctx, Poly p, Poly q = Poly())
      : ctx_(std::move(ctx)), p_(ctx_->reduce(p)), q_(ctx_->reduce(q)) {}

  static NFElt rational(const NFCtxPtr& ctx, const Rat& c) { return {ctx, Poly(c)}; }
  static NFElt cos(const NFCtxPtr& ctx) { return {ctx, Poly::monomial(1, Rat(1, 2))}; }
  static NFElt sin(const NFCtxPtr& ctx) { return {ctx, Poly(), Poly(Rat(1))}; }

  const NFCtxPtr& ctx() const { return ctx_; }
  bool is_zero() const { return p_.is_zero() && q_.is_zero(); }

  NFElt operator-() const { return raw(ctx_, -p_, -q_); }
  NFElt operator+(const NFElt& o) const { return raw(ctx_, p_ + o.p_, q_ + o.q_); }
  NFElt operator-(const NFElt& o) const { return raw(ctx_, p_ - o.p_, q_ - o.q_); }
  NFElt operator*(const NFElt& o) const {
    Poly p = p_ * o.p_ + ctx_->reduce(q_ * o.q_) * ctx_->u();
    Poly q = p_ * o.q_ + q_ * o.p_;
    return {ctx_, p, q};
  }

  NFElt inverse() const {
    if (is_zero()) throw std::domain_error("NF: inverse of zero");
    Poly N = ctx_->reduce(p_ * p_ - ctx_->reduce(q_ * q_) * ctx_->u());
    if (!N.is_zero()) {
      Poly ni = ctx_->invert_base(N);
      return {ctx_, ctx_->reduce(p_ * ni), ctx_->reduce(-q_ * ni)};
    }
    // norm zero but element nonzero: w lies in the base field and
    // p - q w = 0, so the value equals 2 p.
    Poly tp = ctx_->reduce(p_ * Rat(2));
    return {ctx_, ctx_->invert_base(tp)};
  }
  NFElt operator/(const NFElt& o) const { return *this * o.inverse(); }

  // exact sign; terminates because zero is decided symbolically
  int sign() const {
    if (is_zero()) return 0;
    Poly N = ctx_->reduce(p_ * p_ - ctx_->reduce(q_ * q_) * ctx_->u());
    if (N.is_zero()) {
      // (p + q w)(p - q w) = 0 with (p, q) != (0, 0) forces p, q both nonzero
      int sp = ctx_->sign_base(p_), sq = ctx_->sign_base(q_);
      if (sp != sq) return 0;  // p + q w is the vanishing factor
      return sq;               // value is 2 q w, w > 0
    }
    long prec = 16;
    for (;;) {
      RatI pv = ctx_->eval_interval(p_);
      RatI qv = ctx_->eval_interval(q_);
      RatI v = pv + qv * ctx_->sin_interval(prec);
      if (!v.contains_zero()) return v.sign();
      ctx_->root().refine();
      prec *= 2;
    }
  }

  bool equals(const NFElt& o) const { return (*this - o).is_zero(); }

  RatI enclosure(long prec) const {
    RatI v = ctx_->eval_interval(p_) + ctx_->eval_interval(q_) * ctx_->sin_interval(prec);
    return v;
  }

 private:
  static NFElt raw(const NFCtxPtr& ctx, Poly p, Poly q) {
    NFElt e;
    e.ctx_ = ctx;
    e.p_ = std::move(p);
    e.q_ = std::move(q);
    return e;
  }
  NFCtxPtr ctx_;
  Poly p_, q_;  // value = p(a) + q(a) w
};

// ---------------------------------------------------------------------------
// Expression layer for certified sign determination: rationals, cos/sin of
// algebraic angles, field operations.  Zero is certified symbolically by the
// minimal-polynomial normal form; nonzero values by interval refinement.

class Expr {
 public:
  enum class Op { Const, Cos, Sin, Add, Sub, Mul, Div, Neg };

  static Expr constant(Rat c) { return Expr(Op::Const, std::move(c)); }
  static Expr cos(AlgebraicAngle a) { return Expr(Op::Cos, std::move(a)); }
  static Expr sin(AlgebraicAngle a) { return Expr(Op::Sin, std::move(a)); }

  friend Expr operator+(Expr a, Expr b) { return Expr(Op::Add, std::move(a), std::move(b)); }
  friend Expr operator-(Expr a, Expr b) { return Expr(Op::Sub, std::move(a), std::move(b)); }
  friend Expr operator*(Expr a, Expr b) { return Expr(Op::Mul, std::move(a), std::move(b)); }
  friend Expr operator/(Expr a, Expr b) { return Expr(Op::Div, std::move(a), std::move(b)); }
  friend Expr operator-(Expr a) { return Expr(Op::Neg, std::move(a)); }

  const AlgebraicAngle* find_angle() const {
    if (angle_) return &*angle_;
    for (const auto& k : kids_)
      if (auto* a = k->find_angle()) return a;
    return nullptr;
  }

  NFElt eval(const NFCtxPtr& ctx) const {
    switch (op_) {
      case Op::Const:
        return NFElt::rational(ctx, value_);
      case Op::Cos:
      case Op::Sin: {
        if (angle_->two_cos().minpoly() != ctx->minpoly() ||
            compare(angle_->two_cos(), ctx->root()) != 0)
          throw std::invalid_argument(
              "certified_sign: expression mixes distinct algebraic angles");
        return op_ == Op::Cos ? NFElt::cos(ctx) : NFElt::sin(ctx);
      }
      case Op::Neg:
        return -kids_[0]->eval(ctx);
      case Op::Add:
        return kids_[0]->eval(ctx) + kids_[1]->eval(ctx);
      case Op::Sub:
        return kids_[0]->eval(ctx) - kids_[1]->eval(ctx);
      case Op::Mul:
        return kids_[0]->eval(ctx) * kids_[1]->eval(ctx);
      case Op::Div:
        return kids_[0]->eval(ctx) / kids_[1]->eval(ctx);
    }
    throw std::logic_error("unreachable");
  }

 private:
  Expr(Op op, Rat v) : op_(op), value_(std::move(v)) {}
  Expr(Op op, AlgebraicAngle a) : op_(op), angle_(std::move(a)) {}
  Expr(Op op, Expr a) : op_(op) { kids_.push_back(std::make_shared<Expr>(std::move(a))); }
  Expr(Op op, Expr a, Expr b) : op_(op) {
    kids_.push_back(std::make_shared<Expr>(std::move(a)));
    kids_.push_back(std::make_shared<Expr>(std::move(b)));
  }

  Op op_;
  Rat value_;
  std::optional<AlgebraicAngle> angle_;
  std::vector<std::shared_ptr<Expr>> kids_;

  friend Expr make_expr_node(Expr::Op, Expr, Expr);
};

inline int certified_sign(const Expr& e) {
  const AlgebraicAngle* a = e.find_angle();
  // without trig leaves any rational angle works as the ambient field
  NFCtxPtr ctx = std::make_shared<NFContext>(
      a ? *a : AlgebraicAngle::from_cos(Rat(1, 2)));
  return e.eval(ctx).sign();
}

}  // namespace kc

#endif
