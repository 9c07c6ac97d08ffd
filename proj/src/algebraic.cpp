#include "heff/algebraic.hpp"

#include "heff/coproduct.hpp"

namespace heff {

Computation alg_op(AlgOpPtr op) { return heff::op(std::make_shared<KAlgNode>(std::move(op))); }

AlgOpPtr GetOp::map(const ValueFn& f) const {
  ValueFn k0 = k;
  return std::make_shared<GetOp>([f, k0](const Value& s) { return f(k0(s)); });
}

AlgOpPtr PutOp::map(const ValueFn& f) const { return std::make_shared<PutOp>(s, f(k)); }

AlgOpPtr FailOp::map(const ValueFn&) const { return std::make_shared<FailOp>(); }

AlgOpPtr OrOp::map(const ValueFn& f) const { return std::make_shared<OrOp>(f(p), f(q)); }

AlgOpPtr AccumOp::map(const ValueFn& f) const { return std::make_shared<AccumOp>(m, f(k)); }

AlgOpPtr TellOp::map(const ValueFn& f) const { return std::make_shared<TellOp>(w, f(k)); }

AlgOpPtr AskOp::map(const ValueFn& f) const {
  ValueFn k0 = k;
  return std::make_shared<AskOp>([f, k0](const Value& nv) { return f(k0(nv)); });
}

namespace state {
Computation get() {
  return alg_op(std::make_shared<GetOp>([](const Value& s) { return Value::of(pure(s)); }));
}
Computation put(Value s) {
  return alg_op(std::make_shared<PutOp>(std::move(s), Value::of(pure(unit()))));
}
}  // namespace state

namespace nd {
Computation fail_() { return alg_op(std::make_shared<FailOp>()); }
Computation or_(const Computation& p, const Computation& q) {
  return alg_op(std::make_shared<OrOp>(Value::of(p), Value::of(q)));
}
}  // namespace nd

namespace acc {
Computation accum(Value m) {
  return alg_op(std::make_shared<AccumOp>(std::move(m), Value::of(pure(unit()))));
}
}  // namespace acc

namespace wr {
Computation tell(Value w) {
  return alg_op(std::make_shared<TellOp>(std::move(w), Value::of(pure(unit()))));
}
}  // namespace wr

namespace reader {
Computation ask() {
  return alg_op(std::make_shared<AskOp>([](const Value& nv) { return Value::of(pure(nv)); }));
}
}  // namespace reader

// --- h_State --------------------------------------------------------------
//
// Carrier: s -> residual computation of (a, s), erased as a ValueFn whose
// result wraps the residual Computation.

namespace {

Computation apply_state_carrier(const Value& carrier, const Value& s) {
  return carrier.as<ValueFn>("state carrier")(s).as<Computation>("state carrier result");
}

}  // namespace

Computation h_state(const Computation& m, const Value& s0) {
  Handler h;
  h.name = "h_state";
  h.eta = [](const Value& x) {
    return Value::of(ValueFn([x](const Value& s) { return Value::of(pure(pair(x, s))); }));
  };
  h.generator = h.eta;
  h.algebra = [&h](const Op& raw) -> Value {
    const Op& n = strip_coproduct(raw);
    const auto* a = dynamic_cast<const KAlgNode*>(&n);
    if (!a) throw UnhandledEffectError(n.describe(), h.name);
    if (const auto* g = dynamic_cast<const GetOp*>(a->op_ptr().get())) {
      ValueFn k = g->k;
      return Value::of(ValueFn([k](const Value& s) { return Value::of(apply_state_carrier(k(s), s)); }));
    }
    if (const auto* p = dynamic_cast<const PutOp*>(a->op_ptr().get())) {
      Value s1 = p->s;
      Value k = p->k;
      return Value::of(
          ValueFn([s1, k](const Value&) { return Value::of(apply_state_carrier(k, s1)); }));
    }
    // fwd op = \s -> Op (fmap ($ s) op)
    AlgOpPtr fwd = a->op_ptr();
    return Value::of(ValueFn([fwd](const Value& s) {
      AlgOpPtr applied = fwd->map([s](const Value& slot) {
        return Value::of(apply_state_carrier(slot, s));
      });
      return Value::of(op(std::make_shared<KAlgNode>(applied)));
    }));
  };
  Value carrier = fold(h, m);
  return apply_state_carrier(carrier, s0);
}

VPair run_state(const Computation& m, const Value& s0) {
  return run_closed(h_state(m, s0), "run_state").as<VPair>("run_state result");
}

// --- h_ND -----------------------------------------------------------------
//
// Carrier: residual computation of [a].

namespace {
Computation nd_carrier(const Value& v) { return v.as<Computation>("nd carrier"); }
}  // namespace

Computation h_nd(const Computation& m) {
  Handler h;
  h.name = "h_nd";
  h.eta = [](const Value& x) { return Value::of(pure(list(VList{x}))); };
  h.generator = h.eta;
  h.algebra = [&h](const Op& raw) -> Value {
    const Op& n = strip_coproduct(raw);
    const auto* a = dynamic_cast<const KAlgNode*>(&n);
    if (!a) throw UnhandledEffectError(n.describe(), h.name);
    if (dynamic_cast<const FailOp*>(a->op_ptr().get())) return Value::of(pure(list(VList{})));
    if (const auto* o = dynamic_cast<const OrOp*>(a->op_ptr().get())) {
      Computation p = nd_carrier(o->p);
      Computation q = nd_carrier(o->q);
      return Value::of(bind(p, [q](const Value& xs) {
        return bind(q, [xs](const Value& ys) {
          VList out = xs.as<VList>("or left results");
          const VList& more = ys.as<VList>("or right results");
          out.insert(out.end(), more.begin(), more.end());
          return pure(list(std::move(out)));
        });
      }));
    }
    // fwd = Op . Op: slots already hold residual computations.
    return Value::of(op(std::make_shared<KAlgNode>(a->op_ptr())));
  };
  return nd_carrier(fold(h, m));
}

VList run_nd(const Computation& m) {
  return run_closed(h_nd(m), "run_nd").as<VList>("run_nd result");
}

}  // namespace heff
