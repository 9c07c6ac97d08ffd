#include "heff/latent.hpp"

#include <sstream>

namespace heff {

OpPtr KLatNode::map_inner(const ValueFn& t) const {
  LatSubFn st = st_;
  return std::make_shared<KLatNode>(op_, l_, [t, st](int sel, const Value& l) { return t(st(sel, l)); },
                                    k_);
}

OpPtr KLatNode::map_continuation(const ValueFn& f) const {
  ValueFn k = k_;
  return std::make_shared<KLatNode>(op_, l_, st_, [f, k](const Value& lp) { return f(k(lp)); });
}

namespace lat {

Computation thunk(const Computation& body) {
  return op(std::make_shared<KLatNode>(
      std::make_shared<ThunkOp>(), unit(),
      [body](int sel, const Value&) -> Value {
        if (sel != 0) throw EvalError("thunk: no such subcomputation selector");
        return Value::of(body);
      },
      [](const Value& p) { return Value::of(pure(p)); }));
}

Computation force_(std::int64_t p) {
  return op(std::make_shared<KLatNode>(
      std::make_shared<ForceOp>(p), unit(),
      [](int, const Value&) -> Value { throw EvalError("force: no subcomputations"); },
      [](const Value& v) { return Value::of(pure(v)); }));
}

}  // namespace lat

const Value& LazyCell::force() const {
  if (!memo_) memo_ = compute_();
  return *memo_;
}

Value env_entry(const Value& env, std::int64_t index) {
  return Value::of(std::make_shared<LazyCell>([env, index]() -> Value {
    const VList& nv = env.as<VList>("environment");
    if (index < 0 || static_cast<std::size_t>(index) >= nv.size())
      throw EvalError("unbound variable (index " + std::to_string(index) + ")");
    return force_entry(nv[static_cast<std::size_t>(index)]);
  }));
}

Value force_entry(const Value& entry) {
  if (const auto* cell = entry.as_if<LazyCellPtr>()) return (*cell)->force();
  return entry;
}

namespace lam {

Computation var_(std::int64_t x) {
  return bind(reader::ask(), [x](const Value& nv) {
    return scope::local(list(VList{env_entry(nv, x)}), lat::force_(0));
  });
}

Computation abs_(const Computation& body) { return pure(Value::of(Vabs{body})); }

Computation app(const Computation& e1, const Computation& e2) {
  return bind(e1, [e2](const Value& vf) {
    return bind(reader::ask(), [e2, vf](const Value& nv) {
      return bind(lat::thunk(e2), [nv, vf](const Value& p) -> Computation {
        if (const auto* f = vf.as_if<Vabs>())
          return scope::local(list(VList{env_entry(nv, p.as<std::int64_t>("thunk pointer"))}),
                              f->body);
        throw EvalError("apply non-function");
      });
    });
  });
}

}  // namespace lam

// --- Handlers ------------------------------------------------------------
//
// Carrier: (s, nv, th) -> ((s', th'), x), erased as LatCarrier.

namespace {

using LatCarrier = std::function<LazyResult(const Value& s, const Value& nv, const ThunkStore& th)>;

Value carrier_of(LatCarrier f) { return Value::of(std::move(f)); }
const LatCarrier& as_carrier(const Value& v, const char* what) { return v.as<LatCarrier>(what); }

Handler lat_handler(const char* name, bool eager) {
  Handler h;
  h.name = name;
  h.eta = [](const Value& x) {
    return carrier_of([x](const Value& s, const Value&, const ThunkStore& th) {
      return LazyResult{s, th, x};
    });
  };
  h.generator = h.eta;
  std::string handler_name = name;
  h.algebra = [handler_name, eager](const Op& n) -> Value {
    if (const auto* a = dynamic_cast<const KAlgNode*>(&n)) {
      if (const auto* g = dynamic_cast<const GetOp*>(a->op_ptr().get())) {
        ValueFn k = g->k;
        return carrier_of([k](const Value& s, const Value& nv, const ThunkStore& th) {
          return as_carrier(k(s), "get continuation")(s, nv, th);
        });
      }
      if (const auto* p = dynamic_cast<const PutOp*>(a->op_ptr().get())) {
        Value s1 = p->s;
        Value k = p->k;
        return carrier_of([s1, k](const Value&, const Value& nv, const ThunkStore& th) {
          return as_carrier(k, "put continuation")(s1, nv, th);
        });
      }
      if (const auto* q = dynamic_cast<const AskOp*>(a->op_ptr().get())) {
        ValueFn k = q->k;
        return carrier_of([k](const Value& s, const Value& nv, const ThunkStore& th) {
          return as_carrier(k(nv), "ask continuation")(s, nv, th);
        });
      }
      throw UnhandledEffectError(n.describe(), handler_name);
    }
    if (const auto* sc = dynamic_cast<const KScNode*>(&n)) {
      const auto* loc = dynamic_cast<const LocalOp*>(sc->scope_ptr().get());
      if (!loc) throw UnhandledEffectError(n.describe(), handler_name);
      Value env = loc->env();
      Value body = loc->body();
      // Run the body under the replaced environment; the continuation it
      // returns runs under the original one.
      return carrier_of([env, body](const Value& s, const Value& nv, const ThunkStore& th) {
        LazyResult r = as_carrier(body, "local body")(s, env, th);
        return as_carrier(r.result, "local continuation")(r.state, nv, r.store);
      });
    }
    if (const auto* lt = dynamic_cast<const KLatNode*>(&n)) {
      Value l = lt->latent_state();
      LatSubFn st = lt->st();
      ValueFn k = lt->k();
      if (dynamic_cast<const ThunkOp*>(lt->op_ptr().get())) {
        if (!eager) {
          // k (length th <$ l) s nv (th ++ [Left (st One)])
          return carrier_of([l, st, k](const Value& s, const Value& nv, const ThunkStore& th) {
            Value ptr = from_int(static_cast<std::int64_t>(th.size()));
            ThunkStore grown = th;
            ThunkEntry entry;
            entry.suspended = [st](const Value& lf) { return st(0, lf); };
            grown.push_back(std::move(entry));
            return as_carrier(k(ptr), "thunk continuation")(s, nv, grown);
          });
        }
        // Eager: run the body now, append the memoized value.
        return carrier_of([l, st, k](const Value& s, const Value& nv, const ThunkStore& th) {
          LazyResult r = as_carrier(st(0, l), "eager thunk body")(s, nv, th);
          Value ptr = from_int(static_cast<std::int64_t>(r.store.size()));
          ThunkStore grown = r.store;
          ThunkEntry entry;
          entry.memo = r.result;
          grown.push_back(std::move(entry));
          return as_carrier(k(ptr), "thunk continuation")(r.state, nv, grown);
        });
      }
      if (const auto* fo = dynamic_cast<const ForceOp*>(lt->op_ptr().get())) {
        std::int64_t p = fo->ptr;
        return carrier_of([l, k, p, eager](const Value& s, const Value& nv, const ThunkStore& th) {
          if (p < 0 || static_cast<std::size_t>(p) >= th.size())
            throw EvalError("dangling thunk pointer (" + std::to_string(p) + ")");
          const ThunkEntry& entry = th[static_cast<std::size_t>(p)];
          if (entry.memoized())
            return as_carrier(k(*entry.memo), "force continuation")(s, nv, th);
          if (eager) throw EvalError("unevaluated thunk in eager mode");
          // Evaluate once, memoize in place, continue.
          LazyResult r = as_carrier(entry.suspended(l), "suspended thunk")(s, nv, th);
          ThunkStore updated = r.store;
          updated[static_cast<std::size_t>(p)].suspended = nullptr;
          updated[static_cast<std::size_t>(p)].memo = r.result;
          return as_carrier(k(r.result), "force continuation")(r.state, nv, updated);
        });
      }
    }
    throw UnhandledEffectError(n.describe(), handler_name);
  };
  return h;
}

}  // namespace

LazyResult h_lazy(const Computation& m, const Value& s0, const Value& nv0, const ThunkStore& th0) {
  Handler h = lat_handler("h_lazy", /*eager=*/false);
  return as_carrier(fold(h, m), "h_lazy carrier")(s0, nv0, th0);
}

LazyResult h_eager(const Computation& m, const Value& s0, const Value& nv0, const ThunkStore& th0) {
  Handler h = lat_handler("h_eager", /*eager=*/true);
  return as_carrier(fold(h, m), "h_eager carrier")(s0, nv0, th0);
}

std::string render_store(const ThunkStore& th) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < th.size(); ++i) {
    if (i) os << ',';
    if (th[i].memoized())
      os << "Right " << render_v(*th[i].memo);
    else
      os << "Left <thunk>";
  }
  os << ']';
  return os.str();
}

std::string render_v(const Value& v) {
  if (const auto* n = v.as_if<Vnum>()) return std::to_string(n->n);
  if (v.as_if<Vabs>()) return "<abs>";
  return render(v);
}

}  // namespace heff
