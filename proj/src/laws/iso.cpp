#include "heff/laws/iso.hpp"

#include "heff/algebraic.hpp"
#include "heff/bracket.hpp"
#include "heff/latent.hpp"
#include "heff/parallel.hpp"
#include "heff/scoped.hpp"
#include "heff/writer.hpp"

namespace heff::laws {

std::string_view instance_name(Instance i) {
  switch (i) {
    case Instance::Alg: return "alg";
    case Instance::Sc: return "sc";
    case Instance::Par: return "par";
    case Instance::Write: return "write";
    case Instance::Lat: return "lat";
    case Instance::Res: return "res";
  }
  return "?";
}

// --- algebraic -------------------------------------------------------------
// iso1 (Var x) = Var_H x; iso1 (Op op) = Op_H (Op (fmap iso1 op))

Computation iso1_alg(const SAlgP& t) {
  switch (t->tag) {
    case SAlg::Tag::Leaf: return pure(t->v);
    case SAlg::Tag::Get: {
      Table k = t->k;
      return alg_op(std::make_shared<GetOp>(
          [k](const Value& s) { return Value::of(iso1_alg(k.apply(s).as<SAlgP>())); }));
    }
    case SAlg::Tag::Put:
      return alg_op(std::make_shared<PutOp>(t->v, Value::of(iso1_alg(t->a))));
    case SAlg::Tag::Fail: return alg_op(std::make_shared<FailOp>());
    case SAlg::Tag::Or:
      return alg_op(std::make_shared<OrOp>(Value::of(iso1_alg(t->a)), Value::of(iso1_alg(t->b))));
  }
  throw Error("iso1_alg: bad tag");
}

SAlgP iso2_alg(const Computation& m) {
  if (m.is_pure()) return salg_leaf(m.value());
  const auto* n = dynamic_cast<const KAlgNode*>(&m.node());
  if (!n) throw TagError("iso2_alg on node " + m.node().describe());
  if (const auto* g = dynamic_cast<const GetOp*>(n->op_ptr().get())) {
    Table k{dom_ints(), {}};
    for (const Value& s : dom_ints()->values)
      k.out.push_back(Value::of(iso2_alg(g->k(s).as<Computation>("get slot"))));
    return salg_get(std::move(k));
  }
  if (const auto* p = dynamic_cast<const PutOp*>(n->op_ptr().get()))
    return salg_put(p->s, iso2_alg(p->k.as<Computation>("put slot")));
  if (dynamic_cast<const FailOp*>(n->op_ptr().get())) return salg_fail();
  if (const auto* o = dynamic_cast<const OrOp*>(n->op_ptr().get()))
    return salg_or(iso2_alg(o->p.as<Computation>("or left")), iso2_alg(o->q.as<Computation>("or right")));
  throw TagError("iso2_alg on unknown algebraic payload " + n->describe());
}

// --- scoped ------------------------------------------------------------------
// iso1 (Enter sc) = Op_H (Enter (fmap (iso1 . fmap iso1) sc))
// iso2 (Op_H (Enter sc)) = Enter (fmap (iso2 . fmap iso2) sc)

Computation iso1_sc(const SScP& t) {
  if (t->tag == SSc::Tag::Leaf) return pure(t->v);
  SScP mapped = ssc_fmap(
      [](const Value& leafval) { return Value::of(iso1_sc(leafval.as<SScP>("scoped leaf"))); },
      t->body);
  Value body = Value::of(iso1_sc(mapped));
  if (t->tag == SSc::Tag::Once)
    return op(std::make_shared<KScNode>(std::make_shared<OnceOp>(body)));
  return op(std::make_shared<KScNode>(std::make_shared<CensorOp>(t->wfn.fn(), body)));
}

SScP iso2_sc(const Computation& m) {
  if (m.is_pure()) return ssc_leaf(m.value());
  const auto* n = dynamic_cast<const KScNode*>(&m.node());
  if (!n) throw TagError("iso2_sc on node " + m.node().describe());
  Computation body = n->scope().body().as<Computation>("scope body");
  Computation mapped = fmap(
      [](const Value& leafval) {
        return Value::of(iso2_sc(leafval.as<Computation>("scoped leaf")));
      },
      body);
  SScP spec_body = iso2_sc(mapped);
  if (dynamic_cast<const OnceOp*>(&n->scope())) return ssc_once(spec_body);
  if (const auto* c = dynamic_cast<const CensorOp*>(&n->scope())) {
    Table wfn{dom_ints(), {}};
    for (const Value& w : dom_ints()->values) wfn.out.push_back(c->wfn()(w));
    return ssc_censor(std::move(wfn), spec_body);
  }
  throw TagError("iso2_sc on unknown scope payload " + n->describe());
}

// --- parallel -------------------------------------------------------------------
// iso1 (For iters k) = Op_H (For (fmap iso1 iters) (fmap iso1 k))

Computation iso1_par(const SParP& t) {
  if (t->tag == SPar::Tag::Leaf) return pure(t->v);
  VList iters;
  for (const SParP& it : t->iters) iters.push_back(Value::of(iso1_par(it)));
  Table k = t->k;
  return op(std::make_shared<KParNode>(std::move(iters), [k](const Value& vs) {
    return Value::of(iso1_par(k.apply(vs).as<SParP>()));
  }));
}

SParP iso2_par(const Computation& m) {
  if (m.is_pure()) return spar_leaf(m.value());
  const auto* n = dynamic_cast<const KParNode*>(&m.node());
  if (!n) throw TagError("iso2_par on node " + m.node().describe());
  std::vector<SParP> iters;
  for (const Value& it : n->iters()) iters.push_back(iso2_par(it.as<Computation>("for branch")));
  Table k{dom_vectors(dom_ints2(), n->iters().size()), {}};
  for (const Value& vs : k.dom->values)
    k.out.push_back(Value::of(iso2_par(n->k()(vs).as<Computation>("for continuation"))));
  return spar_for(std::move(iters), std::move(k));
}

// --- writer ------------------------------------------------------------------------
// iso1 (Exec op) = Op_H (Exec ((iso1 . fmap (fmap iso1)) op))
//
// The leaf translation composes: an Exec body's leaves hold decorations whose
// seed slots are trees at the enclosing element type.

namespace {

Computation translate_write(const SWriteP& t, const ValueFn& le) {
  if (t->tag == SWrite::Tag::Leaf) return pure(le(t->v));
  ValueFn le2 = [le](const Value& dv) -> Value {
    const SWDecorP& d = dv.as<SWDecorP>("writer decoration");
    if (d->tag == SWDecor::Tag::Listen) {
      Table k = d->listen_k;
      WriteDecorPtr out = std::make_shared<ListenDecor>([k, le](const Value& w) {
        return Value::of(translate_write(k.apply(w).as<SWriteP>("listen table entry"), le));
      });
      return Value::of(out);
    }
    WriteDecorPtr out =
        std::make_shared<PassDecor>(d->pass_wfn.fn(), Value::of(translate_write(d->pass_seed, le)));
    return Value::of(out);
  };
  return op(std::make_shared<KWriteNode>(Value::of(translate_write(t->body, le2))));
}

SWriteP translate_write_back(const Computation& m, const ValueFn& le) {
  if (m.is_pure()) return swrite_leaf(le(m.value()));
  const auto* n = dynamic_cast<const KWriteNode*>(&m.node());
  if (!n) throw TagError("iso2_write on node " + m.node().describe());
  ValueFn le2 = [le](const Value& dv) -> Value {
    const WriteDecorPtr& d = dv.as<WriteDecorPtr>("writer decoration");
    if (const auto* l = dynamic_cast<const ListenDecor*>(d.get())) {
      Table k{dom_ints2(), {}};
      for (const Value& w : dom_ints2()->values)
        k.out.push_back(
            Value::of(translate_write_back(l->fn()(w).as<Computation>("listen seed"), le)));
      auto out = std::make_shared<SWDecor>();
      out->tag = SWDecor::Tag::Listen;
      out->listen_k = std::move(k);
      return Value::of(SWDecorP(out));
    }
    if (const auto* p = dynamic_cast<const PassDecor*>(d.get())) {
      Table wfn{dom_ints(), {}};
      for (const Value& w : dom_ints()->values) wfn.out.push_back(p->wfn()(w));
      auto out = std::make_shared<SWDecor>();
      out->tag = SWDecor::Tag::Pass;
      out->pass_wfn = std::move(wfn);
      out->pass_seed = translate_write_back(p->seed().as<Computation>("pass seed"), le);
      return Value::of(SWDecorP(out));
    }
    throw TagError("iso2_write on unknown decoration");
  };
  return swrite_exec(translate_write_back(n->body().as<Computation>("writer body"), le2));
}

}  // namespace

Computation iso1_write(const SWriteP& t) {
  return translate_write(t, [](const Value& v) { return v; });
}

SWriteP iso2_write(const Computation& m) {
  return translate_write_back(m, [](const Value& v) { return v; });
}

// --- latent -------------------------------------------------------------------------
// iso1 (Node op l sub k) = Op_H (Node op l (fmap (fmap iso1) sub) (fmap iso1 k))

Computation iso1_lat(const SLatP& t) {
  if (t->tag == SLat::Tag::Leaf) return pure(t->v);
  Table k = t->k;
  ValueFn kf = [k](const Value& p) { return Value::of(iso1_lat(k.apply(p).as<SLatP>())); };
  if (t->is_thunk) {
    SLatP sub = t->st_one;
    return op(std::make_shared<KLatNode>(
        std::make_shared<ThunkOp>(), t->l,
        [sub](int sel, const Value&) -> Value {
          if (sel != 0) throw EvalError("thunk: no such subcomputation selector");
          return Value::of(iso1_lat(sub));
        },
        kf));
  }
  return op(std::make_shared<KLatNode>(
      std::make_shared<ForceOp>(t->force_ptr), t->l,
      [](int, const Value&) -> Value { throw EvalError("force: no subcomputations"); }, kf));
}

SLatP iso2_lat(const Computation& m) {
  if (m.is_pure()) return slat_leaf(m.value());
  const auto* n = dynamic_cast<const KLatNode*>(&m.node());
  if (!n) throw TagError("iso2_lat on node " + m.node().describe());
  Table k{dom_ints(), {}};
  for (const Value& p : dom_ints()->values)
    k.out.push_back(Value::of(iso2_lat(n->k()(p).as<Computation>("latent continuation"))));
  if (dynamic_cast<const ThunkOp*>(n->op_ptr().get())) {
    SLatP sub = iso2_lat(n->st()(0, unit()).as<Computation>("thunk subcomputation"));
    return slat_thunk(sub, std::move(k));
  }
  if (const auto* f = dynamic_cast<const ForceOp*>(n->op_ptr().get()))
    return slat_force(f->ptr, std::move(k));
  throw TagError("iso2_lat on unknown latent payload " + n->describe());
}

// --- bracketing ------------------------------------------------------------------------
// iso1 (Bracket res) = Op_H (Bracket (iso1 (fmap (\(x,y) -> (iso1 x, return (iso1 y))) res)))
// iso2 (Op_H (Bracket res)) = Bracket (iso2 (fmap (\(x,y) -> (iso2 x, iso2 (join y))) res))

namespace {

Computation translate_res(const SResP& t, const ValueFn& le) {
  if (t->tag == SRes::Tag::Leaf) return pure(le(t->v));
  ValueFn le2 = [le](const Value& pv) {
    const VPair& p = pv.as<VPair>("bracket pair");
    ValueFn ident = [](const Value& v) { return v; };
    Computation rel = translate_res(p.first.as<SResP>("bracket release"), ident);
    Computation use = translate_res(p.second.as<SResP>("bracket use"), le);
    return pair(Value::of(rel), Value::of(pure(Value::of(use))));
  };
  return op(std::make_shared<KResNode>(Value::of(translate_res(t->body, le2))));
}

SResP translate_res_back(const Computation& m, const ValueFn& le) {
  if (m.is_pure()) return sres_leaf(le(m.value()));
  const auto* n = dynamic_cast<const KResNode*>(&m.node());
  if (!n) throw TagError("iso2_res on node " + m.node().describe());
  ValueFn le2 = [le](const Value& pv) {
    const VPair& p = pv.as<VPair>("bracket pair");
    ValueFn ident = [](const Value& v) { return v; };
    Computation rel = p.first.as<Computation>("bracket release");
    Computation use = p.second.as<Computation>("bracket use");
    Computation joined =
        bind(use, [](const Value& inner) { return inner.as<Computation>("bracket use leaf"); });
    return pair(Value::of(translate_res_back(rel, ident)),
                Value::of(translate_res_back(joined, le)));
  };
  return sres_bracket(translate_res_back(n->body().as<Computation>("bracket body"), le2));
}

}  // namespace

Computation iso1_res(const SResP& t) {
  return translate_res(t, [](const Value& v) { return v; });
}

SResP iso2_res(const Computation& m) {
  return translate_res_back(m, [](const Value& v) { return v; });
}

}  // namespace heff::laws
