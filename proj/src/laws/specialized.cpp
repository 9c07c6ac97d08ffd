#include "heff/laws/specialized.hpp"

namespace heff::laws {

SAlgP salg_leaf(Value v) {
  return std::make_shared<SAlg>(SAlg{SAlg::Tag::Leaf, std::move(v), {}, nullptr, nullptr});
}
SAlgP salg_get(Table k) {
  return std::make_shared<SAlg>(SAlg{SAlg::Tag::Get, Value(), std::move(k), nullptr, nullptr});
}
SAlgP salg_put(Value s, SAlgP k) {
  return std::make_shared<SAlg>(SAlg{SAlg::Tag::Put, std::move(s), {}, std::move(k), nullptr});
}
SAlgP salg_fail() {
  return std::make_shared<SAlg>(SAlg{SAlg::Tag::Fail, Value(), {}, nullptr, nullptr});
}
SAlgP salg_or(SAlgP p, SAlgP q) {
  return std::make_shared<SAlg>(SAlg{SAlg::Tag::Or, Value(), {}, std::move(p), std::move(q)});
}

SScP ssc_leaf(Value v) { return std::make_shared<SSc>(SSc{SSc::Tag::Leaf, std::move(v), {}, nullptr}); }
SScP ssc_once(SScP body) {
  return std::make_shared<SSc>(SSc{SSc::Tag::Once, Value(), {}, std::move(body)});
}
SScP ssc_censor(Table wfn, SScP body) {
  return std::make_shared<SSc>(SSc{SSc::Tag::Censor, Value(), std::move(wfn), std::move(body)});
}

// fmap f (Var x)    = Var (f x)
// fmap f (Enter sc) = Enter (fmap (fmap (fmap f)) sc)
SScP ssc_fmap(const ValueFn& f, const SScP& t) {
  if (t->tag == SSc::Tag::Leaf) return ssc_leaf(f(t->v));
  ValueFn inner = [f](const Value& leafval) {
    return Value::of(ssc_fmap(f, leafval.as<SScP>("scoped body leaf")));
  };
  SScP body = ssc_fmap(inner, t->body);
  if (t->tag == SSc::Tag::Once) return ssc_once(body);
  return ssc_censor(t->wfn, body);
}

SParP spar_leaf(Value v) {
  return std::make_shared<SPar>(SPar{SPar::Tag::Leaf, std::move(v), {}, {}});
}
SParP spar_for(std::vector<SParP> iters, Table k) {
  return std::make_shared<SPar>(SPar{SPar::Tag::For, Value(), std::move(iters), std::move(k)});
}

SWriteP swrite_leaf(Value v) {
  return std::make_shared<SWrite>(SWrite{SWrite::Tag::Leaf, std::move(v), nullptr});
}
SWriteP swrite_exec(SWriteP body) {
  return std::make_shared<SWrite>(SWrite{SWrite::Tag::Exec, Value(), std::move(body)});
}

SWriteP swrite_fmap(const ValueFn& f, const SWriteP& t) {
  if (t->tag == SWrite::Tag::Leaf) return swrite_leaf(f(t->v));
  // fmap f (Exec op) = Exec (fmap (fmap (fmap f)) op): the decoration's
  // continuation-seed slots hold subtrees.
  ValueFn on_decor = [f](const Value& dv) {
    const SWDecorP& d = dv.as<SWDecorP>("writer body leaf");
    auto out = std::make_shared<SWDecor>(*d);
    if (d->tag == SWDecor::Tag::Listen) {
      for (Value& o : out->listen_k.out)
        o = Value::of(swrite_fmap(f, o.as<SWriteP>("listen table entry")));
    } else {
      out->pass_seed = swrite_fmap(f, d->pass_seed);
    }
    return Value::of(SWDecorP(out));
  };
  return swrite_exec(swrite_fmap(on_decor, t->body));
}

SLatP slat_leaf(Value v) {
  return std::make_shared<SLat>(SLat{SLat::Tag::Leaf, std::move(v), false, 0, unit(), nullptr, {}});
}
SLatP slat_thunk(SLatP st_one, Table k) {
  return std::make_shared<SLat>(
      SLat{SLat::Tag::Node, Value(), true, 0, unit(), std::move(st_one), std::move(k)});
}
SLatP slat_force(std::int64_t ptr, Table k) {
  return std::make_shared<SLat>(
      SLat{SLat::Tag::Node, Value(), false, ptr, unit(), nullptr, std::move(k)});
}

SResP sres_leaf(Value v) {
  return std::make_shared<SRes>(SRes{SRes::Tag::Leaf, std::move(v), nullptr});
}
SResP sres_bracket(SResP body) {
  return std::make_shared<SRes>(SRes{SRes::Tag::Bracket, Value(), std::move(body)});
}

// fmap f (Bracket res) = Bracket (fmap (\(rel, use) -> (rel, fmap f use)) res)
SResP sres_fmap(const ValueFn& f, const SResP& t) {
  if (t->tag == SRes::Tag::Leaf) return sres_leaf(f(t->v));
  ValueFn on_pair = [f](const Value& pv) {
    const VPair& p = pv.as<VPair>("bracket body leaf");
    return pair(p.first, Value::of(sres_fmap(f, p.second.as<SResP>("bracket use"))));
  };
  return sres_bracket(sres_fmap(on_pair, t->body));
}

}  // namespace heff::laws
