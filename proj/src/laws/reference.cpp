#include "heff/laws/reference.hpp"

namespace heff::laws {

Value fold_alg_ref(const ValueFn& gen, const AlgRefAlgebra& alg, const SAlgP& t) {
  switch (t->tag) {
    case SAlg::Tag::Leaf: return gen(t->v);
    case SAlg::Tag::Get: {
      Table k = t->k;
      return alg.get([gen, &alg, k](const Value& s) {
        return fold_alg_ref(gen, alg, k.apply(s).as<SAlgP>());
      });
    }
    case SAlg::Tag::Put: return alg.put(t->v, fold_alg_ref(gen, alg, t->a));
    case SAlg::Tag::Fail: return alg.fail();
    case SAlg::Tag::Or:
      return alg.or_(fold_alg_ref(gen, alg, t->a), fold_alg_ref(gen, alg, t->b));
  }
  throw Error("fold_alg_ref: bad tag");
}

namespace {
// h_cata (Var x)      = return_E x
// h_cata (Enter sc)   = enter_E (fmap (h_cata . fmap h_cata) sc)
Value h_cata(const ScRefAlgebra& alg, const SScP& t) {
  if (t->tag == SSc::Tag::Leaf) return alg.eta(t->v);
  SScP mapped = ssc_fmap(
      [&alg](const Value& leafval) { return h_cata(alg, leafval.as<SScP>("scoped leaf")); },
      t->body);
  return alg.enter(*t, h_cata(alg, mapped));
}
}  // namespace

// fold_Sc gen alg alg (Enter sc) = enter_B (fmap endo sc)
//   where endo = h_cata . fmap (fold_Sc gen alg alg)
Value fold_sc_ref(const ValueFn& gen, const ScRefAlgebra& alg, const SScP& t) {
  if (t->tag == SSc::Tag::Leaf) return gen(t->v);
  SScP mapped = ssc_fmap(
      [gen, &alg](const Value& leafval) {
        return fold_sc_ref(gen, alg, leafval.as<SScP>("scoped leaf"));
      },
      t->body);
  return alg.enter(*t, h_cata(alg, mapped));
}

Value fold_par_ref(const ValueFn& gen, const ParRefAlgebra& alg, const SParP& t) {
  if (t->tag == SPar::Tag::Leaf) return gen(t->v);
  VList folded;
  for (const SParP& it : t->iters) folded.push_back(fold_par_ref(alg.h_var, alg, it));
  Table k = t->k;
  return alg.h_for(folded, [gen, &alg, k](const Value& vs) {
    return fold_par_ref(gen, alg, k.apply(vs).as<SParP>());
  });
}

}  // namespace heff::laws
