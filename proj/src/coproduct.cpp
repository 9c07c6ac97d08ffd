#include "heff/coproduct.hpp"

namespace heff {

OpPtr CoproductNode::map_continuation(const ValueFn& f) const {
  return std::make_shared<CoproductNode>(left_, inner_->map_continuation(f));
}

OpPtr CoproductNode::map_inner(const ValueFn& t) const {
  return std::make_shared<CoproductNode>(left_, inner_->map_inner(t));
}

OpPtr inl(OpPtr node) { return std::make_shared<CoproductNode>(true, std::move(node)); }
OpPtr inr(OpPtr node) { return std::make_shared<CoproductNode>(false, std::move(node)); }

std::function<Value(const Op&)> case_split(std::function<Value(const Op&)> l,
                                           std::function<Value(const Op&)> r) {
  return [l = std::move(l), r = std::move(r)](const Op& n) {
    const auto* co = dynamic_cast<const CoproductNode*>(&n);
    if (!co) throw Error("case_split on non-coproduct node " + n.describe());
    return co->left() ? l(*co->inner()) : r(*co->inner());
  };
}

const Op& strip_coproduct(const Op& n) {
  const Op* cur = &n;
  while (const auto* co = dynamic_cast<const CoproductNode*>(cur)) cur = co->inner().get();
  return *cur;
}

}  // namespace heff
