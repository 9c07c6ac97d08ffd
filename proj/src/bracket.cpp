#include "heff/bracket.hpp"

#include <nlohmann/json.hpp>

#include "heff/coproduct.hpp"

namespace heff {

AlgOpPtr HGetCharOp::map(const ValueFn& f) const {
  ValueFn k0 = k;
  return std::make_shared<HGetCharOp>(h, [f, k0](const Value& c) { return f(k0(c)); });
}

AlgOpPtr PrintOp::map(const ValueFn& f) const { return std::make_shared<PrintOp>(s, f(k)); }

AlgOpPtr ReadFileOp::map(const ValueFn& f) const {
  ValueFn k0 = k;
  return std::make_shared<ReadFileOp>(path, [f, k0](const Value& s) { return f(k0(s)); });
}

AlgOpPtr OpenFileOp::map(const ValueFn& f) const {
  ValueFn k0 = k;
  return std::make_shared<OpenFileOp>(path, mode, [f, k0](const Value& h) { return f(k0(h)); });
}

namespace tty {
Computation hGetC(std::int64_t handle) {
  return alg_op(std::make_shared<HGetCharOp>(handle, [](const Value& c) { return Value::of(pure(c)); }));
}
Computation prnt(const std::string& s) {
  return alg_op(std::make_shared<PrintOp>(s, Value::of(pure(unit()))));
}
Computation readF(const std::string& path) {
  return alg_op(std::make_shared<ReadFileOp>(path, [](const Value& s) { return Value::of(pure(s)); }));
}
Computation openF(const std::string& path, const std::string& mode) {
  return alg_op(std::make_shared<OpenFileOp>(path, mode, [](const Value& h) { return Value::of(pure(h)); }));
}
}  // namespace tty

// fmap f (Bracket res) = Bracket (fmap (\(rel, use) -> (rel, fmap f use)) res)
OpPtr KResNode::map_continuation(const ValueFn& f) const {
  Computation body = body_.as<Computation>("res.bracket body");
  Computation mapped = fmap(
      [f](const Value& pr) {
        const VPair& p = pr.as<VPair>("res.bracket pair");
        Computation use = p.second.as<Computation>("res.bracket use");
        return pair(p.first, Value::of(fmap(f, use)));
      },
      body);
  return std::make_shared<KResNode>(Value::of(mapped));
}

// hmap t (Bracket res) = Bracket (t (fmap (\(rel, use) -> (t rel, t use)) res))
OpPtr KResNode::map_inner(const ValueFn& t) const {
  Computation body = body_.as<Computation>("res.bracket body");
  Computation mapped = fmap(
      [t](const Value& pr) {
        const VPair& p = pr.as<VPair>("res.bracket pair");
        return pair(t(p.first), t(p.second));
      },
      body);
  return std::make_shared<KResNode>(t(Value::of(mapped)));
}

namespace res {
Computation brckt(const Computation& body) {
  // Canonical form: the use side becomes a computation returning its
  // continuation computations.
  Computation shaped = fmap(
      [](const Value& pr) {
        const VPair& p = pr.as<VPair>("brckt body result");
        Computation use = p.second.as<Computation>("brckt use");
        return pair(p.first, Value::of(fmap([](const Value& x) { return Value::of(pure(x)); }, use)));
      },
      body);
  return op(std::make_shared<KResNode>(Value::of(shaped)));
}
}  // namespace res

SimWorld SimWorld::with_files(std::map<std::string, std::string> files) {
  SimWorld w;
  w.files = std::move(files);
  return w;
}

SimWorld world_from_json(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  if (!j.is_object()) throw Error("fixture must be a JSON object of path -> contents");
  std::map<std::string, std::string> files;
  for (auto& [path, contents] : j.items()) {
    if (!contents.is_string()) throw Error("fixture contents for '" + path + "' must be a string");
    files[path] = contents.get<std::string>();
  }
  return SimWorld::with_files(std::move(files));
}

// --- h_Bracket ----------------------------------------------------------
//
// Carrier: SimWorld -> (SimWorld, value-or-exception).

namespace {

struct BrStep {
  SimWorld world;
  std::optional<std::string> exc;
  Value value;
};

using BrCarrier = std::function<BrStep(const SimWorld&)>;

Value carrier_of(BrCarrier f) { return Value::of(std::move(f)); }
const BrCarrier& as_carrier(const Value& v, const char* what) { return v.as<BrCarrier>(what); }

BrStep raise(SimWorld w, std::string what) {
  w.raised = what;
  return BrStep{std::move(w), std::move(what), Value()};
}

}  // namespace

BracketRun h_bracket(const Computation& m, const SimWorld& w0) {
  Handler h;
  h.name = "h_bracket";
  h.eta = [](const Value& x) {
    return carrier_of([x](const SimWorld& w) { return BrStep{w, std::nullopt, x}; });
  };
  h.generator = h.eta;
  h.algebra = [&h](const Op& raw) -> Value {
    const Op& n = strip_coproduct(raw);
    if (const auto* a = dynamic_cast<const KAlgNode*>(&n)) {
      if (const auto* g = dynamic_cast<const HGetCharOp*>(a->op_ptr().get())) {
        std::int64_t handle = g->h;
        ValueFn k = g->k;
        return carrier_of([handle, k](const SimWorld& w) {
          auto it = w.handles.find(handle);
          if (it == w.handles.end()) return raise(w, "invalid handle");
          const auto& [path, cursor] = it->second;
          const std::string& contents = w.files.at(path);
          if (cursor >= contents.size()) return raise(w, path + " hGetChar end of file");
          SimWorld w2 = w;
          w2.handles[handle].cursor = cursor + 1;
          return as_carrier(k(from_char(contents[cursor])), "hgetchar continuation")(w2);
        });
      }
      if (const auto* p = dynamic_cast<const PrintOp*>(a->op_ptr().get())) {
        std::string s = p->s;
        Value k = p->k;
        return carrier_of([s, k](const SimWorld& w) {
          SimWorld w2 = w;
          w2.transcript.push_back(s);
          return as_carrier(k, "print continuation")(w2);
        });
      }
      if (const auto* r = dynamic_cast<const ReadFileOp*>(a->op_ptr().get())) {
        std::string path = r->path;
        ValueFn k = r->k;
        return carrier_of([path, k](const SimWorld& w) {
          auto it = w.files.find(path);
          if (it == w.files.end()) return raise(w, "file not found");
          return as_carrier(k(from_string(it->second)), "readfile continuation")(w);
        });
      }
      if (const auto* o = dynamic_cast<const OpenFileOp*>(a->op_ptr().get())) {
        std::string path = o->path;
        ValueFn k = o->k;
        return carrier_of([path, k](const SimWorld& w) {
          if (w.files.find(path) == w.files.end()) return raise(w, "file not found");
          SimWorld w2 = w;
          std::int64_t id = w2.next_handle++;
          w2.handles[id] = SimWorld::OpenHandle{path, 0};
          return as_carrier(k(from_int(id)), "openfile continuation")(w2);
        });
      }
      throw UnhandledEffectError(n.describe(), h.name);
    }
    if (const auto* b = dynamic_cast<const KResNode*>(&n)) {
      // alg_Res (Bracket res) = do (rel, use) <- res
      //                            bracket (return ()) (const rel) (const (join use))
      BrCarrier body = as_carrier(b->body(), "bracket body");
      return carrier_of([body](const SimWorld& w) {
        BrStep acquired = body(w);
        if (acquired.exc) return acquired;  // acquisition failed: nothing to release
        const VPair& p = acquired.value.as<VPair>("bracket (release, use) pair");
        BrCarrier rel = as_carrier(p.first, "bracket release");
        BrCarrier use = as_carrier(p.second, "bracket use");
        BrStep used = use(acquired.world);
        if (!used.exc) used = as_carrier(used.value, "bracket use continuation")(used.world);
        BrStep released = rel(used.world);
        if (released.exc) return released;
        if (used.exc) {
          released.world.raised = used.exc;
          return BrStep{released.world, used.exc, Value()};
        }
        return BrStep{released.world, std::nullopt, used.value};
      });
    }
    throw UnhandledEffectError(n.describe(), h.name);
  };
  BrStep out = as_carrier(fold(h, m), "h_bracket carrier")(w0);
  SimWorld w = out.world;
  w.raised = out.exc;
  return BracketRun{std::move(w), out.exc, out.value};
}

std::vector<std::string> transcript_lines(const BracketRun& run) {
  std::vector<std::string> lines = run.world.transcript;
  if (run.exception) lines.push_back("***Exception: " + *run.exception);
  return lines;
}

}  // namespace heff
