#include "itercon/sentence.hpp"

#include <functional>
#include <limits>
#include <unordered_map>
#include <utility>

#include "itercon/error.hpp"

namespace itercon {

struct Sentence::Node {
  NodeKind kind = NodeKind::Top;
  std::string name;
  Sentence a{nullptr};
  Sentence b{nullptr};
  Ordinal index;
  AuxTag aux;
  std::size_t size = 1;
  std::size_t hash = 0;
};

namespace {

std::size_t add_sat(std::size_t x, std::size_t y) {
  return x > std::numeric_limits<std::size_t>::max() - y ? std::numeric_limits<std::size_t>::max() : x + y;
}

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Sentence make_node(NodeKind kind, std::string name, const Sentence* a, const Sentence* b, Ordinal index,
                   AuxTag aux);

Sentence::Sentence(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Sentence::Sentence() {
  static const std::shared_ptr<const Node> kTop = [] {
    auto n = std::make_shared<Node>();
    n->hash = mix(0, static_cast<std::size_t>(NodeKind::Top));
    return std::shared_ptr<const Node>(std::move(n));
  }();
  node_ = kTop;
}

NodeKind Sentence::kind() const { return node_->kind; }
const std::string& Sentence::name() const { return node_->name; }
const Sentence& Sentence::operand() const { return node_->a; }
const Sentence& Sentence::left() const { return node_->a; }
const Sentence& Sentence::right() const { return node_->b; }
const Ordinal& Sentence::index() const { return node_->index; }
const AuxTag& Sentence::aux() const { return node_->aux; }
std::size_t Sentence::size() const { return node_->size; }
std::size_t Sentence::hash() const { return node_->hash; }
const void* Sentence::identity() const { return node_.get(); }

bool operator==(const Sentence& x, const Sentence& y) {
  if (x.node_ == y.node_) return true;
  if (!x.node_ || !y.node_) return false;
  const auto& p = *x.node_;
  const auto& q = *y.node_;
  if (p.hash != q.hash || p.kind != q.kind || p.size != q.size) return false;
  switch (p.kind) {
    case NodeKind::Top:
    case NodeKind::Bot:
      return true;
    case NodeKind::Atom:
    case NodeKind::Schematic:
      return p.name == q.name;
    case NodeKind::Not:
    case NodeKind::Con:
    case NodeKind::OneCon:
      return p.a == q.a;
    case NodeKind::ConIter:
      return p.index == q.index && p.a == q.a;
    case NodeKind::ConAux:
      return p.aux == q.aux && p.a == q.a;
    case NodeKind::And:
    case NodeKind::Or:
    case NodeKind::Imp:
      return p.a == q.a && p.b == q.b;
  }
  return false;
}

Sentence make_node(NodeKind kind, std::string name, const Sentence* a, const Sentence* b, Ordinal index,
                   AuxTag aux) {
  auto n = std::make_shared<Sentence::Node>();
  n->kind = kind;
  n->name = std::move(name);
  std::size_t h = mix(0, static_cast<std::size_t>(kind));
  if (!n->name.empty()) h = mix(h, std::hash<std::string>{}(n->name));
  if (a) {
    n->a = *a;
    n->size = add_sat(n->size, a->size());
    h = mix(h, a->hash());
  }
  if (b) {
    n->b = *b;
    n->size = add_sat(n->size, b->size());
    h = mix(h, b->hash());
  }
  if (kind == NodeKind::ConIter) h = mix(h, std::hash<std::string>{}(render(index)));
  if (kind == NodeKind::ConAux) h = mix(mix(h, static_cast<std::size_t>(aux.kind)), aux.level);
  n->index = std::move(index);
  n->aux = aux;
  n->hash = h;
  return Sentence(std::shared_ptr<const Sentence::Node>(std::move(n)));
}

Sentence top() { return Sentence(); }

Sentence bot() {
  static const Sentence kBot = make_node(NodeKind::Bot, {}, nullptr, nullptr, {}, {});
  return kBot;
}

Sentence atom(std::string name) { return make_node(NodeKind::Atom, std::move(name), nullptr, nullptr, {}, {}); }

Sentence schematic(std::string name) {
  return make_node(NodeKind::Schematic, std::move(name), nullptr, nullptr, {}, {});
}

Sentence negation(const Sentence& s) { return make_node(NodeKind::Not, {}, &s, nullptr, {}, {}); }
Sentence conj(const Sentence& a, const Sentence& b) { return make_node(NodeKind::And, {}, &a, &b, {}, {}); }
Sentence disj(const Sentence& a, const Sentence& b) { return make_node(NodeKind::Or, {}, &a, &b, {}, {}); }
Sentence implies(const Sentence& a, const Sentence& b) { return make_node(NodeKind::Imp, {}, &a, &b, {}, {}); }
Sentence iff(const Sentence& a, const Sentence& b) { return conj(implies(a, b), implies(b, a)); }
Sentence con(const Sentence& s) { return make_node(NodeKind::Con, {}, &s, nullptr, {}, {}); }

Sentence con_iter(const Ordinal& index, const Sentence& s) {
  return make_node(NodeKind::ConIter, {}, &s, nullptr, index, {});
}

Sentence con_iter(std::uint64_t index, const Sentence& s) { return con_iter(Ordinal::finite(index), s); }
Sentence one_con(const Sentence& s) { return make_node(NodeKind::OneCon, {}, &s, nullptr, {}, {}); }

Sentence con_cut_free(const Sentence& s) {
  return make_node(NodeKind::ConAux, {}, &s, nullptr, {}, AuxTag{AuxTag::Kind::CutFree, 0});
}

Sentence con_isigma(std::uint64_t level, const Sentence& s) {
  return make_node(NodeKind::ConAux, {}, &s, nullptr, {}, AuxTag{AuxTag::Kind::ISigma, level});
}

Sentence provable(const Sentence& s) { return negation(con(negation(s))); }

Sentence conj_all(const std::vector<Sentence>& parts) {
  if (parts.empty()) return top();
  Sentence acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = conj(acc, parts[i]);
  return acc;
}

Sentence disj_all(const std::vector<Sentence>& parts) {
  if (parts.empty()) return bot();
  Sentence acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = disj(acc, parts[i]);
  return acc;
}

const Sentence& check_size(const Sentence& s, std::size_t cap) {
  if (s.size() > cap)
    throw SizeCapExceeded("sentence has " + std::to_string(s.size()) + " nodes, cap is " + std::to_string(cap));
  return s;
}

const SchematicVocabulary& SchematicVocabulary::standard() {
  static const SchematicVocabulary kStandard = [] {
    SchematicVocabulary v;
    for (const char* p : {"theta1_", "theta_succ_", "theta_body_", "true_pi1_", "true_pi2_", "true_pi3_",
                          "true_pi01_", "F_eps0_total_at_", "phi1_", "ti_pi01_", "hyp_"})
      v.add_prefix(p);
    return v;
  }();
  return kStandard;
}

void SchematicVocabulary::add_name(std::string name) { names_.insert(std::move(name)); }
void SchematicVocabulary::add_prefix(std::string prefix) { prefixes_.push_back(std::move(prefix)); }

bool SchematicVocabulary::contains(std::string_view name) const {
  if (names_.find(name) != names_.end()) return true;
  for (const auto& p : prefixes_)
    if (name.size() > p.size() && name.substr(0, p.size()) == p) return true;
  return false;
}

namespace {

void render_into(const Sentence& s, std::string& out) {
  switch (s.kind()) {
    case NodeKind::Top:
      out += 'T';
      return;
    case NodeKind::Bot:
      out += 'F';
      return;
    case NodeKind::Atom:
      out += s.name();
      return;
    case NodeKind::Schematic:
      out += '@';
      out += s.name();
      return;
    case NodeKind::Not:
      out += '~';
      render_into(s.operand(), out);
      return;
    case NodeKind::And:
    case NodeKind::Or:
    case NodeKind::Imp:
      out += '(';
      render_into(s.left(), out);
      out += s.kind() == NodeKind::And ? " & " : s.kind() == NodeKind::Or ? " | " : " -> ";
      render_into(s.right(), out);
      out += ')';
      return;
    case NodeKind::Con:
      out += "Con(";
      break;
    case NodeKind::ConIter:
      out += "Con[" + render(s.index()) + "](";
      break;
    case NodeKind::OneCon:
      out += "1Con(";
      break;
    case NodeKind::ConAux:
      out += s.aux().kind == AuxTag::Kind::CutFree ? std::string("ConCF(")
                                                   : "ConI[" + std::to_string(s.aux().level) + "](";
      break;
  }
  render_into(s.operand(), out);
  out += ')';
}

class Unfolder {
 public:
  Unfolder(std::uint64_t budget, std::size_t cap) : budget_(budget), cap_(cap) {}

  Sentence run(const Sentence& s) {
    auto it = memo_.find(s.identity());
    if (it != memo_.end()) return it->second;
    Sentence out = s;
    switch (s.kind()) {
      case NodeKind::Top:
      case NodeKind::Bot:
      case NodeKind::Atom:
      case NodeKind::Schematic:
        break;
      case NodeKind::Not:
      case NodeKind::Con:
      case NodeKind::OneCon:
      case NodeKind::ConAux: {
        Sentence x = run(s.operand());
        if (!(x.identity() == s.operand().identity())) {
          out = s.kind() == NodeKind::Not   ? negation(x)
                : s.kind() == NodeKind::Con ? con(x)
                : s.kind() == NodeKind::OneCon
                    ? one_con(x)
                    : (s.aux().kind == AuxTag::Kind::CutFree ? con_cut_free(x) : con_isigma(s.aux().level, x));
        }
        break;
      }
      case NodeKind::And:
      case NodeKind::Or:
      case NodeKind::Imp: {
        Sentence a = run(s.left());
        Sentence b = run(s.right());
        if (a.identity() != s.left().identity() || b.identity() != s.right().identity()) {
          out = s.kind() == NodeKind::And ? conj(a, b) : s.kind() == NodeKind::Or ? disj(a, b) : implies(a, b);
        }
        break;
      }
      case NodeKind::ConIter:
        out = iterate(s.index(), run(s.operand()));
        break;
    }
    check_size(out, cap_);
    memo_.emplace(s.identity(), out);
    return out;
  }

  bool exact() const { return exact_; }

 private:
  Sentence iterate(const Ordinal& index, const Sentence& body) {
    if (auto k = index.as_finite()) {
      Sentence acc = top();
      for (std::uint64_t i = 0; i < *k; ++i) acc = check_size(con(conj(body, acc)), cap_);
      return acc;
    }
    if (classify(index) == OrdinalKind::Successor)
      return check_size(con(conj(body, iterate(predecessor(index), body))), cap_);
    exact_ = false;
    std::vector<Sentence> parts;
    for (std::uint64_t i = 0; i < budget_; ++i) parts.push_back(iterate(fundamental_step(index, i), body));
    return check_size(conj_all(parts), cap_);
  }

  std::uint64_t budget_;
  std::size_t cap_;
  bool exact_ = true;
  std::unordered_map<const void*, Sentence> memo_;
};

template <typename Pred>
bool any_node(const Sentence& s, Pred pred, std::unordered_map<const void*, bool>& seen) {
  auto it = seen.find(s.identity());
  if (it != seen.end()) return it->second;
  bool hit = pred(s);
  if (!hit) {
    switch (s.kind()) {
      case NodeKind::Top:
      case NodeKind::Bot:
      case NodeKind::Atom:
      case NodeKind::Schematic:
        break;
      case NodeKind::And:
      case NodeKind::Or:
      case NodeKind::Imp:
        hit = any_node(s.left(), pred, seen) || any_node(s.right(), pred, seen);
        break;
      default:
        hit = any_node(s.operand(), pred, seen);
    }
  }
  seen.emplace(s.identity(), hit);
  return hit;
}

template <typename Pred>
bool any_node(const Sentence& s, Pred pred) {
  std::unordered_map<const void*, bool> seen;
  return any_node(s, pred, seen);
}

}  // namespace

std::string render(const Sentence& s) {
  std::string out;
  render_into(s, out);
  return out;
}

UnfoldResult unfold_iter(const Sentence& s, std::uint64_t budget, std::size_t size_cap) {
  if (budget < 1) throw PreconditionFailed("unfold_iter needs a limit budget of at least 1");
  Unfolder u(budget, size_cap);
  Sentence out = u.run(s);
  return UnfoldResult{out, u.exact()};
}

bool is_letterless(const Sentence& s) {
  return !any_node(s, [](const Sentence& x) {
    auto k = x.kind();
    return k == NodeKind::Atom || k == NodeKind::Schematic || k == NodeKind::OneCon || k == NodeKind::ConAux;
  });
}

bool has_infinite_index(const Sentence& s) {
  return any_node(s, [](const Sentence& x) { return x.kind() == NodeKind::ConIter && !x.index().as_finite(); });
}

std::set<std::string> atom_names(const Sentence& s) {
  std::set<std::string> out;
  any_node(s, [&out](const Sentence& x) {
    if (x.kind() == NodeKind::Atom) out.insert(x.name());
    if (x.kind() == NodeKind::Schematic) out.insert("@" + x.name());
    return false;
  });
  return out;
}

}  // namespace itercon
