#include "tableau.hpp"

#include <algorithm>
#include <deque>

namespace itercon::detail {

std::size_t GlTableau::SeedHash::operator()(const std::vector<int>& v) const {
  std::size_t h = 1469598103934665603ULL;
  for (int x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
  return h;
}

GlTableau::GlTableau(const OracleConfig& config) : config_(config) {
  store_.push_back({TOP, -1, -1});
  store_.push_back({BOT, -1, -1});
  negation_ = {BOT, TOP};
}

int GlTableau::make(Op op, int a, int b) {
  switch (op) {
    case AND:
      if (a == BOT || b == BOT) return BOT;
      if (a == TOP) return b;
      if (b == TOP || a == b) return a;
      if (a > b) std::swap(a, b);
      break;
    case OR:
      if (a == TOP || b == TOP) return TOP;
      if (a == BOT) return b;
      if (b == BOT || a == b) return a;
      if (a > b) std::swap(a, b);
      break;
    case BOX:
      if (a == TOP) return TOP;
      break;
    case DIA:
      if (a == BOT) return BOT;
      break;
    default:
      break;
  }
  std::uint64_t key = static_cast<std::uint64_t>(op) | (static_cast<std::uint64_t>(a + 1) << 3) |
                      (static_cast<std::uint64_t>(b + 1) << 33);
  auto [it, fresh] = interned_.try_emplace(key, static_cast<int>(store_.size()));
  if (fresh) {
    store_.push_back({op, a, b});
    negation_.push_back(-1);
  }
  return it->second;
}

int GlTableau::negate(int f) {
  if (negation_[f] >= 0) return negation_[f];
  Formula x = store_[f];
  int g;
  switch (x.op) {
    case ATOM: g = make(NATOM, x.a); break;
    case NATOM: g = make(ATOM, x.a); break;
    case AND: g = make(OR, negate(x.a), negate(x.b)); break;
    case OR: g = make(AND, negate(x.a), negate(x.b)); break;
    case BOX: g = make(DIA, negate(x.a)); break;
    case DIA: g = make(BOX, negate(x.a)); break;
    default: g = x.op == TOP ? BOT : TOP;
  }
  negation_[f] = g;
  negation_[g] = f;
  return g;
}

int GlTableau::atom_index(const std::string& name) {
  auto [it, fresh] = atom_ids_.try_emplace(name, static_cast<int>(atom_names_.size()));
  if (fresh) atom_names_.push_back(name);
  return it->second;
}

int GlTableau::translate(const Sentence& s, bool positive) {
  auto& memo = translated_[positive ? 1 : 0];
  auto it = memo.find(s.identity());
  if (it != memo.end()) return it->second;
  int out;
  switch (s.kind()) {
    case NodeKind::Top:
      out = positive ? TOP : BOT;
      break;
    case NodeKind::Bot:
      out = positive ? BOT : TOP;
      break;
    case NodeKind::Atom:
    case NodeKind::Schematic: {
      int id = atom_index(s.kind() == NodeKind::Atom ? s.name() : "@" + s.name());
      out = make(positive ? ATOM : NATOM, id);
      break;
    }
    case NodeKind::Not:
      out = translate(s.operand(), !positive);
      break;
    case NodeKind::And:
      out = make(positive ? AND : OR, translate(s.left(), positive), translate(s.right(), positive));
      break;
    case NodeKind::Or:
      out = make(positive ? OR : AND, translate(s.left(), positive), translate(s.right(), positive));
      break;
    case NodeKind::Imp:
      out = make(positive ? OR : AND, translate(s.left(), !positive), translate(s.right(), positive));
      break;
    case NodeKind::Con:
      out = make(positive ? DIA : BOX, translate(s.operand(), positive));
      break;
    case NodeKind::ConIter: {
      std::uint64_t k = *s.index().as_finite();
      if (k > config_.size_cap)
        throw Exhausted{"iteration index " + std::to_string(k) + " exceeds the size cap"};
      int body = translate(s.operand(), positive);
      out = positive ? TOP : BOT;
      for (std::uint64_t i = 0; i < k; ++i)
        out = positive ? make(DIA, make(AND, body, out)) : make(BOX, make(OR, body, out));
      break;
    }
    default:
      throw Exhausted{"node outside the decidable fragment"};
  }
  memo.emplace(s.identity(), out);
  return out;
}

bool GlTableau::contains(const std::vector<int>& set, int f) const {
  return std::binary_search(set.begin(), set.end(), f);
}

bool GlTableau::add(std::vector<int>& set, int f) {
  if (f == TOP) return true;
  if (f == BOT) return false;
  auto pos = std::lower_bound(set.begin(), set.end(), f);
  if (pos != set.end() && *pos == f) return true;
  int nf = negate(f);
  if (contains(set, nf)) return false;
  set.insert(std::lower_bound(set.begin(), set.end(), f), f);
  if (store_[f].op == AND) {
    Formula x = store_[f];
    return add(set, x.a) && add(set, x.b);
  }
  return true;
}

int GlTableau::sat(std::vector<int> seed) {
  std::sort(seed.begin(), seed.end());
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
  auto it = memo_.find(seed);
  if (it != memo_.end()) return it->second;
  std::vector<int> set;
  bool ok = true;
  for (int f : seed) {
    if (!add(set, f)) {
      ok = false;
      break;
    }
  }
  int result = ok ? search(set) : -1;
  memo_.emplace(std::move(seed), result);
  return result;
}

int GlTableau::search(std::vector<int>& set) {
  if (++steps_ > config_.budget) throw Exhausted{"tableau budget exhausted"};
  for (int f : set) {
    Formula x = store_[f];
    if (x.op != OR || contains(set, x.a) || contains(set, x.b)) continue;
    std::vector<int> left = set;
    if (add(left, x.a)) {
      int r = search(left);
      if (r >= 0) return r;
    }
    int na = negate(x.a);
    if (!add(set, na) || !add(set, x.b)) return -1;
    return search(set);
  }
  std::vector<int> boxes;
  for (int f : set) {
    if (store_[f].op == BOX) {
      boxes.push_back(f);
      boxes.push_back(store_[f].a);
    }
  }
  World w;
  for (int f : set) {
    Formula x = store_[f];
    if (x.op == ATOM) w.atoms.push_back(x.a);
    if (x.op != DIA) continue;
    std::vector<int> seed = boxes;
    seed.push_back(x.a);
    seed.push_back(make(BOX, negate(x.a)));
    int child = sat(std::move(seed));
    if (child < 0) return -1;
    w.children.push_back(child);
  }
  worlds_.push_back(std::move(w));
  return static_cast<int>(worlds_.size()) - 1;
}

Verdict GlTableau::extract(int root) {
  std::vector<int> order;
  std::unordered_map<int, std::size_t> index;
  std::deque<int> queue{root};
  index.emplace(root, 0);
  order.push_back(root);
  while (!queue.empty()) {
    int e = queue.front();
    queue.pop_front();
    for (int c : worlds_[e].children) {
      if (index.emplace(c, order.size()).second) {
        order.push_back(c);
        if (order.size() > config_.model_cap)
          return Verdict::unknown("countermodel exceeds " + std::to_string(config_.model_cap) + " worlds", true);
        queue.push_back(c);
      }
    }
  }
  std::size_t n = order.size();
  // Transitive closure over a DFS post-order, so every child is closed before its parents.
  std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
  std::vector<int> state(n, 0);
  std::vector<std::size_t> post;
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  for (std::size_t start = 0; start < n; ++start) {
    if (state[start]) continue;
    stack.emplace_back(start, 0);
    state[start] = 1;
    while (!stack.empty()) {
      auto& [v, i] = stack.back();
      const auto& kids = worlds_[order[v]].children;
      if (i < kids.size()) {
        std::size_t c = index.at(kids[i++]);
        if (!state[c]) {
          state[c] = 1;
          stack.emplace_back(c, 0);
        }
      } else {
        post.push_back(v);
        stack.pop_back();
      }
    }
  }
  for (std::size_t v : post) {
    for (int ce : worlds_[order[v]].children) {
      std::size_t c = index.at(ce);
      below[v][c] = true;
      for (std::size_t j = 0; j < n; ++j)
        if (below[c][j]) below[v][j] = true;
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> relation;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (below[i][j]) relation.emplace_back(i, j);
  std::vector<std::set<std::string>> valuation(n);
  for (std::size_t i = 0; i < n; ++i)
    for (int a : worlds_[order[i]].atoms) valuation[i].insert(atom_names_[a]);
  return Verdict::invalid(Countermodel(n, std::move(relation), std::move(valuation), 0));
}

Verdict GlTableau::decide(const Sentence& s) {
  try {
    int root = translate(s, false);
    int r = sat({root});
    if (r < 0) return Verdict::valid();
    return extract(r);
  } catch (const Exhausted& e) {
    return Verdict::unknown(e.reason, true);
  }
}

}  // namespace itercon::detail
