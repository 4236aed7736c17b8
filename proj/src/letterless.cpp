#include <algorithm>
#include <limits>
#include <unordered_map>
#include <utility>
#include <vector>

#include "itercon/error.hpp"
#include "itercon/oracle.hpp"

namespace itercon {

namespace {

// A letterless sentence is true at a world exactly when the world's height lies in a fixed
// set of naturals; that set is a finite union of half-open intervals [lo, hi).
constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();

using Intervals = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

Intervals normalize(Intervals v) {
  Intervals out;
  for (auto [lo, hi] : v) {
    if (lo >= hi) continue;
    if (!out.empty() && lo <= out.back().second) {
      out.back().second = std::max(out.back().second, hi);
    } else {
      out.emplace_back(lo, hi);
    }
  }
  return out;
}

Intervals complement(const Intervals& x) {
  Intervals out;
  std::uint64_t at = 0;
  for (auto [lo, hi] : x) {
    if (lo > at) out.emplace_back(at, lo);
    at = hi;
  }
  if (at != kInf) out.emplace_back(at, kInf);
  return out;
}

Intervals intersect(const Intervals& x, const Intervals& y) {
  Intervals out;
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    std::uint64_t lo = std::max(x[i].first, y[j].first);
    std::uint64_t hi = std::min(x[i].second, y[j].second);
    if (lo < hi) out.emplace_back(lo, hi);
    if (x[i].second < y[j].second) {
      ++i;
    } else {
      ++j;
    }
  }
  return out;
}

Intervals unite(const Intervals& x, const Intervals& y) {
  Intervals all;
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first <= y[j].first)) {
      all.push_back(x[i++]);
    } else {
      all.push_back(y[j++]);
    }
  }
  return normalize(std::move(all));
}

// Some strictly lower world satisfies x: heights above the least element of x.
Intervals diamond(const Intervals& x) {
  if (x.empty()) return {};
  return {{std::min(x.front().first + 1, kInf - 1), kInf}};
}

Intervals iterate(std::uint64_t k, const Intervals& body) {
  std::uint64_t start = 0;  // Con^j(body) holds exactly from height `start` on
  for (std::uint64_t j = 0; j < k; ++j) {
    Intervals both = intersect(body, {{start, kInf}});
    if (both.empty()) return {};
    if (both.front().second == kInf && both.front().first == start) {
      // Past the last gap of body every further step adds exactly one.
      std::uint64_t left = k - j;
      return {{start > kInf - 1 - left ? kInf - 1 : start + left, kInf}};
    }
    start = std::min(both.front().first + 1, kInf - 1);
  }
  return {{start, kInf}};
}

class LetterlessEvaluator {
 public:
  const Intervals& eval(const Sentence& s) {
    auto it = memo_.find(s.identity());
    if (it != memo_.end()) return it->second;
    Intervals out;
    switch (s.kind()) {
      case NodeKind::Top:
        out = {{0, kInf}};
        break;
      case NodeKind::Bot:
        break;
      case NodeKind::Not:
        out = complement(eval(s.operand()));
        break;
      case NodeKind::And:
        out = intersect(Intervals(eval(s.left())), eval(s.right()));
        break;
      case NodeKind::Or:
        out = unite(Intervals(eval(s.left())), eval(s.right()));
        break;
      case NodeKind::Imp:
        out = unite(complement(eval(s.left())), eval(s.right()));
        break;
      case NodeKind::Con:
        out = diamond(eval(s.operand()));
        break;
      case NodeKind::ConIter: {
        auto k = s.index().as_finite();
        if (!k) throw NotLetterless("infinite iteration index in " + render(s));
        out = iterate(*k, eval(s.operand()));
        break;
      }
      default:
        throw NotLetterless(render(s) + " is not letterless");
    }
    return memo_.emplace(s.identity(), std::move(out)).first->second;
  }

 private:
  std::unordered_map<const void*, Intervals> memo_;
};

Intervals truth_set(const Sentence& s) {
  LetterlessEvaluator ev;
  return ev.eval(s);
}

}  // namespace

bool truth_letterless(const Sentence& s) {
  Intervals x = truth_set(s);
  return !x.empty() && x.back().second == kInf;
}

Sentence letterless_nf(const Sentence& s) {
  Intervals x = truth_set(s);
  std::vector<Sentence> parts;
  for (auto [lo, hi] : x) {
    if (lo == 0 && hi == kInf) return top();
    if (hi == kInf) {
      parts.push_back(con_iter(lo, top()));
    } else if (lo == 0) {
      parts.push_back(negation(con_iter(hi, top())));
    } else {
      parts.push_back(conj(con_iter(lo, top()), negation(con_iter(hi, top()))));
    }
  }
  return disj_all(parts);
}

}  // namespace itercon
