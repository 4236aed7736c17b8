#include <algorithm>
#include <utility>

#include "itercon/sentence.hpp"

namespace itercon {

SentenceGrammar SentenceGrammar::letterless() {
  SentenceGrammar g;
  g.leaves = {top(), bot()};
  return g;
}

SentenceGrammar SentenceGrammar::one_atom(std::string name) {
  SentenceGrammar g;
  g.leaves = {top(), bot(), atom(std::move(name))};
  return g;
}

std::vector<std::vector<Sentence>> sentences_by_size(const SentenceGrammar& grammar, std::size_t max_size) {
  std::vector<std::vector<Sentence>> levels(max_size + 1);
  for (std::size_t n = 1; n <= max_size; ++n) {
    std::vector<Sentence> level;
    if (n == 1) {
      level = grammar.leaves;
    } else {
      for (const auto& x : levels[n - 1]) {
        if (grammar.negation) level.push_back(negation(x));
        if (grammar.con) level.push_back(con(x));
      }
      if (grammar.binary) {
        for (std::size_t i = 1; i + 2 <= n; ++i) {
          for (const auto& a : levels[i]) {
            for (const auto& b : levels[n - 1 - i]) {
              level.push_back(conj(a, b));
              level.push_back(disj(a, b));
              level.push_back(implies(a, b));
            }
          }
        }
      }
    }
    std::vector<std::pair<std::string, Sentence>> keyed;
    keyed.reserve(level.size());
    for (auto& s : level) keyed.emplace_back(render(s), std::move(s));
    std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    level.clear();
    for (auto& [text, s] : keyed) level.push_back(std::move(s));
    levels[n] = std::move(level);
  }
  return levels;
}

}  // namespace itercon
