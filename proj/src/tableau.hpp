#ifndef ITERCON_SRC_TABLEAU_HPP
#define ITERCON_SRC_TABLEAU_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "itercon/oracle.hpp"

namespace itercon::detail {

// Single-use GL tableau over a hash-consed negation normal form store. The caller has
// already checked that the input lies in the decidable fragment.
class GlTableau {
 public:
  explicit GlTableau(const OracleConfig& config);

  Verdict decide(const Sentence& s);

 private:
  enum Op : std::uint8_t { TOP, BOT, ATOM, NATOM, AND, OR, BOX, DIA };
  struct Formula {
    Op op;
    int a;
    int b;
  };
  struct World {
    std::vector<int> atoms;
    std::vector<int> children;
  };
  struct SeedHash {
    std::size_t operator()(const std::vector<int>& v) const;
  };
  struct Exhausted {
    std::string reason;
  };

  int make(Op op, int a = -1, int b = -1);
  int negate(int f);
  int atom_index(const std::string& name);
  int translate(const Sentence& s, bool positive);

  bool contains(const std::vector<int>& set, int f) const;
  bool add(std::vector<int>& set, int f);
  int sat(std::vector<int> seed);
  int search(std::vector<int>& set);
  Verdict extract(int root);

  OracleConfig config_;
  std::vector<Formula> store_;
  std::vector<int> negation_;
  std::unordered_map<std::uint64_t, int> interned_;
  std::unordered_map<std::string, int> atom_ids_;
  std::vector<std::string> atom_names_;
  std::unordered_map<const void*, int> translated_[2];
  std::unordered_map<std::vector<int>, int, SeedHash> memo_;
  std::vector<World> worlds_;
  std::uint64_t steps_ = 0;
};

}  // namespace itercon::detail

#endif  // ITERCON_SRC_TABLEAU_HPP
