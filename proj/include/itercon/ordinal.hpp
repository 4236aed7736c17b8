#ifndef ITERCON_ORDINAL_HPP
#define ITERCON_ORDINAL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace itercon {

struct OrdinalTerm;

// Cantor normal form below epsilon-zero: w^e1*c1 + ... + w^ek*ck with e1 > ... > ek
// and every ci >= 1. The empty term list is 0. Instances are always canonical.
class Ordinal {
 public:
  static constexpr std::size_t kDefaultNodeCap = 512;

  Ordinal();  // zero

  static Ordinal finite(std::uint64_t n);
  static Ordinal omega();
  /// Throws NonCanonical unless exponents strictly decrease and coefficients are >= 1.
  static Ordinal from_terms(std::vector<OrdinalTerm> terms);

  const std::vector<OrdinalTerm>& terms() const;
  bool is_zero() const;
  /// The value as a natural number when the ordinal is below w.
  std::optional<std::uint64_t> as_finite() const;
  /// One node per term plus the nodes of its exponent.
  std::size_t node_count() const;

  friend bool operator==(const Ordinal& a, const Ordinal& b);
  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);

 private:
  std::vector<OrdinalTerm> terms_;
};

struct OrdinalTerm {
  Ordinal exponent;
  std::uint64_t coefficient = 1;
};

enum class Cmp { LT, EQ, GT };
enum class OrdinalKind { Zero, Successor, Limit };

Cmp compare(const Ordinal& a, const Ordinal& b);
OrdinalKind classify(const Ordinal& a);

/// Throws NotASuccessor unless classify(a) == Successor.
Ordinal predecessor(const Ordinal& a);
Ordinal successor(const Ordinal& a);

/// n-th element of the standard fundamental sequence of a limit:
///   (d + w^(b+1))[n] = d + w^b*n     (d + w^l)[n] = d + w^(l[n])  for limit l.
/// Throws NotALimit for zero and successors.
Ordinal fundamental_step(const Ordinal& a, std::uint64_t n);

/// Short name of the fundamental-sequence convention above, printed as output metadata.
inline constexpr std::string_view kFundamentalConvention =
    "cnf-standard (d+w^(b+1))[n]=d+w^b*n, (d+w^l)[n]=d+w^(l[n])";

/// Grammar: ord := "0" | term ("+" term)* ; term := NUM | "w" ("^" factor)? ("*" NUM)? ;
/// factor := NUM | "w" | "(" ord ")". Throws ParseError, NonCanonical, SizeCapExceeded.
Ordinal parse_ordinal(std::string_view text, std::size_t node_cap = Ordinal::kDefaultNodeCap);

/// Canonical text: omits "*1" and "^1".
std::string render(const Ordinal& a);

/// Identifier-safe spelling of an ordinal (for schematic atom names): w*2+1 -> wx2p1.
std::string ordinal_tag(const Ordinal& a);

const char* to_string(Cmp c);
const char* to_string(OrdinalKind k);

// A linear order with elementarily decidable zero/successor/limit classification.
// Cantor normal form is the instance that ships; other presentations can be plugged in
// behind the same operations.
template <typename Element>
class ElementaryOrder {
 public:
  virtual ~ElementaryOrder() = default;
  virtual Cmp compare(const Element& a, const Element& b) const = 0;
  virtual OrdinalKind classify(const Element& a) const = 0;
  virtual Element predecessor(const Element& a) const = 0;
  virtual Element fundamental_step(const Element& a, std::uint64_t n) const = 0;
};

class CantorNormalForm final : public ElementaryOrder<Ordinal> {
 public:
  Cmp compare(const Ordinal& a, const Ordinal& b) const override { return itercon::compare(a, b); }
  OrdinalKind classify(const Ordinal& a) const override { return itercon::classify(a); }
  Ordinal predecessor(const Ordinal& a) const override { return itercon::predecessor(a); }
  Ordinal fundamental_step(const Ordinal& a, std::uint64_t n) const override {
    return itercon::fundamental_step(a, n);
  }
};

}  // namespace itercon

#endif  // ITERCON_ORDINAL_HPP
