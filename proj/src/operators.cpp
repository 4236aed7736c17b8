#include "itercon/operators.hpp"

#include <charconv>
#include <sstream>

#include "itercon/error.hpp"

namespace itercon {

Sentence apply(const OperatorSpec& op, const Sentence& s, std::size_t size_cap) {
  Sentence out = op.transform(s);
  check_size(out, size_cap);
  return out;
}

namespace ops {

OperatorSpec identity() {
  return {"identity", [](const Sentence& s) { return s; }, {true, false, 0, true}};
}

OperatorSpec conj_con() {
  return {"conj_con", [](const Sentence& s) { return conj(s, con(s)); }, {true, false, 1, true}};
}

OperatorSpec conj_con_k(std::uint64_t k) {
  return {"conj_con_k" + std::to_string(k), [k](const Sentence& s) { return conj(s, con_iter(k, s)); },
          {true, false, k, true}};
}

OperatorSpec conj_con_ord(const Ordinal& a) {
  std::optional<std::uint64_t> bound = a.as_finite();
  return {"conj_con_ord_" + ordinal_tag(a), [a](const Sentence& s) { return conj(s, con_iter(a, s)); },
          {true, false, bound, true}};
}

OperatorSpec con() {
  return {"con", [](const Sentence& s) { return itercon::con(s); }, {true, true, std::nullopt, false}};
}

OperatorSpec con_k(std::uint64_t k) {
  return {"con_k" + std::to_string(k), [k](const Sentence& s) { return con_iter(k, s); },
          {true, k > 0, std::nullopt, false}};
}

OperatorSpec negate() {
  return {"negate", [](const Sentence& s) { return negation(s); }, {false, false, std::nullopt, false}};
}

OperatorSpec star(std::uint64_t bound) {
  if (bound == 0) throw PreconditionFailed("star needs a bound of at least 1");
  return {"star" + std::to_string(bound), [bound](const Sentence& s) { return build_star(s, bound); },
          {false, false, std::nullopt, true}};
}

OperatorSpec slowcon(std::uint64_t bound) {
  if (bound == 0) throw PreconditionFailed("slowcon needs a bound of at least 1");
  return {"slowcon" + std::to_string(bound), [bound](const Sentence& s) { return build_slowcon(s, bound); },
          {false, false, std::nullopt, false}};
}

}  // namespace ops

Sentence build_star(const Sentence& s, std::uint64_t bound, std::size_t size_cap) {
  if (bound == 0) throw PreconditionFailed("build_star needs a bound of at least 1");
  Sentence out = s;
  for (std::uint64_t x = 0; x < bound; ++x) {
    Sentence c = con_isigma(x, s);
    out = check_size(conj(out, implies(c, con_isigma(x, conj(s, c)))), size_cap);
  }
  return out;
}

Sentence build_slowcon(const Sentence& s, std::uint64_t bound, std::size_t size_cap) {
  if (bound == 0) throw PreconditionFailed("build_slowcon needs a bound of at least 1");
  std::vector<Sentence> parts;
  for (std::uint64_t x = 0; x < bound; ++x) {
    parts.push_back(implies(schematic("F_eps0_total_at_" + std::to_string(x)), con_isigma(x, s)));
    check_size(parts.back(), size_cap);
  }
  return check_size(conj_all(parts), size_cap);
}

OperatorRegistry OperatorRegistry::builtin() {
  OperatorRegistry r;
  for (auto op : {ops::identity(), ops::conj_con(), ops::con(), ops::negate()}) r.add(std::move(op));
  return r;
}

void OperatorRegistry::add(OperatorSpec op) {
  std::string name = op.name;
  table_.insert_or_assign(std::move(name), std::move(op));
}

namespace {

std::optional<std::uint64_t> numeric_suffix(std::string_view name, std::string_view prefix) {
  if (name.size() <= prefix.size() || name.substr(0, prefix.size()) != prefix) return std::nullopt;
  std::string_view digits = name.substr(prefix.size());
  std::uint64_t n = 0;
  auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc() || end != digits.data() + digits.size()) return std::nullopt;
  return n;
}

}  // namespace

OperatorSpec OperatorRegistry::find(std::string_view name) const {
  if (auto it = table_.find(name); it != table_.end()) return it->second;
  if (auto k = numeric_suffix(name, "conj_con_k")) return ops::conj_con_k(*k);
  if (auto k = numeric_suffix(name, "con_k")) return ops::con_k(*k);
  if (auto k = numeric_suffix(name, "star")) return ops::star(*k);
  if (auto k = numeric_suffix(name, "slowcon")) return ops::slowcon(*k);
  constexpr std::string_view ord_prefix = "conj_con_ord(";
  if (name.size() > ord_prefix.size() && name.substr(0, ord_prefix.size()) == ord_prefix && name.back() == ')')
    return ops::conj_con_ord(parse_ordinal(name.substr(ord_prefix.size(), name.size() - ord_prefix.size() - 1)));
  throw PreconditionFailed("unknown operator " + std::string(name));
}

std::vector<std::string> OperatorRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& [name, op] : table_) out.push_back(name);
  return out;
}

Sentence random_sentence(std::mt19937_64& rng, std::size_t size, const std::vector<std::string>& atoms) {
  if (size <= 1) {
    std::uint64_t pick = rng() % (2 + atoms.size());
    if (pick == 0) return top();
    if (pick == 1) return bot();
    return atom(atoms[pick - 2]);
  }
  std::uint64_t shape = size == 2 ? rng() % 2 : rng() % 5;
  if (shape < 2) {
    Sentence x = random_sentence(rng, size - 1, atoms);
    return shape == 0 ? negation(x) : con(x);
  }
  std::size_t left = 1 + rng() % (size - 2);
  Sentence a = random_sentence(rng, left, atoms);
  Sentence b = random_sentence(rng, size - 1 - left, atoms);
  return shape == 2 ? conj(a, b) : shape == 3 ? disj(a, b) : implies(a, b);
}

std::vector<std::pair<Sentence, Sentence>> weakening_pairs(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::vector<std::string> atoms{"p", "q"};
  std::vector<std::pair<Sentence, Sentence>> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::uint64_t form = rng() % 3;
    Sentence a = random_sentence(rng, 1 + rng() % 5, atoms);
    Sentence b = random_sentence(rng, 1 + rng() % 4, atoms);
    if (form == 0) {
      out.emplace_back(a, disj(a, b));
    } else if (form == 1) {
      out.emplace_back(conj(a, b), a);
    } else {
      out.emplace_back(a, implies(b, a));
    }
  }
  return out;
}

std::string MonotoneReport::to_text() const {
  std::ostringstream out;
  out << "# operator " << op_name << " seed " << seed << '\n';
  for (const auto& item : items) out << "ITEM " << item.index << " VERDICT " << to_string(item.verdict.kind) << '\n';
  for (const auto& item : items) {
    if (!item.verdict.is_invalid()) continue;
    out << "WITNESS " << item.index << '\n';
    out << "S " << render(item.s) << '\n';
    out << "T " << render(item.t) << '\n';
    out << item.verdict.countermodel->to_text();
    out << "END\n";
  }
  out << "SUMMARY VALID " << valid << " INVALID " << invalid << " UNKNOWN " << unknown << '\n';
  return out.str();
}

MonotoneReport check_monotone(const OperatorSpec& op, std::size_t corpus_size, std::uint64_t seed,
                              const Oracle& oracle) {
  MonotoneReport report;
  report.op_name = op.name;
  report.seed = seed;
  std::size_t index = 0;
  for (auto& [s, t] : weakening_pairs(corpus_size, seed)) {
    Verdict v;
    try {
      v = oracle.proves(apply(op, s, oracle.config().size_cap), apply(op, t, oracle.config().size_cap));
    } catch (const SizeCapExceeded& e) {
      v = Verdict::unknown(e.what(), true);
    }
    if (v.is_valid()) ++report.valid;
    if (v.is_invalid()) ++report.invalid;
    if (v.is_unknown()) ++report.unknown;
    report.items.push_back({index++, s, t, std::move(v)});
  }
  return report;
}

}  // namespace itercon
