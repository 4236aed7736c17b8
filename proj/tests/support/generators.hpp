#ifndef ITERCON_TESTS_GENERATORS_HPP
#define ITERCON_TESTS_GENERATORS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "itercon/oracle.hpp"
#include "itercon/sentence.hpp"

namespace itercon::support {

/// Every sentence with 1..max_size nodes over T, F, the atom, ~, &, |, -> and Con, built by
/// direct recursion on size. Letterless when `atom` is empty.
std::vector<Sentence> all_sentences(std::size_t max_size, const std::string& atom);

/// Seeded sentences s with proves(s, Con(T)) Valid, at most `max_size` nodes each.
std::vector<Sentence> consistent_implying(std::size_t count, std::uint64_t seed, const Oracle& oracle,
                                          std::size_t max_size = 12);

/// Seeded pairs (s, t) with proves(s, t) Valid, mixing weakenings with oracle-filtered
/// random pairs.
std::vector<std::pair<Sentence, Sentence>> provable_pairs(std::size_t count, std::uint64_t seed,
                                                          const Oracle& oracle);

}  // namespace itercon::support

#endif  // ITERCON_TESTS_GENERATORS_HPP
