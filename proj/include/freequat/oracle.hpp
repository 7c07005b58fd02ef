// Brute-force word oracle: exhaustive exact evaluation of short words in
// a pair of quaternion units, independent of the certificate machinery.
// A report with no counterexample certifies only that no relation exists
// up to the searched depth; a counterexample refutes freeness outright.
// The oracle shares no logic with the certificate checkers beyond the
// exact arithmetic itself, which is what makes it a meaningful
// cross-check.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "freequat/quaternion.hpp"

namespace freequat {

// A word over the oracle's alphabet, stored as one character per letter:
// 'a' and 'b' are the two generators, 'A' and 'B' their inverses (group
// case only).  Group-case words are reduced: no letter stands next to
// its own inverse.  Words read left to right as products.
using Word = std::string;

// Canonical word order: shorter first, then letterwise a < A < b < B.
bool word_less(const Word& lhs, const Word& rhs);

// Most words evaluating to -1 that a report keeps.
inline constexpr std::size_t kTorsionWitnessCap = 16;

// Search depths used by the command-line tool when none is given: about
// 8.7e3 exact products for the group alphabet and 8.2e3 for the positive
// one, seconds of work even with coefficient growth.
inline constexpr unsigned kDefaultGroupDepth = 8;
inline constexpr unsigned kDefaultSemigroupDepth = 12;

// Result of the free-group search.  `trivial_word` is the canonically
// first reduced word evaluating to 1, if any; `torsion_words` lists the
// canonically first words evaluating to -1 (at most kTorsionWitnessCap).
// A word equal to -1 exhibits torsion in the group generated together
// with -1 but does not by itself decide freeness of the pair, so the two
// findings are kept apart.  When the generators coincide or are mutually
// inverse the enumeration's two symbols would not be independent, so the
// search is skipped and `degenerate` says why.
struct GroupWordReport {
    bool degenerate = false;
    std::string degenerate_reason;
    std::optional<Word> trivial_word;
    std::vector<Word> torsion_words;
    std::uint64_t words_checked = 0;
    unsigned max_length = 0;
};

// Result of the free-semigroup search: the canonically first pair of
// distinct positive words with equal exact value, if any.
struct SemigroupWordReport {
    std::optional<std::pair<Word, Word>> collision;
    std::uint64_t words_checked = 0;
    unsigned max_length = 0;
};

// Enumerate every reduced word of length 1..max_length over
// {u, u^-1, w, w^-1} (4 * 3^(l-1) words at length l), evaluate each
// exactly, and report the canonically first word equal to 1 plus any
// words equal to -1.  Enumeration is split by leading letter across
// threads; the merge keeps the canonical order, so the result does not
// depend on scheduling.  Throws NonUnit unless both inputs are units and
// InputError when max_length is 0.
GroupWordReport free_group_word_check(const QuatElem& u, const QuatElem& w,
                                      unsigned max_length);

// Enumerate every positive word of length 1..max_length over {u, w}
// (2^(max_length+1) - 2 words), deduplicate by exact value, and report
// the first collision in canonical order.  Inputs need not be units.
// Throws InputError when max_length is 0.
SemigroupWordReport free_semigroup_word_check(const QuatElem& u,
                                              const QuatElem& w,
                                              unsigned max_length);

// Run the free-group search on (u^n, w^n).  Throws InputError when
// n is 0.
GroupWordReport power_word_check(const QuatElem& u, const QuatElem& w,
                                 unsigned n, unsigned max_length);

}  // namespace freequat
