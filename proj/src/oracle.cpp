#include "freequat/oracle.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <map>

#include "freequat/errors.hpp"

namespace freequat {

namespace {

// Letter indices: 0 = 'a' (u), 1 = 'A' (u^-1), 2 = 'b' (w), 3 = 'B'
// (w^-1).  XOR with 1 flips a letter to its inverse.
constexpr std::array<char, 4> kLetters = {'a', 'A', 'b', 'B'};

unsigned letter_rank(char c) {
    for (unsigned i = 0; i < kLetters.size(); ++i)
        if (kLetters[i] == c) return i;
    return kLetters.size();
}

// Everything one leading-letter block accumulates.  Blocks are pure:
// they share nothing and are merged canonically afterwards.
struct BlockFindings {
    std::optional<Word> trivial_word;
    std::vector<Word> torsion_words;
    std::uint64_t words_checked = 0;
};

struct GroupSearch {
    std::array<QuatElem, 4> units;
    QuatElem one;
    QuatElem minus_one;
    unsigned max_length;
};

void group_dfs(const GroupSearch& search, const QuatElem& product,
               Word& word, unsigned last_letter, BlockFindings& out) {
    ++out.words_checked;
    if (product == search.one) {
        if (!out.trivial_word || word_less(word, *out.trivial_word))
            out.trivial_word = word;
    } else if (product == search.minus_one) {
        out.torsion_words.push_back(word);
    }
    if (word.size() >= search.max_length) return;
    for (unsigned next = 0; next < 4; ++next) {
        if (next == (last_letter ^ 1u)) continue; // keep the word reduced
        word.push_back(kLetters[next]);
        group_dfs(search, product * search.units[next], word, next, out);
        word.pop_back();
    }
}

struct QuatLexLess {
    bool operator()(const QuatElem& p, const QuatElem& q) const {
        return quat_lex_cmp(p, q) < 0;
    }
};

} // namespace

bool word_less(const Word& lhs, const Word& rhs) {
    if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        const unsigned l = letter_rank(lhs[i]);
        const unsigned r = letter_rank(rhs[i]);
        if (l != r) return l < r;
    }
    return false;
}

GroupWordReport free_group_word_check(const QuatElem& u, const QuatElem& w,
                                      unsigned max_length) {
    if (max_length == 0)
        throw InputError("the word search needs max_length >= 1");
    if (!is_unit(u))
        throw NonUnit("the first generator is not a unit");
    if (!is_unit(w))
        throw NonUnit("the second generator is not a unit");
    require_same_field(u.d(), w.d(), "word oracle generators");
    const SquareFreeD d = u.d();

    GroupWordReport report;
    report.max_length = max_length;

    // With equal or mutually inverse generators the two symbols are not
    // independent and "reduced" loses its meaning, so report that
    // instead of searching.
    if (u == w) {
        report.degenerate = true;
        report.degenerate_reason =
            "the generators are equal: the length-2 word aB evaluates to 1";
        return report;
    }
    if (u == quat_inverse(w)) {
        report.degenerate = true;
        report.degenerate_reason =
            "the generators are mutually inverse: the length-2 word ab "
            "evaluates to 1";
        return report;
    }

    const GroupSearch search{
        {u, quat_inverse(u), w, quat_inverse(w)},
        QuatElem::one(d),
        -QuatElem::one(d),
        max_length,
    };

    std::array<std::future<BlockFindings>, 4> blocks;
    for (unsigned first = 0; first < 4; ++first) {
        blocks[first] = std::async(std::launch::async, [&search, first]() {
            BlockFindings out;
            Word word(1, kLetters[first]);
            group_dfs(search, search.units[first], word, first, out);
            return out;
        });
    }

    std::vector<Word> torsion;
    for (auto& block : blocks) {
        BlockFindings found = block.get();
        report.words_checked += found.words_checked;
        if (found.trivial_word &&
            (!report.trivial_word ||
             word_less(*found.trivial_word, *report.trivial_word)))
            report.trivial_word = found.trivial_word;
        torsion.insert(torsion.end(), found.torsion_words.begin(),
                       found.torsion_words.end());
    }
    std::sort(torsion.begin(), torsion.end(), word_less);
    if (torsion.size() > kTorsionWitnessCap)
        torsion.resize(kTorsionWitnessCap);
    report.torsion_words = std::move(torsion);
    return report;
}

SemigroupWordReport free_semigroup_word_check(const QuatElem& u,
                                              const QuatElem& w,
                                              unsigned max_length) {
    if (max_length == 0)
        throw InputError("the word search needs max_length >= 1");
    require_same_field(u.d(), w.d(), "word oracle generators");

    SemigroupWordReport report;
    report.max_length = max_length;

    // Breadth-first by length keeps the enumeration in canonical order,
    // so the first duplicate value found is the canonically first
    // colliding pair.
    std::map<QuatElem, Word, QuatLexLess> seen;
    std::vector<std::pair<Word, QuatElem>> level;
    level.emplace_back(Word(1, 'a'), u);
    level.emplace_back(Word(1, 'b'), w);
    for (unsigned length = 1; length <= max_length; ++length) {
        for (const auto& [word, value] : level) {
            ++report.words_checked;
            const auto [it, inserted] = seen.emplace(value, word);
            if (!inserted) {
                report.collision = std::make_pair(it->second, word);
                return report;
            }
        }
        if (length == max_length) break;
        std::vector<std::pair<Word, QuatElem>> next;
        next.reserve(2 * level.size());
        for (const auto& [word, value] : level) {
            next.emplace_back(word + 'a', value * u);
            next.emplace_back(word + 'b', value * w);
        }
        level = std::move(next);
    }
    return report;
}

GroupWordReport power_word_check(const QuatElem& u, const QuatElem& w,
                                 unsigned n, unsigned max_length) {
    if (n == 0)
        throw InputError("the power search needs an exponent n >= 1");
    return free_group_word_check(quat_pow(u, static_cast<long>(n)),
                                 quat_pow(w, static_cast<long>(n)),
                                 max_length);
}

}  // namespace freequat
