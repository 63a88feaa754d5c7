#ifndef WIDTHONE_WORDS_HPP
#define WIDTHONE_WORDS_HPP

#include "widthone/bigint.hpp"
#include "widthone/guards.hpp"

#include <vector>

namespace widthone {

/// A word over the alphabet {1..d}.
using Word = std::vector<int>;

/// Number of positions i with w_i > w_{i+1}.
int descent_count(const Word& w);

/// Single-consumer stream of all words containing the letter i exactly
/// parts[i-1] times, in lexicographic order. Zero parts are legal and act
/// as absent letters; the all-zero multiplicity yields one empty word.
class MultisetPermutations {
public:
    explicit MultisetPermutations(const std::vector<int>& parts,
                                  int max_word_len = kDefaultMaxWordLen);

    /// Writes the next word into `out`; returns false once exhausted.
    bool next(Word& out);

    const BigInt& count() const { return count_; }

private:
    Word current_;
    BigInt count_;
    bool exhausted_ = false;
    bool started_ = false;
};

} // namespace widthone

#endif
