#include "widthone/words.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace widthone {

int descent_count(const Word& w) {
    int des = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) ++des;
    return des;
}

MultisetPermutations::MultisetPermutations(const std::vector<int>& parts, int max_word_len) {
    long long len = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0)
            throw std::domain_error("multiplicity " + std::to_string(i + 1) + " is negative");
        len += parts[i];
    }
    if (len > max_word_len)
        throw GuardError("max_word_len", std::to_string(len), std::to_string(max_word_len));
    current_.reserve(static_cast<std::size_t>(len));
    for (std::size_t i = 0; i < parts.size(); ++i)
        current_.insert(current_.end(), static_cast<std::size_t>(parts[i]),
                        static_cast<int>(i) + 1);
    count_ = multinomial(parts);
}

bool MultisetPermutations::next(Word& out) {
    if (exhausted_) return false;
    if (!started_) {
        started_ = true; // sorted start is the lexicographic minimum
        out = current_;
        return true;
    }
    if (!std::next_permutation(current_.begin(), current_.end())) {
        exhausted_ = true;
        return false;
    }
    out = current_;
    return true;
}

} // namespace widthone
