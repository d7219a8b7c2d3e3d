#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "goeritz/exact.hpp"

namespace goeritz {

/// A rank-2 alphabet: two printable generator names. Words over distinct
/// alphabets are never mixed.
struct Alphabet {
    char first;
    char second;
    friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

/// pi_1(H) generators A, X (dual to the inside cut disks) and pi_1(H')
/// generators B, Y.
inline constexpr Alphabet kInsideAlphabet{'A', 'X'};
inline constexpr Alphabet kOutsideAlphabet{'B', 'Y'};

/// A single generator or inverse generator.
struct Letter {
    int index;  // 0 = first generator, 1 = second
    int sign;   // +1 or -1
    friend bool operator==(const Letter&, const Letter&) = default;
    Letter inverse() const { return {index, -sign}; }
};

/// A word in a rank-2 free group as a plain letter sequence. Not necessarily
/// reduced; free_reduce produces the reduced representative.
class FreeWord {
public:
    explicit FreeWord(Alphabet alphabet = kInsideAlphabet) : alphabet_(alphabet) {}
    FreeWord(Alphabet alphabet, std::vector<Letter> letters)
        : alphabet_(alphabet), letters_(std::move(letters)) {}

    Alphabet alphabet() const { return alphabet_; }
    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    std::size_t size() const { return letters_.size(); }

    void push(Letter l) { letters_.push_back(l); }
    /// Append generator `index` to the power `exponent` (letter repetition).
    void push_power(int index, long long exponent);
    void append(const FreeWord& other);

    friend bool operator==(const FreeWord&, const FreeWord&) = default;
    std::string str() const;

private:
    Alphabet alphabet_;
    std::vector<Letter> letters_;
};

/// Cancel adjacent inverse pairs until none remain. Idempotent; the result
/// represents the same group element.
FreeWord free_reduce(const FreeWord& w);

/// A cyclically reduced word considered up to rotation; equality is
/// rotation-invariant. Represents a conjugacy class (a free homotopy class).
class CyclicWord {
public:
    explicit CyclicWord(FreeWord cyclically_reduced) : word_(std::move(cyclically_reduced)) {}

    const FreeWord& representative() const { return word_; }
    std::size_t size() const { return word_.size(); }

    friend bool operator==(const CyclicWord& a, const CyclicWord& b);
    std::string str() const { return word_.str(); }

private:
    FreeWord word_;
};

/// Reduce, then peel matching ends until the word is cyclically reduced.
/// The result is conjugate to w.
CyclicWord cyclic_reduce(const FreeWord& w);

/// True iff the two cyclic words are letter-for-letter rotations of each
/// other (same conjugacy class). Enumerates rotations.
bool conjugate_equal(const CyclicWord& w1, const CyclicWord& w2);

/// Letters in reverse order, signs unchanged.
FreeWord reverse(const FreeWord& w);

/// Whether w is conjugate to its own reverse.
bool is_cyclic_palindrome(const FreeWord& w);

/// (exponent sum of the first generator, exponent sum of the second).
std::pair<long long, long long> abelianize(const FreeWord& w);

/// Text form: letters separated by whitespace, apostrophe for inverse,
/// e.g. "A X A' X". An optional ^n suffix abbreviates repetition.
FreeWord parse_free_word(std::string_view text, Alphabet alphabet);

}  // namespace goeritz
