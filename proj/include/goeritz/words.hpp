#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "goeritz/homology.hpp"

namespace goeritz {

/// Generators of the extended Goeritz group of the genus 2 splitting of S^3.
/// delta is the handle slide (the top foot of the righthand handle over the
/// other handle); the rotation variant is available as a named word.
enum class Generator { alpha, beta, gamma, delta, epsilon };

inline constexpr std::array<Generator, 5> kAllGenerators = {
    Generator::alpha, Generator::beta, Generator::gamma, Generator::delta, Generator::epsilon};

const char* generator_name(Generator g);   // "alpha", ...
char generator_ascii(Generator g);         // 'a', 'b', 'g', 'd', 'e'

/// One maximal run g^e with e != 0.
struct Syllable {
    Generator gen;
    long long exponent;
    friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// A word in the generators, kept in run-length normal form: adjacent
/// syllables use distinct generators and no exponent is zero. The empty word
/// is the identity. Words act on homology right-to-left (the rightmost
/// syllable is applied first).
class GoeritzWord {
public:
    GoeritzWord() = default;

    static GoeritzWord identity() { return {}; }
    static GoeritzWord from_syllables(const std::vector<Syllable>& syllables);

    /// Append g^e at the right end, merging with the last syllable if needed.
    void append(Generator g, long long exponent);
    void append(const GoeritzWord& other);

    GoeritzWord inverse() const;
    bool empty() const { return syllables_.empty(); }
    std::size_t syllable_count() const { return syllables_.size(); }
    /// Total letter count, sum of |exponent|.
    long long length() const;
    const std::vector<Syllable>& syllables() const { return syllables_; }

    friend GoeritzWord operator*(const GoeritzWord& u, const GoeritzWord& v) {
        GoeritzWord w = u;
        w.append(v);
        return w;
    }
    friend bool operator==(const GoeritzWord&, const GoeritzWord&) = default;

private:
    std::vector<Syllable> syllables_;
};

/// 4x4 integer matrix, row-major.
struct Matrix4 {
    std::array<long long, 16> m{};

    static Matrix4 identity();
    long long& at(int r, int c) { return m[4 * r + c]; }
    long long at(int r, int c) const { return m[4 * r + c]; }
    long long det() const;

    friend Matrix4 operator*(const Matrix4& p, const Matrix4& q);
    friend bool operator==(const Matrix4&, const Matrix4&) = default;
    std::string str() const;
};

HomologyVector apply(const Matrix4& m, const HomologyVector& k);

/// Exact induced matrix of a generator on H_1(F):
/// alpha -> -I, beta -> diag(1,-1,1,-1), and the displayed gamma, delta,
/// epsilon actions.
Matrix4 generator_matrix(Generator g);

/// Product of generator matrices in written order; the rightmost syllable
/// acts first on column vectors. Negative exponents use the exact inverse.
Matrix4 evaluate(const GoeritzWord& w);

/// Whether m = diag(C, (C^-1)^T) with C unimodular.
bool is_goeritz_form(const Matrix4& m);

/// Projection to the first 2x2 block (the isomorphism p on Goeritz-form
/// matrices). Rejects matrices that are not Goeritz-form.
Block2Matrix first_block(const Matrix4& m);

Matrix4 to_matrix4(const GoeritzMatrix& m);

/// Relators of the Goeritz group presentation (8 words) or of the extended
/// presentation including epsilon (13 words), verbatim.
std::vector<GoeritzWord> relators(bool extended);

struct RelatorReport {
    struct Entry {
        GoeritzWord relator;
        bool holds;  // evaluates to the 4x4 identity
    };
    std::vector<Entry> plain;
    std::vector<Entry> extended;
    bool all_hold = false;
};

/// Evaluate every relator of both presentations under the homology
/// representation; all of them are expected to map to the identity.
RelatorReport verify_relators();

enum class NamedWord { delta_rot, belt_twist, case_g };

/// delta_rot = beta^-1 gamma delta, belt_twist = beta^2 (the Dehn twist about
/// the belt curve), case_g = alpha beta gamma delta^-1 gamma delta^2.
GoeritzWord named_word(NamedWord name);
GoeritzWord named_word(std::string_view name);  // rejects unknown names

enum class Parity { even, odd };

/// Parity of the total absolute epsilon exponent. Even iff the word fixes
/// each handlebody, iff its matrix is Goeritz-form.
Parity epsilon_parity(const GoeritzWord& w);

/// ASCII encoding: letters a, b, g, d, e for the five generators, a trailing
/// apostrophe for the inverse, tokens whitespace-separated. A token may carry
/// a ^n power suffix (n >= 1), e.g. "a b g d' g d^2".
GoeritzWord parse_word(std::string_view text);
std::string format_word(const GoeritzWord& w);

}  // namespace goeritz
