#include "goeritz/words.hpp"

#include <cctype>
#include <cstdlib>

namespace goeritz {

const char* generator_name(Generator g) {
    switch (g) {
        case Generator::alpha: return "alpha";
        case Generator::beta: return "beta";
        case Generator::gamma: return "gamma";
        case Generator::delta: return "delta";
        case Generator::epsilon: return "epsilon";
    }
    return "?";
}

char generator_ascii(Generator g) {
    switch (g) {
        case Generator::alpha: return 'a';
        case Generator::beta: return 'b';
        case Generator::gamma: return 'g';
        case Generator::delta: return 'd';
        case Generator::epsilon: return 'e';
    }
    return '?';
}

GoeritzWord GoeritzWord::from_syllables(const std::vector<Syllable>& syllables) {
    GoeritzWord w;
    for (const Syllable& s : syllables) w.append(s.gen, s.exponent);
    return w;
}

void GoeritzWord::append(Generator g, long long exponent) {
    if (exponent == 0) return;
    if (!syllables_.empty() && syllables_.back().gen == g) {
        long long e = checked_add(syllables_.back().exponent, exponent);
        if (e == 0)
            syllables_.pop_back();
        else
            syllables_.back().exponent = e;
        return;
    }
    syllables_.push_back({g, exponent});
}

void GoeritzWord::append(const GoeritzWord& other) {
    for (const Syllable& s : other.syllables_) append(s.gen, s.exponent);
}

GoeritzWord GoeritzWord::inverse() const {
    GoeritzWord w;
    for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it)
        w.append(it->gen, checked_neg(it->exponent));
    return w;
}

long long GoeritzWord::length() const {
    long long n = 0;
    for (const Syllable& s : syllables_)
        n = checked_add(n, s.exponent < 0 ? checked_neg(s.exponent) : s.exponent);
    return n;
}

Matrix4 Matrix4::identity() {
    Matrix4 r;
    for (int i = 0; i < 4; ++i) r.at(i, i) = 1;
    return r;
}

Matrix4 operator*(const Matrix4& p, const Matrix4& q) {
    Matrix4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            zint acc = 0;
            for (int k = 0; k < 4; ++k) acc = acc + zint(p.at(i, k)) * q.at(k, j);
            r.at(i, j) = acc.v;
        }
    return r;
}

long long Matrix4::det() const {
    // Laplace expansion along the first row.
    auto det3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) {
        zint d = zint(at(r0, c0)) * (zint(at(r1, c1)) * at(r2, c2) - zint(at(r1, c2)) * at(r2, c1));
        d = d - zint(at(r0, c1)) * (zint(at(r1, c0)) * at(r2, c2) - zint(at(r1, c2)) * at(r2, c0));
        d = d + zint(at(r0, c2)) * (zint(at(r1, c0)) * at(r2, c1) - zint(at(r1, c1)) * at(r2, c0));
        return d;
    };
    zint d = zint(at(0, 0)) * det3(1, 2, 3, 1, 2, 3) - zint(at(0, 1)) * det3(1, 2, 3, 0, 2, 3) +
             zint(at(0, 2)) * det3(1, 2, 3, 0, 1, 3) - zint(at(0, 3)) * det3(1, 2, 3, 0, 1, 2);
    return d.v;
}

std::string Matrix4::str() const {
    std::string s = "[";
    for (int i = 0; i < 4; ++i) {
        s += i ? ",[" : "[";
        for (int j = 0; j < 4; ++j) s += (j ? "," : "") + std::to_string(at(i, j));
        s += "]";
    }
    return s + "]";
}

HomologyVector apply(const Matrix4& m, const HomologyVector& k) {
    std::array<long long, 4> in = {k.a, k.x, k.b, k.y};
    std::array<long long, 4> out{};
    for (int i = 0; i < 4; ++i) {
        zint acc = 0;
        for (int j = 0; j < 4; ++j) acc = acc + zint(m.at(i, j)) * in[j];
        out[i] = acc.v;
    }
    return {out[0], out[1], out[2], out[3]};
}

Matrix4 generator_matrix(Generator g) {
    auto rows = [](std::array<long long, 16> v) {
        Matrix4 m;
        m.m = v;
        return m;
    };
    switch (g) {
        case Generator::alpha:
            return rows({-1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1});
        case Generator::beta:
            return rows({1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1});
        case Generator::gamma:
            return rows({0, -1, 0, 0, -1, 0, 0, 0, 0, 0, 0, -1, 0, 0, -1, 0});
        case Generator::delta:
            return rows({1, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, -1, 0, 0, 0, 1});
        case Generator::epsilon:
            return rows({0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0});
    }
    throw precondition_error("unknown generator");
}

namespace {

Matrix4 generator_inverse_matrix(Generator g) {
    if (g == Generator::delta) {
        Matrix4 m;
        m.m = {1, 0, 0, 0, -1, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 1};
        return m;
    }
    return generator_matrix(g);  // the other four are involutions
}

Matrix4 matrix_power(Matrix4 base, long long e) {
    Matrix4 acc = Matrix4::identity();
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

}  // namespace

Matrix4 evaluate(const GoeritzWord& w) {
    Matrix4 acc = Matrix4::identity();
    for (const Syllable& s : w.syllables()) {
        Matrix4 base = s.exponent > 0 ? generator_matrix(s.gen) : generator_inverse_matrix(s.gen);
        long long e = s.exponent > 0 ? s.exponent : checked_neg(s.exponent);
        acc = acc * matrix_power(base, e);
    }
    return acc;
}

bool is_goeritz_form(const Matrix4& m) {
    for (int i = 0; i < 2; ++i)
        for (int j = 2; j < 4; ++j)
            if (m.at(i, j) != 0 || m.at(j, i) != 0) return false;
    Block2Matrix c = {m.at(0, 0), m.at(0, 1), m.at(1, 0), m.at(1, 1)};
    Block2Matrix d = {m.at(2, 2), m.at(2, 3), m.at(3, 2), m.at(3, 3)};
    if (!c.is_unimodular()) return false;
    return c.transpose() * d == Block2Matrix::identity();
}

Block2Matrix first_block(const Matrix4& m) {
    if (!is_goeritz_form(m))
        throw precondition_error("matrix is not Goeritz-form; no block projection");
    return {m.at(0, 0), m.at(0, 1), m.at(1, 0), m.at(1, 1)};
}

Matrix4 to_matrix4(const GoeritzMatrix& g) {
    Matrix4 m;
    m.at(0, 0) = g.first_block.s;
    m.at(0, 1) = g.first_block.t;
    m.at(1, 0) = g.first_block.u;
    m.at(1, 1) = g.first_block.v;
    m.at(2, 2) = g.second_block.s;
    m.at(2, 3) = g.second_block.t;
    m.at(3, 2) = g.second_block.u;
    m.at(3, 3) = g.second_block.v;
    return m;
}

namespace {

GoeritzWord word_of(std::initializer_list<Syllable> syllables) {
    GoeritzWord w;
    for (const Syllable& s : syllables) w.append(s.gen, s.exponent);
    return w;
}

using enum Generator;

GoeritzWord commutator(Generator g, Generator h) {
    return word_of({{g, 1}, {h, 1}, {g, -1}, {h, -1}});
}

}  // namespace

std::vector<GoeritzWord> relators(bool extended) {
    std::vector<GoeritzWord> r;
    r.push_back(word_of({{alpha, 2}}));
    r.push_back(word_of({{gamma, 2}}));
    if (extended) r.push_back(word_of({{epsilon, 2}}));
    r.push_back(commutator(alpha, beta));
    r.push_back(commutator(alpha, gamma));
    r.push_back(commutator(alpha, delta));
    r.push_back(word_of({{alpha, 1}}) * commutator(gamma, beta));
    if (extended) {
        r.push_back(commutator(epsilon, alpha));
        r.push_back(word_of({{alpha, 1}}) * commutator(epsilon, beta));
        r.push_back(commutator(epsilon, gamma));
        r.push_back(word_of({{epsilon, 1}, {delta, 1}, {epsilon, 1}, {delta, 1}}));
    }
    GoeritzWord bgd = word_of({{beta, -1}, {gamma, 1}, {delta, 1}});
    r.push_back(bgd * bgd * bgd);
    r.push_back(word_of({{beta, -1}, {delta, 1}, {beta, -1}, {delta, 1}}));
    return r;
}

RelatorReport verify_relators() {
    RelatorReport report;
    report.all_hold = true;
    Matrix4 id = Matrix4::identity();
    for (bool extended : {false, true}) {
        auto& entries = extended ? report.extended : report.plain;
        for (const GoeritzWord& w : relators(extended)) {
            bool ok = evaluate(w) == id;
            entries.push_back({w, ok});
            report.all_hold = report.all_hold && ok;
        }
    }
    return report;
}

GoeritzWord named_word(NamedWord name) {
    switch (name) {
        case NamedWord::delta_rot:
            return word_of({{beta, -1}, {gamma, 1}, {delta, 1}});
        case NamedWord::belt_twist:
            return word_of({{beta, 2}});
        case NamedWord::case_g:
            return word_of({{alpha, 1}, {beta, 1}, {gamma, 1}, {delta, -1}, {gamma, 1}, {delta, 2}});
    }
    throw precondition_error("unknown named word");
}

GoeritzWord named_word(std::string_view name) {
    if (name == "delta_rot") return named_word(NamedWord::delta_rot);
    if (name == "belt_twist") return named_word(NamedWord::belt_twist);
    if (name == "case_g") return named_word(NamedWord::case_g);
    throw precondition_error("unknown named word: " + std::string(name));
}

Parity epsilon_parity(const GoeritzWord& w) {
    long long total = 0;
    for (const Syllable& s : w.syllables())
        if (s.gen == epsilon)
            total = checked_add(total, s.exponent < 0 ? checked_neg(s.exponent) : s.exponent);
    return (total % 2 == 0) ? Parity::even : Parity::odd;
}

GoeritzWord parse_word(std::string_view text) {
    GoeritzWord w;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (text[i] == '1') {  // identity token, matching format_word
            ++i;
            if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
                throw parse_error("unexpected character after identity token", i);
            continue;
        }
        Generator g;
        switch (text[i]) {
            case 'a': g = alpha; break;
            case 'b': g = beta; break;
            case 'g': g = gamma; break;
            case 'd': g = delta; break;
            case 'e': g = epsilon; break;
            default:
                throw parse_error(std::string("unknown generator letter '") + text[i] + "'", i);
        }
        ++i;
        long long sign = 1;
        if (i < text.size() && text[i] == '\'') {
            sign = -1;
            ++i;
        }
        long long power = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            std::size_t digits = 0;
            power = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                power = checked_add(checked_mul(power, 10), text[i] - '0');
                ++i;
                ++digits;
            }
            if (digits == 0 || power == 0)
                throw parse_error("expected a positive power after '^'", i);
        }
        if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
            throw parse_error("unexpected character in word token starting here", start);
        w.append(g, checked_mul(sign, power));
    }
    return w;
}

std::string format_word(const GoeritzWord& w) {
    if (w.empty()) return "1";
    std::string out;
    for (const Syllable& s : w.syllables()) {
        if (!out.empty()) out += ' ';
        out += generator_ascii(s.gen);
        long long e = s.exponent;
        if (e < 0) {
            out += '\'';
            e = checked_neg(e);
        }
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

}  // namespace goeritz
