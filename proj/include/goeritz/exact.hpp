#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace goeritz {

/// Raised when an exact integer computation would leave the representable
/// range. Results are never silently wrapped.
class arithmetic_error : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// Raised when an operation is invoked outside its stated hypotheses
/// (non-unimodular matrix, zero-slope vector passed to the slope-based
/// decision procedure, out-of-range family parameters, ...).
class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A block of a homology vector is (0,0), so gcd-based conditions and
/// transporter construction do not apply.
class degenerate_block_error : public precondition_error {
public:
    using precondition_error::precondition_error;
};

/// Raised by the text parsers; carries a character position.
class parse_error : public std::invalid_argument {
public:
    parse_error(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Exact signed integer with overflow-checked arithmetic. Thin wrapper over
/// int64; every operator throws arithmetic_error instead of wrapping.
struct zint {
    long long v = 0;

    zint() = default;
    zint(long long x) : v(x) {}

    friend zint operator+(zint a, zint b) {
        long long r;
        if (__builtin_add_overflow(a.v, b.v, &r))
            throw arithmetic_error("integer addition overflow");
        return r;
    }
    friend zint operator-(zint a, zint b) {
        long long r;
        if (__builtin_sub_overflow(a.v, b.v, &r))
            throw arithmetic_error("integer subtraction overflow");
        return r;
    }
    friend zint operator*(zint a, zint b) {
        long long r;
        if (__builtin_mul_overflow(a.v, b.v, &r))
            throw arithmetic_error("integer multiplication overflow");
        return r;
    }
    friend zint operator-(zint a) { return zint(0) - a; }
    friend bool operator==(zint a, zint b) { return a.v == b.v; }
    friend bool operator!=(zint a, zint b) { return a.v != b.v; }
};

inline long long checked_add(long long a, long long b) { return (zint(a) + zint(b)).v; }
inline long long checked_sub(long long a, long long b) { return (zint(a) - zint(b)).v; }
inline long long checked_mul(long long a, long long b) { return (zint(a) * zint(b)).v; }
inline long long checked_neg(long long a) { return (-zint(a)).v; }

/// Nonnegative gcd with the convention gcd(0,0) = 0. Callers that cannot
/// accept the degenerate value are expected to test for it explicitly.
long long gcd_pair(long long p, long long q);

/// Bezout coefficients (e1, e2) with e1*k + e2*l = gcd(k, l) > 0, chosen
/// canonically: |e1| minimal, ties broken toward nonnegative e1.
/// Requires (k, l) != (0, 0).
std::pair<long long, long long> bezout_pair(long long k, long long l);

}  // namespace goeritz
