#pragma once

#include <array>
#include <string>

#include "goeritz/exact.hpp"

namespace goeritz {

/// An element of H_1(F; Z) = Z^4 in the standard basis {a, x, b, y} of the
/// genus 2 Heegaard surface F. The first block (a, x) lives in H_1(H'), the
/// second block (b, y) in H_1(H).
struct HomologyVector {
    long long a = 0, x = 0, b = 0, y = 0;

    friend bool operator==(const HomologyVector&, const HomologyVector&) = default;
    bool first_block_zero() const { return a == 0 && x == 0; }
    bool second_block_zero() const { return b == 0 && y == 0; }
    bool is_zero() const { return first_block_zero() && second_block_zero(); }
    std::string str() const;
};

/// 2x2 integer matrix, row-major: [[s, t], [u, v]].
struct Block2Matrix {
    long long s = 1, t = 0, u = 0, v = 1;

    static Block2Matrix identity() { return {}; }
    long long det() const { return checked_sub(checked_mul(s, v), checked_mul(t, u)); }
    bool is_unimodular() const { long long d = det(); return d == 1 || d == -1; }
    Block2Matrix transpose() const { return {s, u, t, v}; }

    friend Block2Matrix operator*(const Block2Matrix& m, const Block2Matrix& n) {
        return {checked_add(checked_mul(m.s, n.s), checked_mul(m.t, n.u)),
                checked_add(checked_mul(m.s, n.t), checked_mul(m.t, n.v)),
                checked_add(checked_mul(m.u, n.s), checked_mul(m.v, n.u)),
                checked_add(checked_mul(m.u, n.t), checked_mul(m.v, n.v))};
    }
    friend bool operator==(const Block2Matrix&, const Block2Matrix&) = default;
    std::string str() const;
};

/// Inverse of a unimodular 2x2 matrix (adjugate divided by det = +-1).
Block2Matrix unimodular_inverse(const Block2Matrix& m);

/// Block-diagonal matrix diag(C, (C^-1)^T) with C unimodular: the shape of
/// every homology action induced by a handlebody-preserving element.
struct GoeritzMatrix {
    Block2Matrix first_block;   // C
    Block2Matrix second_block;  // (C^-1)^T

    friend bool operator==(const GoeritzMatrix&, const GoeritzMatrix&) = default;
};

/// The five Dehn-twist curves of the standard generating set for the mapping
/// class group of F.
enum class TwistCurve { c1, c2, c3, c4, c5 };

inline constexpr std::array<TwistCurve, 5> kAllTwistCurves = {
    TwistCurve::c1, TwistCurve::c2, TwistCurve::c3, TwistCurve::c4, TwistCurve::c5};

/// Framing slope of a curve with respect to F; equal to the split product of
/// its homology vector, which this library takes as the definition.
struct SurfaceSlope {
    long long value = 0;
    friend bool operator==(const SurfaceSlope&, const SurfaceSlope&) = default;
};

/// Split product a*b + x*y: the dot product of the two blocks.
long long split_product(const HomologyVector& k);

SurfaceSlope surface_slope(const HomologyVector& k);

/// Algebraic intersection number in the standard symplectic basis {a, b, x, y}:
/// (a1*b2 - a2*b1) + (x1*y2 - x2*y1).
long long symplectic_pairing(const HomologyVector& k1, const HomologyVector& k2);

/// The handlebody swap on homology: (a, x, b, y) -> (y, b, x, a). Involutive.
HomologyVector epsilon_star(const HomologyVector& k);

/// diag(C, (C^-1)^T) for unimodular C. Rejects non-unimodular input.
GoeritzMatrix goeritz_form_from_block(const Block2Matrix& c);

/// First block acts on (a, x), second block on (b, y).
HomologyVector apply(const GoeritzMatrix& m, const HomologyVector& k);

/// Action of a positive Dehn twist about one of the five generating curves:
///   c1: a -> a - b          c2: b -> b + a
///   c3: a -> a + (y - b), x -> x - (y - b)
///   c4: y -> y + x          c5: x -> x - y
/// The split product changes by -b^2, +a^2, -(b-y)^2, +x^2, -y^2 respectively.
HomologyVector dehn_twist(const HomologyVector& k, TwistCurve c);

}  // namespace goeritz
