#include "goeritz/homology.hpp"

namespace goeritz {

long long gcd_pair(long long p, long long q) {
    // Magnitudes in unsigned space so |INT64_MIN| is representable.
    unsigned long long a = p < 0 ? ~static_cast<unsigned long long>(p) + 1 : p;
    unsigned long long b = q < 0 ? ~static_cast<unsigned long long>(q) + 1 : q;
    while (b != 0) {
        unsigned long long r = a % b;
        a = b;
        b = r;
    }
    if (a > 0x7fffffffffffffffULL)
        throw arithmetic_error("gcd magnitude exceeds the representable range");
    return static_cast<long long>(a);
}

std::pair<long long, long long> bezout_pair(long long k, long long l) {
    if (k == 0 && l == 0)
        throw degenerate_block_error("Bezout coefficients are undefined for (0, 0)");
    if (l == 0) return {k > 0 ? 1 : -1, 0};
    // Extended Euclid, then shift to the canonical representative:
    // the solution family is (e1 + t*(l/g), e2 - t*(k/g)).
    long long old_r = k, r = l;
    long long old_e1 = 1, e1 = 0;
    while (r != 0) {
        long long q = old_r / r;
        long long tmp = checked_sub(old_r, checked_mul(q, r));
        old_r = r; r = tmp;
        tmp = checked_sub(old_e1, checked_mul(q, e1));
        old_e1 = e1; e1 = tmp;
    }
    long long g = old_r, a = old_e1;
    if (g < 0) { g = checked_neg(g); a = checked_neg(a); }
    long long step = l / g;
    long long span = step < 0 ? checked_neg(step) : step;
    long long res = ((a % span) + span) % span;  // res in [0, span)
    long long alt = checked_sub(res, span);
    // Minimal magnitude; the tie res = span/2 resolves to the nonnegative one.
    a = (res <= checked_neg(alt)) ? res : alt;
    long long b = (zint(g) - zint(a) * k).v / l;
    if (checked_add(checked_mul(a, k), checked_mul(b, l)) != g)
        throw arithmetic_error("Bezout normalization lost the identity");
    return {a, b};
}

std::string HomologyVector::str() const {
    return "(" + std::to_string(a) + "," + std::to_string(x) + "," +
           std::to_string(b) + "," + std::to_string(y) + ")";
}

std::string Block2Matrix::str() const {
    return "[[" + std::to_string(s) + "," + std::to_string(t) + "],[" +
           std::to_string(u) + "," + std::to_string(v) + "]]";
}

Block2Matrix unimodular_inverse(const Block2Matrix& m) {
    long long d = m.det();
    if (d != 1 && d != -1)
        throw precondition_error("matrix is not unimodular (det " + std::to_string(d) + ")");
    // adjugate / det with det = +-1
    return {checked_mul(m.v, d), checked_mul(checked_neg(m.t), d),
            checked_mul(checked_neg(m.u), d), checked_mul(m.s, d)};
}

long long split_product(const HomologyVector& k) {
    return checked_add(checked_mul(k.a, k.b), checked_mul(k.x, k.y));
}

SurfaceSlope surface_slope(const HomologyVector& k) { return {split_product(k)}; }

long long symplectic_pairing(const HomologyVector& k1, const HomologyVector& k2) {
    zint ab = zint(k1.a) * zint(k2.b) - zint(k2.a) * zint(k1.b);
    zint xy = zint(k1.x) * zint(k2.y) - zint(k2.x) * zint(k1.y);
    return (ab + xy).v;
}

HomologyVector epsilon_star(const HomologyVector& k) { return {k.y, k.b, k.x, k.a}; }

GoeritzMatrix goeritz_form_from_block(const Block2Matrix& c) {
    if (!c.is_unimodular())
        throw precondition_error("Goeritz-form block must have determinant +-1, got det " +
                                 std::to_string(c.det()));
    return {c, unimodular_inverse(c).transpose()};
}

HomologyVector apply(const GoeritzMatrix& m, const HomologyVector& k) {
    const Block2Matrix& c = m.first_block;
    const Block2Matrix& d = m.second_block;
    return {(zint(c.s) * k.a + zint(c.t) * k.x).v,
            (zint(c.u) * k.a + zint(c.v) * k.x).v,
            (zint(d.s) * k.b + zint(d.t) * k.y).v,
            (zint(d.u) * k.b + zint(d.v) * k.y).v};
}

HomologyVector dehn_twist(const HomologyVector& k, TwistCurve c) {
    HomologyVector r = k;
    switch (c) {
        case TwistCurve::c1: r.a = checked_sub(k.a, k.b); break;
        case TwistCurve::c2: r.b = checked_add(k.b, k.a); break;
        case TwistCurve::c3: {
            long long i = checked_sub(k.y, k.b);
            r.a = checked_add(k.a, i);
            r.x = checked_sub(k.x, i);
            break;
        }
        case TwistCurve::c4: r.y = checked_add(k.y, k.x); break;
        case TwistCurve::c5: r.x = checked_sub(k.x, k.y); break;
    }
    return r;
}

}  // namespace goeritz
