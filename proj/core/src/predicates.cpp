// Exact-sign orientation and incircle predicates.
//
// Fast path evaluates the determinant in doubles against a forward error
// bound (Shewchuk's A-stage constants). When the bound cannot certify the
// sign, the full determinant is recomputed with floating-point expansions:
// error-free transforms (two_sum / fma-based two_product) feeding
// nonoverlapping multi-component sums whose largest component carries the
// sign. The slow path only triggers near degeneracy.

#include "shapescore/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace shapescore {
namespace {

// Shewchuk's epsilon: half an ulp of 1.0.
constexpr double kEps = std::numeric_limits<double>::epsilon() / 2.0;
constexpr double kCcwErrBoundA = (3.0 + 16.0 * kEps) * kEps;
constexpr double kIccErrBoundA = (10.0 + 96.0 * kEps) * kEps;

inline void two_sum(double a, double b, double& x, double& y) {
    x = a + b;
    double bv = x - a;
    double av = x - bv;
    y = (a - av) + (b - bv);
}

// Requires |a| >= |b| or a == 0.
inline void fast_two_sum(double a, double b, double& x, double& y) {
    x = a + b;
    double bv = x - a;
    y = b - bv;
}

inline void two_product(double a, double b, double& x, double& y) {
    x = a * b;
    y = std::fma(a, b, -x);
}

// A nonoverlapping expansion, components in increasing magnitude order.
using Expansion = std::vector<double>;

Expansion make_product(double a, double b) {
    double hi, lo;
    two_product(a, b, hi, lo);
    Expansion e;
    if (lo != 0.0) e.push_back(lo);
    if (hi != 0.0 || e.empty()) e.push_back(hi);
    return e;
}

Expansion negate(Expansion e) {
    for (double& c : e) c = -c;
    return e;
}

// Sum of two expansions (fast_expansion_sum_zeroelim): merge by magnitude,
// then run an accumulator whose round-off terms become the low components.
Expansion expansion_sum(const Expansion& e, const Expansion& f) {
    if (e.empty()) return f;
    if (f.empty()) return e;
    std::vector<double> g;
    g.reserve(e.size() + f.size());
    std::merge(e.begin(), e.end(), f.begin(), f.end(), std::back_inserter(g),
               [](double a, double b) { return std::fabs(a) < std::fabs(b); });
    Expansion h;
    h.reserve(g.size());
    double q = g[0];
    for (std::size_t i = 1; i < g.size(); ++i) {
        double qn, hh;
        if (i == 1)
            fast_two_sum(g[1], q, qn, hh);
        else
            two_sum(q, g[i], qn, hh);
        q = qn;
        if (hh != 0.0) h.push_back(hh);
    }
    if (q != 0.0 || h.empty()) h.push_back(q);
    return h;
}

// scale_expansion_zeroelim.
Expansion expansion_scale(const Expansion& e, double b) {
    if (e.empty() || b == 0.0) return {};
    Expansion h;
    h.reserve(2 * e.size());
    double q, hh;
    two_product(e[0], b, q, hh);
    if (hh != 0.0) h.push_back(hh);
    for (std::size_t i = 1; i < e.size(); ++i) {
        double p1, p0, sum;
        two_product(e[i], b, p1, p0);
        two_sum(q, p0, sum, hh);
        if (hh != 0.0) h.push_back(hh);
        fast_two_sum(p1, sum, q, hh);
        if (hh != 0.0) h.push_back(hh);
    }
    if (q != 0.0 || h.empty()) h.push_back(q);
    return h;
}

int expansion_sign(const Expansion& e) {
    if (e.empty()) return 0;
    double top = e.back();
    return top > 0.0 ? 1 : (top < 0.0 ? -1 : 0);
}

// ax*by - bx*ay as an exact expansion.
Expansion cross_term(double ax, double ay, double bx, double by) {
    return expansion_sum(make_product(ax, by), negate(make_product(bx, ay)));
}

int orient2d_exact(const Point& a, const Point& b, const Point& c) {
    Expansion ab = cross_term(a.x(), a.y(), b.x(), b.y());
    Expansion bc = cross_term(b.x(), b.y(), c.x(), c.y());
    Expansion ca = cross_term(c.x(), c.y(), a.x(), a.y());
    return expansion_sign(expansion_sum(expansion_sum(ab, bc), ca));
}

// (px^2 + py^2) * e, exactly.
Expansion lift_scale(const Expansion& e, double px, double py) {
    Expansion xx = expansion_scale(expansion_scale(e, px), px);
    Expansion yy = expansion_scale(expansion_scale(e, py), py);
    return expansion_sum(xx, yy);
}

int in_circumcircle_exact(const Point& a, const Point& b, const Point& c, const Point& d) {
    Expansion ab = cross_term(a.x(), a.y(), b.x(), b.y());
    Expansion bc = cross_term(b.x(), b.y(), c.x(), c.y());
    Expansion cd = cross_term(c.x(), c.y(), d.x(), d.y());
    Expansion da = cross_term(d.x(), d.y(), a.x(), a.y());
    Expansion ac = cross_term(a.x(), a.y(), c.x(), c.y());
    Expansion bd = cross_term(b.x(), b.y(), d.x(), d.y());

    Expansion cda = expansion_sum(expansion_sum(cd, da), ac);
    Expansion dab = expansion_sum(expansion_sum(da, ab), bd);
    Expansion abc = expansion_sum(expansion_sum(ab, bc), negate(ac));
    Expansion bcd = expansion_sum(expansion_sum(bc, cd), negate(bd));

    Expansion det = lift_scale(bcd, a.x(), a.y());
    det = expansion_sum(det, negate(lift_scale(cda, b.x(), b.y())));
    det = expansion_sum(det, lift_scale(dab, c.x(), c.y()));
    det = expansion_sum(det, negate(lift_scale(abc, d.x(), d.y())));
    return expansion_sign(det);
}

inline int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

}  // namespace

int orient2d(const Point& a, const Point& b, const Point& c) {
    if (a.dim() != 2 || b.dim() != 2 || c.dim() != 2)
        fail_input("orient2d requires 2D points");

    double detleft = (a.x() - c.x()) * (b.y() - c.y());
    double detright = (a.y() - c.y()) * (b.x() - c.x());
    double det = detleft - detright;
    double detsum;

    if (detleft > 0.0) {
        if (detright <= 0.0) return sign_of(det);
        detsum = detleft + detright;
    } else if (detleft < 0.0) {
        if (detright >= 0.0) return sign_of(det);
        detsum = -detleft - detright;
    } else {
        // detleft is an exact zero product, so det = -detright exactly.
        return sign_of(det);
    }

    double errbound = kCcwErrBoundA * detsum;
    if (det >= errbound || -det >= errbound) return sign_of(det);
    return orient2d_exact(a, b, c);
}

int in_circumcircle(const Point& a, const Point& b, const Point& c, const Point& p) {
    if (a.dim() != 2 || b.dim() != 2 || c.dim() != 2 || p.dim() != 2)
        fail_input("in_circumcircle requires 2D points");
    if (orient2d(a, b, c) == 0)
        fail_degenerate("in_circumcircle: triangle abc is collinear");

    double adx = a.x() - p.x(), ady = a.y() - p.y();
    double bdx = b.x() - p.x(), bdy = b.y() - p.y();
    double cdx = c.x() - p.x(), cdy = c.y() - p.y();

    double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
    double cdxady = cdx * ady, adxcdy = adx * cdy;
    double adxbdy = adx * bdy, bdxady = bdx * ady;
    double alift = adx * adx + ady * ady;
    double blift = bdx * bdx + bdy * bdy;
    double clift = cdx * cdx + cdy * cdy;

    double det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) +
                 clift * (adxbdy - bdxady);
    double permanent = (std::fabs(bdxcdy) + std::fabs(cdxbdy)) * alift +
                       (std::fabs(cdxady) + std::fabs(adxcdy)) * blift +
                       (std::fabs(adxbdy) + std::fabs(bdxady)) * clift;
    double errbound = kIccErrBoundA * permanent;
    if (det > errbound || -det > errbound) return sign_of(det);
    return in_circumcircle_exact(a, b, c, p);
}

}  // namespace shapescore
