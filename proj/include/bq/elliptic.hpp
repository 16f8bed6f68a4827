#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bq/rational.hpp"

namespace bq {

// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q
struct WeierstrassCurve {
    Rational a1, a2, a3, a4, a6;

    WeierstrassCurve() : a6(1) {}
    // throws SingularCurve if the discriminant vanishes
    WeierstrassCurve(const Rational& a1, const Rational& a2, const Rational& a3, const Rational& a4, const Rational& a6);
    static WeierstrassCurve short_form(const Rational& A, const Rational& B);

    bool is_short() const { return a1 == 0 && a2 == 0 && a3 == 0; }
    std::string to_string() const;
    friend bool operator==(const WeierstrassCurve& a, const WeierstrassCurve& b);
};

struct EllipticInvariants {
    Rational b2, b4, b6, b8, c4, c6, disc, j;
};
EllipticInvariants invariants(const WeierstrassCurve& E);
Rational j_invariant(const WeierstrassCurve& E);
// discriminant without the nonsingularity check
Rational discriminant(const Rational& a1, const Rational& a2, const Rational& a3, const Rational& a4, const Rational& a6);

struct ECPoint {
    bool infinity = true;
    Rational x, y;
    static ECPoint at_infinity() { return ECPoint(); }
    static ECPoint affine(const Rational& x, const Rational& y) { return ECPoint{false, x, y}; }
    std::string to_string() const;
    friend bool operator==(const ECPoint& a, const ECPoint& b) {
        return a.infinity == b.infinity && (a.infinity || (a.x == b.x && a.y == b.y));
    }
    friend bool operator!=(const ECPoint& a, const ECPoint& b) { return !(a == b); }
};

bool on_curve(const WeierstrassCurve& E, const ECPoint& P);
ECPoint neg(const WeierstrassCurve& E, const ECPoint& P);
ECPoint add(const WeierstrassCurve& E, const ECPoint& P, const ECPoint& Q);
ECPoint mul(const WeierstrassCurve& E, long n, const ECPoint& P);

struct NonTorsionCertificate {
    WeierstrassCurve curve;
    ECPoint point;
    std::vector<std::pair<int, ECPoint>> multiples;  // n = 1..12, all nonzero
};
// throws TorsionPoint naming the order when some nP = O with n <= 12
NonTorsionCertificate non_torsion_certificate(const WeierstrassCurve& E, const ECPoint& P);

// x = u^2 x' + r, y = u^3 y' + s u^2 x' + t
struct CoordinateChange {
    Rational u{1}, r{0}, s{0}, t{0};
};
WeierstrassCurve change_coordinates(const WeierstrassCurve& E, const CoordinateChange& c);
ECPoint map_to_new(const CoordinateChange& c, const ECPoint& P);  // old coordinates -> new
ECPoint map_to_old(const CoordinateChange& c, const ECPoint& P);
CoordinateChange compose(const CoordinateChange& first, const CoordinateChange& second);

// y^2 = x^3 - c4/48 x - c6/864
std::pair<WeierstrassCurve, CoordinateChange> short_model(const WeierstrassCurve& E);
// short model with integer A, B, minimal at every prime we can factor out
std::pair<WeierstrassCurve, CoordinateChange> integral_short_model(const WeierstrassCurve& E);

// y^2 = x^3 + D a2 x^2 + D^2 a4 x + D^3 a6; needs a1 = a3 = 0 and D square-free
WeierstrassCurve quadratic_twist(const WeierstrassCurve& E, const Integer& D);
bool is_isomorphic_over_q(const WeierstrassCurve& E1, const WeierstrassCurve& E2);
// square-free D with E2 isomorphic over Q to the twist of E1 by D, if one exists
std::optional<Integer> quadratic_twist_factor(const WeierstrassCurve& E1, const WeierstrassCurve& E2);

// affine points with x = p/q^2 on the integral short model, max(|p|, q^2) <= H, mapped back to E.
// Sorted, includes negatives; O is not listed. Workers from BQ_WORKERS when workers == 0.
std::vector<ECPoint> search_points(const WeierstrassCurve& E, long height_bound, unsigned workers = 0);

struct RankVerdict {
    std::string verdict;
    long height_bound = 0;
    std::vector<ECPoint> points;
    std::optional<NonTorsionCertificate> certificate;
};
// no rank computation: reports what a bounded search exhibits
RankVerdict rank_verdict(const WeierstrassCurve& E, long height_bound);

unsigned worker_count();

}  // namespace bq
