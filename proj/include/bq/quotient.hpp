#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bq/elliptic.hpp"
#include "bq/plane_curve.hpp"
#include "bq/unipoly.hpp"

namespace bq {

// affine point of an intermediate model, or its point at infinity
struct ChainPoint {
    bool infinity = false;
    NFElement x, y;
    static ChainPoint affine(const NFElement& x, const NFElement& y) { return ChainPoint{false, x, y}; }
    std::string to_string() const;
};

struct ChainStep {
    enum class Kind {
        Linear,      // source coordinates: old = M * new
        Fiber,       // (X:Y:Z) -> (X/Y, k Z^2/Y^2)
        Affine,      // x_old = ax x_new + bx, y_old = ay y_new + by
        ShearY,      // y_new = c y_old + p(x_old)
        InvertX,     // s = 1/(u - x0) (or 1/u at infinity), v' = v s^2
        Connell,     // v^2 = a s^4 + b s^3 + c s^2 + d s + q^2 to long Weierstrass form
        CubicMonic,  // x = k s, y = k v
        Weierstrass  // standard (u, r, s, t) change of a Weierstrass model
    };
    Kind kind = Kind::Affine;
    ProjectiveTransformation M;
    NFElement k, ax, bx, ay, by, c;
    std::vector<NFElement> p;  // low degree first
    bool at_infinity = false;
    NFElement x0;
    Rational cb, cc, cd, cq;  // Connell data
    CoordinateChange change;

    std::string kind_name() const;
    std::string describe() const;
};

struct QuotientChain {
    std::vector<ChainStep> steps;

    // source point (on the plane curve) to the last model; throws PoleEncountered
    ChainPoint forward(const ProjPoint& src) const;
    // apply steps [from, end)
    ChainPoint forward_from(size_t from, ChainPoint P) const;
    // invert the steps after the Fiber step (all steps if there is none);
    // with a Fiber step the result is (X/Y, k Z^2/Y^2)
    ChainPoint backward_to_fiber(const ChainPoint& P) const;
    size_t fiber_index() const;  // throws WrongShape when absent

    void append(const QuotientChain& other);
    std::vector<std::string> describe() const;
};

// v^2 = q(u), q of degree 3 or 4 with nonzero discriminant
struct GenusOneQuarticModel {
    NumberField field;
    std::vector<NFElement> q;  // low degree first, size 5
    QuotientChain chain;

    int degree() const;
    bool is_rational() const;
    UniPoly rational_poly() const;  // throws UnsupportedCoefficientField
    std::string to_string() const;
};

// binary quartic invariants of q (deg <= 4 read as a binary form of degree 4)
std::pair<NFElement, NFElement> quartic_invariants(const std::vector<NFElement>& q);
NFElement jacobian_j(const GenusOneQuarticModel& m);
// y^2 = x^3 - 27 I x - 27 J, reduced to an integral minimal short model; rational models only
WeierstrassCurve jacobian_curve(const GenusOneQuarticModel& m);

// F = c4 Z^4 + Z^2 L2(X,Y) + L4(X,Y), quotient by diag(1,1,-1), dehomogenized at Y = 1:
// v = 2 c4 Z^2/Y^2 + L2(u,1), v^2 = L2(u,1)^2 - 4 c4 L4(u,1)
GenusOneQuarticModel quotient_to_binary_quartic(const TernaryForm& F);

struct ReductionHint {
    enum class Kind { Auto, Root, LeadingSquare, Point };
    Kind kind = Kind::Auto;
    Rational r;       // Root
    Rational u0, v0;  // Point
    static ReductionHint root(const Rational& r) { return {Kind::Root, r, 0, 0}; }
    static ReductionHint leading_square() { return {Kind::LeadingSquare, 0, 0, 0}; }
    static ReductionHint point(const Rational& u, const Rational& v) { return {Kind::Point, 0, u, v}; }
};

struct WeierstrassReduction {
    WeierstrassCurve E;    // short form
    QuotientChain chain;   // only the reduction steps
    std::string method;    // "cubic", "root", "leading-square", "point"
};
// Auto tries, in order: cubic model, rational root, square leading coefficient, small point search
WeierstrassReduction quartic_to_weierstrass(const GenusOneQuarticModel& m, const ReductionHint& hint = {});

struct NamedChainResult {
    WeierstrassCurve E;
    std::optional<ECPoint> P;
    QuotientChain chain;
};
// the three substitutions of the Z/6 representative family, ending at y^2 = x^3 + a^4/4 - a^3
NamedChainResult chain_thm1(const Rational& a);
// quotient of Am^2Z^4 + mY^2Z^2 + nX^3Y + Y^4 ending at y^2 = x^3 + n^2A^2(1-4A)/4
NamedChainResult chain_DAn(const Rational& A, const Rational& n, const Rational& m = 1);

struct QuotientResult {
    GenusOneQuarticModel model;
    NFElement jacobian_j;
    std::optional<WeierstrassCurve> jacobian;  // rational models
    std::optional<WeierstrassCurve> E;         // reduced model when a point is available
    QuotientChain chain;                       // source to E (or to the model)
    std::string status;  // "reduced", "no-rational-point", "non-rational-model"
    std::string method;
};
QuotientResult quotient_via_conjugation(const TernaryForm& F, const ProjectiveTransformation& M, const ReductionHint& hint = {});

}  // namespace bq
