#pragma once

#include <array>
#include <string>
#include <vector>

#include "bq/elliptic.hpp"
#include "bq/plane_curve.hpp"
#include "bq/quotient.hpp"

namespace bq {

struct QuadraticPoint {
    Integer D;                  // the point lives over Q(sqrt(D))
    bool d_normalized = true;   // false if D could not be certified square-free
    ProjPoint point;            // normalized, over Q(sqrt(D))
    ProjPoint conjugate;
    enum class Source { Line, Pullback } source = Source::Line;
    std::array<Integer, 3> line{};  // Line: coefficients of the rational line through the pair
    long n = 0;                     // Pullback: multiple of the base point
    ECPoint ec;                     // Pullback: nP
};

struct QuadraticFieldReport {
    std::string curve;
    long height_bound = 0;
    std::vector<ProjPoint> rational_points;          // normalized, sorted
    std::vector<QuadraticPoint> quadratic_points;    // sorted by D, then coordinates
    std::vector<Integer> distinct_D;                 // sorted
    size_t lines_scanned = 0;
    size_t lines_skipped = 0;  // lines contained in the curve
};

// all rational and quadratic points cut out by primitive integer lines of height <= H (H <= 200)
QuadraticFieldReport enumerate_points(const TernaryForm& F, long height_bound, unsigned workers = 0);
std::vector<Integer> new_fields_report(const TernaryForm& F, long height_bound, unsigned workers = 0);

struct PullbackPoint {
    long n = 0;
    ECPoint ec;
    bool rational = false;
    ProjPoint rational_point;  // when rational
    QuadraticPoint quadratic;  // otherwise
};
// pull nP (n = 1..n_max) back through the Z/6 chain onto aZ^4 + Y^2(Y^2 + aZ^2) + X^3Y
std::vector<PullbackPoint> pullback_quadratic_points(const Rational& a, long n_max);

NFElement galois_conjugate(const NFElement& x);  // sqrt(D) -> -sqrt(D)
ProjPoint galois_conjugate(const ProjPoint& P);
std::string point_key(const ProjPoint& P);

}  // namespace bq
