#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "bq/rational.hpp"

namespace bq {

// A univariate parameter expression; throws Error(PoleEncountered) or
// Error(DivisionByZero) at a pole.
using ParamExpr = std::function<Rational(const Rational&)>;

struct IdentityCheckResult {
    bool equal = false;
    std::vector<Rational> samples;       // parameter values used
    std::optional<Rational> witness;     // first value where f != g
    int skipped_poles = 0;
};

// Rationals ordered by height: 0, 1, -1, 2, -2, 1/2, -1/2, 3, ...
std::vector<Rational> rational_sample_sequence(size_t count);

IdentityCheckResult poly_identity_check_detail(const ParamExpr& f, const ParamExpr& g, int degree_bound, int sample_count);
bool poly_identity_check(const ParamExpr& f, const ParamExpr& g, int degree_bound, int sample_count);

}  // namespace bq
