#include "bq/identity.hpp"

#include <numeric>

#include "bq/error.hpp"

namespace bq {

std::vector<Rational> rational_sample_sequence(size_t count) {
    std::vector<Rational> out;
    auto push = [&](long p, long q) {
        if (out.size() < count) out.push_back(make_rational(p, q));
        if (out.size() < count) out.push_back(make_rational(-p, q));
    };
    if (count) out.push_back(0);
    for (long h = 1; out.size() < count; ++h) {
        // p/q in lowest terms with max(|p|, q) = h
        for (long q = 1; q <= h; ++q)
            if (std::gcd(h, q) == 1) push(h, q);
        for (long p = 1; p < h; ++p)
            if (std::gcd(p, h) == 1) push(p, h);
    }
    return out;
}

IdentityCheckResult poly_identity_check_detail(const ParamExpr& f, const ParamExpr& g, int degree_bound, int sample_count) {
    if (sample_count <= degree_bound)
        throw Error(ErrorKind::InsufficientSamples, "sample_count must exceed degree_bound");
    IdentityCheckResult res;
    size_t budget = 10 * (size_t)sample_count + 100;
    auto seq = rational_sample_sequence(budget);
    for (const auto& t : seq) {
        if ((int)res.samples.size() == sample_count) break;
        Rational a, b;
        try {
            a = f(t);
            b = g(t);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::PoleEncountered || e.kind() == ErrorKind::DivisionByZero ||
                e.kind() == ErrorKind::SingularCurve) {
                ++res.skipped_poles;
                continue;
            }
            throw;
        }
        res.samples.push_back(t);
        if (a != b) {
            res.equal = false;
            res.witness = t;
            return res;
        }
    }
    if ((int)res.samples.size() < sample_count)
        throw Error(ErrorKind::InsufficientSamples, "too many poles among sample values");
    res.equal = true;
    return res;
}

bool poly_identity_check(const ParamExpr& f, const ParamExpr& g, int degree_bound, int sample_count) {
    return poly_identity_check_detail(f, g, degree_bound, sample_count).equal;
}

}  // namespace bq
