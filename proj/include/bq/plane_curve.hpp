#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bq/ternary_form.hpp"

namespace bq {

using Matrix3 = std::array<NFElement, 9>;  // row-major

Matrix3 mat_identity(const NumberField& K);
Matrix3 mat_mul(const Matrix3& a, const Matrix3& b);
NFElement mat_det(const Matrix3& a);
Matrix3 mat_adjugate(const Matrix3& a);
Matrix3 mat_scale(const Matrix3& a, const NFElement& s);
NumberField mat_field(const Matrix3& a);
// basis of the kernel, in reduced echelon form
std::vector<std::array<NFElement, 3>> mat_kernel(const Matrix3& a);

class ProjectiveTransformation {
public:
    ProjectiveTransformation() : ProjectiveTransformation(mat_identity(NumberField::rationals())) {}
    explicit ProjectiveTransformation(const Matrix3& m);  // throws if singular
    static ProjectiveTransformation identity(const NumberField& K = NumberField::rationals());
    static ProjectiveTransformation diag(const NFElement& a, const NFElement& b, const NFElement& c);
    static ProjectiveTransformation parse(const std::vector<std::string>& entries, const NumberField& K);

    const Matrix3& matrix() const { return m_; }
    const NumberField& field() const { return K_; }
    const NFElement& at(int r, int c) const { return m_[3 * r + c]; }

    ProjectiveTransformation normalized() const;
    ProjectiveTransformation inverse() const;
    ProjectiveTransformation coerce(const NumberField& K) const;
    ProjectiveTransformation pow(int n) const;
    bool is_scalar() const;
    bool is_rational() const;

    friend ProjectiveTransformation operator*(const ProjectiveTransformation& a, const ProjectiveTransformation& b);
    // equality in PGL3
    friend bool operator==(const ProjectiveTransformation& a, const ProjectiveTransformation& b);
    friend bool operator!=(const ProjectiveTransformation& a, const ProjectiveTransformation& b) { return !(a == b); }

    std::string key() const;  // canonical string of the normalized matrix
    std::string to_string() const;

private:
    Matrix3 m_;
    NumberField K_;
};

struct ProjPoint {
    std::array<NFElement, 3> coords;
    ProjPoint() = default;
    ProjPoint(const NFElement& x, const NFElement& y, const NFElement& z);
    ProjPoint normalized() const;
    std::string to_string() const;
    friend bool operator==(const ProjPoint& a, const ProjPoint& b);
};

enum class NonsingularityStatus { Verified, Heuristic, Unchecked };
const char* status_name(NonsingularityStatus s);

struct PlaneCurve {
    TernaryForm form;
    NumberField field;
    int genus = 0;
    NonsingularityStatus status = NonsingularityStatus::Unchecked;

    PlaneCurve() = default;
    // checks nonsingularity (exact over Q, modular heuristic otherwise); throws SingularInstance
    static PlaneCurve make(const TernaryForm& F);
    static PlaneCurve unchecked(const TernaryForm& F);
    int degree() const { return form.degree(); }
};

bool is_nonsingular(const TernaryForm& F);
// exhaustive search for singular points mod p for all reducible primes > 50 (first four)
bool modular_nonsingularity_heuristic(const TernaryForm& F, int prime_count = 4);
// projective points of P^2(F_p) where F and its partials vanish; F must have Q coefficients
std::vector<std::array<uint64_t, 3>> singular_points_mod_p(const TernaryForm& F, uint64_t p);

TernaryForm apply_transformation(const TernaryForm& F, const ProjectiveTransformation& M);

struct InvarianceResult {
    bool invariant = false;
    std::optional<NFElement> scalar;
};
InvarianceResult is_invariant(const TernaryForm& F, const ProjectiveTransformation& M);

bool point_on_curve(const TernaryForm& F, const ProjPoint& P);

}  // namespace bq
