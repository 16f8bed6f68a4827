#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bq/involutions.hpp"

namespace bq {

enum class FamilyId {
    T1_C2,
    T1_C2xC2,
    T1_C6,
    T1_S3,
    T1_D4,
    T1_G16,
    T1_S4,
    T1_G48,
    T1_G96,
    T1_KLEIN,
    Z6_REP,             // aZ^4 + Y^2(Y^2 + aZ^2) + X^3Y
    Z6_TWIST,           // Am^2Z^4 + mY^2Z^2 + nX^3Y + Y^4
    G16_REP,            // AX^4 + Y^4 + Z^4 + X^2Y^2
    G16_DIAG_TWIST,     // mAX^4 + q^2mY^4 + Z^4 + qmX^2Y^2
    G16_NONDIAG_TWIST,  // parameters a, b, m, q, A with a^2 - b^2 m = q^4 A
    THM4,               // the q = -2a = 2b specialization of the above
};

const std::vector<FamilyId>& all_families();
std::string family_name(FamilyId id);
FamilyId parse_family_id(const std::string& s);  // throws UnknownLabel

struct FamilyInfo {
    FamilyId id;
    std::string stratum;                    // catalog label of the automorphism group
    std::vector<std::string> params;        // required parameter names
    std::vector<std::string> optional_params;  // default to 0
    std::string display;                    // the defining form with symbolic parameters
};
const FamilyInfo& family_info(FamilyId id);

struct FamilySpec {
    FamilyId family_id = FamilyId::T1_C2;
    std::map<std::string, Rational> params;
};

struct AdmissibilityReport {
    bool admissible = true;
    std::vector<std::string> conditions;  // every condition checked, in order
    std::string violated;                 // first failing condition, empty if admissible
};
// square-root-free predicates only; nonsingularity is checked separately by instantiate
AdmissibilityReport check_admissibility(const FamilySpec& spec);

// the form without any checks; the field is Q except for T1_G48 (Q(zeta12))
TernaryForm family_form(const FamilySpec& spec);

// throws InadmissibleParameters naming the violated condition, or SingularInstance.
// The "not below" condition of the C2 row (no larger automorphism group) is not checked.
PlaneCurve instantiate(const FamilySpec& spec);

// catalog involutions of the family's stratum that have rational entries and preserve the form
std::vector<ProjectiveTransformation> rational_bielliptic_involutions(const FamilySpec& spec);

}  // namespace bq
