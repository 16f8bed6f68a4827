#include "bq/families.hpp"

#include "bq/error.hpp"

namespace bq {

namespace {

using F = FamilyId;

const std::map<FamilyId, FamilyInfo>& infos() {
    static const std::map<FamilyId, FamilyInfo> m{
        {F::T1_C2, {F::T1_C2, "C2", {}, {"p0", "p1", "p2", "q0", "q1", "q2", "q3", "q4"},
                    "Z^4 + Z^2*(p0*X^2 + p1*X*Y + p2*Y^2) + q0*X^4 + q1*X^3*Y + q2*X^2*Y^2 + q3*X*Y^3 + q4*Y^4"}},
        {F::T1_C2xC2, {F::T1_C2xC2, "C2xC2", {"a", "b", "c"}, {}, "Z^4 + Z^2*(b*Y^2 + c*X^2) + X^4 + Y^4 + a*X^2*Y^2"}},
        {F::T1_C6, {F::T1_C6, "C6", {"a"}, {}, "Z^4 + a*Z^2*Y^2 + X^3*Y + Y^4"}},
        {F::T1_S3, {F::T1_S3, "S3", {"a", "b"}, {}, "(X^3 + Y^3)*Z + X^2*Y^2 + a*X*Y*Z^2 + b*Z^4"}},
        {F::T1_D4, {F::T1_D4, "D4", {"a", "b"}, {}, "Z^4 + b*X*Y*Z^2 + X^4 + Y^4 + a*X^2*Y^2"}},
        {F::T1_G16, {F::T1_G16, "GAP(16,13)", {"a"}, {}, "Z^4 + X^4 + Y^4 + a*X^2*Y^2"}},
        {F::T1_S4, {F::T1_S4, "S4", {"a"}, {}, "Z^4 + a*Z^2*(Y^2 + X^2) + X^4 + Y^4 + a*X^2*Y^2"}},
        {F::T1_G48, {F::T1_G48, "GAP(48,33)", {}, {}, "Z^4 + X^4 + Y^4 + (4*zeta3 + 2)*X^2*Y^2"}},
        {F::T1_G96, {F::T1_G96, "GAP(96,64)", {}, {}, "Z^4 + X^4 + Y^4"}},
        {F::T1_KLEIN, {F::T1_KLEIN, "PSL2(F7)", {}, {}, "X^3*Y + Y^3*Z + Z^3*X"}},
        {F::Z6_REP, {F::Z6_REP, "C6", {"a"}, {}, "a*Z^4 + Y^2*(Y^2 + a*Z^2) + X^3*Y"}},
        {F::Z6_TWIST, {F::Z6_TWIST, "C6", {"A", "n", "m"}, {}, "A*m^2*Z^4 + m*Y^2*Z^2 + n*X^3*Y + Y^4"}},
        {F::G16_REP, {F::G16_REP, "GAP(16,13)", {"A"}, {}, "A*X^4 + Y^4 + Z^4 + X^2*Y^2"}},
        {F::G16_DIAG_TWIST, {F::G16_DIAG_TWIST, "GAP(16,13)", {"A", "m", "q"}, {}, "m*A*X^4 + q^2*m*Y^4 + Z^4 + q*m*X^2*Y^2"}},
        {F::G16_NONDIAG_TWIST, {F::G16_NONDIAG_TWIST, "GAP(16,13)", {"a", "b", "m", "q"}, {"A"},
                                "2*a*X^4 + 8*b*m*X^3*Y + 12*a*m*X^2*Y^2 + 8*b*m^2*X*Y^3 + 2*a*m^2*Y^4 + q*(X^2 - m*Y^2)^2 + Z^4"}},
        {F::THM4, {F::THM4, "GAP(16,13)", {"m", "q"}, {},
                   "-q*X^4 + 4*q*m*X^3*Y - 6*q*m*X^2*Y^2 + 4*q*m^2*X*Y^3 - q*m^2*Y^4 + q*(X^2 - m*Y^2)^2 + Z^4"}},
    };
    return m;
}

const std::map<FamilyId, std::string>& names() {
    static const std::map<FamilyId, std::string> m{
        {F::T1_C2, "T1_C2"}, {F::T1_C2xC2, "T1_C2xC2"}, {F::T1_C6, "T1_C6"}, {F::T1_S3, "T1_S3"},
        {F::T1_D4, "T1_D4"}, {F::T1_G16, "T1_G16"}, {F::T1_S4, "T1_S4"}, {F::T1_G48, "T1_G48"},
        {F::T1_G96, "T1_G96"}, {F::T1_KLEIN, "T1_KLEIN"}, {F::Z6_REP, "Z6_REP"}, {F::Z6_TWIST, "Z6_TWIST"},
        {F::G16_REP, "G16_REP"}, {F::G16_DIAG_TWIST, "G16_DIAG_TWIST"}, {F::G16_NONDIAG_TWIST, "G16_NONDIAG_TWIST"},
        {F::THM4, "THM4"}};
    return m;
}

// resolved parameters: required ones present, optional ones defaulted, unknown ones rejected
std::map<std::string, Rational> resolve(const FamilySpec& spec) {
    const FamilyInfo& info = family_info(spec.family_id);
    std::map<std::string, Rational> p;
    for (const auto& [k, v] : spec.params) {
        bool known = std::find(info.params.begin(), info.params.end(), k) != info.params.end() ||
                     std::find(info.optional_params.begin(), info.optional_params.end(), k) != info.optional_params.end();
        if (!known) throw Error(ErrorKind::InadmissibleParameters, "unknown parameter '" + k + "' for " + family_name(spec.family_id));
        p[k] = v;
    }
    for (const auto& k : info.params)
        if (!p.count(k)) throw Error(ErrorKind::InadmissibleParameters, "missing parameter '" + k + "' for " + family_name(spec.family_id));
    for (const auto& k : info.optional_params)
        if (!p.count(k)) p[k] = Rational(0);
    // the nondiagonal twist determines A from the other parameters when it is not given
    if (spec.family_id == F::G16_NONDIAG_TWIST && !spec.params.count("A")) {
        const Rational& q = p["q"];
        if (q != 0) p["A"] = Rational(p["a"] * p["a"] - p["b"] * p["b"] * p["m"]) / Rational(q * q * q * q);
    }
    return p;
}

struct Terms {
    NumberField K;
    PolyTerms t;
    void add(const NFElement& c, int i, int j, int k) {
        Exponent e{i, j, k};
        auto it = t.find(e);
        if (it == t.end())
            t.emplace(e, c);
        else
            it->second = it->second + c;
    }
    void add(const Rational& c, int i, int j, int k) { add(NFElement(K, c), i, j, k); }
    TernaryForm form(int d) const { return TernaryForm(K, d, t); }
};

}  // namespace

const std::vector<FamilyId>& all_families() {
    static const std::vector<FamilyId> v{F::T1_C2, F::T1_C2xC2, F::T1_C6, F::T1_S3, F::T1_D4, F::T1_G16, F::T1_S4, F::T1_G48,
                                         F::T1_G96, F::T1_KLEIN, F::Z6_REP, F::Z6_TWIST, F::G16_REP, F::G16_DIAG_TWIST,
                                         F::G16_NONDIAG_TWIST, F::THM4};
    return v;
}

std::string family_name(FamilyId id) { return names().at(id); }

FamilyId parse_family_id(const std::string& s) {
    for (const auto& [id, n] : names())
        if (n == s) return id;
    throw Error(ErrorKind::UnknownLabel, "unknown family id '" + s + "'");
}

const FamilyInfo& family_info(FamilyId id) { return infos().at(id); }

AdmissibilityReport check_admissibility(const FamilySpec& spec) {
    auto p = resolve(spec);
    AdmissibilityReport rep;
    auto need = [&](bool ok, const std::string& cond) {
        rep.conditions.push_back(cond);
        if (!ok && rep.admissible) {
            rep.admissible = false;
            rep.violated = cond;
        }
    };
    auto P = [&](const char* k) -> Rational { return p.at(k); };
    switch (spec.family_id) {
        case F::T1_C2:
            need(P("p0") != 0 || P("p1") != 0 || P("p2") != 0, "L2 != 0");
            break;
        case F::T1_C2xC2:
            need(P("a") != P("b") && P("a") != -P("b"), "a != +-b");
            need(P("b") != P("c"), "b != c");
            need(P("c") != P("a") && P("c") != -P("a"), "c != +-a");
            break;
        case F::T1_C6:
            need(P("a") != 0, "a != 0");
            break;
        case F::T1_S3:
            need(P("a") != P("b"), "a != b");
            need(P("a") * P("b") != 0, "a*b != 0");
            break;
        case F::T1_D4: {
            Rational a = P("a"), b = P("b");
            need(b != 0, "b != 0");
            need(Rational(b * b * (1 - a)) != Rational(4 * a * a), "b^2*(1 - a) != 4*a^2");
            break;
        }
        case F::T1_G16: {
            Rational a = P("a"), a2 = a * a;
            need(a != 0, "a != 0");
            need(a2 != 4 && a2 != 36 && a2 != -12, "a^2 not in {4, 36, -12}");
            break;
        }
        case F::T1_S4: {
            Rational a = P("a");
            need(a != 0, "a != 0");
            need(Rational(a * a + a + 2) != 0, "a^2 + a + 2 != 0");
            break;
        }
        case F::T1_G48:
        case F::T1_G96:
        case F::T1_KLEIN:
            break;
        case F::Z6_REP:
            need(P("a") != 0 && P("a") != 4, "a not in {0, 4}");
            break;
        case F::Z6_TWIST:
            need(P("A") != 0 && P("A") != Rational(1, 4), "A not in {0, 1/4}");
            need(P("n") != 0, "n != 0");
            need(P("m") != 0, "m != 0");
            break;
        case F::G16_REP:
        case F::G16_DIAG_TWIST: {
            Rational A = P("A");
            need(A != 0, "A != 0");
            bool ok = true;
            for (Rational bad : {Rational(1, 4), Rational(1, 36), Rational(1, 12)})
                if (A == bad || A == -bad) ok = false;
            need(ok, "+-A not in {1/4, 1/36, 1/12}");
            if (spec.family_id == F::G16_DIAG_TWIST) {
                need(P("m") != 0, "m != 0");
                need(P("q") != 0, "q != 0");
            }
            break;
        }
        case F::G16_NONDIAG_TWIST: {
            Rational a = P("a"), b = P("b"), m = P("m"), q = P("q"), A = P("A");
            need(m != 0, "m != 0");
            need(Rational(a * a - b * b * m) == Rational(q * q * q * q * A), "a^2 - b^2*m = q^4*A");
            need(!is_rational_square(m), "m not a square");
            need(A != 0 && !is_rational_fourth_power(A), "A not a fourth power");
            break;
        }
        case F::THM4: {
            Rational m = P("m"), q = P("q");
            need(q != 0 && !is_rational_square(q), "q not a square");
            need(m != 0 && !is_rational_square(m), "m not a square");
            Rational A = Rational(1 - m) / Rational(4 * q * q);
            need(q != 0 && A != 0 && !is_rational_fourth_power(A), "A = (1 - m)/(4*q^2) not a fourth power");
            break;
        }
    }
    return rep;
}

TernaryForm family_form(const FamilySpec& spec) {
    auto p = resolve(spec);
    auto P = [&](const char* k) -> Rational { return p.at(k); };
    Terms T{NumberField::rationals(), {}};
    switch (spec.family_id) {
        case F::T1_C2:
            T.add(1, 0, 0, 4);
            T.add(P("p0"), 2, 0, 2);
            T.add(P("p1"), 1, 1, 2);
            T.add(P("p2"), 0, 2, 2);
            for (int i = 0; i <= 4; ++i) T.add(P(("q" + std::to_string(i)).c_str()), 4 - i, i, 0);
            break;
        case F::T1_C2xC2:
            T.add(1, 0, 0, 4);
            T.add(P("b"), 0, 2, 2);
            T.add(P("c"), 2, 0, 2);
            T.add(1, 4, 0, 0);
            T.add(1, 0, 4, 0);
            T.add(P("a"), 2, 2, 0);
            break;
        case F::T1_C6:
            T.add(1, 0, 0, 4);
            T.add(P("a"), 0, 2, 2);
            T.add(1, 3, 1, 0);
            T.add(1, 0, 4, 0);
            break;
        case F::T1_S3:
            T.add(1, 3, 0, 1);
            T.add(1, 0, 3, 1);
            T.add(1, 2, 2, 0);
            T.add(P("a"), 1, 1, 2);
            T.add(P("b"), 0, 0, 4);
            break;
        case F::T1_D4:
            T.add(1, 0, 0, 4);
            T.add(P("b"), 1, 1, 2);
            T.add(1, 4, 0, 0);
            T.add(1, 0, 4, 0);
            T.add(P("a"), 2, 2, 0);
            break;
        case F::T1_G16:
        case F::T1_G96:
        case F::T1_G48:
            if (spec.family_id == F::T1_G48) {
                T.K = NumberField::cyclotomic(12);
                T.add(NFElement::generator(T.K).pow(4) * NFElement(T.K, 4) + NFElement(T.K, 2), 2, 2, 0);
            } else if (spec.family_id == F::T1_G16) {
                T.add(P("a"), 2, 2, 0);
            }
            T.add(1, 0, 0, 4);
            T.add(1, 4, 0, 0);
            T.add(1, 0, 4, 0);
            break;
        case F::T1_S4:
            T.add(1, 0, 0, 4);
            T.add(P("a"), 0, 2, 2);
            T.add(P("a"), 2, 0, 2);
            T.add(1, 4, 0, 0);
            T.add(1, 0, 4, 0);
            T.add(P("a"), 2, 2, 0);
            break;
        case F::T1_KLEIN:
            T.add(1, 3, 1, 0);
            T.add(1, 0, 3, 1);
            T.add(1, 1, 0, 3);
            break;
        case F::Z6_REP:
            T.add(P("a"), 0, 0, 4);
            T.add(1, 0, 4, 0);
            T.add(P("a"), 0, 2, 2);
            T.add(1, 3, 1, 0);
            break;
        case F::Z6_TWIST: {
            Rational A = P("A"), n = P("n"), m = P("m");
            T.add(Rational(A * m * m), 0, 0, 4);
            T.add(m, 0, 2, 2);
            T.add(n, 3, 1, 0);
            T.add(1, 0, 4, 0);
            break;
        }
        case F::G16_REP:
            T.add(P("A"), 4, 0, 0);
            T.add(1, 0, 4, 0);
            T.add(1, 0, 0, 4);
            T.add(1, 2, 2, 0);
            break;
        case F::G16_DIAG_TWIST: {
            Rational A = P("A"), m = P("m"), q = P("q");
            T.add(Rational(m * A), 4, 0, 0);
            T.add(Rational(q * q * m), 0, 4, 0);
            T.add(1, 0, 0, 4);
            T.add(Rational(q * m), 2, 2, 0);
            break;
        }
        case F::G16_NONDIAG_TWIST:
        case F::THM4: {
            Rational a, b, m = P("m"), q = P("q");
            if (spec.family_id == F::THM4) {
                a = -q / 2;
                b = q / 2;
            } else {
                a = P("a");
                b = P("b");
            }
            T.add(Rational(2 * a), 4, 0, 0);
            T.add(Rational(8 * b * m), 3, 1, 0);
            T.add(Rational(12 * a * m), 2, 2, 0);
            T.add(Rational(8 * b * m * m), 1, 3, 0);
            T.add(Rational(2 * a * m * m), 0, 4, 0);
            // q(X^2 - mY^2)^2
            T.add(q, 4, 0, 0);
            T.add(Rational(-2 * q * m), 2, 2, 0);
            T.add(Rational(q * m * m), 0, 4, 0);
            T.add(1, 0, 0, 4);
            break;
        }
    }
    return T.form(4);
}

PlaneCurve instantiate(const FamilySpec& spec) {
    auto rep = check_admissibility(spec);
    if (!rep.admissible)
        throw Error(ErrorKind::InadmissibleParameters, family_name(spec.family_id) + ": violated condition " + rep.violated);
    return PlaneCurve::make(family_form(spec));
}

std::vector<ProjectiveTransformation> rational_bielliptic_involutions(const FamilySpec& spec) {
    switch (spec.family_id) {
        case F::Z6_REP:
        case F::Z6_TWIST:
        case F::G16_REP:
        case F::G16_DIAG_TWIST:
        case F::G16_NONDIAG_TWIST:
        case F::THM4:
            break;
        default:
            throw Error(ErrorKind::InadmissibleParameters, "rational involutions are only listed for the twist families");
    }
    PlaneCurve C = instantiate(spec);
    std::vector<ProjectiveTransformation> out;
    for (const auto& M : catalog(family_info(spec.family_id).stratum).involutions) {
        if (!M.is_rational()) continue;
        ProjectiveTransformation R = M.coerce(NumberField::rationals());
        if (is_invariant(C.form, R).invariant) out.push_back(R);
    }
    return out;
}

}  // namespace bq
