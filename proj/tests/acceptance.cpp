// Acceptance run: one PASS/FAIL line per criterion. Each criterion checks the library
// against an oracle written here (point substitution, a separate group law and j formula,
// a brute-force fiber enumerator) as well as against the closed forms it should reproduce.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "bq/arith.hpp"
#include "bq/error.hpp"
#include "bq/factor.hpp"
#include "bq/families.hpp"
#include "bq/identity.hpp"
#include "bq/involutions.hpp"
#include "bq/quadratic_points.hpp"

using namespace bq;

namespace {

using Rng = std::mt19937_64;

NumberField Qf() { return NumberField::rationals(); }
NFElement q(const Rational& r) { return NFElement(Qf(), r); }

Rational canon(long n, long d) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

Rational small_rational(Rng& g, int span = 9, int dmax = 4) {
    std::uniform_int_distribution<int> num(-span, span), den(1, dmax);
    int n = num(g), d = den(g);
    return canon(n, d);
}

// ---- oracles ----

std::array<NFElement, 3> mat_apply(const Matrix3& m, const std::array<NFElement, 3>& p) {
    std::array<NFElement, 3> out;
    for (int i = 0; i < 3; ++i) out[i] = m[3 * i] * p[0] + m[3 * i + 1] * p[1] + m[3 * i + 2] * p[2];
    return out;
}

std::array<NFElement, 3> random_point(Rng& g, const NumberField& K) {
    std::uniform_int_distribution<int> c(-20, 20);
    return {NFElement(K, Rational(c(g))), NFElement(K, Rational(c(g))), NFElement(K, Rational(c(g)))};
}

// F(Mp) = lambda G(p) at 12 random points, one lambda != 0 for all of them
std::optional<NFElement> substitution_scalar(const TernaryForm& F, const Matrix3& M, const TernaryForm& G, Rng& g) {
    NumberField K = common_field(F.field(), common_field(G.field(), mat_field(M)));
    TernaryForm FK = F.coerce(K), GK = G.coerce(K);
    Matrix3 MK;
    for (int i = 0; i < 9; ++i) MK[i] = M[i].coerce(K);
    std::optional<NFElement> lambda;
    for (int i = 0; i < 12; ++i) {
        auto p = random_point(g, K);
        NFElement lhs = FK.eval(mat_apply(MK, p)), rhs = GK.eval(p);
        if (rhs.is_zero()) {
            if (!lhs.is_zero()) return std::nullopt;
            continue;
        }
        NFElement l = lhs / rhs;
        if (l.is_zero() || (lambda && *lambda != l)) return std::nullopt;
        lambda = l;
    }
    return lambda;
}

bool is_scalar_matrix(const Matrix3& m) {
    for (int i = 0; i < 9; ++i)
        if (i % 4 != 0 && !m[i].is_zero()) return false;
    return !m[0].is_zero() && m[0] == m[4] && m[4] == m[8];
}

struct Pt {
    bool inf = true;
    Rational x, y;
};

// short Weierstrass group law, kept separate from the library
Pt ec_add(const Rational& A, const Pt& P, const Pt& Q) {
    if (P.inf) return Q;
    if (Q.inf) return P;
    Rational l;
    if (P.x == Q.x) {
        if (P.y != Q.y || P.y == 0) return Pt{};
        l = (3 * P.x * P.x + A) / (2 * P.y);
    } else {
        l = (Q.y - P.y) / (Q.x - P.x);
    }
    Rational x3 = l * l - P.x - Q.x;
    Rational y3 = l * (P.x - x3) - P.y;
    return Pt{false, x3, y3};
}

// smallest n <= 12 with nP = O, or 0
int order_up_to_12(const Rational& A, const Pt& P) {
    Pt R = P;
    for (int n = 1; n <= 12; ++n) {
        if (R.inf) return n;
        R = ec_add(A, R, P);
    }
    return 0;
}

Rational j_of(const Rational& a1, const Rational& a2, const Rational& a3, const Rational& a4, const Rational& a6) {
    Rational b2 = a1 * a1 + 4 * a2, b4 = 2 * a4 + a1 * a3, b6 = a3 * a3 + 4 * a6;
    Rational b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    Rational c4 = b2 * b2 - 24 * b4;
    Rational disc = -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
    if (disc == 0) throw std::runtime_error("singular");
    return c4 * c4 * c4 / disc;
}

Rational j_of(const WeierstrassCurve& E) { return j_of(E.a1, E.a2, E.a3, E.a4, E.a6); }

std::string key_of(const ProjPoint& P) { return point_key(P.normalized()); }

NFElement conj(const NFElement& x) {
    std::vector<Rational> c = x.coeffs();
    if (c.size() > 1) c[1] = -c[1];
    return NFElement(x.field(), c);
}

// every rational and quadratic point on the lines qX = pZ with |p|, q <= H, and (0:1:0)
std::set<std::string> vertical_oracle(const TernaryForm& F, long H) {
    std::set<std::string> out;
    int d = F.degree();
    bool infinity_on = false;
    for (long qq = 1; qq <= H; ++qq)
        for (long p = -H; p <= H; ++p) {
            if (std::gcd(p, qq) != 1) continue;
            std::vector<Rational> c(d + 1, Rational(0));
            for (const auto& [e, coef] : F.terms()) {
                Rational v = coef.to_rational();
                for (int i = 0; i < e[0]; ++i) v *= p;
                for (int i = 0; i < e[2]; ++i) v *= qq;
                c[e[1]] += v;
            }
            if (c[d] == 0) infinity_on = true;
            UniPoly g(c);
            if (g.degree() < 1) continue;
            for (const auto& f : factor_low_degree(g).factors) {
                const UniPoly& h = f.poly;
                if (h.degree() == 1) {
                    Rational y = -h.coeff(0) / h.coeff(1);
                    out.insert("R" + key_of(ProjPoint(q(Rational(p)), q(y), q(Rational(qq)))));
                } else if (h.degree() == 2) {
                    Rational disc = h.coeff(1) * h.coeff(1) - 4 * h.coeff(0) * h.coeff(2);
                    Integer D = squarefree_part(disc).core;
                    Rational k = *rational_sqrt(Rational(disc / Rational(D)));
                    NumberField K = NumberField::quadratic(D);
                    NFElement y = (NFElement(K, -h.coeff(1)) + NFElement::generator(K) * NFElement(K, k)) / NFElement(K, 2 * h.coeff(2));
                    ProjPoint P(NFElement(K, Rational(p)), y, NFElement(K, Rational(qq)));
                    ProjPoint Pc(NFElement(K, Rational(p)), conj(y), NFElement(K, Rational(qq)));
                    out.insert("Q" + std::min(key_of(P), key_of(Pc)));
                }
            }
        }
    if (infinity_on) out.insert("R" + key_of(ProjPoint(q(0), q(1), q(0))));
    return out;
}

bool on_vertical(const ProjPoint& P, long H) {
    const auto& c = P.coords;
    if (c[2].is_zero()) return c[0].is_zero();
    NFElement r = c[0] / c[2];
    if (!r.is_rational()) return false;
    Rational x = r.to_rational();
    return abs(x.get_num()) <= H && x.get_den() <= H;
}

std::set<std::string> vertical_part(const QuadraticFieldReport& rep, long H) {
    std::set<std::string> out;
    for (const auto& p : rep.rational_points)
        if (on_vertical(p, H)) out.insert("R" + key_of(p));
    for (const auto& qp : rep.quadratic_points)
        if (on_vertical(qp.point, H)) out.insert("Q" + std::min(key_of(qp.point), key_of(qp.conjugate)));
    return out;
}

// ---- criteria ----

struct Outcome {
    bool ok = true;
    std::ostringstream detail;
    void require(bool cond, const std::string& what) {
        if (!cond) {
            if (ok) detail << "first failure: " << what << "; ";
            ok = false;
        }
    }
};

void c1_table1(Outcome& o) {
    Rng g(11);
    int samples = 0, checks = 0;
    for (FamilyId id : all_families()) {
        if (family_name(id).rfind("T1_", 0) != 0) continue;
        const FamilyInfo& info = family_info(id);
        auto cat = catalog(info.stratum);
        bool fixed = info.params.empty() && info.optional_params.empty();
        int made = 0;
        for (int attempt = 0; attempt < 500 && made < 3; ++attempt) {
            FamilySpec s{id, {}};
            for (const auto& p : info.params) s.params[p] = small_rational(g);
            for (const auto& p : info.optional_params) s.params[p] = small_rational(g);
            if (!check_admissibility(s).admissible) continue;
            PlaneCurve C;
            try {
                C = instantiate(s);
            } catch (const Error& e) {
                if (e.kind() == ErrorKind::SingularInstance) continue;
                throw;
            }
            ++made;
            ++samples;
            for (size_t i = 0; i < cat.involutions.size(); ++i) {
                auto r = is_invariant(C.form, cat.involutions[i]);
                auto lam = substitution_scalar(C.form, cat.involutions[i].matrix(), C.form, g);
                o.require(r.invariant && lam && *r.scalar == *lam, family_name(id) + " under " + cat.names[i]);
                ++checks;
            }
            if (fixed) made = 3;
        }
        o.require(made == 3, family_name(id) + ": not enough admissible samples");
    }
    o.detail << samples << " members, " << checks << " invariance checks";
}

void c2_klein(Outcome& o) {
    auto kc = klein_construction();
    NumberField K = NumberField::cyclotomic(7);
    TernaryForm F = TernaryForm::parse("X^3*Y + Y^3*Z + Z^3*X", K);
    PlaneCurve C = PlaneCurve::unchecked(F);
    std::set<std::string> keys;
    Rng g(14);
    for (const auto& M : kc.involutions) {
        keys.insert(M.key());
        o.require(!is_scalar_matrix(M.matrix()) && is_scalar_matrix(mat_mul(M.matrix(), M.matrix())), "order 2");
        o.require(substitution_scalar(F, M.matrix(), F, g).has_value(), "invariance at random points");
        o.require(fixed_locus(C, M).total_count == 4, "four fixed points");
    }
    o.require(keys.size() == 21 && kc.involutions.size() == 21, "21 distinct involutions");
    o.detail << keys.size() << " distinct involutions over Q(zeta7), each invariant with 4 fixed points";
}

TernaryForm s3_model(const Rational& a, const Rational& b) {
    std::ostringstream s;
    s << "Z^4 - 2*X^2*Z^2 + 16*X*Y*Z^2 - 2*(2*(" << a.get_str() << ") + 7)*Y^2*Z^2 + X^4 + 2*(2*(" << a.get_str()
      << ") - 3)*X^2*Y^2 - 8*((" << a.get_str() << ") - 1)*X*Y^3 + (4*(" << a.get_str() << ") + 16*(" << b.get_str()
      << ") - 3)*Y^4";
    return TernaryForm::parse(s.str());
}

void c3_s3(Outcome& o) {
    Rng g(12);
    Matrix3 m;
    const long e[9] = {1, -1, 1, 1, -1, -1, 0, 2, 0};
    for (int i = 0; i < 9; ++i) m[i] = q(Rational(e[i]));
    ProjectiveTransformation M(m);
    std::set<std::string> scalars;
    for (int i = 0; i < 10; ++i) {
        Rational a = small_rational(g), b = small_rational(g);
        std::ostringstream s;
        s << "(X^3 + Y^3)*Z + X^2*Y^2 + (" << a.get_str() << ")*X*Y*Z^2 + (" << b.get_str() << ")*Z^4";
        TernaryForm G = TernaryForm::parse(s.str());
        TernaryForm lhs = apply_transformation(G, M), rhs = s3_model(a, b);
        auto lam = substitution_scalar(G, m, rhs, g);
        o.require(lam && lam->is_rational() && lhs == rhs.scaled(*lam), "a = " + a.get_str() + ", b = " + b.get_str());
        if (lam) scalars.insert(lam->to_string());
    }
    o.detail << "scalar(s):";
    for (const auto& s : scalars) o.detail << " " << s;
}

void c4_thm1(Outcome& o) {
    for (const char* s : {"1", "-1", "2", "-2", "3", "5", "7/2", "-5/3"}) {
        Rational a = parse_rational(s);
        Rational B = a * a * a * a / 4 - a * a * a;
        auto r = chain_thm1(a);
        o.require(r.E == WeierstrassCurve::short_form(0, B), std::string("chain output at a = ") + s);
        Pt P{false, a, Rational(a * a / 2)};
        o.require(P.y * P.y == P.x * P.x * P.x + B, std::string("(a, a^2/2) on E at a = ") + s);
        int ord = order_up_to_12(0, P);
        bool cert = true;
        try {
            non_torsion_certificate(r.E, ECPoint::affine(P.x, P.y));
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::TorsionPoint) throw;
            cert = false;
        }
        o.require(cert == (ord == 0), std::string("library and oracle disagree at a = ") + s);
        o.require(ord == 0, std::string("a = ") + s + ": P has order " + std::to_string(ord));
    }
}

void c5_dan(Outcome& o) {
    Rng g(16);
    int done = 0;
    for (int guard = 0; done < 10 && guard < 1000; ++guard) {
        Rational A = small_rational(g), n = small_rational(g), m1 = small_rational(g), m2 = small_rational(g);
        if (A == 0 || n == 0 || A == Rational(1, 4) || m1 == 0 || m2 == 0 || m1 == m2) continue;
        ++done;
        Rational B = n * n * A * A * (1 - 4 * A) / 4;
        o.require(chain_DAn(A, n).E == WeierstrassCurve::short_form(0, B), "chain output");
        std::set<Rational> js;
        for (const Rational& m : {Rational(1), m1, m2}) {
            js.insert(j_of(chain_DAn(A, n, m).E));
            TernaryForm F = family_form(FamilySpec{FamilyId::Z6_TWIST, {{"A", A}, {"n", n}, {"m", m}}});
            js.insert(jacobian_j(quotient_to_binary_quartic(F)).to_rational());
        }
        o.require(js.size() == 1 && *js.begin() == 0, "j independent of m");
    }
    o.require(done == 10, "samples");
    o.detail << done << " samples, j = 0 for every m";
}

void c6_thm2(Outcome& o) {
    Rng g(17);
    std::uniform_int_distribution<int> num(-15, 15), den(1, 15);
    std::set<Rational> used;
    WeierstrassCurve E27 = WeierstrassCurve::short_form(0, -27);
    for (int guard = 0; used.size() < 10 && guard < 10000; ++guard) {
        int p = num(g), d = den(g);
        if (p % 2 == 0 || d % 2 == 0 || std::gcd(p, d) != 1) continue;
        Rational t = canon(p, d);
        if (!used.insert(t).second) continue;
        Rational A = (108 * t * t + 1) / 4, n = 4 / (t * (108 * t * t + 1));
        o.require(chain_DAn(A, n).E == E27, "t = " + t.get_str());
    }
    const long H = 1000;
    std::vector<ECPoint> brute;
    for (long d = 1; d * d <= H; ++d)
        for (long p = -H; p <= H; ++p) {
            if (std::gcd(p, d) != 1) continue;
            Rational x(p, d * d);
            auto y = rational_sqrt(Rational(x * x * x - 27));
            if (y) brute.push_back(ECPoint::affine(x, *y));
        }
    auto found = search_points(E27, H);
    o.require(brute.size() == 1 && brute[0] == ECPoint::affine(3, 0), "oracle finds only (3, 0)");
    o.require(found == brute, "search agrees with oracle");
    o.detail << used.size() << " values of t; height " << H << " points: (3, 0) and O only";
}

Rational lem48_formula(const Rational& a) {
    Rational a2 = a * a;
    return (16 * a2 * a2 * a2 + 576 * a2 * a2 + 6912 * a2 + 27648) / ((a2 - 4) * (a2 - 4));
}

void c7_lem48(Outcome& o) {
    // both sides are rational of degree <= 6 over <= 6, so 25 agreeing points prove the identity
    int agree = 0;
    for (long k = 1; agree < 25 && k < 200; ++k) {
        Rational a = canon(k % 2 ? k : -k, 3);
        if (a * a == 4) continue;
        Rational j;
        try {
            j = j_of(0, Rational(-a), 0, -4, Rational(4 * a));
        } catch (const std::runtime_error&) {
            continue;
        }
        o.require(j == lem48_formula(a), "j at a = " + a.get_str());
        ++agree;
    }
    o.require(agree == 25, "25 samples");
    auto lib = [](const Rational& a) { return j_invariant(WeierstrassCurve(0, Rational(-a), 0, -4, Rational(4 * a))); };
    auto rhs = [](const Rational& a) {
        if (a * a == 4) throw Error(ErrorKind::PoleEncountered, "a^2 = 4");
        return lem48_formula(a);
    };
    o.require(poly_identity_check(lib, rhs, 12, 25), "library identity check");

    auto cat = catalog("GAP(16,13)");
    Rng g(18);
    int done = 0;
    for (int guard = 0; done < 5 && guard < 1000; ++guard) {
        Rational a = small_rational(g);
        FamilySpec s{FamilyId::T1_G16, {{"a", a}}};
        if (!check_admissibility(s).admissible) continue;
        ++done;
        TernaryForm F = family_form(s).coerce(cat.field);
        for (size_t i = 0; i < cat.involutions.size(); ++i) {
            NFElement j = quotient_via_conjugation(F, cat.involutions[i]).jacobian_j;
            Rational expect = i == 0 ? lem48_formula(a) : Rational(1728);
            o.require(j == NFElement(cat.field, expect), "a = " + a.get_str() + ", " + cat.names[i]);
        }
    }
    o.detail << "identity on 25 samples; " << done << " members x " << cat.involutions.size() << " quotients";
}

void c8_thm3(Outcome& o) {
    Rng g(19);
    int done = 0;
    for (int guard = 0; done < 10 && guard < 1000; ++guard) {
        Rational s = small_rational(g), m = small_rational(g);
        if (s == 0 || m == 0) continue;
        ++done;
        Rational A = Rational(1, 4) - s * s;
        GenusOneQuarticModel mod;
        mod.field = Qf();
        mod.q = {q(Rational(s * s)), q(0), q(0), q(0), q(Rational(-1 / m))};
        auto r = quartic_to_weierstrass(mod, ReductionHint::point(0, s));
        WeierstrassCurve expect = WeierstrassCurve::short_form(Rational((1 - 4 * A) / m), 0);
        o.require(r.E == expect && j_of(r.E) == 1728, "A = " + A.get_str() + ", m = " + m.get_str());
    }
    o.detail << done << " samples";
}

void c9_twist(Outcome& o) {
    Rng g(20);
    std::uniform_int_distribution<int> d(-12, 12);
    std::set<std::pair<int, int>> used;
    for (int guard = 0; used.size() < 10 && guard < 10000; ++guard) {
        int m = d(g), qq = d(g);
        if (m == 0 || qq == 0 || m == 1) continue;
        Integer D = m * qq;
        if (D == 1 || squarefree_part(D).core != D) continue;
        if (!used.insert({m, qq}).second) continue;
        WeierstrassCurve E(0, 8, 0, 16 * m, 0);
        WeierstrassCurve tw = quadratic_twist(E, D);
        WeierstrassCurve expect(0, 8 * qq * m, 0, Rational(16 * qq * qq) * Rational(m * m * m), 0);
        o.require(tw == expect && j_of(tw) == j_of(E), "m = " + std::to_string(m) + ", q = " + std::to_string(qq));
    }
    o.detail << used.size() << " samples";
}

void c10_thm4(Outcome& o) {
    Rng g(21);
    std::uniform_int_distribution<int> d(-9, 9);
    std::set<std::pair<int, int>> used;
    auto z = ProjectiveTransformation::diag(q(1), q(1), q(-1));
    for (int guard = 0; used.size() < 5 && guard < 1000; ++guard) {
        int m = d(g), qq = d(g);
        FamilySpec s{FamilyId::THM4, {{"m", Rational(m)}, {"q", Rational(qq)}}};
        if (m == 0 || qq == 0 || used.count({m, qq}) || !check_admissibility(s).admissible) continue;
        PlaneCurve C;
        try {
            C = instantiate(s);
        } catch (const Error&) {
            continue;
        }
        used.insert({m, qq});
        Rational expect = j_of(0, Rational(8 * qq * m), 0, Rational(16 * qq * qq * m * m * m), 0);
        auto r = quotient_via_conjugation(C.form, z);
        o.require(r.jacobian_j == q(expect), "m = " + std::to_string(m) + ", q = " + std::to_string(qq));
    }
    o.require(used.size() == 5, "samples");
    o.detail << used.size() << " samples";
}

void c11_pullback(Outcome& o) {
    TernaryForm F = TernaryForm::parse("Z^4 + Y^2*Z^2 + X^3*Y + Y^4");
    auto pts = pullback_quadratic_points(Rational(1), 8);
    o.require(pts.size() == 8, "eight multiples");
    std::set<Integer> Ds;
    for (const auto& p : pts) {
        if (p.rational) {
            o.require(F.eval(p.rational_point.coords).is_zero(), "rational pullback on curve");
            continue;
        }
        Integer D = p.quadratic.D;
        NumberField K = NumberField::quadratic(D);
        const auto& c = p.quadratic.point.coords;
        o.require(c[0].field() == K, "point field is Q(sqrt D)");
        TernaryForm FK = F.coerce(K);
        o.require(FK.eval(c).is_zero(), "n = " + std::to_string(p.n) + " on curve");
        o.require(FK.eval({conj(c[0]), conj(c[1]), conj(c[2])}).is_zero(), "conjugate on curve");
        Ds.insert(D);
    }
    o.require(pts.size() > 1 && !pts[1].rational && pts[1].quadratic.D == -19, "n = 2 gives D = -19");
    o.require(Ds.size() >= 3, "at least three fields");
    o.detail << "D:";
    for (const auto& D : Ds) o.detail << " " << D.get_str();
}

void c12_oracle(Outcome& o) {
    Rng g(20261015);
    std::uniform_int_distribution<int> coef(-3, 3);
    const long H = 15;
    size_t total = 0;
    for (int trial = 0; trial < 5; ++trial) {
        PolyTerms t;
        for (int i = 0; i <= 4; ++i)
            for (int j = 0; i + j <= 4; ++j) {
                int c = coef(g);
                if (c) t[{i, j, 4 - i - j}] = q(Rational(c));
            }
        t[{3, 1, 0}] = q(1);
        TernaryForm F(Qf(), 4, t);
        auto oracle = vertical_oracle(F, H);
        o.require(vertical_part(enumerate_points(F, H), H) == oracle, "quartic " + F.to_string());
        total += oracle.size();
    }
    o.detail << "5 quartics, " << total << " points on vertical lines";
}

void c13_contrast(Outcome& o) {
    std::string form = "X*Z^4 + X^2*Y*Z^2 + X^5 + X^4*Y + Y^5";
    TernaryForm F5 = TernaryForm::parse(form);
    o.require(is_nonsingular(F5), "quintic nonsingular");
    // axis Z = 0: distinct roots of the binary quintic; plus (0:0:1), on the curve since there is no Z^5
    UniPoly L5(std::vector<Rational>{1, 0, 0, 0, 1, 1});  // y^5 + ... at Y = 1: x^5 + x^4 + 1
    int expect = squarefree_kernel(L5).degree() + (F5.coefficient({0, 0, 5}).is_zero() ? 1 : 0);
    auto r = fixed_locus(PlaneCurve::make(F5), ProjectiveTransformation::diag(q(1), q(1), q(-1)));
    o.require(expect == 6 && r.total_count == expect && r.verdict == "neither", "six fixed points");
    TernaryForm fermat = TernaryForm::parse("X^5 + Y^5 - Z^5");
    std::vector<std::vector<Integer>> lists;
    for (long H : {10L, 40L, 80L}) lists.push_back(enumerate_points(fermat, H).distinct_D);
    o.require(lists[0] == lists[1] && lists[1] == lists[2], "Fermat quintic D stable");
    o.detail << "fixed points " << r.total_count << "; Fermat quintic D:";
    for (const auto& D : lists[0]) o.detail << " " << D.get_str();
}

struct Criterion {
    int id;
    std::string title;
    void (*run)(Outcome&);
    const char* known_failure;  // reason, if this criterion cannot hold
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "Table 1 invariance", c1_table1, nullptr},
        {2, "Klein quartic: 21 involutions", c2_klein, nullptr},
        {3, "S3 change of variables", c3_s3, nullptr},
        {4, "Z/6 chain and non-torsion base point", c4_thm1,
         "a = 3 puts (3, 9/2) on y^2 = x^3 - 27/4, a point of order 3"},
        {5, "D_{A,n} chain and m-independence", c5_dan, nullptr},
        {6, "y^2 = x^3 - 27 subfamily and search", c6_thm2, nullptr},
        {7, "j-invariant table for GAP(16,13)", c7_lem48, nullptr},
        {8, "diagonal twist reduction", c8_thm3, nullptr},
        {9, "quadratic twist identity", c9_twist, nullptr},
        {10, "two-parameter family Jacobian", c10_thm4, nullptr},
        {11, "pullbacks of nP on C_1", c11_pullback, nullptr},
        {12, "enumeration vs brute force", c12_oracle, nullptr},
        {13, "degree-5 contrast", c13_contrast, nullptr},
    };
    int unexpected = 0;
    for (const auto& c : criteria) {
        Outcome o;
        auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (o.ok ? "PASS" : "FAIL") << " " << c.id << " " << c.title << " (" << std::fixed << std::setprecision(1)
                  << secs << " s) " << o.detail.str();
        if (c.known_failure) std::cout << (o.ok ? " [expected to fail: " : " [known: ") << c.known_failure << "]";
        std::cout << std::endl;
        if (o.ok == (c.known_failure != nullptr)) ++unexpected;
    }
    return unexpected == 0 ? 0 : 1;
}
