#include "bq/involutions.hpp"

#include <deque>
#include <unordered_set>

#include "bq/error.hpp"
#include "bq/factor.hpp"

namespace bq {

namespace {

ProjectiveTransformation from_rows(const NumberField& K, const std::vector<NFElement>& v) {
    Matrix3 m;
    for (int i = 0; i < 9; ++i) m[i] = v[i].coerce(K);
    return ProjectiveTransformation(m);
}

struct Builder {
    NumberField K;
    InvolutionCatalogEntry e;
    NFElement n(long x) const { return NFElement(K, Rational(x)); }
    void add(const std::string& name, const std::vector<NFElement>& v) {
        e.involutions.push_back(from_rows(K, v));
        e.names.push_back(name);
    }
    void diag3() {
        add("diag(1,1,-1)", {n(1), n(0), n(0), n(0), n(1), n(0), n(0), n(0), n(-1)});
        add("diag(1,-1,1)", {n(1), n(0), n(0), n(0), n(-1), n(0), n(0), n(0), n(1)});
        add("diag(-1,1,1)", {n(-1), n(0), n(0), n(0), n(1), n(0), n(0), n(0), n(1)});
    }
    void swap_xy() {
        add("[Y:X:Z]", {n(0), n(1), n(0), n(1), n(0), n(0), n(0), n(0), n(1)});
        add("[Y:X:-Z]", {n(0), n(1), n(0), n(1), n(0), n(0), n(0), n(0), n(-1)});
    }
    void rot_xy(const NFElement& i) {
        add("[Y:-X:zeta4*Z]", {n(0), n(1), n(0), n(-1), n(0), n(0), n(0), n(0), i});
        add("[Y:-X:-zeta4*Z]", {n(0), n(1), n(0), n(-1), n(0), n(0), n(0), n(0), -i});
    }
    void s4_extra() {
        add("[Z:Y:X]", {n(0), n(0), n(1), n(0), n(1), n(0), n(1), n(0), n(0)});
        add("[Z:-Y:X]", {n(0), n(0), n(1), n(0), n(-1), n(0), n(1), n(0), n(0)});
        add("[X:Z:Y]", {n(1), n(0), n(0), n(0), n(0), n(1), n(0), n(1), n(0)});
        add("[-X:Z:Y]", {n(-1), n(0), n(0), n(0), n(0), n(1), n(0), n(1), n(0)});
    }
};

NumberField Q7() { return NumberField::cyclotomic(7); }

NFElement z7(int k) { return NFElement::generator(Q7()).pow(k); }

}  // namespace

const std::vector<std::string>& catalog_labels() {
    static const std::vector<std::string> labels{"C2", "C2xC2", "C6", "S3", "D4", "GAP(16,13)", "S4", "GAP(48,33)", "GAP(96,64)", "PSL2(F7)"};
    return labels;
}

InvolutionCatalogEntry catalog(const std::string& label) {
    Builder b;
    b.e.group_label = label;
    if (label == "C2" || label == "C6") {
        b.K = NumberField::rationals();
        b.add("diag(1,1,-1)", {b.n(1), b.n(0), b.n(0), b.n(0), b.n(1), b.n(0), b.n(0), b.n(0), b.n(-1)});
    } else if (label == "C2xC2") {
        b.K = NumberField::rationals();
        b.diag3();
    } else if (label == "D4") {
        b.K = NumberField::cyclotomic(4);
        b.add("diag(1,1,-1)", {b.n(1), b.n(0), b.n(0), b.n(0), b.n(1), b.n(0), b.n(0), b.n(0), b.n(-1)});
        b.swap_xy();
        b.rot_xy(NFElement::generator(b.K));
    } else if (label == "S3") {
        b.K = NumberField::cyclotomic(3);
        NFElement w = NFElement::generator(b.K), w2 = w * w;
        b.add("[Y:X:Z]", {b.n(0), b.n(1), b.n(0), b.n(1), b.n(0), b.n(0), b.n(0), b.n(0), b.n(1)});
        b.add("[zeta3*Y:zeta3^2*X:Z]", {b.n(0), w, b.n(0), w2, b.n(0), b.n(0), b.n(0), b.n(0), b.n(1)});
        b.add("[zeta3^2*Y:zeta3*X:Z]", {b.n(0), w2, b.n(0), w, b.n(0), b.n(0), b.n(0), b.n(0), b.n(1)});
    } else if (label == "GAP(16,13)") {
        b.K = NumberField::cyclotomic(4);
        b.diag3();
        b.swap_xy();
        b.rot_xy(NFElement::generator(b.K));
    } else if (label == "S4") {
        b.K = NumberField::rationals();
        b.diag3();
        b.swap_xy();
        b.s4_extra();
    } else if (label == "GAP(48,33)") {
        b.K = NumberField::cyclotomic(12);
        b.diag3();
        b.swap_xy();
        b.rot_xy(NFElement::generator(b.K).pow(3));
    } else if (label == "GAP(96,64)") {
        b.K = NumberField::cyclotomic(4);
        NFElement i = NFElement::generator(b.K);
        b.diag3();
        b.swap_xy();
        b.rot_xy(i);
        b.s4_extra();
        b.add("[Z:zeta4*Y:-X]", {b.n(0), b.n(0), b.n(1), b.n(0), i, b.n(0), b.n(-1), b.n(0), b.n(0)});
        b.add("[Z:-zeta4*Y:-X]", {b.n(0), b.n(0), b.n(1), b.n(0), -i, b.n(0), b.n(-1), b.n(0), b.n(0)});
        b.add("[zeta4*X:-Z:Y]", {i, b.n(0), b.n(0), b.n(0), b.n(0), b.n(-1), b.n(0), b.n(1), b.n(0)});
        b.add("[-zeta4*X:-Z:Y]", {-i, b.n(0), b.n(0), b.n(0), b.n(0), b.n(-1), b.n(0), b.n(1), b.n(0)});
    } else if (label == "PSL2(F7)") {
        b.K = Q7();
        auto kc = klein_construction();
        for (size_t k = 0; k < kc.involutions.size(); ++k) {
            b.e.involutions.push_back(kc.involutions[k]);
            b.e.names.push_back("psi*t*psi^-1 #" + std::to_string(k + 1));
        }
    } else {
        throw Error(ErrorKind::UnknownLabel, "unknown group label '" + label + "'");
    }
    b.e.field = b.K;
    return b.e;
}

std::optional<int> order_in_pgl3(const ProjectiveTransformation& M, int max_order) {
    ProjectiveTransformation P = M;
    for (int n = 1; n <= max_order; ++n) {
        if (P.is_scalar()) return n;
        P = P * M;
    }
    return std::nullopt;
}

std::vector<ProjectiveTransformation> closure(const std::vector<ProjectiveTransformation>& gens, size_t limit) {
    std::vector<ProjectiveTransformation> elems;
    std::unordered_set<std::string> seen;
    std::deque<ProjectiveTransformation> queue;
    NumberField K = gens.empty() ? NumberField::rationals() : gens[0].field();
    for (const auto& g : gens) K = common_field(K, g.field());
    ProjectiveTransformation id = ProjectiveTransformation::identity(K);
    seen.insert(id.key());
    elems.push_back(id);
    queue.push_back(id);
    while (!queue.empty()) {
        ProjectiveTransformation cur = queue.front();
        queue.pop_front();
        for (const auto& g : gens) {
            ProjectiveTransformation nx = cur * g.coerce(K);
            if (seen.insert(nx.key()).second) {
                if (elems.size() >= limit) throw Error(ErrorKind::LimitExceeded, "closure exceeds " + std::to_string(limit) + " elements");
                elems.push_back(nx);
                queue.push_back(nx);
            }
        }
    }
    return elems;
}

Diagonalization diagonalize_involution(const ProjectiveTransformation& M) {
    auto ord = order_in_pgl3(M, 2);
    if (!ord || *ord != 2) throw Error(ErrorKind::NotAnInvolution, "matrix is not of order 2 in PGL3");
    const Matrix3& m = M.matrix();
    NumberField K = M.field();
    NFElement tr = m[0] + m[4] + m[8];
    Matrix3 a = m, b = m;
    for (int i : {0, 4, 8}) {
        a[i] = a[i] - tr;
        b[i] = b[i] + tr;
    }
    auto axis = mat_kernel(a);
    auto iso = mat_kernel(b);
    if (axis.size() != 2 || iso.size() != 1) throw Error(ErrorKind::NotAnInvolution, "unexpected eigenspace dimensions");
    Matrix3 p;
    for (int r = 0; r < 3; ++r) {
        p[3 * r] = axis[0][r];
        p[3 * r + 1] = axis[1][r];
        p[3 * r + 2] = iso[0][r];
    }
    Diagonalization d{ProjectiveTransformation(p), ProjectiveTransformation()};
    ProjectiveTransformation Pinv(mat_adjugate(p));
    d.D = (Pinv * M * d.P).normalized();
    return d;
}

FixedLocusReport fixed_locus(const PlaneCurve& C, const ProjectiveTransformation& M) {
    auto ord = order_in_pgl3(M, 2);
    if (!ord || *ord != 2) throw Error(ErrorKind::NotAnInvolution, "matrix is not of order 2 in PGL3");
    if (!is_invariant(C.form, M).invariant) throw Error(ErrorKind::NotInvariant, "curve is not invariant under " + M.to_string());
    Diagonalization dg = diagonalize_involution(M);
    TernaryForm G = apply_transformation(C.form, dg.P);
    FixedLocusReport rep;
    int d = G.degree();
    // restriction to the axis: Z = 0 in the new coordinates
    PolyTerms axis;
    for (const auto& [e, c] : G.terms())
        if (e[2] == 0) axis.emplace(e, c);
    if (axis.empty()) throw Error(ErrorKind::AxisOnCurve, "the axis of the involution lies on the curve");
    {
        PolyTerms st;
        for (const auto& [e, c] : axis) st.emplace(e, c);
        std::string s = terms_to_string(st);
        for (auto& ch : s) {
            if (ch == 'X') ch = 's';
            else if (ch == 'Y') ch = 't';
        }
        rep.axis_restriction = s;
    }
    rep.axis_count = d;
    const Matrix3& P = dg.P.matrix();
    auto axis_point = [&](const NFElement& s, const NFElement& t) {
        return ProjPoint(P[0] * s + P[1] * t, P[3] * s + P[4] * t, P[6] * s + P[7] * t).normalized();
    };
    if (G.field().is_rationals()) {
        NumberField Q = NumberField::rationals();
        // t-power: points with t = 0
        int tpow = d;
        std::vector<Rational> f(d + 1, Rational(0));
        for (const auto& [e, c] : axis) {
            f[e[0]] = c.to_rational();
            tpow = std::min(tpow, e[1]);
        }
        if (tpow > 0) rep.axis_points.emplace_back(axis_point(NFElement(Q, Rational(1)), NFElement(Q, Rational(0))), tpow);
        UniPoly u(f);
        if (u.degree() >= 1) {
            for (const auto& fac : factor_low_degree(u).factors)
                if (fac.poly.degree() == 1)
                    rep.axis_points.emplace_back(axis_point(NFElement(Q, -fac.poly.coeff(0)), NFElement(Q, Rational(1))), fac.multiplicity);
        }
    }
    rep.isolated_point = ProjPoint(P[2], P[5], P[8]).normalized();
    rep.isolated_point_on_curve = point_on_curve(C.form, rep.isolated_point);
    rep.total_count = rep.axis_count + (rep.isolated_point_on_curve ? 1 : 0);
    int g = C.genus;
    if (rep.total_count == 2 * g - 2)
        rep.verdict = "bielliptic";
    else if (rep.total_count == 2 * g + 2)
        rep.verdict = "hyperelliptic";
    else
        rep.verdict = "neither";
    return rep;
}

KleinConstruction klein_construction() {
    NumberField K = Q7();
    NFElement zero(K, Rational(0)), one(K, Rational(1));
    ProjectiveTransformation d = ProjectiveTransformation::diag(z7(4), z7(2), z7(1));
    ProjectiveTransformation h = from_rows(K, {zero, one, zero, zero, zero, one, one, zero, zero});
    NFElement a = z7(1) - z7(6), b = z7(2) - z7(5), c = z7(4) - z7(3);
    ProjectiveTransformation t = from_rows(K, {a, b, c, b, c, a, c, a, b});
    KleinConstruction kc{closure({d, h}), t, {}};
    std::unordered_set<std::string> seen;
    for (const auto& psi : kc.subgroup) {
        ProjectiveTransformation inv = psi * t * psi.inverse();
        if (seen.insert(inv.key()).second) kc.involutions.push_back(inv);
    }
    return kc;
}

ProjectiveTransformation klein_verbatim_s() {
    NumberField K = Q7();
    auto n = [&](long x) { return NFElement(K, Rational(x)); };
    return from_rows(K, {n(-3), n(-6), n(2), n(-6), n(2), n(-3), n(2), n(-3), n(-6)});
}

KleinVerbatimDiagnostics klein_verbatim_diagnostics() {
    NumberField K = Q7();
    auto n = [&](long x) { return NFElement(K, Rational(x)); };
    NFElement al = z7(1) + z7(2) + z7(4);
    ProjectiveTransformation g = from_rows(K, {n(-2), al, n(-1), al, n(-1), n(1) - al, n(-1), n(1) - al, n(-1) - al});
    ProjectiveTransformation h = from_rows(K, {n(0), n(1), n(0), n(0), n(0), n(1), n(1), n(0), n(0)});
    ProjectiveTransformation s = klein_verbatim_s();
    NFElement u = n(1) + z7(1) * al, v = z7(2) + z7(6);
    ProjectiveTransformation A = from_rows(K, {n(1), u, v, u, v, n(1), v, n(1), u});
    NFElement w = n(2) * al + n(3);
    ProjectiveTransformation B = from_rows(K, {-al, n(1), w, w, -al, n(1), n(1), w, -al});
    ProjectiveTransformation phi0 = A * B;
    TernaryForm klein = TernaryForm::parse("X^3*Y + Y^3*Z + Z^3*X", K);

    KleinVerbatimDiagnostics r;
    Matrix3 s2 = mat_mul(s.matrix(), s.matrix());
    r.s_squared_is_49 = true;
    for (int i = 0; i < 9; ++i)
        if (s2[i] != n(i % 4 == 0 ? 49 : 0)) r.s_squared_is_49 = false;
    r.s_order_two = order_in_pgl3(s, 2) == 2;
    r.g_invariant = is_invariant(klein, g).invariant;
    r.s_invariant = is_invariant(klein, s).invariant;
    r.phi0_invariant = is_invariant(klein, phi0).invariant;
    auto group = closure({g, h});
    r.closure_gh = group.size();
    ProjectiveTransformation conj = phi0 * s * phi0.inverse();
    std::unordered_set<std::string> prod, cj;
    for (const auto& psi : group) {
        ProjectiveTransformation p = psi * conj;
        if (order_in_pgl3(p, 2) == 2 && prod.insert(p.key()).second && is_invariant(klein, p).invariant) ++r.invariant_products;
        cj.insert((psi * conj * psi.inverse()).key());
    }
    r.product_involutions = prod.size();
    r.conjugate_involutions = cj.size();
    return r;
}

}  // namespace bq
