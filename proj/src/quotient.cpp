#include "bq/quotient.hpp"

#include <numeric>

#include "bq/error.hpp"
#include "bq/factor.hpp"
#include "bq/involutions.hpp"

namespace bq {

namespace {

NFElement nf(const NumberField& K, const Rational& r) { return NFElement(K, r); }

NFElement eval_nf(const std::vector<NFElement>& p, const NFElement& x) {
    NFElement r(x.field(), Rational(0));
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
    return r;
}

[[noreturn]] void pole(const std::string& where) { throw Error(ErrorKind::PoleEncountered, "pole at " + where); }

std::string poly_string(const std::vector<NFElement>& p, const std::string& var) {
    std::string s;
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
        if (p[i].is_zero()) continue;
        std::string c = p[i].to_string();
        bool neg = p[i].is_rational() && p[i].to_rational() < 0;
        if (neg) c = c.substr(1);
        if (p[i].needs_parens()) c = "(" + c + ")";
        std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
        std::string term = mono.empty() ? c : (c == "1" ? mono : c + "*" + mono);
        if (s.empty())
            s = (neg ? "-" : "") + term;
        else
            s += (neg ? " - " : " + ") + term;
    }
    return s.empty() ? "0" : s;
}

}  // namespace

std::string ChainPoint::to_string() const {
    if (infinity) return "O";
    return "(" + x.to_string() + ", " + y.to_string() + ")";
}

std::string ChainStep::kind_name() const {
    switch (kind) {
        case Kind::Linear: return "linear";
        case Kind::Fiber: return "fiber";
        case Kind::Affine: return "affine";
        case Kind::ShearY: return "shear-y";
        case Kind::InvertX: return "invert-x";
        case Kind::Connell: return "connell";
        case Kind::CubicMonic: return "cubic-monic";
        case Kind::Weierstrass: return "weierstrass";
    }
    return "?";
}

std::string ChainStep::describe() const {
    switch (kind) {
        case Kind::Linear: return "old = M*new, M = " + M.to_string();
        case Kind::Fiber: return "x = X/Y, y = " + k.to_string() + "*Z^2/Y^2";
        case Kind::Affine:
            return "x_old = " + ax.to_string() + "*x + " + bx.to_string() + ", y_old = " + ay.to_string() + "*y + " + by.to_string();
        case Kind::ShearY: return "y_new = " + c.to_string() + "*y + " + poly_string(p, "x");
        case Kind::InvertX:
            return at_infinity ? "x_new = 1/x, y_new = y/x^2" : "x_new = 1/(x - " + x0.to_string() + "), y_new = y*x_new^2";
        case Kind::Connell:
            return "Connell with b = " + to_string(cb) + ", c = " + to_string(cc) + ", d = " + to_string(cd) + ", q = " + to_string(cq);
        case Kind::CubicMonic: return "x = " + k.to_string() + "*x_old, y = " + k.to_string() + "*y_old";
        case Kind::Weierstrass:
            return "x = u^2 x' + r, y = u^3 y' + s u^2 x' + t with u = " + to_string(change.u) + ", r = " + to_string(change.r) +
                   ", s = " + to_string(change.s) + ", t = " + to_string(change.t);
    }
    return "";
}

size_t QuotientChain::fiber_index() const {
    for (size_t i = 0; i < steps.size(); ++i)
        if (steps[i].kind == ChainStep::Kind::Fiber) return i;
    throw Error(ErrorKind::WrongShape, "chain has no fiber step");
}

ChainPoint QuotientChain::forward(const ProjPoint& src) const {
    ProjPoint P = src;
    size_t i = 0;
    for (; i < steps.size() && steps[i].kind == ChainStep::Kind::Linear; ++i) {
        Matrix3 inv = mat_adjugate(steps[i].M.matrix());
        std::array<NFElement, 3> v;
        NumberField K = common_field(P.coords[0].field(), inv[0].field());
        for (int r = 0; r < 3; ++r) {
            NFElement acc(K, Rational(0));
            for (int c = 0; c < 3; ++c) acc = acc + inv[3 * r + c] * P.coords[c];
            v[r] = acc;
        }
        P = ProjPoint(v[0], v[1], v[2]);
    }
    if (i == steps.size() || steps[i].kind != ChainStep::Kind::Fiber) throw Error(ErrorKind::WrongShape, "chain does not start at a plane curve");
    const auto& [X, Y, Z] = P.coords;
    if (Y.is_zero()) pole("Y = 0");
    ChainPoint C = ChainPoint::affine(X / Y, steps[i].k * Z * Z / (Y * Y));
    return forward_from(i + 1, C);
}

ChainPoint QuotientChain::forward_from(size_t from, ChainPoint P) const {
    using K = ChainStep::Kind;
    for (size_t i = from; i < steps.size(); ++i) {
        const ChainStep& s = steps[i];
        switch (s.kind) {
            case K::Linear:
            case K::Fiber:
                throw Error(ErrorKind::WrongShape, "projective step in the middle of a chain");
            case K::Affine:
                if (P.infinity) pole("affine step at infinity");
                P = ChainPoint::affine((P.x - s.bx) / s.ax, (P.y - s.by) / s.ay);
                break;
            case K::ShearY:
                if (P.infinity) pole("shear at infinity");
                P = ChainPoint::affine(P.x, s.c * P.y + eval_nf(s.p, P.x));
                break;
            case K::InvertX: {
                if (P.infinity) pole("inversion at infinity");
                NFElement d = s.at_infinity ? P.x : P.x - s.x0;
                if (d.is_zero()) pole("x = " + (s.at_infinity ? std::string("0") : s.x0.to_string()));
                NFElement t = d.inverse();
                P = ChainPoint::affine(t, P.y * t * t);
                break;
            }
            case K::Connell: {
                if (P.infinity) pole("Connell at infinity");
                NumberField F = P.x.field();
                NFElement q = nf(F, s.cq), c = nf(F, s.cc), d = nf(F, s.cd), two = nf(F, 2), four = nf(F, 4);
                const NFElement &u = P.x, &v = P.y;
                if (u.is_zero()) {
                    if (v == q) {
                        P = ChainPoint{true, {}, {}};
                        break;
                    }
                    pole("Connell base point conjugate");
                }
                NFElement x = (two * q * (v + q) + d * u) / (u * u);
                NFElement y = (four * q * q * (v + q) + two * q * (d * u + c * u * u) - d * d * u * u / (two * q)) / (u * u * u);
                P = ChainPoint::affine(x, y);
                break;
            }
            case K::CubicMonic:
                if (!P.infinity) P = ChainPoint::affine(s.k * P.x, s.k * P.y);
                break;
            case K::Weierstrass:
                if (!P.infinity) {
                    NumberField F = P.x.field();
                    const CoordinateChange& c = s.change;
                    NFElement u2 = nf(F, Rational(c.u * c.u));
                    NFElement xr = P.x - nf(F, c.r);
                    P = ChainPoint::affine(xr / u2, (P.y - nf(F, c.s) * xr - nf(F, c.t)) / (u2 * nf(F, c.u)));
                }
                break;
        }
    }
    return P;
}

ChainPoint QuotientChain::backward_to_fiber(const ChainPoint& P0) const {
    using K = ChainStep::Kind;
    size_t stop = 0;
    for (size_t i = 0; i < steps.size(); ++i)
        if (steps[i].kind == K::Fiber) stop = i + 1;
    ChainPoint P = P0;
    for (size_t i = steps.size(); i-- > stop;) {
        const ChainStep& s = steps[i];
        switch (s.kind) {
            case K::Linear:
            case K::Fiber:
                throw Error(ErrorKind::WrongShape, "projective step in the middle of a chain");
            case K::Affine:
                if (P.infinity) pole("affine step at infinity");
                P = ChainPoint::affine(s.ax * P.x + s.bx, s.ay * P.y + s.by);
                break;
            case K::ShearY:
                if (P.infinity) pole("shear at infinity");
                P = ChainPoint::affine(P.x, (P.y - eval_nf(s.p, P.x)) / s.c);
                break;
            case K::InvertX: {
                if (P.infinity || P.x.is_zero()) pole("inverse inversion");
                NFElement t = P.x.inverse();
                P = ChainPoint::affine(s.at_infinity ? t : t + s.x0, P.y * t * t);
                break;
            }
            case K::Connell: {
                NumberField F = P.infinity ? NumberField::rationals() : P.x.field();
                NFElement q = nf(F, s.cq), c = nf(F, s.cc), d = nf(F, s.cd), two = nf(F, 2);
                if (P.infinity) {
                    P = ChainPoint::affine(nf(F, 0), q);
                    break;
                }
                if (P.y.is_zero()) pole("Connell inverse at y = 0");
                NFElement u = (two * q * (P.x + c) - d * d / (two * q)) / P.y;
                NFElement v = -q + u * (u * P.x - d) / (two * q);
                P = ChainPoint::affine(u, v);
                break;
            }
            case K::CubicMonic:
                if (!P.infinity) P = ChainPoint::affine(P.x / s.k, P.y / s.k);
                break;
            case K::Weierstrass:
                if (!P.infinity) {
                    NumberField F = P.x.field();
                    const CoordinateChange& c = s.change;
                    NFElement u2 = nf(F, Rational(c.u * c.u));
                    NFElement x = u2 * P.x + nf(F, c.r);
                    NFElement y = u2 * nf(F, c.u) * P.y + nf(F, c.s) * u2 * P.x + nf(F, c.t);
                    P = ChainPoint::affine(x, y);
                }
                break;
        }
    }
    return P;
}

void QuotientChain::append(const QuotientChain& o) { steps.insert(steps.end(), o.steps.begin(), o.steps.end()); }

std::vector<std::string> QuotientChain::describe() const {
    std::vector<std::string> out;
    for (const auto& s : steps) out.push_back(s.kind_name() + ": " + s.describe());
    return out;
}

int GenusOneQuarticModel::degree() const {
    for (int i = 4; i >= 0; --i)
        if (!q[i].is_zero()) return i;
    return -1;
}

bool GenusOneQuarticModel::is_rational() const {
    for (const auto& c : q)
        if (!c.is_rational()) return false;
    return true;
}

UniPoly GenusOneQuarticModel::rational_poly() const {
    if (!is_rational()) throw Error(ErrorKind::UnsupportedCoefficientField, "quartic model has coefficients outside Q");
    std::vector<Rational> c;
    for (const auto& e : q) c.push_back(e.to_rational());
    return UniPoly(c);
}

std::string GenusOneQuarticModel::to_string() const { return "v^2 = " + poly_string(q, "u"); }

std::pair<NFElement, NFElement> quartic_invariants(const std::vector<NFElement>& q) {
    const NFElement &e = q[0], &d = q[1], &c = q[2], &b = q[3], &a = q[4];
    NumberField K = a.field();
    auto n = [&](long x) { return NFElement(K, Rational(x)); };
    NFElement I = n(12) * a * e - n(3) * b * d + c * c;
    NFElement J = n(72) * a * c * e + n(9) * b * c * d - n(27) * a * d * d - n(27) * e * b * b - n(2) * c * c * c;
    return {I, J};
}

NFElement jacobian_j(const GenusOneQuarticModel& m) {
    auto [I, J] = quartic_invariants(m.q);
    NumberField K = I.field();
    NFElement den = NFElement(K, Rational(4)) * I * I * I - J * J;
    if (den.is_zero()) throw Error(ErrorKind::DegenerateQuartic, "quartic has a repeated root");
    return NFElement(K, Rational(6912)) * I * I * I / den;
}

WeierstrassCurve jacobian_curve(const GenusOneQuarticModel& m) {
    if (!m.is_rational()) throw Error(ErrorKind::UnsupportedCoefficientField, "Jacobian over Q needs a rational model");
    auto [I, J] = quartic_invariants(m.q);
    auto E = WeierstrassCurve::short_form(Rational(-27 * I.to_rational()), Rational(-27 * J.to_rational()));
    return integral_short_model(E).first;
}

GenusOneQuarticModel quotient_to_binary_quartic(const TernaryForm& F) {
    if (F.degree() != 4) throw Error(ErrorKind::WrongShape, "expected a quartic");
    NumberField K = F.field();
    std::vector<NFElement> L2(3, NFElement(K, 0)), L4(5, NFElement(K, 0));
    NFElement c4(K, 0);
    for (const auto& [e, c] : F.terms()) {
        if (e[2] % 2 != 0) throw Error(ErrorKind::WrongShape, "odd power of Z in " + F.to_string());
        if (e[2] == 4)
            c4 = c;
        else if (e[2] == 2)
            L2[e[0]] = c;
        else
            L4[e[0]] = c;
    }
    if (c4.is_zero()) throw Error(ErrorKind::DegenerateQuartic, "no Z^4 term: the isolated fixed point lies on the curve");
    GenusOneQuarticModel m;
    m.field = K;
    m.q.assign(5, NFElement(K, 0));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.q[i + j] = m.q[i + j] + L2[i] * L2[j];
    for (int i = 0; i < 5; ++i) m.q[i] = m.q[i] - NFElement(K, 4) * c4 * L4[i];
    auto [I, J] = quartic_invariants(m.q);
    if ((NFElement(K, 4) * I * I * I - J * J).is_zero())
        throw Error(ErrorKind::DegenerateQuartic, "quotient quartic " + m.to_string() + " is not squarefree of degree >= 3");
    ChainStep fib;
    fib.kind = ChainStep::Kind::Fiber;
    fib.k = NFElement(K, 1);
    ChainStep sh;
    sh.kind = ChainStep::Kind::ShearY;
    sh.c = NFElement(K, 2) * c4;
    sh.p = L2;
    m.chain.steps = {fib, sh};
    return m;
}

namespace {

ChainStep weierstrass_step(const CoordinateChange& c) {
    ChainStep s;
    s.kind = ChainStep::Kind::Weierstrass;
    s.change = c;
    return s;
}

// Taylor shift: coefficients of q(x0 + y)
std::vector<Rational> shift(const std::vector<Rational>& q, const Rational& x0) {
    std::vector<Rational> r = q;
    int n = static_cast<int>(r.size());
    for (int i = 0; i < n; ++i)
        for (int j = n - 2; j >= i; --j) r[j] = r[j] + x0 * r[j + 1];
    return r;
}

WeierstrassReduction finish_short(WeierstrassCurve L, WeierstrassReduction red) {
    auto [S, c] = short_model(L);
    if (!(c.r == 0 && c.s == 0 && c.t == 0)) red.chain.steps.push_back(weierstrass_step(c));
    red.E = S;
    return red;
}

WeierstrassReduction reduce_cubic(const std::vector<Rational>& q, WeierstrassReduction red) {
    // q cubic: (k v)^2 = (k s)^3 + c2 (k s)^2 + c1 k (k s) + c0 k^2
    Rational k = q[3];
    ChainStep cm;
    cm.kind = ChainStep::Kind::CubicMonic;
    cm.k = NFElement(NumberField::rationals(), k);
    red.chain.steps.push_back(cm);
    WeierstrassCurve L(0, q[2], 0, Rational(q[1] * k), Rational(q[0] * k * k));
    return finish_short(L, red);
}

WeierstrassReduction reduce_connell(const std::vector<Rational>& Q, const Rational& qc, WeierstrassReduction red) {
    const Rational &a = Q[4], &b = Q[3], &c = Q[2], &d = Q[1];
    ChainStep cs;
    cs.kind = ChainStep::Kind::Connell;
    cs.cb = b;
    cs.cc = c;
    cs.cd = d;
    cs.cq = qc;
    red.chain.steps.push_back(cs);
    Rational a1 = d / qc, a2 = c - d * d / (4 * qc * qc), a3 = 2 * qc * b, a4 = -4 * qc * qc * a;
    Rational a6 = a2 * a4;
    return finish_short(WeierstrassCurve(a1, a2, a3, a4, a6), red);
}

std::optional<std::pair<Rational, Rational>> small_point(const UniPoly& q, int bound) {
    for (int h = 0; h <= bound; ++h)
        for (int den = 1; den <= std::max(h, 1); ++den)
            for (int num = -h; num <= h; ++num) {
                if (std::max(std::abs(num), den) != std::max(h, 1) && h != 0) continue;
                if (h == 0 && (num != 0 || den != 1)) continue;
                if (std::gcd(num, den) != 1) continue;
                Rational u(num, den);
                u.canonicalize();
                if (auto v = rational_sqrt(q.eval(u))) return std::make_pair(u, *v);
            }
    return std::nullopt;
}

std::optional<Rational> smallest_rational_root(const UniPoly& q) {
    if (q.coeff(0) == 0) return Rational(0);
    auto roots = rational_roots(int_primitive(q.primitive_integer()));
    if (roots.empty()) return std::nullopt;
    return make_rational(roots.front().first, roots.front().second);
}

}  // namespace

WeierstrassReduction quartic_to_weierstrass(const GenusOneQuarticModel& m, const ReductionHint& hint) {
    UniPoly qp = m.rational_poly();
    int deg = qp.degree();
    if (deg < 3 || deg > 4) throw Error(ErrorKind::DegenerateQuartic, "model degree " + std::to_string(deg));
    if (discriminant(qp) == 0) throw Error(ErrorKind::DegenerateQuartic, "model is not squarefree");
    std::vector<Rational> q(5, Rational(0));
    for (int i = 0; i <= deg; ++i) q[i] = qp.coeff(i);
    NumberField Q = NumberField::rationals();
    WeierstrassReduction red;

    if (deg == 3) {
        red.method = "cubic";
        return reduce_cubic(q, red);
    }
    auto do_root = [&](const Rational& r) {
        if (qp.eval(r) != 0) throw Error(ErrorKind::NoRationalPointAvailable, to_string(r) + " is not a root");
        red.method = "root";
        ChainStep inv;
        inv.kind = ChainStep::Kind::InvertX;
        inv.x0 = NFElement(Q, r);
        red.chain.steps.push_back(inv);
        auto qr = shift(q, r);
        // s^4 qr(1/s): coefficient of s^k is qr[4-k]
        std::vector<Rational> cub(5);
        for (int k = 0; k <= 4; ++k) cub[k] = qr[4 - k];
        return reduce_cubic(cub, red);
    };
    auto do_leading = [&]() {
        auto L = rational_sqrt(q[4]);
        if (!L) throw Error(ErrorKind::NoRationalPointAvailable, "leading coefficient is not a square");
        red.method = "leading-square";
        ChainStep inv;
        inv.kind = ChainStep::Kind::InvertX;
        inv.at_infinity = true;
        red.chain.steps.push_back(inv);
        std::vector<Rational> rev(5);
        for (int k = 0; k <= 4; ++k) rev[k] = q[4 - k];
        return reduce_connell(rev, *L, red);
    };
    auto do_point = [&](const Rational& u0, const Rational& v0) {
        if (v0 * v0 != qp.eval(u0))
            throw Error(ErrorKind::PointNotOnCurve, "(" + to_string(u0) + ", " + to_string(v0) + ") is not on " + m.to_string());
        if (v0 == 0) return do_root(u0);
        red.method = "point";
        if (u0 != 0) {
            ChainStep af;
            af.kind = ChainStep::Kind::Affine;
            af.ax = NFElement(Q, 1);
            af.bx = NFElement(Q, u0);
            af.ay = NFElement(Q, 1);
            af.by = NFElement(Q, 0);
            red.chain.steps.push_back(af);
        }
        return reduce_connell(shift(q, u0), v0, red);
    };

    switch (hint.kind) {
        case ReductionHint::Kind::Root:
            return do_root(hint.r);
        case ReductionHint::Kind::LeadingSquare:
            return do_leading();
        case ReductionHint::Kind::Point:
            return do_point(hint.u0, hint.v0);
        case ReductionHint::Kind::Auto:
            break;
    }
    if (auto r = smallest_rational_root(qp)) return do_root(*r);
    if (is_rational_square(q[4])) return do_leading();
    if (auto p = small_point(qp, 30)) return do_point(p->first, p->second);
    throw Error(ErrorKind::NoRationalPointAvailable, "no rational root, square leading coefficient or small point on " + m.to_string());
}

namespace {

ChainStep affine_step(const Rational& ax, const Rational& bx, const Rational& ay, const Rational& by) {
    NumberField Q = NumberField::rationals();
    ChainStep s;
    s.kind = ChainStep::Kind::Affine;
    s.ax = NFElement(Q, ax);
    s.bx = NFElement(Q, bx);
    s.ay = NFElement(Q, ay);
    s.by = NFElement(Q, by);
    return s;
}

ChainStep fiber_step(const Rational& k) {
    ChainStep s;
    s.kind = ChainStep::Kind::Fiber;
    s.k = NFElement(NumberField::rationals(), k);
    return s;
}

}  // namespace

NamedChainResult chain_thm1(const Rational& a) {
    if (a == 0 || a == 4) throw Error(ErrorKind::InadmissibleParameters, "a must avoid {0, 4}");
    NamedChainResult r;
    r.E = WeierstrassCurve::short_form(0, Rational(a * a * a * a / 4 - a * a * a));
    r.P = ECPoint::affine(a, Rational(a * a / 2));
    // a w^2 + a w + x^3 + 1 = 0, then x -> -x, w -> w - 1/2, then w -> w/a^2, x -> x/a
    r.chain.steps = {fiber_step(1), affine_step(-1, 0, 1, Rational(-1, 2)), affine_step(Rational(1) / a, 0, Rational(1) / (a * a), 0)};
    return r;
}

NamedChainResult chain_DAn(const Rational& A, const Rational& n, const Rational& m) {
    if (A == 0 || n == 0 || m == 0) throw Error(ErrorKind::InadmissibleParameters, "A, n, m must be nonzero");
    Rational B = n * n * A * A * (1 - 4 * A) / 4;
    if (B == 0) throw Error(ErrorKind::InadmissibleParameters, "A = 1/4 gives a singular cubic");
    NamedChainResult r;
    r.E = WeierstrassCurve::short_form(0, B);
    // A w^2 + w + n x^3 + 1 = 0 with w = m Z^2/Y^2
    r.chain.steps = {fiber_step(m), affine_step(-1, 0, 1, Rational(-1) / (2 * A)),
                     affine_step(Rational(1) / (A * n), 0, Rational(1) / (n * A * A), 0)};
    return r;
}

QuotientResult quotient_via_conjugation(const TernaryForm& F, const ProjectiveTransformation& M, const ReductionHint& hint) {
    auto ord = order_in_pgl3(M, 2);
    if (!ord || *ord != 2) throw Error(ErrorKind::NotAnInvolution, "matrix is not of order 2 in PGL3");
    if (!is_invariant(F, M).invariant) throw Error(ErrorKind::NotInvariant, "form is not invariant under " + M.to_string());
    NumberField K = M.field();
    QuotientChain pre;
    TernaryForm G = F;
    auto z = ProjectiveTransformation::diag(NFElement(K, 1), NFElement(K, 1), NFElement(K, -1));
    if (M != z) {
        Diagonalization d = diagonalize_involution(M);
        G = apply_transformation(F, d.P);
        ChainStep lin;
        lin.kind = ChainStep::Kind::Linear;
        lin.M = d.P;
        pre.steps.push_back(lin);
    }
    QuotientResult res;
    res.model = quotient_to_binary_quartic(G);
    pre.append(res.model.chain);
    res.model.chain = pre;
    res.chain = pre;
    res.jacobian_j = jacobian_j(res.model);
    if (!res.model.is_rational()) {
        res.status = "non-rational-model";
        return res;
    }
    res.jacobian = jacobian_curve(res.model);
    try {
        auto red = quartic_to_weierstrass(res.model, hint);
        res.E = red.E;
        res.method = red.method;
        res.chain.append(red.chain);
        res.status = "reduced";
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NoRationalPointAvailable) throw;
        res.status = "no-rational-point";
    }
    return res;
}

}  // namespace bq
