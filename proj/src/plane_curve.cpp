#include "bq/plane_curve.hpp"

#include <algorithm>

#include "bq/error.hpp"
#include "bq/arith.hpp"
#include "bq/modp.hpp"

namespace bq {

Matrix3 mat_identity(const NumberField& K) {
    Matrix3 m;
    for (int i = 0; i < 9; ++i) m[i] = NFElement(K, Rational(i % 4 == 0 ? 1 : 0));
    return m;
}

NumberField mat_field(const Matrix3& a) {
    NumberField K = a[0].field();
    for (const auto& e : a) K = common_field(K, e.field());
    return K;
}

Matrix3 mat_mul(const Matrix3& a, const Matrix3& b) {
    Matrix3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[3 * i + j] = a[3 * i] * b[j] + a[3 * i + 1] * b[3 + j] + a[3 * i + 2] * b[6 + j];
    return r;
}

NFElement mat_det(const Matrix3& a) {
    return a[0] * (a[4] * a[8] - a[5] * a[7]) - a[1] * (a[3] * a[8] - a[5] * a[6]) + a[2] * (a[3] * a[7] - a[4] * a[6]);
}

Matrix3 mat_adjugate(const Matrix3& a) {
    Matrix3 r;
    r[0] = a[4] * a[8] - a[5] * a[7];
    r[1] = a[2] * a[7] - a[1] * a[8];
    r[2] = a[1] * a[5] - a[2] * a[4];
    r[3] = a[5] * a[6] - a[3] * a[8];
    r[4] = a[0] * a[8] - a[2] * a[6];
    r[5] = a[2] * a[3] - a[0] * a[5];
    r[6] = a[3] * a[7] - a[4] * a[6];
    r[7] = a[1] * a[6] - a[0] * a[7];
    r[8] = a[0] * a[4] - a[1] * a[3];
    return r;
}

Matrix3 mat_scale(const Matrix3& a, const NFElement& s) {
    Matrix3 r;
    for (int i = 0; i < 9; ++i) r[i] = a[i] * s;
    return r;
}

std::vector<std::array<NFElement, 3>> mat_kernel(const Matrix3& a0) {
    NumberField K = mat_field(a0);
    std::array<std::array<NFElement, 3>, 3> m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = a0[3 * i + j].coerce(K);
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < 3 && row < 3; ++col) {
        int piv = -1;
        for (int r = row; r < 3; ++r)
            if (!m[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[row], m[piv]);
        NFElement inv = m[row][col].inverse();
        for (auto& e : m[row]) e = e * inv;
        for (int r = 0; r < 3; ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            NFElement f = m[r][col];
            for (int c = 0; c < 3; ++c) m[r][c] = m[r][c] - f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    std::vector<std::array<NFElement, 3>> basis;
    for (int free = 0; free < 3; ++free) {
        if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
        std::array<NFElement, 3> v{NFElement(K, Rational(0)), NFElement(K, Rational(0)), NFElement(K, Rational(0))};
        v[free] = NFElement(K, Rational(1));
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
        basis.push_back(v);
    }
    return basis;
}

ProjectiveTransformation::ProjectiveTransformation(const Matrix3& m) : K_(mat_field(m)) {
    for (int i = 0; i < 9; ++i) m_[i] = m[i].coerce(K_);
    if (mat_det(m_).is_zero()) throw Error(ErrorKind::DivisionByZero, "singular 3x3 matrix");
}

ProjectiveTransformation ProjectiveTransformation::identity(const NumberField& K) {
    return ProjectiveTransformation(mat_identity(K));
}

ProjectiveTransformation ProjectiveTransformation::diag(const NFElement& a, const NFElement& b, const NFElement& c) {
    NumberField K = common_field(common_field(a.field(), b.field()), c.field());
    Matrix3 m = mat_identity(K);
    m[0] = a.coerce(K);
    m[4] = b.coerce(K);
    m[8] = c.coerce(K);
    return ProjectiveTransformation(m);
}

ProjectiveTransformation ProjectiveTransformation::parse(const std::vector<std::string>& entries, const NumberField& K) {
    if (entries.size() != 9) throw Error(ErrorKind::ParseError, "a transformation needs 9 entries");
    Matrix3 m;
    for (int i = 0; i < 9; ++i) m[i] = parse_element(entries[i], K);
    return ProjectiveTransformation(m);
}

ProjectiveTransformation ProjectiveTransformation::normalized() const {
    for (const auto& e : m_)
        if (!e.is_zero()) {
            if (e.is_one()) return *this;
            return ProjectiveTransformation(mat_scale(m_, e.inverse()));
        }
    return *this;
}

ProjectiveTransformation ProjectiveTransformation::inverse() const { return ProjectiveTransformation(mat_adjugate(m_)).normalized(); }

ProjectiveTransformation ProjectiveTransformation::coerce(const NumberField& K) const {
    Matrix3 m;
    for (int i = 0; i < 9; ++i) m[i] = m_[i].coerce(K);
    return ProjectiveTransformation(m);
}

ProjectiveTransformation ProjectiveTransformation::pow(int n) const {
    ProjectiveTransformation r = identity(K_);
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
}

bool ProjectiveTransformation::is_scalar() const {
    for (int i = 0; i < 9; ++i)
        if (i % 4 != 0 && !m_[i].is_zero()) return false;
    return m_[0] == m_[4] && m_[4] == m_[8];
}

bool ProjectiveTransformation::is_rational() const {
    for (const auto& e : m_)
        if (!e.is_rational()) return false;
    return true;
}

ProjectiveTransformation operator*(const ProjectiveTransformation& a, const ProjectiveTransformation& b) {
    return ProjectiveTransformation(mat_mul(a.m_, b.m_)).normalized();
}

bool operator==(const ProjectiveTransformation& a, const ProjectiveTransformation& b) {
    auto na = a.normalized(), nb = b.normalized();
    for (int i = 0; i < 9; ++i)
        if (na.m_[i] != nb.m_[i]) return false;
    return true;
}

std::string ProjectiveTransformation::key() const {
    auto n = normalized();
    std::string s;
    for (const auto& e : n.m_) s += e.to_string() + ";";
    return s;
}

std::string ProjectiveTransformation::to_string() const {
    std::string s = "[";
    for (int r = 0; r < 3; ++r) {
        s += r ? ", [" : "[";
        for (int c = 0; c < 3; ++c) s += (c ? ", " : "") + at(r, c).to_string();
        s += "]";
    }
    return s + "]";
}

ProjPoint::ProjPoint(const NFElement& x, const NFElement& y, const NFElement& z) {
    NumberField K = common_field(common_field(x.field(), y.field()), z.field());
    coords = {x.coerce(K), y.coerce(K), z.coerce(K)};
    if (coords[0].is_zero() && coords[1].is_zero() && coords[2].is_zero())
        throw Error(ErrorKind::DivisionByZero, "projective point with all coordinates zero");
}

ProjPoint ProjPoint::normalized() const {
    for (const auto& c : coords)
        if (!c.is_zero()) {
            NFElement inv = c.inverse();
            return ProjPoint(coords[0] * inv, coords[1] * inv, coords[2] * inv);
        }
    return *this;
}

std::string ProjPoint::to_string() const {
    return "(" + coords[0].to_string() + " : " + coords[1].to_string() + " : " + coords[2].to_string() + ")";
}

bool operator==(const ProjPoint& a, const ProjPoint& b) {
    auto na = a.normalized(), nb = b.normalized();
    return na.coords == nb.coords;
}

const char* status_name(NonsingularityStatus s) {
    switch (s) {
    case NonsingularityStatus::Verified: return "verified";
    case NonsingularityStatus::Heuristic: return "heuristic";
    case NonsingularityStatus::Unchecked: return "unchecked";
    }
    return "unchecked";
}

PlaneCurve PlaneCurve::unchecked(const TernaryForm& F) {
    PlaneCurve C;
    C.form = F;
    C.field = F.field();
    C.genus = (F.degree() - 1) * (F.degree() - 2) / 2;
    C.status = NonsingularityStatus::Unchecked;
    return C;
}

PlaneCurve PlaneCurve::make(const TernaryForm& F) {
    PlaneCurve C = unchecked(F);
    if (F.is_rational()) {
        if (!is_nonsingular(F.coerce(NumberField::rationals())))
            throw Error(ErrorKind::SingularInstance, "curve " + F.to_string() + " is singular");
        C.status = NonsingularityStatus::Verified;
    } else {
        if (!modular_nonsingularity_heuristic(F))
            throw Error(ErrorKind::SingularInstance, "curve " + F.to_string() + " has a singular point modulo a split prime");
        C.status = NonsingularityStatus::Heuristic;
    }
    return C;
}

TernaryForm apply_transformation(const TernaryForm& F, const ProjectiveTransformation& M) {
    return substitute_linear(F, M.matrix());
}

InvarianceResult is_invariant(const TernaryForm& F, const ProjectiveTransformation& M) {
    TernaryForm G = apply_transformation(F, M);
    InvarianceResult r;
    if (F.is_zero()) return r;
    const auto& [e0, c0] = *F.terms().begin();
    NFElement lambda = G.coefficient(e0) / c0.coerce(G.field());
    if (lambda.is_zero()) return r;
    if (G == F.scaled(lambda)) {
        r.invariant = true;
        r.scalar = lambda;
    }
    return r;
}

bool point_on_curve(const TernaryForm& F, const ProjPoint& P) { return F.eval(P.coords).is_zero(); }

// ---------------------------------------------------------------------------
// exact nonsingularity over Q

namespace {

// polynomial in Z whose coefficients are polynomials in x (the Y = 1 chart)
using ZPoly = std::vector<UniPoly>;

ZPoly chart_y1(const TernaryForm& G) {
    ZPoly r(G.degree() + 1);
    for (const auto& [e, c] : G.terms()) r[e[2]] = r[e[2]] + UniPoly::monomial(c.to_rational(), e[0]);
    return r;
}

UniPoly chart_y0_x1(const TernaryForm& G) {
    std::vector<Rational> v(G.degree() + 1, Rational(0));
    for (const auto& [e, c] : G.terms())
        if (e[1] == 0) v[e[2]] += c.to_rational();
    return UniPoly(v);
}

std::vector<Rational> eval_zpoly(const ZPoly& p, const Rational& x) {
    std::vector<Rational> v;
    for (const auto& c : p) v.push_back(c.eval(x));
    return v;
}

UniPoly resultant_in_x(const ZPoly& f, const ZPoly& g) {
    int m = (int)f.size() - 1;
    int n = (int)g.size() - 1;
    int bound = 0;
    for (int i = 0; i <= m; ++i) bound = std::max(bound, f[i].degree() + (m - i));
    int bound2 = 0;
    for (int i = 0; i <= n; ++i) bound2 = std::max(bound2, g[i].degree() + (n - i));
    int points = n * bound + m * bound2 + 1;
    std::vector<Rational> xs, ys;
    for (int k = 0; k < points; ++k) {
        Rational x(k);
        xs.push_back(x);
        ys.push_back(sylvester_resultant(eval_zpoly(f, x), m, eval_zpoly(g, x), n));
    }
    return interpolate(xs, ys);
}

// arithmetic in A[Z], A = Q[x]/(h)
struct D5 {
    static UniPoly red(const UniPoly& a, const UniPoly& h) { return divmod(a, h).second; }

    static ZPoly reduce(ZPoly f, const UniPoly& h) {
        for (auto& c : f) c = red(c, h);
        while (!f.empty() && f.back().is_zero()) f.pop_back();
        return f;
    }

    static UniPoly inverse(const UniPoly& a, const UniPoly& h) {
        UniPoly g, s, t;
        extended_gcd(a, h, g, s, t);
        return red(s, h);
    }

    // remainder of f by g, lc(g) invertible mod h
    static ZPoly rem(ZPoly f, const ZPoly& g, const UniPoly& h) {
        UniPoly il = inverse(g.back(), h);
        int dg = (int)g.size() - 1;
        while ((int)f.size() - 1 >= dg && !f.empty()) {
            UniPoly t = red(f.back() * il, h);
            int off = (int)f.size() - 1 - dg;
            for (int j = 0; j <= dg; ++j) f[off + j] = red(f[off + j] - t * g[j], h);
            f.pop_back();
            while (!f.empty() && f.back().is_zero()) f.pop_back();
        }
        return f;
    }

    // gcd over each component of h; calls out(h_i, g_i)
    template <class Out>
    static void gcd(const UniPoly& h, ZPoly f, ZPoly g, Out&& out) {
        f = reduce(std::move(f), h);
        g = reduce(std::move(g), h);
        for (;;) {
            if (g.empty()) {
                if (f.empty()) {
                    out(h, f);
                    return;
                }
                UniPoly c = poly_gcd(f.back(), h);
                if (c.degree() == 0) {
                    out(h, f);
                    return;
                }
                UniPoly h2 = divmod(h, c).first;
                gcd(c, f, g, out);
                gcd(h2, f, g, out);
                return;
            }
            UniPoly c = poly_gcd(g.back(), h);
            if (c.degree() > 0) {
                UniPoly h2 = divmod(h, c).first;
                gcd(c, f, g, out);
                gcd(h2, f, g, out);
                return;
            }
            ZPoly r = rem(std::move(f), g, h);
            f = std::move(g);
            g = std::move(r);
        }
    }
};

bool common_root_over_components(const UniPoly& h, const std::vector<ZPoly>& polys, size_t idx, const ZPoly& acc) {
    if (idx == polys.size()) {
        // acc empty means identically zero along the component
        return acc.empty() || acc.size() >= 2;
    }
    bool found = false;
    D5::gcd(h, acc, polys[idx], [&](const UniPoly& hi, const ZPoly& gi) {
        if (found) return;
        if (common_root_over_components(hi, polys, idx + 1, gi)) found = true;
    });
    return found;
}

std::vector<std::pair<int, int>> shear_candidates() {
    std::vector<std::pair<int, int>> c;
    for (int r = 1; r <= 20; ++r)
        for (int i = -r; i <= r; ++i)
            for (int j = -r; j <= r; ++j)
                if (std::max(std::abs(i), std::abs(j)) == r) c.emplace_back(i, j);
    return c;
}

}  // namespace

bool is_nonsingular(const TernaryForm& F0) {
    if (!F0.is_rational()) throw Error(ErrorKind::UnsupportedCoefficientField, "is_nonsingular needs Q coefficients");
    int d = F0.degree();
    if (d < 3 || d > 6) throw Error(ErrorKind::DegreeTooLarge, "is_nonsingular supports degree 3..6, got " + std::to_string(d));
    NumberField Q = NumberField::rationals();
    TernaryForm F = F0.coerce(Q);
    TernaryForm FX = F.partial(0), FY = F.partial(1), FZ = F.partial(2);

    TernaryForm G;
    bool found = false;
    for (auto [k1, k2] : shear_candidates()) {
        std::array<NFElement, 3> p{NFElement(Q, Rational(k1)), NFElement(Q, Rational(k2)), NFElement(Q, Rational(1))};
        NFElement gx = FX.eval(p), gy = FY.eval(p), gz = FZ.eval(p);
        if (gx.is_zero() && gy.is_zero() && gz.is_zero()) return false;  // singular at (k1:k2:1)
        if (gx.is_zero() || gy.is_zero() || F.eval(p).is_zero()) continue;
        Matrix3 M = mat_identity(Q);
        M[2] = NFElement(Q, Rational(k1));
        M[5] = NFElement(Q, Rational(k2));
        G = substitute_linear(F, M);
        found = true;
        break;
    }
    if (!found) throw Error(ErrorKind::LimitExceeded, "no admissible coordinate change found");

    TernaryForm GX = G.partial(0), GY = G.partial(1), GZ = G.partial(2);
    // Y = 0: points (1:0:z)
    {
        UniPoly g = poly_gcd(poly_gcd(chart_y0_x1(GX), chart_y0_x1(GY)), chart_y0_x1(GZ));
        if (g.degree() >= 1) return false;
    }
    ZPoly px = chart_y1(GX), py = chart_y1(GY), pz = chart_y1(GZ);
    for (auto* p : {&px, &py, &pz}) p->resize(d);  // formal degree d-1 in Z
    UniPoly R1 = resultant_in_x(px, py);
    UniPoly R2 = resultant_in_x(px, pz);
    if (R1.is_zero() || R2.is_zero()) return false;
    UniPoly g = poly_gcd(R1, R2);
    if (g.degree() < 1) return true;
    UniPoly h = squarefree_kernel(g);
    auto strip = [](ZPoly p) {
        while (!p.empty() && p.back().is_zero()) p.pop_back();
        return p;
    };
    std::vector<ZPoly> polys{strip(py), strip(pz)};
    return !common_root_over_components(h, polys, 0, strip(px));
}

// ---------------------------------------------------------------------------
// modular checks

namespace {

struct ModForm {
    std::vector<std::pair<Exponent, uint64_t>> terms;
};

uint64_t eval_mod(const ModForm& f, const uint64_t* v, uint64_t p) {
    uint64_t acc = 0;
    for (const auto& [e, c] : f.terms) {
        uint64_t t = c;
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < e[i]; ++k) t = t * v[i] % p;
        acc = (acc + t) % p;
    }
    return acc;
}

std::vector<std::array<uint64_t, 3>> search_singular(const std::array<ModForm, 4>& f, uint64_t p, bool stop_at_first) {
    std::vector<std::array<uint64_t, 3>> out;
    auto test = [&](uint64_t x, uint64_t y, uint64_t z) {
        uint64_t v[3] = {x, y, z};
        for (int i = 0; i < 4; ++i)
            if (eval_mod(f[i], v, p)) return;
        out.push_back({x, y, z});
    };
    for (uint64_t x = 0; x < p; ++x)
        for (uint64_t y = 0; y < p; ++y) {
            test(x, y, 1);
            if (stop_at_first && !out.empty()) return out;
        }
    for (uint64_t x = 0; x < p; ++x) test(x, 1, 0);
    test(1, 0, 0);
    return out;
}

bool to_mod_form(const TernaryForm& F, uint64_t p, const std::optional<uint64_t>& root, ModForm& out) {
    out.terms.clear();
    for (const auto& [e, c] : F.terms()) {
        uint64_t acc = 0, rp = 1;
        for (const auto& q : c.coeffs()) {
            uint64_t v;
            if (!modp::reduce(q, p, v)) return false;
            acc = (acc + v * rp) % p;
            if (root) rp = rp * *root % p;
        }
        if (acc) out.terms.emplace_back(e, acc);
    }
    return true;
}

}  // namespace

std::vector<std::array<uint64_t, 3>> singular_points_mod_p(const TernaryForm& F, uint64_t p) {
    if (!F.is_rational()) throw Error(ErrorKind::UnsupportedCoefficientField, "singular_points_mod_p needs Q coefficients");
    std::array<ModForm, 4> f;
    TernaryForm forms[4] = {F, F.partial(0), F.partial(1), F.partial(2)};
    for (int i = 0; i < 4; ++i)
        if (!to_mod_form(forms[i], p, std::nullopt, f[i]))
            throw Error(ErrorKind::DivisionByZero, "prime divides a denominator");
    return search_singular(f, p, false);
}

bool modular_nonsingularity_heuristic(const TernaryForm& F, int prime_count) {
    const NumberField& K = F.field();
    TernaryForm forms[4] = {F, F.partial(0), F.partial(1), F.partial(2)};
    int used = 0;
    for (uint64_t p = 53; used < prime_count && p < 2000; p += 2) {
        if (!is_prime_u64(p)) continue;
        // a root of the modulus mod p
        std::optional<uint64_t> root;
        if (K.degree() > 1) {
            modp::Poly m;
            bool ok = true;
            for (const auto& c : K.modulus().coeffs()) {
                uint64_t v;
                if (!modp::reduce(c, p, v)) ok = false;
                m.push_back(v);
            }
            if (!ok) continue;
            for (uint64_t r = 0; r < p && !root; ++r) {
                uint64_t v = 0;
                for (size_t i = m.size(); i-- > 0;) v = (v * r + m[i]) % p;
                if (v == 0) root = r;
            }
            if (!root) continue;
        }
        std::array<ModForm, 4> f;
        bool ok = true;
        for (int i = 0; i < 4 && ok; ++i) ok = to_mod_form(forms[i], p, root, f[i]);
        if (!ok || f[0].terms.empty()) continue;
        if (!search_singular(f, p, true).empty()) return false;
        ++used;
    }
    return used == prime_count;
}

}  // namespace bq
