#include "bq/json_io.hpp"

#include <fstream>
#include <sstream>

#include "bq/error.hpp"

namespace bq {

json to_json(const Rational& q) { return q.get_str(); }

json to_json(const NFElement& x) { return x.to_string(); }

json to_json(const ProjPoint& P) {
    return json{{"coords", {P.coords[0].to_string(), P.coords[1].to_string(), P.coords[2].to_string()}},
                {"field", P.coords[0].field().label()},
                {"text", P.to_string()}};
}

json to_json(const ProjectiveTransformation& M) {
    json m = json::array();
    for (const auto& e : M.matrix()) m.push_back(e.to_string());
    return json{{"field", M.field().label()}, {"matrix", m}};
}

json to_json(const TernaryForm& F) {
    json terms = json::array();
    for (const auto& [e, c] : F.terms()) terms.push_back({e[0], e[1], e[2], c.to_string()});
    return json{{"form", F.to_string()}, {"field", F.field().label()}, {"degree", F.degree()}, {"terms", terms}};
}

json to_json(const PlaneCurve& C) {
    json j = to_json(C.form);
    j["genus"] = C.genus;
    j["nonsingularity"] = status_name(C.status);
    return j;
}

json to_json(const WeierstrassCurve& E) {
    return json{{"equation", E.to_string()},
                {"a", {E.a1.get_str(), E.a2.get_str(), E.a3.get_str(), E.a4.get_str(), E.a6.get_str()}},
                {"j", j_invariant(E).get_str()}};
}

json to_json(const ECPoint& P) {
    if (P.infinity) return "O";
    return json{P.x.get_str(), P.y.get_str()};
}

json to_json(const NonTorsionCertificate& c) {
    json mult = json::array();
    for (const auto& [n, P] : c.multiples) mult.push_back({{"n", n}, {"point", to_json(P)}});
    return json{{"curve", to_json(c.curve)},
                {"point", to_json(c.point)},
                {"multiples_checked", mult},
                {"conclusion", "non-torsion: no nP = O for n <= 12 (Mazur bound)"}};
}

json to_json(const RankVerdict& v) {
    json pts = json::array();
    for (const auto& P : v.points) pts.push_back(to_json(P));
    json j{{"verdict", v.verdict}, {"height_bound", v.height_bound}, {"points", pts}};
    if (v.certificate) j["certificate"] = to_json(*v.certificate);
    return j;
}

json to_json(const FixedLocusReport& r) {
    json pts = json::array();
    for (const auto& [P, m] : r.axis_points) pts.push_back({{"point", to_json(P)}, {"multiplicity", m}});
    return json{{"axis_restriction", r.axis_restriction},
                {"axis_points", pts},
                {"axis_count", r.axis_count},
                {"isolated_point", to_json(r.isolated_point)},
                {"isolated_point_on_curve", r.isolated_point_on_curve},
                {"total_count", r.total_count},
                {"verdict", r.verdict}};
}

json to_json(const QuotientChain& c) {
    json steps = json::array();
    for (const auto& s : c.steps) steps.push_back({{"kind", s.kind_name()}, {"substitution", s.describe()}});
    return steps;
}

json to_json(const GenusOneQuarticModel& m) {
    json q = json::array();
    for (const auto& c : m.q) q.push_back(c.to_string());
    return json{{"equation", m.to_string()}, {"field", m.field.label()}, {"coefficients_low_first", q}};
}

json to_json(const QuotientResult& r) {
    json j{{"status", r.status}, {"model", to_json(r.model)}, {"jacobian_j", r.jacobian_j.to_string()}};
    if (r.jacobian) j["jacobian"] = to_json(*r.jacobian);
    if (r.E) {
        j["weierstrass"] = to_json(*r.E);
        j["j"] = j_invariant(*r.E).get_str();
        j["method"] = r.method;
    }
    j["chain"] = to_json(r.chain);
    return j;
}

json to_json(const AdmissibilityReport& r) {
    return json{{"admissible", r.admissible}, {"conditions", r.conditions}, {"violated", r.violated}};
}

json to_json(const QuadraticPoint& q) {
    json j{{"D", q.D.get_str()}, {"D_normalized", q.d_normalized}, {"point", to_json(q.point)}, {"conjugate", to_json(q.conjugate)}};
    if (q.source == QuadraticPoint::Source::Line)
        j["source"] = {{"kind", "line"}, {"line", {q.line[0].get_str(), q.line[1].get_str(), q.line[2].get_str()}}};
    else
        j["source"] = {{"kind", "pullback"}, {"chain", "Z6_REP"}, {"n", q.n}, {"E_point", to_json(q.ec)}};
    return j;
}

json to_json(const QuadraticFieldReport& r) {
    json rat = json::array(), quad = json::array(), ds = json::array();
    for (const auto& p : r.rational_points) rat.push_back(to_json(p));
    for (const auto& q : r.quadratic_points) quad.push_back(to_json(q));
    for (const auto& d : r.distinct_D) ds.push_back(d.get_str());
    return json{{"schema", kReportSchema},
                {"curve", r.curve},
                {"height_bound", r.height_bound},
                {"lines_scanned", r.lines_scanned},
                {"lines_skipped", r.lines_skipped},
                {"rational_points", rat},
                {"quadratic_points", quad},
                {"distinct_D", ds}};
}

json to_json(const PullbackPoint& p) {
    json j{{"n", p.n}, {"E_point", to_json(p.ec)}, {"rational", p.rational}};
    if (p.rational)
        j["point"] = to_json(p.rational_point);
    else
        j["quadratic_point"] = to_json(p.quadratic);
    return j;
}

json error_json(const std::exception& e) {
    json j{{"error", "Error"}, {"message", e.what()}};
    if (auto* be = dynamic_cast<const Error*>(&e)) j["error"] = error_kind_name(be->kind());
    return j;
}

TernaryForm curve_from_json(const json& j) {
    if (j.is_string()) return TernaryForm::parse(j.get<std::string>());
    if (!j.is_object()) throw Error(ErrorKind::ParseError, "curve must be a string or an object");
    NumberField K = j.contains("field") ? NumberField::from_label(j.at("field").get<std::string>()) : NumberField::rationals();
    if (j.contains("form")) return TernaryForm::parse(j.at("form").get<std::string>(), K);
    if (!j.contains("terms")) throw Error(ErrorKind::ParseError, "curve object needs \"form\" or \"terms\"");
    PolyTerms t;
    int degree = -1;
    for (const auto& term : j.at("terms")) {
        if (!term.is_array() || term.size() != 4) throw Error(ErrorKind::ParseError, "term must be [i, j, k, coefficient]");
        Exponent e{term[0].get<int>(), term[1].get<int>(), term[2].get<int>()};
        NFElement c = term[3].is_string() ? parse_element(term[3].get<std::string>(), K) : NFElement(K, Rational(term[3].get<long>()));
        if (degree < 0) degree = e[0] + e[1] + e[2];
        if (!c.is_zero()) t[e] = t.count(e) ? t[e] + c : c;
    }
    if (j.contains("degree")) degree = j.at("degree").get<int>();
    if (degree < 0) throw Error(ErrorKind::ParseError, "empty term list");
    return TernaryForm(K, degree, t);
}

TernaryForm curve_from_text(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (text[first] == '{' || text[first] == '"')) {
        try {
            return curve_from_json(json::parse(text));
        } catch (const json::exception& e) {
            throw Error(ErrorKind::ParseError, e.what());
        }
    }
    std::string s = text;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    return TernaryForm::parse(s);
}

ProjectiveTransformation matrix_from_json(const json& j, const NumberField& fallback) {
    NumberField K = fallback;
    const json* m = &j;
    if (j.is_object()) {
        if (j.contains("field")) K = NumberField::from_label(j.at("field").get<std::string>());
        m = &j.at("matrix");
    }
    if (!m->is_array()) throw Error(ErrorKind::ParseError, "matrix must be an array of 9 entries");
    std::vector<std::string> entries;
    for (const auto& e : *m) entries.push_back(e.is_string() ? e.get<std::string>() : e.dump());
    return ProjectiveTransformation::parse(entries, K);
}

ProjectiveTransformation matrix_from_text(const std::string& text, const NumberField& fallback) {
    try {
        return matrix_from_json(json::parse(text), fallback);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace bq
