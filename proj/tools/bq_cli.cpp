#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bq/error.hpp"
#include "bq/verify.hpp"

using namespace bq;

namespace {

bool g_human = false;

void render(const json& j, std::ostream& os, int indent) {
    std::string pad(indent * 2, ' ');
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            const json& v = it.value();
            if (v.is_structured() && !v.empty()) {
                os << pad << it.key() << ":\n";
                render(v, os, indent + 1);
            } else {
                os << pad << it.key() << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_object()) {
                os << pad << "-\n";
                render(v, os, indent + 1);
            } else if (v.is_array() && !v.empty() && !v.front().is_structured()) {
                os << pad << "- " << v.dump() << "\n";
            } else if (v.is_structured()) {
                os << pad << "-\n";
                render(v, os, indent + 1);
            } else {
                os << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    } else {
        os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

void emit(json j) {
    if (g_human) {
        render(j, std::cout, 0);
        std::cout << "\n";
    } else {
        std::cout << j.dump() << "\n";
    }
}

json envelope(const std::string& command) { return json{{"schema", kReportSchema}, {"command", command}}; }

// a path to an existing file, or the text itself
std::string file_or_inline(const std::string& s) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(s, ec)) return read_file(s);
    return s;
}

std::vector<Rational> rational_list(const std::string& s) {
    std::vector<Rational> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    return out;
}

WeierstrassCurve ec_from(const std::string& s) {
    auto v = rational_list(s);
    if (v.size() == 2) return WeierstrassCurve::short_form(v[0], v[1]);
    if (v.size() == 5) return WeierstrassCurve(v[0], v[1], v[2], v[3], v[4]);
    throw Error(ErrorKind::ParseError, "elliptic curve must be 'A,B' or 'a1,a2,a3,a4,a6'");
}

ECPoint point_from(const std::string& s) {
    if (s == "O") return ECPoint::at_infinity();
    auto v = rational_list(s);
    if (v.size() != 2) throw Error(ErrorKind::ParseError, "point must be 'x,y'");
    return ECPoint::affine(v[0], v[1]);
}

std::map<std::string, Rational> param_map(const std::vector<std::string>& ps) {
    std::map<std::string, Rational> m;
    for (const auto& p : ps) {
        auto eq = p.find('=');
        if (eq == std::string::npos) throw Error(ErrorKind::ParseError, "parameter must be name=value: " + p);
        m[p.substr(0, eq)] = parse_rational(p.substr(eq + 1));
    }
    return m;
}

json involution_list(const InvolutionCatalogEntry& e) {
    json a = json::array();
    for (size_t i = 0; i < e.involutions.size(); ++i) {
        json m = to_json(e.involutions[i]);
        m["name"] = e.names[i];
        a.push_back(m);
    }
    return a;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bielliptic quartics toolkit: families, involutions, quotients, elliptic curves and quadratic points"};
    app.require_subcommand(1);
    app.fallthrough();
    std::optional<uint64_t> seed;
    app.add_flag("--human", g_human, "render output for reading instead of JSON lines");
    app.add_option("--seed", seed, "override the sampling seeds of verify suites");

    std::string family_id;
    std::vector<std::string> params;
    auto* fam = app.add_subcommand("family", "instantiate a model family");
    fam->add_option("--id", family_id, "family id, e.g. Z6_REP")->required();
    fam->add_option("--param", params, "name=value (repeatable)");

    std::string curve, matrix, point_opt, group;
    auto* cls = app.add_subcommand("classify", "which catalog involutions fix a model, with fixed-point counts");
    cls->add_option("--curve", curve, "curve file or inline form")->required();

    auto* inv = app.add_subcommand("involutions", "catalog of bielliptic involutions for a stratum");
    inv->add_option("--group", group, "stratum label; omit to list labels");

    auto* fix = app.add_subcommand("fixed-points", "fixed locus of an involution on a curve");
    fix->add_option("--curve", curve, "curve file or inline form")->required();
    fix->add_option("--matrix", matrix, "matrix file or inline JSON")->required();

    auto* quo = app.add_subcommand("quotient", "quotient by an involution and Weierstrass reduction");
    quo->add_option("--curve", curve, "curve file or inline form")->required();
    quo->add_option("--matrix", matrix, "matrix file or inline JSON (default diag(1,1,-1))");
    quo->add_option("--point", point_opt, "rational point u,v on the quartic model");

    std::string ec, pt;
    long height = 0;
    auto* jinv = app.add_subcommand("jinv", "invariants of an elliptic curve");
    jinv->add_option("--curve", ec, "A,B or a1,a2,a3,a4,a6")->required();

    auto* tor = app.add_subcommand("torsion-cert", "non-torsion certificate via the Mazur bound");
    tor->add_option("--curve", ec, "A,B or a1,a2,a3,a4,a6")->required();
    tor->add_option("--point", pt, "x,y")->required();

    std::string twist_d;
    auto* tw = app.add_subcommand("twist", "quadratic twist by a square-free D");
    tw->add_option("--curve", ec, "a1,a2,a3,a4,a6 with a1 = a3 = 0, or A,B")->required();
    tw->add_option("--D", twist_d, "square-free integer")->required();

    auto* pts = app.add_subcommand("points", "naive-height point search");
    pts->add_option("--curve", ec, "A,B or a1,a2,a3,a4,a6")->required();
    pts->add_option("--height", height, "height bound H <= 10000")->required();

    bool quad_json = false;
    auto* qp = app.add_subcommand("quadpoints", "rational and quadratic points cut out by lines of bounded height");
    qp->add_option("--curve", curve, "curve file or inline form")->required();
    qp->add_option("--height", height, "line height bound H <= 200")->required();
    qp->add_flag("--json", quad_json, "JSON output (the default)");

    long n_max = 8;
    auto* pb = app.add_subcommand("pullback", "quadratic points from multiples of the base point on the quotient");
    pb->add_option("--family", family_id, "only Z6_REP")->required();
    pb->add_option("--param", params, "a=value")->required();
    pb->add_option("--n", n_max, "largest multiple (<= 20)");

    std::string suite = "all", config_path;
    auto* ver = app.add_subcommand("verify", "run the exact experiment suites");
    ver->add_option("suite", suite, "suite name or 'all'");
    ver->add_option("--config", config_path, "config file with seeds and sample counts");
    bool list_suites = false;
    ver->add_flag("--list", list_suites, "list suite names");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*fam) {
            FamilySpec s{parse_family_id(family_id), param_map(params)};
            json j = envelope("family");
            j["family"] = family_name(s.family_id);
            j["parameters"] = json::object();
            for (const auto& [k, v] : s.params) j["parameters"][k] = v.get_str();
            auto rep = check_admissibility(s);
            j["admissibility"] = to_json(rep);
            if (!rep.admissible) {
                j["error"] = "InadmissibleParameters";
                j["message"] = "violated condition " + rep.violated;
                emit(j);
                return 1;
            }
            PlaneCurve C = instantiate(s);
            j["curve"] = to_json(C);
            switch (s.family_id) {
                case FamilyId::Z6_REP:
                case FamilyId::Z6_TWIST:
                case FamilyId::G16_REP:
                case FamilyId::G16_DIAG_TWIST:
                case FamilyId::G16_NONDIAG_TWIST:
                case FamilyId::THM4: {
                    json a = json::array();
                    for (const auto& M : rational_bielliptic_involutions(s)) a.push_back(to_json(M));
                    j["rational_bielliptic_involutions"] = a;
                    break;
                }
                default:
                    break;
            }
            emit(j);
        } else if (*cls) {
            TernaryForm F = curve_from_text(file_or_inline(curve));
            PlaneCurve C = F.is_rational() ? PlaneCurve::make(F) : PlaneCurve::unchecked(F);
            json j = envelope("classify");
            j["curve"] = to_json(C);
            json found = json::array();
            for (const auto& label : catalog_labels()) {
                auto e = catalog(label);
                TernaryForm G;
                try {
                    G = F.coerce(e.field);
                } catch (const Error&) {
                    continue;
                }
                for (size_t i = 0; i < e.involutions.size(); ++i) {
                    auto r = is_invariant(G, e.involutions[i]);
                    if (!r.invariant) continue;
                    auto fl = fixed_locus(PlaneCurve::unchecked(G), e.involutions[i]);
                    found.push_back({{"stratum", label},
                                     {"involution", e.names[i]},
                                     {"scalar", r.scalar->to_string()},
                                     {"total_count", fl.total_count},
                                     {"verdict", fl.verdict}});
                }
            }
            j["invariant_involutions"] = found;
            emit(j);
        } else if (*inv) {
            json j = envelope("involutions");
            if (group.empty()) {
                j["groups"] = catalog_labels();
            } else {
                auto e = catalog(group);
                j["group"] = e.group_label;
                j["field"] = e.field.label();
                j["count"] = e.involutions.size();
                j["involutions"] = involution_list(e);
            }
            emit(j);
        } else if (*fix) {
            TernaryForm F = curve_from_text(file_or_inline(curve));
            ProjectiveTransformation M = matrix_from_text(file_or_inline(matrix), F.field());
            NumberField K = common_field(F.field(), M.field());
            PlaneCurve C = K.is_rationals() ? PlaneCurve::make(F) : PlaneCurve::unchecked(F.coerce(K));
            json j = envelope("fixed-points");
            j["curve"] = to_json(C);
            j["matrix"] = to_json(M);
            j["report"] = to_json(fixed_locus(C, M.coerce(K)));
            emit(j);
        } else if (*quo) {
            TernaryForm F = curve_from_text(file_or_inline(curve));
            NumberField Q = NumberField::rationals();
            ProjectiveTransformation M =
                matrix.empty() ? ProjectiveTransformation::diag(NFElement(Q, 1), NFElement(Q, 1), NFElement(Q, -1))
                               : matrix_from_text(file_or_inline(matrix), F.field());
            ReductionHint hint;
            if (!point_opt.empty()) {
                auto v = rational_list(point_opt);
                if (v.size() != 2) throw Error(ErrorKind::ParseError, "point must be 'u,v'");
                hint = ReductionHint::point(v[0], v[1]);
            }
            NumberField K = common_field(F.field(), M.field());
            json j = envelope("quotient");
            j["curve"] = to_json(F);
            j["result"] = to_json(quotient_via_conjugation(F.coerce(K), M.coerce(K), hint));
            emit(j);
        } else if (*jinv) {
            WeierstrassCurve E = ec_from(ec);
            auto inv_ = invariants(E);
            json j = envelope("jinv");
            j["curve"] = to_json(E);
            j["invariants"] = {{"b2", inv_.b2.get_str()}, {"b4", inv_.b4.get_str()}, {"b6", inv_.b6.get_str()},
                               {"b8", inv_.b8.get_str()}, {"c4", inv_.c4.get_str()}, {"c6", inv_.c6.get_str()},
                               {"discriminant", inv_.disc.get_str()}, {"j", inv_.j.get_str()}};
            emit(j);
        } else if (*tor) {
            WeierstrassCurve E = ec_from(ec);
            json j = envelope("torsion-cert");
            j["certificate"] = to_json(non_torsion_certificate(E, point_from(pt)));
            emit(j);
        } else if (*tw) {
            WeierstrassCurve E = ec_from(ec);
            Integer D(twist_d);
            WeierstrassCurve T = quadratic_twist(E, D);
            json j = envelope("twist");
            j["curve"] = to_json(E);
            j["D"] = D.get_str();
            j["twist"] = to_json(T);
            emit(j);
        } else if (*pts) {
            WeierstrassCurve E = ec_from(ec);
            json j = envelope("points");
            j["curve"] = to_json(E);
            j["result"] = to_json(rank_verdict(E, height));
            emit(j);
        } else if (*qp) {
            TernaryForm F = curve_from_text(file_or_inline(curve));
            json j = to_json(enumerate_points(F, height));
            j["command"] = "quadpoints";
            emit(j);
        } else if (*pb) {
            if (parse_family_id(family_id) != FamilyId::Z6_REP)
                throw Error(ErrorKind::InadmissibleParameters, "pullback is implemented for Z6_REP only");
            auto pm = param_map(params);
            if (!pm.count("a")) throw Error(ErrorKind::InadmissibleParameters, "missing parameter a");
            Rational a = pm.at("a");
            FamilySpec s{FamilyId::Z6_REP, {{"a", a}}};
            auto rep = check_admissibility(s);
            if (!rep.admissible) throw Error(ErrorKind::InadmissibleParameters, "violated condition " + rep.violated);
            auto r = chain_thm1(a);
            json j = envelope("pullback");
            j["curve"] = family_form(s).to_string();
            j["E"] = to_json(r.E);
            j["P"] = to_json(*r.P);
            j["chain"] = to_json(r.chain);
            json out = json::array();
            for (const auto& p : pullback_quadratic_points(a, n_max)) out.push_back(to_json(p));
            j["points"] = out;
            emit(j);
        } else if (*ver) {
            if (list_suites) {
                json j = envelope("verify");
                j["suites"] = suite_names();
                emit(j);
                return 0;
            }
            VerifyConfig cfg = VerifyConfig::load(config_path);
            cfg.seed_override = seed;
            bool all_pass = true;
            for (const auto& r : run_verify(suite, cfg)) {
                json j = envelope("verify");
                json body = r.to_json();
                for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
                emit(j);
                all_pass = all_pass && r.status == "pass";
            }
            return all_pass ? 0 : 1;
        }
    } catch (const std::exception& e) {
        emit(error_json(e));
        return 1;
    }
    return 0;
}
