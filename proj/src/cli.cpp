#include "cycalc/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>

#include "cycalc/fermat.hpp"
#include "cycalc/invariants.hpp"
#include "cycalc/riemann_roch.hpp"
#include "cycalc/tables.hpp"
#include "cycalc/wps.hpp"

namespace cycalc {

using nlohmann::json;

namespace {

constexpr const char* kSchema = "cycalc/1";

std::string fmt_double(double v) {
    if (v == 0.0) v = 0.0;  // normalize -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string fmt_complex(const std::complex<double>& z) {
    return fmt_double(z.real()) + (z.imag() < 0 ? "" : "+") + fmt_double(z.imag()) + "i";
}

json point_json(const std::vector<Cyc>& exact, const std::vector<std::complex<double>>& approx) {
    json p;
    if (!exact.empty()) {
        json ex = json::array();
        for (const auto& c : exact) ex.push_back(c.str());
        p["exact"] = ex;
    }
    json ap = json::array();
    for (const auto& z : approx) ap.push_back(fmt_complex(z));
    p["approx"] = ap;
    return p;
}

long long parse_int_list_entry(const std::string& s) { return std::stoll(s); }

std::vector<long long> parse_int_list(const std::string& text) {
    std::vector<long long> out;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        out.push_back(parse_int_list_entry(text.substr(pos, comma - pos)));
        pos = comma + 1;
        if (comma == text.size()) break;
    }
    return out;
}

std::vector<int> parse_signs(const std::string& text) {
    std::vector<int> out;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        std::string tok = text.substr(pos, comma - pos);
        if (tok == "+" || tok == "+1" || tok == "1")
            out.push_back(1);
        else if (tok == "-" || tok == "-1")
            out.push_back(-1);
        else
            throw CalcError("bad-involution", "sign token '" + tok + "' is not +/-");
        pos = comma + 1;
        if (comma == text.size()) break;
    }
    return out;
}

// ---------------------------------------------------------------------- //

CommandResult run_theorem_sixteen() {
    DerivationTrace trace = sixteen_point_derivation();
    CommandResult res;
    res.payload["schema"] = kSchema;
    res.payload["k"] = trace.k;
    res.payload["trace"] = trace.lines;
    std::string text;
    for (const auto& line : trace.lines) text += line + "\n";
    res.human_text = text;
    return res;
}

CommandResult run_tables_validate() {
    auto rows = load_dataset();
    ValidationReport rep = validate_all(rows);
    CommandResult res;
    res.payload["schema"] = kSchema;
    res.payload["rows"] = rows.size();
    json checks = json::array();
    std::string text;
    for (const auto& c : rep.checks) {
        json cj;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        cj["failures"] = c.failures;
        checks.push_back(cj);
        text += (c.pass ? "PASS " : "FAIL ") + c.name + "\n";
        for (const auto& f : c.failures) text += "     " + f + "\n";
    }
    res.payload["checks"] = checks;
    bool ok = rep.all_pass();
    res.payload["pass"] = ok;
    text += ok ? "all checks passed\n" : "validation failed\n";
    res.human_text = text;
    res.exit_code = ok ? 0 : 1;
    return res;
}

json row_json(const TableRow& r) {
    json j;
    j["family"] = to_string(r.family);
    j["N"] = r.N;
    j["s"] = r.s;
    j["h3"] = r.h3;
    j["hc2"] = r.hc2;
    json evs = json::array();
    for (const auto& ev : r.e_values) {
        json e;
        e["value"] = ev.value;
        e["starred"] = ev.starred;
        evs.push_back(e);
    }
    j["e"] = evs;
    j["refs"] = r.refs;
    return j;
}

CommandResult run_tables_query(const QueryFilter& filter) {
    auto rows = query(load_dataset(), filter);
    CommandResult res;
    res.payload["schema"] = kSchema;
    json out = json::array();
    for (const auto& r : rows) out.push_back(row_json(r));
    res.payload["rows"] = out;
    res.payload["count"] = rows.size();
    res.human_text = render_dataset_tsv(rows);  // text and tsv coincide here
    return res;
}

CommandResult run_invariants(const std::string& d_text, long long s, long long n,
                             const std::string& fano_index, bool hy_double,
                             const std::string& euler_y, const std::string& euler_s) {
    QuotientData q;
    q.d = Rational::parse(d_text);
    q.N = n;
    q.s = s > 0 ? s : s_from_fano_index(Rational::parse(fano_index), hy_double);
    if (!euler_y.empty()) q.euler_Y = Rational::parse(euler_y);
    std::optional<Rational> eS;
    if (!euler_s.empty()) eS = Rational::parse(euler_s);
    CoverInvariants inv = cover_invariants(q, eS);
    CommandResult res;
    res.payload["schema"] = kSchema;
    res.payload["h3"] = inv.h3.str();
    res.payload["hc2"] = inv.hc2.str();
    std::string text = "H^3 = " + inv.h3.str() + "\nH.c2 = " + inv.hc2.str() + "\n";
    if (inv.euler) {
        res.payload["e"] = inv.euler->str();
        res.payload["euler_s"] = inv.euler_S->str();
        text += "e(S) = " + inv.euler_S->str() + "\ne = " + inv.euler->str() + "\n";
    }
    res.human_text = text;
    return res;
}

CommandResult run_fermat(long long ambient, const std::string& eqs_text,
                         const std::string& signs_text, bool list_points) {
    FermatSystem sys;
    sys.ambient_dim = (size_t)ambient;
    sys.signs = parse_signs(signs_text);
    sys.equations = parse_fermat_equations(eqs_text, sys.coord_count());
    FermatCount fc = count_fixed_points(sys);
    CommandResult res;
    res.payload["schema"] = kSchema;
    res.payload["identity_involution"] = fc.identity_involution;
    res.payload["count"] = fc.count;
    json strata = json::array();
    for (const auto& st : fc.strata) {
        json sj;
        sj["support"] = st.support;
        sj["count"] = st.count;
        sj["bezout"] = st.bezout;
        sj["exact"] = st.exact_mode;
        strata.push_back(sj);
    }
    res.payload["strata"] = strata;
    json certs = json::array();
    for (const auto& p : fc.points) {
        json cj = point_json(p.exact, p.approx);
        cj["stratum"] = p.stratum;
        cj["jacobian_full_rank"] = p.jacobian_full_rank;
        cj["residual"] = fmt_double(p.max_residual);
        certs.push_back(cj);
    }
    if (list_points) res.payload["points"] = certs;
    res.payload["certificates"] = json::object();
    res.payload["certificates"]["all_jacobians_full_rank"] = true;
    res.payload["certificates"]["max_residual"] =
        fmt_double(fc.points.empty()
                       ? 0.0
                       : std::max_element(fc.points.begin(), fc.points.end(),
                                          [](const FermatPoint& a, const FermatPoint& b) {
                                              return a.max_residual < b.max_residual;
                                          })
                             ->max_residual);
    std::string text;
    if (fc.identity_involution) {
        text = "involution is the identity on P^n; fixed locus is the whole variety\n";
    } else {
        text = "count = " + std::to_string(fc.count) + "\n";
        for (const auto& st : fc.strata)
            text += "  stratum size " + std::to_string(st.support.size()) + ": " +
                    std::to_string(st.count) + " points (bezout " + std::to_string(st.bezout) +
                    ", " + (st.exact_mode ? "exact" : "numeric") + ")\n";
    }
    res.human_text = text;
    return res;
}

json stratum_json(const WeightedSpace& space, const FixedStratum& s) {
    json j;
    json sup = json::array();
    for (int i : s.support) sup.push_back(space.coordinate_names[i]);
    j["support"] = sup;
    j["witness"] = "zeta_" + std::to_string(s.witness_order) + "^" +
                   std::to_string(s.witness_num);
    j["dimension"] = s.dimension;
    j["kind"] = to_string(s.kind);
    return j;
}

CommandResult run_fixlocus(const std::string& weights_text, const std::string& signs_text,
                           const std::string& coords_text, long long degree,
                           const std::string& poly_text, bool verify_quotient,
                           const std::string& check_point) {
    WeightedSpace space;
    space.weights = parse_int_list(weights_text);
    space.coordinate_names = coords_text.empty()
                                 ? default_coordinate_names(space.weights.size())
                                 : [&] {
                                       std::vector<std::string> names;
                                       size_t pos = 0;
                                       while (pos <= coords_text.size()) {
                                           size_t comma = coords_text.find(',', pos);
                                           if (comma == std::string::npos) comma = coords_text.size();
                                           names.push_back(coords_text.substr(pos, comma - pos));
                                           pos = comma + 1;
                                           if (comma == coords_text.size()) break;
                                       }
                                       return names;
                                   }();
    InvolutionSpec inv{parse_signs(signs_text)};
    space.validate();
    inv.validate(space);

    CommandResult res;
    res.payload["schema"] = kSchema;
    res.payload["weights"] = space.weights;
    res.payload["well_formed"] = space.well_formed();
    json sing = json::array();
    for (const auto& [idx, type] : coordinate_singularities(space)) {
        json sj;
        sj["coordinate"] = space.coordinate_names[idx];
        sj["type"] = type.str();
        sing.push_back(sj);
    }
    res.payload["singular_points"] = sing;

    std::string text;
    if (poly_text.empty()) {
        FixedLocus locus = fixed_locus(space, inv);
        res.payload["fixes_everything"] = locus.fixes_everything;
        json strata = json::array();
        for (const auto& s : locus.strata) strata.push_back(stratum_json(space, s));
        res.payload["strata"] = strata;
        text += "strata: " + std::to_string(locus.strata.size()) + "\n";
    } else {
        QhPolynomial poly = QhPolynomial::parse(poly_text, space.coordinate_names);
        HypersurfaceFixedLocus hfl = hypersurface_fixed_locus(space, inv, degree, poly);
        res.payload["fixes_everything"] = hfl.fixes_everything;
        res.payload["surface_count"] = hfl.surface_count;
        res.payload["isolated_point_count"] = hfl.isolated_point_count;
        json strata = json::array();
        for (const auto& ds : hfl.strata) {
            json sj = stratum_json(space, ds.stratum);
            sj["contained_in_hypersurface"] = ds.contained_in_hypersurface;
            sj["restricted_equation"] = ds.restricted_equation;
            json pts = json::array();
            for (const auto& p : ds.points) {
                json pj = point_json(p.exact, p.approx);
                pj["simple"] = p.simple;
                pj["residual"] = fmt_double(p.residual);
                pts.push_back(pj);
            }
            sj["points"] = pts;
            strata.push_back(sj);
        }
        res.payload["strata"] = strata;
        text += "surfaces: " + std::to_string(hfl.surface_count) +
                ", isolated points: " + std::to_string(hfl.isolated_point_count) + "\n";

        if (!check_point.empty()) {
            std::vector<Rational> pt;
            for (long long v : parse_int_list(check_point)) pt.emplace_back(v);
            if (pt.size() != space.weights.size())
                throw CalcError("bad-point", "check point arity mismatch");
            std::vector<Rational> rho = apply_involution(inv, pt);
            bool fixed = projectively_equal(space, pt, rho);
            std::vector<Rational> padded = pt;
            Rational value = poly.eval_rational(padded);
            json cj;
            cj["on_hypersurface"] = value.is_zero();
            cj["equation_value"] = value.str();
            cj["fixed_by_involution"] = fixed;
            res.payload["check_point"] = cj;
            text += "check point: equation value " + value.str() +
                    (fixed ? ", fixed" : ", not fixed") + "\n";
        }
        if (verify_quotient) {
            QuotientProjectionReport rep = verify_quotient_projection(space, inv, degree, poly);
            json qj;
            qj["target_weights"] = rep.target.weights;
            json qsing = json::array();
            for (const auto& [idx, type] : rep.target_singularities) {
                json sj;
                sj["coordinate"] = rep.target.coordinate_names[idx];
                sj["type"] = type.str();
                qsing.push_back(sj);
            }
            qj["target_singular_points"] = qsing;
            json qchecks = json::array();
            for (const auto& c : rep.checks) {
                json cj;
                cj["name"] = c.name;
                cj["pass"] = c.pass;
                cj["detail"] = c.detail;
                qchecks.push_back(cj);
                text += (c.pass ? "PASS " : "FAIL ") + c.name + ": " + c.detail + "\n";
            }
            qj["checks"] = qchecks;
            qj["pass"] = rep.all_pass();
            res.payload["quotient_projection"] = qj;
            if (!rep.all_pass()) res.exit_code = 1;
        }
    }
    res.human_text = text;
    return res;
}

}  // namespace

const std::vector<Route>& routing_table() {
    static const std::vector<Route> table = {
        {"triple_product", "invariants compute"},
        {"pullback", "theorem sixteen"},
        {"pushforward_cover", "theorem sixteen"},
        {"canonical_chain", "theorem sixteen"},
        {"c2_restriction", "theorem sixteen"},
        {"chi_of_resolution", "theorem sixteen"},
        {"solve_isolated_count", "theorem sixteen"},
        {"minus_K_dot_c2", "invariants compute"},
        {"h3_of_cover", "invariants compute"},
        {"hc2_of_cover", "invariants compute"},
        {"surface_euler", "invariants compute"},
        {"euler_of_cover", "invariants compute"},
        {"s_from_fano_index", "invariants compute"},
        {"fixed_locus", "fixlocus wps"},
        {"singularity_type", "fixlocus wps"},
        {"hypersurface_fixed_locus", "fixlocus wps"},
        {"verify_quotient_projection", "fixlocus wps"},
        {"count_fixed_points", "fermat count"},
        {"list_fixed_points", "fermat count"},
        {"load_dataset", "tables validate"},
        {"validate_all", "tables validate"},
        {"query", "tables query"},
    };
    return table;
}

CommandResult dispatch(const std::vector<std::string>& args) {
    CLI::App app{"exact divisor calculus for Calabi-Yau double covers of Q-Fano threefolds"};
    app.require_subcommand(1);
    std::string format = "text";

    // theorem sixteen
    auto* theorem = app.add_subcommand("theorem", "canonical-class derivations");
    theorem->require_subcommand(1);
    auto* sixteen = theorem->add_subcommand("sixteen",
                                            "derive the isolated fixed-point count");
    sixteen->add_option("--format", format, "text|json");

    // tables validate / query
    auto* tables = app.add_subcommand("tables", "classification dataset");
    tables->require_subcommand(1);
    auto* validate = tables->add_subcommand("validate", "run every dataset check");
    validate->add_option("--format", format, "text|json");
    auto* tquery = tables->add_subcommand("query", "filter dataset rows");
    std::string family_text;
    long long qn = -1, qs = -1, h3min = -1, h3max = -1, hc2min = -1, hc2max = -1;
    tquery->add_option("--family", family_text, "smooth_fano|fano_enriques|index_half|p1112");
    tquery->add_option("--n", qn, "half-point count");
    tquery->add_option("--s", qs, "involution index");
    tquery->add_option("--h3-min", h3min);
    tquery->add_option("--h3-max", h3max);
    tquery->add_option("--hc2-min", hc2min);
    tquery->add_option("--hc2-max", hc2max);
    tquery->add_option("--format", format, "text|json|tsv");

    // invariants compute
    auto* invariants = app.add_subcommand("invariants", "cover invariants");
    invariants->require_subcommand(1);
    auto* compute = invariants->add_subcommand("compute", "H^3, H.c2 and e of the double cover");
    std::string d_text, fano_index, euler_y, euler_s;
    long long cs = 0, cn = 0;
    bool hy_double = false;
    compute->add_option("--d", d_text, "|H'^3| as p/q")->required();
    compute->add_option("--s", cs, "involution index");
    compute->add_option("--fano-index", fano_index, "Fano index r_Y/2 (alternative to --s)");
    compute->add_flag("--hy-double", hy_double, "primitive Cartier class is 2H'");
    compute->add_option("--n", cn, "half-point count")->required();
    compute->add_option("--euler-y", euler_y, "e(Y), exact rational");
    compute->add_option("--euler-s", euler_s, "e(S) override, exact rational");
    compute->add_option("--format", format, "text|json");

    // fixlocus wps
    auto* fixlocus = app.add_subcommand("fixlocus", "fixed loci of diagonal involutions");
    fixlocus->require_subcommand(1);
    auto* wps = fixlocus->add_subcommand("wps", "weighted projective hypersurface");
    std::string weights_text, signs_text, coords_text, poly_text, check_point;
    long long degree = 0;
    bool verify_quotient = false;
    wps->add_option("--weights", weights_text, "comma-separated weights")->required();
    wps->add_option("--signs", signs_text, "comma-separated +/-")->required();
    wps->add_option("--coords", coords_text, "coordinate names (default x,y,z,w,t)");
    wps->add_option("--degree", degree, "hypersurface degree");
    wps->add_option("--poly", poly_text, "hypersurface equation");
    wps->add_flag("--verify-quotient", verify_quotient, "run the projection checks");
    wps->add_option("--check-point", check_point, "integer point to test against the equation");
    wps->add_option("--format", format, "text|json");

    // fermat count
    auto* fermat = app.add_subcommand("fermat", "Fermat complete intersections");
    fermat->require_subcommand(1);
    auto* fcount = fermat->add_subcommand("count", "certified isolated fixed points");
    long long ambient = 0;
    std::string eqs_text, fsigns_text;
    bool list_points = false;
    fcount->add_option("--ambient", ambient, "n for P^n")->required();
    fcount->add_option("--eqs", eqs_text, "d:c0,..,cn;d2:c0,..")->required();
    fcount->add_option("--signs", fsigns_text, "comma-separated +/-")->required();
    fcount->add_flag("--list", list_points, "include the point list");
    fcount->add_option("--format", format, "text|json");

    std::vector<const char*> argv;
    argv.push_back("cycalc");
    for (const auto& a : args) argv.push_back(a.c_str());

    CommandResult res;
    try {
        app.parse((int)argv.size(), argv.data());
    } catch (const CLI::CallForHelp& e) {
        res.human_text = app.help();
        res.payload["schema"] = kSchema;
        return res;
    } catch (const CLI::ParseError& e) {
        res.exit_code = 2;
        res.human_text = std::string(e.what()) + "\n\n" + app.help();
        res.payload["schema"] = kSchema;
        res.payload["error"] = {{"code", "usage"}, {"message", e.what()}};
        return res;
    }

    try {
        if (sixteen->parsed())
            res = run_theorem_sixteen();
        else if (validate->parsed())
            res = run_tables_validate();
        else if (tquery->parsed()) {
            QueryFilter f;
            if (!family_text.empty()) f.family = family_from_string(family_text);
            if (tquery->count("--n")) f.N = qn;
            if (tquery->count("--s")) f.s = qs;
            if (tquery->count("--h3-min")) f.h3_min = h3min;
            if (tquery->count("--h3-max")) f.h3_max = h3max;
            if (tquery->count("--hc2-min")) f.hc2_min = hc2min;
            if (tquery->count("--hc2-max")) f.hc2_max = hc2max;
            res = run_tables_query(f);
        } else if (compute->parsed()) {
            if (cs <= 0 && fano_index.empty())
                throw CalcError("usage", "need --s or --fano-index");
            res = run_invariants(d_text, cs, cn, fano_index, hy_double, euler_y, euler_s);
        } else if (wps->parsed()) {
            if (!poly_text.empty() && degree <= 0)
                throw CalcError("usage", "--poly requires --degree");
            res = run_fixlocus(weights_text, signs_text, coords_text, degree, poly_text,
                               verify_quotient, check_point);
        } else if (fcount->parsed()) {
            res = run_fermat(ambient, eqs_text, fsigns_text, list_points);
        }
    } catch (const CalcError& e) {
        res.exit_code = 1;
        res.payload = json();
        res.payload["schema"] = kSchema;
        res.payload["error"] = {{"code", e.code()}, {"message", e.what()}};
        res.human_text = std::string("error [") + e.code() + "]: " + e.what() + "\n";
        return res;
    } catch (const std::exception& e) {
        res.exit_code = 1;
        res.payload = json();
        res.payload["schema"] = kSchema;
        res.payload["error"] = {{"code", "internal"}, {"message", e.what()}};
        res.human_text = std::string("error: ") + e.what() + "\n";
        return res;
    }

    if (format == "json") res.human_text = res.payload.dump(2) + "\n";
    return res;
}

}  // namespace cycalc
