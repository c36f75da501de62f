#include "mopkit/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "mopkit/analysis.hpp"
#include "mopkit/random_specs.hpp"

namespace mopkit {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : MopkitError {
    using MopkitError::MopkitError;
};

ComplexRational parse_value(const std::string& text) {
    auto v = parse_complex_rational(text);
    if (!v) throw UsageError("cannot parse rational value '" + text + "'");
    return *v;
}

MultiIndex parse_index(const std::string& text) {
    std::vector<int> entries;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            entries.push_back(std::stoi(item));
        } catch (...) {
            throw UsageError("cannot parse multi-index '" + text + "'");
        }
    }
    if (entries.empty()) throw UsageError("empty multi-index");
    return MultiIndex(entries);
}

FamilySpec parse_spec(const std::string& family_tag_text, const std::string& variant_text,
                      const std::string& params_json) {
    FamilySpec spec;
    auto fam = family_from_tag(family_tag_text);
    if (!fam) throw UsageError("unknown family '" + family_tag_text + "'");
    spec.family = *fam;
    auto var = variant_from_tag(variant_text);
    if (!var) throw UsageError("unknown variant '" + variant_text + "'");
    spec.variant = *var;
    json params;
    try {
        params = json::parse(params_json);
    } catch (const std::exception& e) {
        throw UsageError(std::string("cannot parse --params JSON: ") + e.what());
    }
    if (!params.is_object()) throw UsageError("--params must be a JSON object");
    int m = 1;
    for (const auto& [key, value] : params.items()) {
        if (value.is_array()) {
            std::vector<ComplexRational> vec;
            for (const auto& item : value) vec.push_back(parse_value(item.get<std::string>()));
            m = std::max(m, static_cast<int>(vec.size()));
            spec.vectors[key] = std::move(vec);
        } else if (value.is_string()) {
            spec.scalars[key] = parse_value(value.get<std::string>());
        } else if (value.is_number_integer()) {
            spec.scalars[key] = ComplexRational(Rational(value.get<long>()));
        } else {
            throw UsageError("parameter '" + key + "' must be a string or array of strings");
        }
    }
    spec.m = m;
    return spec;
}

json params_to_json(const FamilySpec& spec) {
    json out = json::object();
    for (const auto& [key, value] : spec.scalars) out[key] = to_string(value);
    for (const auto& [key, value] : spec.vectors) {
        json arr = json::array();
        for (const auto& v : value) arr.push_back(to_string(v));
        out[key] = arr;
    }
    return out;
}

json header_json(const FamilySpec& spec, const MultiIndex& n) {
    json doc;
    doc["family"] = family_tag(spec.family);
    if (spec.variant != Variant::Default) doc["variant"] = variant_tag(spec.variant);
    doc["params"] = params_to_json(spec);
    doc["n"] = n.entries();
    doc["variable"] = var_role_name(spec.variable());
    return doc;
}

json coeff_strings(const Poly& p) {
    json arr = json::array();
    for (int k = 0; k <= p.degree(); ++k) arr.push_back(to_string(p.coeff(k)));
    if (p.is_zero()) arr.push_back("0");
    return arr;
}

void emit(std::ostream& out, const json& doc, const std::string& format) {
    if (format == "json") {
        out << doc.dump(2) << "\n";
        return;
    }
    // csv: flat key,value rows; arrays expand to indexed rows
    std::function<void(const std::string&, const json&)> walk = [&](const std::string& prefix,
                                                                    const json& v) {
        if (v.is_object()) {
            for (const auto& [key, value] : v.items())
                walk(prefix.empty() ? key : prefix + "." + key, value);
        } else if (v.is_array()) {
            for (size_t i = 0; i < v.size(); ++i) walk(prefix + "[" + std::to_string(i) + "]", v[i]);
        } else if (v.is_string()) {
            out << prefix << "," << v.get<std::string>() << "\n";
        } else {
            out << prefix << "," << v.dump() << "\n";
        }
    };
    walk("", doc);
}

// ---- verify checks ---------------------------------------------------------------

json run_orth_check(const FamilySpec& spec, const MultiIndex& n, bool& pass) {
    json doc;
    auto fs = make_moment_functionals(spec);
    Poly candidate = spec.family == Family::MultipleHermite ? solve_type2(fs, n, spec.variable())
                                                            : construct(spec, n);
    auto report = verify_orthogonality(candidate, fs, n);
    json residuals = json::array();
    for (const auto& r : report.residuals) {
        json row;
        row["weight"] = r.weight_j;
        row["k"] = r.k;
        row["value"] = to_string(r.value);
        residuals.push_back(row);
    }
    json extras = json::array();
    for (const auto& r : report.extras) {
        json row;
        row["weight"] = r.weight_j;
        row["k"] = r.k;
        row["value"] = to_string(r.value);
        extras.push_back(row);
    }
    doc["degree"] = report.degree;
    doc["normal"] = report.normal;
    doc["residuals"] = residuals;
    doc["extras"] = extras;
    if (report.proportionality) doc["proportionality"] = to_string(*report.proportionality);
    bool ok = report.pass(n.total());
    doc["pass"] = ok;
    pass = pass && ok;
    return doc;
}

json run_repr_check(const FamilySpec& spec, const MultiIndex& n, bool& pass) {
    json doc;
    auto reps = representations(spec);
    if (reps.empty()) {
        doc["routes"] = json::array();
        doc["pass"] = true;
        return doc;
    }
    Poly first = reps[0].build(spec, n);
    json routes = json::array();
    bool ok = first.degree() == n.total();
    routes.push_back(reps[0].name);
    for (size_t i = 1; i < reps.size(); ++i) {
        routes.push_back(reps[i].name);
        ok = ok && reps[i].build(spec, n) == first;
    }
    doc["routes"] = routes;
    doc["pass"] = ok;
    pass = pass && ok;
    return doc;
}

json run_basis_check(const FamilySpec& spec, const MultiIndex& n, bool& pass) {
    json doc;
    auto fs = make_moment_functionals(spec);
    Poly candidate = spec.family == Family::MultipleHermite ? solve_type2(fs, n, spec.variable())
                                                            : construct(spec, n);
    bool ok = true;
    json weights = json::array();
    for (int j = 0; j < spec.m; ++j) {
        std::vector<Poly> basis;
        for (int l = 0; l <= n.total(); ++l) {
            if (spec.family == Family::MultipleHermite) {
                FamilySpec s1 = spec;
                s1.m = 1;
                s1.vectors.clear();
                for (const auto& [name, values] : spec.vectors)
                    s1.vectors[name] = {values.at(static_cast<size_t>(j))};
                basis.push_back(solve_type2(make_moment_functionals(s1), MultiIndex({l}),
                                            spec.variable()));
            } else {
                basis.push_back(scalar_basis_poly(spec, j, l));
            }
        }
        auto coeffs = expand_in_scalar_basis(candidate, basis);
        bool pattern = lemma_vanishing_pattern(coeffs, n[j], n.total());
        json row;
        row["weight"] = j;
        json cs = json::array();
        for (const auto& c : coeffs) cs.push_back(to_string(c));
        row["coefficients"] = cs;
        row["pattern"] = pattern;
        weights.push_back(row);
        ok = ok && pattern;
    }
    doc["weights"] = weights;
    doc["pass"] = ok;
    pass = pass && ok;
    return doc;
}

json run_recur_check(const FamilySpec& spec, bool& pass) {
    json doc;
    auto path = step_line_path(spec.m, spec.m + 4);
    auto report = check_recurrence(spec, path);
    json steps = json::array();
    for (const auto& step : report.steps) {
        json row;
        row["center"] = step.center.entries();
        json cs = json::array();
        for (const auto& c : step.coefficients) cs.push_back(to_string(c));
        row["coefficients"] = cs;
        row["residual_zero"] = step.residual_zero;
        steps.push_back(row);
    }
    doc["steps"] = steps;
    doc["pass"] = report.pass;
    pass = pass && report.pass;
    return doc;
}

json run_limit_check(const FamilySpec& spec, const MultiIndex& n, bool& pass) {
    json doc = json::array();
    std::vector<Rational> Ts = {Rational(100), Rational(10000), Rational(1000000)};
    bool any = false;
    bool ok = true;
    for (const auto& edge : scheme_edges()) {
        if (edge.source != spec.family && edge.target != spec.family) continue;
        any = true;
        MultiIndex edge_n = n.m() == 2 ? n : MultiIndex({1, 1});
        auto report = check_limit(edge, edge_n, Ts);
        json row;
        row["edge"] = edge.name;
        row["pass"] = report.pass;
        json stages = json::array();
        for (const auto& st : report.stages) {
            json s;
            s["T"] = st.T.get_str();
            s["max_coeff_diff"] = st.max_coeff_diff;
            s["exact_zero"] = st.exact_zero;
            stages.push_back(s);
        }
        row["stages"] = stages;
        row["decay_ratios"] = report.decay_ratios;
        row["detail"] = report.detail;
        doc.push_back(row);
        ok = ok && report.pass;
    }
    json wrapper;
    wrapper["edges"] = doc;
    wrapper["pass"] = ok || !any;
    pass = pass && (ok || !any);
    return wrapper;
}

json run_transform_check(const FamilySpec& spec, const MultiIndex& n, bool& pass) {
    if (spec.family != Family::Wilson && spec.family != Family::MultipleWilson)
        throw UsageError("transform check applies to wilson / multiple-wilson only");
    WilsonTransformParams params;
    params.a = spec.scalar("a");
    params.c = spec.scalar("c");
    params.d = spec.scalar("d");
    params.b = spec.family == Family::Wilson ? std::vector<ComplexRational>{spec.scalar("b")}
                                             : spec.vec("b");
    if (!params.a.is_real()) throw UsageError("transform check needs real parameters");
    params.t = Rational(params.a.re() / 2);
    QuadratureConfig config;
    config.prec_bits = default_precision();
    auto report = verify_transform(params, n, config, std::min(4, n.total() + 2));
    json doc;
    json items = json::array();
    for (const auto& item : report.items) {
        json row;
        row["name"] = item.name;
        row["rel_error"] = item.rel_error;
        row["pass"] = item.pass;
        items.push_back(row);
    }
    doc["t"] = params.t.get_str();
    doc["items"] = items;
    doc["pass"] = report.pass;
    pass = pass && report.pass;
    return doc;
}

json verify_one(const FamilySpec& spec, const MultiIndex& n,
                const std::vector<std::string>& checks, bool& pass) {
    json doc = header_json(spec, n);
    check_admissible(spec, n);
    json results;
    for (const auto& check : checks) {
        if (check == "orth")
            results["orth"] = run_orth_check(spec, n, pass);
        else if (check == "repr")
            results["repr"] = run_repr_check(spec, n, pass);
        else if (check == "basis")
            results["basis"] = run_basis_check(spec, n, pass);
        else if (check == "recur")
            results["recur"] = run_recur_check(spec, pass);
        else if (check == "limit")
            results["limit"] = run_limit_check(spec, n, pass);
        else if (check == "transform")
            results["transform"] = run_transform_check(spec, n, pass);
        else
            throw UsageError("unknown check '" + check + "'");
    }
    doc["checks"] = results;
    return doc;
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

}  // namespace

int run_cli_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact multiple-orthogonal-polynomial toolkit"};
    app.require_subcommand(1);

    std::string family, variant = "default", params = "{}", n_text = "0", format = "json";
    std::string at_text = "0", checks_text = "orth,repr,basis", nmax_text;
    int weight = 0, count = 0, moment_count = 8, m_opt = 2;
    unsigned long long seed = 1;
    long precision_bits = 0;

    if (const char* env = std::getenv("MOPKIT_PRECISION_BITS")) {
        char* endp = nullptr;
        long bits = std::strtol(env, &endp, 10);
        if (endp && *endp == '\0' && bits > 0) set_default_precision(bits);
    }

    auto add_common = [&](CLI::App* cmd, bool needs_family) {
        if (needs_family) cmd->add_option("--family", family, "family tag")->required();
        cmd->add_option("--variant", variant, "parameter variant (alpha|beta|gamma-delta)");
        cmd->add_option("--params", params, "JSON object of exact rational parameters");
        cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--precision-bits", precision_bits, "working float precision");
    };

    auto* coeffs = app.add_subcommand("coeffs", "exact coefficients of one polynomial");
    add_common(coeffs, true);
    coeffs->add_option("--n", n_text, "multi-index, e.g. 2,1")->required();

    auto* eval = app.add_subcommand("eval", "evaluate one polynomial at an exact point");
    add_common(eval, true);
    eval->add_option("--n", n_text)->required();
    eval->add_option("--at", at_text, "exact evaluation point")->required();

    auto* moments_cmd = app.add_subcommand("moments", "normalized moments of one weight");
    add_common(moments_cmd, true);
    moments_cmd->add_option("--weight", weight, "weight index j (0-based)");
    moments_cmd->add_option("--count", moment_count, "number of moments");

    auto* verify = app.add_subcommand("verify", "verification checks; exit 0 iff all pass");
    add_common(verify, true);
    verify->add_option("--n", n_text);
    verify->add_option("--checks", checks_text, "orth,repr,basis,recur,limit,transform");
    verify->add_option("--count", count, "batch size of randomized parameter draws");
    verify->add_option("--seed", seed, "batch seed");
    verify->add_option("--m", m_opt, "number of weights for batch draws");

    auto* scheme = app.add_subcommand("scheme", "the multiple AT-Askey scheme graph");
    scheme->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    auto* table = app.add_subcommand("table", "coefficients for all n below a bound");
    add_common(table, true);
    table->add_option("--nmax", nmax_text, "componentwise bound, e.g. 2,2")->required();

    std::vector<std::string> argv_copy = args;
    std::reverse(argv_copy.begin(), argv_copy.end());
    try {
        app.parse(argv_copy);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        json error;
        error["error"]["kind"] = "usage";
        error["error"]["message"] = e.what();
        err << error.dump(2) << "\n";
        return 2;
    }

    if (precision_bits > 0) set_default_precision(precision_bits);

    try {
        if (scheme->parsed()) {
            emit(out, json::parse(scheme_to_json()), format);
            return 0;
        }
        FamilySpec spec = parse_spec(family, variant, params);
        if (coeffs->parsed() || eval->parsed()) {
            MultiIndex n = parse_index(n_text);
            spec.m = n.m();
            Poly p = spec.family == Family::MultipleHermite
                         ? solve_type2(make_moment_functionals(spec), n, spec.variable())
                         : construct(spec, n);
            json doc = header_json(spec, n);
            doc["coeffs"] = coeff_strings(p);
            if (eval->parsed()) {
                ComplexRational z = parse_value(at_text);
                doc["at"] = to_string(z);
                doc["value"] = to_string(eval_at(p, z));
            }
            emit(out, doc, format);
            return 0;
        }
        if (moments_cmd->parsed()) {
            if (weight < 0 || weight >= spec.m) throw UsageError("weight index out of range");
            auto fs = make_moment_functionals(spec);
            json doc;
            doc["family"] = family_tag(spec.family);
            doc["params"] = params_to_json(spec);
            doc["weight"] = weight;
            json values = json::array();
            for (int k = 0; k < moment_count; ++k)
                values.push_back(to_string(fs[static_cast<size_t>(weight)].nu(k)));
            doc["moments"] = values;
            emit(out, doc, format);
            return 0;
        }
        if (table->parsed()) {
            MultiIndex nmax = parse_index(nmax_text);
            spec.m = nmax.m();
            json doc = header_json(spec, nmax);
            doc.erase("n");
            doc["nmax"] = nmax.entries();
            json entries = json::array();
            std::vector<int> cur(static_cast<size_t>(nmax.m()), 0);
            while (true) {
                MultiIndex n(cur);
                Poly p = spec.family == Family::MultipleHermite
                             ? solve_type2(make_moment_functionals(spec), n, spec.variable())
                             : construct(spec, n);
                json entry;
                entry["n"] = n.entries();
                entry["coeffs"] = coeff_strings(p);
                entries.push_back(entry);
                int j = 0;
                for (; j < nmax.m(); ++j) {
                    if (cur[static_cast<size_t>(j)] < nmax[j]) {
                        ++cur[static_cast<size_t>(j)];
                        break;
                    }
                    cur[static_cast<size_t>(j)] = 0;
                }
                if (j == nmax.m()) break;
            }
            doc["entries"] = entries;
            emit(out, doc, format);
            return 0;
        }
        // verify
        auto checks = split_csv(checks_text);
        bool pass = true;
        json doc;
        if (count > 0) {
            json cases = json::array();
            for (int i = 0; i < count; ++i) {
                std::mt19937_64 rng(seed + static_cast<unsigned long long>(i));
                FamilySpec draw = specgen::random_spec(spec.family, m_opt, rng);
                draw.variant = draw.variant == Variant::Default ? spec.variant : draw.variant;
                MultiIndex n = specgen::random_index(rng, m_opt, 5);
                json case_doc = verify_one(draw, n, checks, pass);
                char key[16];
                std::snprintf(key, sizeof(key), "case-%03d", i);
                case_doc["case"] = key;
                cases.push_back(case_doc);
            }
            doc["cases"] = cases;
            doc["seed"] = seed;
        } else {
            MultiIndex n = parse_index(n_text);
            spec.m = n.m();
            doc = verify_one(spec, n, checks, pass);
        }
        doc["pass"] = pass;
        emit(out, doc, format);
        return pass ? 0 : 1;
    } catch (const UsageError& e) {
        json error;
        error["error"]["kind"] = "usage";
        error["error"]["message"] = e.what();
        err << error.dump(2) << "\n";
        return 2;
    } catch (const AdmissibilityError& e) {
        json error;
        error["error"]["kind"] = "admissibility";
        error["error"]["message"] = e.what();
        err << error.dump(2) << "\n";
        return 2;
    } catch (const MopkitError& e) {
        json error;
        error["error"]["kind"] = "internal";
        error["error"]["message"] = e.what();
        err << error.dump(2) << "\n";
        return 2;
    }
}

int run_cli(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli_args(args, std::cout, std::cerr);
}

}  // namespace mopkit
