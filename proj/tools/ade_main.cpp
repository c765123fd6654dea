// Command-line front end: germ invariants and classification on the
// singularity side, root-system data on the weyl side, and the verification
// harnesses bridging the two. Every verb prints a text report by default and
// a canonical JSON document under --json; exact rationals are serialized as
// "p/q" strings, arbitrary-precision integers as decimal strings.
//
// Exit codes: 0 success, 1 computation error, 2 verification or corpus
// check failure, 64 usage error.
#include <CLI11.hpp>
#include <json.hpp>

#include <ade/braid.hpp>
#include <ade/errors.hpp>
#include <ade/grobner.hpp>
#include <ade/poly.hpp>
#include <ade/singularity.hpp>
#include <ade/weyl.hpp>

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace ade;
using ordered_json = nlohmann::ordered_json;

namespace {

struct GlobalOpts {
    bool json = false;
    std::uint64_t seed = 1;
    std::size_t budget = 1000000;
};

void emit(const GlobalOpts& g, const ordered_json& j, const std::string& text) {
    if (g.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

Rat parse_rat_arg(const std::string& s) {
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0)
        throw DomainError("malformed rational '" + s + "'");
    if (q.get_den() == 0) throw DomainError("zero denominator in '" + s + "'");
    q.canonicalize();  // set_str leaves p/q unreduced
    return q;
}

std::vector<std::string> choose_varnames(const std::string& poly_text,
                                         const std::string& vars_flag) {
    if (vars_flag.empty()) return detect_variables(poly_text);
    return split_commas(vars_flag);
}

std::string join_rats(const std::vector<Rat>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += " ";
        out += rat_to_string(v[i]);
    }
    return out;
}

std::string join_ints(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(v[i]);
    }
    return out;
}

ordered_json rats_json(const std::vector<Rat>& v) {
    ordered_json a = ordered_json::array();
    for (const Rat& r : v) a.push_back(rat_to_string(r));
    return a;
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

// ---- singularity verbs ---------------------------------------------------

int run_classify(const GlobalOpts& g, const std::string& text,
                 const std::string& vars_flag) {
    const std::vector<std::string> names = choose_varnames(text, vars_flag);
    const Germ germ = make_germ(parse_polynomial(text, names));
    const ClassificationResult cls = classify_ade(germ);

    std::ostringstream t;
    t << "type: " << cls.type.name() << "\n"
      << "mu: " << cls.mu << "\n"
      << "h: " << cls.coxeter_number << "\n"
      << "exponents: " << join_ints(cls.exponents) << "\n"
      << "weights: " << join_rats(cls.weights) << "\n";

    ordered_json j;
    j["verb"] = "classify";
    j["input"] = text;
    j["variables"] = names;
    j["type"] = cls.type.name();
    j["mu"] = cls.mu;
    j["h"] = cls.coxeter_number;
    j["exponents"] = cls.exponents;
    j["weights"] = rats_json(cls.weights);
    emit(g, j, t.str());
    return 0;
}

int run_spectrum(const GlobalOpts& g, const std::string& text,
                 const std::string& vars_flag) {
    const std::vector<std::string> names = choose_varnames(text, vars_flag);
    const Germ germ = make_germ(parse_polynomial(text, names));
    const Spectrum s = spectrum_quasihomogeneous(germ);
    const MonodromyData md = monodromy_eigenvalue_angles(s);

    std::ostringstream t;
    t << "mu: " << germ.mu << "\n"
      << "spectrum: " << join_rats(s.values) << "\n"
      << "length: " << rat_to_string(spectrum_length(s)) << "\n"
      << "monodromy angles: " << join_rats(md.angles) << "\n"
      << "monodromy order: " << md.order.get_str() << "\n";

    ordered_json j;
    j["verb"] = "spectrum";
    j["input"] = text;
    j["variables"] = names;
    j["mu"] = germ.mu;
    j["values"] = rats_json(s.values);
    j["length"] = rat_to_string(spectrum_length(s));
    j["angles"] = rats_json(md.angles);
    j["monodromy_order"] = md.order.get_str();
    emit(g, j, t.str());
    return 0;
}

int run_milnor(const GlobalOpts& g, const std::string& text,
               const std::string& vars_flag) {
    const std::vector<std::string> names = choose_varnames(text, vars_flag);
    const Germ germ = make_germ(parse_polynomial(text, names));

    ordered_json j;
    j["verb"] = "milnor";
    j["input"] = text;
    j["variables"] = names;
    j["mu"] = germ.mu;
    emit(g, j, "mu: " + std::to_string(germ.mu) + "\n");
    return 0;
}

int run_modality(const GlobalOpts& g, const std::string& text,
                 const std::string& vars_flag) {
    const std::vector<std::string> names = choose_varnames(text, vars_flag);
    const Germ germ = make_germ(parse_polynomial(text, names));
    const std::size_t m = modality_quasihomogeneous(germ);

    ordered_json j;
    j["verb"] = "modality";
    j["input"] = text;
    j["variables"] = names;
    j["modality"] = m;
    emit(g, j, "modality: " + std::to_string(m) + "\n");
    return 0;
}

int run_signature(const GlobalOpts& g, const std::string& text,
                  const std::string& vars_flag) {
    const std::vector<std::string> names = choose_varnames(text, vars_flag);
    const Germ germ = make_germ(parse_polynomial(text, names));
    const Spectrum s = spectrum_quasihomogeneous(germ);
    const SignatureTriple own = signature_from_spectrum(s);

    std::ostringstream t;
    t << "mu: " << germ.mu << "\n"
      << "spectrum: " << join_rats(s.values) << "\n"
      << "signature: mu- " << own.mu_minus << "  mu0 " << own.mu_zero << "  mu+ "
      << own.mu_plus << "\n";

    ordered_json j;
    j["verb"] = "signature";
    j["input"] = text;
    j["variables"] = names;
    j["mu"] = germ.mu;
    j["values"] = rats_json(s.values);
    j["mu_minus"] = own.mu_minus;
    j["mu_zero"] = own.mu_zero;
    j["mu_plus"] = own.mu_plus;

    if (s.nvars < 3) {
        const Spectrum s3 = suspend_spectrum(s, 3 - s.nvars);
        const SignatureTriple sus = signature_from_spectrum(s3);
        t << "spectrum (3 variables): " << join_rats(s3.values) << "\n"
          << "signature (3 variables): mu- " << sus.mu_minus << "  mu0 "
          << sus.mu_zero << "  mu+ " << sus.mu_plus << "\n";
        j["values3"] = rats_json(s3.values);
        j["mu_minus3"] = sus.mu_minus;
        j["mu_zero3"] = sus.mu_zero;
        j["mu_plus3"] = sus.mu_plus;
    }
    emit(g, j, t.str());
    return 0;
}

int run_newton(const GlobalOpts& g, const std::string& text,
               const std::string& vars_flag) {
    const std::vector<std::string> names = choose_varnames(text, vars_flag);
    const Polynomial f = parse_polynomial(text, names);
    const NewtonDiagram2D d = newton_diagram_2d(f);

    std::ostringstream t;
    t << "vertices:";
    for (const auto& [a, b] : d.vertices) t << " (" << a << "," << b << ")";
    t << "\nconvenient: " << yesno(d.convenient) << "\n";

    ordered_json j;
    j["verb"] = "newton";
    j["input"] = text;
    j["variables"] = names;
    ordered_json verts = ordered_json::array();
    for (const auto& [a, b] : d.vertices) verts.push_back({a, b});
    j["vertices"] = verts;
    j["convenient"] = d.convenient;
    if (d.convenient) {
        const Int nn = newton_number_2d(d);
        t << "newton number: " << nn.get_str() << "\n";
        j["newton_number"] = nn.get_str();
    }
    emit(g, j, t.str());
    return 0;
}

// ---- weyl verbs ----------------------------------------------------------

int run_weyl_info(const GlobalOpts& g, const std::string& type_str) {
    const RootSystemType ty = root_system_type_from_string(type_str);
    const RootSystem rs = build_root_system(ty);
    const ExponentData ed = exponents_and_coxeter_number(rs);
    const Int order = weyl_group_order(ty);
    const Rat det = qmat_det(rs.cartan.to_qmat());

    std::ostringstream t;
    t << "type: " << ty.name() << "\n"
      << "rank: " << rs.rank << "\n"
      << "roots: " << rs.roots.size() << "\n"
      << "positive roots: " << rs.positive.size() << "\n"
      << "weyl group order: " << order.get_str() << "\n"
      << "coxeter number: " << ed.coxeter_number << "\n"
      << "exponents: " << join_ints(ed.exponents) << "\n"
      << "cartan determinant: " << rat_to_string(det) << "\n"
      << "cartan form: " << to_string(definiteness(rs.cartan.to_qmat())) << "\n";

    ordered_json j;
    j["verb"] = "weyl-info";
    j["type"] = ty.name();
    j["rank"] = rs.rank;
    j["roots"] = rs.roots.size();
    j["positive_roots"] = rs.positive.size();
    j["weyl_group_order"] = order.get_str();
    j["coxeter_number"] = ed.coxeter_number;
    j["exponents"] = ed.exponents;
    j["cartan_determinant"] = rat_to_string(det);
    j["cartan_form"] = to_string(definiteness(rs.cartan.to_qmat()));
    emit(g, j, t.str());
    return 0;
}

int run_hurwitz_orbit(const GlobalOpts& g, const std::string& type_str, bool list) {
    const RootSystem rs = build_root_system(root_system_type_from_string(type_str));
    const std::vector<Factorization> orbit =
        hurwitz_orbit(rs, simple_factorization(rs), g.budget);

    std::ostringstream t;
    t << "type: " << rs.type.name() << "\n"
      << "orbit size: " << orbit.size() << "\n";
    ordered_json j;
    j["verb"] = "hurwitz-orbit";
    j["type"] = rs.type.name();
    j["orbit_size"] = orbit.size();
    if (list) {
        ordered_json fzs = ordered_json::array();
        for (const Factorization& fz : orbit) {
            ordered_json row = ordered_json::array();
            for (const RootVec& r : fz.roots) row.push_back(r);
            fzs.push_back(row);
            for (const RootVec& r : fz.roots) {
                t << " (";
                for (std::size_t i = 0; i < r.size(); ++i)
                    t << (i ? "," : "") << r[i];
                t << ")";
            }
            t << "\n";
        }
        j["factorizations"] = fzs;
    }
    emit(g, j, t.str());
    return 0;
}

// ---- verification verbs ----------------------------------------------------

int run_verify_deligne(const GlobalOpts& g, const std::string& type_str) {
    const RootSystem rs = build_root_system(root_system_type_from_string(type_str));
    const DeligneReport rep = verify_deligne_transitivity(rs);

    std::ostringstream t;
    t << "check: deligne\n"
      << "type: " << rs.type.name() << "\n"
      << "orbit: " << rep.orbit_size << "\n"
      << "enumerated: " << rep.enumerated_size << "\n"
      << "all in S: " << yesno(rep.all_in_S) << "\n"
      << "pass: " << yesno(rep.pass) << "\n";

    ordered_json j;
    j["check"] = "deligne";
    j["type"] = rs.type.name();
    j["parameters"] = ordered_json::object();
    j["counts"] = {{"orbit", rep.orbit_size}, {"enumerated", rep.enumerated_size}};
    j["mismatches"] = rep.pass ? 0 : 1;
    j["pass"] = rep.pass;
    emit(g, j, t.str());
    return rep.pass ? 0 : 2;
}

int run_verify_trace(const GlobalOpts& g, const std::string& type_str,
                     std::uint64_t samples, bool sampled_requested) {
    const RootSystemType ty = root_system_type_from_string(type_str);
    const RootSystem rs = build_root_system(ty);
    const bool sampled = sampled_requested || ty.rank > 3;
    const TraceCriterionReport rep =
        sampled ? verify_trace_criterion_sampled(rs, samples, g.seed)
                : verify_trace_criterion_exhaustive(rs);

    std::ostringstream t;
    t << "check: trace\n"
      << "type: " << ty.name() << "\n";
    if (sampled)
        t << "mode: sampled (" << samples << " samples, seed " << g.seed << ")\n";
    else
        t << "mode: exhaustive\n";
    t << "tuples: " << rep.tuples << "\n"
      << "in S: " << rep.in_S << "\n"
      << "coxeter: " << rep.coxeter << "\n"
      << "trace -1: " << rep.trace_minus_one << "\n"
      << "mismatches: " << rep.mismatches << "\n"
      << "pass: " << yesno(rep.pass) << "\n";

    ordered_json j;
    j["check"] = "trace";
    j["type"] = ty.name();
    if (sampled)
        j["parameters"] = {{"mode", "sampled"}, {"samples", samples}, {"seed", g.seed}};
    else
        j["parameters"] = {{"mode", "exhaustive"}};
    j["counts"] = {{"tuples", rep.tuples},
                   {"in_s", rep.in_S},
                   {"coxeter", rep.coxeter},
                   {"trace_minus_one", rep.trace_minus_one}};
    j["mismatches"] = rep.mismatches;
    j["pass"] = rep.pass;
    emit(g, j, t.str());
    return rep.pass ? 0 : 2;
}

int run_verify_monodromy(const GlobalOpts& g, const std::string& type_str) {
    const RootSystemType ty = root_system_type_from_string(type_str);
    const MonodromyReport rep = verify_monodromy_trace(build_root_system(ty));

    std::ostringstream t;
    t << "check: monodromy\n"
      << "type: " << ty.name() << "\n"
      << "trace: " << rep.trace << "\n"
      << "equals coxeter element: " << yesno(rep.equals_coxeter) << "\n"
      << "pass: " << yesno(rep.pass) << "\n";

    ordered_json j;
    j["check"] = "monodromy";
    j["type"] = ty.name();
    j["parameters"] = ordered_json::object();
    j["counts"] = {{"trace", rep.trace}};
    j["mismatches"] = rep.pass ? 0 : 1;
    j["pass"] = rep.pass;
    emit(g, j, t.str());
    return rep.pass ? 0 : 2;
}

int run_verify_mu_const(const GlobalOpts& g, const std::string& text,
                        const std::string& vars_flag, const std::string& t_flag) {
    const std::vector<std::string> names = choose_varnames(text, vars_flag);
    const Germ germ = make_germ(parse_polynomial(text, names));
    std::vector<Rat> ts;
    for (const std::string& s : split_commas(t_flag)) ts.push_back(parse_rat_arg(s));
    const MuConstReport rep = mu_const_linear_check(germ, ts);

    std::ostringstream t;
    t << "check: mu-const\n"
      << "class: " << rep.cls.to_string(names) << "\n"
      << "vacuous: " << yesno(rep.vacuous) << "\n"
      << "mu: " << rep.mu0 << "\n";
    std::size_t failures = 0;
    for (const MuConstSample& s : rep.samples) {
        t << "t=" << rat_to_string(s.t) << ": isolated " << yesno(s.isolated)
          << ", mu " << s.mu << ", diagram equal " << yesno(s.diagram_equal)
          << ", pass " << yesno(s.pass) << "\n";
        if (!s.pass) ++failures;
    }
    t << "pass: " << yesno(rep.pass) << "\n";

    ordered_json j;
    j["check"] = "mu-const";
    j["input"] = text;
    ordered_json tvals = ordered_json::array();
    for (const Rat& v : ts) tvals.push_back(rat_to_string(v));
    j["parameters"] = {{"t", tvals}};
    j["class"] = rep.cls.to_string(names);
    j["vacuous"] = rep.vacuous;
    j["counts"] = {{"mu0", rep.mu0}, {"samples", rep.samples.size()}};
    ordered_json samples = ordered_json::array();
    for (const MuConstSample& s : rep.samples) {
        ordered_json e;
        e["t"] = rat_to_string(s.t);
        e["isolated"] = s.isolated;
        e["mu"] = s.mu;
        e["diagram_equal"] = s.diagram_equal;
        e["pass"] = s.pass;
        samples.push_back(e);
    }
    j["samples"] = samples;
    j["mismatches"] = failures;
    j["pass"] = rep.pass;
    emit(g, j, t.str());
    return rep.pass ? 0 : 2;
}

// ---- corpus ----------------------------------------------------------------

int run_corpus(const GlobalOpts& g, const std::string& path) {
    const std::vector<CorpusEntry> entries = load_corpus(path);
    std::vector<CorpusGermReport> reports;
    reports.reserve(entries.size());
    for (const CorpusEntry& e : entries) reports.push_back(run_corpus_entry(e));

    bool all_pass = true;
    std::size_t classified = 0;
    std::ostringstream t;
    for (const CorpusGermReport& r : reports) {
        if (!r.error.empty()) {
            all_pass = false;
            t << r.name << ": error (" << r.error_kind << "): " << r.error << "\n";
            continue;
        }
        ++classified;
        std::size_t ok = 0;
        for (const GermCheck& c : r.checks) ok += c.pass ? 1 : 0;
        if (ok != r.checks.size()) all_pass = false;
        t << r.name << ": type " << r.classification->type.name() << ", mu "
          << r.mu << ", h " << r.classification->coxeter_number << ", checks "
          << ok << "/" << r.checks.size();
        for (const GermCheck& c : r.checks)
            if (!c.pass) t << " [" << c.id << ": " << c.detail << "]";
        t << "\n";
    }
    t << "corpus: " << entries.size() << " germs, " << classified
      << " classified, " << (all_pass ? "all checks pass" : "CHECK FAILURES")
      << "\n";

    ordered_json j;
    j["verb"] = "corpus";
    j["path"] = path;
    ordered_json out = ordered_json::array();
    for (const CorpusGermReport& r : reports) {
        ordered_json e;
        e["name"] = r.name;
        if (!r.error.empty()) {
            e["error"] = r.error;
            e["error_kind"] = r.error_kind;
            out.push_back(e);
            continue;
        }
        e["mu"] = r.mu;
        e["weights"] = r.weights ? rats_json(*r.weights) : ordered_json::array();
        e["spectrum"] =
            r.spectrum ? rats_json(r.spectrum->values) : ordered_json::array();
        e["type"] = r.classification->type.name();
        e["h"] = r.classification->coxeter_number;
        e["exponents"] = r.classification->exponents;
        ordered_json checks = ordered_json::array();
        for (const GermCheck& c : r.checks)
            checks.push_back({{"id", c.id}, {"pass", c.pass}});
        e["checks"] = checks;
        out.push_back(e);
    }
    j["entries"] = out;
    j["pass"] = all_pass;
    emit(g, j, t.str());
    return all_pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    GlobalOpts g;
    int rc = 0;

    CLI::App app{"Invariants of isolated quasihomogeneous plane-curve germs, "
                 "ADE root systems, and the verification harnesses bridging "
                 "them"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", g.json, "emit a JSON report instead of text");
    app.add_option("--seed", g.seed, "seed for sampled checks")->capture_default_str();
    app.add_option("--budget", g.budget, "node limit for orbit searches")
        ->capture_default_str();

    std::string poly_text, vars_flag, type_str, corpus_path;
    std::string t_flag = "1,-1,1/2";
    std::uint64_t samples = 10000;
    bool list_orbit = false;

    const auto add_poly_verb = [&](const std::string& name, const std::string& desc) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->add_option("polynomial", poly_text, "germ, e.g. \"x^3 + y^4\"")
            ->required();
        sub->add_option("--vars", vars_flag,
                        "comma-separated variable names (default: detected "
                        "alphabetically)");
        return sub;
    };

    CLI::App* classify = add_poly_verb("classify", "A-D-E class of a simple germ");
    classify->callback([&] { rc = run_classify(g, poly_text, vars_flag); });
    CLI::App* spectrum =
        add_poly_verb("spectrum", "spectrum and monodromy eigenvalue data");
    spectrum->callback([&] { rc = run_spectrum(g, poly_text, vars_flag); });
    CLI::App* milnor = add_poly_verb("milnor", "milnor number of an isolated germ");
    milnor->callback([&] { rc = run_milnor(g, poly_text, vars_flag); });
    CLI::App* modality =
        add_poly_verb("modality", "inner modality of a quasihomogeneous germ");
    modality->callback([&] { rc = run_modality(g, poly_text, vars_flag); });
    CLI::App* signature =
        add_poly_verb("signature", "intersection-form signature from the spectrum");
    signature->callback([&] { rc = run_signature(g, poly_text, vars_flag); });
    CLI::App* newton = add_poly_verb("newton", "newton diagram of a two-variable germ");
    newton->callback([&] { rc = run_newton(g, poly_text, vars_flag); });

    CLI::App* weyl = app.add_subcommand("weyl-info", "root system facts for a type");
    weyl->add_option("type", type_str, "root system type, e.g. A3, D4, E8")
        ->required();
    weyl->callback([&] { rc = run_weyl_info(g, type_str); });

    CLI::App* orbit = app.add_subcommand(
        "hurwitz-orbit", "hurwitz orbit of the simple-root factorization");
    orbit->add_option("type", type_str, "root system type")->required();
    orbit->add_flag("--list", list_orbit, "print every factorization");
    orbit->callback([&] { rc = run_hurwitz_orbit(g, type_str, list_orbit); });

    CLI::App* verify = app.add_subcommand("verify", "verification harnesses");
    verify->require_subcommand(1);
    verify->fallthrough();

    CLI::App* deligne = verify->add_subcommand(
        "deligne", "hurwitz transitivity on coxeter factorizations (rank <= 4)");
    deligne->add_option("type", type_str, "root system type")->required();
    deligne->callback([&] { rc = run_verify_deligne(g, type_str); });

    CLI::App* trace = verify->add_subcommand(
        "trace", "trace -1 criterion for coxeter elements (rank <= 4)");
    trace->add_option("type", type_str, "root system type")->required();
    CLI::Option* samples_opt =
        trace->add_option("--samples", samples, "sample count for the randomized mode")
            ->capture_default_str();
    trace->callback([&] {
        rc = run_verify_trace(g, type_str, samples, samples_opt->count() > 0);
    });

    CLI::App* monodromy = verify->add_subcommand(
        "monodromy", "transvection product is the coxeter element with trace -1");
    monodromy->add_option("type", type_str, "root system type")->required();
    monodromy->callback([&] { rc = run_verify_monodromy(g, type_str); });

    CLI::App* muconst = verify->add_subcommand(
        "mu-const", "linear deformation by the local-algebra class keeps mu and "
                    "the newton diagram");
    muconst->add_option("polynomial", poly_text, "two-variable germ")->required();
    muconst->add_option("--vars", vars_flag, "comma-separated variable names");
    muconst->add_option("--t", t_flag, "comma-separated deformation parameters")
        ->capture_default_str();
    muconst->callback(
        [&] { rc = run_verify_mu_const(g, poly_text, vars_flag, t_flag); });

    CLI::App* corpus =
        app.add_subcommand("corpus", "classify and check every germ in a corpus file");
    corpus->add_option("path", corpus_path, "corpus file, lines 'name ; polynomial'")
        ->required();
    corpus->callback([&] { rc = run_corpus(g, corpus_path); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 64;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
