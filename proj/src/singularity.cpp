#include "ade/singularity.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

namespace ade {

Germ make_germ(const Polynomial& f) {
    if (f.is_zero()) throw DomainError("the zero polynomial is not a germ");
    if (f.nvars() < 1) throw DomainError("a germ needs at least one variable");
    for (const auto& [m, c] : f.terms())
        if (total_degree(m) < 2)
            throw DomainError("germ has constant or linear terms");
    Germ g;
    g.f = f;
    try {
        g.jacobian_gb = local_algebra_basis(jacobian_generators(f));
        g.basis = quotient_monomial_basis(g.jacobian_gb);
    } catch (const NotZeroDimensionalError& e) {
        throw NonIsolatedError(std::string("non-isolated singularity: ") + e.what());
    }
    g.mu = g.basis.size();
    g.weights = find_quasihomogeneous_weights(f);
    return g;
}

Spectrum spectrum_quasihomogeneous(const Germ& g) {
    if (!g.weights)
        throw DomainError("germ has no weight system; the spectrum formula needs one");
    const Weights& w = *g.weights;
    Rat shift = -1;
    for (const Rat& v : w) shift += v;
    Spectrum s;
    s.nvars = g.f.nvars();
    for (const Monomial& m : g.basis) s.values.push_back(weighted_degree(m, w) + shift);
    std::sort(s.values.begin(), s.values.end());
    return s;
}

Spectrum suspend_spectrum(const Spectrum& s, int times) {
    if (times < 0) throw DomainError("suspension count must be non-negative");
    Spectrum out;
    out.nvars = s.nvars + times;
    const Rat shift = Rat(times) / 2;  // Rat(times, 2) would skip canonicalization
    for (const Rat& v : s.values) out.values.push_back(v + shift);
    return out;
}

Rat spectrum_length(const Spectrum& s) {
    if (s.values.empty()) throw DomainError("length of an empty spectrum");
    return s.values.back() - s.values.front();
}

bool is_simple(const Germ& g) {
    return spectrum_length(spectrum_quasihomogeneous(g)) < 1;
}

SignatureTriple signature_from_spectrum(const Spectrum& s) {
    SignatureTriple t;
    for (const Rat& l : s.values) {
        if (is_integer(l)) {
            ++t.mu_zero;
        } else if (rat_floor(l) % 2 != 0) {
            ++t.mu_plus;
        } else {
            ++t.mu_minus;
        }
    }
    return t;
}

MonodromyData monodromy_eigenvalue_angles(const Spectrum& s) {
    MonodromyData d;
    for (const Rat& l : s.values) d.angles.push_back(l - Rat(rat_floor(l)));
    std::sort(d.angles.begin(), d.angles.end());
    d.order = lcm_of_denominators(d.angles);
    return d;
}

namespace {

struct CoreSplit {
    Polynomial core;             // f without the suspension squares
    std::vector<int> core_vars;  // original indices of the surviving variables
    int suspensions = 0;
};

CoreSplit split_suspensions(const Polynomial& f) {
    const int n = f.nvars();
    std::vector<bool> susp(n, false);
    for (int v = 0; v < n; ++v) {
        Monomial sq(n, 0);
        sq[v] = 2;
        if (f.coeff(sq) == 0) continue;
        bool elsewhere = false;
        for (const auto& [m, c] : f.terms())
            if (m[v] != 0 && m != sq) { elsewhere = true; break; }
        susp[v] = !elsewhere;
    }
    CoreSplit out;
    for (int v = 0; v < n; ++v) {
        if (susp[v]) ++out.suspensions;
        else out.core_vars.push_back(v);
    }
    out.core = Polynomial(static_cast<int>(out.core_vars.size()));
    for (const auto& [m, c] : f.terms()) {
        bool skip = false;
        for (int v = 0; v < n; ++v)
            if (susp[v] && m[v] != 0) { skip = true; break; }
        if (skip) continue;
        Monomial cm(out.core_vars.size());
        for (std::size_t i = 0; i < out.core_vars.size(); ++i) cm[i] = m[out.core_vars[i]];
        out.core.add_term(cm, c);
    }
    return out;
}

}  // namespace

ClassificationResult classify_ade(const Germ& g) {
    const Polynomial& f = g.f;
    const int corank = hessian_corank(f);
    if (corank > 2)
        throw ClassifyError("corank", "Hessian corank " + std::to_string(corank) +
                                          " exceeds 2; the germ is not simple");
    const CoreSplit split = split_suspensions(f);
    const int core_n = static_cast<int>(split.core_vars.size());
    if (core_n > 2)
        throw ClassifyError("corank",
                            "after removing suspension squares the germ still involves " +
                                std::to_string(core_n) +
                                " variables; only cores in at most two variables classify");

    Spectrum s3;
    s3.nvars = 3;
    Weights core_weights;
    if (core_n == 0) {
        // Nondegenerate quadratic form: empty core, local algebra spanned
        // by 1, core spectrum {-1}.
        s3.values = {Rat(-1) + Rat(3, 2)};
    } else {
        Germ core = make_germ(split.core);
        if (!core.weights)
            throw ClassifyError("no-weight-system",
                                "the germ is not quasihomogeneous in the given coordinates");
        core_weights = *core.weights;
        const Spectrum sc = spectrum_quasihomogeneous(core);
        s3 = suspend_spectrum(sc, 3 - core_n);
    }

    const Rat len = spectrum_length(s3);
    if (!(len < 1))
        throw ClassifyError("not-simple", "spectrum length " + rat_to_string(len) +
                                              " is not below 1; the germ is not simple");
    for (const Rat& v : s3.values)
        if (!(v > 0 && v < 1))
            throw DomainError("internal: suspended spectrum left the open unit interval");

    const Int h_big = lcm_of_denominators(s3.values);
    if (!h_big.fits_sint_p())
        throw DomainError("internal: unreasonable Coxeter number");
    const int h = static_cast<int>(h_big.get_si());
    std::vector<int> exps;
    for (const Rat& v : s3.values) {
        const Rat e = v * Rat(h);
        if (!is_integer(e)) throw DomainError("internal: non-integer rescaled spectrum");
        exps.push_back(static_cast<int>(e.get_num().get_si()));
    }
    std::sort(exps.begin(), exps.end());

    const std::size_t mu = g.mu;
    std::vector<RootSystemType> candidates;
    candidates.push_back({'A', static_cast<int>(mu)});
    if (mu >= 4) candidates.push_back({'D', static_cast<int>(mu)});
    if (mu >= 6 && mu <= 8) candidates.push_back({'E', static_cast<int>(mu)});

    std::vector<RootSystemType> matches;
    for (const RootSystemType& t : candidates) {
        const ExponentData ed = exponents_and_coxeter_number(build_root_system(t));
        if (ed.coxeter_number == h && ed.exponents == exps) matches.push_back(t);
    }
    if (matches.empty())
        throw ClassifyError("no-match",
                            "no rank-" + std::to_string(mu) +
                                " root system has Coxeter number " + std::to_string(h) +
                                " with the rescaled spectrum as exponents");
    if (matches.size() > 1)
        throw DomainError("internal: ambiguous classification");

    ClassificationResult res;
    res.type = matches.front();
    res.mu = mu;
    res.coxeter_number = h;
    res.exponents = std::move(exps);
    res.spectrum3 = std::move(s3);
    if (g.weights) {
        res.weights = *g.weights;
    } else {
        // Assemble from the core weights; suspension squares weigh 1/2.
        res.weights.assign(f.nvars(), Rat(1, 2));
        for (std::size_t i = 0; i < split.core_vars.size(); ++i)
            res.weights[split.core_vars[i]] = core_weights[i];
    }
    return res;
}

std::size_t modality_quasihomogeneous(const Germ& g) {
    if (!g.weights)
        throw DomainError("germ has no weight system; modality count needs one");
    std::size_t count = 0;
    for (const Monomial& m : g.basis)
        if (weighted_degree(m, *g.weights) >= 1) ++count;
    return count;
}

NewtonDiagram2D newton_diagram_2d(const Polynomial& f) {
    if (f.nvars() != 2) throw DomainError("Newton diagram is implemented for two variables");
    if (f.is_zero()) throw DomainError("Newton diagram of the zero polynomial");

    // Minimal support point per first coordinate, then the Pareto frontier.
    std::map<long, long> min_y;
    for (const auto& [m, c] : f.terms()) {
        auto [it, fresh] = min_y.emplace(m[0], m[1]);
        if (!fresh && m[1] < it->second) it->second = m[1];
    }
    std::vector<std::pair<long, long>> frontier;
    long best = -1;
    for (const auto& [x, y] : min_y) {  // x ascending
        if (best >= 0 && y >= best) continue;
        frontier.push_back({x, y});
        best = y;
    }

    // Lower convex chain over the frontier; collinear points are not
    // vertices.
    std::vector<std::pair<long, long>> hull;
    for (const auto& p : frontier) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            const long long cross =
                static_cast<long long>(b.first - a.first) * (p.second - a.second) -
                static_cast<long long>(b.second - a.second) * (p.first - a.first);
            if (cross <= 0) hull.pop_back();
            else break;
        }
        hull.push_back(p);
    }

    NewtonDiagram2D d;
    d.vertices = std::move(hull);
    d.convenient = d.vertices.front().first == 0 && d.vertices.back().second == 0;
    return d;
}

Int newton_number_2d(const NewtonDiagram2D& d) {
    if (!d.convenient)
        throw DomainError("Newton number requires a convenient diagram");
    // Polygon (0,0), (0,b) = first vertex, ..., (a,0) = last vertex.
    std::vector<std::pair<long, long>> poly;
    poly.push_back({0, 0});
    poly.insert(poly.end(), d.vertices.begin(), d.vertices.end());
    Int twice_area = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const auto& p = poly[i];
        const auto& q = poly[(i + 1) % poly.size()];
        twice_area += Int(p.first) * q.second - Int(q.first) * p.second;
    }
    if (twice_area < 0) twice_area = -twice_area;
    const long a = d.vertices.back().first;
    const long b = d.vertices.front().second;
    return twice_area - a - b + 1;
}

MuConstReport mu_const_linear_check(const Germ& g, const std::vector<Rat>& ts) {
    if (g.f.nvars() != 2)
        throw DomainError("the linear deformation check compares planar Newton diagrams");
    MuConstReport rep;
    rep.cls = normal_form(g.f, g.jacobian_gb);
    rep.mu0 = g.mu;
    rep.vacuous = rep.cls.is_zero();
    if (rep.vacuous) return rep;

    const NewtonDiagram2D d0 = newton_diagram_2d(g.f);
    for (const Rat& t : ts) {
        MuConstSample sample;
        sample.t = t;
        const Polynomial ft = g.f + rep.cls.scaled(t);
        if (!ft.is_zero()) {
            sample.diagram_equal = newton_diagram_2d(ft) == d0;
            try {
                sample.mu = milnor_number(ft);
                sample.isolated = true;
            } catch (const NotZeroDimensionalError&) {
                sample.isolated = false;
            }
        }
        sample.pass = sample.isolated && sample.mu == rep.mu0 && sample.diagram_equal;
        rep.pass = rep.pass && sample.pass;
        rep.samples.push_back(std::move(sample));
    }
    return rep;
}

std::vector<CorpusEntry> parse_corpus(std::istream& in) {
    std::vector<CorpusEntry> entries;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto notspace = [](unsigned char c) { return !std::isspace(c); };
        if (std::find_if(line.begin(), line.end(), notspace) == line.end()) continue;
        const std::size_t semi = line.find(';');
        if (semi == std::string::npos)
            throw ParseError("corpus line " + std::to_string(lineno) +
                                 ": expected 'name ; polynomial'",
                             0);
        auto trim = [&notspace](std::string s) {
            s.erase(s.begin(), std::find_if(s.begin(), s.end(), notspace));
            s.erase(std::find_if(s.rbegin(), s.rend(), notspace).base(), s.end());
            return s;
        };
        CorpusEntry e;
        e.name = trim(line.substr(0, semi));
        e.text = trim(line.substr(semi + 1));
        e.line = lineno;
        if (e.name.empty() || e.text.empty())
            throw ParseError("corpus line " + std::to_string(lineno) +
                                 ": empty name or polynomial",
                             0);
        entries.push_back(std::move(e));
    }
    return entries;
}

std::vector<CorpusEntry> load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open corpus file: " + path);
    return parse_corpus(in);
}

CorpusGermReport run_corpus_entry(const CorpusEntry& entry) {
    CorpusGermReport rep;
    rep.name = entry.name;
    try {
        rep.varnames = detect_variables(entry.text);
        const Polynomial f = parse_polynomial(entry.text, rep.varnames);
        const Germ g = make_germ(f);
        rep.mu = g.mu;
        rep.weights = g.weights;
        if (g.weights) rep.spectrum = spectrum_quasihomogeneous(g);
        const ClassificationResult cls = classify_ade(g);
        rep.classification = cls;

        rep.checks.push_back({"expected-name", cls.type.name() == entry.name,
                              "classified " + cls.type.name() + ", corpus says " +
                                  entry.name});

        // Milnor number two ways: staircase count vs the weight product
        // prod(1/nu_i - 1).
        if (g.weights) {
            Rat prod = 1;
            for (const Rat& nu : *g.weights) prod *= (Rat(1) / nu - 1);
            rep.checks.push_back({"mu-weights-product",
                                  is_integer(prod) && prod == Rat(static_cast<long>(g.mu)),
                                  "staircase " + std::to_string(g.mu) + ", product " +
                                      rat_to_string(prod)});
        }

        // Spectrum symmetric about (n-2)/2.
        if (rep.spectrum) {
            const std::vector<Rat>& v = rep.spectrum->values;
            const Rat center2(f.nvars() - 2);  // twice the center
            bool sym = true;
            for (std::size_t i = 0; i < v.size(); ++i)
                sym = sym && (v[i] + v[v.size() - 1 - i] == center2);
            rep.checks.push_back({"spectrum-symmetry", sym, ""});
        }

        // Exponent bridge: h * (3-variable spectrum) matches the Weyl
        // exponents of the matched type, and the common denominator is h.
        {
            const ExponentData ed =
                exponents_and_coxeter_number(build_root_system(cls.type));
            const Int hs = lcm_of_denominators(cls.spectrum3.values);
            std::vector<int> rescaled;
            for (const Rat& v : cls.spectrum3.values) {
                const Rat e = v * Rat(ed.coxeter_number);
                rescaled.push_back(
                    is_integer(e) ? static_cast<int>(e.get_num().get_si()) : -1);
            }
            std::sort(rescaled.begin(), rescaled.end());
            const bool ok = hs == ed.coxeter_number && rescaled == ed.exponents;
            rep.checks.push_back({"exponent-bridge", ok,
                                  cls.type.name() + " h=" + std::to_string(ed.coxeter_number)});
        }

        // Three-variable signature: every spectral value sits in (0,1), so
        // the form is negative definite.
        {
            const SignatureTriple sig = signature_from_spectrum(cls.spectrum3);
            rep.checks.push_back({"signature-negative-definite",
                                  sig.mu_minus == g.mu && sig.mu_plus == 0 &&
                                      sig.mu_zero == 0,
                                  ""});
        }

        rep.checks.push_back({"modality-zero", modality_quasihomogeneous(g) == 0, ""});

        if (f.nvars() == 2) {
            const NewtonDiagram2D d = newton_diagram_2d(f);
            if (d.convenient) {
                const Int nn = newton_number_2d(d);
                rep.checks.push_back({"newton-number",
                                      nn == Int(static_cast<long>(g.mu)),
                                      "newton " + nn.get_str()});
            }
        }
    } catch (const ParseError& e) {
        rep.error = e.what();
        rep.error_kind = "parse";
    } catch (const NonIsolatedError& e) {
        rep.error = e.what();
        rep.error_kind = "non-isolated";
    } catch (const ClassifyError& e) {
        rep.error = e.what();
        rep.error_kind = e.reason;
    } catch (const std::exception& e) {
        rep.error = e.what();
        rep.error_kind = "error";
    }
    return rep;
}

}  // namespace ade
