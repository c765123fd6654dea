#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <ade/singularity.hpp>
#include <ade/weyl.hpp>
#include <ade/errors.hpp>

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

using namespace ade;

namespace {

Germ germ2(const std::string& text) {
    return make_germ(parse_polynomial(text, {"x", "y"}));
}

Germ germ3(const std::string& text) {
    return make_germ(parse_polynomial(text, {"x", "y", "z"}));
}

ClassificationResult cls2(const std::string& text) {
    return classify_ade(germ2(text));
}

ClassificationResult cls3(const std::string& text) {
    return classify_ade(germ3(text));
}

std::vector<Rat> rats(const std::vector<std::string>& ss) {
    std::vector<Rat> out;
    for (const auto& s : ss) out.push_back(rat_from_string(s));
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// spectra
// ---------------------------------------------------------------------------

TEST_CASE("spectrum of the cusp x^3 + y^2... A2 two-variable spectrum") {
    const Germ g = germ2("x^3 + y^2");
    const Spectrum s = spectrum_quasihomogeneous(g);
    CHECK(s.values == rats({"-1/6", "1/6"}));
}

TEST_CASE("spectrum of x^3 + y^5 matches the eight known values") {
    const Germ g = germ2("x^3 + y^5");
    const Spectrum s = spectrum_quasihomogeneous(g);
    CHECK(s.values == rats({"-7/15", "-4/15", "-2/15", "-1/15",
                            "1/15", "2/15", "4/15", "7/15"}));
}

TEST_CASE("spectra are symmetric about (n-2)/2") {
    for (const std::string text : {"x^2 + y^2", "x^4 + y^3", "x^3 + x*y^3",
                                   "x^5 + y^2", "x^2*y + y^5"}) {
        const Germ g = germ2(text);
        const Spectrum s = spectrum_quasihomogeneous(g);
        const std::size_t n = s.values.size();
        CHECK(n == g.mu);
        for (std::size_t i = 0; i < n; ++i)
            CHECK(s.values[i] + s.values[n - 1 - i] == Rat(0)); // nvars - 2 = 0
    }
}

TEST_CASE("suspension shifts the spectrum by one half per new square") {
    const Germ g = germ2("x^3 + y^4");
    const Spectrum s = spectrum_quasihomogeneous(g);
    const Spectrum s3 = suspend_spectrum(s, 1);
    CHECK(s3.nvars == 3);
    REQUIRE(s3.values.size() == s.values.size());
    for (std::size_t i = 0; i < s.values.size(); ++i)
        CHECK(s3.values[i] == s.values[i] + Rat(1, 2));
    CHECK_THROWS_AS(suspend_spectrum(s, -1), DomainError);

    // suspension invariance of classification: x^3 + y^4 + z^2 is the same
    // singularity one variable up
    const ClassificationResult two = cls2("x^3 + y^4");
    const ClassificationResult three =
        cls3("x^3 + y^4 + z^2");
    CHECK(two.type.name() == "E6");
    CHECK(three.type.name() == "E6");
    CHECK(two.exponents == three.exponents);
    CHECK(two.coxeter_number == three.coxeter_number);
}

TEST_CASE("spectrum length separates simple from non-simple") {
    CHECK(is_simple(germ2("x^3 + y^4")));
    CHECK(is_simple(germ2("x^8 + y^2")));
    CHECK_FALSE(is_simple(germ2("x^3 + y^6")));   // length exactly 1
    CHECK_FALSE(is_simple(germ2("x^4 + y^4")));   // length exactly 1
    CHECK(spectrum_length(spectrum_quasihomogeneous(germ2("x^3 + y^6"))) == Rat(1));
    CHECK(spectrum_length(spectrum_quasihomogeneous(germ2("x^4 + y^4"))) == Rat(1));
}

// ---------------------------------------------------------------------------
// signature and monodromy
// ---------------------------------------------------------------------------

TEST_CASE("three-variable spectra of simple germs give negative definite signature") {
    for (const std::string text : {"x^3 + y^4", "x^2*y + y^4", "x^3 + y^5",
                                   "x^6 + y^2"}) {
        const Germ g = germ2(text);
        const Spectrum s3 = suspend_spectrum(spectrum_quasihomogeneous(g), 1);
        const SignatureTriple t = signature_from_spectrum(s3);
        CHECK(t.mu_minus == g.mu);
        CHECK(t.mu_plus == 0);
        CHECK(t.mu_zero == 0);
    }
}

TEST_CASE("signature counts integer spectral values as mu_zero") {
    // x^3 + y^6 has spectral values {0, 1} at the ends in two variables
    const Germ g = germ2("x^3 + y^6");
    const SignatureTriple t2 = signature_from_spectrum(spectrum_quasihomogeneous(g));
    CHECK(t2.mu_zero == 2);
    CHECK(t2.mu_zero + t2.mu_plus + t2.mu_minus == g.mu);
}

TEST_CASE("monodromy eigenvalue angles are spectrum values mod one") {
    const Germ g = germ2("x^3 + y^2");
    const MonodromyData m = monodromy_eigenvalue_angles(spectrum_quasihomogeneous(g));
    CHECK(m.angles == rats({"1/6", "5/6"}));
    CHECK(m.order == 6);
}

// ---------------------------------------------------------------------------
// ade classification
// ---------------------------------------------------------------------------

TEST_CASE("the ade normal forms classify to themselves") {
    for (int k = 1; k <= 12; ++k) {
        const auto r = cls2("x^" + std::to_string(k + 1) + " + y^2");
        CHECK(r.type.name() == "A" + std::to_string(k));
        CHECK(r.mu == static_cast<std::size_t>(k));
        CHECK(r.coxeter_number == k + 1);
    }
    for (int k = 4; k <= 12; ++k) {
        const auto r = cls2("x^2*y + y^" + std::to_string(k - 1));
        CHECK(r.type.name() == "D" + std::to_string(k));
        CHECK(r.mu == static_cast<std::size_t>(k));
        CHECK(r.coxeter_number == 2 * k - 2);
    }
    CHECK(cls2("x^3 + y^4").type.name() == "E6");
    CHECK(cls2("x^3 + x*y^3").type.name() == "E7");
    CHECK(cls2("x^3 + y^5").type.name() == "E8");
}

TEST_CASE("classification exponents match the weyl side") {
    const auto r = cls2("x^3 + y^4");
    CHECK(r.exponents == std::vector<int>{1, 4, 5, 7, 8, 11});
    CHECK(r.coxeter_number == 12);
    const auto d4 = cls2("x^2*y + y^3");
    CHECK(d4.exponents == std::vector<int>{1, 3, 3, 5});
    CHECK(d4.coxeter_number == 6);

    // cross-check all corpus types against the root system computation
    for (const std::string text : {"x^5 + y^2", "x^2*y + y^6", "x^3 + x*y^3"}) {
        const auto c = cls2(text);
        const auto e = exponents_and_coxeter_number(build_root_system(c.type));
        CHECK(c.exponents == e.exponents);
        CHECK(c.coxeter_number == e.coxeter_number);
    }
}

TEST_CASE("suspended and rescaled germs classify the same") {
    CHECK(cls2("y^3 + x^4").type.name() == "E6");
    CHECK(cls2("2*x^3 + 7*y^4").type.name() == "E6");
    CHECK(cls2("x^2 + y^2").type.name() == "A1");
    CHECK(cls3("x^2 + y^2 + z^2").type.name() == "A1");
    CHECK(cls3("x^3 + y^2 + z^2").type.name() == "A2");
    CHECK(cls3("x^2*y + y^3 + z^2").type.name() == "D4");
}

TEST_CASE("non-simple germs are refused with a reason") {
    for (const std::string text : {"x^3 + y^6", "x^4 + y^4"}) {
        try {
            cls2(text);
            FAIL("expected ClassifyError");
        } catch (const ClassifyError& e) {
            CHECK(e.reason == "not-simple");
        }
    }
    // corank 3 can never be simple
    try {
        cls3("x^3 + y^3 + z^3");
        FAIL("expected ClassifyError");
    } catch (const ClassifyError& e) {
        CHECK(e.reason == "corank");
    }
    // no weight system: the classifier needs quasihomogeneity
    try {
        cls2("x^5 + x^2*y^2 + y^5");
        FAIL("expected ClassifyError");
    } catch (const ClassifyError& e) {
        CHECK(e.reason == "no-weight-system");
    }
}

TEST_CASE("modality of quasihomogeneous germs") {
    CHECK(modality_quasihomogeneous(germ2("x^3 + y^4")) == 0);
    CHECK(modality_quasihomogeneous(germ2("x^7 + y^2")) == 0);
    CHECK(modality_quasihomogeneous(germ2("x^2*y + y^7")) == 0);
    // the two boundary germs are exactly unimodal
    CHECK(modality_quasihomogeneous(germ2("x^3 + y^6")) == 1);
    CHECK(modality_quasihomogeneous(germ2("x^4 + y^4")) == 1);
}

TEST_CASE("non-isolated germs are rejected early") {
    CHECK_THROWS_AS(germ2("x^2*y"), NonIsolatedError);
    CHECK_THROWS_AS(germ2("x^2"), NonIsolatedError);
    CHECK_THROWS_AS(make_germ(parse_polynomial("x^2 + 2*x*y + y^2", {"x", "y"})),
                    NonIsolatedError);
    // Isolated despite the repeated-looking terms: three distinct tangent
    // lines plus a higher-order perturbation.
    CHECK(germ2("x^3 - 3*x*y^2 + x^4").mu == 4);
}

// ---------------------------------------------------------------------------
// newton diagrams
// ---------------------------------------------------------------------------

TEST_CASE("newton diagram of the bimodal boundary germ") {
    const NewtonDiagram2D d =
        newton_diagram_2d(parse_polynomial("x^5 + x^2*y^2 + y^5", {"x", "y"}));
    REQUIRE(d.vertices.size() == 3);
    CHECK(d.vertices[0] == std::pair<long, long>{0, 5});
    CHECK(d.vertices[1] == std::pair<long, long>{2, 2});
    CHECK(d.vertices[2] == std::pair<long, long>{5, 0});
    CHECK(d.convenient);
    CHECK(newton_number_2d(d) == Int(11));
}

TEST_CASE("collinear interior points are not vertices") {
    const NewtonDiagram2D d =
        newton_diagram_2d(parse_polynomial("x^4 + x^2*y^2 + y^4", {"x", "y"}));
    REQUIRE(d.vertices.size() == 2);
    CHECK(d.vertices[0] == std::pair<long, long>{0, 4});
    CHECK(d.vertices[1] == std::pair<long, long>{4, 0});
    CHECK(newton_number_2d(d) == Int(9));
}

TEST_CASE("diagrams missing an axis point are not convenient") {
    const NewtonDiagram2D d =
        newton_diagram_2d(parse_polynomial("x^2*y + y^4", {"x", "y"}));
    CHECK_FALSE(d.convenient);
}

TEST_CASE("newton number equals milnor number for convenient nondegenerate germs") {
    for (const std::string text : {"x^3 + y^4", "x^5 + y^2", "x^4 + y^4",
                                   "x^3 + y^6", "x^5 + x^2*y^2 + y^5"}) {
        const Polynomial f = parse_polynomial(text, {"x", "y"});
        CHECK(newton_number_2d(newton_diagram_2d(f)) == Int(milnor_number(f)));
    }
}

// ---------------------------------------------------------------------------
// mu-constant deformation families
// ---------------------------------------------------------------------------

TEST_CASE("the linear deformation family of the bimodal germ is mu-constant") {
    const Germ g = germ2("x^5 + x^2*y^2 + y^5");
    const MuConstReport rep =
        mu_const_linear_check(g, rats({"1", "-1", "1/2", "-1/2", "2", "1/3"}));
    CHECK_FALSE(rep.vacuous);
    CHECK(rep.pass);
    CHECK(rep.mu0 == 11);
    CHECK_FALSE(rep.cls.is_zero());
    REQUIRE(rep.samples.size() == 6);
    for (const auto& s : rep.samples) {
        CHECK(s.isolated);
        CHECK(s.mu == 11);
        CHECK(s.diagram_equal);
        CHECK(s.pass);
    }
}

TEST_CASE("quasihomogeneous germs make the family check vacuous") {
    const Germ g = germ2("x^3 + y^4");
    const MuConstReport rep = mu_const_linear_check(g, rats({"1", "-1"}));
    CHECK(rep.vacuous);
    CHECK(rep.pass);
    CHECK(rep.cls.is_zero());
}

// ---------------------------------------------------------------------------
// corpus handling
// ---------------------------------------------------------------------------

TEST_CASE("corpus parsing accepts comments and reports line numbers") {
    std::istringstream in(
        "# comment line\n"
        "\n"
        "A2 ; x^3 + y^2\n"
        "E6 ; x^3 + y^4   # trailing comment\n");
    const auto entries = parse_corpus(in);
    REQUIRE(entries.size() == 2);
    CHECK(entries[0].name == "A2");
    CHECK(entries[0].text == "x^3 + y^2");
    CHECK(entries[1].name == "E6");

    std::istringstream bad("A2 x^3 + y^2\n");
    CHECK_THROWS_AS(parse_corpus(bad), ParseError);
}

TEST_CASE("corpus entries run through the full pipeline") {
    CorpusEntry e;
    e.name = "E7";
    e.text = "x^3 + x*y^3";
    e.line = 1;
    const CorpusGermReport rep = run_corpus_entry(e);
    CHECK(rep.error.empty());
    REQUIRE(rep.classification.has_value());
    CHECK(rep.classification->type.name() == "E7");
    CHECK(rep.mu == 7);
    CHECK(rep.all_checks_pass());
    // every named invariant check ran
    std::vector<std::string> names;
    for (const auto& c : rep.checks) names.push_back(c.id);
    for (const std::string want :
         {"expected-name", "mu-weights-product", "spectrum-symmetry",
          "exponent-bridge", "signature-negative-definite", "modality-zero"}) {
        CHECK(std::find(names.begin(), names.end(), want) != names.end());
    }
}

TEST_CASE("corpus entry with a wrong expected name fails its check") {
    CorpusEntry e;
    e.name = "E6";
    e.text = "x^3 + x*y^3"; // actually E7
    e.line = 3;
    const CorpusGermReport rep = run_corpus_entry(e);
    CHECK_FALSE(rep.all_checks_pass());
}

TEST_CASE("corpus entry with a non-germ reports the error kind") {
    CorpusEntry e;
    e.name = "bad";
    e.text = "x^2*y";
    e.line = 9;
    const CorpusGermReport rep = run_corpus_entry(e);
    CHECK(rep.error_kind == "non-isolated");
    CHECK_FALSE(rep.error.empty());
}

TEST_CASE("mu equals the product formula on the weight system") {
    // mu = prod (1/w_i - 1) for quasihomogeneous isolated germs
    for (const std::string text : {"x^3 + y^4", "x^2*y + y^6", "x^9 + y^2",
                                   "x^3 + x*y^3"}) {
        const Germ g = germ2(text);
        REQUIRE(g.weights.has_value());
        Rat prod = 1;
        for (const Rat& w : *g.weights) prod *= (Rat(1) / w - 1);
        CHECK(prod == Rat(static_cast<long>(g.mu)));
    }
}
