#pragma once

// Invariants of isolated hypersurface singularity germs: Milnor number,
// spectrum of quasihomogeneous germs, signature and monodromy data derived
// from the spectrum, modality, the two-variable Newton diagram, the A-D-E
// classifier, and a linear mu-constant deformation check. The classifier
// closes the loop against the root-system side: the rescaled three-variable
// spectrum must reproduce the exponents of the matched Weyl group.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ade/grobner.hpp"
#include "ade/poly.hpp"
#include "ade/weyl.hpp"

namespace ade {

// An isolated singularity germ at the origin: no constant or linear terms,
// finite-dimensional Jacobian quotient. Construction computes and caches
// the Jacobian Groebner basis, the quotient monomial basis and the weight
// system (when one exists).
struct Germ {
    Polynomial f;
    GroebnerBasis jacobian_gb;
    std::vector<Monomial> basis;  // monomial basis of the local algebra
    std::size_t mu = 0;
    std::optional<Weights> weights;
};

// Throws DomainError for a zero germ or one with constant/linear terms,
// NonIsolatedError when the critical point is not isolated.
Germ make_germ(const Polynomial& f);

struct Spectrum {
    std::vector<Rat> values;  // sorted ascending, with multiplicity
    int nvars = 0;
};

// Spectrum of a quasihomogeneous germ: { wdeg(m) + sum(nu) - 1 } over the
// monomial basis of the local algebra. Throws DomainError when the germ
// has no weight system.
Spectrum spectrum_quasihomogeneous(const Germ& g);

// Adding a square of a fresh variable shifts every spectral value by 1/2.
Spectrum suspend_spectrum(const Spectrum& s, int times);

// max - min; zero for a single value.
Rat spectrum_length(const Spectrum& s);

// A quasihomogeneous germ is simple exactly when its spectrum fits in an
// open interval of length one.
bool is_simple(const Germ& g);

struct SignatureTriple {
    std::size_t mu_plus = 0;
    std::size_t mu_zero = 0;
    std::size_t mu_minus = 0;
};

// Signature of the intersection form read off the spectrum: integer values
// count into mu_zero, non-integer values with odd integral part into
// mu_plus, with even integral part into mu_minus.
SignatureTriple signature_from_spectrum(const Spectrum& s);

struct MonodromyData {
    std::vector<Rat> angles;  // eigenvalue angles in [0,1), sorted, with
                              // multiplicity: eigenvalues exp(2 pi i angle)
    Int order;                // multiplicative order of the monodromy
};

MonodromyData monodromy_eigenvalue_angles(const Spectrum& s);

struct ClassificationResult {
    RootSystemType type;
    std::size_t mu = 0;
    int coxeter_number = 0;
    std::vector<int> exponents;  // sorted ascending
    Weights weights;             // weight system of the input germ
    Spectrum spectrum3;          // the three-variable spectrum that matched
};

// A-D-E classification of a simple quasihomogeneous germ:
//  1. strip pure suspension variables (appearing only as c * z^2),
//  2. require the core to fit in two variables of corank at most two,
//  3. compute the core spectrum and suspend it to three variables,
//  4. reject when the spectrum length reaches one (not simple),
//  5. rescale by the common denominator and match (h, exponents) against
//     the candidate root systems of rank mu.
// Throws ClassifyError with reason tag "not-simple", "corank",
// "no-weight-system" or "no-match".
ClassificationResult classify_ade(const Germ& g);

// Number of local-algebra basis monomials of weighted degree >= 1
// (inner modality of a quasihomogeneous germ). Throws DomainError when the
// germ has no weight system.
std::size_t modality_quasihomogeneous(const Germ& g);

struct NewtonDiagram2D {
    // Vertices of the lower-left boundary of the Newton polyhedron, sorted
    // by first coordinate ascending; second coordinates strictly decrease.
    std::vector<std::pair<long, long>> vertices;
    bool convenient = false;  // touches both coordinate axes

    bool operator==(const NewtonDiagram2D& o) const {
        return vertices == o.vertices && convenient == o.convenient;
    }
};

// Two-variable Newton diagram of a nonzero polynomial. Throws DomainError
// unless nvars == 2.
NewtonDiagram2D newton_diagram_2d(const Polynomial& f);

// Newton number 2S - a - b + 1 of a convenient diagram, where S is the
// lattice area under the diagram and a, b the axis intercepts. Throws
// DomainError for non-convenient diagrams.
Int newton_number_2d(const NewtonDiagram2D& d);

struct MuConstSample {
    Rat t;
    bool isolated = false;
    std::size_t mu = 0;
    bool diagram_equal = false;
    bool pass = false;
};

struct MuConstReport {
    Polynomial cls;      // class of f in its local algebra
    bool vacuous = false;  // cls == 0: f is quasihomogeneous, nothing to vary
    std::size_t mu0 = 0;
    std::vector<MuConstSample> samples;
    bool pass = true;
};

// Checks that the linear deformation f + t * [f] keeps both the Milnor
// number and the Newton diagram constant at the sampled parameter values.
// Two-variable germs only (the diagram comparison is planar).
MuConstReport mu_const_linear_check(const Germ& g, const std::vector<Rat>& ts);

// ---- corpus ------------------------------------------------------------

struct CorpusEntry {
    std::string name;
    std::string text;  // polynomial expression
    int line = 0;
};

// Lines of the form "name ; polynomial"; '#' starts a comment, blank lines
// are skipped. Throws ParseError (with line number in the message) on
// structurally malformed lines.
std::vector<CorpusEntry> parse_corpus(std::istream& in);
std::vector<CorpusEntry> load_corpus(const std::string& path);

struct GermCheck {
    std::string id;
    bool pass = false;
    std::string detail;
};

struct CorpusGermReport {
    std::string name;
    std::vector<std::string> varnames;
    std::string error;       // empty when the germ classified cleanly
    std::string error_kind;  // "parse", "non-isolated", "classify", "other"
    std::size_t mu = 0;
    std::optional<Weights> weights;
    std::optional<Spectrum> spectrum;  // spectrum in the germ's own variables
    std::optional<ClassificationResult> classification;
    std::vector<GermCheck> checks;

    bool all_checks_pass() const {
        for (const GermCheck& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Classifies one corpus germ and runs the per-germ cross-checks:
// staircase-vs-weights Milnor number, spectrum symmetry, the
// exponent/spectrum bridge, negative-definiteness of the suspended
// signature, zero modality, and the Newton number where the diagram is
// convenient. Errors are captured in the report, not thrown.
CorpusGermReport run_corpus_entry(const CorpusEntry& entry);

}  // namespace ade
