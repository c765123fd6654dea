#pragma once

// Multivariate polynomials over exact rationals, the expression parser and
// the quasihomogeneous-weight machinery. Monomials are exponent vectors;
// terms are kept sorted in graded lexicographic order, largest first, so
// printing and leading-term queries are deterministic.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ade/errors.hpp"
#include "ade/rational.hpp"

namespace ade {

using Monomial = std::vector<int>;

// Graded lexicographic comparison: higher total degree wins, ties go to the
// earlier variable with the larger exponent (x > y > z ...).
int grlex_cmp(const Monomial& a, const Monomial& b);

struct GrlexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return grlex_cmp(a, b) > 0;
    }
};

int total_degree(const Monomial& m);
bool monomial_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial monomial_quotient(const Monomial& b, const Monomial& a);  // b / a
Monomial monomial_mul(const Monomial& a, const Monomial& b);
Monomial monomial_lcm(const Monomial& a, const Monomial& b);

// Positive rational weights, one per variable.
using Weights = std::vector<Rat>;

Rat weighted_degree(const Monomial& m, const Weights& w);

class Polynomial {
public:
    using TermMap = std::map<Monomial, Rat, GrlexDesc>;

    explicit Polynomial(int nvars = 0) : nvars_(nvars) {}

    static Polynomial zero(int nvars) { return Polynomial(nvars); }
    static Polynomial constant(int nvars, const Rat& c);
    static Polynomial monomial_term(const Monomial& m, const Rat& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Coefficient of m (zero if absent).
    Rat coeff(const Monomial& m) const;

    // Adds c * m, erasing the term if the coefficient cancels.
    void add_term(const Monomial& m, const Rat& c);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Rat& c) const;

    bool operator==(const Polynomial& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Largest total degree among terms; -1 for the zero polynomial.
    int degree() const;

    // Partial derivative with respect to variable index var (0-based).
    Polynomial derivative(int var) const;

    // Canonical rendering, re-parseable by parse_polynomial with the same
    // variable names.
    std::string to_string(const std::vector<std::string>& names) const;

    std::vector<Monomial> support() const;

private:
    void check_vars(const Polynomial& o) const;

    int nvars_;
    TermMap terms_;
};

// Parses the expression grammar
//   expr  := ('+'|'-')? term (('+'|'-') term)*
//   term  := factor ('*' factor)*
//   factor:= coefficient | var ('^' nat)? | '(' expr ')'
//   coefficient := nat | nat '/' nat
// over the given variable names. Multiplication is always explicit.
// Throws ParseError with a position on malformed input or unknown names.
Polynomial parse_polynomial(const std::string& text,
                            const std::vector<std::string>& varnames);

// Identifiers appearing in an expression, sorted alphabetically; convenience
// for callers that infer the variable list from the input itself.
std::vector<std::string> detect_variables(const std::string& text);

// Weights nu with <k, nu> = 1 for every exponent vector k of f and all
// nu_i in (0,1), if any exist. When the linear system is underdetermined the
// returned solution is the vertex of {nu : <k,nu> = 1, 0 < nu <= 1/2}
// minimizing sum(nu), ties broken lexicographically. Returns nullopt when no
// admissible solution exists.
std::optional<Weights> find_quasihomogeneous_weights(const Polynomial& f);

// The n partial derivatives of f, in variable order.
std::vector<Polynomial> jacobian_generators(const Polynomial& f);

// Corank of the Hessian matrix of f at the origin (nvars - rank). Requires
// f to have neither constant nor linear terms; throws DomainError otherwise.
int hessian_corank(const Polynomial& f);

}  // namespace ade
