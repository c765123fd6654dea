#pragma once

// Buchberger engine over a global graded order, normal forms, and the
// monomial basis of zero-dimensional quotient algebras. This is the exact
// computational backbone for Milnor numbers and local-algebra classes.
//
// The order is global (a genuine well-order). Local algebras at the origin
// are reached without local orders: for an ideal J whose zero locus is
// isolated at 0, the localization at the maximal ideal m = (x_1..x_n) is
// computed as Q[x]/(J + m^N) for any N past the nilpotency index of m, and
// that index is detected by doubling N until the dimension stops growing
// (Nakayama: equal consecutive dimensions force m^N to vanish in the local
// factor, so the two ideals coincide from then on).

#include <utility>
#include <vector>

#include "ade/poly.hpp"

namespace ade {

// Graded lexicographic order, optionally weighted: monomials compare first
// by <weights, exponents> (total degree when no weights are given), ties
// lexicographically with earlier variables larger. Weights must be positive
// for the comparison to be a monomial well-order.
struct TermOrder {
    Weights weights;  // empty means unit weights

    // <0, 0, >0 like a three-way compare.
    int cmp(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }

    void validate(int nvars) const;
};

// Leading term of a nonzero polynomial under the order.
std::pair<Monomial, Rat> leading_term(const Polynomial& p, const TermOrder& order);

struct GroebnerBasis {
    std::vector<Polynomial> gens;  // reduced: monic, pairwise non-divisible
                                   // leading terms, tails in normal form;
                                   // sorted by leading monomial, smallest
                                   // first
    TermOrder order;
    int nvars = 0;
};

// Reduced Groebner basis of the ideal generated by `gens`. Zero generators
// are ignored; an empty or all-zero input yields the (empty) basis of the
// zero ideal. The reduced basis is unique, so the result is independent of
// generator order.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, TermOrder order = {});

// Remainder of p under multivariate division by the basis: no term of the
// result is divisible by any leading term. Linear in p, idempotent, and
// zero exactly for ideal members.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

// Monomials outside the leading-term staircase, sorted ascending under the
// basis order. They form a vector-space basis of the quotient algebra.
// Throws NotZeroDimensionalError when the staircase misses some axis (the
// quotient is then infinite dimensional).
std::vector<Monomial> quotient_monomial_basis(const GroebnerBasis& gb);

// Reduced basis of J + m^N for the smallest stabilizing power N, which
// presents the localization of Q[x]/J at the origin: its staircase counts
// the local multiplicity and its normal forms are local-algebra classes.
// The power doubles from 4 up to `cap`; if the dimension is still growing
// at the cap the origin is not an isolated point of V(J) (or is absurdly
// degenerate) and NotZeroDimensionalError is thrown.
GroebnerBasis local_algebra_basis(const std::vector<Polynomial>& gens,
                                  TermOrder order = {}, int cap = 256);

// Milnor number: dimension of the local algebra at the origin modulo the
// Jacobian ideal of f. Throws NotZeroDimensionalError when the critical
// point is not isolated.
std::size_t milnor_number(const Polynomial& f);

// Class of f in its own local algebra: the normal form of f modulo the
// localized Jacobian ideal. Zero exactly when f lies in it, which for an
// isolated singularity means f is quasihomogeneous after a coordinate
// change. Throws NotZeroDimensionalError for non-isolated input.
Polynomial class_in_local_algebra(const Polynomial& f);

}  // namespace ade
