#pragma once

// Vanishing-cycle lattices with Picard-Lefschetz transvections, the braid
// action on distinguished tuples, the Hurwitz action on reflection
// factorizations, and the verification harnesses tying the two sides
// together: product invariance, Deligne transitivity on Coxeter
// factorizations, and the trace -1 criterion.

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "ade/weyl.hpp"

namespace ade {

// Even lattice with a symmetric intersection form whose diagonal is -2;
// for a root system this is minus the Cartan matrix, making the
// Picard-Lefschetz transvection of a cycle literally the Weyl reflection
// of the corresponding root.
struct CycleLattice {
    int rank = 0;
    IntMat form;
};

CycleLattice lattice_from_root_system(const RootSystem& rs);

// Validates symmetry and the -2 diagonal.
CycleLattice make_cycle_lattice(const IntMat& form);

std::int64_t intersect(const CycleLattice& lat, const RootVec& a, const RootVec& b);

// sigma + (sigma o delta) delta. Throws DomainError unless delta has
// self-intersection -2.
RootVec picard_lefschetz_apply(const CycleLattice& lat, const RootVec& sigma,
                               const RootVec& delta);
IntMat picard_lefschetz_matrix(const CycleLattice& lat, const RootVec& delta);

// An ordered basis of (-2)-cycles. Construction validates self-intersections
// and that the cycles form a lattice basis (determinant +-1).
struct DistinguishedTuple {
    CycleLattice lattice;
    std::vector<RootVec> cycles;
};

DistinguishedTuple make_distinguished_tuple(const CycleLattice& lat,
                                            std::vector<RootVec> cycles);
// The coordinate basis e_1, ..., e_rank.
DistinguishedTuple standard_tuple(const CycleLattice& lat);

// Braid move on the pair at 0-based position i, replacing
// (a, b) = (cycles[i], cycles[i+1]) by (b, a + (a o b) b); the inverse move
// replaces it by (b + (b o a) a, a). Both preserve self-intersections, the
// basis property and the transvection product.
DistinguishedTuple braid_move_tuple(const DistinguishedTuple& t, int i,
                                    bool inverse = false);

// H_1 * H_2 * ... * H_mu, the transvections of the cycles in tuple order.
IntMat tuple_transvection_product(const DistinguishedTuple& t);

// Ordered tuple of positive roots standing for an ordered product of
// reflections.
struct Factorization {
    std::vector<RootVec> roots;

    bool operator==(const Factorization& o) const { return roots == o.roots; }
};

// Sign-normalizes to the positive representative. Throws DomainError when
// v is not a root.
RootVec normalize_root(const RootSystem& rs, const RootVec& v);

Factorization make_factorization(const RootSystem& rs, std::vector<RootVec> roots);
// The simple roots in index order.
Factorization simple_factorization(const RootSystem& rs);

// Product of the reflections in tuple order.
IntMat factorization_product(const RootSystem& rs, const Factorization& fz);

// Hurwitz move at 0-based position i: (s, t) -> (t, t s t); on roots,
// (a, b) -> (b, normalize(r_b(a))). The inverse move sends (a, b) to
// (normalize(r_a(b)), a). Preserves the product.
Factorization hurwitz_move(const RootSystem& rs, const Factorization& fz, int i,
                           bool inverse = false);

struct SMembership {
    bool independent = false;    // the roots are linearly independent
    bool spans_lattice = false;  // determinant of the root matrix is +-1
    bool generates = false;      // the reflections generate the full Weyl group
    bool in_S = false;
};

// Membership in the set S of candidate distinguished factorizations.
// The generation test closes the reflection subgroup breadth-first and
// compares against the group order; it throws UndecidedError when the
// closure exceeds `closure_limit` before resolving.
SMembership is_in_S(const RootSystem& rs, const Factorization& fz,
                    std::size_t closure_limit = 2000000);

// All ordered tuples of positive roots whose reflection product is the
// standard Coxeter element, found by depth-first search with
// reflection-length pruning on the running product. Gated to rank <= 4.
std::vector<Factorization> enumerate_coxeter_factorizations(const RootSystem& rs);

// Closure of fz under Hurwitz moves and their inverses, sorted canonically.
// Throws LimitError when the orbit exceeds `limit`.
std::vector<Factorization> hurwitz_orbit(const RootSystem& rs, const Factorization& fz,
                                         std::size_t limit = 1000000);

struct DeligneReport {
    std::size_t orbit_size = 0;
    std::size_t enumerated_size = 0;
    bool orbit_equals_enumeration = false;
    bool all_in_S = false;
    bool pass = false;
};

// Hurwitz transitivity on Coxeter factorizations: the orbit of the simple
// factorization must exhaust every enumerated factorization, all of which
// lie in S. Rank <= 4.
DeligneReport verify_deligne_transitivity(const RootSystem& rs);

struct TraceCriterionReport {
    std::uint64_t tuples = 0;       // tuples examined
    std::uint64_t in_S = 0;         // members of S among them
    std::uint64_t coxeter = 0;      // S-members whose product is Coxeter
    std::uint64_t trace_minus_one = 0;
    std::uint64_t mismatches = 0;   // trace -1 not matching Coxeter-ness
    bool pass = false;
};

// Checks "trace = -1 iff the product is a Coxeter element" over all
// |positive|^rank ordered tuples (rank <= 3).
TraceCriterionReport verify_trace_criterion_exhaustive(const RootSystem& rs);
// Same check over `samples` seeded random tuples (rank <= 4 for the exact
// Coxeter decision).
TraceCriterionReport verify_trace_criterion_sampled(const RootSystem& rs,
                                                    std::uint64_t samples,
                                                    std::uint64_t seed);

struct MonodromyReport {
    std::int64_t trace = 0;
    bool equals_coxeter = false;
    bool pass = false;
};

// The product of the transvections of the standard tuple over the negated
// Cartan form is the Coxeter element and has trace -1.
MonodromyReport verify_monodromy_trace(const RootSystem& rs);

// Searches the Hurwitz orbit of fz for a factorization whose Gram matrix
// is, up to permutation and root sign flips, the Cartan matrix: a tuple
// shaped like the Dynkin diagram. fz must lie in S with Coxeter product.
// Throws LimitError when the orbit limit is exceeded first.
Factorization canonical_dynkin_search(const RootSystem& rs, const Factorization& fz,
                                      std::size_t limit = 1000000);

struct DynkinGraph {
    int nodes = 0;
    // (i, j, |B(root_i, root_j)|) for i < j with nonzero pairing
    std::vector<std::tuple<int, int, std::int64_t>> edges;

    bool operator==(const DynkinGraph& o) const {
        return nodes == o.nodes && edges == o.edges;
    }
};

// Pairing graph of a list of roots under the Cartan form.
DynkinGraph dynkin_diagram(const RootSystem& rs, const std::vector<RootVec>& roots);

}  // namespace ade
