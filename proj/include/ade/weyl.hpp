#pragma once

// Simply-laced root systems and their Weyl groups, built from Cartan
// matrices alone. Vectors are integer coordinate tuples in the simple-root
// basis; the bilinear form is B(x,y) = x^T C y, so every root has square
// length 2 and reflections are integer matrices.

#include <cstdint>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "ade/linalg.hpp"

namespace ade {

struct RootSystemType {
    char letter = 'A';  // 'A', 'D' or 'E'
    int rank = 1;

    bool operator==(const RootSystemType& o) const {
        return letter == o.letter && rank == o.rank;
    }
    std::string name() const { return std::string(1, letter) + std::to_string(rank); }
};

// Parses "A3", "D4", "E8"; validates A k>=1, D k>=4, E k in {6,7,8}.
RootSystemType root_system_type_from_string(const std::string& s);
void validate_type(const RootSystemType& t);

using RootVec = std::vector<std::int64_t>;

// Cartan matrix in Bourbaki numbering (A: path; D: fork at node rank-2;
// E: branch node 2 attached to node 4 of the path 1-3-4-5-...).
IntMat cartan_matrix(const RootSystemType& t);

struct RootSystem {
    RootSystemType type;
    int rank = 0;
    IntMat cartan;
    std::vector<RootVec> roots;     // all roots, sorted lexicographically
    std::vector<RootVec> positive;  // sorted by (height, lex)
    std::set<RootVec> root_set;

    bool is_root(const RootVec& v) const { return root_set.count(v) > 0; }
};

// Closes the simple roots under simple reflections and checks the expected
// root counts (A_k: k(k+1), D_k: 2k(k-1), E6/E7/E8: 72/126/240).
RootSystem build_root_system(const RootSystemType& t);

// B(x,y) = x^T C y.
std::int64_t bilinear(const RootSystem& rs, const RootVec& x, const RootVec& y);

std::int64_t height(const RootVec& v);

// Reflection about a root as an integer matrix: x -> x - B(x,a) a.
// Throws DomainError when alpha is not a root of rs.
IntMat reflection(const RootSystem& rs, const RootVec& alpha);

IntMat simple_reflection(const RootSystem& rs, int i);  // 0-based index

// Product of the simple reflections in index order 1..rank.
IntMat coxeter_element(const RootSystem& rs);

struct ExponentData {
    std::vector<int> exponents;  // sorted ascending, size = rank
    int coxeter_number = 0;      // h = largest exponent + 1
};

// Exponents from the height partition of the positive roots: the multiset
// of exponents is dual to the partition (count of roots at height 1, at
// height 2, ...).
ExponentData exponents_and_coxeter_number(const RootSystem& rs);

// Multiplicative order of w (repeated squaring is pointless at these sizes;
// plain iteration). Throws LimitError past `cap` multiplications.
std::uint64_t element_order(const IntMat& w, std::uint64_t cap = 1000000);

// Minimal number of reflections expressing w, by Carter's theorem equal to
// rank(w - I) over the rationals.
int reflection_length(const IntMat& w);

// |W| = product of (m_i + 1) over the exponents.
Int weyl_group_order(const RootSystemType& t);

// Breadth-first closure of the simple reflections; results sorted by their
// entry lists so the enumeration order is canonical. Throws LimitError when
// the group exceeds `limit` elements.
std::vector<IntMat> enumerate_group(const RootSystem& rs, std::size_t limit);

// The unique positive root of maximal height.
RootVec highest_root(const RootSystem& rs);

// (rank+1) x (rank+1) affine extension: index 0 is the affine node, whose
// simple root is minus the highest root.
IntMat affine_cartan_matrix(const RootSystemType& t);

enum class Definiteness { positive_definite, negative_definite, semidefinite, indefinite };

std::string to_string(Definiteness d);

// Classifies a symmetric rational matrix exactly: leading principal minors
// when they settle it, otherwise eigenvalue sign counts read off the
// characteristic polynomial (Descartes on a real-rooted polynomial).
Definiteness definiteness(const QMat& form);

using GroupSet = std::unordered_set<IntMat, IntMatHash>;

// Conjugacy class of the standard Coxeter element, as closure under
// conjugation by simple reflections. Throws LimitError past `limit`.
GroupSet coxeter_conjugacy_class(const RootSystem& rs, std::size_t limit = 2000000);

struct CoxeterDecisionOptions {
    std::uint64_t budget = 1000000;  // random conjugation attempts
    std::uint64_t seed = 1;
};

// Whether w is conjugate to the standard Coxeter element. Exact for rank
// <= 4 and A5 (conjugacy-class closure); larger types first apply cheap
// complete rejections (order, characteristic polynomial), then a seeded
// random conjugation search that can only certify "yes". Throws
// UndecidedError when the budget runs out without a verdict, and
// DomainError when w does not preserve the Cartan form.
bool is_coxeter_element(const RootSystem& rs, const IntMat& w,
                        const CoxeterDecisionOptions& opts = {});

}  // namespace ade
