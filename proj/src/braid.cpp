#include "ade/braid.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <unordered_set>

namespace ade {

CycleLattice lattice_from_root_system(const RootSystem& rs) {
    const int n = rs.rank;
    IntMat f(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) f.at(i, j) = -rs.cartan.at(i, j);
    return make_cycle_lattice(f);
}

CycleLattice make_cycle_lattice(const IntMat& form) {
    const int n = static_cast<int>(form.dim());
    for (int i = 0; i < n; ++i) {
        if (form.at(i, i) != -2)
            throw DomainError("cycle lattice requires self-intersection -2 on the diagonal");
        for (int j = 0; j < i; ++j)
            if (form.at(i, j) != form.at(j, i))
                throw DomainError("cycle lattice form must be symmetric");
    }
    return {n, form};
}

std::int64_t intersect(const CycleLattice& lat, const RootVec& a, const RootVec& b) {
    if (static_cast<int>(a.size()) != lat.rank || static_cast<int>(b.size()) != lat.rank)
        throw DomainError("vector arity does not match the lattice rank");
    std::int64_t s = 0;
    for (int i = 0; i < lat.rank; ++i)
        for (int j = 0; j < lat.rank; ++j) s += a[i] * lat.form.at(i, j) * b[j];
    return s;
}

RootVec picard_lefschetz_apply(const CycleLattice& lat, const RootVec& sigma,
                               const RootVec& delta) {
    if (intersect(lat, delta, delta) != -2)
        throw DomainError("transvection requires a (-2)-cycle");
    const std::int64_t m = intersect(lat, sigma, delta);
    RootVec out = sigma;
    for (int i = 0; i < lat.rank; ++i) out[i] += m * delta[i];
    return out;
}

IntMat picard_lefschetz_matrix(const CycleLattice& lat, const RootVec& delta) {
    if (intersect(lat, delta, delta) != -2)
        throw DomainError("transvection requires a (-2)-cycle");
    const int n = lat.rank;
    std::vector<std::int64_t> fd(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) fd[i] += lat.form.at(i, j) * delta[j];
    IntMat h = IntMat::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) h.at(i, j) += delta[i] * fd[j];
    return h;
}

DistinguishedTuple make_distinguished_tuple(const CycleLattice& lat,
                                            std::vector<RootVec> cycles) {
    if (static_cast<int>(cycles.size()) != lat.rank)
        throw DomainError("a distinguished tuple has one cycle per lattice generator");
    QMat m = qmat_zero(cycles.size(), cycles.size());
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        if (intersect(lat, cycles[i], cycles[i]) != -2)
            throw DomainError("tuple entry " + std::to_string(i + 1) +
                              " has self-intersection != -2");
        for (int j = 0; j < lat.rank; ++j)
            m[i][j] = Rat(static_cast<long>(cycles[i][j]));
    }
    const Rat det = qmat_det(std::move(m));
    if (det != 1 && det != -1)
        throw DomainError("tuple cycles are not a lattice basis (determinant " +
                          rat_to_string(det) + ")");
    return {lat, std::move(cycles)};
}

DistinguishedTuple standard_tuple(const CycleLattice& lat) {
    std::vector<RootVec> cycles;
    for (int i = 0; i < lat.rank; ++i) {
        RootVec e(lat.rank, 0);
        e[i] = 1;
        cycles.push_back(std::move(e));
    }
    return {lat, std::move(cycles)};
}

DistinguishedTuple braid_move_tuple(const DistinguishedTuple& t, int i, bool inverse) {
    const int mu = static_cast<int>(t.cycles.size());
    if (i < 0 || i + 1 >= mu)
        throw DomainError("braid move position out of range");
    DistinguishedTuple out = t;
    const RootVec a = t.cycles[i];
    const RootVec b = t.cycles[i + 1];
    if (!inverse) {
        out.cycles[i] = b;
        out.cycles[i + 1] = picard_lefschetz_apply(t.lattice, a, b);
    } else {
        out.cycles[i] = picard_lefschetz_apply(t.lattice, b, a);
        out.cycles[i + 1] = a;
    }
    return out;
}

IntMat tuple_transvection_product(const DistinguishedTuple& t) {
    IntMat p = IntMat::identity(t.lattice.rank);
    for (const RootVec& c : t.cycles) p = p * picard_lefschetz_matrix(t.lattice, c);
    return p;
}

RootVec normalize_root(const RootSystem& rs, const RootVec& v) {
    if (!rs.is_root(v)) throw DomainError("vector is not a root");
    for (std::int64_t x : v) {
        if (x > 0) return v;
        if (x < 0) break;
    }
    RootVec neg(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
    return neg;
}

Factorization make_factorization(const RootSystem& rs, std::vector<RootVec> roots) {
    Factorization fz;
    for (RootVec& r : roots) fz.roots.push_back(normalize_root(rs, r));
    return fz;
}

Factorization simple_factorization(const RootSystem& rs) {
    Factorization fz;
    for (int i = 0; i < rs.rank; ++i) {
        RootVec e(rs.rank, 0);
        e[i] = 1;
        fz.roots.push_back(std::move(e));
    }
    return fz;
}

IntMat factorization_product(const RootSystem& rs, const Factorization& fz) {
    IntMat p = IntMat::identity(rs.rank);
    for (const RootVec& r : fz.roots) p = p * reflection(rs, r);
    return p;
}

Factorization hurwitz_move(const RootSystem& rs, const Factorization& fz, int i,
                           bool inverse) {
    const int mu = static_cast<int>(fz.roots.size());
    if (i < 0 || i + 1 >= mu)
        throw DomainError("Hurwitz move position out of range");
    Factorization out = fz;
    const RootVec a = fz.roots[i];
    const RootVec b = fz.roots[i + 1];
    if (!inverse) {
        out.roots[i] = b;
        out.roots[i + 1] = normalize_root(rs, reflection(rs, b).apply(a));
    } else {
        out.roots[i] = normalize_root(rs, reflection(rs, a).apply(b));
        out.roots[i + 1] = a;
    }
    return out;
}

SMembership is_in_S(const RootSystem& rs, const Factorization& fz,
                    std::size_t closure_limit) {
    const std::size_t mu = fz.roots.size();
    SMembership out;
    if (mu != static_cast<std::size_t>(rs.rank))
        throw DomainError("factorization length differs from the rank");
    QMat m = qmat_zero(mu, mu);
    for (std::size_t i = 0; i < mu; ++i)
        for (std::size_t j = 0; j < mu; ++j)
            m[i][j] = Rat(static_cast<long>(fz.roots[i][j]));
    const Rat det = qmat_det(std::move(m));
    out.independent = det != 0;
    out.spans_lattice = det == 1 || det == -1;

    // Subgroup closure of the tuple's reflections.
    std::vector<IntMat> gens;
    for (const RootVec& r : fz.roots) gens.push_back(reflection(rs, r));
    GroupSet seen;
    std::deque<IntMat> queue;
    seen.insert(IntMat::identity(rs.rank));
    queue.push_back(IntMat::identity(rs.rank));
    Int full_order = 1;
    for (int m : exponents_and_coxeter_number(rs).exponents) full_order *= (m + 1);
    while (!queue.empty()) {
        const IntMat x = queue.front();
        queue.pop_front();
        for (const IntMat& g : gens) {
            IntMat y = x * g;
            if (seen.insert(y).second) {
                if (seen.size() > closure_limit)
                    throw UndecidedError("reflection subgroup closure exceeded " +
                                         std::to_string(closure_limit) + " elements");
                queue.push_back(std::move(y));
            }
        }
    }
    out.generates = Int(static_cast<unsigned long>(seen.size())) == full_order;
    out.in_S = out.independent && out.spans_lattice && out.generates;
    return out;
}

std::vector<Factorization> enumerate_coxeter_factorizations(const RootSystem& rs) {
    if (rs.rank > 4)
        throw DomainError("exhaustive factorization enumeration is gated to rank <= 4");
    const IntMat target = coxeter_element(rs);
    const IntMat id = IntMat::identity(rs.rank);
    const int mu = rs.rank;

    std::vector<IntMat> refl;
    for (const RootVec& r : rs.positive) refl.push_back(reflection(rs, r));

    std::vector<Factorization> found;
    std::vector<std::size_t> pick;

    // Depth-first over positive-root indices; prune when the remainder
    // needs more reflections than there are slots left.
    std::vector<IntMat> prod{id}, prodinv{id};
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == mu) {
            if (prod.back() == target) {
                Factorization fz;
                for (std::size_t idx : pick) fz.roots.push_back(rs.positive[idx]);
                found.push_back(std::move(fz));
            }
            return;
        }
        const IntMat rest = prodinv.back() * target;
        if (reflection_length(rest) > mu - depth) return;
        for (std::size_t idx = 0; idx < refl.size(); ++idx) {
            pick.push_back(idx);
            prod.push_back(prod.back() * refl[idx]);
            prodinv.push_back(refl[idx] * prodinv.back());
            self(self, depth + 1);
            pick.pop_back();
            prod.pop_back();
            prodinv.pop_back();
        }
    };
    rec(rec, 0);
    return found;
}

namespace {

std::vector<std::int64_t> orbit_key(const Factorization& fz) {
    std::vector<std::int64_t> key;
    for (const RootVec& r : fz.roots) key.insert(key.end(), r.begin(), r.end());
    return key;
}

}  // namespace

std::vector<Factorization> hurwitz_orbit(const RootSystem& rs, const Factorization& fz,
                                         std::size_t limit) {
    const int mu = static_cast<int>(fz.roots.size());
    std::unordered_set<std::vector<std::int64_t>, IntVecHash> seen;
    std::deque<Factorization> queue;
    std::vector<Factorization> orbit;
    seen.insert(orbit_key(fz));
    queue.push_back(fz);
    while (!queue.empty()) {
        Factorization x = std::move(queue.front());
        queue.pop_front();
        for (int i = 0; i + 1 < mu; ++i) {
            for (const bool inv : {false, true}) {
                Factorization y = hurwitz_move(rs, x, i, inv);
                if (seen.insert(orbit_key(y)).second) {
                    if (seen.size() > limit)
                        throw LimitError("Hurwitz orbit exceeds limit " +
                                         std::to_string(limit));
                    queue.push_back(std::move(y));
                }
            }
        }
        orbit.push_back(std::move(x));
    }
    std::sort(orbit.begin(), orbit.end(),
              [](const Factorization& a, const Factorization& b) {
                  return orbit_key(a) < orbit_key(b);
              });
    return orbit;
}

DeligneReport verify_deligne_transitivity(const RootSystem& rs) {
    DeligneReport rep;
    const std::vector<Factorization> orbit = hurwitz_orbit(rs, simple_factorization(rs));
    const std::vector<Factorization> all = enumerate_coxeter_factorizations(rs);
    rep.orbit_size = orbit.size();
    rep.enumerated_size = all.size();

    std::vector<std::vector<std::int64_t>> ka, kb;
    for (const Factorization& f : orbit) ka.push_back(orbit_key(f));
    for (const Factorization& f : all) kb.push_back(orbit_key(f));
    std::sort(kb.begin(), kb.end());  // orbit is already sorted
    rep.orbit_equals_enumeration = ka == kb;

    rep.all_in_S = true;
    for (const Factorization& f : orbit)
        rep.all_in_S = rep.all_in_S && is_in_S(rs, f).in_S;

    rep.pass = rep.orbit_equals_enumeration && rep.all_in_S;
    return rep;
}

namespace {

void trace_criterion_tally(const RootSystem& rs, const GroupSet& coxeter_class,
                           const Factorization& fz, TraceCriterionReport& rep) {
    ++rep.tuples;
    if (!is_in_S(rs, fz).in_S) return;
    ++rep.in_S;
    const IntMat p = factorization_product(rs, fz);
    const bool is_cox = coxeter_class.count(p) > 0;
    const bool minus_one = p.trace() == -1;
    if (is_cox) ++rep.coxeter;
    if (minus_one) ++rep.trace_minus_one;
    if (is_cox != minus_one) ++rep.mismatches;
}

}  // namespace

TraceCriterionReport verify_trace_criterion_exhaustive(const RootSystem& rs) {
    if (rs.rank > 3)
        throw DomainError("exhaustive trace check is gated to rank <= 3");
    const GroupSet cls = coxeter_conjugacy_class(rs);
    TraceCriterionReport rep;
    const std::size_t nroots = rs.positive.size();
    std::vector<std::size_t> idx(rs.rank, 0);
    while (true) {
        Factorization fz;
        for (std::size_t i : idx) fz.roots.push_back(rs.positive[i]);
        trace_criterion_tally(rs, cls, fz, rep);
        int v = 0;
        for (; v < rs.rank; ++v) {
            if (++idx[v] < nroots) break;
            idx[v] = 0;
        }
        if (v == rs.rank) break;
    }
    rep.pass = rep.mismatches == 0;
    return rep;
}

TraceCriterionReport verify_trace_criterion_sampled(const RootSystem& rs,
                                                    std::uint64_t samples,
                                                    std::uint64_t seed) {
    if (rs.rank > 4)
        throw DomainError("the sampled trace check needs an exact Coxeter decision "
                          "(rank <= 4)");
    const GroupSet cls = coxeter_conjugacy_class(rs);
    TraceCriterionReport rep;
    std::mt19937_64 rng(seed);
    for (std::uint64_t k = 0; k < samples; ++k) {
        Factorization fz;
        for (int i = 0; i < rs.rank; ++i)
            fz.roots.push_back(rs.positive[static_cast<std::size_t>(
                rng() % rs.positive.size())]);
        trace_criterion_tally(rs, cls, fz, rep);
    }
    rep.pass = rep.mismatches == 0;
    return rep;
}

MonodromyReport verify_monodromy_trace(const RootSystem& rs) {
    const CycleLattice lat = lattice_from_root_system(rs);
    const IntMat m = tuple_transvection_product(standard_tuple(lat));
    MonodromyReport rep;
    rep.trace = m.trace();
    rep.equals_coxeter = m == coxeter_element(rs);
    rep.pass = rep.trace == -1 && rep.equals_coxeter;
    return rep;
}

namespace {

// Does perm extend to an isomorphism onto the Dynkin graph? abs_gram holds
// |B(root_i, root_j)|; cartan_abs the target |C| entries.
bool diagram_match(const std::vector<std::vector<std::int64_t>>& abs_gram,
                   const IntMat& cartan) {
    const std::size_t n = abs_gram.size();
    std::vector<int> perm(n, -1);
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, std::size_t pos) -> bool {
        if (pos == n) return true;
        for (std::size_t cand = 0; cand < n; ++cand) {
            if (used[cand]) continue;
            bool ok = true;
            for (std::size_t prev = 0; prev < pos && ok; ++prev) {
                const std::int64_t want =
                    cartan.at(pos, prev) < 0 ? -cartan.at(pos, prev) : cartan.at(pos, prev);
                ok = abs_gram[cand][static_cast<std::size_t>(perm[prev])] == want;
            }
            if (!ok) continue;
            perm[pos] = static_cast<int>(cand);
            used[cand] = true;
            if (self(self, pos + 1)) return true;
            used[cand] = false;
            perm[pos] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

}  // namespace

Factorization canonical_dynkin_search(const RootSystem& rs, const Factorization& fz,
                                      std::size_t limit) {
    const SMembership memb = is_in_S(rs, fz);
    if (!memb.in_S)
        throw DomainError("canonical diagram search requires a factorization in S");
    if (!is_coxeter_element(rs, factorization_product(rs, fz)))
        throw DomainError("canonical diagram search requires a Coxeter product");

    const std::size_t n = fz.roots.size();
    auto matches = [&](const Factorization& f) {
        std::vector<std::vector<std::int64_t>> gram(n, std::vector<std::int64_t>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::int64_t b = bilinear(rs, f.roots[i], f.roots[j]);
                gram[i][j] = b < 0 ? -b : b;
            }
        return diagram_match(gram, rs.cartan);
    };

    // Breadth-first through the orbit so the first hit is canonical.
    std::unordered_set<std::vector<std::int64_t>, IntVecHash> seen;
    std::deque<Factorization> queue;
    seen.insert(orbit_key(fz));
    queue.push_back(fz);
    while (!queue.empty()) {
        Factorization x = std::move(queue.front());
        queue.pop_front();
        if (matches(x)) return x;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            for (const bool inv : {false, true}) {
                Factorization y = hurwitz_move(rs, x, static_cast<int>(i), inv);
                if (seen.insert(orbit_key(y)).second) {
                    if (seen.size() > limit)
                        throw LimitError("orbit limit " + std::to_string(limit) +
                                         " exceeded during diagram search");
                    queue.push_back(std::move(y));
                }
            }
        }
    }
    throw DomainError("no diagram-shaped factorization in the Hurwitz orbit");
}

DynkinGraph dynkin_diagram(const RootSystem& rs, const std::vector<RootVec>& roots) {
    DynkinGraph g;
    g.nodes = static_cast<int>(roots.size());
    for (const RootVec& r : roots)
        if (!rs.is_root(r)) throw DomainError("diagram node is not a root");
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            std::int64_t b = bilinear(rs, roots[i], roots[j]);
            if (b < 0) b = -b;
            if (b != 0)
                g.edges.push_back({static_cast<int>(i), static_cast<int>(j), b});
        }
    return g;
}

}  // namespace ade
