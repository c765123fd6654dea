#include "ade/grobner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ade {

int TermOrder::cmp(const Monomial& a, const Monomial& b) const {
    if (weights.empty()) return grlex_cmp(a, b);
    const Rat da = weighted_degree(a, weights), db = weighted_degree(b, weights);
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

void TermOrder::validate(int nvars) const {
    if (weights.empty()) return;
    if (static_cast<int>(weights.size()) != nvars)
        throw DomainError("term order weight vector arity mismatch");
    for (const Rat& w : weights)
        if (!(w > 0)) throw DomainError("term order weights must be positive");
}

std::pair<Monomial, Rat> leading_term(const Polynomial& p, const TermOrder& order) {
    if (p.is_zero()) throw DomainError("leading term of the zero polynomial");
    auto it = p.terms().begin();
    auto best = it;
    for (++it; it != p.terms().end(); ++it)
        if (order.cmp(it->first, best->first) > 0) best = it;
    return {best->first, best->second};
}

namespace {

Polynomial reduce_full(const Polynomial& p, const std::vector<Polynomial>& basis,
                       const std::vector<Monomial>& lead, const TermOrder& order) {
    Polynomial h = p;
    Polynomial r(p.nvars());
    while (!h.is_zero()) {
        auto [m, c] = leading_term(h, order);
        bool reduced = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (!monomial_divides(lead[i], m)) continue;
            const Rat lc = basis[i].coeff(lead[i]);
            const Monomial q = monomial_quotient(m, lead[i]);
            h = h - basis[i].scaled(c / lc) * Polynomial::monomial_term(q, Rat(1));
            reduced = true;
            break;
        }
        if (!reduced) {
            r.add_term(m, c);
            h.add_term(m, -c);
        }
    }
    return r;
}

}  // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, TermOrder order) {
    GroebnerBasis out;
    out.order = order;

    std::vector<Polynomial> basis;
    for (const Polynomial& g : gens) {
        if (g.is_zero()) continue;
        if (basis.empty()) out.nvars = g.nvars();
        if (g.nvars() != (basis.empty() ? g.nvars() : basis.front().nvars()))
            throw DomainError("generators live in different polynomial rings");
        basis.push_back(g);
    }
    if (basis.empty()) {
        out.nvars = gens.empty() ? 0 : gens.front().nvars();
        return out;
    }
    out.nvars = basis.front().nvars();
    order.validate(out.nvars);

    std::vector<Monomial> lead;
    for (const Polynomial& g : basis) lead.push_back(leading_term(g, order).first);

    // Pending S-pairs keyed by their lcm so the smallest lcm is processed
    // first (normal selection strategy).
    struct PairKey {
        Monomial lcm;
        std::size_t i, j;
    };
    auto key_less = [&order](const PairKey& a, const PairKey& b) {
        const int c = order.cmp(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::set<PairKey, decltype(key_less)> pairs(key_less);
    auto push_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            // The S-polynomial of two monomials cancels identically.
            if (basis[i].terms().size() == 1 && basis[j].terms().size() == 1) continue;
            pairs.insert({monomial_lcm(lead[i], lead[j]), i, j});
        }
    };
    for (std::size_t j = 1; j < basis.size(); ++j) push_pairs_for(j);

    while (!pairs.empty()) {
        const PairKey pk = *pairs.begin();
        pairs.erase(pairs.begin());
        // Product criterion: coprime leading terms give an S-polynomial
        // that always reduces to zero.
        if (pk.lcm == monomial_mul(lead[pk.i], lead[pk.j])) continue;
        const Polynomial& f = basis[pk.i];
        const Polynomial& g = basis[pk.j];
        const Rat lcf = f.coeff(lead[pk.i]);
        const Rat lcg = g.coeff(lead[pk.j]);
        const Polynomial spoly =
            f.scaled(Rat(1) / lcf) *
                Polynomial::monomial_term(monomial_quotient(pk.lcm, lead[pk.i]), Rat(1)) -
            g.scaled(Rat(1) / lcg) *
                Polynomial::monomial_term(monomial_quotient(pk.lcm, lead[pk.j]), Rat(1));
        const Polynomial rem = reduce_full(spoly, basis, lead, order);
        if (rem.is_zero()) continue;
        basis.push_back(rem);
        lead.push_back(leading_term(rem, order).first);
        push_pairs_for(basis.size() - 1);
    }

    // Minimalize: drop elements whose leading term another leading term
    // divides.
    std::vector<Polynomial> minimal;
    std::vector<Monomial> minlead;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            if (!monomial_divides(lead[j], lead[i])) continue;
            // Leading-term ties keep the earlier element.
            if (lead[j] == lead[i] && j > i) continue;
            redundant = true;
            break;
        }
        if (!redundant) {
            minimal.push_back(basis[i]);
            minlead.push_back(lead[i]);
        }
    }

    // Reduce: normalize each element to monic with a fully reduced tail.
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        std::vector<Monomial> otherlead;
        for (std::size_t j = 0; j < minimal.size(); ++j) {
            if (j == i) continue;
            others.push_back(minimal[j]);
            otherlead.push_back(minlead[j]);
        }
        Polynomial r = reduce_full(minimal[i], others, otherlead, order);
        r = r.scaled(Rat(1) / r.coeff(leading_term(r, order).first));
        reduced.push_back(r);
    }

    std::sort(reduced.begin(), reduced.end(),
              [&order](const Polynomial& a, const Polynomial& b) {
                  return order.less(leading_term(a, order).first,
                                    leading_term(b, order).first);
              });
    out.gens = std::move(reduced);
    return out;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
    if (gb.gens.empty()) return p;
    if (p.nvars() != gb.nvars)
        throw DomainError("polynomial arity does not match the basis");
    std::vector<Monomial> lead;
    for (const Polynomial& g : gb.gens) lead.push_back(leading_term(g, gb.order).first);
    return reduce_full(p, gb.gens, lead, gb.order);
}

std::vector<Monomial> quotient_monomial_basis(const GroebnerBasis& gb) {
    const int n = gb.nvars;
    std::vector<Monomial> lead;
    for (const Polynomial& g : gb.gens) {
        lead.push_back(leading_term(g, gb.order).first);
        if (total_degree(lead.back()) == 0) return {};  // ideal contains a unit
    }
    if (gb.gens.empty())
        throw NotZeroDimensionalError("the zero ideal has an infinite-dimensional quotient");

    // Finite quotient needs a pure power of every variable among the
    // leading terms; that power bounds the staircase in that direction.
    std::vector<int> bound(n, -1);
    for (const Monomial& m : lead) {
        int var = -1;
        bool pure = true;
        for (int v = 0; v < n; ++v) {
            if (m[v] == 0) continue;
            if (var >= 0) { pure = false; break; }
            var = v;
        }
        if (!pure || var < 0) continue;
        if (bound[var] < 0 || m[var] < bound[var]) bound[var] = m[var];
    }
    for (int v = 0; v < n; ++v)
        if (bound[v] < 0)
            throw NotZeroDimensionalError(
                "no pure power of variable " + std::to_string(v + 1) +
                " in the leading-term staircase; the quotient is infinite dimensional");

    std::vector<Monomial> basis;
    Monomial m(n, 0);
    while (true) {
        bool standard = true;
        for (const Monomial& l : lead)
            if (monomial_divides(l, m)) { standard = false; break; }
        if (standard) basis.push_back(m);
        int v = 0;
        for (; v < n; ++v) {
            if (++m[v] < bound[v]) break;
            m[v] = 0;
        }
        if (v == n) break;
    }
    std::sort(basis.begin(), basis.end(),
              [&gb](const Monomial& a, const Monomial& b) { return gb.order.less(a, b); });
    return basis;
}

GroebnerBasis local_algebra_basis(const std::vector<Polynomial>& gens,
                                  TermOrder order, int cap) {
    int nvars = 0;
    for (const Polynomial& g : gens)
        if (!g.is_zero()) { nvars = g.nvars(); break; }
    if (nvars == 0)
        throw NotZeroDimensionalError(
            "the zero ideal localizes to an infinite-dimensional algebra");

    auto degree_monomials = [&](int deg) {
        std::vector<Polynomial> out;
        Monomial m(static_cast<std::size_t>(nvars), 0);
        m[0] = deg;
        while (true) {
            out.push_back(Polynomial::monomial_term(m, Rat(1)));
            // next composition of `deg` into nvars parts
            int i = 0;
            while (i < nvars - 1 && m[i] == 0) ++i;
            if (i == nvars - 1) break;
            const int carry = m[i];
            m[i] = 0;
            ++m[i + 1];
            m[0] = carry - 1;
        }
        return out;
    };

    GroebnerBasis prev;
    std::size_t prev_dim = 0;
    bool have_prev = false;
    for (int n = 4; n <= cap; n *= 2) {
        std::vector<Polynomial> padded = gens;
        for (auto& p : degree_monomials(n)) padded.push_back(std::move(p));
        GroebnerBasis gb = buchberger(padded, order);
        const std::size_t dim = quotient_monomial_basis(gb).size();
        // Dimensions grow strictly with the power until the maximal ideal
        // becomes nilpotent in the local factor, then stay constant; equal
        // consecutive values therefore certify the two ideals agree.
        if (have_prev && dim == prev_dim) return prev;
        prev = std::move(gb);
        prev_dim = dim;
        have_prev = true;
    }
    throw NotZeroDimensionalError(
        "local algebra dimension kept growing up to power " + std::to_string(cap) +
        "; the zero locus is not isolated at the origin");
}

std::size_t milnor_number(const Polynomial& f) {
    const GroebnerBasis gb = local_algebra_basis(jacobian_generators(f));
    return quotient_monomial_basis(gb).size();
}

Polynomial class_in_local_algebra(const Polynomial& f) {
    const GroebnerBasis gb = local_algebra_basis(jacobian_generators(f));
    return normal_form(f, gb);
}

}  // namespace ade
