#include "ade/weyl.hpp"

#include <algorithm>
#include <deque>
#include <random>

namespace ade {

RootSystemType root_system_type_from_string(const std::string& s) {
    if (s.size() < 2) throw DomainError("malformed root system type: " + s);
    RootSystemType t;
    t.letter = s[0];
    try {
        std::size_t used = 0;
        t.rank = std::stoi(s.substr(1), &used);
        if (used != s.size() - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw DomainError("malformed root system type: " + s);
    }
    validate_type(t);
    return t;
}

void validate_type(const RootSystemType& t) {
    switch (t.letter) {
        case 'A':
            if (t.rank >= 1) return;
            break;
        case 'D':
            if (t.rank >= 4) return;
            break;
        case 'E':
            if (t.rank >= 6 && t.rank <= 8) return;
            break;
        default:
            break;
    }
    throw DomainError("unsupported root system type: " + t.name());
}

IntMat cartan_matrix(const RootSystemType& t) {
    validate_type(t);
    const int n = t.rank;
    IntMat c(n);
    for (int i = 0; i < n; ++i) c.at(i, i) = 2;
    auto bond = [&c](int i, int j) {
        c.at(i, j) = -1;
        c.at(j, i) = -1;
    };
    if (t.letter == 'A') {
        for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
    } else if (t.letter == 'D') {
        for (int i = 0; i + 1 < n - 1; ++i) bond(i, i + 1);
        bond(n - 3, n - 1);
    } else {
        // E_n: chain 1-3-4-5-...-n with node 2 attached to node 4
        // (Bourbaki). 0-based: chain 0,2,3,...,n-1 and bond(1,3).
        bond(0, 2);
        for (int i = 2; i + 1 < n; ++i) bond(i, i + 1);
        bond(1, 3);
    }
    return c;
}

std::int64_t height(const RootVec& v) {
    std::int64_t h = 0;
    for (std::int64_t x : v) h += x;
    return h;
}

RootSystem build_root_system(const RootSystemType& t) {
    validate_type(t);
    RootSystem rs;
    rs.type = t;
    rs.rank = t.rank;
    rs.cartan = cartan_matrix(t);
    const int n = t.rank;

    std::deque<RootVec> queue;
    for (int i = 0; i < n; ++i) {
        RootVec e(n, 0);
        e[i] = 1;
        rs.root_set.insert(e);
        queue.push_back(e);
    }
    while (!queue.empty()) {
        const RootVec x = queue.front();
        queue.pop_front();
        // Pairing with the i-th simple root is the i-th entry of C x.
        std::vector<std::int64_t> cx(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) cx[i] += rs.cartan.at(i, j) * x[j];
        for (int i = 0; i < n; ++i) {
            RootVec y = x;
            y[i] -= cx[i];
            if (rs.root_set.insert(y).second) queue.push_back(y);
        }
    }
    rs.roots.assign(rs.root_set.begin(), rs.root_set.end());

    for (const RootVec& r : rs.roots) {
        bool nonneg = true;
        for (std::int64_t v : r) nonneg = nonneg && v >= 0;
        if (nonneg) rs.positive.push_back(r);
        if (bilinear(rs, r, r) != 2)
            throw DomainError("internal: root with square length != 2 in " + t.name());
    }
    std::sort(rs.positive.begin(), rs.positive.end(),
              [](const RootVec& a, const RootVec& b) {
                  const std::int64_t ha = height(a), hb = height(b);
                  if (ha != hb) return ha < hb;
                  return a < b;
              });

    std::size_t expected = 0;
    if (t.letter == 'A') expected = static_cast<std::size_t>(n) * (n + 1);
    else if (t.letter == 'D') expected = 2 * static_cast<std::size_t>(n) * (n - 1);
    else expected = n == 6 ? 72 : n == 7 ? 126 : 240;
    if (rs.roots.size() != expected || rs.positive.size() * 2 != rs.roots.size())
        throw DomainError("internal: root count mismatch for " + t.name());
    return rs;
}

std::int64_t bilinear(const RootSystem& rs, const RootVec& x, const RootVec& y) {
    const int n = rs.rank;
    if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
        throw DomainError("vector arity does not match the root system rank");
    std::int64_t b = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b += x[i] * rs.cartan.at(i, j) * y[j];
    return b;
}

IntMat reflection(const RootSystem& rs, const RootVec& alpha) {
    if (!rs.is_root(alpha))
        throw DomainError("reflection requires a root of the system");
    const int n = rs.rank;
    std::vector<std::int64_t> ca(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) ca[i] += rs.cartan.at(i, j) * alpha[j];
    IntMat m = IntMat::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) -= alpha[i] * ca[j];
    return m;
}

IntMat simple_reflection(const RootSystem& rs, int i) {
    if (i < 0 || i >= rs.rank) throw DomainError("simple reflection index out of range");
    RootVec e(rs.rank, 0);
    e[i] = 1;
    return reflection(rs, e);
}

IntMat coxeter_element(const RootSystem& rs) {
    IntMat c = IntMat::identity(rs.rank);
    for (int i = 0; i < rs.rank; ++i) c = c * simple_reflection(rs, i);
    return c;
}

ExponentData exponents_and_coxeter_number(const RootSystem& rs) {
    std::vector<std::size_t> count;  // count[h-1] = roots of height h
    for (const RootVec& r : rs.positive) {
        const std::size_t h = static_cast<std::size_t>(height(r));
        if (count.size() < h) count.resize(h, 0);
        ++count[h - 1];
    }
    ExponentData out;
    // Dual partition: the i-th exponent counts heights with at least i roots.
    for (std::size_t i = 1; i <= count[0]; ++i) {
        int m = 0;
        for (std::size_t h = 0; h < count.size(); ++h)
            if (count[h] >= i) ++m;
        out.exponents.push_back(m);
    }
    std::sort(out.exponents.begin(), out.exponents.end());
    if (static_cast<int>(out.exponents.size()) != rs.rank)
        throw DomainError("internal: exponent count differs from rank");
    std::size_t total = 0;
    for (int m : out.exponents) total += static_cast<std::size_t>(m);
    if (total != rs.positive.size())
        throw DomainError("internal: exponents do not sum to the number of positive roots");
    out.coxeter_number = out.exponents.back() + 1;
    return out;
}

std::uint64_t element_order(const IntMat& w, std::uint64_t cap) {
    const IntMat id = IntMat::identity(w.dim());
    IntMat p = w;
    for (std::uint64_t k = 1; k <= cap; ++k) {
        if (p == id) return k;
        p = p * w;
    }
    throw LimitError("element order exceeds cap " + std::to_string(cap));
}

int reflection_length(const IntMat& w) {
    QMat m = w.to_qmat();
    for (std::size_t i = 0; i < w.dim(); ++i) m[i][i] -= 1;
    return static_cast<int>(qmat_rank(std::move(m)));
}

Int weyl_group_order(const RootSystemType& t) {
    const RootSystem rs = build_root_system(t);
    Int order = 1;
    for (int m : exponents_and_coxeter_number(rs).exponents) order *= (m + 1);
    return order;
}

std::vector<IntMat> enumerate_group(const RootSystem& rs, std::size_t limit) {
    std::vector<IntMat> gens;
    for (int i = 0; i < rs.rank; ++i) gens.push_back(simple_reflection(rs, i));
    GroupSet seen;
    std::deque<IntMat> queue;
    seen.insert(IntMat::identity(rs.rank));
    queue.push_back(IntMat::identity(rs.rank));
    while (!queue.empty()) {
        const IntMat x = queue.front();
        queue.pop_front();
        for (const IntMat& g : gens) {
            IntMat y = x * g;
            if (seen.insert(y).second) {
                if (seen.size() > limit)
                    throw LimitError("group enumeration exceeds limit " +
                                     std::to_string(limit));
                queue.push_back(std::move(y));
            }
        }
    }
    std::vector<IntMat> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

RootVec highest_root(const RootSystem& rs) {
    if (rs.positive.empty()) throw DomainError("root system has no positive roots");
    return rs.positive.back();  // positive roots are sorted by height
}

IntMat affine_cartan_matrix(const RootSystemType& t) {
    const RootSystem rs = build_root_system(t);
    const int n = rs.rank;
    const RootVec theta = highest_root(rs);
    IntMat ext(n + 1);
    ext.at(0, 0) = 2;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) ext.at(i + 1, j + 1) = rs.cartan.at(i, j);
    for (int j = 0; j < n; ++j) {
        RootVec e(n, 0);
        e[j] = 1;
        const std::int64_t b = -bilinear(rs, theta, e);  // B(-theta, alpha_j)
        ext.at(0, j + 1) = b;
        ext.at(j + 1, 0) = b;
    }
    return ext;
}

std::string to_string(Definiteness d) {
    switch (d) {
        case Definiteness::positive_definite: return "positive-definite";
        case Definiteness::negative_definite: return "negative-definite";
        case Definiteness::semidefinite: return "semidefinite";
        case Definiteness::indefinite: return "indefinite";
    }
    return "?";
}

namespace {

// Sign changes over the nonzero coefficients; exact count of positive roots
// for a real-rooted polynomial.
int descartes_variations(const QVec& coeffs) {
    int var = 0;
    int last = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        if (*it == 0) continue;
        const int s = *it > 0 ? 1 : -1;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

}  // namespace

Definiteness definiteness(const QMat& form) {
    const std::size_t n = form.size();
    if (n == 0) throw DomainError("definiteness of an empty form");
    for (std::size_t i = 0; i < n; ++i) {
        if (form[i].size() != n) throw DomainError("definiteness requires a square matrix");
        for (std::size_t j = 0; j < i; ++j)
            if (form[i][j] != form[j][i])
                throw DomainError("definiteness requires a symmetric matrix");
    }

    // Sylvester fast path: nonzero leading principal minors of a definite
    // pattern settle the question.
    bool all_pos = true, alternating = true, any_zero = false;
    for (std::size_t k = 1; k <= n && !any_zero; ++k) {
        QMat lead = qmat_zero(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) lead[i][j] = form[i][j];
        const Rat d = qmat_det(std::move(lead));
        if (d == 0) { any_zero = true; break; }
        if (d < 0) all_pos = false;
        if ((k % 2 == 1) != (d < 0)) alternating = false;  // expect sign (-1)^k
    }
    if (!any_zero) {
        if (all_pos) return Definiteness::positive_definite;
        if (alternating) return Definiteness::negative_definite;
    }

    // General exact path: eigenvalue sign counts from the characteristic
    // polynomial (all roots are real for a symmetric matrix).
    const QVec chi = char_poly(form);
    std::size_t zero_mult = 0;
    while (zero_mult <= n && chi[zero_mult] == 0) ++zero_mult;
    QVec reduced(chi.begin() + static_cast<std::ptrdiff_t>(zero_mult), chi.end());
    const int pos = descartes_variations(reduced);
    QVec flipped = reduced;
    for (std::size_t k = 0; k < flipped.size(); ++k)
        if (k % 2 == 1) flipped[k] = -flipped[k];
    const int neg = descartes_variations(flipped);

    if (pos > 0 && neg > 0) return Definiteness::indefinite;
    if (zero_mult == 0)
        return pos > 0 ? Definiteness::positive_definite : Definiteness::negative_definite;
    return Definiteness::semidefinite;
}

GroupSet coxeter_conjugacy_class(const RootSystem& rs, std::size_t limit) {
    std::vector<IntMat> gens;
    for (int i = 0; i < rs.rank; ++i) gens.push_back(simple_reflection(rs, i));
    GroupSet cls;
    std::deque<IntMat> queue;
    const IntMat c = coxeter_element(rs);
    cls.insert(c);
    queue.push_back(c);
    while (!queue.empty()) {
        const IntMat x = queue.front();
        queue.pop_front();
        for (const IntMat& g : gens) {
            IntMat y = g * x * g;  // simple reflections are involutions
            if (cls.insert(y).second) {
                if (cls.size() > limit)
                    throw LimitError("conjugacy class exceeds limit " +
                                     std::to_string(limit));
                queue.push_back(std::move(y));
            }
        }
    }
    return cls;
}

bool is_coxeter_element(const RootSystem& rs, const IntMat& w,
                        const CoxeterDecisionOptions& opts) {
    const int n = rs.rank;
    if (static_cast<int>(w.dim()) != n)
        throw DomainError("element dimension does not match the root system");
    // Group membership sanity: w must preserve the Cartan form.
    if (w.transpose() * rs.cartan * w != rs.cartan)
        throw DomainError("matrix does not preserve the Cartan form");

    const IntMat c = coxeter_element(rs);
    if (w == c) return true;

    // Complete rejections: conjugate elements share order and
    // characteristic polynomial.
    const int h = exponents_and_coxeter_number(rs).coxeter_number;
    std::uint64_t order;
    try {
        order = element_order(w, static_cast<std::uint64_t>(h) + 1);
    } catch (const LimitError&) {
        return false;
    }
    if (order != static_cast<std::uint64_t>(h)) return false;
    if (char_poly(w.to_qmat()) != char_poly(c.to_qmat())) return false;

    const bool small = n <= 4 || (rs.type.letter == 'A' && n == 5);
    if (small) return coxeter_conjugacy_class(rs).count(w) > 0;

    // Large rank: seeded random conjugation search; can only certify "yes".
    std::vector<IntMat> gens;
    for (int i = 0; i < n; ++i) gens.push_back(simple_reflection(rs, i));
    std::mt19937_64 rng(opts.seed);
    IntMat g = IntMat::identity(n);
    IntMat ginv = IntMat::identity(n);
    for (std::uint64_t it = 0; it < opts.budget; ++it) {
        const IntMat& s = gens[static_cast<std::size_t>(rng() % gens.size())];
        g = g * s;
        ginv = s * ginv;  // each generator is an involution
        if (g * c * ginv == w) return true;
    }
    throw UndecidedError("conjugation search budget exhausted for " + rs.type.name());
}

}  // namespace ade
