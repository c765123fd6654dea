#include "ade/poly.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "ade/linalg.hpp"

namespace ade {

int grlex_cmp(const Monomial& a, const Monomial& b) {
    if (a.size() != b.size())
        throw DomainError("monomial arity mismatch in comparison");
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

int total_degree(const Monomial& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

bool monomial_divides(const Monomial& a, const Monomial& b) {
    if (a.size() != b.size()) throw DomainError("monomial arity mismatch in divisibility");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Monomial monomial_quotient(const Monomial& b, const Monomial& a) {
    if (!monomial_divides(a, b)) throw DomainError("monomial quotient is not a monomial");
    Monomial q(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) q[i] = b[i] - a[i];
    return q;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    if (a.size() != b.size()) throw DomainError("monomial arity mismatch in product");
    Monomial p(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) p[i] = a[i] + b[i];
    return p;
}

Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
    if (a.size() != b.size()) throw DomainError("monomial arity mismatch in lcm");
    Monomial l(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
    return l;
}

Rat weighted_degree(const Monomial& m, const Weights& w) {
    if (m.size() != w.size()) throw DomainError("weight vector arity mismatch");
    Rat d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += Rat(m[i]) * w[i];
    return d;
}

Polynomial Polynomial::constant(int nvars, const Rat& c) {
    Polynomial p(nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
}

Polynomial Polynomial::monomial_term(const Monomial& m, const Rat& c) {
    Polynomial p(static_cast<int>(m.size()));
    p.add_term(m, c);
    return p;
}

Rat Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rat& c) {
    if (static_cast<int>(m.size()) != nvars_)
        throw DomainError("term arity does not match polynomial");
    for (int e : m)
        if (e < 0) throw DomainError("negative exponent in monomial");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Polynomial::check_vars(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw DomainError("polynomial arity mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_vars(o);
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    check_vars(o);
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_vars(o);
    Polynomial r(nvars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(monomial_mul(ma, mb), ca * cb);
    return r;
}

Polynomial Polynomial::scaled(const Rat& c) const {
    Polynomial r(nvars_);
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

int Polynomial::degree() const {
    if (terms_.empty()) return -1;
    // Terms are sorted graded-lex descending, so the first has max degree.
    return total_degree(terms_.begin()->first);
}

Polynomial Polynomial::derivative(int var) const {
    if (var < 0 || var >= nvars_) throw DomainError("derivative variable out of range");
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Monomial d = m;
        d[var] -= 1;
        r.add_term(d, c * Rat(m[var]));
    }
    return r;
}

std::vector<Monomial> Polynomial::support() const {
    std::vector<Monomial> s;
    s.reserve(terms_.size());
    for (const auto& [m, c] : terms_) s.push_back(m);
    return s;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
    if (static_cast<int>(names.size()) != nvars_)
        throw DomainError("variable name list does not match polynomial arity");
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool neg = c < 0;
        const Rat a = neg ? Rat(-c) : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string vars;
        for (int i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += names[i];
            if (m[i] > 1) vars += "^" + std::to_string(m[i]);
        }
        if (vars.empty()) {
            out += rat_to_string(a);
        } else if (a == 1) {
            out += vars;
        } else {
            out += rat_to_string(a) + "*" + vars;
        }
    }
    return out;
}

namespace {

// ---- expression parser -------------------------------------------------

struct Token {
    enum Kind { Number, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };
    Kind kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) {}

    Token next() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        const std::size_t start = i_;
        if (i_ >= s_.size()) return {Token::End, "", start};
        const char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            Token t{Token::Number, s_.substr(i_, j - i_), start};
            i_ = j;
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i_;
            while (j < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
                ++j;
            Token t{Token::Ident, s_.substr(i_, j - i_), start};
            i_ = j;
            return t;
        }
        ++i_;
        switch (c) {
            case '+': return {Token::Plus, "+", start};
            case '-': return {Token::Minus, "-", start};
            case '*': return {Token::Star, "*", start};
            case '^': return {Token::Caret, "^", start};
            case '/': return {Token::Slash, "/", start};
            case '(': return {Token::LParen, "(", start};
            case ')': return {Token::RParen, ")", start};
        }
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }

private:
    const std::string& s_;
    std::size_t i_ = 0;
};

class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& names)
        : lex_(text), names_(names), nvars_(static_cast<int>(names.size())) {
        cur_ = lex_.next();
    }

    Polynomial run() {
        Polynomial p = expr();
        expect(Token::End, "end of input");
        return p;
    }

private:
    void advance() { cur_ = lex_.next(); }

    void expect(Token::Kind k, const std::string& what) {
        if (cur_.kind != k)
            throw ParseError("expected " + what + ", got '" + describe(cur_) + "'", cur_.pos);
        if (k != Token::End) advance();
    }

    static std::string describe(const Token& t) {
        return t.kind == Token::End ? "end of input" : t.text;
    }

    int var_index(const Token& t) const {
        for (int i = 0; i < nvars_; ++i)
            if (names_[i] == t.text) return i;
        throw ParseError("unknown variable '" + t.text + "'", t.pos);
    }

    long parse_nat(const std::string& what, long max) {
        if (cur_.kind != Token::Number)
            throw ParseError("expected " + what + ", got '" + describe(cur_) + "'", cur_.pos);
        if (cur_.text.size() > 9 || std::stol(cur_.text) > max)
            throw ParseError(what + " exceeds the supported range", cur_.pos);
        const long v = std::stol(cur_.text);
        advance();
        return v;
    }

    Polynomial expr() {
        bool neg = false;
        if (cur_.kind == Token::Plus || cur_.kind == Token::Minus) {
            neg = cur_.kind == Token::Minus;
            advance();
        }
        Polynomial acc = term();
        if (neg) acc = -acc;
        while (cur_.kind == Token::Plus || cur_.kind == Token::Minus) {
            const bool sub = cur_.kind == Token::Minus;
            advance();
            Polynomial t = term();
            acc = sub ? acc - t : acc + t;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (cur_.kind == Token::Star) {
            advance();
            acc = acc * factor();
        }
        return acc;
    }

    Polynomial factor() {
        if (cur_.kind == Token::Number) {
            const Token num = cur_;
            advance();
            Rat c(Int(num.text), 1);
            if (cur_.kind == Token::Slash) {
                advance();
                if (cur_.kind != Token::Number)
                    throw ParseError("expected denominator, got '" + describe(cur_) + "'",
                                     cur_.pos);
                const Int d(cur_.text);
                if (d == 0) throw ParseError("zero denominator", cur_.pos);
                advance();
                c /= Rat(d);
            }
            return Polynomial::constant(nvars_, c);
        }
        if (cur_.kind == Token::Ident) {
            const int v = var_index(cur_);
            advance();
            long e = 1;
            if (cur_.kind == Token::Caret) {
                advance();
                e = parse_nat("exponent (a non-negative integer)", 1000000);
            }
            Monomial m(nvars_, 0);
            m[v] = static_cast<int>(e);
            return Polynomial::monomial_term(m, Rat(1));
        }
        if (cur_.kind == Token::LParen) {
            advance();
            Polynomial p = expr();
            expect(Token::RParen, "')'");
            return p;
        }
        throw ParseError("expected a coefficient, variable or '('; got '" +
                             describe(cur_) + "'",
                         cur_.pos);
    }

    Lexer lex_;
    Token cur_;
    const std::vector<std::string>& names_;
    int nvars_;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text,
                            const std::vector<std::string>& varnames) {
    std::set<std::string> seen;
    for (const auto& n : varnames)
        if (!seen.insert(n).second)
            throw DomainError("duplicate variable name '" + n + "'");
    return Parser(text, varnames).run();
}

std::vector<std::string> detect_variables(const std::string& text) {
    std::set<std::string> names;
    Lexer lex(text);
    for (Token t = lex.next(); t.kind != Token::End; t = lex.next())
        if (t.kind == Token::Ident) names.insert(t.text);
    return {names.begin(), names.end()};
}

std::optional<Weights> find_quasihomogeneous_weights(const Polynomial& f) {
    const int n = f.nvars();
    if (f.is_zero() || n == 0) return std::nullopt;
    const std::vector<Monomial> supp = f.support();
    QMat rows;
    for (const Monomial& k : supp) {
        QVec row(n);
        for (int i = 0; i < n; ++i) row[i] = Rat(k[i]);
        rows.push_back(row);
    }
    const QVec rhs(rows.size(), Rat(1));
    const LinearSolution sol = solve_linear(rows, rhs);
    if (!sol.consistent) return std::nullopt;

    const Rat half(1, 2);
    if (sol.unique) {
        for (const Rat& v : sol.solution)
            if (!(v > 0 && v < 1)) return std::nullopt;
        return sol.solution;
    }

    // Underdetermined: pick the vertex of {<k,nu> = 1, 0 < nu <= 1/2} with
    // minimal coordinate sum (lexicographic tie-break). Vertices are found
    // by pinning coordinate subsets to the box bounds {0, 1/2} and keeping
    // the admissible unique solutions.
    std::vector<int> which(n, 0);  // 0 = free, 1 = pin 0, 2 = pin 1/2
    std::vector<bool> pinnable(n, true);
    if (n > 10) {
        // Beyond 10 variables restrict pinning to the free columns; the
        // corpus never gets near this.
        pinnable.assign(n, false);
        for (std::size_t c : sol.free_cols) pinnable[c] = true;
    }
    std::optional<QVec> best;
    std::optional<Rat> best_sum;
    std::set<QVec> seen;
    while (true) {
        QMat sys = rows;
        QVec b(rows.size(), Rat(1));
        for (int i = 0; i < n; ++i) {
            if (which[i] == 0) continue;
            QVec row(n, Rat(0));
            row[i] = 1;
            sys.push_back(row);
            b.push_back(which[i] == 1 ? Rat(0) : half);
        }
        const LinearSolution s = solve_linear(sys, b);
        if (s.consistent && s.unique) {
            bool ok = true;
            for (const Rat& v : s.solution)
                if (!(v > 0 && v <= half)) { ok = false; break; }
            if (ok && seen.insert(s.solution).second) {
                Rat sum = 0;
                for (const Rat& v : s.solution) sum += v;
                if (!best || sum < *best_sum || (sum == *best_sum && s.solution < *best)) {
                    best = s.solution;
                    best_sum = sum;
                }
            }
        }
        int i = 0;
        for (; i < n; ++i) {
            if (!pinnable[i]) continue;
            if (++which[i] <= 2) break;
            which[i] = 0;
        }
        if (i == n) break;
    }
    return best ? std::optional<Weights>(*best) : std::nullopt;
}

std::vector<Polynomial> jacobian_generators(const Polynomial& f) {
    std::vector<Polynomial> gens;
    gens.reserve(f.nvars());
    for (int i = 0; i < f.nvars(); ++i) gens.push_back(f.derivative(i));
    return gens;
}

int hessian_corank(const Polynomial& f) {
    const int n = f.nvars();
    QMat h = qmat_zero(n, n);
    for (const auto& [m, c] : f.terms()) {
        const int d = total_degree(m);
        if (d < 2)
            throw DomainError("Hessian corank requires a germ without constant or linear terms");
        if (d != 2) continue;
        int i = -1, j = -1;
        for (int v = 0; v < n; ++v) {
            if (m[v] == 2) { i = j = v; }
            else if (m[v] == 1) { (i < 0 ? i : j) = v; }
        }
        if (i == j) {
            h[i][i] += 2 * c;
        } else {
            h[i][j] += c;
            h[j][i] += c;
        }
    }
    return n - static_cast<int>(qmat_rank(h));
}

}  // namespace ade
