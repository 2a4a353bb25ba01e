#include "bilip/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "bilip/errors.hpp"

namespace bilip {

int total_degree(const Mono& m) {
    int d = 0;
    for (auto e : m) d += static_cast<int>(e);
    return d;
}

bool mono_divides(const Mono& a, const Mono& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Mono mono_mul(const Mono& a, const Mono& b) {
    Mono r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Mono mono_div(const Mono& a, const Mono& b) {
    Mono r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (b[i] > a[i]) throw internal_error("mono_div: not divisible");
        r[i] = a[i] - b[i];
    }
    return r;
}

Mono mono_lcm(const Mono& a, const Mono& b) {
    Mono r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

int degrevlex_cmp(const Mono& a, const Mono& b) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db ? -1 : 1;
    // Reverse lexicographic: the mono whose last nonzero difference entry is
    // negative is the larger one.
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

Poly::Poly(int arity, const Rational& constant) : arity_(arity) {
    if (!bilip::is_zero(constant)) terms_.emplace(Mono(arity, 0), constant);
}

Poly Poly::variable(int arity, int var, std::uint32_t power) {
    if (var < 0 || var >= arity) throw internal_error("Poly::variable: index out of range");
    Poly p(arity);
    if (power == 0) return Poly(arity, Rational(1));
    Mono m(arity, 0);
    m[var] = power;
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

int Poly::degree() const {
    if (terms_.empty()) return -1;
    // Leading term under degrevlex has maximal total degree.
    return total_degree(terms_.begin()->first);
}

Rational Poly::coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Mono& m, const Rational& c) {
    if (static_cast<int>(m.size()) != arity_) throw internal_error("add_term: arity mismatch");
    if (bilip::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (bilip::is_zero(it->second)) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(arity_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (arity_ != o.arity_) throw internal_error("poly +=: arity mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (arity_ != o.arity_) throw internal_error("poly -=: arity mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    r -= o;
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    if (arity_ != o.arity_) throw internal_error("poly *: arity mismatch");
    Poly r(arity_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
}

Poly Poly::scaled(const Rational& c) const {
    Poly r(arity_);
    if (bilip::is_zero(c)) return r;
    for (const auto& [m, q] : terms_) r.terms_.emplace(m, q * c);
    return r;
}

Poly Poly::mono_scaled(const Mono& m, const Rational& c) const {
    Poly r(arity_);
    if (bilip::is_zero(c)) return r;
    for (const auto& [mm, q] : terms_) r.terms_.emplace(mono_mul(mm, m), q * c);
    return r;
}

Poly Poly::pow(std::uint32_t e) const {
    Poly r(arity_, Rational(1));
    Poly base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        base = (e >>= 1) ? base * base : base;
    }
    return r;
}

Poly Poly::primitive_part() const {
    if (terms_.empty()) return *this;
    mpz_class den_lcm(1), num_gcd(0);
    for (const auto& [m, c] : terms_) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (sgn(terms_.begin()->second) < 0) scale = -scale;
    return scaled(scale);
}

int Poly::compare(const Poly& a, const Poly& b) {
    if (a.arity_ != b.arity_) return a.arity_ < b.arity_ ? -1 : 1;
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
        int c = degrevlex_cmp(ia->first, ib->first);
        if (c != 0) return c;
        int s = cmp(ia->second, ib->second);
        if (s != 0) return s;
    }
    if (ia != a.terms_.end()) return 1;
    if (ib != b.terms_.end()) return -1;
    return 0;
}

Poly differentiate(const Poly& p, int var) {
    if (var < 0 || var >= p.arity()) throw input_error("differentiate: unknown variable");
    Poly r(p.arity());
    for (const auto& [m, c] : p.terms()) {
        if (m[var] == 0) continue;
        Mono dm = m;
        dm[var] -= 1;
        r.add_term(dm, c * Rational(static_cast<long>(m[var])));
    }
    return r;
}

Poly substitute(const Poly& p, const std::vector<Poly>& images, int target_arity) {
    if (static_cast<int>(images.size()) != p.arity())
        throw internal_error("substitute: one image per variable required");
    Poly r(target_arity);
    for (const auto& [m, c] : p.terms()) {
        Poly t(target_arity, c);
        for (int v = 0; v < p.arity(); ++v)
            if (m[v] > 0) t = t * images[v].pow(m[v]);
        r += t;
    }
    return r;
}

Poly embed(const Poly& p, int target_arity) {
    if (target_arity < p.arity()) throw internal_error("embed: target ring too small");
    Poly r(target_arity);
    for (const auto& [m, c] : p.terms()) {
        Mono mm = m;
        mm.resize(target_arity, 0);
        r.add_term(mm, c);
    }
    return r;
}

Rational evaluate(const Poly& p, const std::vector<Rational>& point) {
    if (static_cast<int>(point.size()) != p.arity())
        throw input_error("evaluate: point dimension mismatch");
    Rational acc(0);
    for (const auto& [m, c] : p.terms()) {
        Rational t = c;
        for (int v = 0; v < p.arity(); ++v)
            for (std::uint32_t k = 0; k < m[v]; ++k) t *= point[v];
        acc += t;
    }
    return acc;
}

bool try_divide_exact(const Poly& p, const Poly& d, Poly& q) {
    if (d.is_zero()) return false;
    if (p.arity() != d.arity()) throw internal_error("try_divide_exact: arity mismatch");
    Poly rem = p;
    Poly quot(p.arity());
    const Mono& lt = d.terms().begin()->first;
    const Rational& lc = d.terms().begin()->second;
    while (!rem.is_zero()) {
        const Mono& rm = rem.terms().begin()->first;
        if (!mono_divides(lt, rm)) return false;
        Mono shift = mono_div(rm, lt);
        Rational c = rem.terms().begin()->second / lc;
        quot.add_term(shift, c);
        rem -= d.mono_scaled(shift, c);
    }
    q = quot;
    return true;
}

// ---------------------------------------------------------------------------
// Grammar:  expr := term (('+'|'-') term)* ; term := factor ('*' factor)* ;
//           factor := atom ('^' nat)? ; atom := rational | ident | '(' expr ')' | '-' factor

namespace {

struct Parser {
    const std::vector<std::string>& names;
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) {
        throw input_error("parse error at position " + std::to_string(pos) + ": " + what +
                          " in '" + s + "'");
    }

    int arity() const { return static_cast<int>(names.size()); }

    Poly parse_expr() {
        Poly acc = parse_term(peek() == '-' || peek() == '+');
        while (true) {
            char c = peek();
            if (c == '+' || c == '-') {
                // sign is consumed by parse_term
                acc += parse_term(true);
            } else {
                break;
            }
        }
        return acc;
    }

    Poly parse_term(bool leading_sign) {
        int sign = 1;
        if (leading_sign) {
            while (true) {
                if (eat('+')) continue;
                if (eat('-')) {
                    sign = -sign;
                    continue;
                }
                break;
            }
        }
        Poly acc = parse_factor();
        while (eat('*')) acc = acc * parse_factor();
        return sign < 0 ? -acc : acc;
    }

    Poly parse_factor() {
        Poly base = parse_atom();
        if (eat('^')) {
            skip_ws();
            if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
                fail("exponent expected after '^'");
            std::uint32_t e = 0;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                e = e * 10 + static_cast<std::uint32_t>(s[pos] - '0');
                if (e > 100000) fail("exponent too large");
                ++pos;
            }
            base = base.pow(e);
        }
        return base;
    }

    Poly parse_atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Poly e = parse_expr();
            if (!eat(')')) fail("')' expected");
            return e;
        }
        if (c == '-') {
            ++pos;
            return -parse_factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = read_digits();
            if (eat('/')) {
                skip_ws();
                if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
                    fail("denominator expected after '/'");
                std::string den = read_digits();
                return Poly(arity(), rat_from_string(num + "/" + den));
            }
            return Poly(arity(), rat_from_string(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string ident;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
                ident.push_back(s[pos]);
                ++pos;
            }
            for (int v = 0; v < arity(); ++v)
                if (names[v] == ident) return Poly::variable(arity(), v);
            fail("unknown variable '" + ident + "'");
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string read_digits() {
        std::string out;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            out.push_back(s[pos]);
            ++pos;
        }
        return out;
    }
};

}  // namespace

Poly parse_poly(const std::vector<std::string>& var_names, const std::string& text) {
    Parser p{var_names, text};
    Poly r = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return r;
}

std::string print_poly(const std::vector<std::string>& var_names, const Poly& p) {
    if (static_cast<int>(var_names.size()) != p.arity())
        throw internal_error("print_poly: name list does not match arity");
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rational a = c;
        if (first) {
            if (sgn(a) < 0) {
                os << "-";
                a = -a;
            }
            first = false;
        } else {
            if (sgn(a) < 0) {
                os << " - ";
                a = -a;
            } else {
                os << " + ";
            }
        }
        bool has_vars = total_degree(m) > 0;
        bool coeff_shown = !has_vars || a != 1;
        if (coeff_shown) os << rat_to_string(a);
        bool need_star = coeff_shown;
        for (std::size_t v = 0; v < m.size(); ++v) {
            if (m[v] == 0) continue;
            if (need_star) os << "*";
            os << var_names[v];
            if (m[v] > 1) os << "^" << m[v];
            need_star = true;
        }
    }
    return os.str();
}

}  // namespace bilip
