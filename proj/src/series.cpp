#include "bilip/series.hpp"

#include <algorithm>
#include <sstream>

#include "bilip/errors.hpp"

namespace bilip {

namespace {
int root_iterations(int order) {
    int it = 1, reach = 1;
    while (reach <= order) {
        reach *= 2;
        ++it;
    }
    return it;
}
}  // namespace

TruncSeries::TruncSeries(int order, const Rational& constant) : coeffs_(order + 1, Rational(0)) {
    coeffs_[0] = constant;
}

TruncSeries TruncSeries::parameter(int order) { return monomial(order, 1, Rational(1)); }

TruncSeries TruncSeries::monomial(int order, int power, const Rational& c) {
    TruncSeries s(order);
    if (power <= order) s.coeffs_[power] = c;
    return s;
}

const Rational& TruncSeries::coeff(int k) const {
    if (k < 0 || k > order()) throw internal_error("TruncSeries::coeff out of range");
    return coeffs_[k];
}

void TruncSeries::set_coeff(int k, const Rational& c) {
    if (k < 0 || k > order()) throw internal_error("TruncSeries::set_coeff out of range");
    coeffs_[k] = c;
}

bool TruncSeries::is_zero_to_order() const {
    for (const auto& c : coeffs_)
        if (!is_zero(c)) return false;
    return true;
}

int TruncSeries::valuation() const {
    for (int k = 0; k <= order(); ++k)
        if (!is_zero(coeffs_[k])) return k;
    return order() + 1;
}

TruncSeries TruncSeries::truncated(int order) const {
    TruncSeries r(order);
    for (int k = 0; k <= std::min(order, this->order()); ++k) r.coeffs_[k] = coeffs_[k];
    return r;
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    int n = std::min(order(), o.order());
    TruncSeries r(n);
    for (int k = 0; k <= n; ++k) r.coeffs_[k] = coeffs_[k] + o.coeffs_[k];
    return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
    int n = std::min(order(), o.order());
    TruncSeries r(n);
    for (int k = 0; k <= n; ++k) r.coeffs_[k] = coeffs_[k] - o.coeffs_[k];
    return r;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
    int n = std::min(order(), o.order());
    TruncSeries r(n);
    for (int i = 0; i <= std::min(order(), n); ++i) {
        if (is_zero(coeffs_[i])) continue;
        for (int j = 0; i + j <= n && j <= o.order(); ++j) {
            if (is_zero(o.coeffs_[j])) continue;
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return r;
}

TruncSeries TruncSeries::scaled(const Rational& c) const {
    TruncSeries r = *this;
    for (auto& q : r.coeffs_) q *= c;
    return r;
}

TruncSeries TruncSeries::shift_down(int v) const {
    if (v == 0) return *this;
    if (v < 0) return shift_up(-v);
    if (valuation() < v) throw internal_error("shift_down: valuation too small");
    int n = order() - v;
    if (n < 0) throw internal_error("shift_down: no precision left");
    TruncSeries r(n);
    for (int k = 0; k <= n; ++k) r.coeffs_[k] = coeffs_[k + v];
    return r;
}

TruncSeries TruncSeries::shift_up(int v) const {
    TruncSeries r(order() + v);
    for (int k = 0; k <= order(); ++k) r.coeffs_[k + v] = coeffs_[k];
    return r;
}

TruncSeries TruncSeries::inverse() const {
    if (is_zero(coeffs_[0])) throw internal_error("TruncSeries::inverse of non-unit");
    TruncSeries y(order(), Rational(1) / coeffs_[0]);
    TruncSeries two(order(), Rational(2));
    for (int it = 0; it < root_iterations(order()); ++it) y = y * (two - *this * y);
    return y;
}

TruncSeries TruncSeries::nth_root(int n) const {
    if (n < 1) throw input_error("nth_root: n must be >= 1");
    if (coeffs_[0] != 1) throw input_error("nth_root: constant term must be 1");
    if (n == 1) return *this;
    TruncSeries x(order(), Rational(1));
    Rational inv_n = Rational(1) / Rational(n);
    for (int it = 0; it < root_iterations(order()); ++it) {
        // x <- x - (x^n - c) / (n x^{n-1})
        TruncSeries xn1(order(), Rational(1));
        for (int k = 0; k < n - 1; ++k) xn1 = xn1 * x;
        TruncSeries xn = xn1 * x;
        x = x - (xn - *this) * xn1.inverse().scaled(inv_n);
    }
    TruncSeries check(order(), Rational(1));
    for (int k = 0; k < n; ++k) check = check * x;
    if (!(check - *this).is_zero_to_order()) throw internal_error("nth_root: iteration failed");
    return x;
}

TruncSeries TruncSeries::derivative() const {
    if (order() == 0) return TruncSeries(0);
    TruncSeries r(order() - 1);
    for (int k = 1; k <= order(); ++k)
        r.coeffs_[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
    return r;
}

TruncSeries TruncSeries::compose(const TruncSeries& inner) const {
    if (!is_zero(inner.coeff(0)))
        throw internal_error("TruncSeries::compose: inner valuation must be >= 1");
    int n = std::min(order(), inner.order());
    TruncSeries acc(n);
    for (int k = order(); k >= 0; --k) {
        acc = acc * inner;
        acc.coeffs_[0] += coeffs_[k];
    }
    return acc;
}

std::string TruncSeries::to_string(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= order(); ++k) {
        if (is_zero(coeffs_[k])) continue;
        if (!first) os << " + ";
        os << rat_to_string(coeffs_[k]);
        if (k >= 1) os << "*" << var;
        if (k >= 2) os << "^" << k;
        first = false;
    }
    if (first) os << "0";
    os << " + O(" << var << "^" << order() + 1 << ")";
    return os.str();
}

TruncSeries compose_poly(const Poly& p, const std::vector<TruncSeries>& images) {
    if (static_cast<int>(images.size()) != p.arity())
        throw internal_error("compose_poly: one series per variable required");
    int n = images.empty() ? 50 : images[0].order();
    for (const auto& s : images) n = std::min(n, s.order());
    TruncSeries acc(n);
    for (const auto& [m, c] : p.terms()) {
        TruncSeries term(n, c);
        for (int v = 0; v < p.arity(); ++v)
            for (std::uint32_t k = 0; k < m[v]; ++k) term = term * images[v];
        acc = acc + term;
    }
    return acc;
}

// ---------------------------------------------------------------------------

BiSeries::BiSeries(int order, const Rational& constant) : order_(order) {
    if (!is_zero(constant)) terms_.emplace(Key{0, 0}, constant);
}

BiSeries BiSeries::var_t(int order) {
    BiSeries s(order);
    if (order >= 1) s.terms_.emplace(Key{1, 0}, Rational(1));
    return s;
}

BiSeries BiSeries::var_s(int order) {
    BiSeries s(order);
    if (order >= 1) s.terms_.emplace(Key{0, 1}, Rational(1));
    return s;
}

Rational BiSeries::coeff(int i, int j) const {
    auto it = terms_.find(Key{i, j});
    return it == terms_.end() ? Rational(0) : it->second;
}

void BiSeries::set_coeff(int i, int j, const Rational& c) {
    if (i + j > order_) throw internal_error("BiSeries::set_coeff beyond truncation");
    if (is_zero(c))
        terms_.erase(Key{i, j});
    else
        terms_[Key{i, j}] = c;
}

int BiSeries::s_valuation() const {
    int v = order_ + 1;
    for (const auto& [k, c] : terms_) v = std::min(v, k.second);
    return v;
}

int BiSeries::t_valuation() const {
    int v = order_ + 1;
    for (const auto& [k, c] : terms_) v = std::min(v, k.first);
    return v;
}

TruncSeries BiSeries::s_coefficient(int j) const {
    int n = order_ - j;
    if (n < 0) throw internal_error("s_coefficient beyond truncation");
    TruncSeries r(n);
    for (const auto& [k, c] : terms_)
        if (k.second == j) r.set_coeff(k.first, c);
    return r;
}

BiSeries BiSeries::truncated(int order) const {
    BiSeries r(order);
    for (const auto& [k, c] : terms_)
        if (k.first + k.second <= order) r.terms_.emplace(k, c);
    return r;
}

BiSeries BiSeries::operator-() const {
    BiSeries r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

BiSeries BiSeries::operator+(const BiSeries& o) const {
    int n = std::min(order_, o.order_);
    BiSeries r = truncated(n);
    for (const auto& [k, c] : o.terms_) {
        if (k.first + k.second > n) continue;
        auto [it, inserted] = r.terms_.emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (is_zero(it->second)) r.terms_.erase(it);
        }
    }
    return r;
}

BiSeries BiSeries::operator-(const BiSeries& o) const { return *this + (-o); }

BiSeries BiSeries::operator*(const BiSeries& o) const {
    int n = std::min(order_, o.order_);
    BiSeries r(n);
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : o.terms_) {
            int i = ka.first + kb.first, j = ka.second + kb.second;
            if (i + j > n) continue;
            auto [it, inserted] = r.terms_.emplace(Key{i, j}, ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                if (is_zero(it->second)) r.terms_.erase(it);
            }
        }
    }
    return r;
}

BiSeries BiSeries::scaled(const Rational& c) const {
    BiSeries r(order_);
    if (is_zero(c)) return r;
    for (const auto& [k, q] : terms_) r.terms_.emplace(k, q * c);
    return r;
}

BiSeries BiSeries::pow(int e) const {
    BiSeries r(order_, Rational(1));
    for (int k = 0; k < e; ++k) r = r * *this;
    return r;
}

BiSeries BiSeries::s_shift_down(int v) const {
    if (v == 0) return *this;
    BiSeries r(order_ - v);
    for (const auto& [k, c] : terms_) {
        if (k.second < v) throw internal_error("s_shift_down: s-valuation too small");
        r.terms_.emplace(Key{k.first, k.second - v}, c);
    }
    return r;
}

BiSeries BiSeries::s_shift_up(int v) const {
    BiSeries r(order_ + v);
    for (const auto& [k, c] : terms_) r.terms_.emplace(Key{k.first, k.second + v}, c);
    return r;
}

BiSeries BiSeries::inverse() const {
    Rational c0 = coeff(0, 0);
    if (is_zero(c0)) throw internal_error("BiSeries::inverse of non-unit");
    BiSeries y(order_, Rational(1) / c0);
    BiSeries two(order_, Rational(2));
    for (int it = 0; it < root_iterations(order_); ++it) y = y * (two - *this * y);
    return y;
}

BiSeries BiSeries::nth_root(int n) const {
    if (n < 1) throw input_error("nth_root: n must be >= 1");
    if (coeff(0, 0) != 1) throw input_error("nth_root: constant term must be 1");
    if (n == 1) return *this;
    BiSeries x(order_, Rational(1));
    Rational inv_n = Rational(1) / Rational(n);
    for (int it = 0; it < root_iterations(order_); ++it) {
        BiSeries xn1(order_, Rational(1));
        for (int k = 0; k < n - 1; ++k) xn1 = xn1 * x;
        BiSeries xn = xn1 * x;
        x = x - (xn - *this) * xn1.inverse().scaled(inv_n);
    }
    BiSeries check(order_, Rational(1));
    for (int k = 0; k < n; ++k) check = check * x;
    if (!(check - *this).is_zero_to_order()) throw internal_error("nth_root: iteration failed");
    return x;
}

BiSeries BiSeries::d_dt() const {
    BiSeries r(order_ == 0 ? 0 : order_ - 1);
    for (const auto& [k, c] : terms_) {
        if (k.first == 0) continue;
        r.set_coeff(k.first - 1, k.second, c * Rational(k.first));
    }
    return r;
}

BiSeries BiSeries::d_ds() const {
    BiSeries r(order_ == 0 ? 0 : order_ - 1);
    for (const auto& [k, c] : terms_) {
        if (k.second == 0) continue;
        r.set_coeff(k.first, k.second - 1, c * Rational(k.second));
    }
    return r;
}

BiSeries BiSeries::compose_s(const BiSeries& inner) const {
    if (!is_zero(inner.coeff(0, 0)))
        throw internal_error("compose_s: inner must vanish at the origin");
    int n = std::min(order_, inner.order_);
    int bmax = 0;
    for (const auto& [k, c] : terms_) bmax = std::max(bmax, k.second);
    BiSeries acc(n);
    for (int b = bmax; b >= 0; --b) {
        acc = acc * inner;
        // add the coefficient A_b(t) of s^b
        for (const auto& [k, c] : terms_) {
            if (k.second != b || k.first > n) continue;
            auto [it, inserted] = acc.terms_.emplace(Key{k.first, 0}, c);
            if (!inserted) {
                it->second += c;
                if (is_zero(it->second)) acc.terms_.erase(it);
            }
        }
    }
    return acc;
}

BiSeries BiSeries::from_t_series(const TruncSeries& f, int order) {
    BiSeries r(order);
    for (int k = 0; k <= std::min(order, f.order()); ++k)
        if (!is_zero(f.coeff(k))) r.terms_.emplace(Key{k, 0}, f.coeff(k));
    return r;
}

BiSeries BiSeries::lift_t_series(const TruncSeries& f, const BiSeries& g) {
    if (g.coeff(0, 0) != 0) throw internal_error("lift_t_series: g must vanish at the origin");
    BiSeries acc(g.order());
    for (int k = f.order(); k >= 0; --k) {
        acc = acc * g;
        auto c = f.coeff(k);
        if (!is_zero(c)) {
            auto [it, inserted] = acc.terms_.emplace(Key{0, 0}, c);
            if (!inserted) {
                it->second += c;
                if (is_zero(it->second)) acc.terms_.erase(it);
            }
        }
    }
    return acc;
}

BiSeries BiSeries::from_poly(const Poly& p, int t_var, int s_var, int order) {
    BiSeries r(order);
    for (const auto& [m, c] : p.terms()) {
        int i = 0, j = 0;
        for (int v = 0; v < p.arity(); ++v) {
            if (m[v] == 0) continue;
            if (v == t_var)
                i = static_cast<int>(m[v]);
            else if (v == s_var)
                j = static_cast<int>(m[v]);
            else
                throw internal_error("from_poly: polynomial involves extra variables");
        }
        if (i + j > order) throw input_error("from_poly: degree exceeds truncation order");
        r.terms_.emplace(Key{i, j}, c);
    }
    return r;
}

bool BiSeries::to_poly_exact(int arity, int t_var, int s_var, Poly& out) const {
    Poly p(arity);
    for (const auto& [k, c] : terms_) {
        Mono m(arity, 0);
        m[t_var] = static_cast<std::uint32_t>(k.first);
        m[s_var] = static_cast<std::uint32_t>(k.second);
        p.add_term(m, c);
    }
    out = p;
    return true;
}

std::string BiSeries::to_string(const std::string& tname, const std::string& sname) const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        os << rat_to_string(c);
        if (k.first >= 1) {
            os << "*" << tname;
            if (k.first >= 2) os << "^" << k.first;
        }
        if (k.second >= 1) {
            os << "*" << sname;
            if (k.second >= 2) os << "^" << k.second;
        }
        first = false;
    }
    if (first) os << "0";
    os << " + O(" << order_ + 1 << ")";
    return os.str();
}

BiSeries compose_poly_bis(const Poly& p, const std::vector<BiSeries>& images) {
    if (static_cast<int>(images.size()) != p.arity())
        throw internal_error("compose_poly_bis: one series per variable required");
    int n = images.empty() ? 50 : images[0].order();
    for (const auto& s : images) n = std::min(n, s.order());
    BiSeries acc(n);
    for (const auto& [m, c] : p.terms()) {
        BiSeries term(n, c);
        for (int v = 0; v < p.arity(); ++v)
            for (std::uint32_t k = 0; k < m[v]; ++k) term = term * images[v];
        acc = acc + term;
    }
    return acc;
}

}  // namespace bilip
