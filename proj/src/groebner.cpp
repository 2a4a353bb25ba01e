#include "bilip/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "bilip/errors.hpp"

namespace bilip {

Vec vec_zero(int p, int arity) { return Vec(p, Poly(arity)); }

bool vec_is_zero(const Vec& v) {
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw internal_error("vec_add: rank mismatch");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw internal_error("vec_sub: rank mismatch");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec vec_scale(const Vec& a, const Poly& c) {
    Vec r = a;
    for (auto& e : r) e = e * c;
    return r;
}

int cmp_mono(const MonomialOrder& order, const Mono& a, const Mono& b) {
    switch (order.kind) {
        case OrderKind::Degrevlex:
            return degrevlex_cmp(a, b);
        case OrderKind::Lex:
            for (std::size_t i = 0; i < a.size(); ++i)
                if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
            return 0;
        case OrderKind::Block: {
            Mono fa(order.front.size()), fb(order.front.size());
            for (std::size_t i = 0; i < order.front.size(); ++i) {
                fa[i] = a[order.front[i]];
                fb[i] = b[order.front[i]];
            }
            int c = degrevlex_cmp(fa, fb);
            if (c != 0) return c;
            return degrevlex_cmp(a, b);
        }
    }
    return 0;
}

int ModOrder::cmp(int comp_a, const Mono& a, int comp_b, const Mono& b) const {
    if (split_comp >= 0) {
        bool pa = comp_a < split_comp, pb = comp_b < split_comp;
        if (pa != pb) return pa ? 1 : -1;
    }
    if (comp_a != comp_b) return comp_a < comp_b ? 1 : -1;  // position over term
    return cmp_mono(mono_order, a, b);
}

namespace {

// Working element: sorted term list plus cofactor expression.
struct Work {
    std::vector<ModTerm> t;
    std::vector<Poly> expr;
};

bool term_less(const ModOrder& o, const ModTerm& a, const ModTerm& b) {
    return o.cmp(a.comp, a.mono, b.comp, b.mono) < 0;
}

std::vector<ModTerm> to_terms(const Vec& v, const ModOrder& o) {
    std::vector<ModTerm> out;
    for (int c = 0; c < static_cast<int>(v.size()); ++c)
        for (const auto& [m, q] : v[c].terms()) out.push_back({c, m, q});
    std::sort(out.begin(), out.end(), [&](const ModTerm& a, const ModTerm& b) {
        return o.cmp(a.comp, a.mono, b.comp, b.mono) > 0;
    });
    return out;
}

Vec to_vec(const std::vector<ModTerm>& t, int p, int arity) {
    Vec v = vec_zero(p, arity);
    for (const auto& mt : t) v[mt.comp].add_term(mt.mono, mt.c);
    return v;
}

// f -= c * x^shift * g (term lists sorted descending).
std::vector<ModTerm> axpy_terms(const ModOrder& o, const std::vector<ModTerm>& f,
                                const Rational& c, const Mono& shift,
                                const std::vector<ModTerm>& g) {
    std::vector<ModTerm> out;
    out.reserve(f.size() + g.size());
    std::size_t i = 0, j = 0;
    while (i < f.size() || j < g.size()) {
        if (j >= g.size()) {
            out.push_back(f[i++]);
            continue;
        }
        ModTerm gt{g[j].comp, mono_mul(g[j].mono, shift), -c * g[j].c};
        if (i >= f.size()) {
            if (!is_zero(gt.c)) out.push_back(std::move(gt));
            ++j;
            continue;
        }
        int cmp = o.cmp(f[i].comp, f[i].mono, gt.comp, gt.mono);
        if (cmp > 0) {
            out.push_back(f[i++]);
        } else if (cmp < 0) {
            if (!is_zero(gt.c)) out.push_back(std::move(gt));
            ++j;
        } else {
            Rational s = f[i].c + gt.c;
            if (!is_zero(s)) out.push_back({f[i].comp, f[i].mono, s});
            ++i;
            ++j;
        }
    }
    return out;
}

void axpy_expr(std::vector<Poly>& fe, const Rational& c, const Mono& shift,
               const std::vector<Poly>& ge) {
    for (std::size_t k = 0; k < fe.size(); ++k) fe[k] -= ge[k].mono_scaled(shift, c);
}

struct Engine {
    int p, arity;
    ModOrder order;
    bool track;
    std::vector<GBElement> basis;

    // Full reduction; returns remainder terms. Quotients over basis elements
    // are accumulated into `work.expr` through the tracked expressions.
    std::vector<ModTerm> reduce(Work& work) const {
        std::vector<ModTerm> rem;
        std::vector<ModTerm> cur = std::move(work.t);
        while (!cur.empty()) {
            const ModTerm& lt = cur.front();
            const GBElement* red = nullptr;
            for (const auto& e : basis) {
                if (e.lead_comp == lt.comp && mono_divides(e.lead_mono, lt.mono)) {
                    red = &e;
                    break;
                }
            }
            if (!red) {
                rem.push_back(lt);
                cur.erase(cur.begin());
                continue;
            }
            Mono shift = mono_div(lt.mono, red->lead_mono);
            Rational c = lt.c;  // basis elements are monic
            cur = axpy_terms(order, cur, c, shift, red->terms);
            if (track) axpy_expr(work.expr, c, shift, red->expr);
        }
        return rem;
    }

    void make_element(std::vector<ModTerm> t, std::vector<Poly> expr, GBElement& out) const {
        if (t.empty()) throw internal_error("make_element: zero element");
        Rational lc = t.front().c;
        if (lc != 1) {
            Rational inv = Rational(1) / lc;
            for (auto& mt : t) mt.c *= inv;
            for (auto& e : expr) e = e.scaled(inv);
        }
        out.lead_comp = t.front().comp;
        out.lead_mono = t.front().mono;
        out.terms = std::move(t);
        out.expr = std::move(expr);
        out.vec = to_vec(out.terms, p, arity);
    }
};

}  // namespace

GroebnerBasis groebner_basis(const std::vector<Vec>& gens, const MonomialOrder& order, int p,
                             int arity, bool track_expr, int split_comp) {
    GroebnerBasis gb;
    gb.p_ = p;
    gb.arity_ = arity;
    gb.n_inputs_ = static_cast<int>(gens.size());
    gb.tracked_ = track_expr;
    gb.order_ = ModOrder{order, split_comp};

    Engine eng{p, arity, gb.order_, track_expr, {}};

    const int r = static_cast<int>(gens.size());
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(gens[i].size()) != p)
            throw internal_error("groebner_basis: generator rank mismatch");
        Work w;
        w.t = to_terms(gens[i], eng.order);
        if (track_expr) {
            w.expr.assign(r, Poly(arity));
            w.expr[i] = Poly(arity, Rational(1));
        }
        // Reduce against what we already have so duplicates collapse early.
        // Invariant of reduce(): remainder == w.expr combination of inputs,
        // given that w.expr starts as the expression of w.t.
        auto rem = eng.reduce(w);
        if (rem.empty()) continue;
        GBElement el;
        eng.make_element(std::move(rem), std::move(w.expr), el);
        eng.basis.push_back(std::move(el));
    }

    // S-pair queue under the normal selection strategy: smallest lcm degree
    // first, ties by index.
    std::set<std::tuple<int, int, int>> queue;
    std::set<std::pair<int, int>> treated;
    auto push_pairs_for = [&](int j) {
        for (int i = 0; i < j; ++i) {
            if (eng.basis[i].lead_comp != eng.basis[j].lead_comp) continue;
            Mono l = mono_lcm(eng.basis[i].lead_mono, eng.basis[j].lead_mono);
            queue.insert({total_degree(l), i, j});
        }
    };
    for (int j = 0; j < static_cast<int>(eng.basis.size()); ++j) push_pairs_for(j);

    while (!queue.empty()) {
        auto [deg, i, j] = *queue.begin();
        queue.erase(queue.begin());
        treated.insert({i, j});
        const GBElement& a = eng.basis[i];
        const GBElement& b = eng.basis[j];
        Mono l = mono_lcm(a.lead_mono, b.lead_mono);

        // Buchberger's first criterion (ideals only): coprime leading
        // monomials give an S-pair reducing to zero.
        if (p == 1 && l == mono_mul(a.lead_mono, b.lead_mono)) continue;
        // Buchberger's second (chain) criterion.
        bool skip = false;
        for (int k = 0; k < static_cast<int>(eng.basis.size()) && !skip; ++k) {
            if (k == i || k == j) continue;
            if (eng.basis[k].lead_comp != a.lead_comp) continue;
            if (!mono_divides(eng.basis[k].lead_mono, l)) continue;
            auto p1 = std::minmax(i, k), p2 = std::minmax(j, k);
            if (treated.count({p1.first, p1.second}) && treated.count({p2.first, p2.second}))
                skip = true;
        }
        if (skip) continue;

        // S-polynomial x^(l-lt a)*a - x^(l-lt b)*b, expression tracked alongside.
        Work w;
        w.t = axpy_terms(eng.order, {}, Rational(-1), mono_div(l, a.lead_mono), a.terms);
        w.t = axpy_terms(eng.order, w.t, Rational(1), mono_div(l, b.lead_mono), b.terms);
        if (eng.track) {
            w.expr.assign(r, Poly(arity));
            axpy_expr(w.expr, Rational(-1), mono_div(l, a.lead_mono), a.expr);
            axpy_expr(w.expr, Rational(1), mono_div(l, b.lead_mono), b.expr);
        }
        auto rem = eng.reduce(w);
        if (rem.empty()) continue;
        GBElement el;
        eng.make_element(std::move(rem), std::move(w.expr), el);
        eng.basis.push_back(std::move(el));
        push_pairs_for(static_cast<int>(eng.basis.size()) - 1);
    }

    // Inter-reduce: drop elements whose lead is divisible by another lead,
    // then tail-reduce every survivor against the others.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < eng.basis.size(); ++i) {
            for (std::size_t j = 0; j < eng.basis.size(); ++j) {
                if (i == j) continue;
                if (eng.basis[j].lead_comp == eng.basis[i].lead_comp &&
                    mono_divides(eng.basis[j].lead_mono, eng.basis[i].lead_mono)) {
                    eng.basis.erase(eng.basis.begin() + i);
                    changed = true;
                    break;
                }
            }
            if (changed) break;
        }
    }
    for (std::size_t i = 0; i < eng.basis.size(); ++i) {
        GBElement el = eng.basis[i];
        Engine others{p, arity, eng.order, eng.track, {}};
        for (std::size_t j = 0; j < eng.basis.size(); ++j)
            if (j != i) others.basis.push_back(eng.basis[j]);
        Work w;
        w.t = el.terms;
        w.expr = el.expr;
        auto rem = others.reduce(w);
        if (rem.empty()) throw internal_error("auto-reduce removed a basis lead");
        GBElement el2;
        others.make_element(std::move(rem), std::move(w.expr), el2);
        eng.basis[i] = std::move(el2);
    }
    std::sort(eng.basis.begin(), eng.basis.end(), [&](const GBElement& x, const GBElement& y) {
        int c = eng.order.cmp(x.lead_comp, x.lead_mono, y.lead_comp, y.lead_mono);
        if (c != 0) return c > 0;
        return false;
    });

    gb.elems_ = std::move(eng.basis);
    return gb;
}

Vec normal_form(const Vec& f, const GroebnerBasis& gb, std::vector<Poly>* input_cofactors) {
    if (static_cast<int>(f.size()) != gb.p()) throw internal_error("normal_form: rank mismatch");
    if (input_cofactors && !gb.tracked())
        throw internal_error("normal_form: cofactors need a tracked basis");
    Engine eng{gb.p(), gb.arity(), gb.order(), gb.tracked(), gb.elements()};
    Work w;
    w.t = to_terms(f, gb.order());
    if (gb.tracked()) w.expr.assign(gb.input_count(), Poly(gb.arity()));
    auto rem = eng.reduce(w);
    if (input_cofactors) {
        // reduce() keeps rem == f + w.expr * inputs, so the division
        // quotients of f over the inputs are the negated expressions.
        input_cofactors->clear();
        for (auto& e : w.expr) input_cofactors->push_back(-e);
    }
    return to_vec(rem, gb.p(), gb.arity());
}

bool is_groebner_basis(const GroebnerBasis& gb) {
    Engine eng{gb.p(), gb.arity(), gb.order(), false, gb.elements()};
    const auto& els = gb.elements();
    for (std::size_t i = 0; i < els.size(); ++i) {
        for (std::size_t j = i + 1; j < els.size(); ++j) {
            if (els[i].lead_comp != els[j].lead_comp) continue;
            Mono l = mono_lcm(els[i].lead_mono, els[j].lead_mono);
            Work w;
            w.t = axpy_terms(gb.order(), {}, Rational(-1), mono_div(l, els[i].lead_mono),
                             els[i].terms);
            w.t = axpy_terms(gb.order(), w.t, Rational(1), mono_div(l, els[j].lead_mono),
                             els[j].terms);
            if (!eng.reduce(w).empty()) return false;
        }
    }
    return true;
}

std::vector<Vec> syzygy_module(const std::vector<Vec>& gens, int p, int arity,
                               const MonomialOrder& inner) {
    const int r = static_cast<int>(gens.size());
    std::vector<Vec> aug;
    aug.reserve(r);
    for (int i = 0; i < r; ++i) {
        Vec v = gens[i];
        v.resize(p + r, Poly(arity));
        v[p + i] = Poly(arity, Rational(1));
        aug.push_back(std::move(v));
    }
    GroebnerBasis gb = groebner_basis(aug, inner, p + r, arity, false, p);
    std::vector<Vec> syz;
    for (const auto& el : gb.elements()) {
        bool front_zero = true;
        for (int c = 0; c < p && front_zero; ++c)
            if (!el.vec[c].is_zero()) front_zero = false;
        if (!front_zero) continue;
        Vec s(el.vec.begin() + p, el.vec.end());
        syz.push_back(std::move(s));
    }
    return syz;
}

std::vector<Poly> eliminate_ideal(const std::vector<Poly>& gens, const std::vector<int>& kill,
                                  int arity) {
    std::vector<Vec> vgens;
    for (const auto& g : gens) vgens.push_back({g});
    GroebnerBasis gb =
        groebner_basis(vgens, MonomialOrder::elimination(kill), 1, arity, false);
    std::vector<Poly> out;
    for (const auto& el : gb.elements()) {
        bool uses_kill = false;
        for (const auto& [m, c] : el.vec[0].terms()) {
            for (int v : kill)
                if (m[v] > 0) {
                    uses_kill = true;
                    break;
                }
            if (uses_kill) break;
        }
        if (!uses_kill) out.push_back(el.vec[0].primitive_part());
    }
    return out;
}

GroebnerBasis ideal_groebner(const std::vector<Poly>& gens, int arity, const MonomialOrder& order,
                             bool track_expr) {
    std::vector<Vec> vgens;
    for (const auto& g : gens) vgens.push_back({g});
    return groebner_basis(vgens, order, 1, arity, track_expr);
}

Poly ideal_normal_form(const Poly& f, const GroebnerBasis& gb,
                       std::vector<Poly>* input_cofactors) {
    return normal_form(Vec{f}, gb, input_cofactors)[0];
}

}  // namespace bilip
