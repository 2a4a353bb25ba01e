#include "bilip/ring.hpp"

#include <set>

#include "bilip/errors.hpp"

namespace bilip {

std::optional<int> RingContext::find(const std::string& name) const {
    for (int v = 0; v < arity(); ++v)
        if (names[v] == name) return v;
    return std::nullopt;
}

int RingContext::index_of(const std::string& name) const {
    if (auto v = find(name)) return *v;
    throw input_error("unknown variable '" + name + "'");
}

RingContext RingContext::affine(const std::vector<std::string>& z_names,
                                const std::vector<std::string>& y_names) {
    RingContext ctx;
    ctx.names = z_names;
    ctx.names.insert(ctx.names.end(), y_names.begin(), y_names.end());
    ctx.n_z = static_cast<int>(z_names.size());
    ctx.n_y = static_cast<int>(y_names.size());
    ctx.check_well_formed();
    return ctx;
}

RingContext RingContext::with_aux(const std::vector<std::string>& aux_names) const {
    RingContext ctx = *this;
    ctx.names.insert(ctx.names.end(), aux_names.begin(), aux_names.end());
    for (auto& r : ctx.relations) r = embed(r, ctx.arity());
    ctx.check_well_formed();
    return ctx;
}

RingContext RingContext::localized_at(const Poly& poly, const std::string& inv_name,
                                      int* inv_var) const {
    RingContext ctx = with_aux({inv_name});
    int u = ctx.arity() - 1;
    if (inv_var) *inv_var = u;
    Poly rel = embed(poly, ctx.arity()) * ctx.var(u) - Poly(ctx.arity(), Rational(1));
    ctx.relations.push_back(rel);
    return ctx;
}

void RingContext::check_well_formed() const {
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (n.empty()) throw input_error("empty variable name");
        if (!seen.insert(n).second) throw input_error("duplicate variable name '" + n + "'");
    }
    for (const auto& r : relations)
        if (r.arity() != arity()) throw internal_error("relation arity mismatch");
}

VarietyFamily VarietyFamily::from_map(const RingContext& base, const std::vector<Poly>& F) {
    VarietyFamily fam;
    fam.ctx = base;
    fam.ctx.relations = F;
    fam.F = F;
    for (const auto& f : F)
        if (f.arity() != base.arity()) throw internal_error("family map arity mismatch");
    return fam;
}

}  // namespace bilip
