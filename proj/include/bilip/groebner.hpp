#pragma once

#include <vector>

#include "bilip/poly.hpp"

namespace bilip {

// Free-module element with p polynomial components.
using Vec = std::vector<Poly>;

Vec vec_zero(int p, int arity);
bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Vec& a, const Poly& c);

enum class OrderKind { Degrevlex, Lex, Block };

struct MonomialOrder {
    OrderKind kind = OrderKind::Degrevlex;
    std::vector<int> front;  // Block: variable indices compared first

    static MonomialOrder degrevlex() { return {}; }
    static MonomialOrder lex() { return {OrderKind::Lex, {}}; }
    static MonomialOrder elimination(std::vector<int> front_vars) {
        return {OrderKind::Block, std::move(front_vars)};
    }
};

// +1 if a > b, -1 if a < b, 0 if equal.
int cmp_mono(const MonomialOrder& order, const Mono& a, const Mono& b);

// Term of a free-module element. Module terms are compared position-over-
// term: lower component index wins, then the monomial order. When
// `split_comp` >= 0 every term in a component < split_comp is greater than
// every term in a component >= split_comp (component-block elimination, used
// for syzygies).
struct ModTerm {
    int comp = 0;
    Mono mono;
    Rational c;
};

struct ModOrder {
    MonomialOrder mono_order;
    int split_comp = -1;
    int cmp(int comp_a, const Mono& a, int comp_b, const Mono& b) const;
};

struct GBElement {
    Vec vec;                 // monic: leading coefficient 1
    std::vector<Poly> expr;  // expression over the input generators (if tracked)
    int lead_comp = 0;
    Mono lead_mono;
    std::vector<ModTerm> terms;  // sorted, leading term first
};

// Buchberger-complete, auto-reduced basis of the submodule of O^p generated
// by the inputs. When `track_expr` every basis element records cofactors
// over the input list, and normal_form can report cofactors of the reduced
// combination.
class GroebnerBasis {
  public:
    GroebnerBasis() = default;

    int p() const { return p_; }
    int arity() const { return arity_; }
    int input_count() const { return n_inputs_; }
    bool tracked() const { return tracked_; }
    const ModOrder& order() const { return order_; }
    const std::vector<GBElement>& elements() const { return elems_; }

    friend GroebnerBasis groebner_basis(const std::vector<Vec>& gens, const MonomialOrder& order,
                                        int p, int arity, bool track_expr, int split_comp);

  private:
    int p_ = 1;
    int arity_ = 0;
    int n_inputs_ = 0;
    bool tracked_ = false;
    ModOrder order_;
    std::vector<GBElement> elems_;
};

GroebnerBasis groebner_basis(const std::vector<Vec>& gens, const MonomialOrder& order, int p,
                             int arity, bool track_expr = true, int split_comp = -1);

// Remainder of f on division by the basis: no remainder term is divisible by
// any basis leading term, and f - remainder lies in the submodule. With
// `input_cofactors` (basis must be tracked) the quotient is reported over the
// original input generators: f = remainder + sum cof_j * input_j.
Vec normal_form(const Vec& f, const GroebnerBasis& gb,
                std::vector<Poly>* input_cofactors = nullptr);

// Direct S-pair oracle: reduces every S-pair of the emitted basis and checks
// it drops to zero.
bool is_groebner_basis(const GroebnerBasis& gb);

// Generators of { (c_1..c_r) : sum c_i gens_i = 0 }.
std::vector<Vec> syzygy_module(const std::vector<Vec>& gens, int p, int arity,
                               const MonomialOrder& inner = MonomialOrder::degrevlex());

// Generators of I ∩ k[remaining variables], via a block order.
std::vector<Poly> eliminate_ideal(const std::vector<Poly>& gens, const std::vector<int>& kill,
                                  int arity);

// Ideal (p = 1) conveniences.
GroebnerBasis ideal_groebner(const std::vector<Poly>& gens, int arity,
                             const MonomialOrder& order = MonomialOrder::degrevlex(),
                             bool track_expr = false);
Poly ideal_normal_form(const Poly& f, const GroebnerBasis& gb,
                       std::vector<Poly>* input_cofactors = nullptr);

}  // namespace bilip
