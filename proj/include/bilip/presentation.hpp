#pragma once

#include <string>
#include <vector>

#include "bilip/groebner.hpp"
#include "bilip/matrix.hpp"
#include "bilip/ring.hpp"

namespace bilip {

struct Ideal {
    std::vector<Poly> gens;

    bool is_monomial() const;
    int max_degree() const;
};

// Presentation of a submodule M of O_X^p by generator columns.
struct ModulePresentation {
    int p = 1;
    std::vector<Vec> columns;

    int r() const { return static_cast<int>(columns.size()); }
    PolyMatrix matrix(int arity) const;

    static ModulePresentation from_columns(int p, std::vector<Vec> cols);
    static ModulePresentation from_ideal(const Ideal& I, int arity);
};

// rel_k * e_c for every relation and component; the quotient by I(X) is
// realized by appending these to submodule computations.
std::vector<Vec> relation_module(const RingContext& ctx, int p);

struct MembershipCertificate {
    bool member = false;
    std::vector<Poly> cofactors;          // one per presentation column
    std::vector<Vec> relation_cofactors;  // one p-vector per context relation

    // v == sum cofactors[j]*columns[j] + sum relations[k]*relation_cofactors[k]
    Vec recombine(const RingContext& ctx, const ModulePresentation& M) const;
};

MembershipCertificate submodule_membership(const RingContext& ctx, const Vec& v,
                                           const ModulePresentation& M);

bool ideal_membership(const RingContext& ctx, const Poly& f, const Ideal& I,
                      MembershipCertificate* cert = nullptr);

// True iff f vanishes on V(I + I(X)), by the Rabinowitsch trick:
// 1 in I + I(X) + (1 - w f).
bool radical_membership(const RingContext& ctx, const Poly& f, const Ideal& I);

// The ideal (M : h) = { g : g*h in M + I(X)*O^p }, via syzygies.
Ideal colon_ideal(const RingContext& ctx, const ModulePresentation& M, const Vec& h);

struct JacobianModules {
    ModulePresentation JM;    // all partials, z block then y block
    ModulePresentation JM_Y;  // parameter partials
    ModulePresentation JzM;   // fiber partials
};
JacobianModules jacobian_modules(const VarietyFamily& fam);

Ideal minors_ideal(const RingContext& ctx, const ModulePresentation& M, int k);

// Largest k such that some k x k minor of [M] does not vanish on X; 0 for
// the zero module. X is assumed irreducible (asserted by the caller's data).
int generic_rank(const RingContext& ctx, const ModulePresentation& M);

// J_k(M) + I(X) for k the generic rank; its zero set is Sigma(M).
Ideal cosupport_ideal(const RingContext& ctx, const ModulePresentation& M);

// rho(M) on the affine chart T_chart != 0 of P^{p-1}; extends the context by
// the chart coordinates tau_j = T_j/T_chart.
struct RhoChart {
    RingContext ctx;  // base extended by chart variables
    std::vector<int> tau_vars;
    Ideal ideal;
};
RhoChart rho_ideal(const RingContext& ctx, const ModulePresentation& M, int chart);

// Numerical rank of [M(pt)] over Q. pt must satisfy the relations exactly.
int rank_at_point(const RingContext& ctx, const ModulePresentation& M,
                  const std::vector<Rational>& pt);

bool point_on_variety(const RingContext& ctx, const std::vector<Rational>& pt);

// Presentation of I*M (columns g*h_j in deterministic order).
ModulePresentation ideal_times_module(const Ideal& I, const ModulePresentation& M);

// Presentation of (h) + M.
ModulePresentation module_with_element(const ModulePresentation& M, const Vec& h);

// The ideal m_Y generated by the fiber coordinates.
Ideal m_Y_ideal(const RingContext& ctx);

}  // namespace bilip
