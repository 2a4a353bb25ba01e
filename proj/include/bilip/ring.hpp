#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bilip/poly.hpp"

namespace bilip {

// Coordinate ring data for an analytic family X (or a plain affine space):
// fiber variables z, parameter variables y, auxiliary variables (projective
// chart coordinates, localization inverses), and the relations I(X).
// "Working on X" always means working modulo `relations`.
struct RingContext {
    std::vector<std::string> names;  // global order: z block, y block, aux block
    int n_z = 0;
    int n_y = 0;
    std::vector<Poly> relations;
    bool irreducible_asserted = true;

    int arity() const { return static_cast<int>(names.size()); }
    int n_aux() const { return arity() - n_z - n_y; }

    bool is_z(int v) const { return v < n_z; }
    bool is_y(int v) const { return v >= n_z && v < n_z + n_y; }

    std::optional<int> find(const std::string& name) const;
    int index_of(const std::string& name) const;  // throws input_error

    Poly var(int v) const { return Poly::variable(arity(), v); }
    Poly parse(const std::string& text) const { return parse_poly(names, text); }
    std::string print(const Poly& p) const { return print_poly(names, p); }

    static RingContext affine(const std::vector<std::string>& z_names,
                              const std::vector<std::string>& y_names = {});

    // Extend by auxiliary variables (appended after the existing ones);
    // existing polynomials embed via `embed`.
    RingContext with_aux(const std::vector<std::string>& aux_names) const;

    // Localize at `poly != 0`: adjoin a fresh inverse variable u with the
    // relation u*poly - 1.
    RingContext localized_at(const Poly& poly, const std::string& inv_name, int* inv_var) const;

    void check_well_formed() const;  // distinct names, relation arities
};

// A family 𝒳 = F^{-1}(0) together with its coordinate ring. The context's
// relations are exactly the components of F.
struct VarietyFamily {
    RingContext ctx;
    std::vector<Poly> F;

    int p() const { return static_cast<int>(F.size()); }
    static VarietyFamily from_map(const RingContext& base, const std::vector<Poly>& F);
};

}  // namespace bilip
