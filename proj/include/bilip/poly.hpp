#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bilip/rational.hpp"

namespace bilip {

// Exponent vector; one slot per ring variable.
using Mono = std::vector<std::uint32_t>;

int total_degree(const Mono& m);
bool mono_divides(const Mono& a, const Mono& b);  // a | b
Mono mono_mul(const Mono& a, const Mono& b);
Mono mono_div(const Mono& a, const Mono& b);  // requires b | a
Mono mono_lcm(const Mono& a, const Mono& b);

// +1 if a > b in graded reverse lexicographic order, -1 if a < b, 0 if equal.
int degrevlex_cmp(const Mono& a, const Mono& b);

// Canonical storage order: leading (largest degrevlex) term first, so
// structural equality of the term maps is polynomial equality.
struct MonoStoreCmp {
    bool operator()(const Mono& a, const Mono& b) const { return degrevlex_cmp(a, b) > 0; }
};

// Sparse distributed multivariate polynomial over Q with a fixed arity.
// Invariant: no zero coefficients are stored; all exponent vectors have
// size() == arity().
class Poly {
  public:
    using TermMap = std::map<Mono, Rational, MonoStoreCmp>;

    Poly() : arity_(0) {}
    explicit Poly(int arity) : arity_(arity) {}
    Poly(int arity, const Rational& constant);

    static Poly variable(int arity, int var, std::uint32_t power = 1);
    static Poly constant(int arity, const Rational& c) { return Poly(arity, c); }

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    int degree() const;  // total degree; -1 for the zero polynomial

    // Coefficient of an exponent vector (zero if absent).
    Rational coeff(const Mono& m) const;
    void add_term(const Mono& m, const Rational& c);

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    bool operator==(const Poly& o) const { return arity_ == o.arity_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly scaled(const Rational& c) const;
    Poly mono_scaled(const Mono& m, const Rational& c) const;  // c*x^m * this
    Poly pow(std::uint32_t e) const;

    // Clear integer denominators and divide out integer content; make the
    // canonical leading coefficient positive. Generates the same ideal.
    Poly primitive_part() const;

    // Total order: arity, then term-by-term. Used to keep generator lists
    // and report output deterministic.
    static int compare(const Poly& a, const Poly& b);

  private:
    int arity_;
    TermMap terms_;
};

Poly differentiate(const Poly& p, int var);

// Ring morphism: replace variable i by images[i] (all of arity target_arity).
Poly substitute(const Poly& p, const std::vector<Poly>& images, int target_arity);

// Identity images for the embedding into a ring with more variables whose
// first `p.arity()` variables match.
Poly embed(const Poly& p, int target_arity);

Rational evaluate(const Poly& p, const std::vector<Rational>& point);

// Exact division: returns true and sets q with p == q*d. A single divisor is
// a Groebner basis of the principal ideal it generates, so the remainder of
// division by d is zero exactly when d divides p.
bool try_divide_exact(const Poly& p, const Poly& d, Poly& q);

// Textual grammar shared by every interface: integers, rationals a/b,
// variable identifiers, + - * ^, parentheses. parse(print(p)) == p.
Poly parse_poly(const std::vector<std::string>& var_names, const std::string& text);
std::string print_poly(const std::vector<std::string>& var_names, const Poly& p);

}  // namespace bilip
