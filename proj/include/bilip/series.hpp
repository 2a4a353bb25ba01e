#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bilip/poly.hpp"
#include "bilip/rational.hpp"

namespace bilip {

// Univariate power series in one formal parameter, known exactly through
// order N. Coefficients beyond N are unknown, not zero; every operation
// carries min of the operand truncations.
class TruncSeries {
  public:
    TruncSeries() : coeffs_(1, Rational(0)) {}
    explicit TruncSeries(int order) : coeffs_(order + 1, Rational(0)) {}
    TruncSeries(int order, const Rational& constant);

    static TruncSeries parameter(int order);  // the series t
    static TruncSeries monomial(int order, int power, const Rational& c);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& coeff(int k) const;
    void set_coeff(int k, const Rational& c);

    bool is_zero_to_order() const;
    // Smallest k with nonzero c_k; order()+1 when zero through the truncation.
    int valuation() const;

    TruncSeries truncated(int order) const;

    TruncSeries operator-() const;
    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator-(const TruncSeries& o) const;
    TruncSeries operator*(const TruncSeries& o) const;
    bool operator==(const TruncSeries& o) const { return coeffs_ == o.coeffs_; }

    TruncSeries scaled(const Rational& c) const;

    // Divide by t^v; requires the first v coefficients to vanish. The result
    // is one order shorter per power divided out.
    TruncSeries shift_down(int v) const;
    TruncSeries shift_up(int v) const;

    TruncSeries inverse() const;              // requires unit constant term
    TruncSeries nth_root(int n) const;        // requires constant term 1
    TruncSeries derivative() const;
    TruncSeries compose(const TruncSeries& inner) const;  // inner valuation >= 1

    std::string to_string(const std::string& var) const;

  private:
    std::vector<Rational> coeffs_;  // c_0 .. c_N
};

// Evaluate a polynomial at one series per ring variable.
TruncSeries compose_poly(const Poly& p, const std::vector<TruncSeries>& images);

// Bivariate truncated series in (t, s): coefficients c_{ij} of t^i s^j for
// i+j <= N.
class BiSeries {
  public:
    using Key = std::pair<int, int>;  // (i, j) = (t-power, s-power)

    BiSeries() : order_(0) {}
    explicit BiSeries(int order) : order_(order) {}
    BiSeries(int order, const Rational& constant);

    static BiSeries var_t(int order);
    static BiSeries var_s(int order);

    int order() const { return order_; }
    const std::map<Key, Rational>& terms() const { return terms_; }
    Rational coeff(int i, int j) const;
    void set_coeff(int i, int j, const Rational& c);

    bool is_zero_to_order() const { return terms_.empty(); }
    // Smallest s-power occurring; order()+1 when zero through the truncation.
    int s_valuation() const;
    int t_valuation() const;

    // Coefficient of s^j as a series in t (order N - j).
    TruncSeries s_coefficient(int j) const;
    TruncSeries at_s_zero() const { return s_coefficient(0); }

    BiSeries truncated(int order) const;

    BiSeries operator-() const;
    BiSeries operator+(const BiSeries& o) const;
    BiSeries operator-(const BiSeries& o) const;
    BiSeries operator*(const BiSeries& o) const;
    bool operator==(const BiSeries& o) const { return order_ == o.order_ && terms_ == o.terms_; }

    BiSeries scaled(const Rational& c) const;
    BiSeries pow(int e) const;

    BiSeries s_shift_down(int v) const;  // divide by s^v
    BiSeries s_shift_up(int v) const;

    BiSeries inverse() const;        // requires c_{00} != 0
    BiSeries nth_root(int n) const;  // requires c_{00} == 1
    BiSeries d_dt() const;
    BiSeries d_ds() const;

    // Substitute s -> inner (s-valuation >= 1); t is left fixed.
    BiSeries compose_s(const BiSeries& inner) const;

    static BiSeries from_t_series(const TruncSeries& f, int order);
    // Substitute t -> g, s -> h into a univariate series in t.
    static BiSeries lift_t_series(const TruncSeries& f, const BiSeries& g);

    // Exact conversion of a polynomial in two named variables (t at index
    // t_var, s at index s_var); fails if the degree exceeds the order.
    static BiSeries from_poly(const Poly& p, int t_var, int s_var, int order);
    bool to_poly_exact(int arity, int t_var, int s_var, Poly& out) const;

    std::string to_string(const std::string& tname, const std::string& sname) const;

  private:
    int order_;
    std::map<Key, Rational> terms_;
};

// Evaluate a polynomial at one bivariate series per ring variable.
BiSeries compose_poly_bis(const Poly& p, const std::vector<BiSeries>& images);

}  // namespace bilip
