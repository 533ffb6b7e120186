#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rootpoly {

/// Univariate polynomial with exact integer coefficients, ascending by degree.
/// Trailing zero coefficients are always stripped; the zero polynomial has an
/// empty coefficient list.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<long long> coeffs);
    static Polynomial constant(long long c);
    static Polynomial monomial(long long c, int degree);
    /// 1 - x, the factor attached to extra connected components.
    static Polynomial one_minus_x();

    const std::vector<long long>& coeffs() const { return c_; }
    long long coeff(int degree) const;
    int degree() const;  // -1 for the zero polynomial
    bool is_zero() const { return c_.empty(); }

    long long eval_int(long long x) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    bool operator==(const Polynomial& o) const { return c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return c_ != o.c_; }

    Polynomial pow(int e) const;

    /// Ascending coefficient list, e.g. "[1, 2, 1]".
    std::string coeff_list() const;
    /// Human-readable form, e.g. "1 + 2x + x^2".
    std::string human() const;

  private:
    std::vector<long long> c_;
    void normalize();
};

}  // namespace rootpoly
