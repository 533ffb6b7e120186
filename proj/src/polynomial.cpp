#include "rootpoly/polynomial.hpp"

#include <sstream>

#include "rootpoly/errors.hpp"

namespace rootpoly {

Polynomial::Polynomial(std::vector<long long> coeffs) : c_(std::move(coeffs)) { normalize(); }

Polynomial Polynomial::constant(long long c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(long long c, int degree) {
    std::vector<long long> v(degree + 1, 0);
    v[degree] = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::one_minus_x() { return Polynomial({1, -1}); }

void Polynomial::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

long long Polynomial::coeff(int degree) const {
    if (degree < 0 || degree >= static_cast<int>(c_.size())) return 0;
    return c_[degree];
}

int Polynomial::degree() const { return static_cast<int>(c_.size()) - 1; }

long long Polynomial::eval_int(long long x) const {
    long long acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<long long> v(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
    std::vector<long long> v(c_);
    for (auto& x : v) x = -x;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (c_.empty() || o.c_.empty()) return Polynomial();
    std::vector<long long> v(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw domain_error("negative polynomial exponent");
    Polynomial acc = Polynomial::constant(1);
    for (int i = 0; i < e; ++i) acc = acc * (*this);
    return acc;
}

std::string Polynomial::coeff_list() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ", ";
        os << c_[i];
    }
    os << "]";
    return os.str();
}

std::string Polynomial::human() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        long long a = c_[i];
        if (a == 0) continue;
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        long long mag = a < 0 ? -a : a;
        if (i == 0) {
            os << mag;
        } else {
            if (mag != 1) os << mag;
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace rootpoly
