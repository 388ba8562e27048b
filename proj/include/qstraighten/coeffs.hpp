/**
 * @file coeffs.hpp
 * @brief Exact coefficient arithmetic in the indeterminate q.
 *
 * The scalar domain of the whole library: polynomials in q over exact
 * rationals and their fraction field.  A RationalQ is kept in a canonical
 * reduced form, so structural equality coincides with mathematical equality.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qst {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense polynomial in q with exact rational coefficients.
/// coeff(d) is the coefficient of q^d; trailing zeros are stripped, so the
/// zero polynomial has empty storage and degree() == -1.
class QPoly {
public:
    QPoly() = default;
    QPoly(int c) : QPoly(Rational(c)) {}
    QPoly(const Rational& c);
    explicit QPoly(std::vector<Rational> coeffs);

    /// The monomial q^d.
    static QPoly q_power(unsigned d);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational coeff(std::size_t d) const;
    const Rational& leading() const;
    Rational at_zero() const { return coeff(0); }
    /// Largest k with q^k dividing the polynomial (0 for the zero polynomial).
    int valuation() const;

    QPoly operator-() const;
    friend QPoly operator+(const QPoly& a, const QPoly& b);
    friend QPoly operator-(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    QPoly& operator+=(const QPoly& o) { return *this = *this + o; }
    QPoly& operator-=(const QPoly& o) { return *this = *this - o; }
    QPoly& operator*=(const QPoly& o) { return *this = *this * o; }

    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

    /// Euclidean division: a = q*b + r with deg r < deg b.  b must be nonzero.
    static void divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem);
    /// Exact division; throws std::domain_error if b does not divide a.
    static QPoly div_exact(const QPoly& a, const QPoly& b);
    /// Canonical gcd: integer-primitive with positive leading coefficient.
    static QPoly gcd(QPoly a, QPoly b);

    /// Positive rational c such that (*this)/c has coprime integer
    /// coefficients.  Zero for the zero polynomial.
    Rational content() const;

    QPoly scaled(const Rational& s) const;

    std::string str() const;

private:
    std::vector<Rational> c_;
    void trim();
};

/// Reduced ratio of polynomials in q.  Canonical form: gcd(num, den) = 1 and
/// the denominator is integer-primitive with positive leading coefficient
/// (hence exactly 1 for polynomial values).  Values are immutable in spirit:
/// every operation returns a fresh reduced value.
class RationalQ {
public:
    RationalQ() : num_(), den_(1) {}
    RationalQ(int c) : num_(c), den_(1) {}
    RationalQ(const Rational& c) : num_(c), den_(1) {}
    RationalQ(QPoly num) : num_(std::move(num)), den_(1) {}
    RationalQ(QPoly num, QPoly den);

    /// q^k for any integer k (negative powers land in the denominator).
    static RationalQ q_power(int k);

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == QPoly(1) && den_ == QPoly(1); }

    RationalQ operator-() const;
    RationalQ inv() const;
    friend RationalQ operator+(const RationalQ& a, const RationalQ& b);
    friend RationalQ operator-(const RationalQ& a, const RationalQ& b);
    friend RationalQ operator*(const RationalQ& a, const RationalQ& b);
    friend RationalQ operator/(const RationalQ& a, const RationalQ& b);
    RationalQ& operator+=(const RationalQ& o) { return *this = *this + o; }
    RationalQ& operator-=(const RationalQ& o) { return *this = *this - o; }
    RationalQ& operator*=(const RationalQ& o) { return *this = *this * o; }
    RationalQ& operator/=(const RationalQ& o) { return *this = *this / o; }

    friend bool operator==(const RationalQ& a, const RationalQ& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalQ& a, const RationalQ& b) { return !(a == b); }
    /// Arbitrary strict total order, for use as a map key.
    friend bool operator<(const RationalQ& a, const RationalQ& b);

    bool is_polynomial() const { return den_.degree() == 0; }
    /// True iff the value lies in K[q, q^-1].
    bool is_laurent() const;
    /// True iff the denominator does not vanish at q = 0.
    bool is_regular_at_zero() const { return den_.at_zero() != 0; }
    /// Evaluation at q = 0; throws std::domain_error on a pole.
    Rational value_at_zero() const;

    std::string str() const;
    /// Parses the grammar produced by str(): +, -, *, /, ^, parentheses,
    /// integers and the letter q (exponents may be negative).
    static RationalQ parse(std::string_view text);

private:
    QPoly num_, den_;
    void reduce();
};

/// The q-integer [m] = (q^m - q^-m)/(q - q^-1), m >= 0.
RationalQ q_int(int m);
/// The same expression for arbitrary integer argument: [-d] = -[d].
RationalQ q_int_signed(int d);
/// [m]! = [m][m-1]...[1].
RationalQ q_factorial(int m);

inline bool is_polynomial_in_q(const RationalQ& x) { return x.is_polynomial(); }
inline bool is_laurent(const RationalQ& x) { return x.is_laurent(); }
inline Rational value_at_zero(const RationalQ& x) { return x.value_at_zero(); }

}  // namespace qst
