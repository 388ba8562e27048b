#include "qstraighten/coeffs.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qst {

// ---------------------------------------------------------------- QPoly ----

QPoly::QPoly(const Rational& c) {
    if (c != 0) c_.push_back(c);
}

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::q_power(unsigned d) {
    std::vector<Rational> c(d + 1, Rational(0));
    c[d] = 1;
    return QPoly(std::move(c));
}

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational QPoly::coeff(std::size_t d) const {
    return d < c_.size() ? c_[d] : Rational(0);
}

const Rational& QPoly::leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

int QPoly::valuation() const {
    for (std::size_t d = 0; d < c_.size(); ++d)
        if (c_[d] != 0) return static_cast<int>(d);
    return 0;
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return QPoly(std::move(c));
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return QPoly(std::move(c));
}

void QPoly::divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> r = a.c_;
    std::vector<Rational> q;
    int db = b.degree();
    if (static_cast<int>(r.size()) - 1 >= db) q.assign(r.size() - db, Rational(0));
    for (int d = static_cast<int>(r.size()) - 1; d >= db; --d) {
        if (r[d] == 0) continue;
        Rational f = r[d] / b.c_.back();
        q[d - db] = f;
        for (int j = 0; j <= db; ++j) r[d - db + j] -= f * b.c_[j];
    }
    quot = QPoly(std::move(q));
    rem = QPoly(std::move(r));
}

QPoly QPoly::div_exact(const QPoly& a, const QPoly& b) {
    QPoly q, r;
    divmod(a, b, q, r);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    Rational s = a.content();
    if (a.leading() < 0) s = -s;
    return a.scaled(Rational(1) / s);
}

Rational QPoly::content() const {
    if (is_zero()) return 0;
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& x : c_) {
        if (x == 0) continue;
        Int n = boost::multiprecision::abs(numerator(x));
        Int d = denominator(x);
        num_gcd = boost::multiprecision::gcd(num_gcd, n);
        den_lcm = boost::multiprecision::lcm(den_lcm, d);
    }
    return Rational(num_gcd, den_lcm);
}

QPoly QPoly::scaled(const Rational& s) const {
    QPoly r = *this;
    for (auto& x : r.c_) x *= s;
    r.trim();
    return r;
}

namespace {

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

// One term "c q^d" with sign handled by the caller; d may be negative.
std::string term_str(const Rational& c, int d) {
    Rational a = c < 0 ? Rational(-c) : c;
    std::string s;
    if (a != 1 || d == 0) s += rational_str(a);
    if (d != 0) {
        if (!s.empty()) s += "*";
        s += d == 1 ? "q" : "q^" + std::to_string(d);
    }
    return s;
}

// Terms of p in ascending powers, exponents shifted down by `shift`.
std::string laurent_str(const QPoly& p, int shift) {
    if (p.is_zero()) return "0";
    std::string s;
    for (int d = 0; d <= p.degree(); ++d) {
        Rational c = p.coeff(static_cast<std::size_t>(d));
        if (c == 0) continue;
        if (s.empty()) {
            if (c < 0) s += "-";
        } else {
            s += c < 0 ? " - " : " + ";
        }
        s += term_str(c, d - shift);
    }
    return s;
}

}  // namespace

std::string QPoly::str() const { return laurent_str(*this, 0); }

// ------------------------------------------------------------ RationalQ ----

RationalQ::RationalQ(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RationalQ: zero denominator");
    reduce();
}

void RationalQ::reduce() {
    if (num_.is_zero()) {
        den_ = QPoly(1);
        return;
    }
    QPoly g = QPoly::gcd(num_, den_);
    if (g.degree() > 0 || g != QPoly(1)) {
        num_ = QPoly::div_exact(num_, g);
        den_ = QPoly::div_exact(den_, g);
    }
    Rational s = den_.content();
    if (den_.leading() < 0) s = -s;
    if (s != 1) {
        Rational inv = Rational(1) / s;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RationalQ RationalQ::q_power(int k) {
    if (k >= 0) return RationalQ(QPoly::q_power(static_cast<unsigned>(k)));
    return RationalQ(QPoly(1), QPoly::q_power(static_cast<unsigned>(-k)));
}

RationalQ RationalQ::operator-() const {
    RationalQ r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalQ RationalQ::inv() const {
    if (is_zero()) throw std::domain_error("RationalQ: division by zero");
    return RationalQ(den_, num_);
}

RationalQ operator+(const RationalQ& a, const RationalQ& b) {
    return RationalQ(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalQ operator-(const RationalQ& a, const RationalQ& b) { return a + (-b); }

RationalQ operator*(const RationalQ& a, const RationalQ& b) {
    return RationalQ(a.num_ * b.num_, a.den_ * b.den_);
}

RationalQ operator/(const RationalQ& a, const RationalQ& b) { return a * b.inv(); }

bool operator<(const RationalQ& a, const RationalQ& b) {
    auto key = [](const QPoly& p) {
        std::vector<Rational> v;
        for (int d = 0; d <= p.degree(); ++d) v.push_back(p.coeff(static_cast<std::size_t>(d)));
        return v;
    };
    auto ka = std::make_pair(key(a.num_), key(a.den_));
    auto kb = std::make_pair(key(b.num_), key(b.den_));
    return ka < kb;
}

bool RationalQ::is_laurent() const {
    // Canonical denominator is primitive with positive leading coefficient,
    // so a Laurent value has denominator exactly q^k.
    for (int d = 0; d < den_.degree(); ++d)
        if (den_.coeff(static_cast<std::size_t>(d)) != 0) return false;
    return den_.leading() == 1;
}

Rational RationalQ::value_at_zero() const {
    if (!is_regular_at_zero())
        throw std::domain_error("RationalQ: pole at q=0 (value not in the lattice ring)");
    return num_.at_zero() / den_.at_zero();
}

std::string RationalQ::str() const {
    if (is_laurent()) return laurent_str(num_, den_.degree());
    std::string ns = num_.str();
    if (ns.find(' ') != std::string::npos || ns.find('*') != std::string::npos)
        ns = "(" + ns + ")";
    return ns + "/(" + den_.str() + ")";
}

// ----------------------------------------------------------------- parse ----

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    RationalQ parse() {
        RationalQ v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return v;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("parse error at position " + std::to_string(pos_) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    RationalQ expr() {
        RationalQ v = term();
        for (;;) {
            if (eat('+')) v += term();
            else if (eat('-')) v -= term();
            else return v;
        }
    }

    RationalQ term() {
        RationalQ v = factor();
        for (;;) {
            if (eat('*')) v *= factor();
            else if (eat('/')) v /= factor();
            else {
                // implicit multiplication, e.g. "2q" or "3 q^2"
                skip_ws();
                if (pos_ < s_.size() && (s_[pos_] == 'q' || s_[pos_] == '(')) v *= factor();
                else return v;
            }
        }
    }

    RationalQ factor() {
        if (eat('-')) return -factor();
        RationalQ base = primary();
        if (eat('^')) {
            int e = integer();
            RationalQ r(1);
            RationalQ b = e < 0 ? base.inv() : base;
            for (int k = 0; k < std::abs(e); ++k) r *= b;
            return r;
        }
        return base;
    }

    RationalQ primary() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RationalQ v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (c == 'q') {
            ++pos_;
            return RationalQ::q_power(1);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return RationalQ(Rational(unsigned_integer()));
        fail("expected number, 'q' or '('");
    }

    int integer() {
        skip_ws();
        bool neg = eat('-');
        Int v = unsigned_integer();
        if (v > 1000000) fail("exponent too large");
        return neg ? -static_cast<int>(v) : static_cast<int>(v);
    }

    Int unsigned_integer() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected digit");
        Int v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            ++pos_;
        }
        return v;
    }
};

}  // namespace

RationalQ RationalQ::parse(std::string_view text) { return Parser(text).parse(); }

// ------------------------------------------------------------ q-integers ----

RationalQ q_int(int m) {
    if (m < 0) throw std::invalid_argument("q_int: negative argument");
    return q_int_signed(m);
}

RationalQ q_int_signed(int d) {
    // (q^d - q^-d)/(q - q^-1) = sign(d) * q^{1-|d|} (1 + q^2 + ... + q^{2|d|-2})
    if (d == 0) return RationalQ(0);
    int m = d < 0 ? -d : d;
    std::vector<Rational> c(2 * m - 1, Rational(0));
    for (int j = 0; j < m; ++j) c[2 * j] = d < 0 ? -1 : 1;
    return RationalQ(QPoly(std::move(c)), QPoly::q_power(static_cast<unsigned>(m - 1)));
}

RationalQ q_factorial(int m) {
    if (m < 0) throw std::invalid_argument("q_factorial: negative argument");
    RationalQ r(1);
    for (int j = 2; j <= m; ++j) r *= q_int(j);
    return r;
}

}  // namespace qst
