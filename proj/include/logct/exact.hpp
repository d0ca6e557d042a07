#pragma once

// Exact scalars and univariate polynomials in the formal parameter t.
//
// Rational is GMP's mpq_class. Every helper here returns canonical values
// (lowest terms, positive denominator), so equality is structural.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace logct {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1)
{
    if (den == 0) throw std::domain_error("rat: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rat(const Integer& num, const Integer& den)
{
    if (den == 0) throw std::domain_error("rat: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// "num/den" with den > 0, always printed (even when den == 1).
inline std::string to_string(const Rational& r)
{
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Accepts "a/b" or a bare integer "a"; throws std::invalid_argument otherwise.
inline Rational parse_rational(std::string_view s)
{
    auto valid_int = [](std::string_view v) {
        if (v.empty()) return false;
        std::size_t i = (v[0] == '-' || v[0] == '+') ? 1 : 0;
        if (i == v.size()) return false;
        return std::all_of(v.begin() + static_cast<long>(i), v.end(),
                           [](char c) { return c >= '0' && c <= '9'; });
    };
    auto strip_plus = [](std::string_view v) {
        return std::string(v.size() && v[0] == '+' ? v.substr(1) : v);
    };
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den)) throw std::invalid_argument("not a rational: " + std::string(s));
    Integer n(strip_plus(num)), d(strip_plus(den));
    if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(s));
    return rat(n, d);
}

inline Integer factorial(long n)
{
    if (n < 0) throw std::domain_error("factorial of negative integer");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

/// n!! for odd n >= 1.
inline Integer double_factorial(long n)
{
    if (n < 1 || n % 2 == 0)
        throw std::domain_error("double_factorial: argument must be odd and positive, got " + std::to_string(n));
    Integer r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

/// Integer binomial C(n, k); zero when k < 0 or k > n >= 0. Negative n uses
/// the generalized definition.
inline Integer binom_int(long n, long k)
{
    if (k < 0) return 0;
    Integer r;
    if (n >= 0) {
        if (k > n) return 0;
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    } else {
        Integer top(n);
        mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(k));
    }
    return r;
}

/// Generalized binomial x(x-1)...(x-n+1)/n!. Negative n gives 0.
inline Rational binom_rat(const Rational& x, long n)
{
    if (n < 0) return 0;
    Rational acc = 1;
    for (long i = 0; i < n; ++i) acc *= (x - i);
    acc /= Rational(factorial(n));
    return acc;
}

/// H_n = 1 + 1/2 + ... + 1/n, H_0 = 0.
inline Rational harmonic(long n)
{
    if (n < 0) throw std::domain_error("harmonic: negative index");
    Rational h = 0;
    for (long i = 1; i <= n; ++i) h += rat(1, i);
    return h;
}

/// Dense polynomial in t with Rational coefficients, index = power of t.
class TPoly {
public:
    TPoly() = default;
    TPoly(const Rational& c) : coeffs_{c} { trim(); }  // NOLINT(implicit)
    TPoly(long c) : TPoly(Rational(c)) {}              // NOLINT(implicit)
    explicit TPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    TPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

    static TPoly t() { return TPoly({Rational(0), Rational(1)}); }

    /// -1 for the zero polynomial.
    [[nodiscard]] long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }

    [[nodiscard]] Rational coeff(long i) const
    {
        return (i < 0 || i > degree()) ? Rational(0) : coeffs_[static_cast<std::size_t>(i)];
    }
    [[nodiscard]] Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

    [[nodiscard]] Rational operator()(const Rational& x) const
    {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    [[nodiscard]] TPoly derivative() const
    {
        if (coeffs_.size() <= 1) return {};
        std::vector<Rational> d(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
        return TPoly(std::move(d));
    }

    /// P(a*t + b).
    [[nodiscard]] TPoly compose_affine(const Rational& a, const Rational& b) const
    {
        TPoly lin({b, a});
        TPoly acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * lin + TPoly(*it);
        return acc;
    }

    TPoly& operator+=(const TPoly& o)
    {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    TPoly& operator-=(const TPoly& o)
    {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    TPoly& operator*=(const Rational& c)
    {
        if (c == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& x : coeffs_) x *= c;
        return *this;
    }
    TPoly& operator*=(const TPoly& o)
    {
        *this = *this * o;
        return *this;
    }

    friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
    friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
    friend TPoly operator-(TPoly a)
    {
        for (auto& x : a.coeffs_) x = -x;
        return a;
    }
    friend TPoly operator*(TPoly a, const Rational& c) { return a *= c; }
    friend TPoly operator*(const Rational& c, TPoly a) { return a *= c; }
    friend TPoly operator*(const TPoly& a, const TPoly& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return TPoly(std::move(r));
    }
    friend bool operator==(const TPoly& a, const TPoly& b) { return a.coeffs_ == b.coeffs_; }

    /// Euclidean division; divisor must be nonzero.
    friend std::pair<TPoly, TPoly> divmod(const TPoly& num, const TPoly& den)
    {
        if (den.is_zero()) throw std::domain_error("TPoly division by zero polynomial");
        std::vector<Rational> rem = num.coeffs_;
        long dn = den.degree();
        if (num.degree() < dn) return {TPoly(), num};
        std::vector<Rational> q(static_cast<std::size_t>(num.degree() - dn + 1));
        Rational lead = den.leading();
        for (long i = num.degree(); i >= dn; --i) {
            Rational c = rem[static_cast<std::size_t>(i)] / lead;
            q[static_cast<std::size_t>(i - dn)] = c;
            if (c == 0) continue;
            for (long j = 0; j <= dn; ++j) rem[static_cast<std::size_t>(i - dn + j)] -= c * den.coeffs_[static_cast<std::size_t>(j)];
        }
        rem.resize(static_cast<std::size_t>(dn));
        return {TPoly(std::move(q)), TPoly(std::move(rem))};
    }

    friend std::ostream& operator<<(std::ostream& os, const TPoly& p)
    {
        os << '[';
        for (std::size_t i = 0; i < p.coeffs_.size(); ++i) os << (i ? ", " : "") << to_string(p.coeffs_[i]);
        return os << ']';
    }

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

/// (t+shift)(t+shift-1)...(t+shift-n+1)/n! as a polynomial in t. Negative n gives 0.
inline TPoly binom_tpoly(const Rational& shift, long n)
{
    if (n < 0) return {};
    TPoly acc(1);
    for (long i = 0; i < n; ++i) acc *= TPoly({shift - i, Rational(1)});
    acc *= Rational(1) / Rational(factorial(n));
    return acc;
}

class InterpolationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Fits the polynomial of degree <= degree_bound through the first
/// degree_bound+1 points (Newton divided differences), then checks every
/// remaining point against it.
inline TPoly lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& points, long degree_bound)
{
    if (degree_bound < 0) throw InterpolationError("negative degree bound");
    const auto need = static_cast<std::size_t>(degree_bound + 1);
    if (points.size() < need)
        throw InterpolationError("need " + std::to_string(need) + " points, got " + std::to_string(points.size()));
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw InterpolationError("duplicate abscissa " + to_string(points[i].first));

    std::vector<Rational> dd(need);
    for (std::size_t i = 0; i < need; ++i) dd[i] = points[i].second;
    for (std::size_t level = 1; level < need; ++level)
        for (std::size_t i = need - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);

    TPoly result;
    for (std::size_t i = need; i-- > 0;) {
        result = result * TPoly({-points[i].first, Rational(1)}) + TPoly(dd[i]);
    }
    for (std::size_t i = need; i < points.size(); ++i)
        if (result(points[i].first) != points[i].second)
            throw InterpolationError("no polynomial of degree <= " + std::to_string(degree_bound) +
                                     " fits the data (mismatch at t = " + to_string(points[i].first) + ")");
    return result;
}

struct RationalRoots {
    std::vector<std::pair<Rational, int>> roots;  // ascending, with multiplicity
    TPoly cofactor;                               // no rational roots left
};

/// Rational roots by the rational root theorem on the integer-normalized
/// polynomial. Divisor enumeration uses trial division, so this is meant for
/// moderate coefficient sizes.
inline RationalRoots rational_roots(const TPoly& poly)
{
    if (poly.is_zero()) throw std::domain_error("rational_roots of the zero polynomial");
    RationalRoots out;
    TPoly rest = poly;
    auto push = [&](const Rational& r) {
        if (!out.roots.empty() && out.roots.back().first == r) {
            ++out.roots.back().second;
        } else {
            out.roots.emplace_back(r, 1);
        }
    };
    while (rest.degree() > 0 && rest.coeff(0) == 0) {
        push(0);
        rest = divmod(rest, TPoly::t()).first;
    }
    auto divisors = [](Integer n) {
        n = abs(n);
        std::vector<Integer> small, large;
        for (Integer d = 1; d * d <= n; ++d)
            if (n % d == 0) {
                small.push_back(d);
                if (d * d != n) large.push_back(n / d);
            }
        small.insert(small.end(), large.rbegin(), large.rend());
        return small;
    };
    bool found = true;
    while (found && rest.degree() > 0) {
        found = false;
        Integer lcm = 1;
        for (const auto& c : rest.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
        const Integer a0 = Rational(rest.coeff(0) * lcm).get_num();
        const Integer an = Rational(rest.leading() * lcm).get_num();
        std::vector<Rational> candidates;
        for (const auto& num : divisors(a0))
            for (const auto& den : divisors(an)) {
                candidates.push_back(rat(num, den));
                candidates.push_back(rat(-num, den));
            }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (const auto& r : candidates)
            if (rest(r) == 0) {
                rest = divmod(rest, TPoly({-r, Rational(1)})).first;
                out.roots.emplace_back(r, 1);
                found = true;
                break;
            }
    }
    std::sort(out.roots.begin(), out.roots.end());
    std::vector<std::pair<Rational, int>> merged;
    for (const auto& [r, m] : out.roots) {
        if (!merged.empty() && merged.back().first == r) {
            merged.back().second += m;
        } else {
            merged.emplace_back(r, m);
        }
    }
    out.roots = std::move(merged);
    out.cofactor = rest;
    return out;
}

}  // namespace logct
