#pragma once

// Spectral data of the (2,p) series: central charges, the weights h_{r,s},
// the Zhu-algebra polynomials and the table of irreducible modules.

#include "logct/exact.hpp"
#include "logct/verdict.hpp"

#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace logct {

/// constant * prod (x - root)^mult, coinciding roots merged.
class FactoredPoly {
public:
    FactoredPoly() = default;
    explicit FactoredPoly(Rational constant) : constant_(std::move(constant)) {}

    void add_root(const Rational& r, int mult = 1)
    {
        if (mult <= 0) throw std::invalid_argument("root multiplicity must be positive");
        roots_[r] += mult;
    }

    [[nodiscard]] const Rational& constant() const { return constant_; }
    [[nodiscard]] const std::map<Rational, int>& roots() const { return roots_; }
    [[nodiscard]] long degree() const
    {
        long d = 0;
        for (const auto& [r, m] : roots_) d += m;
        return d;
    }
    [[nodiscard]] int multiplicity(const Rational& r) const
    {
        auto it = roots_.find(r);
        return it == roots_.end() ? 0 : it->second;
    }
    [[nodiscard]] TPoly expand() const
    {
        TPoly acc(constant_);
        for (const auto& [r, m] : roots_)
            for (int i = 0; i < m; ++i) acc *= TPoly({-r, Rational(1)});
        return acc;
    }
    /// Root data only (the constant may be a formal unknown).
    [[nodiscard]] bool same_roots(const FactoredPoly& o) const { return roots_ == o.roots_; }

    friend std::ostream& operator<<(std::ostream& os, const FactoredPoly& f)
    {
        os << to_string(f.constant_);
        for (const auto& [r, m] : f.roots_) {
            os << "(x" << (r < 0 ? "+" : "-") << to_string(abs(r)) << ")";
            if (m > 1) os << '^' << m;
        }
        return os;
    }

private:
    Rational constant_ = 1;
    std::map<Rational, int> roots_;
};

/// c_{q,p} = 1 - 6(p-q)^2/(pq), q and p coprime.
inline Rational central_charge(long q, long p)
{
    if (q < 1 || p < 1) throw std::invalid_argument("central_charge: q and p must be positive");
    if (std::gcd(q, p) != 1) throw std::invalid_argument("central_charge: q and p must be coprime");
    return 1 - rat(6 * (p - q) * (p - q), p * q);
}

/// h_{r,s} = ((pr - 2s)^2 - (p-2)^2) / (8p).
inline Rational h_rs(long p, long r, long s)
{
    if (p < 1) throw std::invalid_argument("h_rs: p must be positive");
    const long a = p * r - 2 * s;
    return rat(a * a - (p - 2) * (p - 2), 8 * p);
}

inline void require_odd_ge3(long p, const char* who)
{
    if (p < 3 || p % 2 == 0) throw std::invalid_argument(std::string(who) + ": p must be odd and >= 3");
}

/// The linear factor of f_p is x - h_{2,p}; the printed index order h_{p,2}
/// disagrees with the explicit p = 3 factor (x + 1/24).
inline Rational zhu_linear_root(long p) { return h_rs(p, 2, p); }
inline Rational zhu_linear_root_as_printed(long p) { return h_rs(p, p, 2); }

inline FactoredPoly zhu_poly_W(long p)
{
    require_odd_ge3(p, "zhu_poly_W");
    FactoredPoly f;
    for (long i = 1; i <= (p - 1) / 2; ++i) f.add_root(h_rs(p, 1, i), 3);
    for (long i = p; i <= 2 * p - 1; ++i) f.add_root(h_rs(p, 1, i), 2);
    for (long i = 1; i <= p - 1; ++i) f.add_root(h_rs(p, 2, i), 2);
    f.add_root(zhu_linear_root(p));
    for (long i = 2 * p; i <= 3 * p - 1; ++i) f.add_root(h_rs(p, 1, i));
    for (long i = 2 * p; i <= 3 * p - 1; ++i) f.add_root(h_rs(p, 2, i));
    return f;
}

/// Unfactored first form of f_p: prod_{i=1}^{3p-1}(x-h_{1,i}) prod_{i=1}^{(3p-1)/2}(x-h_{1,2p-i}) prod_{i=1}^{3p-1}(x-h_{2,i}).
inline FactoredPoly zhu_poly_W_first_form(long p)
{
    require_odd_ge3(p, "zhu_poly_W");
    FactoredPoly f;
    for (long i = 1; i <= 3 * p - 1; ++i) f.add_root(h_rs(p, 1, i));
    for (long i = 1; i <= (3 * p - 1) / 2; ++i) f.add_root(h_rs(p, 1, 2 * p - i));
    for (long i = 1; i <= 3 * p - 1; ++i) f.add_root(h_rs(p, 2, i));
    return f;
}

/// The x-part of P(x,y) = y^2 - C_p * (this).
inline FactoredPoly zhu_poly_singlet(long p)
{
    require_odd_ge3(p, "zhu_poly_singlet");
    FactoredPoly f;
    for (long i = 0; i <= 2 * p - 2; ++i) f.add_root(rat((2 * p - 2 - i) * (p - i), 2 * p), 2);
    for (long i = 0; i <= 2 * p - 2; ++i) f.add_root(rat((3 * p - 4 - 2 * i) * (p - 2 * i), 8 * p));
    return f;
}

/// f(x) for p = 3 as printed explicitly.
inline FactoredPoly zhu_poly_W3_printed()
{
    FactoredPoly f;
    f.add_root(0, 3);
    for (const Rational& r : {Rational(1), Rational(2), rat(1, 8), rat(5, 8), rat(1, 3)}) f.add_root(r, 2);
    for (const Rational& r : {Rational(5), Rational(7), rat(10, 3), rat(-1, 24), rat(33, 8), rat(21, 8), rat(35, 24)}) f.add_root(r);
    return f;
}

/// The explicit p = 3 singlet polynomial.
inline FactoredPoly zhu_poly_singlet3_printed()
{
    FactoredPoly f;
    f.add_root(rat(-1, 24));
    f.add_root(rat(5, 8), 2);
    f.add_root(rat(1, 8), 2);
    f.add_root(0, 4);
    f.add_root(1, 2);
    f.add_root(2, 2);
    f.add_root(rat(1, 3), 2);
    return f;
}

enum class ModuleOrigin { MinimalModel, WModule };

struct ModuleEntry {
    std::string label;
    Rational lowest_weight;
    int top_dimension = 1;
    ModuleOrigin origin = ModuleOrigin::MinimalModel;
};

struct ModuleTable {
    std::vector<ModuleEntry> entries;
    /// Top dimensions for p > 3 follow the p = 3 column rule and are not
    /// stated anywhere for general p.
    bool dimensions_extrapolated = false;
};

/// (p-1)/2 minimal-model modules plus 4p modules W(h). Top dimension 2 on the
/// weights h_{1,i} and h_{2,i} with 2p <= i <= 3p-1.
inline ModuleTable module_table(long p)
{
    require_odd_ge3(p, "module_table");
    ModuleTable t;
    t.dimensions_extrapolated = p > 3;
    auto label = [](const char* kind, long r, long s) {
        return std::string(kind) + "(h_{" + std::to_string(r) + "," + std::to_string(s) + "})";
    };
    for (long i = 1; i <= (p - 1) / 2; ++i) t.entries.push_back({label("L", 1, i), h_rs(p, 1, i), 1, ModuleOrigin::MinimalModel});
    for (long i = p; i <= 3 * p - 1; ++i)
        t.entries.push_back({label("W", 1, i), h_rs(p, 1, i), i >= 2 * p ? 2 : 1, ModuleOrigin::WModule});
    for (long j = 1; j <= p; ++j) t.entries.push_back({label("W", 2, j), h_rs(p, 2, j), 1, ModuleOrigin::WModule});
    for (long k = 2 * p; k <= 3 * p - 1; ++k) t.entries.push_back({label("W", 2, k), h_rs(p, 2, k), 2, ModuleOrigin::WModule});
    return t;
}

struct Counts {
    long irreducible = 0;
    long character_dim = 0;
};

inline Counts counts(long p)
{
    require_odd_ge3(p, "counts");
    return {4 * p + (p - 1) / 2, (15 * p - 5) / 2};
}

inline const std::set<Rational>& s23_one_dimensional()
{
    static const std::set<Rational> s{0, 1, 2, rat(1, 3), rat(1, 8), rat(5, 8), rat(-1, 24)};
    return s;
}

inline const std::set<Rational>& s23_two_dimensional()
{
    static const std::set<Rational> s{5, 7, rat(10, 3), rat(21, 8), rat(33, 8), rat(35, 24)};
    return s;
}

inline Verdict verify_zhu_w(long p)
{
    const FactoredPoly f = zhu_poly_W(p);
    Verdict v;
    std::ostringstream os;
    os << f;
    v.lhs = os.str();
    if (f.degree() != counts(p).character_dim)
        return refuted(v.lhs, std::to_string(counts(p).character_dim),
                       "degree " + std::to_string(f.degree()) + " != character dimension");
    if (!f.same_roots(zhu_poly_W_first_form(p)))
        return refuted(v.lhs, "first printed form", "the two printed product forms have different root multisets");
    if (p == 3) {
        std::ostringstream ps;
        ps << zhu_poly_W3_printed();
        v.rhs = ps.str();
        if (!f.same_roots(zhu_poly_W3_printed())) return refuted(v.lhs, v.rhs, "root multiset differs from the explicit p=3 polynomial");
    } else {
        v.rhs = "degree " + std::to_string(counts(p).character_dim);
    }
    v.status = Status::Verified;
    v.sign_note = "linear factor read as x - h_{2,p} = x + " + to_string(-zhu_linear_root(p)) +
                  "; printed index order h_{p,2} would give x - " + to_string(zhu_linear_root_as_printed(p));
    return v;
}

inline Verdict verify_zhu_singlet(long p)
{
    const FactoredPoly f = zhu_poly_singlet(p);
    Verdict v;
    std::ostringstream os;
    os << f;
    v.lhs = os.str();
    if (f.degree() != 6 * p - 3) return refuted(v.lhs, std::to_string(6 * p - 3), "degree " + std::to_string(f.degree()));
    if (p == 3) {
        std::ostringstream ps;
        ps << zhu_poly_singlet3_printed();
        v.rhs = ps.str();
        if (!f.same_roots(zhu_poly_singlet3_printed())) return refuted(v.lhs, v.rhs, "root multiset differs from the explicit p=3 polynomial");
    } else {
        v.rhs = "degree " + std::to_string(6 * p - 3);
    }
    v.status = Status::Verified;
    return v;
}

}  // namespace logct
