#pragma once

// Verma modules of the Virasoro algebra in the PBW basis
// L(-n_1) ... L(-n_k)|h>, n_1 >= ... >= n_k >= 1, and the degree-5 fusion
// computation built on the level-5 singular vector of M(c_{2,p}, 3p-2).

#include "logct/exact.hpp"
#include "logct/spectrum.hpp"
#include "logct/verdict.hpp"

#include <map>
#include <string>
#include <vector>

namespace logct {

using Partition = std::vector<int>;  // non-increasing, parts >= 1

inline int level(const Partition& p)
{
    int s = 0;
    for (int x : p) s += x;
    return s;
}

struct VermaElement {
    Rational c;
    Rational h;
    std::map<Partition, Rational> terms;

    [[nodiscard]] bool is_zero() const { return terms.empty(); }

    void add(const Partition& part, const Rational& coeff)
    {
        if (coeff == 0) return;
        auto [it, inserted] = terms.try_emplace(part, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms.erase(it);
        }
    }
    void add_scaled(const VermaElement& o, const Rational& scale = 1)
    {
        for (const auto& [part, coeff] : o.terms) add(part, coeff * scale);
    }
    [[nodiscard]] Rational coeff(const Partition& part) const
    {
        auto it = terms.find(part);
        return it == terms.end() ? Rational(0) : it->second;
    }
    /// Level of a homogeneous element (-1 for zero).
    [[nodiscard]] int homogeneous_level() const
    {
        if (terms.empty()) return -1;
        int l = level(terms.begin()->first);
        for (const auto& [part, coeff] : terms)
            if (level(part) != l) throw std::logic_error("element is not homogeneous");
        return l;
    }
    friend bool operator==(const VermaElement& a, const VermaElement& b)
    {
        return a.c == b.c && a.h == b.h && a.terms == b.terms;
    }
};

/// Action of L(j), any integer j, on PBW monomials at fixed (c, h), by
/// commuting L(j) to the right with [L(m),L(n)] = (m-n)L(m+n) + (m^3-m)c/12 d_{m+n,0}.
/// Results are memoized per (j, monomial).
class VermaModule {
public:
    VermaModule(Rational c, Rational h) : c_(std::move(c)), h_(std::move(h)) {}

    [[nodiscard]] const Rational& c() const { return c_; }
    [[nodiscard]] const Rational& h() const { return h_; }

    [[nodiscard]] VermaElement zero() const { return {c_, h_, {}}; }
    [[nodiscard]] VermaElement basis(const Partition& part) const
    {
        VermaElement e = zero();
        e.add(part, 1);
        return e;
    }

    const VermaElement& act(int j, const Partition& part)
    {
        auto key = std::make_pair(j, part);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        VermaElement r = compute(j, part);
        return memo_.emplace(std::move(key), std::move(r)).first->second;
    }

    [[nodiscard]] VermaElement act(int j, const VermaElement& v)
    {
        VermaElement r = zero();
        for (const auto& [part, coeff] : v.terms) r.add_scaled(act(j, part), coeff);
        return r;
    }

private:
    VermaElement compute(int j, const Partition& part)
    {
        VermaElement r = zero();
        if (j == 0) {
            r.add(part, h_ + level(part));
            return r;
        }
        if (part.empty()) {
            if (j < 0) r.add(Partition{-j}, 1);
            return r;
        }
        const int n1 = part.front();
        const Partition rest(part.begin() + 1, part.end());
        if (j < 0) {
            const int a = -j;
            if (a >= n1) {
                Partition p{a};
                p.insert(p.end(), part.begin(), part.end());
                r.add(p, 1);
                return r;
            }
            // L(-a)L(-n1) = L(-n1)L(-a) + (n1-a)L(-a-n1)
            r.add_scaled(act(-n1, act(-a, rest)));
            r.add_scaled(act(-(a + n1), rest), Rational(n1 - a));
            return r;
        }
        // L(j)L(-n1) = L(-n1)L(j) + (j+n1)L(j-n1) + d_{j,n1}(j^3-j)c/12
        r.add_scaled(act(-n1, act(j, rest)));
        r.add_scaled(act(j - n1, rest), Rational(j + n1));
        if (j == n1) r.add(rest, c_ * rat(long(j) * j * j - j, 12));
        return r;
    }

    Rational c_;
    Rational h_;
    std::map<std::pair<int, Partition>, VermaElement> memo_;
};

inline VermaElement apply_raising(int m, const VermaElement& v)
{
    if (m < 1) throw std::invalid_argument("apply_raising: mode must be positive");
    VermaModule mod(v.c, v.h);
    return mod.act(m, v);
}

/// Annihilated by L(1) and L(2), which generate all L(m), m >= 1.
inline bool is_singular(const VermaElement& v)
{
    VermaModule mod(v.c, v.h);
    return mod.act(1, v).is_zero() && mod.act(2, v).is_zero();
}

/// The level-5 singular vector candidate of M(c_{2,p}, 3p-2), with the
/// L(-1)^5 coefficient normalized to 1.
inline VermaElement singular_vector_degree5(const Rational& p)
{
    const Rational p2 = p * p, p3 = p2 * p, p4 = p3 * p;
    VermaElement v;
    v.c = 1 - 3 * (p - 2) * (p - 2) / p;
    v.h = 3 * p - 2;
    v.add({1, 1, 1, 1, 1}, Rational(1));
    v.add({2, 1, 1, 1}, Rational(-10 * p));
    v.add({3, 1, 1}, Rational(21 * p2 - 15 * p));
    v.add({2, 2, 1}, Rational(16 * p2));
    v.add({4, 1}, Rational(42 * p2 - 18 * p - 36 * p3));
    v.add({3, 2}, Rational(-24 * p3 + 16 * p2));
    v.add({5}, Rational(-66 * p3 + 46 * p2 + 36 * p4 - 12 * p));
    return v;
}

// ---------------------------------------------------------------------------
// Fusion

/// Which weight w enters the commutator
///   [L(-n), Y(u,x)] = (x^{1-n} d/dx + sign (n-1) w x^{-n}) Y(u,x).
enum class WeightRole {
    InsertedField,  // w = h_{2n+3,1}, the weight of the field being inserted
    ThirdModule,    // w = h, the unknown weight
};

struct FusionConvention {
    int sign = -1;
    WeightRole role = WeightRole::InsertedField;

    friend bool operator==(const FusionConvention&, const FusionConvention&) = default;
};

inline std::string to_string(const FusionConvention& c)
{
    return std::string(c.sign < 0 ? "minus" : "plus") + "/" +
           (c.role == WeightRole::InsertedField ? "inserted-field" : "third-module");
}

inline std::vector<FusionConvention> all_fusion_conventions()
{
    return {{-1, WeightRole::InsertedField}, {1, WeightRole::InsertedField}, {-1, WeightRole::ThirdModule}, {1, WeightRole::ThirdModule}};
}

/// Degree-5 polynomial in h. The matrix coefficient <w', Y(u,x) v> is taken as
/// x^s with s = h - h_{2n+3,1} - h_{5,1}; each L(-m) acting on v pulls out
/// -(x^{1-m} d/dx + sign (m-1) w x^{-m}), and the singular vector forces the
/// sum of the resulting scalars to vanish.
inline TPoly fusion_indicial_polynomial(long p, long n, const FusionConvention& conv)
{
    require_odd_ge3(p, "fusion");
    if (n < 1) throw std::invalid_argument("fusion: n must be positive");
    const VermaElement vs = singular_vector_degree5(Rational(p));
    const Rational h_ins = h_rs(p, 2 * n + 3, 1);
    const Rational h_v = h_rs(p, 5, 1);
    const TPoly s({-(h_ins + h_v), Rational(1)});
    const TPoly w = conv.role == WeightRole::InsertedField ? TPoly(h_ins) : TPoly::t();
    TPoly total;
    for (const auto& [part, coeff] : vs.terms) {
        TPoly term(coeff);
        TPoly exponent = s;
        for (auto it = part.rbegin(); it != part.rend(); ++it) {
            const long m = *it;
            term *= -(exponent + w * Rational(conv.sign * (m - 1)));
            exponent -= TPoly(m);
        }
        total += term;
    }
    return total;
}

struct FusionRoots {
    std::vector<Rational> roots;  // with multiplicity, ascending
    bool splits = true;           // false if some root is not rational
};

inline FusionRoots fusion_h_roots(long p, long n, const FusionConvention& conv)
{
    const TPoly poly = fusion_indicial_polynomial(p, n, conv);
    FusionRoots out;
    if (poly.is_zero()) {
        out.splits = false;
        return out;
    }
    const auto rr = rational_roots(poly);
    for (const auto& [r, m] : rr.roots)
        for (int i = 0; i < m; ++i) out.roots.push_back(r);
    out.splits = rr.cofactor.degree() == 0;
    return out;
}

/// {h_{2n-1,1}, ..., h_{2n+7,1}}, ascending.
inline std::vector<Rational> expected_fusion_weights(long p, long n)
{
    std::vector<Rational> e;
    for (long r = 2 * n - 1; r <= 2 * n + 7; r += 2) e.push_back(h_rs(p, r, 1));
    std::sort(e.begin(), e.end());
    return e;
}

struct FusionGridResult {
    std::vector<FusionConvention> survivors;
    /// per convention: number of grid points where the roots match
    std::vector<std::pair<FusionConvention, int>> matches;
};

inline FusionGridResult fusion_convention_grid(const std::vector<long>& ps, const std::vector<long>& ns)
{
    FusionGridResult g;
    for (const auto& conv : all_fusion_conventions()) {
        int ok = 0;
        for (long p : ps)
            for (long n : ns) {
                auto fr = fusion_h_roots(p, n, conv);
                if (fr.splits && fr.roots == expected_fusion_weights(p, n)) ++ok;
            }
        g.matches.emplace_back(conv, ok);
        if (ok == static_cast<int>(ps.size() * ns.size())) g.survivors.push_back(conv);
    }
    return g;
}

inline Verdict verify_fusion(long p, long n)
{
    const auto grid = fusion_convention_grid({3, 5}, {1, 2, 3});
    Verdict v;
    std::ostringstream rhs;
    for (const auto& r : expected_fusion_weights(p, n)) rhs << to_string(r) << ' ';
    v.rhs = rhs.str();
    if (grid.survivors.size() != 1) {
        v.status = Status::Refuted;
        v.witness = std::to_string(grid.survivors.size()) + " conventions survive the (p,n) grid, expected exactly 1";
        return v;
    }
    const auto conv = grid.survivors.front();
    const auto fr = fusion_h_roots(p, n, conv);
    std::ostringstream lhs;
    for (const auto& r : fr.roots) lhs << to_string(r) << ' ';
    v.lhs = lhs.str();
    v.sign_note = "convention " + to_string(conv);
    if (!fr.splits) return refuted(v.lhs, v.rhs, "indicial polynomial does not split over the rationals");
    if (fr.roots != expected_fusion_weights(p, n)) return refuted(v.lhs, v.rhs, "root set differs");
    v.status = Status::Verified;
    return v;
}

inline Verdict verify_singular(long p)
{
    const auto v5 = singular_vector_degree5(Rational(p));
    Verdict v;
    v.lhs = "L(1)v, L(2)v at (c,h) = (" + to_string(v5.c) + ", " + to_string(v5.h) + ")";
    v.rhs = "0";
    if (is_singular(v5)) {
        v.status = Status::Verified;
    } else {
        v.status = Status::Refuted;
        v.witness = "not annihilated by L(1) and L(2)";
    }
    return v;
}

}  // namespace logct
