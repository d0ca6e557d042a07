#pragma once

// Sparse multivariate Laurent polynomials over Rational or TPoly.
//
// Terms are kept sorted by exponent vector, so two equal polynomials have
// identical term sequences and serialize identically. Products are built in
// hash maps and sorted once at the end.

#include "logct/exact.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

namespace logct {

inline constexpr std::size_t kMaxVars = 12;
inline constexpr long kInf = 1L << 40;

class ExpVec {
public:
    ExpVec() = default;
    explicit ExpVec(std::size_t nvars) : n_(check_n(nvars)) {}
    ExpVec(std::initializer_list<long> e) : n_(check_n(e.size()))
    {
        std::size_t i = 0;
        for (long x : e) set(i++, x);
    }
    explicit ExpVec(const std::vector<long>& e) : n_(check_n(e.size()))
    {
        for (std::size_t i = 0; i < e.size(); ++i) set(i, e[i]);
    }
    static ExpVec uniform(std::size_t nvars, long value)
    {
        ExpVec v(nvars);
        for (std::size_t i = 0; i < nvars; ++i) v.set(i, value);
        return v;
    }

    [[nodiscard]] std::size_t size() const { return n_; }
    [[nodiscard]] long operator[](std::size_t i) const { return e_[i]; }
    void set(std::size_t i, long v)
    {
        if (v < INT16_MIN || v > INT16_MAX) throw std::overflow_error("exponent out of range: " + std::to_string(v));
        e_[i] = static_cast<std::int16_t>(v);
    }
    [[nodiscard]] long total() const
    {
        long s = 0;
        for (std::size_t i = 0; i < n_; ++i) s += e_[i];
        return s;
    }
    [[nodiscard]] std::vector<long> to_vector() const { return {e_.begin(), e_.begin() + static_cast<long>(n_)}; }

    friend ExpVec operator+(const ExpVec& a, const ExpVec& b)
    {
        ExpVec r(a.n_);
        for (std::size_t i = 0; i < a.n_; ++i) r.set(i, long(a.e_[i]) + b.e_[i]);
        return r;
    }
    friend ExpVec operator-(const ExpVec& a, const ExpVec& b)
    {
        ExpVec r(a.n_);
        for (std::size_t i = 0; i < a.n_; ++i) r.set(i, long(a.e_[i]) - b.e_[i]);
        return r;
    }
    friend bool operator==(const ExpVec&, const ExpVec&) = default;
    friend auto operator<=>(const ExpVec&, const ExpVec&) = default;

    [[nodiscard]] std::size_t hash() const
    {
        std::uint64_t h = 1469598103934665603ULL ^ n_;
        for (std::size_t i = 0; i < n_; ++i) {
            h ^= static_cast<std::uint16_t>(e_[i]);
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h ^ (h >> 29));
    }

private:
    static std::uint8_t check_n(std::size_t n)
    {
        if (n == 0 || n > kMaxVars) throw std::invalid_argument("variable count must be in 1.." + std::to_string(kMaxVars));
        return static_cast<std::uint8_t>(n);
    }

    std::uint8_t n_ = 0;
    std::array<std::int16_t, kMaxVars> e_{};
};

struct ExpVecHash {
    std::size_t operator()(const ExpVec& v) const { return v.hash(); }
};

struct Interval {
    long lo = -kInf;
    long hi = kInf;

    [[nodiscard]] bool empty() const { return lo > hi; }
    [[nodiscard]] bool finite() const { return lo > -kInf && hi < kInf; }
    [[nodiscard]] bool contains(long x) const { return lo <= x && x <= hi; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

inline long sat_add(long a, long b)
{
    if (a <= -kInf || b <= -kInf) return -kInf;
    if (a >= kInf || b >= kInf) return kInf;
    return std::clamp(a + b, -kInf, kInf);
}

/// Per-variable closed intervals of admissible exponents.
class Window {
public:
    Window() = default;
    explicit Window(std::size_t nvars, Interval all = {}) : iv_(nvars, all) {}
    explicit Window(std::vector<Interval> iv) : iv_(std::move(iv)) {}

    static Window point(const ExpVec& e)
    {
        Window w(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) w.iv_[i] = {e[i], e[i]};
        return w;
    }

    [[nodiscard]] std::size_t size() const { return iv_.size(); }
    Interval& operator[](std::size_t i) { return iv_[i]; }
    const Interval& operator[](std::size_t i) const { return iv_[i]; }

    [[nodiscard]] bool empty() const
    {
        return std::any_of(iv_.begin(), iv_.end(), [](const Interval& i) { return i.empty(); });
    }
    [[nodiscard]] bool contains(const ExpVec& e) const
    {
        for (std::size_t i = 0; i < iv_.size(); ++i)
            if (!iv_[i].contains(e[i])) return false;
        return true;
    }
    [[nodiscard]] Window intersect(const Window& o) const
    {
        Window r(*this);
        for (std::size_t i = 0; i < iv_.size(); ++i) {
            r.iv_[i].lo = std::max(iv_[i].lo, o.iv_[i].lo);
            r.iv_[i].hi = std::min(iv_[i].hi, o.iv_[i].hi);
        }
        return r;
    }
    /// Minkowski sum (envelope of a product).
    friend Window operator+(const Window& a, const Window& b)
    {
        Window r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r.iv_[i] = {sat_add(a.iv_[i].lo, b.iv_[i].lo), sat_add(a.iv_[i].hi, b.iv_[i].hi)};
        return r;
    }
    friend bool operator==(const Window&, const Window&) = default;

private:
    std::vector<Interval> iv_;
};

/// Exponents x such that x + (something in box) lies in `reachable`.
inline Window reachable_from_box(const Window& reachable, const Window& box)
{
    Window r(reachable.size());
    for (std::size_t i = 0; i < reachable.size(); ++i) {
        long lo = (reachable[i].lo <= -kInf || box[i].hi >= kInf) ? -kInf : reachable[i].lo - box[i].hi;
        long hi = (reachable[i].hi >= kInf || box[i].lo <= -kInf) ? kInf : reachable[i].hi - box[i].lo;
        r[i] = {lo, hi};
    }
    return r;
}

class ResourceLimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ResourceLimits {
    std::size_t max_terms = 200'000'000;
    std::optional<std::chrono::steady_clock::time_point> deadline;

    void check_time() const
    {
        if (deadline && std::chrono::steady_clock::now() > *deadline) throw ResourceLimitExceeded("wall-time limit exceeded");
    }
    void check_terms(std::size_t n) const
    {
        if (n > max_terms)
            throw ResourceLimitExceeded("intermediate term count " + std::to_string(n) + " exceeds limit " + std::to_string(max_terms));
    }
};

struct MulOptions {
    unsigned threads = 1;
    ResourceLimits limits{};
};

template <typename C>
inline bool coeff_is_zero(const C& c)
{
    if constexpr (std::is_same_v<C, TPoly>) {
        return c.is_zero();
    } else {
        return c == 0;
    }
}

template <typename C>
class SparseLaurent {
public:
    using Term = std::pair<ExpVec, C>;

    SparseLaurent() = default;
    explicit SparseLaurent(std::size_t nvars) : nvars_(nvars) {}

    /// Builds from unsorted, possibly repeated terms; zeros are dropped.
    SparseLaurent(std::size_t nvars, std::vector<Term> terms) : nvars_(nvars)
    {
        std::unordered_map<ExpVec, C, ExpVecHash> acc;
        for (auto& [e, c] : terms) {
            if (e.size() != nvars) throw std::invalid_argument("exponent vector length mismatch");
            acc[e] += c;
        }
        assign_from(acc);
    }

    static SparseLaurent monomial(const ExpVec& e, C c = C(1))
    {
        SparseLaurent r(e.size());
        if (!coeff_is_zero(c)) r.terms_.push_back({e, std::move(c)});
        return r;
    }

    [[nodiscard]] std::size_t nvars() const { return nvars_; }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }

    [[nodiscard]] C coeff(const ExpVec& e) const
    {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), e, [](const Term& t, const ExpVec& k) { return t.first < k; });
        return (it != terms_.end() && it->first == e) ? it->second : C(0);
    }

    /// Min/max exponent per variable over the support; empty window for zero.
    [[nodiscard]] Window envelope() const
    {
        Window w(nvars_, Interval{kInf, -kInf});
        for (const auto& [e, c] : terms_)
            for (std::size_t i = 0; i < nvars_; ++i) {
                w[i].lo = std::min(w[i].lo, e[i]);
                w[i].hi = std::max(w[i].hi, e[i]);
            }
        return w;
    }

    [[nodiscard]] SparseLaurent restrict_to(const Window& w) const
    {
        SparseLaurent r(nvars_);
        for (const auto& t : terms_)
            if (w.contains(t.first)) r.terms_.push_back(t);
        return r;
    }

    void assign_from(std::unordered_map<ExpVec, C, ExpVecHash>& acc)
    {
        terms_.clear();
        terms_.reserve(acc.size());
        for (auto& [e, c] : acc)
            if (!coeff_is_zero(c)) terms_.emplace_back(e, std::move(c));
        std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    }

    friend bool operator==(const SparseLaurent& a, const SparseLaurent& b)
    {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

private:
    std::size_t nvars_ = 0;
    std::vector<Term> terms_;
};

template <typename To, typename From>
SparseLaurent<To> convert(const SparseLaurent<From>& a)
{
    std::vector<std::pair<ExpVec, To>> t;
    t.reserve(a.size());
    for (const auto& [e, c] : a.terms()) t.emplace_back(e, To(c));
    return SparseLaurent<To>(a.nvars(), std::move(t));
}

/// Exact product restricted to exponents in `reachable`. Work on `a` is split
/// into contiguous chunks, one per thread; chunk results are merged in chunk
/// order, and the final term list is sorted, so the result does not depend on
/// the thread count.
template <typename C>
SparseLaurent<C> mul_pruned(const SparseLaurent<C>& a, const SparseLaurent<C>& b, const Window& reachable,
                            const MulOptions& opts = {})
{
    if (a.nvars() != b.nvars()) throw std::invalid_argument("mul_pruned: variable count mismatch");
    const std::size_t n = a.nvars();
    if (reachable.size() != n) throw std::invalid_argument("mul_pruned: window size mismatch");
    SparseLaurent<C> out(n);
    if (a.is_zero() || b.is_zero() || reachable.empty()) return out;

    // Terms of a that can pair with anything in b at all.
    const Window benv = b.envelope();
    const Window a_ok = reachable_from_box(reachable, benv);
    std::vector<const typename SparseLaurent<C>::Term*> as;
    for (const auto& t : a.terms())
        if (a_ok.contains(t.first)) as.push_back(&t);
    if (as.empty()) return out;

    using Map = std::unordered_map<ExpVec, C, ExpVecHash>;
    const unsigned threads = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(as.size() / 64 + 1)));
    std::vector<Map> partial(threads);
    std::vector<std::exception_ptr> errors(threads);
    std::atomic<std::size_t> total_terms{0};

    auto work = [&](unsigned w) {
        try {
            const std::size_t begin = as.size() * w / threads, end = as.size() * (w + 1) / threads;
            Map& acc = partial[w];
            std::size_t reported = 0;
            for (std::size_t idx = begin; idx < end; ++idx) {
                const auto& [ea, ca] = *as[idx];
                for (const auto& [eb, cb] : b.terms()) {
                    bool ok = true;
                    ExpVec e(n);
                    for (std::size_t i = 0; i < n; ++i) {
                        long x = ea[i] + eb[i];
                        if (!reachable[i].contains(x)) {
                            ok = false;
                            break;
                        }
                        e.set(i, x);
                    }
                    if (!ok) continue;
                    auto [it, inserted] = acc.try_emplace(e);
                    if (inserted) {
                        it->second = ca * cb;
                    } else {
                        it->second += ca * cb;
                    }
                }
                if ((idx & 255) == 0) {
                    opts.limits.check_time();
                    total_terms += acc.size() - reported;
                    reported = acc.size();
                    opts.limits.check_terms(total_terms.load());
                }
            }
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };

    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    Map& acc = partial[0];
    for (unsigned w = 1; w < threads; ++w)
        for (auto& [e, c] : partial[w]) {
            auto [it, inserted] = acc.try_emplace(e);
            if (inserted) {
                it->second = std::move(c);
            } else {
                it->second += c;
            }
        }
    opts.limits.check_terms(acc.size());
    out.assign_from(acc);
    return out;
}

template <typename C>
SparseLaurent<C> mul(const SparseLaurent<C>& a, const SparseLaurent<C>& b, const MulOptions& opts = {})
{
    return mul_pruned(a, b, Window(a.nvars()), opts);
}

template <typename C>
C extract_coeff(const SparseLaurent<C>& a, const ExpVec& target)
{
    return a.coeff(target);
}

// ---------------------------------------------------------------------------
// Factors

enum class FactorKind {
    DifferencePower,       // (x_i - x_j)^e
    RatioDifferencePower,  // (1 - x_j/x_i)^e
    LogRatio,              // ln(1 - x_j/x_i), truncated at order M
    OnePlusPower,          // (1 + x_i)^t, t symbolic or a fixed rational
    GlobalMonomial,        // x_1^{e_1} ... x_n^{e_n}
    VandermondePower,      // prod_{i<j} (x_i - x_j)^e
};

/// Variable indices are 0-based. `order` == 0 means "derive the truncation
/// from the window".
struct FactorSpec {
    FactorKind kind{};
    std::size_t i = 0;
    std::size_t j = 0;
    long exponent = 0;
    long order = 0;
    std::optional<Rational> t_value;
    std::vector<long> monomial;

    static FactorSpec difference_power(std::size_t i, std::size_t j, long e)
    {
        return {FactorKind::DifferencePower, i, j, e, 0, std::nullopt, {}};
    }
    static FactorSpec ratio_difference_power(std::size_t i, std::size_t j, long e)
    {
        return {FactorKind::RatioDifferencePower, i, j, e, 0, std::nullopt, {}};
    }
    static FactorSpec log_ratio(std::size_t i, std::size_t j, long order = 0)
    {
        return {FactorKind::LogRatio, i, j, 0, order, std::nullopt, {}};
    }
    static FactorSpec one_plus_power(std::size_t i, std::optional<Rational> t = std::nullopt, long order = 0)
    {
        return {FactorKind::OnePlusPower, i, 0, 0, order, std::move(t), {}};
    }
    static FactorSpec global_monomial(std::vector<long> e)
    {
        return {FactorKind::GlobalMonomial, 0, 0, 0, 0, std::nullopt, std::move(e)};
    }
    static FactorSpec vandermonde_power(long e) { return {FactorKind::VandermondePower, 0, 0, e, 0, std::nullopt, {}}; }

    [[nodiscard]] bool symbolic() const { return kind == FactorKind::OnePlusPower && !t_value; }

    /// Nonnegative integer t makes (1+x)^t a finite polynomial.
    [[nodiscard]] std::optional<long> integer_t() const
    {
        if (!t_value || t_value->get_den() != 1 || *t_value < 0 || !t_value->get_num().fits_slong_p()) return std::nullopt;
        return t_value->get_num().get_si();
    }

    void validate(std::size_t nvars) const
    {
        auto idx = [&](std::size_t k) {
            if (k >= nvars) throw std::invalid_argument("factor variable index out of range");
        };
        switch (kind) {
            case FactorKind::DifferencePower:
            case FactorKind::RatioDifferencePower:
            case FactorKind::LogRatio:
                idx(i);
                idx(j);
                if (i == j) throw std::invalid_argument("factor needs two distinct variables");
                if (kind != FactorKind::LogRatio && exponent < 0) throw std::invalid_argument("negative factor exponent");
                if (order < 0) throw std::invalid_argument("negative truncation order");
                break;
            case FactorKind::OnePlusPower:
                idx(i);
                if (order < 0) throw std::invalid_argument("negative truncation order");
                break;
            case FactorKind::GlobalMonomial:
                if (monomial.size() != nvars) throw std::invalid_argument("global monomial length mismatch");
                break;
            case FactorKind::VandermondePower:
                if (exponent < 0) throw std::invalid_argument("negative Vandermonde exponent");
                break;
        }
    }
};

/// Support box of the untruncated factor, kInf where the series is infinite.
inline Window natural_box(const FactorSpec& f, std::size_t nvars)
{
    Window w(nvars, Interval{0, 0});
    switch (f.kind) {
        case FactorKind::DifferencePower:
            w[f.i] = {0, f.exponent};
            w[f.j] = {0, f.exponent};
            break;
        case FactorKind::RatioDifferencePower:
            w[f.i] = {-f.exponent, 0};
            w[f.j] = {0, f.exponent};
            break;
        case FactorKind::LogRatio: {
            long m = f.order > 0 ? f.order : kInf;
            w[f.i] = {m >= kInf ? -kInf : -m, -1};
            w[f.j] = {1, m};
            break;
        }
        case FactorKind::OnePlusPower: {
            long hi = kInf;
            if (auto it = f.integer_t()) hi = *it;
            if (f.order > 0) hi = std::min(hi, f.order);
            w[f.i] = {0, hi};
            break;
        }
        case FactorKind::GlobalMonomial:
            for (std::size_t k = 0; k < nvars; ++k) w[k] = {f.monomial[k], f.monomial[k]};
            break;
        case FactorKind::VandermondePower:
            for (std::size_t k = 0; k < nvars; ++k) w[k] = {0, f.exponent * static_cast<long>(nvars - 1)};
            break;
    }
    return w;
}

namespace detail {

inline void require_finite(const Interval& iv, const char* what)
{
    if (!iv.finite()) throw std::invalid_argument(std::string("cannot truncate ") + what + ": window is unbounded");
}

/// Binomial row (1+x)^t coefficients C(t, m) for m in [lo, hi].
template <typename C>
C one_plus_coeff(const FactorSpec& f, long m)
{
    if constexpr (std::is_same_v<C, TPoly>) {
        if (!f.t_value) return binom_tpoly(0, m);
        return TPoly(binom_rat(*f.t_value, m));
    } else {
        if (!f.t_value) throw std::invalid_argument("symbolic (1+x)^t needs TPoly coefficients");
        return binom_rat(*f.t_value, m);
    }
}

}  // namespace detail

/// Exact truncated expansion of one factor; terms outside `window` are dropped.
/// Vandermonde powers are built as a pruned product of their pair factors.
template <typename C>
SparseLaurent<C> expand_factor(const FactorSpec& f, const Window& window, const MulOptions& opts = {})
{
    const std::size_t n = window.size();
    f.validate(n);
    const Window box = natural_box(f, n).intersect(window);
    std::vector<std::pair<ExpVec, C>> terms;
    if (box.empty()) return SparseLaurent<C>(n);

    switch (f.kind) {
        case FactorKind::DifferencePower:
            // (x_i - x_j)^e = sum_k C(e,k) (-1)^k x_i^{e-k} x_j^k
            for (long k = 0; k <= f.exponent; ++k) {
                ExpVec e(n);
                e.set(f.i, f.exponent - k);
                e.set(f.j, k);
                if (!box.contains(e)) continue;
                Integer c = binom_int(f.exponent, k);
                if (k % 2) c = -c;
                terms.emplace_back(e, C(Rational(c)));
            }
            break;
        case FactorKind::RatioDifferencePower:
            for (long k = 0; k <= f.exponent; ++k) {
                ExpVec e(n);
                e.set(f.i, -k);
                e.set(f.j, k);
                if (!box.contains(e)) continue;
                Integer c = binom_int(f.exponent, k);
                if (k % 2) c = -c;
                terms.emplace_back(e, C(Rational(c)));
            }
            break;
        case FactorKind::LogRatio: {
            // ln(1 - x_j/x_i) = -sum_{m>=1} (1/m) x_i^{-m} x_j^m
            long hi = std::min(box[f.j].hi, -box[f.i].lo);
            long lo = std::max(box[f.j].lo, -box[f.i].hi);
            if (hi >= kInf) detail::require_finite(box[f.j], "log factor");
            for (long m = lo; m <= hi; ++m) {
                ExpVec e(n);
                e.set(f.i, -m);
                e.set(f.j, m);
                terms.emplace_back(e, C(rat(-1, m)));
            }
            break;
        }
        case FactorKind::OnePlusPower: {
            detail::require_finite(box[f.i], "(1+x)^t");
            for (long m = box[f.i].lo; m <= box[f.i].hi; ++m) {
                ExpVec e(n);
                e.set(f.i, m);
                C c = detail::one_plus_coeff<C>(f, m);
                if (!coeff_is_zero(c)) terms.emplace_back(e, std::move(c));
            }
            break;
        }
        case FactorKind::GlobalMonomial:
            terms.emplace_back(ExpVec(f.monomial), C(1));
            break;
        case FactorKind::VandermondePower: {
            std::vector<FactorSpec> pairs;
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = a + 1; b < n; ++b) pairs.push_back(FactorSpec::difference_power(a, b, f.exponent));
            // Envelope of the pairs still to be multiplied, per step.
            std::vector<Window> rest(pairs.size() + 1, Window(n, Interval{0, 0}));
            for (std::size_t k = pairs.size(); k-- > 0;) rest[k] = rest[k + 1] + natural_box(pairs[k], n);
            SparseLaurent<C> acc = SparseLaurent<C>::monomial(ExpVec(n));
            for (std::size_t k = 0; k < pairs.size(); ++k) {
                // Partial products must leave room for the remaining pairs inside the window.
                Window reach = reachable_from_box(box, rest[k + 1]).intersect(Window(n, Interval{0, kInf}));
                auto fk = expand_factor<C>(pairs[k], Window(n));
                acc = mul_pruned(acc, fk, reach, opts);
            }
            return acc.restrict_to(box);
        }
    }
    return SparseLaurent<C>(n, std::move(terms));
}

}  // namespace logct
