#pragma once

// Residues and constant terms of products of Laurent factors.
//
// A CTProblem is a factor list plus a target exponent vector. Evaluation:
//   1. Vandermonde powers are split into pair factors and global monomials
//      are folded into the target.
//   2. Every factor gets an exponent box; boxes are tightened to a fixpoint by
//      requiring each factor's exponent to be reachable from the target given
//      the other factors' boxes. This is what bounds the log and (1+x)^t
//      series.
//   3. The t-free factors are multiplied first (pruned against the envelope of
//      everything still to come), then the (1+x_i)^t factors, each of which
//      collapses its variable onto the target exponent.
//
// The symbolic strategy runs step 3 with TPoly coefficients. The
// interpolation strategy reuses the t-free product, evaluates at
// t = 0..degree_bound and interpolates.

#include "logct/digest.hpp"
#include "logct/exact.hpp"
#include "logct/laurent.hpp"

#include <chrono>
#include <future>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

namespace logct {

struct CTProblem {
    std::size_t nvars = 0;
    std::vector<FactorSpec> factors;
    ExpVec target;
    /// nullopt: symbolic t. Overrides the t of every OnePlusPower factor.
    std::optional<Rational> t_value;
    long degree_bound = 0;

    [[nodiscard]] bool symbolic() const { return !t_value; }

    [[nodiscard]] CTProblem at(const Rational& t) const
    {
        CTProblem p = *this;
        p.t_value = t;
        return p;
    }

    /// Canonical text form; the cache key is derived from it.
    [[nodiscard]] std::string canonical() const
    {
        std::ostringstream os;
        os << "nvars=" << nvars << ";target=";
        for (std::size_t i = 0; i < target.size(); ++i) os << (i ? "," : "") << target[i];
        os << ";t=" << (t_value ? to_string(*t_value) : std::string("sym")) << ";deg=" << degree_bound << ";factors=";
        for (const auto& f : factors) {
            switch (f.kind) {
                case FactorKind::DifferencePower: os << "D(" << f.i << ',' << f.j << ',' << f.exponent << ')'; break;
                case FactorKind::RatioDifferencePower: os << "R(" << f.i << ',' << f.j << ',' << f.exponent << ')'; break;
                case FactorKind::LogRatio: os << "L(" << f.i << ',' << f.j << ',' << f.order << ')'; break;
                case FactorKind::OnePlusPower:
                    os << "P(" << f.i << ',' << (f.t_value ? to_string(*f.t_value) : std::string("t")) << ',' << f.order << ')';
                    break;
                case FactorKind::GlobalMonomial:
                    os << "G(";
                    for (std::size_t k = 0; k < f.monomial.size(); ++k) os << (k ? "," : "") << f.monomial[k];
                    os << ')';
                    break;
                case FactorKind::VandermondePower: os << "V(" << f.exponent << ')'; break;
            }
            os << ';';
        }
        return os.str();
    }
};

struct EngineOptions {
    unsigned threads = 1;
    ResourceLimits limits{};

    [[nodiscard]] MulOptions mul() const { return {threads, limits}; }
};

// ---------------------------------------------------------------------------
// Planning

struct Plan {
    std::size_t nvars = 0;
    ExpVec target;
    std::vector<FactorSpec> tfree;
    std::vector<Window> tfree_boxes;
    std::vector<FactorSpec> tfactors;  // (1+x_i)^t, in multiplication order
    std::vector<Window> tboxes;
    bool identically_zero = false;
};

namespace detail {

inline Interval negate(const Interval& a)
{
    return {a.hi >= kInf ? -kInf : -a.hi, a.lo <= -kInf ? kInf : -a.lo};
}

inline Interval shift_negate(long e, const Interval& a)  // e - a
{
    return {a.hi >= kInf ? -kInf : e - a.hi, a.lo <= -kInf ? kInf : e - a.lo};
}

inline bool tighten(Interval& a, const Interval& b)
{
    Interval r{std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
    if (r == a) return false;
    a = r;
    return true;
}

/// Fixpoint of the per-factor reachability constraints. Returns false if
/// some box becomes empty (the target coefficient is then zero).
inline bool propagate_boxes(const std::vector<FactorSpec>& fs, std::vector<Window>& boxes, const ExpVec& target)
{
    const std::size_t n = target.size();
    for (int iter = 0; iter < 256; ++iter) {
        bool changed = false;
        for (std::size_t v = 0; v < n; ++v) {
            for (std::size_t f = 0; f < fs.size(); ++f) {
                long lo = 0, hi = 0;
                for (std::size_t g = 0; g < fs.size(); ++g) {
                    if (g == f) continue;
                    lo = sat_add(lo, boxes[g][v].lo);
                    hi = sat_add(hi, boxes[g][v].hi);
                }
                Interval allowed{hi >= kInf ? -kInf : target[v] - hi, lo <= -kInf ? kInf : target[v] - lo};
                changed |= tighten(boxes[f][v], allowed);
                if (boxes[f][v].empty()) return false;
            }
        }
        for (std::size_t f = 0; f < fs.size(); ++f) {
            const auto& s = fs[f];
            auto& b = boxes[f];
            switch (s.kind) {
                case FactorKind::RatioDifferencePower:
                case FactorKind::LogRatio:
                    changed |= tighten(b[s.i], negate(b[s.j]));
                    changed |= tighten(b[s.j], negate(b[s.i]));
                    break;
                case FactorKind::DifferencePower:
                    changed |= tighten(b[s.i], shift_negate(s.exponent, b[s.j]));
                    changed |= tighten(b[s.j], shift_negate(s.exponent, b[s.i]));
                    break;
                default: break;
            }
            if (b.empty()) return false;
        }
        if (!changed) return true;
    }
    return true;
}

}  // namespace detail

inline Plan make_plan(const CTProblem& prob)
{
    const std::size_t n = prob.nvars;
    if (prob.target.size() != n) throw std::invalid_argument("target length does not match variable count");
    Plan plan;
    plan.nvars = n;
    plan.target = prob.target;

    std::vector<FactorSpec> pairs, logs, tf;
    std::vector<bool> paired(n, false);
    for (FactorSpec f : prob.factors) {
        f.validate(n);
        switch (f.kind) {
            case FactorKind::GlobalMonomial: plan.target = plan.target - ExpVec(f.monomial); break;
            case FactorKind::VandermondePower:
                for (std::size_t a = 0; a < n; ++a)
                    for (std::size_t b = a + 1; b < n; ++b) pairs.push_back(FactorSpec::difference_power(a, b, f.exponent));
                break;
            case FactorKind::DifferencePower:
            case FactorKind::RatioDifferencePower: pairs.push_back(f); break;
            case FactorKind::LogRatio:
                paired[f.i] = paired[f.j] = true;
                logs.push_back(f);
                break;
            case FactorKind::OnePlusPower:
                if (prob.t_value) f.t_value = prob.t_value;
                tf.push_back(f);
                break;
        }
    }
    // Variables touched by log factors collapse first.
    std::stable_sort(tf.begin(), tf.end(), [&](const FactorSpec& a, const FactorSpec& b) {
        if (paired[a.i] != paired[b.i]) return paired[a.i] > paired[b.i];
        return a.i < b.i;
    });

    std::vector<FactorSpec> all = pairs;
    all.insert(all.end(), logs.begin(), logs.end());
    all.insert(all.end(), tf.begin(), tf.end());
    std::vector<Window> boxes;
    for (const auto& f : all) boxes.push_back(natural_box(f, n));

    if (!detail::propagate_boxes(all, boxes, plan.target)) {
        plan.identically_zero = true;
        return plan;
    }
    for (const auto& b : boxes)
        for (std::size_t v = 0; v < n; ++v)
            if (!b[v].finite()) throw std::invalid_argument("cannot derive a finite truncation for this problem");

    const std::size_t nfree = pairs.size() + logs.size();
    plan.tfree.assign(all.begin(), all.begin() + static_cast<long>(nfree));
    plan.tfree_boxes.assign(boxes.begin(), boxes.begin() + static_cast<long>(nfree));
    plan.tfactors.assign(all.begin() + static_cast<long>(nfree), all.end());
    plan.tboxes.assign(boxes.begin() + static_cast<long>(nfree), boxes.end());
    return plan;
}

namespace detail {

inline Window zero_box(std::size_t n) { return Window(n, Interval{0, 0}); }

/// rest[k] = envelope of factors k.. (boxes concatenated as tfree then t).
inline std::vector<Window> suffix_envelopes(const std::vector<Window>& boxes, std::size_t n)
{
    std::vector<Window> rest(boxes.size() + 1, zero_box(n));
    for (std::size_t k = boxes.size(); k-- > 0;) rest[k] = rest[k + 1] + boxes[k];
    return rest;
}

}  // namespace detail

/// Product of the t-free factors, pruned against the target.
inline SparseLaurent<Rational> tfree_product(const Plan& plan, const EngineOptions& opts = {})
{
    const std::size_t n = plan.nvars;
    if (plan.identically_zero) return SparseLaurent<Rational>(n);
    std::vector<Window> boxes = plan.tfree_boxes;
    boxes.insert(boxes.end(), plan.tboxes.begin(), plan.tboxes.end());
    const auto rest = detail::suffix_envelopes(boxes, n);
    const Window tgt = Window::point(plan.target);

    auto acc = SparseLaurent<Rational>::monomial(ExpVec(n));
    for (std::size_t k = 0; k < plan.tfree.size(); ++k) {
        opts.limits.check_time();
        auto fk = expand_factor<Rational>(plan.tfree[k], plan.tfree_boxes[k], opts.mul());
        acc = mul_pruned(acc, fk, reachable_from_box(tgt, rest[k + 1]), opts.mul());
        if (acc.is_zero()) break;
    }
    return acc;
}

namespace detail {

template <typename C>
C finish(const Plan& plan, SparseLaurent<C> acc, const std::optional<Rational>& t, const EngineOptions& opts)
{
    const std::size_t n = plan.nvars;
    const auto rest = suffix_envelopes(plan.tboxes, n);
    const Window tgt = Window::point(plan.target);
    for (std::size_t k = 0; k < plan.tfactors.size(); ++k) {
        opts.limits.check_time();
        FactorSpec f = plan.tfactors[k];
        if (t) f.t_value = t;
        auto fk = expand_factor<C>(f, plan.tboxes[k], opts.mul());
        acc = mul_pruned(acc, fk, reachable_from_box(tgt, rest[k + 1]), opts.mul());
        if (acc.is_zero()) break;
    }
    return extract_coeff(acc, plan.target);
}

}  // namespace detail

/// Symbolic-t strategy; the problem must be in symbolic mode.
inline TPoly evaluate_symbolic(const CTProblem& prob, const EngineOptions& opts = {})
{
    if (!prob.symbolic()) throw std::invalid_argument("evaluate_symbolic on a problem with fixed t");
    const Plan plan = make_plan(prob);
    if (plan.identically_zero) return {};
    auto prefix = convert<TPoly>(tfree_product(plan, opts));
    TPoly r = detail::finish<TPoly>(plan, std::move(prefix), std::nullopt, opts);
    if (r.degree() > prob.degree_bound)
        throw std::logic_error("symbolic result degree " + std::to_string(r.degree()) + " exceeds bound " +
                               std::to_string(prob.degree_bound));
    return r;
}

/// Exact value at a fixed t (the problem's own t, or `t` when given).
inline Rational evaluate_at(const CTProblem& prob, const std::optional<Rational>& t = std::nullopt,
                            const EngineOptions& opts = {})
{
    CTProblem p = prob;
    if (t) p.t_value = t;
    bool has_t = std::any_of(p.factors.begin(), p.factors.end(),
                             [](const FactorSpec& f) { return f.kind == FactorKind::OnePlusPower && !f.t_value; });
    if (has_t && !p.t_value) throw std::invalid_argument("evaluate_at needs a value for t");
    const Plan plan = make_plan(p);
    if (plan.identically_zero) return 0;
    return detail::finish<Rational>(plan, tfree_product(plan, opts), std::nullopt, opts);
}

/// Evaluation at t = 0..degree_bound plus exact interpolation. The t-free
/// product is computed once; points run on up to `opts.threads` threads and
/// are merged by index.
inline TPoly interpolation_strategy(const CTProblem& prob, const EngineOptions& opts = {})
{
    if (!prob.symbolic()) throw std::invalid_argument("interpolation needs a symbolic-t problem");
    const Plan plan = make_plan(prob);
    const long npts = prob.degree_bound + 1;
    std::vector<std::pair<Rational, Rational>> pts(static_cast<std::size_t>(npts));
    if (plan.identically_zero) {
        for (long i = 0; i < npts; ++i) pts[static_cast<std::size_t>(i)] = {Rational(i), Rational(0)};
        return lagrange_interpolate(pts, prob.degree_bound);
    }
    const auto prefix = tfree_product(plan, opts);

    EngineOptions inner = opts;
    inner.threads = 1;
    // expand_factor clips (1+x)^t to its finite binomial row at integer t.
    auto eval_point = [&](long t) { return detail::finish<Rational>(plan, prefix, Rational(t), inner); };
    const unsigned threads = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(npts)));
    std::vector<std::exception_ptr> errors(threads);
    auto worker = [&](unsigned w) {
        try {
            for (long i = w; i < npts; i += threads) pts[static_cast<std::size_t>(i)] = {Rational(i), eval_point(i)};
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker, w);
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return lagrange_interpolate(pts, prob.degree_bound);
}

// ---------------------------------------------------------------------------
// Results

enum class Strategy { Symbolic, Interpolate, Both, Direct };

inline const char* to_string(Strategy s)
{
    switch (s) {
        case Strategy::Symbolic: return "symbolic";
        case Strategy::Interpolate: return "interpolate";
        case Strategy::Both: return "both";
        case Strategy::Direct: return "direct";
    }
    return "?";
}

using CTValue = std::variant<Rational, TPoly>;

struct CTResult {
    CTValue value;
    Strategy strategy = Strategy::Direct;
    std::chrono::milliseconds elapsed{0};
    std::string problem_hash;
};

class StrategyMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::string problem_hash(const CTProblem& prob, std::string_view engine_version)
{
    return sha256_hex(prob.canonical() + "|engine=" + std::string(engine_version));
}

inline constexpr std::string_view kEngineVersion = "logct-1.0.0";

/// Evaluates a problem. Fixed-t problems are computed directly; symbolic ones
/// with the requested strategy (Both cross-checks and fails on disagreement).
inline CTResult evaluate(const CTProblem& prob, Strategy strategy, const EngineOptions& opts = {})
{
    const auto start = std::chrono::steady_clock::now();
    CTResult r;
    r.problem_hash = problem_hash(prob, kEngineVersion);
    bool has_t = std::any_of(prob.factors.begin(), prob.factors.end(),
                             [](const FactorSpec& f) { return f.kind == FactorKind::OnePlusPower && !f.t_value; });
    if (!prob.symbolic() || !has_t) {
        r.value = evaluate_at(prob, std::nullopt, opts);
        r.strategy = Strategy::Direct;
    } else if (strategy == Strategy::Symbolic || strategy == Strategy::Direct) {
        r.value = evaluate_symbolic(prob, opts);
        r.strategy = Strategy::Symbolic;
    } else if (strategy == Strategy::Interpolate) {
        r.value = interpolation_strategy(prob, opts);
        r.strategy = Strategy::Interpolate;
    } else {
        TPoly a = evaluate_symbolic(prob, opts);
        TPoly b = interpolation_strategy(prob, opts);
        if (!(a == b)) throw StrategyMismatch("symbolic and interpolation strategies disagree");
        r.value = a;
        r.strategy = Strategy::Both;
    }
    r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return r;
}

// ---------------------------------------------------------------------------
// The named quantities

inline void require_odd_positive(long p, const char* who)
{
    if (p < 1 || p % 2 == 0) throw std::invalid_argument(std::string(who) + ": p must be odd and positive");
}

inline std::vector<FactorSpec> one_plus_all(std::size_t n)
{
    std::vector<FactorSpec> fs;
    for (std::size_t v = 0; v < n; ++v) fs.push_back(FactorSpec::one_plus_power(v));
    return fs;
}

/// F(p,t): Res_{x1,x2,x3} of (x1x2x3)^{-3p} ln(1-x2/x1) (x1-x2)^p (x1-x3)^p (x2-x3)^p prod (1+x_i)^t.
inline CTProblem problem_F(long p)
{
    require_odd_positive(p, "F");
    CTProblem prob;
    prob.nvars = 3;
    prob.factors = {FactorSpec::global_monomial({-3 * p, -3 * p, -3 * p}), FactorSpec::log_ratio(0, 1),
                    FactorSpec::difference_power(0, 1, p), FactorSpec::difference_power(0, 2, p),
                    FactorSpec::difference_power(1, 2, p)};
    auto ops = one_plus_all(3);
    prob.factors.insert(prob.factors.end(), ops.begin(), ops.end());
    prob.target = ExpVec::uniform(3, -1);
    prob.degree_bound = 6 * p - 3;
    return prob;
}

/// E_{k,p}(t): residue over 2k+1 variables with Vandermonde^p, k log factors
/// pairing (x1,x2), ..., (x_{2k-1},x_{2k}), and (x1...x_{2k+1})^{-(2k+1)p}.
inline CTProblem problem_E(long k, long p)
{
    if (k < 0) throw std::invalid_argument("E: k must be nonnegative");
    require_odd_positive(p, "E");
    const auto n = static_cast<std::size_t>(2 * k + 1);
    CTProblem prob;
    prob.nvars = n;
    prob.factors.push_back(FactorSpec::global_monomial(std::vector<long>(n, -(2 * k + 1) * p)));
    prob.factors.push_back(FactorSpec::vandermonde_power(p));
    for (long i = 0; i < k; ++i)
        prob.factors.push_back(FactorSpec::log_ratio(static_cast<std::size_t>(2 * i), static_cast<std::size_t>(2 * i + 1)));
    auto ops = one_plus_all(n);
    prob.factors.insert(prob.factors.end(), ops.begin(), ops.end());
    prob.target = ExpVec::uniform(n, -1);
    prob.degree_bound = (2 * k + 1) * ((k + 1) * p - 1);
    return prob;
}

inline CTProblem problem_Gtilde(long p) { return problem_E(2, p); }

/// CT of Vandermonde^{2m} / (x1...xn)^{m(n-1)}.
inline CTProblem problem_dyson(long n, long m)
{
    if (n < 2 || m < 1) throw std::invalid_argument("dyson: need n >= 2, m >= 1");
    if (n > static_cast<long>(kMaxVars)) throw std::invalid_argument("dyson: too many variables");
    CTProblem prob;
    prob.nvars = static_cast<std::size_t>(n);
    prob.factors = {FactorSpec::global_monomial(std::vector<long>(prob.nvars, -m * (n - 1))), FactorSpec::vandermonde_power(2 * m)};
    prob.target = ExpVec::uniform(prob.nvars, 0);
    return prob;
}

/// CT of ln(1-x2/x1)(1-x2/x1)^p(1-x3/x2)^p(1-x1/x3)^p.
inline CTProblem problem_log_dyson_cyclic(long p)
{
    require_odd_positive(p, "log_dyson_cyclic");
    CTProblem prob;
    prob.nvars = 3;
    prob.factors = {FactorSpec::log_ratio(0, 1), FactorSpec::ratio_difference_power(0, 1, p),
                    FactorSpec::ratio_difference_power(1, 2, p), FactorSpec::ratio_difference_power(2, 0, p)};
    prob.target = ExpVec::uniform(3, 0);
    return prob;
}

/// CT over 2k+1 variables of (x1...)^{-(2m+1)k} prod_i ln(1-x_{2i}/x_{2i-1}) Vandermonde^{2m+1}.
inline CTProblem problem_log_dyson_vandermonde(long k, long m)
{
    if (k < 1 || m < 0) throw std::invalid_argument("log_dyson_vandermonde: need k >= 1, m >= 0");
    const auto n = static_cast<std::size_t>(2 * k + 1);
    CTProblem prob;
    prob.nvars = n;
    prob.factors.push_back(FactorSpec::global_monomial(std::vector<long>(n, -(2 * m + 1) * k)));
    prob.factors.push_back(FactorSpec::vandermonde_power(2 * m + 1));
    for (long i = 0; i < k; ++i)
        prob.factors.push_back(FactorSpec::log_ratio(static_cast<std::size_t>(2 * i), static_cast<std::size_t>(2 * i + 1)));
    prob.target = ExpVec::uniform(n, 0);
    return prob;
}

inline TPoly residue_F(long p, const EngineOptions& opts = {}) { return evaluate_symbolic(problem_F(p), opts); }
inline Rational residue_F_at(long p, const Rational& t, const EngineOptions& opts = {})
{
    return evaluate_at(problem_F(p), t, opts);
}
inline TPoly residue_E(long k, long p, const EngineOptions& opts = {}) { return evaluate_symbolic(problem_E(k, p), opts); }
inline Rational residue_E_at(long k, long p, const Rational& t, const EngineOptions& opts = {})
{
    return evaluate_at(problem_E(k, p), t, opts);
}
inline TPoly residue_Gtilde(long p, const EngineOptions& opts = {}) { return residue_E(2, p, opts); }
inline Rational residue_Gtilde_at(long p, const Rational& t, const EngineOptions& opts = {})
{
    return residue_E_at(2, p, t, opts);
}
inline Rational dyson_ct(long n, long m, const EngineOptions& opts = {}) { return evaluate_at(problem_dyson(n, m), std::nullopt, opts); }
inline Rational log_dyson_cyclic(long p, const EngineOptions& opts = {})
{
    return evaluate_at(problem_log_dyson_cyclic(p), std::nullopt, opts);
}
inline Rational log_dyson_vandermonde(long k, long m, const EngineOptions& opts = {})
{
    return evaluate_at(problem_log_dyson_vandermonde(k, m), std::nullopt, opts);
}

// ---------------------------------------------------------------------------
// Closed sums for F (independent of the Laurent engine)

namespace detail {

template <typename V, typename Binom>
V F_sum(long p, Binom binom)
{
    V total{};
    for (long i = 0; i <= p; ++i)
        for (long j = 0; j <= p; ++j)
            for (long k = 0; k <= p; ++k) {
                const long m_max = 2 * p - 1 + i - k;  // C(t, 2p-m-1+i-k) needs a nonnegative lower index
                if (p - 1 + j + k < 0) continue;
                Rational sign_c = Rational(binom_int(p, i) * binom_int(p, j) * binom_int(p, k));
                if ((i + j + k) % 2) sign_c = -sign_c;
                V b3 = binom(p - 1 + j + k);
                for (long m = 1; m <= m_max; ++m) {
                    const long l1 = m + 3 * p - 1 - i - j, l2 = 2 * p - m - 1 + i - k;
                    if (l1 < 0 || l2 < 0) continue;
                    V term = binom(l1) * binom(l2) * b3;
                    total += term * (sign_c / m);
                }
            }
    return total;
}

}  // namespace detail

/// Four-fold binomial sum for F(p,t) with t symbolic.
inline TPoly F_binomial_sum(long p)
{
    require_odd_positive(p, "F_binomial_sum");
    std::vector<TPoly> rows;
    auto binom = [&](long n) -> TPoly {
        while (static_cast<long>(rows.size()) <= n) rows.push_back(binom_tpoly(0, static_cast<long>(rows.size())));
        return rows[static_cast<std::size_t>(n)];
    };
    return detail::F_sum<TPoly>(p, binom);
}

inline Rational F_binomial_sum_at(long p, const Rational& t)
{
    require_odd_positive(p, "F_binomial_sum");
    return detail::F_sum<Rational>(p, [&](long n) { return binom_rat(t, n); });
}

/// sum_{m=1}^p sum_{k=0}^p (-1)^{m+k}/m C(p,k)^2 C(p,m+k), exactly as printed.
inline Rational F_at_2pm1_double_sum(long p)
{
    require_odd_positive(p, "F_at_2pm1_double_sum");
    Rational s = 0;
    for (long m = 1; m <= p; ++m)
        for (long k = 0; k <= p; ++k) {
            Integer c = binom_int(p, k) * binom_int(p, k) * binom_int(p, m + k);
            if ((m + k) % 2) c = -c;
            s += Rational(c) / m;
        }
    return s;
}

}  // namespace logct
