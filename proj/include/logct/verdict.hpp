#pragma once

#include "logct/exact.hpp"

#include <optional>
#include <sstream>
#include <string>

namespace logct {

enum class Status { Verified, VerifiedUpToSign, Refuted, Inconclusive };

inline const char* to_string(Status s)
{
    switch (s) {
        case Status::Verified: return "verified";
        case Status::VerifiedUpToSign: return "verified-up-to-sign";
        case Status::Refuted: return "refuted";
        case Status::Inconclusive: return "inconclusive";
    }
    return "?";
}

/// Outcome of comparing a computed value with a closed form. A refuted
/// verdict always names a witness.
struct Verdict {
    Status status = Status::Inconclusive;
    std::string lhs;
    std::string rhs;
    std::optional<Rational> fitted_constant;
    std::string witness;
    std::string sign_note;

    [[nodiscard]] bool ok(bool allow_sign = false) const
    {
        return status == Status::Verified || (allow_sign && status == Status::VerifiedUpToSign);
    }
    /// Comparable part (no witness wording), used for "identical verdict" checks.
    friend bool same_outcome(const Verdict& a, const Verdict& b)
    {
        return a.status == b.status && a.fitted_constant == b.fitted_constant;
    }
};

template <typename T>
std::string show(const T& v)
{
    if constexpr (std::is_same_v<T, Rational>) {
        return to_string(v);
    } else {
        std::ostringstream os;
        os << v;
        return os.str();
    }
}

inline Verdict refuted(std::string lhs, std::string rhs, std::string witness)
{
    Verdict v;
    v.status = Status::Refuted;
    v.lhs = std::move(lhs);
    v.rhs = std::move(rhs);
    v.witness = std::move(witness);
    return v;
}

/// verified when a == b, verified-up-to-sign when a == -b != 0, else refuted.
inline Verdict compare_signed(const Rational& computed, const Rational& printed)
{
    Verdict v;
    v.lhs = to_string(computed);
    v.rhs = to_string(printed);
    if (computed == printed) {
        v.status = Status::Verified;
        v.sign_note = "computed sign matches printed sign";
    } else if (computed == -printed) {
        v.status = Status::VerifiedUpToSign;
        v.sign_note = "computed value is the negative of the printed value";
    } else {
        v.status = Status::Refuted;
        v.witness = "computed " + v.lhs + " vs printed " + v.rhs;
    }
    return v;
}

}  // namespace logct
