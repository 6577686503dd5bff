#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "mpg/errors.hpp"

namespace mpg {

// Exact arithmetic everywhere: probabilities and values are GMP rationals,
// kept canonical (lowest terms, positive denominator). No floating point on
// any solver path.
using Rational = mpq_class;
using Integer = mpz_class;

using ValueVector = std::vector<Rational>;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "num/den" or a plain integer. Throws Error on junk or zero denominator.
inline Rational rat_parse(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw Error("not a rational: '" + text + "'");
    if (q.get_den() == 0)
        throw Error("zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

inline std::string rat_str(const Rational& q) {
    return q.get_str();
}

// Fixed-point decimal rendering with `digits` places, round half up.
// Used for display only; exact values always travel as num/den.
inline std::string rat_decimal(const Rational& q, int digits = 10) {
    Integer num = q.get_num();
    Integer den = q.get_den();
    bool negative = num < 0;
    if (negative) num = -num;

    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    // round(num/den * 10^digits) via (2*num*scale + den) / (2*den)
    Integer scaled = (2 * num * scale + den) / (2 * den);

    Integer ipart = scaled / scale;
    Integer fpart = scaled % scale;
    std::string frac = fpart.get_str();
    frac.insert(frac.begin(), static_cast<std::size_t>(digits) - frac.size(), '0');

    std::string out;
    if (negative && scaled != 0) out += '-';
    out += ipart.get_str();
    out += '.';
    out += frac;
    return out;
}

// FNV-1a over the canonical textual form; used for value digests in traces
// and bench records.
inline std::uint64_t hash_values(const ValueVector& values) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
        h ^= static_cast<unsigned char>('\n');
        h *= 1099511628211ull;
    };
    for (const Rational& v : values) mix(v.get_str());
    return h;
}

inline std::string values_digest(const ValueVector& values) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash_values(values)));
    return std::string(buf);
}

inline Rational rat_pow(const Rational& base, unsigned long exp) {
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exp);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exp);
    out.canonicalize();
    return out;
}

} // namespace mpg
