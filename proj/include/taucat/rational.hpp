#ifndef TAUCAT_RATIONAL_HPP
#define TAUCAT_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace taucat {

// Exact scalar type. mpq_class keeps values in canonical reduced form
// (gcd(num, den) = 1, den > 0) after canonicalize().
using Rat = mpq_class;
using Int = mpz_class;

struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

struct dimension_error : error {
    explicit dimension_error(const std::string& msg) : error(msg) {}
};

struct validation_error : error {
    explicit validation_error(const std::string& msg) : error(msg) {}
};

// Raised when an endomorphism ring modulo its radical is not one-dimensional
// over the rationals, i.e. a ground-field obstruction was detected.
struct split_basic_error : error {
    explicit split_basic_error(const std::string& msg) : error(msg) {}
};

// Raised when an enumeration exceeds its configured safety cap.
struct cap_error : error {
    explicit cap_error(const std::string& msg) : error(msg) {}
};

struct input_error : error {
    explicit input_error(const std::string& msg) : error(msg) {}
};

inline Rat rat_of(long num, long den = 1) {
    if (den == 0) throw error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p", "-p", or "p/q".
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Rat q(s);
            q.canonicalize();
            return q;
        }
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw input_error("zero denominator in rational literal: " + s);
        Rat q(num, den);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw input_error("malformed rational literal: " + s);
    }
}

inline std::string rat_str(const Rat& q) {
    return q.get_str();
}

}  // namespace taucat

#endif
