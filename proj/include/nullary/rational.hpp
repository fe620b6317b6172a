#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nullary {

using Integer = mpz_class;
using Rational = mpq_class;

/// A point of Q^n. Also used for direction vectors.
using RationalPoint = std::vector<Rational>;
using RationalVector = std::vector<Rational>;
using IntegerVector = std::vector<Integer>;

enum class ErrorCode {
    NoDifference,
    PointOutside,
    EmptyFamily,
    UnsupportedDimension,
    IterationCap,
    NotRegular,
    DenominatorViolation,
    IntegralityFailure,
    OutsideDomain,
    ImageEscapesDomain,
    CarrierMismatch,
    NotStrict,
    OutsideHierarchy,
    SyntaxError,
    ArityError,
    UnsupportedArity,
    DimensionMismatch,
    ZeroDirection,
    PreconditionViolated,
    DimensionTooLow,
    ConstantOnFace,
    ConstantOnBoundary,
    BadInterval,
    NotIntoBoundary,
    ConstantOnCorners,
    BadInput,
    VerificationFailed,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Integer floor(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Integer ceil(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// Lowest-terms text form: "p/q", or "p" when q = 1.
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

std::string to_string(const RationalPoint& p);

RationalPoint make_point(std::initializer_list<Rational> coords);

RationalVector operator-(const RationalPoint& a, const RationalPoint& b);
RationalPoint operator+(const RationalPoint& a, const RationalVector& b);
RationalVector operator*(const Rational& s, const RationalVector& v);
Rational dot(const RationalVector& a, const RationalVector& b);
Rational dot(const IntegerVector& a, const RationalVector& b);
bool is_zero(const RationalVector& v);

/// Content-1 integer multiple of a rational vector with the same sign pattern.
IntegerVector primitive_integer(const RationalVector& v);

}  // namespace nullary
