#include "nullary/rational.hpp"

#include <cctype>

namespace nullary {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NoDifference: return "NoDifference";
        case ErrorCode::PointOutside: return "PointOutside";
        case ErrorCode::EmptyFamily: return "EmptyFamily";
        case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
        case ErrorCode::IterationCap: return "IterationCap";
        case ErrorCode::NotRegular: return "NotRegular";
        case ErrorCode::DenominatorViolation: return "DenominatorViolation";
        case ErrorCode::IntegralityFailure: return "IntegralityFailure";
        case ErrorCode::OutsideDomain: return "OutsideDomain";
        case ErrorCode::ImageEscapesDomain: return "ImageEscapesDomain";
        case ErrorCode::CarrierMismatch: return "CarrierMismatch";
        case ErrorCode::NotStrict: return "NotStrict";
        case ErrorCode::OutsideHierarchy: return "OutsideHierarchy";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::ArityError: return "ArityError";
        case ErrorCode::UnsupportedArity: return "UnsupportedArity";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::ZeroDirection: return "ZeroDirection";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::DimensionTooLow: return "DimensionTooLow";
        case ErrorCode::ConstantOnFace: return "ConstantOnFace";
        case ErrorCode::ConstantOnBoundary: return "ConstantOnBoundary";
        case ErrorCode::BadInterval: return "BadInterval";
        case ErrorCode::NotIntoBoundary: return "NotIntoBoundary";
        case ErrorCode::ConstantOnCorners: return "ConstantOnCorners";
        case ErrorCode::BadInput: return "BadInput";
        case ErrorCode::VerificationFailed: return "VerificationFailed";
    }
    return "Unknown";
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
    auto valid_int = [](std::string_view s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        throw Error(ErrorCode::BadInput, "malformed rational '" + std::string(text) + "'");
    Integer n(std::string(num[0] == '+' ? num.substr(1) : num));
    Integer d{std::string(den)};
    if (d == 0) throw Error(ErrorCode::BadInput, "zero denominator in '" + std::string(text) + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const RationalPoint& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ", ";
        out += p[i].get_str();
    }
    return out + ")";
}

RationalPoint make_point(std::initializer_list<Rational> coords) {
    RationalPoint p(coords);
    for (auto& c : p) c.canonicalize();
    return p;
}

RationalVector operator-(const RationalPoint& a, const RationalPoint& b) {
    RationalVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

RationalPoint operator+(const RationalPoint& a, const RationalVector& b) {
    RationalPoint r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

RationalVector operator*(const Rational& s, const RationalVector& v) {
    RationalVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
    return r;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational dot(const IntegerVector& a, const RationalVector& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_zero(const RationalVector& v) {
    for (const auto& c : v)
        if (c != 0) return false;
    return true;
}

IntegerVector primitive_integer(const RationalVector& v) {
    Integer den = 1;
    for (const auto& c : v) den = lcm(den, c.get_den());
    IntegerVector out(v.size());
    Integer g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rational scaled = v[i] * den;
        out[i] = scaled.get_num();
        g = gcd(g, out[i]);
    }
    if (g > 1)
        for (auto& c : out) c /= g;
    return out;
}

}  // namespace nullary
