#include "mahler/number.hpp"

#include "mahler/errors.hpp"

#include <cctype>
#include <limits>

namespace mahler {

const char* error_name(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::malformed_input: return "malformed_input";
    case ErrorKind::unsupported_equation: return "unsupported_equation";
    case ErrorKind::zero_trailing_coefficient: return "zero_trailing_coefficient";
    case ErrorKind::exponent_overflow: return "exponent_overflow";
    case ErrorKind::precondition_violation: return "precondition_violation";
    case ErrorKind::invariant_violation: return "invariant_violation";
    case ErrorKind::inconsistent_prefix: return "inconsistent_prefix";
    case ErrorKind::insufficient_prefix: return "insufficient_prefix";
    case ErrorKind::no_such_edge: return "no_such_edge";
    case ErrorKind::inexact_division: return "inexact_division";
    }
    return "unknown";
}

int exit_code(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::malformed_input:
    case ErrorKind::inconsistent_prefix:
    case ErrorKind::insufficient_prefix:
        return 2;
    case ErrorKind::unsupported_equation:
    case ErrorKind::zero_trailing_coefficient:
    case ErrorKind::no_such_edge:
        return 3;
    case ErrorKind::exponent_overflow:
        return 4;
    default:
        return 5;
    }
}

int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) fail(ErrorKind::exponent_overflow, "exponent overflow in addition");
    return r;
}

int64_t checked_sub(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) fail(ErrorKind::exponent_overflow, "exponent overflow in subtraction");
    return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) fail(ErrorKind::exponent_overflow, "exponent overflow in multiplication");
    return r;
}

int64_t checked_pow(int64_t b, int64_t k) {
    if (k < 0) fail(ErrorKind::precondition_violation, "negative power");
    int64_t r = 1;
    for (int64_t i = 0; i < k; ++i) r = checked_mul(r, b);
    return r;
}

int64_t floor_div(int64_t a, int64_t b) {
    int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

int64_t pos_mod(int64_t a, int64_t m) {
    int64_t r = a % m;
    return r < 0 ? r + m : r;
}

int64_t gcd_i64(int64_t a, int64_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

int64_t lcm_i64(int64_t a, int64_t b) {
    if (a == 0 || b == 0) return 0;
    return checked_mul(a / gcd_i64(a, b), b < 0 ? -b : b);
}

int64_t inverse_mod(int64_t a, int64_t m) {
    if (m == 1) return 0;
    __int128 t = 0, nt = 1;
    __int128 r = m, nr = pos_mod(a, m);
    while (nr != 0) {
        __int128 q = r / nr;
        __int128 tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) fail(ErrorKind::precondition_violation, "not invertible modulo " + std::to_string(m));
    if (t < 0) t += m;
    return static_cast<int64_t>(t);
}

int64_t to_i64(const Integer& z) {
    if (!mpz_fits_slong_p(z.get_mpz_t())) fail(ErrorKind::exponent_overflow, "integer does not fit a machine index");
    static_assert(sizeof(long) == sizeof(int64_t));
    return z.get_si();
}

int64_t floor_i64(const Rational& q) {
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return to_i64(f);
}

Rational make_rational(int64_t num, int64_t den) {
    Rational q{Integer(static_cast<long>(num)), Integer(static_cast<long>(den))};
    q.canonicalize();
    return q;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

bool all_digits(const std::string& s, size_t from, size_t to) {
    if (from >= to) return false;
    for (size_t i = from; i < to; ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& s) {
    size_t start = 0;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) start = 1;
    size_t slash = s.find('/');
    size_t num_end = slash == std::string::npos ? s.size() : slash;
    if (!all_digits(s, start, num_end)) fail(ErrorKind::malformed_input, "bad rational literal '" + s + "'");
    Integer num(s.substr(start, num_end - start));
    if (s[0] == '-') num = -num;
    Integer den = 1;
    if (slash != std::string::npos) {
        if (!all_digits(s, slash + 1, s.size())) fail(ErrorKind::malformed_input, "bad rational literal '" + s + "'");
        den = Integer(s.substr(slash + 1));
        if (den == 0) fail(ErrorKind::malformed_input, "zero denominator in '" + s + "'");
    }
    Rational q(num, den);
    q.canonicalize();
    if (q.get_den() != den) fail(ErrorKind::malformed_input, "rational literal '" + s + "' is not in lowest terms");
    return q;
}

}  // namespace mahler
