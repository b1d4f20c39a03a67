#pragma once
// Scalar backends: exact elements of Q(sqrt d) and complex doubles.

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace hirota {

using cplx = std::complex<double>;

class FieldMismatch : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// p + q*sqrt(d). A value with q == 0 is a plain rational and combines with any
// field; d == 0 marks "no radical fixed yet".
class Quad {
public:
    Quad() = default;
    Quad(long v) : p_(v) {}  // NOLINT(google-explicit-constructor)
    Quad(long num, long den) : p_(num, den) { p_.canonicalize(); }
    Quad(mpq_class p, mpq_class q, long d);
    explicit Quad(const mpq_class& p) : p_(p) {}

    static Quad radical(long d);  // sqrt(d)
    static Quad parse(const std::string& s, long d);

    const mpq_class& rat() const { return p_; }
    const mpq_class& irr() const { return q_; }
    long field() const { return q_ == 0 ? 0 : d_; }
    long declared_field() const { return d_; }

    bool is_zero() const { return p_ == 0 && q_ == 0; }
    bool is_rational() const { return q_ == 0; }

    Quad operator-() const { return {-p_, -q_, d_}; }
    Quad& operator+=(const Quad& o);
    Quad& operator-=(const Quad& o);
    Quad& operator*=(const Quad& o);
    Quad& operator/=(const Quad& o);
    friend Quad operator+(Quad a, const Quad& b) { return a += b; }
    friend Quad operator-(Quad a, const Quad& b) { return a -= b; }
    friend Quad operator*(Quad a, const Quad& b) { return a *= b; }
    friend Quad operator/(Quad a, const Quad& b) { return a /= b; }
    friend bool operator==(const Quad& a, const Quad& b) { return a.p_ == b.p_ && a.q_ == b.q_ && (a.q_ == 0 || a.d_ == b.d_); }
    friend bool operator!=(const Quad& a, const Quad& b) { return !(a == b); }

    Quad conj() const { return {p_, -q_, d_}; }
    mpq_class norm() const;  // p^2 - d q^2
    Quad inv() const;
    Quad pow(int n) const;

    // Square root inside the same field, if one exists.
    std::optional<Quad> sqrt() const;

    cplx to_complex() const;
    std::string str() const;

    // Lexicographic on (rational part, radical part).
    static int compare(const Quad& a, const Quad& b);

private:
    mpq_class p_{0};
    mpq_class q_{0};
    long d_{0};
    static long merge(long a, long b);
};

std::optional<mpq_class> rational_sqrt(const mpq_class& x);

// Uniform interface the templated algebra uses.
template <class S>
struct ScalarOps;

template <>
struct ScalarOps<Quad> {
    static constexpr bool exact = true;
    static Quad from_int(long v) { return Quad(v); }
    static Quad from_frac(long n, long d) { return Quad(n, d); }
    static Quad from_double(double v);
    static bool is_zero(const Quad& x) { return x.is_zero(); }
    static int compare(const Quad& a, const Quad& b) { return Quad::compare(a, b); }
    static cplx to_complex(const Quad& x) { return x.to_complex(); }
    static std::optional<Quad> sqrt(const Quad& x) { return x.sqrt(); }
    static Quad inv(const Quad& x) { return x.inv(); }
    static std::string str(const Quad& x) { return x.str(); }
    static double magnitude(const Quad& x) { return std::abs(x.to_complex()); }
};

template <>
struct ScalarOps<cplx> {
    static constexpr bool exact = false;
    static constexpr double key_tol = 1e-11;
    static cplx from_int(long v) { return {static_cast<double>(v), 0.0}; }
    static cplx from_frac(long n, long d) { return {static_cast<double>(n) / static_cast<double>(d), 0.0}; }
    static cplx from_double(double v) { return {v, 0.0}; }
    static bool is_zero(const cplx& x) { return x == cplx(0.0, 0.0); }
    static int compare(const cplx& a, const cplx& b);
    static cplx to_complex(const cplx& x) { return x; }
    static std::optional<cplx> sqrt(const cplx& x) { return std::sqrt(x); }
    static cplx inv(const cplx& x) { return 1.0 / x; }
    static std::string str(const cplx& x);
    static double magnitude(const cplx& x) { return std::abs(x); }
};

template <class S>
S ipow(const S& base, int n) {
    S r = ScalarOps<S>::from_int(1);
    S b = n >= 0 ? base : ScalarOps<S>::inv(base);
    for (int k = 0; k < (n >= 0 ? n : -n); ++k) r = r * b;
    return r;
}

std::string format_double(double v);

}  // namespace hirota
