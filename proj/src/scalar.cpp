#include "hirota/scalar.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace hirota {

Quad::Quad(mpq_class p, mpq_class q, long d) : p_(std::move(p)), q_(std::move(q)), d_(d) {
    p_.canonicalize();
    q_.canonicalize();
    if (q_ != 0 && d_ == 0) throw FieldMismatch("radical part given without a field");
    if (q_ == 0) d_ = d;
}

Quad Quad::radical(long d) {
    if (d == 0 || d == 1) throw std::invalid_argument("radical: d must be a non-square other than 0, 1");
    mpz_class root;
    if (d > 0) {
        mpz_class z(d);
        if (mpz_perfect_square_p(z.get_mpz_t())) throw std::invalid_argument("radical: d is a perfect square");
    }
    return {mpq_class(0), mpq_class(1), d};
}

long Quad::merge(long a, long b) {
    if (a == 0) return b;
    if (b == 0 || a == b) return a;
    throw FieldMismatch("mixing Q(sqrt " + std::to_string(a) + ") and Q(sqrt " + std::to_string(b) + ")");
}

Quad& Quad::operator+=(const Quad& o) {
    long d = (q_ == 0 && o.q_ == 0) ? (d_ ? d_ : o.d_) : merge(field(), o.field());
    p_ += o.p_;
    q_ += o.q_;
    d_ = d;
    return *this;
}

Quad& Quad::operator-=(const Quad& o) {
    long d = (q_ == 0 && o.q_ == 0) ? (d_ ? d_ : o.d_) : merge(field(), o.field());
    p_ -= o.p_;
    q_ -= o.q_;
    d_ = d;
    return *this;
}

Quad& Quad::operator*=(const Quad& o) {
    long d = (q_ == 0 && o.q_ == 0) ? (d_ ? d_ : o.d_) : merge(field(), o.field());
    mpq_class np = p_ * o.p_ + mpq_class(d) * q_ * o.q_;
    mpq_class nq = p_ * o.q_ + q_ * o.p_;
    p_ = np;
    q_ = nq;
    d_ = d;
    return *this;
}

Quad& Quad::operator/=(const Quad& o) { return *this *= o.inv(); }

mpq_class Quad::norm() const { return p_ * p_ - mpq_class(d_) * q_ * q_; }

Quad Quad::inv() const {
    if (is_zero()) throw std::domain_error("division by zero");
    mpq_class n = norm();
    if (n == 0) throw std::domain_error("division by zero divisor");
    return {p_ / n, -q_ / n, d_};
}

Quad Quad::pow(int n) const { return ipow(*this, n); }

namespace {

// Squarefree kernel by trial division; operands here are small.
long squarefree_part(mpz_class n) {
    long sign = n < 0 ? -1 : 1;
    n = abs(n);
    mpz_class out = 1;
    for (unsigned long p = 2; p * p <= n && p < 2000000; ++p) {
        int e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            n /= p;
            ++e;
        }
        if (e % 2) out *= p;
    }
    out *= n;
    if (!out.fits_slong_p()) throw std::overflow_error("radicand too large");
    return sign * out.get_si();
}

}  // namespace

std::optional<mpq_class> rational_sqrt(const mpq_class& x) {
    if (x < 0) return std::nullopt;
    mpz_class num = x.get_num(), den = x.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
    mpz_class a, b;
    mpz_sqrt(a.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(b.get_mpz_t(), den.get_mpz_t());
    mpq_class r(a, b);
    r.canonicalize();
    return r;
}

std::optional<Quad> Quad::sqrt() const {
    if (is_zero()) return *this;
    if (q_ == 0) {
        if (auto r = rational_sqrt(p_)) return Quad(*r, 0, d_);
        if (d_ != 0) {
            // p = d * y^2  ->  sqrt = y sqrt(d)
            if (auto y = rational_sqrt(p_ / mpq_class(d_))) return Quad(0, *y, d_);
            return std::nullopt;
        }
        // No field fixed yet: adjoin sqrt of the squarefree part.
        mpz_class n = p_.get_num() * p_.get_den();
        long sf = squarefree_part(n);
        if (auto y = rational_sqrt(p_ / mpq_class(sf))) return Quad(0, *y, sf);
        return std::nullopt;
    }
    // (x + y r)^2 = x^2 + d y^2 + 2 x y r
    auto sn = rational_sqrt(norm());
    if (!sn) return std::nullopt;
    for (const mpq_class& s : {*sn, mpq_class(-*sn)}) {
        mpq_class x2 = (p_ + s) / 2;
        if (auto x = rational_sqrt(x2); x && *x != 0) {
            Quad cand(*x, q_ / (2 * *x), d_);
            if (cand * cand == *this) return cand;
        }
    }
    return std::nullopt;
}

cplx Quad::to_complex() const {
    double p = p_.get_d();
    if (q_ == 0) return {p, 0.0};
    double q = q_.get_d();
    if (d_ < 0) return {p, q * std::sqrt(static_cast<double>(-d_))};
    return {p + q * std::sqrt(static_cast<double>(d_)), 0.0};
}

std::string Quad::str() const {
    if (q_ == 0) return p_.get_str();
    std::ostringstream os;
    if (p_ != 0) os << p_.get_str() << (q_ > 0 ? "+" : "");
    os << q_.get_str() << "*sqrt(" << d_ << ")";
    return os.str();
}

int Quad::compare(const Quad& a, const Quad& b) {
    int c = cmp(a.p_, b.p_);
    if (c != 0) return c < 0 ? -1 : 1;
    c = cmp(a.q_, b.q_);
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

Quad Quad::parse(const std::string& s, long d) {
    // "p", "p/q", or "a/b+c/e*sqrt(d)" style with an explicit "r" for the radical: "1/2+3/4r"
    auto rpos = s.find('r');
    if (rpos == std::string::npos) {
        mpq_class v(s);
        v.canonicalize();
        return Quad(v, 0, d);
    }
    std::string body = s.substr(0, rpos);
    std::size_t split = std::string::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e') {
            split = i;
            break;
        }
    }
    mpq_class p = 0, q;
    std::string qs = split == std::string::npos ? body : body.substr(split);
    if (split != std::string::npos) p = mpq_class(body.substr(0, split));
    if (!qs.empty() && qs[0] == '+') qs = qs.substr(1);
    if (qs.empty() || qs == "-") qs += "1";
    q = mpq_class(qs);
    p.canonicalize();
    q.canonicalize();
    return {p, q, d};
}

Quad ScalarOps<Quad>::from_double(double v) {
    mpq_class q(v);
    return Quad(q);
}

int ScalarOps<cplx>::compare(const cplx& a, const cplx& b) {
    auto c1 = [](double x, double y) {
        double tol = key_tol * (1.0 + std::abs(x) + std::abs(y));
        if (std::abs(x - y) <= tol) return 0;
        return x < y ? -1 : 1;
    };
    int c = c1(a.real(), b.real());
    if (c != 0) return c;
    return c1(a.imag(), b.imag());
}

std::string format_double(double v) {
    char buf[40];
    auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

std::string ScalarOps<cplx>::str(const cplx& x) {
    if (x.imag() == 0.0) return format_double(x.real());
    return format_double(x.real()) + (x.imag() < 0 ? "" : "+") + format_double(x.imag()) + "i";
}

}  // namespace hirota
