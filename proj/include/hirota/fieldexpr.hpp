#pragma once
// Expression trees over lattice fields, used for nonlinear lattice equations
// and Lax-matrix entries. Entries may be polynomial in the formal operator d/dy.

#include "hirota/jet.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace hirota {

// Polynomial in d/dy with field coefficients on the left: c0 + c1 Dy + c2 Dy^2.
struct DyPoly {
    std::vector<cplx> c{cplx(0)};
    DyPoly() = default;
    DyPoly(cplx v) : c{v} {}  // NOLINT(google-explicit-constructor)
    DyPoly operator+(const DyPoly& o) const;
    DyPoly operator*(const DyPoly& o) const;
    DyPoly operator-() const;
    cplx scalar() const { return c.empty() ? cplx(0) : c[0]; }
    bool is_scalar() const;
};

struct FieldEnv {
    const FieldJet* site[2] = {nullptr, nullptr};  // n and n+h
    std::map<std::string, cplx> params;            // BT slots, "h", "a"
};

class FieldExpr {
public:
    enum class Kind { Const, Param, Field, Dy, Add, Mul, Neg, Pow, Inv };

    FieldExpr() : FieldExpr(cplx(0)) {}
    FieldExpr(cplx v);   // NOLINT(google-explicit-constructor)
    FieldExpr(double v); // NOLINT(google-explicit-constructor)
    FieldExpr(int v);    // NOLINT(google-explicit-constructor)

    static FieldExpr param(const std::string& name);
    // Field `name` (w, v, u, p, q, r, s, eta) at site 0 (n) or 1 (n+h), with y/t derivative orders.
    static FieldExpr field(const std::string& name, int site = 0, int dy = 0, int dt = 0);
    static FieldExpr dy(int power = 1);

    friend FieldExpr operator+(const FieldExpr& a, const FieldExpr& b);
    friend FieldExpr operator-(const FieldExpr& a, const FieldExpr& b);
    friend FieldExpr operator*(const FieldExpr& a, const FieldExpr& b);
    friend FieldExpr operator/(const FieldExpr& a, const FieldExpr& b);
    FieldExpr operator-() const;
    FieldExpr pow(int n) const;

    DyPoly eval(const FieldEnv& env) const;
    cplx eval_scalar(const FieldEnv& env) const { return eval(env).scalar(); }
    std::string str() const;
    Kind kind() const { return node_->kind; }

private:
    struct Node {
        Kind kind;
        cplx value{0};
        std::string name;
        int site = 0, dy = 0, dt = 0, power = 1;
        std::vector<FieldExpr> kids;
    };
    std::shared_ptr<const Node> node_;
    explicit FieldExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static FieldExpr make(Node n) { return FieldExpr(std::make_shared<const Node>(std::move(n))); }
};

struct NamedExpr {
    std::string label;
    FieldExpr expr;
};

}  // namespace hirota
