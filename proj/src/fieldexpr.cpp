#include "hirota/fieldexpr.hpp"

#include <sstream>
#include <stdexcept>

namespace hirota {

DyPoly DyPoly::operator+(const DyPoly& o) const {
    DyPoly r;
    r.c.assign(std::max(c.size(), o.c.size()), cplx(0));
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
    for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
    return r;
}

DyPoly DyPoly::operator*(const DyPoly& o) const {
    DyPoly r;
    r.c.assign(c.size() + o.c.size() - 1, cplx(0));
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
    return r;
}

DyPoly DyPoly::operator-() const {
    DyPoly r = *this;
    for (auto& v : r.c) v = -v;
    return r;
}

bool DyPoly::is_scalar() const {
    for (std::size_t i = 1; i < c.size(); ++i)
        if (c[i] != cplx(0)) return false;
    return true;
}

FieldExpr::FieldExpr(cplx v) : node_(std::make_shared<const Node>(Node{Kind::Const, v, {}, 0, 0, 0, 1, {}})) {}
FieldExpr::FieldExpr(double v) : FieldExpr(cplx(v)) {}
FieldExpr::FieldExpr(int v) : FieldExpr(cplx(static_cast<double>(v))) {}

FieldExpr FieldExpr::param(const std::string& name) { return make({Kind::Param, 0, name, 0, 0, 0, 1, {}}); }

FieldExpr FieldExpr::field(const std::string& name, int site, int dy, int dt) {
    FieldJet::x_order(name);
    if (site < 0 || site > 1) throw std::invalid_argument("site must be 0 or 1");
    return make({Kind::Field, 0, name, site, dy, dt, 1, {}});
}

FieldExpr FieldExpr::dy(int power) { return make({Kind::Dy, 0, {}, 0, 0, 0, power, {}}); }

FieldExpr operator+(const FieldExpr& a, const FieldExpr& b) {
    return FieldExpr::make({FieldExpr::Kind::Add, 0, {}, 0, 0, 0, 1, {a, b}});
}
FieldExpr operator-(const FieldExpr& a, const FieldExpr& b) { return a + (-b); }
FieldExpr operator*(const FieldExpr& a, const FieldExpr& b) {
    return FieldExpr::make({FieldExpr::Kind::Mul, 0, {}, 0, 0, 0, 1, {a, b}});
}
FieldExpr operator/(const FieldExpr& a, const FieldExpr& b) {
    return a * FieldExpr::make({FieldExpr::Kind::Inv, 0, {}, 0, 0, 0, 1, {b}});
}
FieldExpr FieldExpr::operator-() const { return make({Kind::Neg, 0, {}, 0, 0, 0, 1, {*this}}); }
FieldExpr FieldExpr::pow(int n) const { return make({Kind::Pow, 0, {}, 0, 0, 0, n, {*this}}); }

DyPoly FieldExpr::eval(const FieldEnv& env) const {
    const Node& n = *node_;
    switch (n.kind) {
        case Kind::Const: return n.value;
        case Kind::Param: {
            auto it = env.params.find(n.name);
            if (it == env.params.end()) throw std::invalid_argument("missing parameter " + n.name);
            return it->second;
        }
        case Kind::Field: {
            const FieldJet* j = env.site[n.site];
            if (!j) throw std::invalid_argument("missing field jet for site " + std::to_string(n.site));
            return j->field(n.name, n.dy, n.dt);
        }
        case Kind::Dy: {
            DyPoly p;
            p.c.assign(n.power + 1, cplx(0));
            p.c[n.power] = 1;
            return p;
        }
        case Kind::Add: return n.kids[0].eval(env) + n.kids[1].eval(env);
        case Kind::Mul: return n.kids[0].eval(env) * n.kids[1].eval(env);
        case Kind::Neg: return -n.kids[0].eval(env);
        case Kind::Pow: {
            DyPoly b = n.kids[0].eval(env), r(cplx(1));
            for (int i = 0; i < n.power; ++i) r = r * b;
            return r;
        }
        case Kind::Inv: {
            DyPoly b = n.kids[0].eval(env);
            if (!b.is_scalar()) throw std::invalid_argument("cannot invert an operator-valued entry");
            return cplx(1) / b.scalar();
        }
    }
    return cplx(0);
}

namespace {
std::string num(cplx v) {
    std::ostringstream os;
    if (v.imag() == 0) {
        os << v.real();
    } else {
        os << "(" << v.real() << (v.imag() < 0 ? "" : "+") << v.imag() << "i)";
    }
    return os.str();
}
}  // namespace

std::string FieldExpr::str() const {
    const Node& n = *node_;
    switch (n.kind) {
        case Kind::Const: return num(n.value);
        case Kind::Param: return n.name;
        case Kind::Field: {
            std::string s = n.name + (n.site ? "[n+1]" : "[n]");
            if (n.dy) s += "_" + std::string(static_cast<std::size_t>(n.dy), 'y');
            if (n.dt) s += "_" + std::string(static_cast<std::size_t>(n.dt), 't');
            return s;
        }
        case Kind::Dy: return n.power == 1 ? "Dy" : "Dy^" + std::to_string(n.power);
        case Kind::Add: return "(" + n.kids[0].str() + " + " + n.kids[1].str() + ")";
        case Kind::Mul: return n.kids[0].str() + "*" + n.kids[1].str();
        case Kind::Neg: return "-" + n.kids[0].str();
        case Kind::Pow: return n.kids[0].str() + "^" + std::to_string(n.power);
        case Kind::Inv: return "1/" + n.kids[0].str();
    }
    return "?";
}

}  // namespace hirota
