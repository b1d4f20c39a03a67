#include "hirota/fixtures.hpp"

namespace hirota {

ExactFixture exact_semidiscrete_fixture(EquationId id) {
    switch (id) {
        case EquationId::KdV:
        case EquationId::Ito: {
            Quad h(1, 2);
            return {h, {soliton_from_mu(id, Quad(3, 2), h), soliton_from_mu(id, Quad(5, 4), h)}};
        }
        case EquationId::KP: {
            Quad h(1, 2);
            return {h,
                    {soliton_from_mu(id, Quad(3, 2), h, 0, std::optional<Quad>(Quad(1))),
                     soliton_from_mu(id, Quad(5, 4), h, 0, std::optional<Quad>(Quad(1, 2)))}};
        }
        case EquationId::Boussinesq:
        case EquationId::SK: {
            Quad h(1);
            return {h, {soliton_from_mu(id, Quad(2), h, 0), soliton_from_mu(id, Quad(2), h, 1)}};
        }
    }
    throw SolitonError("exact_semidiscrete_fixture: unknown equation");
}

std::vector<SolitonParam<Quad>> exact_continuum_params(EquationId id) {
    auto mk = [&](Quad k, std::optional<Quad> l = std::nullopt) {
        SolitonParam<Quad> p;
        p.k = k;
        if (l) p.l = *l;
        p.omega = dispersion(id, k, l);
        return p;
    };
    switch (id) {
        case EquationId::KP:
            return {mk(Quad(1), Quad(1, 2)), mk(Quad(1, 2), Quad(-1, 3)), mk(Quad(2, 3), Quad(1, 5))};
        case EquationId::Boussinesq:
            // 1 + k^2 is a rational square for each k.
            return {mk(Quad(3, 4)), mk(Quad(4, 3)), mk(Quad(5, 12))};
        default:
            return {mk(Quad(1)), mk(Quad(1, 2)), mk(Quad(3, 2))};
    }
}

FloatFixture float_semidiscrete_fixture(EquationId id, double h) {
    bool kp = id == EquationId::KP;
    return {h,
            {soliton_from_k(id, 0.8, kp ? std::optional<cplx>(0.1) : std::nullopt, h),
             soliton_from_k(id, 0.5, kp ? std::optional<cplx>(-0.1) : std::nullopt, h)}};
}

}  // namespace hirota
