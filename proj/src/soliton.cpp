#include "hirota/soliton.hpp"

namespace hirota {

SolitonParam<cplx> soliton_from_k(EquationId id, cplx k, std::optional<cplx> l, cplx h) {
    SolitonParam<cplx> p;
    p.k = k;
    if (l) p.l = *l;
    p.omega = dispersion(id, k, id == EquationId::KP ? std::optional<cplx>(p.l) : std::nullopt);
    p.W = step_factor(id, p.k, p.l, p.omega, h);
    p.mu = std::sqrt(p.W);
    return p;
}

}  // namespace hirota
