#pragma once
// Standard soliton parameter sets used by the CLI, tests and acceptance runs.

#include "hirota/soliton.hpp"

#include <vector>

namespace hirota {

struct ExactFixture {
    Quad h;
    std::vector<SolitonParam<Quad>> params;  // two semi-discrete solitons
};

// Two exact semi-discrete solitons from rational mu.
ExactFixture exact_semidiscrete_fixture(EquationId id);

// Three exact continuum solitons with rational (k, l, omega).
std::vector<SolitonParam<Quad>> exact_continuum_params(EquationId id);

struct FloatFixture {
    double h;
    std::vector<SolitonParam<cplx>> params;  // k = 0.8, 0.5 (KP: l = 0.1, -0.1)
};

FloatFixture float_semidiscrete_fixture(EquationId id, double h = 0.5);

}  // namespace hirota
