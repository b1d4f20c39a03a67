#pragma once
// Refinement studies in h (semi-discrete vs continuum soliton) and dt (lattice
// solver vs exact semi-discrete soliton), with log-log order fitting.

#include "hirota/lattice.hpp"

#include <json.hpp>

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace hirota {

enum class Norm { Max, L2 };

// Norm of a - b; the l2 norm is weighted by sqrt(h).
double error_metric(const std::vector<double>& a, const std::vector<double>& b, Norm norm = Norm::Max,
                    double h = 1.0);

struct OrderFit {
    double order = 0;
    double residual = 0;  // max |log10 deviation| from the fitted line
};

// Least-squares slope of log(error) against log(param). Needs >= 3 positive levels.
OrderFit order_fit(const std::vector<std::pair<double, double>>& levels);

constexpr double kErrorFloor = 1e-14;

enum class HProtocol { SemidiscreteExact, LatticeRun };

std::string protocol_name(HProtocol p);
HProtocol parse_protocol(const std::string& s);

struct RefinementStudy {
    EquationId id = EquationId::KdV;
    std::string parameter;  // "h" or "dt"
    std::string protocol;
    std::vector<std::pair<double, double>> levels;  // (param, error)
    double order = 0;
    double residual = 0;
    bool fitted = false;
    bool below_floor = false;  // every error under kErrorFloor
    bool monotone = true;
    bool aborted = false;
    std::string diagnosis;

    nlohmann::json to_json() const;
    void write_csv(std::ostream& os) const;  // param,error
};

struct HStudyOptions {
    double l = 0.2;         // KP y-wavenumber
    double t = 0.5;         // comparison time
    double window = 6.0;    // compare at |k x| <= window
    bool continuum_self = false;  // substitute the continuum tau for the semi-discrete one
    bool vacuum = false;
};

RefinementStudy h_refinement_study(EquationId id, double k, const std::vector<double>& hs, HProtocol protocol,
                                   const HStudyOptions& opt = {});

struct DtStudyOptions {
    int M = 64;
    double t_end = 0.5;
    bool vacuum = false;
};

RefinementStudy dt_refinement_study(EquationId id, double k, double h, const std::vector<double>& dts,
                                    const DtStudyOptions& opt = {});

// Fills order, residual, flags from levels.
void finish_study(RefinementStudy& s);

}  // namespace hirota
