#include "latpimc/quadrature.hpp"

namespace latpimc {

double integrate_periodic_scalar(const std::function<double(double)>& f, const QuadratureSpec& spec) {
  return integrate_periodic<1>([&](double u) { return std::array<double, 1>{f(u)}; }, spec).value[0];
}

}  // namespace latpimc
