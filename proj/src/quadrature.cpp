#include "cis/quadrature.hpp"

namespace cis {

std::vector<double> uniform_breakpoints(double a, double b, double width) {
  if (!(b > a) || !(width > 0.0)) invalid_input("uniform_breakpoints: need a < b and width > 0");
  std::vector<double> out;
  const auto panels = static_cast<long>(std::ceil((b - a) / width - 1e-12));
  out.reserve(static_cast<std::size_t>(panels) + 1);
  for (long k = 0; k < panels; ++k) out.push_back(a + static_cast<double>(k) * width);
  out.push_back(b);
  return out;
}

}  // namespace cis
