// Max relative energy error and weighted cost of each integrator on the
// Sun-Earth-Moon problem over one year, at a few step sizes.
//
//   sun_earth_moon_survey [M]

#include <cstdio>
#include <cstdlib>

#include "fgn/integrators/builders.hpp"
#include "fgn/lab/experiments.hpp"

int main(int argc, char** argv) {
  const int m = argc > 1 ? std::atoi(argv[1]) : 30;
  if (m < 1) {
    std::fprintf(stderr, "M must be a positive integer\n");
    return 2;
  }
  using namespace fgn;
  const std::vector<SplittingScheme> list{schemes::leapfrog(), schemes::omelyan5(),
                                          schemes::omelyan5_fg(), schemes::nested_leapfrog(m),
                                          schemes::nested_force_gradient(m)};
  const std::vector<double> h{0.16, 0.08, 0.04};
  const auto rows = lab::cost_accuracy(list, std::vector<std::vector<double>>(list.size(), h), 12.0);

  std::printf("%-16s %6s %12s %12s\n", "scheme", "h", "cost", "max_rel_err");
  for (const auto& r : rows)
    std::printf("%-16s %6.2f %12.3f %12.3e\n", r.scheme.c_str(), r.h, r.weighted_cost, r.max_rel_err);

  std::printf("\ncost to reach a max error of 1e-8:\n");
  for (const auto& s : list) {
    const auto c = lab::cost_at_accuracy(rows, s.name, 1e-8);
    if (c)
      std::printf("  %-16s %10.1f\n", s.name.c_str(), *c);
    else
      std::printf("  %-16s %10s\n", s.name.c_str(), "not reached on this grid");
  }
}
