#ifndef PDEM_FIGURES_HPP
#define PDEM_FIGURES_HPP

#include <string>
#include <vector>

#include "pdem/runconfig.hpp"

namespace pdem::cli {

// Figure data emission, one output file per parameter value:
//   fig1: (x, V)                lambda in {+-0.25, +-0.55, +-0.85}, alpha = 1
//   fig2: (n, P_n, P_n_poisson) lambda' in {0.39, 0.9, 1.5, 2.6}
//   fig3: (z_abs, mean, variance)   same lambda' set
//   fig4: (z_abs, mandel_q, g2)     same lambda' set
// Returns the paths written. Rows are emitted in a fixed order so repeated
// runs with the same config are byte-identical.
std::vector<std::string> emit_figure_data(const std::string& which,
                                          const RunConfig& cfg);

}  // namespace pdem::cli

#endif
