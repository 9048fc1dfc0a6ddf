#pragma once

#include <string>
#include <vector>

namespace epistoch {

// Writes the data behind each figure as CSV into out_dir and returns the
// paths written.
//
//   fig1: takeoff probability pi versus tau_i in [0, 3] (step 0.01), one
//         column per r0 value.
//   fig2: k-seed takeoff probability pi_k for k = 1..20 at pi in {0.25, 0.5}.
//   fig3: growth rate alpha along four one-parameter sweeps (mu_l and mu_i
//         over [1, 14] step 0.1, tau_l and tau_i over [0, 3] step 0.01), the
//         other parameters held at r0 = 2, mu = 7 days, tau = 3/7. One file
//         per sweep.
//   fig5: prior CDF, posterior CDF and posterior density of tau_i given an
//         observed final fraction 0.5 under an exponential(0.5) prior.
std::vector<std::string> emit_figure_data(const std::string& figure, const std::string& out_dir,
                                          const std::vector<double>& fig1_r0 = {1.5, 3.0, 6.0});

}  // namespace epistoch
