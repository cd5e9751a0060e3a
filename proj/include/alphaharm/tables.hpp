#pragma once

#include <vector>

#include "alphaharm/analysis.hpp"
#include "alphaharm/solver.hpp"

namespace alphaharm {

// Columns r,theta,K,lapK,M for each point.
Report kernel_table(Alpha alpha, const std::vector<Complex>& points);

// Columns re,im,u_re,u_im (+ discrepancy when both routes run). The summary
// carries max_discrepancy; `passed` is max_discrepancy <= threshold.
Report grid_report(Alpha alpha, const BoundaryFunction& f,
                   const GridOptions& options, double threshold = 1e-8);

// grid_report at explicit points instead of the polar grid.
Report points_report(Alpha alpha, const BoundaryFunction& f,
                     const std::vector<Complex>& points,
                     const GridOptions& options, double threshold = 1e-8);

// One block of rows per γ: gamma,distance,re,im,u_re,u_im. The summary
// lists, per γ, the one-sided limits, the predicted and extrapolated values
// and whether |limit - predicted| <= tolerance. θ₀ may be a continuity
// point, in which case the prediction is f(e^{iθ₀}).
Report jump_probe_report(Alpha alpha, const BoundaryFunction& f, double theta0,
                         const std::vector<double>& gammas,
                         const std::vector<double>& distances,
                         double tolerance = 0.02);

}  // namespace alphaharm
