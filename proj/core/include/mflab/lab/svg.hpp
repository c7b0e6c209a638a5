#pragma once

#include <string>
#include <vector>

#include "mflab/lab/fit.hpp"

namespace mflab::lab {

/// Log-log scatter of (N, estimate) with the power and log-power fits overlaid.
std::string scaling_svg(const std::vector<ScalingRow>& rows, const FitResult& fit, const std::string& title,
                        const std::string& y_label);

}  // namespace mflab::lab
