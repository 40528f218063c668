#pragma once

#include <string>
#include <vector>

#include "cheeger/metric_spectral.hpp"

namespace cheeger {

struct DumbbellScanRow {
  int petals = 0;
  double handle = 0.0;
  double h = 0.0;
  double lambda1 = 0.0;
  // lambda1 of the flower with 2m petals left when the handle vanishes,
  // 4 pi^2 m^2 / L^2 (pi^2 m^2 at L = 2)
  double flower_limit = 0.0;
  double ratio = 0.0;  // lambda1 / flower_limit
};

/// Symmetric flower dumbbells for m in [m_min, m_max] and each handle length.
std::vector<DumbbellScanRow> scan_dumbbell(int m_min, int m_max, double total_length,
                                           const std::vector<double>& handles,
                                           const SpectralOptions& spectral = {});

/// Header m,handle,h,lambda1,flower_limit,ratio; 12 significant digits.
std::string scan_to_csv(const std::vector<DumbbellScanRow>& rows);

}  // namespace cheeger
