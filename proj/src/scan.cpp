#include "cheeger/scan.hpp"

#include <numbers>
#include <sstream>
#include <stdexcept>

#include "cheeger/families.hpp"
#include "cheeger/verify.hpp"

namespace cheeger {

std::vector<DumbbellScanRow> scan_dumbbell(int m_min, int m_max, double total_length,
                                           const std::vector<double>& handles,
                                           const SpectralOptions& spectral) {
  if (m_min < 1 || m_max < m_min) throw std::invalid_argument("scan: bad petal range");
  if (handles.empty()) throw std::invalid_argument("scan: no handle lengths");
  constexpr double pi = std::numbers::pi;
  std::vector<DumbbellScanRow> rows;
  for (int m = m_min; m <= m_max; ++m) {
    for (const double eps : handles) {
      const auto g = dumbbell_graph(m, total_length, eps);
      DumbbellScanRow row;
      row.petals = m;
      row.handle = eps;
      row.h = metric_cheeger(g).value;
      row.lambda1 = lambda1_metric(g, spectral).extrapolated;
      row.flower_limit = 4.0 * pi * pi * m * m / (total_length * total_length);
      row.ratio = row.lambda1 / row.flower_limit;
      rows.push_back(row);
    }
  }
  return rows;
}

std::string scan_to_csv(const std::vector<DumbbellScanRow>& rows) {
  std::ostringstream out;
  out << "m,handle,h,lambda1,flower_limit,ratio\n";
  for (const auto& r : rows) {
    out << r.petals << ',' << format_number(r.handle) << ',' << format_number(r.h) << ','
        << format_number(r.lambda1) << ',' << format_number(r.flower_limit) << ','
        << format_number(r.ratio) << '\n';
  }
  return out.str();
}

}  // namespace cheeger
