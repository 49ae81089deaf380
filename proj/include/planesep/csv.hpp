#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "planesep/experiments.hpp"
#include "planesep/metrics.hpp"

namespace planesep {

using CsvCell = std::variant<std::int64_t, double, std::string>;

/// Header row plus one row per sample. Floating cells use fixed 6 decimals.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);
  void add_row(std::vector<CsvCell> row);
  std::string str() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<CsvCell>> rows_;
};

std::string format_fixed6(double x);

// Columns are listed in the CLI help text.
CsvTable doubling_csv(const DoublingEstimate& est);      // n,a,b,volume_2n,volume_n,ratio
CsvTable growth_csv(const GrowthFit& fit);               // radius,volume
CsvTable profile_csv(const ProfileTable& table);         // mode,center,n,value,phi_n,alpha_ratio,omega_size
CsvTable walk_csv(const WalkReport& rep);                // t,mean_displacement
CsvTable nash_williams_csv(const NashWilliamsReport& r); // k,n,size,case,separates,partial_sum

}  // namespace planesep
