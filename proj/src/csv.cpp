#include "planesep/csv.hpp"

#include <cmath>
#include <cstdio>

namespace planesep {

std::string format_fixed6(double x) {
  if (std::isnan(x)) return "nan";
  if (std::abs(x) < 5e-7) x = 0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvTable::add_row(std::vector<CsvCell> row) {
  if (row.size() != header_.size()) throw std::logic_error("csv row width does not match header");
  rows_.push_back(std::move(row));
}

std::string CsvTable::str() const {
  std::string out;
  for (std::size_t i = 0; i < header_.size(); ++i) out += (i ? "," : "") + header_[i];
  out += '\n';
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      if (const auto* n = std::get_if<std::int64_t>(&row[i]))
        out += std::to_string(*n);
      else if (const auto* d = std::get_if<double>(&row[i]))
        out += format_fixed6(*d);
      else
        out += std::get<std::string>(row[i]);
    }
    out += '\n';
  }
  return out;
}

CsvTable doubling_csv(const DoublingEstimate& est) {
  CsvTable t({"n", "a", "b", "volume_2n", "volume_n", "ratio"});
  for (const auto& s : est.samples)
    t.add_row({std::int64_t{s.n}, std::int64_t{s.a}, std::int64_t{s.b}, s.volume_2n, s.volume_n, s.ratio});
  return t;
}

CsvTable growth_csv(const GrowthFit& fit) {
  CsvTable t({"radius", "volume"});
  for (std::size_t i = 0; i < fit.radii.size(); ++i) t.add_row({std::int64_t{fit.radii[i]}, fit.volumes[i]});
  return t;
}

CsvTable profile_csv(const ProfileTable& table) {
  CsvTable t({"mode", "center", "n", "value", "phi_n", "alpha_ratio", "omega_size"});
  for (const auto& e : table.entries)
    t.add_row({std::string(to_string(table.mode)), std::int64_t{table.center}, e.n, e.value, std::int64_t{e.phi_n},
               e.alpha_ratio, e.omega_size});
  return t;
}

CsvTable walk_csv(const WalkReport& rep) {
  CsvTable t({"t", "mean_displacement"});
  for (std::size_t i = 0; i < rep.times.size(); ++i) t.add_row({rep.times[i], rep.mean_displacement[i]});
  return t;
}

CsvTable nash_williams_csv(const NashWilliamsReport& r) {
  CsvTable t({"k", "n", "size", "case", "separates", "partial_sum"});
  double sum = 0;
  for (std::size_t k = 0; k < r.cutsets.size(); ++k) {
    const auto& c = r.cutsets[k];
    if (c.size > 0) sum += 1.0 / c.size;
    t.add_row({static_cast<std::int64_t>(k + 1), std::int64_t{c.n}, std::int64_t{c.size}, std::string(to_string(c.kind)),
               std::int64_t{c.separates ? 1 : 0}, sum});
  }
  return t;
}

}  // namespace planesep
