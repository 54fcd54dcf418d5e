#include "levyfp/curves.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace levyfp {

namespace {

constexpr double kDateTol = 1e-9;

bool same_date(double a, double b) { return std::abs(a - b) <= kDateTol; }

}  // namespace

TenorGrid TenorGrid::regular(
    double t0, std::size_t periods, double delta,
    const std::vector<std::pair<std::string, std::size_t>>& tenors) {
  if (periods == 0 || !(delta > 0.0)) {
    throw InvalidParameterError("TenorGrid: need periods > 0 and delta > 0");
  }
  TenorGrid g;
  g.delta = delta;
  g.dates.resize(periods + 1);
  for (std::size_t k = 0; k <= periods; ++k) g.dates[k] = t0 + delta * k;
  for (const auto& [label, mult] : tenors) {
    if (mult == 0 || periods % mult != 0) {
      throw InvalidParameterError(
          "TenorGrid: tenor multiple must divide the number of fine periods");
    }
    SubGrid sub;
    sub.label = label;
    sub.delta = delta * mult;
    for (std::size_t k = 0; k <= periods; k += mult) sub.indices.push_back(k);
    g.subs.push_back(std::move(sub));
  }
  g.validate();
  return g;
}

void TenorGrid::validate() const {
  if (dates.size() < 2) {
    throw InvalidParameterError("TenorGrid: need at least one period");
  }
  for (std::size_t k = 1; k < dates.size(); ++k) {
    if (std::abs((dates[k] - dates[k - 1]) - delta) > kDateTol) {
      throw InvalidParameterError("TenorGrid: fine grid not equidistant");
    }
  }
  const TenorGrid::SubGrid* prev = nullptr;
  for (const auto& sub : subs) {
    if (sub.indices.size() < 2 || sub.indices.front() != 0 ||
        sub.indices.back() != dates.size() - 1) {
      throw InvalidParameterError(
          "TenorGrid: sub-grid must share first and last date");
    }
    const std::size_t step = sub.indices[1] - sub.indices[0];
    for (std::size_t k = 1; k < sub.indices.size(); ++k) {
      if (sub.indices[k] - sub.indices[k - 1] != step) {
        throw InvalidParameterError("TenorGrid: sub-grid not equidistant");
      }
    }
    if (std::abs(sub.delta - delta * step) > kDateTol) {
      throw InvalidParameterError(
          "TenorGrid: sub-grid year fraction must be an integer multiple "
          "of the fine one");
    }
    if (prev != nullptr) {
      // nesting: every date of the coarser structure lies on the previous one
      for (std::size_t idx : sub.indices) {
        if (!std::binary_search(prev->indices.begin(), prev->indices.end(),
                                idx)) {
          throw InvalidParameterError("TenorGrid: sub-grids are not nested");
        }
      }
    }
    prev = &sub;
  }
}

std::size_t TenorGrid::index_of(double date) const {
  for (std::size_t k = 0; k < dates.size(); ++k) {
    if (same_date(dates[k], date)) return k;
  }
  throw DateNotOnGridError("date " + std::to_string(date) +
                           " is not on the tenor grid");
}

bool TenorGrid::contains(double date) const {
  return std::any_of(dates.begin(), dates.end(),
                     [&](double d) { return same_date(d, date); });
}

CurveSet::CurveSet(TenorGrid grid, std::vector<double> discounts,
                   std::vector<std::vector<double>> fra_rates)
    : grid_(std::move(grid)),
      discounts_(std::move(discounts)),
      fra_(std::move(fra_rates)) {
  grid_.validate();
  if (discounts_.size() != grid_.dates.size()) {
    throw InvalidParameterError("CurveSet: one discount factor per grid date");
  }
  for (double b : discounts_) {
    if (!(b > 0.0) || !std::isfinite(b)) {
      throw NonPositiveDiscountError("CurveSet: discount factors must be > 0");
    }
  }
  if (fra_.size() != grid_.subs.size()) {
    throw InvalidParameterError("CurveSet: one FRA curve per sub-grid");
  }
  for (std::size_t i = 0; i < fra_.size(); ++i) {
    if (fra_[i].size() != grid_.subs[i].periods()) {
      throw InvalidParameterError("CurveSet: one FRA rate per coarse period");
    }
  }
}

double CurveSet::discount(double maturity) const {
  const auto& dates = grid_.dates;
  if (maturity <= dates.front() + kDateTol) {
    if (same_date(maturity, dates.front())) return discounts_.front();
  }
  for (std::size_t k = 0; k < dates.size(); ++k) {
    if (same_date(dates[k], maturity)) return discounts_[k];
  }
  if (maturity < dates.front() || maturity > dates.back()) {
    throw DateNotOnGridError("discount: maturity outside the curve range");
  }
  // log-linear between bracketing pillars
  const auto it = std::upper_bound(dates.begin(), dates.end(), maturity);
  const std::size_t hi = static_cast<std::size_t>(it - dates.begin());
  const std::size_t lo = hi - 1;
  const double w = (maturity - dates[lo]) / (dates[hi] - dates[lo]);
  return std::exp((1.0 - w) * std::log(discounts_[lo]) +
                  w * std::log(discounts_[hi]));
}

double CurveSet::forward_price(double t_a, double t_b) const {
  const std::size_t a = grid_.index_of(t_a);
  const std::size_t b = grid_.index_of(t_b);
  if (a > b) throw InvalidParameterError("forward_price: need T_a <= T_b");
  double f = 1.0;
  for (std::size_t j = a; j < b; ++j) f *= discounts_[j] / discounts_[j + 1];
  return f;
}

double CurveSet::basic_rate(double t_a, double t_b) const {
  return (forward_price(t_a, t_b) - 1.0) / (t_b - t_a);
}

double CurveSet::fra_rate(std::size_t curve, std::size_t period) const {
  if (curve >= fra_.size() || period == 0 || period > fra_[curve].size()) {
    throw InvalidParameterError("fra_rate: index out of range");
  }
  return fra_[curve][period - 1];
}

double CurveSet::multiplicative_spread(std::size_t curve,
                                       std::size_t period) const {
  const auto& sub = grid_.subs.at(curve);
  const double t_a = grid_.dates[sub.indices[period - 1]];
  const double t_b = grid_.dates[sub.indices[period]];
  const double one_plus = 1.0 + sub.delta * fra_rate(curve, period);
  return one_plus / forward_price(t_a, t_b);
}

double CurveSet::additive_spread(std::size_t curve, std::size_t period) const {
  const auto& sub = grid_.subs.at(curve);
  const double t_a = grid_.dates[sub.indices[period - 1]];
  const double t_b = grid_.dates[sub.indices[period]];
  return fra_rate(curve, period) - basic_rate(t_a, t_b);
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) {
    while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' ')) {
      cell.pop_back();
    }
    std::size_t q = 0;
    while (q < cell.size() && cell[q] == ' ') ++q;
    out.push_back(cell.substr(q));
  }
  return out;
}

double parse_number(const std::string& cell, const std::string& file) {
  std::size_t pos = 0;
  double v;
  try {
    v = std::stod(cell, &pos);
  } catch (const std::exception&) {
    throw MalformedFileError(file + ": cannot parse number '" + cell + "'");
  }
  if (pos != cell.size()) {
    throw MalformedFileError(file + ": trailing characters in '" + cell + "'");
  }
  return v;
}

std::vector<std::vector<double>> read_csv(const std::string& path,
                                          const std::string& header) {
  std::ifstream in(path);
  if (!in) throw MalformedFileError(path + ": cannot open file");
  std::string line;
  if (!std::getline(in, line)) throw MalformedFileError(path + ": empty file");
  while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
    line.pop_back();
  }
  if (line != header) {
    throw MalformedFileError(path + ": expected header '" + header + "'");
  }
  const std::size_t cols =
      static_cast<std::size_t>(std::count(header.begin(), header.end(), ',')) +
      1;
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    const auto cells = split_csv_line(line);
    if (cells.size() != cols) {
      throw MalformedFileError(path + ": wrong number of columns in '" + line +
                               "'");
    }
    std::vector<double> row;
    row.reserve(cols);
    for (const auto& c : cells) row.push_back(parse_number(c, path));
    rows.push_back(std::move(row));
  }
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (!(rows[r][0] > rows[r - 1][0])) {
      throw MalformedFileError(path + ": rows must be sorted by maturity");
    }
  }
  return rows;
}

}  // namespace

CurveSet load_curves(
    const std::string& discount_csv,
    const std::vector<std::pair<std::string, std::string>>& fra_csvs,
    const TenorGrid& grid) {
  const auto disc_rows = read_csv(discount_csv, "maturity_years,discount_factor");
  std::vector<double> discounts(grid.dates.size());
  for (std::size_t k = 0; k < grid.dates.size(); ++k) {
    const double target = grid.dates[k];
    bool found = false;
    for (const auto& row : disc_rows) {
      if (same_date(row[0], target)) {
        if (!(row[1] > 0.0)) {
          throw NonPositiveDiscountError(
              discount_csv + ": non-positive discount factor at T=" +
              std::to_string(target));
        }
        discounts[k] = row[1];
        found = true;
        break;
      }
    }
    if (!found) {
      throw MissingPillarError(discount_csv + ": missing pillar T=" +
                               std::to_string(target));
    }
  }

  if (fra_csvs.size() != grid.subs.size()) {
    throw InvalidParameterError("load_curves: one FRA file per sub-grid");
  }
  std::vector<std::vector<double>> fra(grid.subs.size());
  for (std::size_t i = 0; i < grid.subs.size(); ++i) {
    // match files to sub-grids by tenor label
    const auto it = std::find_if(
        fra_csvs.begin(), fra_csvs.end(),
        [&](const auto& f) { return f.first == grid.subs[i].label; });
    if (it == fra_csvs.end()) {
      throw InvalidParameterError("load_curves: no FRA file for tenor '" +
                                  grid.subs[i].label + "'");
    }
    const auto rows = read_csv(it->second, "start_years,end_years,fra_rate");
    const auto& sub = grid.subs[i];
    fra[i].resize(sub.periods());
    for (std::size_t k = 1; k <= sub.periods(); ++k) {
      const double start = grid.dates[sub.indices[k - 1]];
      const double end = grid.dates[sub.indices[k]];
      bool found = false;
      for (const auto& row : rows) {
        if (same_date(row[0], start) && same_date(row[1], end)) {
          fra[i][k - 1] = row[2];
          found = true;
          break;
        }
      }
      if (!found) {
        throw MissingPillarError(it->second + ": missing FRA pillar (" +
                                 std::to_string(start) + ", " +
                                 std::to_string(end) + ")");
      }
    }
  }
  return CurveSet(grid, std::move(discounts), std::move(fra));
}

}  // namespace levyfp
