#include "ccwb/approx.hpp"

#include <algorithm>
#include <stdexcept>

namespace ccwb {

Report validate_table(const ApproxTable& t) {
  Report report;
  const GammaElem root = GammaElem::zeta(t.level);
  for (std::size_t n = 0; n < t.rows.size(); ++n) {
    const auto& row = t.rows[n];
    if (row.empty()) {
      report.violations.push_back("row " + std::to_string(n) + " is empty");
      continue;
    }
    if (row.size() != t.rows[0].size())
      report.violations.push_back("row " + std::to_string(n) + " has ragged length");
    for (std::size_t s = 0; s < row.size(); ++s) {
      const std::string cell = "(" + std::to_string(n) + "," + std::to_string(s) + ")";
      if (row[s].level != t.level) {
        report.violations.push_back("cell " + cell + " has wrong level");
        continue;
      }
      Report sub = validate_path(row[s]);
      if (!sub.ok()) {
        report.violations.push_back("cell " + cell + " is not a valid element");
        continue;
      }
      if (s == 0 && !(row[s] == root))
        report.violations.push_back("cell " + cell + " must be the root");
      if (s > 0 && !leq(row[s - 1], row[s]))
        report.violations.push_back("row decreasing at cell " + cell);
      if (!over(row[s], static_cast<int>(n)))
        report.violations.push_back("cell " + cell + " not over " + std::to_string(n));
    }
  }
  return report;
}

Report validate_array(const DisjointArray& arr) {
  Report report;
  for (std::size_t n = 0; n < arr.rows.size(); ++n) {
    const auto& fs = arr.rows[n];
    std::vector<int> all;
    for (int j = 0; j < 3; ++j)
      for (int x : fs[j]) {
        if (x < 0) report.violations.push_back("negative element in row " + std::to_string(n));
        all.push_back(x);
      }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
      report.violations.push_back("sets not mutually disjoint in row " + std::to_string(n));
    if (!all.empty() && all.front() <= static_cast<int>(n))
      report.violations.push_back("min of row " + std::to_string(n) + " not above " +
                                  std::to_string(n));
  }
  return report;
}

ApproxTable normalize(const StepStream& xi, int level) {
  ApproxTable out;
  out.level = level;
  const GammaElem root = GammaElem::zeta(level);

  std::size_t in_cols = 0;
  int max_avail = 0;
  for (const auto& row : xi.rows) {
    in_cols = std::max(in_cols, row.size());
    for (const auto& cell : row)
      if (cell.available_at > max_avail) max_avail = cell.available_at;
  }
  const std::size_t t_out = std::max(in_cols, static_cast<std::size_t>(max_avail) + 1) + 1;

  for (std::size_t n = 0; n < xi.rows.size(); ++n) {
    const auto& in_row = xi.rows[n];
    std::vector<GammaElem> row;
    row.push_back(root);
    for (std::size_t t = 1; t < t_out; ++t) {
      const GammaElem& prev = row.back();
      // biggest s < t whose cell is available by stage t and strictly
      // extends the previous value, and is itself an acceptable element
      std::optional<GammaElem> next;
      for (std::size_t s = std::min(t, in_row.size()); s-- > 0;) {
        const auto& cell = in_row[s];
        if (!cell.value.has_value()) continue;
        if (cell.available_at < 0 || static_cast<std::size_t>(cell.available_at) > t) continue;
        const GammaElem& v = *cell.value;
        if (v.level != level) continue;
        if (!validate_path(v).ok()) continue;
        if (!over(v, static_cast<int>(n))) continue;
        if (!(leq(prev, v) && !(prev == v))) continue;
        next = v;
        break;
      }
      row.push_back(next.has_value() ? *next : prev);
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

const GammaElem& limit(const ApproxTable& t, std::size_t n) {
  Report rep = validate_table(t);
  if (!rep.ok()) throw std::invalid_argument("limit: invalid table: " + rep.violations.front());
  if (n >= t.rows.size()) throw std::invalid_argument("limit: row out of range");
  return t.rows[n].back();
}

ApproxTable from_array(const DisjointArray& arr) {
  Report rep = validate_array(arr);
  if (!rep.ok())
    throw std::invalid_argument("from_array: invalid array: " + rep.violations.front());
  ApproxTable out;
  out.level = 0;
  for (const auto& fs : arr.rows) {
    std::vector<std::pair<int, int>> entries;
    for (int j = 0; j < 3; ++j)
      for (int x : fs[j]) entries.emplace_back(x, j);
    GammaElem g = GammaElem::from_base(Gamma0(std::move(entries)));
    out.rows.push_back({GammaElem::zeta(0), g});
  }
  return out;
}

std::optional<std::size_t> hyperimmune_witness(const Word& coloring_prefix,
                                               const DisjointArray& arr) {
  for (std::size_t n = 0; n < arr.rows.size(); ++n) {
    const auto& fs = arr.rows[n];
    bool inside = true, matches = true;
    for (int j = 0; j < 3 && inside; ++j) {
      for (int x : fs[j]) {
        if (x >= static_cast<int>(coloring_prefix.size())) {
          inside = false;
          break;
        }
        if (coloring_prefix.at(x) != j) matches = false;
      }
    }
    if (inside && matches) return n;
  }
  return std::nullopt;
}

DiagResult diagonalize(const std::vector<ApproxTable>& tables) {
  for (std::size_t i = 0; i < tables.size(); ++i) {
    Report rep = validate_table(tables[i]);
    if (!rep.ok())
      throw std::invalid_argument("diagonalize: table " + std::to_string(i) +
                                  " invalid: " + rep.violations.front());
  }

  DiagResult res;
  std::vector<Digit> prefix;
  for (std::size_t i = 0; i < tables.size(); ++i) {
    const std::size_t n = prefix.size();
    if (n >= tables[i].row_count())
      throw TableExhausted("diagonalize: table " + std::to_string(i) +
                               " exhausted at row " + std::to_string(n),
                           i);
    const GammaElem& gamma = tables[i].rows[n].back();
    std::vector<Gamma0> interp = interpret(gamma);
    const Gamma0& tau = *std::min_element(interp.begin(), interp.end());
    if (!tau.empty()) {
      if (tau.min_support() <= static_cast<int>(n))
        throw std::logic_error("diagonalize: limit not over the current prefix length");
      prefix.resize(static_cast<std::size_t>(tau.max_support()) + 1, 0);
      for (const auto& [p, v] : tau.entries) prefix[p] = static_cast<Digit>(v);
    }
    res.entries.push_back(DiagEntry{i, n, tau});
  }
  res.prefix = Word(prefix, 3);

  // certificate re-verification
  for (const DiagEntry& e : res.entries) {
    const GammaElem& gamma = tables[e.table_index].rows[e.row].back();
    if (!compatible(res.prefix, interpret(gamma)))
      throw std::logic_error("diagonalize: certificate failed re-verification");
  }
  return res;
}

}  // namespace ccwb
