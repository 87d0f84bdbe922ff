#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ccwb/gamma.hpp"
#include "ccwb/report.hpp"
#include "ccwb/words.hpp"

namespace ccwb {

// A finitely-presented Gamma_m-approximation: rows indexed by n, columns by
// the stage s; row values start at zeta_m, are non-decreasing and over n.
struct ApproxTable {
  int level = 0;
  std::vector<std::vector<GammaElem>> rows;

  std::size_t row_count() const { return rows.size(); }
  std::size_t col_count() const { return rows.empty() ? 0 : rows[0].size(); }
};

// A possibly ill-formed grid of optional values with per-cell availability
// stages.
struct StepStream {
  struct Cell {
    std::optional<GammaElem> value;
    int available_at = 0;  // stage at which the cell converges; < 0: never
  };
  int level = 0;
  std::vector<std::vector<Cell>> rows;
};

// An array of 3-tuples of mutually disjoint finite sets with min > n.
struct DisjointArray {
  std::vector<std::array<std::vector<int>, 3>> rows;
};

Report validate_table(const ApproxTable& t);
Report validate_array(const DisjointArray& arr);

// The totalizing wrapper: builds a valid table from an arbitrary stream,
// keeping row limits when the stream already encodes a valid approximation.
ApproxTable normalize(const StepStream& xi, int level);

// The declared limit of a row: its last column.
const GammaElem& limit(const ApproxTable& t, std::size_t n);

// Level-0 table whose row n approximates the partial coloring sending the
// members of F_{n,j} to j.
ApproxTable from_array(const DisjointArray& arr);

// Least row whose sets land inside the coloring prefix classwise.
std::optional<std::size_t> hyperimmune_witness(const Word& coloring_prefix,
                                               const DisjointArray& arr);

struct DiagEntry {
  std::size_t table_index = 0;
  std::size_t row = 0;
  Gamma0 tau;
};

struct DiagResult {
  Word prefix{3};
  std::vector<DiagEntry> entries;
};

struct TableExhausted : std::runtime_error {
  std::size_t table_index;
  TableExhausted(const std::string& msg, std::size_t idx)
      : std::runtime_error(msg), table_index(idx) {}
};

// Builds a coloring prefix compatible with the limit of every table at the
// recorded row, processing tables in order and filling gaps with 0.
// The certificate is re-verified before returning.
DiagResult diagonalize(const std::vector<ApproxTable>& tables);

}  // namespace ccwb
