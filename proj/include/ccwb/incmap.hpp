#pragma once

#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccwb/words.hpp"

namespace ccwb {

// A total map from all 3^n words to 3^m words with phi(mu) >= mu.
// Entries are indexed by the lexicographic rank of the source word.
class IncompatMap {
public:
  IncompatMap(int n, int m, std::vector<Word> table);

  static IncompatMap identity(int n);

  int source_length() const { return n_; }
  int target_length() const { return m_; }
  const Word& apply(const Word& mu) const;
  const std::vector<Word>& table() const { return table_; }

  bool operator==(const IncompatMap& other) const = default;

private:
  int n_;
  int m_;
  std::vector<Word> table_;  // indexed by lex rank of the source
};

std::size_t lex_rank(const Word& w);

// True iff phi preserves incompatibility over (rho0, rho1): phi extends every
// source pointwise, and every completely incompatible pair above the stems
// maps to a completely incompatible pair over itself.
// Requires |rho0| == |rho1| <= n.
bool verify(const IncompatMap& phi, const Word& rho0, const Word& rho1);

// Extends psi to a map into 3^m sending rho to rho_hat, via the modular
// shift tau_a(x) = tau(x) + a - rho(0) mod 3.
// Requires psi incompatibility-preserving over (eps, eps), psi(rho) a prefix
// of rho_hat, and n <= n' <= m.
IncompatMap ext1(const Word& rho, const Word& rho_hat, const IncompatMap& psi);

// A total, non-increasing map from 3-words (length <= depth) to finite sets
// of right tuples at a fixed level.
struct MonotoneOracle {
  int depth = 0;        // maximal query length
  int level = 0;        // length of the tuples in the value sets
  int arity = 1;
  std::function<std::set<RightTuple>(const Word&)> eval;

  std::set<RightTuple> operator()(const Word& w) const { return eval(w); }
  // The full value universe (2^level)^arity.
  std::vector<RightTuple> universe() const;
};

struct Ext2Result {
  int m;
  IncompatMap phi;
};

struct BudgetExhausted : std::runtime_error {
  Word pending_rho;
  RightTuple pending_nu;
  BudgetExhausted(const std::string& msg, Word rho, RightTuple nu)
      : std::runtime_error(msg), pending_rho(std::move(rho)), pending_nu(std::move(nu)) {}
};

// Requirement sweep of the stabilization construction: returns phi mapping
// 3^n into 3^m (m <= budget) preserving incompatibility over (eps, eps),
// such that for every rho and nu, either nu is outside oracle(phi(rho)) or
// nu stays inside oracle along every extension up to the oracle depth.
// Requirements are processed in (nu, rho) lexicographic order; growth uses
// the shortest witness, lex tie-break.
Ext2Result ext2(const MonotoneOracle& oracle, int n, int budget);

}  // namespace ccwb
