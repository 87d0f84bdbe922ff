#include "ccwb/incmap.hpp"

#include <stdexcept>

namespace ccwb {

std::size_t lex_rank(const Word& w) {
  std::size_t rank = 0;
  for (std::size_t i = 0; i < w.size(); ++i) rank = rank * w.alphabet() + w.at(i);
  return rank;
}

IncompatMap::IncompatMap(int n, int m, std::vector<Word> table)
    : n_(n), m_(m), table_(std::move(table)) {
  if (n_ < 0 || m_ < n_) throw std::invalid_argument("IncompatMap: need 0 <= n <= m");
  std::size_t expected = 1;
  for (int i = 0; i < n_; ++i) expected *= 3;
  if (table_.size() != expected)
    throw std::invalid_argument("IncompatMap: table must have exactly 3^n entries");
  std::size_t rank = 0;
  for (const Word& src : enumerate_extensions(Word(3), n_)) {
    const Word& dst = table_[rank++];
    if (static_cast<int>(dst.size()) != m_)
      throw std::invalid_argument("IncompatMap: target length mismatch");
    if (!is_prefix(src, dst))
      throw std::invalid_argument("IncompatMap: phi(mu) must extend mu");
  }
}

IncompatMap IncompatMap::identity(int n) {
  return IncompatMap(n, n, enumerate_extensions(Word(3), n));
}

const Word& IncompatMap::apply(const Word& mu) const {
  if (static_cast<int>(mu.size()) != n_ || mu.alphabet() != 3)
    throw std::invalid_argument("IncompatMap::apply: bad source word");
  return table_[lex_rank(mu)];
}

bool verify(const IncompatMap& phi, const Word& rho0, const Word& rho1) {
  if (rho0.size() != rho1.size())
    throw std::invalid_argument("verify: |rho0| != |rho1|");
  if (static_cast<int>(rho0.size()) > phi.source_length())
    throw std::invalid_argument("verify: stems longer than the source length");
  const auto sources = enumerate_extensions(Word(3), phi.source_length());
  for (const Word& mu0 : sources) {
    if (!is_prefix(rho0, mu0)) continue;
    for (const Word& mu1 : sources) {
      if (!is_prefix(rho1, mu1)) continue;
      if (!completely_incompatible(mu0, mu1, rho0, rho1)) continue;
      if (!completely_incompatible(phi.apply(mu0), phi.apply(mu1), mu0, mu1)) return false;
    }
  }
  return true;
}

IncompatMap ext1(const Word& rho, const Word& rho_hat, const IncompatMap& psi) {
  const int n = psi.source_length();
  const int np = psi.target_length();
  const int m = static_cast<int>(rho_hat.size());
  if (static_cast<int>(rho.size()) != n)
    throw std::invalid_argument("ext1: |rho| != source length of psi");
  if (m < np) throw std::invalid_argument("ext1: rho_hat shorter than psi targets");
  if (!is_prefix(rho, rho_hat)) throw std::invalid_argument("ext1: rho_hat does not extend rho");
  if (!is_prefix(psi.apply(rho), rho_hat))
    throw std::invalid_argument("ext1: psi(rho) is not a prefix of rho_hat");
  if (!verify(psi, Word(3), Word(3)))
    throw std::invalid_argument("ext1: psi does not preserve incompatibility");

  const Word tau = rho_hat.suffix_after(psi.apply(rho));
  if (tau.empty()) return psi;
  if (n == 0)
    throw std::invalid_argument("ext1: no incompatibility-preserving growth exists for n = 0");

  // tau_a(x) = tau(x) + a - rho(0) mod 3
  std::vector<Word> shifted;
  for (int a = 0; a < 3; ++a) {
    std::vector<Digit> ds;
    ds.reserve(tau.size());
    for (std::size_t x = 0; x < tau.size(); ++x)
      ds.push_back(static_cast<Digit>(((tau.at(x) + a - rho.at(0)) % 3 + 3) % 3));
    shifted.emplace_back(std::move(ds), 3);
  }

  std::vector<Word> table;
  for (const Word& eta : enumerate_extensions(Word(3), n)) {
    const Word& mid = psi.apply(eta);
    table.push_back(mid.concat(shifted[eta.at(0)]));
  }
  IncompatMap phi(n, m, std::move(table));
  if (phi.apply(rho) != rho_hat)
    throw std::logic_error("ext1: construction failed to map rho to rho_hat");
  return phi;
}

std::vector<RightTuple> MonotoneOracle::universe() const {
  return enumerate_tuples(level, arity, 2);
}

Ext2Result ext2(const MonotoneOracle& oracle, int n, int budget) {
  if (budget < n) throw std::invalid_argument("ext2: budget below n");
  if (budget > oracle.depth)
    throw std::invalid_argument("ext2: budget exceeds oracle depth");

  IncompatMap phi = IncompatMap::identity(n);
  const auto sources = enumerate_extensions(Word(3), n);
  const auto nus = oracle.universe();

  for (const RightTuple& nu : nus) {
    for (const Word& rho : sources) {
      const Word& image = phi.apply(rho);
      if (oracle(image).count(nu) == 0) continue;  // settled by the "not in" branch
      // Look for the shortest extension of the image losing nu, up to the
      // oracle depth; if none exists the requirement holds by stability.
      bool settled = true;
      Word witness(3);
      for (int len = image.size(); len <= oracle.depth && settled; ++len) {
        for (const Word& eta : enumerate_extensions(image, len)) {
          if (oracle(eta).count(nu) == 0) {
            settled = false;
            witness = eta;
            break;
          }
        }
      }
      if (settled) continue;  // nu survives along every extension
      if (static_cast<int>(witness.size()) > budget)
        throw BudgetExhausted("ext2: depth budget exhausted at requirement (nu=" +
                                  nu.str() + ", rho=" + rho.str() + ")",
                              rho, nu);
      phi = ext1(rho, witness, phi);
    }
  }
  return Ext2Result{phi.target_length(), phi};
}

}  // namespace ccwb
