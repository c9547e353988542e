#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qm {

using IntMatrix = std::vector<std::vector<long long>>;

/// Invariant factors d_1 | d_2 | ... of a finitely generated abelian group,
/// one per generator of the presentation. 0 stands for an infinite cyclic
/// factor and always sorts last.
struct AbelianInvariants {
  std::vector<long long> factors;

  /// Factors other than 1, e.g. {12} for Z/12.
  std::vector<long long> nontrivial() const;
  /// Human form such as "Z12", "Z2 + Z" or "0".
  std::string to_string() const;

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

/// Z^n modulo the row span of a relation matrix, with coordinates in the
/// invariant-factor basis. Computed by exact Smith normal form over GMP
/// integers, tracking the column transform so that membership of arbitrary
/// vectors in the relation lattice can be decided.
class AbelianQuotient {
 public:
  /// rows must each have exactly rank entries.
  AbelianQuotient(const IntMatrix& relations, int rank);

  int rank() const { return rank_; }
  const AbelianInvariants& invariants() const { return invariants_; }

  /// Coordinates of x in the nontrivial factors, each reduced into [0, d)
  /// (unreduced for free factors).
  std::vector<mpz_class> coordinates(const std::vector<long long>& x) const;
  /// True iff x lies in the relation lattice, i.e. maps to 0.
  bool is_zero(const std::vector<long long>& x) const;

 private:
  int rank_;
  AbelianInvariants invariants_;
  std::vector<mpz_class> diagonal_;               // length rank_
  std::vector<std::vector<mpz_class>> column_op_;  // rank_ x rank_, unimodular
};

/// Invariant factors of Z^rank / rowspan(relations).
AbelianInvariants smith_invariants(const IntMatrix& relations, int rank);

}  // namespace qm
