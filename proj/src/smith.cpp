#include "qm/smith.hpp"

#include <algorithm>
#include <sstream>

#include "qm/error.hpp"

namespace qm {

namespace {

using Row = std::vector<mpz_class>;

// Brings m into diagonal form with d_0 | d_1 | ... by row operations and
// column operations; the column operations are mirrored into v.
void smith_reduce(std::vector<Row>& m, std::vector<Row>& v, int cols) {
  const int rows = static_cast<int>(m.size());
  auto swap_cols = [&](int a, int b) {
    for (auto& r : m) std::swap(r[a], r[b]);
    for (auto& r : v) std::swap(r[a], r[b]);
  };
  auto add_col = [&](int dst, int src, const mpz_class& q) {  // col_dst -= q col_src
    for (auto& r : m) r[dst] -= q * r[src];
    for (auto& r : v) r[dst] -= q * r[src];
  };

  for (int t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Pivot: smallest nonzero magnitude in the trailing block.
      int pi = -1, pj = -1;
      for (int i = t; i < rows; ++i)
        for (int j = t; j < cols; ++j)
          if (m[i][j] != 0 && (pi < 0 || abs(m[i][j]) < abs(m[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) return;
      std::swap(m[t], m[pi]);
      if (pj != t) swap_cols(t, pj);

      bool dirty = false;
      for (int i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), m[i][t].get_mpz_t(), m[t][t].get_mpz_t());
        for (int j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) dirty = true;
      }
      for (int j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), m[t][j].get_mpz_t(), m[t][t].get_mpz_t());
        add_col(j, t, q);
        if (m[t][j] != 0) dirty = true;
      }
      if (dirty) continue;

      // Divisibility: fold an offending row into the pivot row and retry.
      int bad = -1;
      for (int i = t + 1; i < rows && bad < 0; ++i)
        for (int j = t + 1; j < cols; ++j)
          if (m[i][j] % m[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      for (int j = t; j < cols; ++j) m[t][j] += m[bad][j];
    }
    if (m[t][t] < 0)
      for (int j = t; j < cols; ++j) m[t][j] = -m[t][j];
  }
}

}  // namespace

std::vector<long long> AbelianInvariants::nontrivial() const {
  std::vector<long long> out;
  for (long long d : factors)
    if (d != 1) out.push_back(d);
  return out;
}

std::string AbelianInvariants::to_string() const {
  auto nt = nontrivial();
  if (nt.empty()) return "0";
  std::ostringstream os;
  for (std::size_t k = 0; k < nt.size(); ++k) {
    if (k) os << " + ";
    if (nt[k] == 0)
      os << "Z";
    else
      os << "Z" << nt[k];
  }
  return os.str();
}

AbelianQuotient::AbelianQuotient(const IntMatrix& relations, int rank) : rank_(rank) {
  if (rank < 0) throw ValidationError("negative rank");
  std::vector<Row> m;
  m.reserve(relations.size());
  for (const auto& r : relations) {
    if (static_cast<int>(r.size()) != rank)
      throw ValidationError("relation row has " + std::to_string(r.size()) + " entries, expected " +
                            std::to_string(rank));
    Row row(rank);
    for (int j = 0; j < rank; ++j) row[j] = mpz_class(static_cast<long>(r[j]));
    m.push_back(std::move(row));
  }
  column_op_.assign(rank, Row(rank, 0));
  for (int j = 0; j < rank; ++j) column_op_[j][j] = 1;

  smith_reduce(m, column_op_, rank);

  diagonal_.assign(rank, 0);
  for (int t = 0; t < std::min<int>(rank, static_cast<int>(m.size())); ++t) diagonal_[t] = m[t][t];
  // Diagonal is already divisibility-ordered with zeros trailing.
  for (const auto& d : diagonal_) {
    if (!d.fits_slong_p()) throw ValidationError("invariant factor exceeds 64 bits");
    invariants_.factors.push_back(d.get_si());
  }
}

std::vector<mpz_class> AbelianQuotient::coordinates(const std::vector<long long>& x) const {
  if (static_cast<int>(x.size()) != rank_) throw ValidationError("vector length does not match rank");
  std::vector<mpz_class> out;
  for (int j = 0; j < rank_; ++j) {
    if (diagonal_[j] == 1) continue;
    mpz_class y = 0;
    for (int i = 0; i < rank_; ++i)
      if (x[i] != 0) y += mpz_class(static_cast<long>(x[i])) * column_op_[i][j];
    if (diagonal_[j] != 0) {
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), y.get_mpz_t(), diagonal_[j].get_mpz_t());
      y = r;
    }
    out.push_back(y);
  }
  return out;
}

bool AbelianQuotient::is_zero(const std::vector<long long>& x) const {
  for (const auto& c : coordinates(x))
    if (c != 0) return false;
  return true;
}

AbelianInvariants smith_invariants(const IntMatrix& relations, int rank) {
  return AbelianQuotient(relations, rank).invariants();
}

}  // namespace qm
