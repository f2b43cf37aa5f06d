#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace skewfib {

// q = 2^k (2m+1) together with the Hurwitz-Radon value
//
//   rho(q) = 2k+1  (k = 0 mod 4),   2k  (k = 1,2 mod 4),   2k+2  (k = 3 mod 4).
struct RhoDecomposition {
  std::int64_t q = 0;
  std::int64_t k = 0;  // 2-adic valuation of q
  std::int64_t m = 0;  // odd part of q is 2m+1
  std::int64_t rho = 0;
};

/// Decomposes q >= 1; rejects q <= 0.
RhoDecomposition rho_decompose(std::int64_t q);

std::int64_t rho(std::int64_t q);

// Fiber dimension p, ambient dimension n, base dimension q = n - p.
struct FibrationDims {
  std::int64_t p = 0;
  std::int64_t n = 0;
  std::int64_t q = 0;
};

/// R^n carries a fibration by pairwise skew p-dimensional affine subspaces
/// iff p <= rho(n-p) - 1. Requires 0 <= p < n.
bool exists_fibration(std::int64_t p, std::int64_t n);

/// All admissible p >= 1 for ambient dimension n, ascending (may be empty).
std::vector<std::int64_t> fiber_dims(std::int64_t n);

/// Largest admissible p >= 0 (p = 0 is always admissible: points).
std::int64_t max_fiber_dim(std::int64_t n);

/// Admissible and (p+1, n+1) is not.
bool is_dominant(std::int64_t p, std::int64_t n);

/// Dominant with p maximal among admissible fiber dimensions for this n.
bool is_doubly_dominant(std::int64_t p, std::int64_t n);

struct TableEntry {
  std::int64_t p = 0;
  bool dominant = false;
  bool doubly_dominant = false;
  bool operator==(const TableEntry&) const = default;
};

struct ExistenceTable {
  std::int64_t n_max = 0;
  std::vector<std::vector<TableEntry>> rows;  // rows[n-1], p ascending

  const std::vector<TableEntry>& row(std::int64_t n) const;
  std::vector<std::int64_t> fiber_dims_row(std::int64_t n) const;
};

ExistenceTable generate_table(std::int64_t n_max);

/// One line per n: "n<TAB>p_list" with p_list comma-separated ascending
/// (empty string for an empty row).
std::string table_to_tsv(const ExistenceTable& table);

/// {"n_max": int, "rows": {"<n>": [{"p":, "dominant":, "doubly_dominant":}]}}
std::string table_to_json(const ExistenceTable& table);

/// LaTeX array with one column per n >= 3, admissible p stacked descending
/// (first row holds the maximal chain), dominant entries in boldface.
std::string table_to_latex(const ExistenceTable& table);

// Exhaustive finite-range checks of the structural statements about the
// existence table. Each verdict is decided by brute evaluation of the
// criterion for every n <= n_max.
struct PropositionScan {
  std::int64_t n_max = 0;

  // p1 > p2 both admissible for n implies (p2, p1) admissible.
  bool nesting_ok = false;
  // (rho(2^k)-1, 2^k+rho(2^k)-1) is doubly dominant for every k in range.
  bool doubly_dominant_family_ok = false;
  // every doubly dominant (p, n) with n >= 8 has n - p = 0 mod 8.
  bool doubly_dominant_mod8_ok = false;
  // every n without admissible p >= 1 lies in {1,2,4,8} or is 0 mod 16.
  bool non_fibered_classified_ok = false;
  // p = q-1 admissible (p >= 0 allowed) exactly for n in {1,3,7,15}.
  bool full_fiber_dim_ok = false;

  std::vector<std::int64_t> non_fibered;              // n with empty fiber_dims
  std::vector<std::int64_t> full_fiber_dim_witnesses; // n admitting p = q-1

  bool all_ok() const {
    return nesting_ok && doubly_dominant_family_ok && doubly_dominant_mod8_ok &&
           non_fibered_classified_ok && full_fiber_dim_ok;
  }
};

PropositionScan scan_propositions(std::int64_t n_max);

}  // namespace skewfib
