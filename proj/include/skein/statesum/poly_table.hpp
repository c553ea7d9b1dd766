#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <vector>

#include "skein/exactalg/poly_zw.hpp"

namespace skein {

/// Fits P_k from the order-k series identity, given P_0..P_{k-1} (index = degree).
///
/// Unknowns are all coefficients of total degree <= k. Rows come from integer points
/// (zeta, iota, mu) with zeta + iota >= k, mu <= min(k, 2); the fit is then checked on
/// held-out points. Throws SingularSystem if the system has no unique solution and
/// TheoremViolation if a held-out point disagrees.
PolyZW derive_P(int k, const std::vector<PolyZW>& lower);

/// Derived P_k cache, optionally persisted as JSON
/// {"k": [[i, j, num, den], ...]} with i the z-degree and j the w-degree.
class DeformationPolyTable {
 public:
  /// In-memory only when `path` is empty; otherwise loads the file if present.
  explicit DeformationPolyTable(std::filesystem::path path = {});

  /// P_k, deriving (and persisting) any missing lower entries first.
  PolyZW get(int k);
  /// P_0..P_k.
  std::vector<PolyZW> up_to(int k);

  const std::filesystem::path& path() const { return path_; }
  std::map<int, PolyZW> entries() const;

  /// Path from $SKEIN_POLY_TABLE, else ./skein_poly_table.json.
  static std::filesystem::path default_path();

 private:
  void load();
  void save() const;

  std::filesystem::path path_;
  mutable std::mutex mutex_;
  std::map<int, PolyZW> table_;
};

/// Process-wide in-memory table used by the library when no table is passed.
DeformationPolyTable& shared_poly_table();

}  // namespace skein
