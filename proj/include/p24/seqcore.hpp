#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <vector>

#include "p24/numerics.hpp"

namespace p24::seq {

// sigma(n): sum of the positive divisors of n.
ExactInt sigma(long n);

// sigma(0..n_max) by divisor sieve; entry 0 is unused (0).
std::vector<unsigned long> sigma_table(long n_max);

// Exact k-colored partition numbers p_k(0..n_max()).
struct SeqTable {
  int colors = 24;
  std::vector<ExactInt> values{ExactInt(1)};

  long n_max() const { return static_cast<long>(values.size()) - 1; }
  const ExactInt& operator[](long n) const { return values[static_cast<std::size_t>(n)]; }
};

enum class TableMethod {
  // n p_k(n) = k sum_{m=1}^{n} sigma(m) p_k(n-m)
  DivisorSum,
  // Sparse route through the pentagonal expansion of prod(1-q^n):
  // n p_k(n) = -sum_{j>=1} c_j (n + (k-1) j) p_k(n-j), c_j in {0,+-1}.
  Pentagonal,
};

SeqTable make_table(int colors);

// Rough footprint in bytes of a table holding p_k(0..n_max).
double estimated_table_bytes(int colors, long n_max);
void set_memory_budget(double bytes);
double memory_budget();

// Returns a table covering at least 0..n_max. Existing entries are kept as is.
// Throws ResourceError when the estimated footprint exceeds the budget.
SeqTable extend_table(SeqTable table, long n_max, TableMethod method = TableMethod::DivisorSum);

// Independent oracle: multiplies out prod_{n<=n_max} (1-q^n)^{-k} as k-fold
// repeated geometric-series convolution. Shares no code with extend_table.
std::vector<ExactInt> convolution_oracle(int colors, long n_max, long budget = 5000);

// Binary cache: "P24SEQ\0\0", u32 format_version, u32 k, u64 n_max, then per
// entry u32 limb count followed by little-endian 64-bit magnitude limbs.
inline constexpr std::uint32_t kCacheFormatVersion = 1;
void save_cache(const SeqTable& table, const std::filesystem::path& path);
SeqTable load_cache(const std::filesystem::path& path);

// "n,p<k>" header then one "n,value" row per entry in [lo, hi].
void write_csv(const SeqTable& table, std::ostream& out, long lo, long hi);

// Shared append-only table. Extension is exclusive; readers receive immutable
// snapshots and never observe a partially written entry.
class SequenceStore {
 public:
  explicit SequenceStore(int colors, std::optional<std::filesystem::path> cache_file = std::nullopt,
                         TableMethod method = TableMethod::DivisorSum);

  std::shared_ptr<const SeqTable> ensure(long n_max);
  std::shared_ptr<const SeqTable> snapshot() const;
  ExactInt at(long n);
  int colors() const { return colors_; }
  // Writes the current table to the cache file, if one is configured.
  void checkpoint() const;

 private:
  int colors_;
  TableMethod method_;
  std::optional<std::filesystem::path> cache_file_;
  mutable std::shared_mutex mutex_;
  std::shared_ptr<const SeqTable> table_;
};

// Process-wide store for p_24. Uses $P24_CACHE_DIR/p24_k24.bin when that
// variable is set.
SequenceStore& p24_store();
std::optional<std::filesystem::path> cache_path_from_env(int colors);

}  // namespace p24::seq
