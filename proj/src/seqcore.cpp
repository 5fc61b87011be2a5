#include "p24/seqcore.hpp"

#include <array>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <ostream>
#include <string>

#include "p24/errors.hpp"

namespace p24::seq {
namespace {

std::atomic<double> g_budget{4.0e9};

// Generalized pentagonal coefficients of prod_{n>=1} (1 - q^n) up to n_max.
std::vector<std::pair<long, int>> pentagonal_terms(long n_max) {
  std::vector<std::pair<long, int>> out;
  for (long j = 1;; ++j) {
    const long a = j * (3 * j - 1) / 2;
    const long b = j * (3 * j + 1) / 2;
    if (a > n_max) break;
    const int sign = (j % 2 == 1) ? -1 : 1;
    out.emplace_back(a, sign);
    if (b <= n_max) out.emplace_back(b, sign);
  }
  return out;
}

void extend_divisor_sum(SeqTable& t, long n_max) {
  const auto sig = sigma_table(n_max);
  const long start = t.n_max() + 1;
  t.values.reserve(static_cast<std::size_t>(n_max) + 1);
  ExactInt acc;
  for (long n = start; n <= n_max; ++n) {
    acc = 0;
    for (long m = 1; m <= n; ++m) {
      mpz_addmul_ui(acc.get_mpz_t(), t.values[static_cast<std::size_t>(n - m)].get_mpz_t(),
                    sig[static_cast<std::size_t>(m)]);
    }
    mpz_mul_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(t.colors));
    mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(n));
    t.values.push_back(acc);
  }
}

void extend_pentagonal(SeqTable& t, long n_max) {
  const auto pent = pentagonal_terms(n_max);
  const long start = t.n_max() + 1;
  const unsigned long km1 = static_cast<unsigned long>(t.colors - 1);
  t.values.reserve(static_cast<std::size_t>(n_max) + 1);
  ExactInt acc;
  for (long n = start; n <= n_max; ++n) {
    acc = 0;
    for (const auto& [j, c] : pent) {
      if (j > n) break;
      const unsigned long w = static_cast<unsigned long>(n) + km1 * static_cast<unsigned long>(j);
      const mpz_srcptr prev = t.values[static_cast<std::size_t>(n - j)].get_mpz_t();
      // -c_j * w * p(n-j)
      if (c < 0) {
        mpz_addmul_ui(acc.get_mpz_t(), prev, w);
      } else {
        mpz_submul_ui(acc.get_mpz_t(), prev, w);
      }
    }
    mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(n));
    t.values.push_back(acc);
  }
}

void write_u32(std::ostream& out, std::uint32_t v) {
  std::array<unsigned char, 4> b{};
  for (int i = 0; i < 4; ++i) b[static_cast<std::size_t>(i)] = static_cast<unsigned char>(v >> (8 * i));
  out.write(reinterpret_cast<const char*>(b.data()), 4);
}

void write_u64(std::ostream& out, std::uint64_t v) {
  std::array<unsigned char, 8> b{};
  for (int i = 0; i < 8; ++i) b[static_cast<std::size_t>(i)] = static_cast<unsigned char>(v >> (8 * i));
  out.write(reinterpret_cast<const char*>(b.data()), 8);
}

std::uint64_t read_le(std::istream& in, int bytes) {
  std::array<unsigned char, 8> b{};
  in.read(reinterpret_cast<char*>(b.data()), bytes);
  if (!in) throw Error("sequence cache: truncated file");
  std::uint64_t v = 0;
  for (int i = bytes - 1; i >= 0; --i) v = (v << 8) | b[static_cast<std::size_t>(i)];
  return v;
}

constexpr char kMagic[8] = {'P', '2', '4', 'S', 'E', 'Q', '\0', '\0'};

}  // namespace

ExactInt sigma(long n) {
  if (n < 1) throw DomainError("sigma requires n >= 1");
  ExactInt s = 0;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      s += d;
      if (d != n / d) s += n / d;
    }
  }
  return s;
}

std::vector<unsigned long> sigma_table(long n_max) {
  std::vector<unsigned long> s(static_cast<std::size_t>(std::max(n_max, 0L)) + 1, 0);
  for (long d = 1; d <= n_max; ++d) {
    for (long m = d; m <= n_max; m += d) s[static_cast<std::size_t>(m)] += static_cast<unsigned long>(d);
  }
  return s;
}

SeqTable make_table(int colors) {
  if (colors < 1) throw DomainError("number of colors must be positive");
  SeqTable t;
  t.colors = colors;
  return t;
}

double estimated_table_bytes(int colors, long n_max) {
  // log p_k(n) ~ pi sqrt(2kn/3); the sum over entries is ~ (2/3) n_max * bits(n_max).
  const double n = static_cast<double>(std::max(n_max, 1L));
  const double bits = M_PI * std::sqrt(2.0 * colors * n / 3.0) / std::log(2.0) + 64.0;
  return n * (bits / 8.0 + 32.0);
}

void set_memory_budget(double bytes) { g_budget.store(bytes); }

double memory_budget() { return g_budget.load(); }

SeqTable extend_table(SeqTable table, long n_max, TableMethod method) {
  if (n_max < 0) throw RangeError("n_max must be nonnegative");
  if (table.values.empty()) table.values.emplace_back(1);
  if (n_max <= table.n_max()) return table;
  if (estimated_table_bytes(table.colors, n_max) > memory_budget()) {
    throw ResourceError("sequence table up to n = " + std::to_string(n_max) + " exceeds the memory budget");
  }
  if (method == TableMethod::DivisorSum) {
    extend_divisor_sum(table, n_max);
  } else {
    extend_pentagonal(table, n_max);
  }
  return table;
}

std::vector<ExactInt> convolution_oracle(int colors, long n_max, long budget) {
  if (colors < 1) throw DomainError("number of colors must be positive");
  if (n_max < 0) throw RangeError("n_max must be nonnegative");
  if (n_max > budget) throw ResourceError("convolution oracle budget exceeded");
  std::vector<ExactInt> f(static_cast<std::size_t>(n_max) + 1, ExactInt(0));
  f[0] = 1;
  for (long part = 1; part <= n_max; ++part) {
    for (int c = 0; c < colors; ++c) {
      // multiply by 1/(1 - q^part)
      for (long i = part; i <= n_max; ++i) {
        f[static_cast<std::size_t>(i)] += f[static_cast<std::size_t>(i - part)];
      }
    }
  }
  return f;
}

void save_cache(const SeqTable& table, const std::filesystem::path& path) {
  const auto tmp = std::filesystem::path(path.string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write sequence cache " + tmp.string());
    out.write(kMagic, sizeof kMagic);
    write_u32(out, kCacheFormatVersion);
    write_u32(out, static_cast<std::uint32_t>(table.colors));
    write_u64(out, static_cast<std::uint64_t>(table.n_max()));
    std::vector<std::uint64_t> limbs;
    for (const auto& v : table.values) {
      const std::size_t count = (mpz_sizeinbase(v.get_mpz_t(), 2) + 63) / 64;
      limbs.assign(count, 0);
      std::size_t written = 0;
      mpz_export(limbs.data(), &written, -1, sizeof(std::uint64_t), 0, 0, v.get_mpz_t());
      write_u32(out, static_cast<std::uint32_t>(written));
      for (std::size_t i = 0; i < written; ++i) write_u64(out, limbs[i]);
    }
    if (!out) throw Error("failed writing sequence cache " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

SeqTable load_cache(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open sequence cache " + path.string());
  char magic[8];
  in.read(magic, sizeof magic);
  if (!in || std::memcmp(magic, kMagic, sizeof magic) != 0) throw Error("sequence cache: bad magic");
  const auto version = static_cast<std::uint32_t>(read_le(in, 4));
  if (version != kCacheFormatVersion) throw Error("sequence cache: unsupported format version");
  SeqTable t = make_table(static_cast<int>(read_le(in, 4)));
  const auto n_max = read_le(in, 8);
  t.values.clear();
  t.values.reserve(n_max + 1);
  std::vector<std::uint64_t> limbs;
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    const auto count = static_cast<std::size_t>(read_le(in, 4));
    limbs.resize(count);
    for (std::size_t i = 0; i < count; ++i) limbs[i] = read_le(in, 8);
    ExactInt v;
    mpz_import(v.get_mpz_t(), count, -1, sizeof(std::uint64_t), 0, 0, limbs.data());
    t.values.push_back(std::move(v));
  }
  if (t.values.empty() || t.values[0] != 1) throw Error("sequence cache: first entry must be 1");
  return t;
}

void write_csv(const SeqTable& table, std::ostream& out, long lo, long hi) {
  if (lo < 0 || hi > table.n_max() || lo > hi) throw RangeError("CSV range outside the table");
  out << "n,p" << table.colors << '\n';
  for (long n = lo; n <= hi; ++n) out << n << ',' << table[n].get_str() << '\n';
}

SequenceStore::SequenceStore(int colors, std::optional<std::filesystem::path> cache_file, TableMethod method)
    : colors_(colors), method_(method), cache_file_(std::move(cache_file)) {
  SeqTable t = make_table(colors);
  if (cache_file_ && std::filesystem::exists(*cache_file_)) {
    try {
      SeqTable loaded = load_cache(*cache_file_);
      if (loaded.colors == colors) t = std::move(loaded);
    } catch (const Error&) {
      // A damaged cache is recomputed from scratch.
    }
  }
  table_ = std::make_shared<const SeqTable>(std::move(t));
}

std::shared_ptr<const SeqTable> SequenceStore::ensure(long n_max) {
  {
    std::shared_lock lock(mutex_);
    if (table_->n_max() >= n_max) return table_;
  }
  std::unique_lock lock(mutex_);
  if (table_->n_max() >= n_max) return table_;
  auto next = std::make_shared<const SeqTable>(extend_table(*table_, n_max, method_));
  table_ = next;
  return next;
}

std::shared_ptr<const SeqTable> SequenceStore::snapshot() const {
  std::shared_lock lock(mutex_);
  return table_;
}

ExactInt SequenceStore::at(long n) {
  if (n < 0) throw RangeError("negative index");
  return (*ensure(n))[n];
}

void SequenceStore::checkpoint() const {
  if (!cache_file_) return;
  auto t = snapshot();
  std::error_code ec;
  std::filesystem::create_directories(cache_file_->parent_path(), ec);
  save_cache(*t, *cache_file_);
}

std::optional<std::filesystem::path> cache_path_from_env(int colors) {
  const char* dir = std::getenv("P24_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return std::filesystem::path(dir) / ("p24_k" + std::to_string(colors) + ".bin");
}

SequenceStore& p24_store() {
  static SequenceStore store(24, cache_path_from_env(24));
  return store;
}

}  // namespace p24::seq
