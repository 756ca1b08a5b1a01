#include "padic_hyper/pgamma.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <system_error>
#include <thread>

#include <unistd.h>

#include "padic_hyper/error.hpp"
#include "padic_hyper/modarith.hpp"

namespace phyper {
namespace {

constexpr char kMagic[] = "PGAM1\n";

uint64_t residue_mod(const FpRational& x, uint64_t m, uint32_t p) {
  if (!in_zp(x, p)) fail(ErrorCode::kDomain, x.str() + " is not in Z_" + std::to_string(p));
  uint64_t num = reduce(x.num(), m);
  uint64_t den = *inv_mod(reduce(x.den(), m), m);
  return mul_mod(num, den, m);
}

}  // namespace

GammaTable GammaTable::build(const PadicContext& ctx, uint64_t max_entries) {
  ctx.validate();
  uint64_t m = ctx.modulus();
  if (m > max_entries || m > UINT32_MAX)
    fail(ErrorCode::kBudget, "gamma table of " + std::to_string(m) + " entries exceeds budget " +
                                 std::to_string(max_entries) + "; lower p or N");
  GammaTable t;
  t.ctx_ = ctx;
  t.table_.assign(m, 1);
  uint64_t acc = 1;
  for (uint64_t k = 1; k + 1 < m; ++k) {
    if (k % ctx.p != 0) acc = mul_mod(acc, k, m);
    t.table_[k + 1] = static_cast<uint32_t>(acc);
  }
  return t;
}

std::filesystem::path GammaTable::cache_file(const std::filesystem::path& dir, const PadicContext& ctx) {
  return dir / ("pgam-" + std::to_string(ctx.p) + "-" + std::to_string(ctx.N) + ".bin");
}

int GammaTable::residue_width(const PadicContext& ctx) {
  uint64_t top = ctx.modulus() - 1;
  int w = 1;
  while (w < 8 && (top >> (8 * w)) != 0) ++w;
  return w;
}

void GammaTable::write(std::ostream& out) const {
  out << kMagic << ctx_.p << ' ' << ctx_.N << '\n';
  int w = residue_width(ctx_);
  std::string buf(table_.size() * w, '\0');
  size_t pos = 0;
  for (uint32_t v : table_)
    for (int b = 0; b < w; ++b) buf[pos++] = static_cast<char>((static_cast<uint64_t>(v) >> (8 * b)) & 0xff);
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
}

std::optional<GammaTable> GammaTable::read(std::istream& in, const PadicContext& ctx) {
  std::string magic(sizeof(kMagic) - 1, '\0');
  if (!in.read(magic.data(), static_cast<std::streamsize>(magic.size())) || magic != kMagic) return std::nullopt;
  std::string line;
  if (!std::getline(in, line)) return std::nullopt;
  std::istringstream hdr(line);
  uint64_t p = 0;
  int n = 0;
  if (!(hdr >> p >> n) || p != ctx.p || n != ctx.N) return std::nullopt;
  uint64_t m = ctx.modulus();
  int w = residue_width(ctx);
  std::string buf(m * w, '\0');
  if (!in.read(buf.data(), static_cast<std::streamsize>(buf.size()))) return std::nullopt;
  if (in.peek() != std::char_traits<char>::eof()) return std::nullopt;
  GammaTable t;
  t.ctx_ = ctx;
  t.table_.resize(m);
  size_t pos = 0;
  for (uint64_t k = 0; k < m; ++k) {
    uint64_t v = 0;
    for (int b = 0; b < w; ++b) v |= static_cast<uint64_t>(static_cast<unsigned char>(buf[pos++])) << (8 * b);
    if (v >= m) return std::nullopt;
    t.table_[k] = static_cast<uint32_t>(v);
  }
  // Cheap consistency probe on the recurrence at both ends.
  if (t.table_[0] != 1 || (m > 1 && t.table_[1] != 1)) return std::nullopt;
  for (uint64_t k : {uint64_t{2}, m / 2, m - 1}) {
    if (k < 2 || k >= m) continue;
    uint64_t want = (k - 1) % ctx.p ? mul_mod(t.table_[k - 1], k - 1, m) : t.table_[k - 1];
    if (t.table_[k] != want) return std::nullopt;
  }
  return t;
}

GammaTable GammaTable::load_or_build(const PadicContext& ctx, const std::filesystem::path& cache_dir,
                                     uint64_t max_entries) {
  ctx.validate();
  if (ctx.modulus() > max_entries)
    fail(ErrorCode::kBudget, "gamma table of " + std::to_string(ctx.modulus()) + " entries exceeds budget " +
                                 std::to_string(max_entries) + "; lower p or N");
  auto file = cache_file(cache_dir, ctx);
  {
    std::ifstream in(file, std::ios::binary);
    if (in) {
      if (auto t = read(in, ctx)) return *t;
    }
  }
  GammaTable t = build(ctx, max_entries);
  std::error_code ec;
  std::filesystem::create_directories(cache_dir, ec);
  if (ec) return t;
  auto tmp = file;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return t;
    t.write(out);
    if (!out) {
      out.close();
      std::filesystem::remove(tmp, ec);
      return t;
    }
  }
  std::filesystem::rename(tmp, file, ec);
  if (ec) std::filesystem::remove(tmp, ec);
  return t;
}

uint64_t GammaTable::gamma_int(uint64_t k) const {
  uint64_t m = table_.size();
  k %= m;
  if (k == 0) return 1 % m;
  uint64_t v = table_[k];
  return (k & 1) ? neg_mod(v, m) : v;
}

uint64_t GammaTable::gamma_residue(const FpRational& x) const {
  return gamma_int(residue_mod(x, table_.size(), ctx_.p));
}

PadicNum GammaTable::gamma_at(const FpRational& x) const {
  return PadicNum::from_residue(gamma_residue(x), ctx_.N, 0, ctx_);
}

FracState frac_floor(const Rational& x) { return FracState{x, x.frac(), x.floor()}; }

int reflection_sign(const FpRational& x, uint32_t p) {
  uint64_t x0 = residue_mod(x, p, p);
  if (x0 == 0) x0 = p;
  return (x0 & 1) ? -1 : 1;
}

}  // namespace phyper
