#include <doctest.h>

#include <qkp/qsim/kernels.hpp>
#include <qkp/random.hpp>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

using namespace qkp;
using namespace qkp::qsim;

namespace {

// Reference implementations built on per-index gathers, structurally unlike
// the stride loops in the kernels under test.
std::vector<c64> ref_apply_1q(const std::vector<c64>& in, int qubit, const c64* m) {
  std::vector<c64> out(in.size());
  const std::size_t bit = std::size_t{1} << qubit;
  for (std::size_t x = 0; x < in.size(); ++x) {
    const int b = (x >> qubit) & 1;
    out[x] = m[b * 2 + 0] * in[x & ~bit] + m[b * 2 + 1] * in[x | bit];
  }
  return out;
}

std::vector<c64> ref_apply_2q(const std::vector<c64>& in, int q0, int q1, const c64* m) {
  std::vector<c64> out(in.size());
  const std::size_t b0 = std::size_t{1} << q0;
  const std::size_t b1 = std::size_t{1} << q1;
  for (std::size_t x = 0; x < in.size(); ++x) {
    const int l = static_cast<int>((x >> q0) & 1) + 2 * static_cast<int>((x >> q1) & 1);
    const std::size_t base = x & ~b0 & ~b1;
    c64 acc = 0.0;
    for (int lp = 0; lp < 4; ++lp) {
      std::size_t src = base;
      if (lp & 1) src |= b0;
      if (lp & 2) src |= b1;
      acc += m[l * 4 + lp] * in[src];
    }
    out[x] = acc;
  }
  return out;
}

std::vector<c64> random_amps(RandomStream& rng, std::size_t size) {
  std::vector<c64> amps(size);
  for (auto& a : amps)
    a = c64{2.0 * rng.next_double() - 1.0, 2.0 * rng.next_double() - 1.0};
  return amps;
}

void random_matrix(RandomStream& rng, c64* m, int dim) {
  for (int i = 0; i < dim * dim; ++i)
    m[i] = c64{2.0 * rng.next_double() - 1.0, 2.0 * rng.next_double() - 1.0};
}

double max_abs_diff(const std::vector<c64>& a, const std::vector<c64>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace

TEST_CASE("kernel tables are registered") {
  auto tables = compiled_kernels();
  REQUIRE(!tables.empty());
  CHECK(std::string(tables[0]->name) == "scalar");
  // active_kernels returns one of the compiled tables.
  const KernelTable& active = active_kernels();
  bool found = false;
  for (const auto* t : tables)
    if (t == &active) found = true;
  CHECK(found);
}

TEST_CASE("one qubit kernels match the reference on every qubit position") {
  RandomStream rng(101);
  for (const KernelTable* table : compiled_kernels()) {
    CAPTURE(table->name);
    for (int n = 1; n <= 8; ++n) {
      const std::size_t size = std::size_t{1} << n;
      for (int q = 0; q < n; ++q) {
        auto amps = random_amps(rng, size);
        c64 m[4];
        random_matrix(rng, m, 2);
        auto want = ref_apply_1q(amps, q, m);
        auto got = amps;
        table->apply_1q(got.data(), size, q, m);
        CHECK(max_abs_diff(got, want) < 1e-13);
      }
    }
  }
}

TEST_CASE("two qubit kernels match the reference on every qubit pair") {
  RandomStream rng(202);
  for (const KernelTable* table : compiled_kernels()) {
    CAPTURE(table->name);
    for (int n = 2; n <= 7; ++n) {
      const std::size_t size = std::size_t{1} << n;
      for (int q0 = 0; q0 < n; ++q0) {
        for (int q1 = 0; q1 < n; ++q1) {
          if (q0 == q1) continue;
          auto amps = random_amps(rng, size);
          c64 m[16];
          random_matrix(rng, m, 4);
          auto want = ref_apply_2q(amps, q0, q1, m);
          auto got = amps;
          table->apply_2q(got.data(), size, q0, q1, m);
          CAPTURE(n);
          CAPTURE(q0);
          CAPTURE(q1);
          CHECK(max_abs_diff(got, want) < 1e-13);
        }
      }
    }
  }
}

TEST_CASE("two qubit local basis ordering is bit q0 plus twice bit q1") {
  // Permutation matrix sending l=0 to l=1 must move amplitude mass from the
  // q0 bit, not the q1 bit. Pin the convention against transposition bugs.
  for (const KernelTable* table : compiled_kernels()) {
    CAPTURE(table->name);
    std::vector<c64> amps(8, 0.0);
    amps[0] = 1.0;  // |000>
    c64 m[16] = {};
    m[1 * 4 + 0] = 1.0;  // send l=0 to l=1
    m[0 * 4 + 1] = 1.0;
    m[2 * 4 + 3] = 1.0;
    m[3 * 4 + 2] = 1.0;
    auto got = amps;
    table->apply_2q(got.data(), 8, /*q0=*/2, /*q1=*/0, m);
    // l=1 means bit q0=2 set: amplitude must land on index 4.
    CHECK(std::abs(got[4] - c64{1.0, 0.0}) < 1e-15);
    CHECK(std::abs(got[0]) < 1e-15);
  }
}

TEST_CASE("phase kernels multiply only the set bit") {
  RandomStream rng(303);
  const c64 phase = std::polar(1.0, 0.7321);
  for (const KernelTable* table : compiled_kernels()) {
    CAPTURE(table->name);
    for (int n = 1; n <= 8; ++n) {
      const std::size_t size = std::size_t{1} << n;
      for (int q = 0; q < n; ++q) {
        auto amps = random_amps(rng, size);
        auto got = amps;
        table->apply_phase_bit(got.data(), size, q, phase);
        for (std::size_t x = 0; x < size; ++x) {
          c64 want = (x >> q & 1) ? amps[x] * phase : amps[x];
          CHECK(std::abs(got[x] - want) < 1e-14);
        }
      }
    }
  }
}

TEST_CASE("expectation and probabilities match direct sums") {
  RandomStream rng(404);
  for (const KernelTable* table : compiled_kernels()) {
    CAPTURE(table->name);
    for (int n = 1; n <= 8; ++n) {
      const std::size_t size = std::size_t{1} << n;
      auto amps = random_amps(rng, size);
      std::vector<double> f(size);
      for (auto& v : f) v = 200.0 * rng.next_double() - 100.0;

      double want = 0.0;
      for (std::size_t x = 0; x < size; ++x) want += std::norm(amps[x]) * f[x];
      double got = table->expectation(amps.data(), size, f.data());
      CHECK(std::abs(got - want) < 1e-9);

      std::vector<double> probs(size);
      table->probabilities(amps.data(), size, probs.data());
      for (std::size_t x = 0; x < size; ++x)
        CHECK(std::abs(probs[x] - std::norm(amps[x])) < 1e-14);
    }
  }
}

TEST_CASE("all compiled tables agree on a larger state") {
  auto tables = compiled_kernels();
  if (tables.size() < 2) return;  // scalar only on this host
  RandomStream rng(505);
  const int n = 12;
  const std::size_t size = std::size_t{1} << n;
  auto amps = random_amps(rng, size);

  c64 m1[4], m2[16];
  random_matrix(rng, m1, 2);
  random_matrix(rng, m2, 4);

  auto base = amps;
  tables[0]->apply_1q(base.data(), size, 5, m1);
  tables[0]->apply_2q(base.data(), size, 9, 2, m2);
  tables[0]->apply_phase_bit(base.data(), size, 0, std::polar(1.0, -1.1));

  for (std::size_t t = 1; t < tables.size(); ++t) {
    CAPTURE(tables[t]->name);
    auto other = amps;
    tables[t]->apply_1q(other.data(), size, 5, m1);
    tables[t]->apply_2q(other.data(), size, 9, 2, m2);
    tables[t]->apply_phase_bit(other.data(), size, 0, std::polar(1.0, -1.1));
    CHECK(max_abs_diff(other, base) < 1e-12);
  }
}

TEST_CASE("environment variable forces the scalar table") {
  // active_kernels caches its pick, so exercise pick logic via names instead:
  // the scalar table must always be available and first.
  auto tables = compiled_kernels();
  CHECK(std::string(tables[0]->name) == "scalar");
#if defined(QKP_HAVE_AVX2_TU)
  if (avx2_supported()) {
    bool has_avx2 = false;
    for (const auto* t : tables)
      if (std::string(t->name) == "avx2") has_avx2 = true;
    CHECK(has_avx2);
  }
#endif
}
