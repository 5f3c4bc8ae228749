// Exit-gate checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "trigsum/trigsum.hpp"

using namespace trigsum;

namespace {

// Tolerances and time limits.
constexpr unsigned kOracleBits = 256;
constexpr unsigned kSweepToleranceBits = 128;  // |closed - oracle| < 2^-128
constexpr unsigned kSpectralToleranceBits = 100; // |Kf - spectral| < 2^-100
constexpr double kLimitResistor = 10.0;
constexpr double kLimitKirchhoff = 30.0;
constexpr double kLimitPolynomials = 5.0;
constexpr double kLimitSweep = 120.0;
constexpr double kLimitVerlinde = 30.0;
constexpr double kLimitScott = 30.0;
constexpr double kLimitResidue = 30.0;
constexpr double kLimitDiscrepancy = 30.0;

struct Check {
  std::string detail;
  bool ok = true;

  void expect(bool condition, const std::string &what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

bool close(const Rational &exact, const Float &value, unsigned bits) {
  PrecisionScope scope(Precision{kOracleBits});
  return abs(to_float(exact) - value) < pow2_neg(bits);
}

Float oracle(SumFamily f, std::int64_t N, std::int64_t l = 0, std::int64_t m = 0) {
  return oracle_trig_sum(SumSpec{f, N, l, m}, Precision{kOracleBits});
}

std::string at(std::int64_t N) { return "N=" + std::to_string(N); }

void resistor_fixtures(Check &c) {
  c.expect(corner_to_corner_2xN(2) == 1, "N=2 not 1");
  c.expect(corner_to_corner_2xN(3) == make_rational(7, 5), "N=3 not 7/5");
  c.expect(corner_to_corner_2xN(4) == make_rational(15, 8), "N=4 not 15/8");
  for (std::int64_t N = 2; N <= 12; ++N)
    c.expect(corner_to_corner_2xN(N) == laplacian_resistance(grid_graph(2, N), 0, 2 * N - 1),
             "Laplacian mismatch at " + at(N));
}

void kirchhoff_fixtures(Check &c) {
  c.expect(kirchhoff_2xN(2) == 5, "N=2 not 5");
  c.expect(kirchhoff_2xN(3) == make_rational(71, 5), "N=3 not 71/5");
  c.expect(kirchhoff_2xN(4) == make_rational(214, 7), "N=4 not 214/7");
  {
    PrecisionScope scope(Precision{kOracleBits});
    c.expect(to_decimal(to_float(kirchhoff_2xN(5)), 10) == "56.10047847", "N=5 not 56.10047847");
  }
  for (std::int64_t N = 2; N <= 10; ++N)
    c.expect(kirchhoff_2xN(N) == kirchhoff_exact(grid_graph(2, N)), "pairwise mismatch at " + at(N));
  for (std::int64_t N = 2; N <= 32; ++N)
    c.expect(close(kirchhoff_2xN(N), kirchhoff_2xN_spectral(N, Precision{kOracleBits}), kSpectralToleranceBits),
             "spectral mismatch at " + at(N));
}

void polynomials(Check &c) {
  for (std::int64_t N = 2; N <= 40; ++N) {
    c.expect(t_m_sum(N, 1) == Rational(N * N - 1, 3), "T2 at " + at(N));
    c.expect(t_m_sum(N, 2) == Rational((N * N - 1) * (N * N + 11), 45), "T4 at " + at(N));
  }
  for (std::int64_t N = 4; N <= 40; N += 2) {
    const BigInt n2 = N * N;
    c.expect(t_m_twisted(N, 1) == Rational(BigInt(n2 + 2), BigInt(6)), "T2t at " + at(N));
    c.expect(t_m_twisted(N, 2) == Rational(BigInt(7 * n2 * n2 + 40 * n2 + 88), BigInt(360)), "T4t at " + at(N));
    c.expect(t_m_twisted(N, 3) ==
                 Rational(BigInt(31 * n2 * n2 * n2 + 294 * n2 * n2 + 1344 * n2 + 3056), BigInt(15120)),
             "T6t at " + at(N));
  }
}

void oracle_sweep(Check &c) {
  std::size_t count = 0;
  for (SumFamily f : all_families)
    for (const SumSpec &spec : admissible_grid(f, 20, 5)) {
      const VerificationReport r = verify(spec, Precision{kOracleBits});
      ++count;
      bool ok = !r.error;
      if (ok) {
        PrecisionScope scope(Precision{kOracleBits});
        ok = r.abs_error < pow2_neg(kSweepToleranceBits);
      }
      c.expect(ok, std::string(family_name(f)) + " N=" + std::to_string(spec.N) + " l=" + std::to_string(spec.l) +
                       " m=" + std::to_string(spec.m) + " " + r.reason);
    }
  if (c.ok)
    c.detail = std::to_string(count) + " specs";
}

void verlinde(Check &c) {
  for (std::int64_t k = 0; k <= 20; ++k) {
    const Rational a = Rational((k + 1) * (k + 2) * (k + 3), 6);
    c.expect(dim_untwisted(2, k) == a, "g=2 k=" + std::to_string(k));
    c.expect(dim_untwisted(3, k) == a * (a + 2 * (k + 2)) / 5, "g=3 k=" + std::to_string(k));
  }
  for (std::int64_t g = 2; g <= 6; ++g)
    for (std::int64_t k = 1; k <= 20; ++k) {
      bool ok = false;
      try {
        const Rational d = dim_untwisted(g, k);
        ok = is_integer(d) && d > 0;
      } catch (const error &) {
      }
      c.expect(ok, "not a positive integer at g=" + std::to_string(g) + " k=" + std::to_string(k));
    }
  const std::vector<double> angles{0.1, 0.2, 0.3, 0.4};
  for (std::int64_t k : {3, 4, 5}) {
    const GenfunReport r = genfun_check(k, 12, angles, Precision{kOracleBits});
    c.expect(r.passed && r.samples.size() == angles.size(), "generating function at k=" + std::to_string(k));
  }
}

void scott(Check &c) {
  for (std::int64_t N = 2; N <= 20; ++N) {
    c.expect(odd_inv_sin2_sum(N) == Rational(N * N, 2), "companion N^2/2 at " + at(N));
    c.expect(close(odd_inv_sin2_sum(N), oracle(SumFamily::OddInvSin2, N), kSweepToleranceBits),
             "companion N^2/2 oracle at " + at(N));
    for (std::int64_t l = 1; l <= N; ++l) {
      c.expect(scott_sum(N, l) == Rational(N * N, 2) - Rational(N * l), "closed form at " + at(N));
      c.expect(close(scott_sum(N, l), oracle(SumFamily::ScottCos, N, l), kSweepToleranceBits),
               "oracle at " + at(N) + " l=" + std::to_string(l));
      // sum (1 - cos((2n-1) l pi/N)) / (1 - cos((2n-1) pi/N)) = N^2/2 - (N^2/2 - N l)
      c.expect(scott_shift_sum(N, l) == odd_inv_sin2_sum(N) - scott_sum(N, l), "companion N l at " + at(N));
      c.expect(scott_shift_sum(N, l) == Rational(N * l), "companion N l value at " + at(N));
    }
  }
}

void residue_engine(Check &c) {
  for (std::int64_t n = 0; n <= 64; ++n)
    for (std::int64_t k = 0; k <= n; ++k)
      c.expect(binomial_by_residue(n, k) == binomial(n, k), "binomial n=" + std::to_string(n));
  for (std::int64_t l = 0; l <= 16; ++l) {
    LaurentSeries sum;
    for (std::int64_t j = -l; j <= l; ++j)
      sum += LaurentSeries::w(j);
    const LaurentSeries first = l == 0 ? LaurentSeries::constant(2) : LaurentSeries::w(-l) + LaurentSeries::w(l);
    c.expect(chebyshev_eval_at_node(ChebyshevKind::FirstNormalized, 2 * l) == first, "C_2l at l=" + std::to_string(l));
    c.expect(chebyshev_eval_at_node(ChebyshevKind::Second, 2 * l) == sum, "U_2l at l=" + std::to_string(l));
  }
  for (std::int64_t l = 1; l <= 12; ++l) {
    c.expect(cycle_first_residue(l) == sign_power(l) * Rational(l * (l - 1), 2), "first residue l=" + std::to_string(l));
    c.expect(cycle_second_residue(l) == sign_power(l + 1) * Rational(l), "second residue l=" + std::to_string(l));
  }
}

void discrepancies(Check &c) {
  // short form of T_4(l): last term 2l(N-l)/3, not 2(N-l)/3
  for (std::int64_t N = 3; N <= 12; ++N)
    for (std::int64_t l = 2; l < N; ++l) {
      const Rational head = Rational(l * l * (N - l) * (N - l), 3);
      const Float o = oracle(SumFamily::T4l, N, l);
      c.expect(t4_sum(N, l) == head + Rational(2 * l * (N - l), 3), "T4(l) corrected form at " + at(N));
      c.expect(close(head + Rational(2 * l * (N - l), 3), o, kSweepToleranceBits), "T4(l) oracle at " + at(N));
      c.expect(!close(head + Rational(2 * (N - l), 3), o, kSweepToleranceBits), "T4(l) form without the factor l matched");
    }
  // S_2 at argument a is -a, not -(2a-1) or -2a
  for (std::int64_t N = 3; N <= 16; ++N)
    for (std::int64_t a = 2; a < N; ++a) {
      if ((a + N) % 2 == 0)
        continue;
      const Float o = oracle(SumFamily::S2, N, a);
      c.expect(s2_sum(N, a) == -a && close(Rational(-a), o, kSweepToleranceBits), "S2 = -arg at " + at(N));
      const Rational literal = a % 2 != 0 ? Rational(-(2 * a - 1)) : Rational(-2 * a);
      c.expect(!close(literal, o, kSweepToleranceBits), "S2 reindexed value matched");
    }
  // the degree-6 twisted polynomial is T^t_6, not T^t_4
  for (std::int64_t N = 4; N <= 20; N += 2) {
    const BigInt n2 = N * N;
    const Rational poly(BigInt(31 * n2 * n2 * n2 + 294 * n2 * n2 + 1344 * n2 + 3056), BigInt(15120));
    c.expect(close(poly, oracle(SumFamily::TmTwisted, N, 0, 3), kSweepToleranceBits), "degree-6 vs T6t at " + at(N));
    c.expect(!close(poly, oracle(SumFamily::TmTwisted, N, 0, 2), kSweepToleranceBits), "degree-6 matched T4t");
  }
}

} // namespace

int main() {
  struct Criterion {
    const char *name;
    double limit_seconds;
    std::function<void(Check &)> body;
  };
  const std::vector<Criterion> criteria{
      {"1 resistor fixtures", kLimitResistor, resistor_fixtures},
      {"2 kirchhoff fixtures", kLimitKirchhoff, kirchhoff_fixtures},
      {"3 T-sum polynomials", kLimitPolynomials, polynomials},
      {"4 oracle sweep", kLimitSweep, oracle_sweep},
      {"5 verlinde", kLimitVerlinde, verlinde},
      {"6 scott fixture", kLimitScott, scott},
      {"7 residue engine", kLimitResidue, residue_engine},
      {"8 discrepancy checks", kLimitDiscrepancy, discrepancies},
  };
  int failures = 0;
  for (const auto &cr : criteria) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(c);
    } catch (const std::exception &e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.ok && seconds >= cr.limit_seconds) {
      c.ok = false;
      c.detail = "over the " + std::to_string(cr.limit_seconds) + " s limit";
    }
    if (!c.ok)
      ++failures;
    std::printf("%s %s (%.2f s)%s%s\n", c.ok ? "PASS" : "FAIL", cr.name, seconds, c.detail.empty() ? "" : ": ",
                c.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
