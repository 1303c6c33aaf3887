#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sptri/exact_linalg.hpp"
#include "sptri/matrix.hpp"
#include "sptri/modular.hpp"
#include "sptri/random.hpp"
#include "sptri/symplectic.hpp"
#include "sptri/trivector.hpp"

namespace sptri
{

/// Column k is rho(U_k) theta for the k-th canonical sp basis element.
/// Rows are the output coordinates, so the same matrix read row by row is
/// the linear system whose solutions form the stabilizer algebra.
struct DistributionMatrix
{
  int n;
  Trivector point;
  SparseMatQ matrix;
};

DistributionMatrix distribution_matrix(Trivector const &theta, Execution exec = Execution::parallel);

enum class RankMethod
{
  exact,
  modular,
};

std::string to_string(RankMethod m);
RankMethod parse_rank_method(std::string const &name);

struct RankOptions
{
  RankMethod method = RankMethod::exact;
  std::uint64_t prime = kDefaultPrime;
  /// Also compute the modular rank alongside an exact rank.
  bool cross_check = true;
  /// Provenance of the point, recorded verbatim.
  std::string source = "given";
  std::optional<std::uint64_t> seed;
  std::optional<int> trial;
};

struct RankCertificate
{
  int n = 0;
  Trivector point{2};
  RankMethod method = RankMethod::exact;
  std::string source;
  std::size_t rank = 0;
  std::size_t kernel_dim = 0;
  /// Modular rank lower-bounds the exact rank; set for exact
  /// certificates with cross-checking and for modular ones.
  bool lower_bound = false;
  std::optional<std::uint64_t> prime;
  std::optional<std::size_t> modular_rank;
  std::vector<std::uint64_t> rejected_primes;
  std::optional<std::uint64_t> seed;
  std::optional<int> trial;
  std::string tool_version;
};

RankCertificate rank_at(Trivector const &theta, RankOptions const &options = {});

/// Witness point with y_abc = a + b + c; requires n >= 2.
Trivector theta0(int n);

/// Independent uniform integer coordinates in [-bound, bound].
Trivector random_trivector(int n, int bound, Rng &rng);

/// Point of trial `trial` for dimension n in a run seeded with `seed`.
Trivector sample_point(int n, int bound, std::uint64_t seed, int trial);

/// Lie algebra of the stabilizer: kernel basis of the distribution matrix,
/// as coefficient vectors and re-assembled as matrices.
struct StabilizerKernel
{
  int n = 0;
  std::vector<RationalVector> coefficients;
  std::vector<SpElement> elements;

  std::size_t dimension() const { return coefficients.size(); }
};

StabilizerKernel stabilizer_kernel(Trivector const &theta);

struct GenericRankReport
{
  int n = 0;
  int trials = 0;
  int bound = 0;
  std::uint64_t seed = 0;
  RankMethod method = RankMethod::exact;
  std::vector<RankCertificate> samples;
  /// Certificate at theta0; absent for n = 1.
  std::optional<RankCertificate> theta0;
  std::size_t max_rank = 0;
  std::string witness_label;
  Trivector witness{2};
  long long invariant_count = 0;
};

GenericRankReport generic_rank(int n, int trials, int bound, std::uint64_t seed,
                               RankOptions const &base = {});

/// Closed form: 0 for n <= 2, 2 for n = 3, n(4n^2 - 12n - 1)/3 for n >= 4.
long long invariant_count_formula(int n);

struct VerificationRow
{
  int n = 0;
  std::size_t lambda3 = 0;
  std::size_t sp = 0;
  std::size_t generic_rank = 0;
  long long computed = 0;
  long long formula = 0;
  bool pass = false;
  GenericRankReport report;
};

struct VerificationReport
{
  int n_lo = 0;
  int n_hi = 0;
  int trials = 0;
  int bound = 0;
  std::uint64_t seed = 0;
  std::vector<VerificationRow> rows;
  bool all_pass = false;
};

inline constexpr int kDefaultTrials = 5;
inline constexpr int kDefaultSamplerBound = 100;

VerificationReport verify_range(int n_lo, int n_hi, int trials, std::uint64_t seed,
                                int bound = kDefaultSamplerBound, RankOptions const &base = {});

} // namespace sptri
