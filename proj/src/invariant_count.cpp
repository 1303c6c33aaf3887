#include "sptri/invariant_count.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "sptri/action.hpp"
#include "sptri/combinatorics.hpp"
#include "sptri/errors.hpp"
#include "sptri/version.hpp"

namespace sptri
{

DistributionMatrix distribution_matrix(Trivector const &theta, Execution exec)
{
  int const two_n = theta.two_n();
  int const n = two_n / 2;
  std::size_t const dim = sp_dim(n);
  TripleIndexer const index(two_n);

  // Coefficient rows of each transposed basis element, read off the slot
  // table: u_xa = U_k(a, x) is nonzero exactly where slot(a, x) is k.
  std::vector<CoefficientRows> rows(dim, CoefficientRows(two_n + 1));
  for (int x = 1; x <= two_n; ++x)
    for (int a = 1; a <= two_n; ++a) {
      SpSlot const s = sp_slot(n, a, x);
      rows[s.index][x].emplace_back(a, Rational(s.sign));
    }

  std::vector<std::vector<SparseMatQ::Entry>> columns(dim);
  bool const par = exec == Execution::parallel;
#pragma omp parallel for schedule(dynamic, 4) if (par)
  for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(dim); ++k) {
    std::vector<Rational> col(index.size());
    expanded_coefficient_act(rows[k], theta, index, col);
    for (std::size_t r = 0; r < col.size(); ++r)
      if (sgn(col[r]) != 0)
        columns[k].push_back({r, static_cast<std::size_t>(k), std::move(col[r])});
  }

#ifndef NDEBUG
  auto const basis = sp_basis(n);
  for (std::size_t k = 0; k < dim; ++k) {
    Trivector const check = infinitesimal_act(basis[k].matrix(), theta, ActionMethod::multilinear);
    Trivector got(two_n);
    for (auto const &e : columns[k])
      got[e.row] = e.value;
    if (!(got == check))
      throw Error("distribution column " + std::to_string(k) + " disagrees with the multilinear action");
  }
#endif

  std::vector<SparseMatQ::Entry> entries;
  for (auto &c : columns)
    std::move(c.begin(), c.end(), std::back_inserter(entries));
  return {n, theta, SparseMatQ(index.size(), dim, std::move(entries))};
}

std::string to_string(RankMethod m) { return m == RankMethod::exact ? "exact" : "modular"; }

RankMethod parse_rank_method(std::string const &name)
{
  if (name == "exact")
    return RankMethod::exact;
  if (name == "modular")
    return RankMethod::modular;
  throw ParseError("unknown rank method '" + name + "'");
}

namespace
{

// Modular rank, re-drawing the prime after each denominator collision.
std::size_t modular_rank_with_retry(SparseMatQ const &m, RankCertificate &cert, std::uint64_t prime)
{
  for (;;) {
    try {
      std::size_t const r = modular_rank(m, prime);
      cert.prime = prime;
      return r;
    } catch (PrimeCollision const &) {
      cert.rejected_primes.push_back(prime);
      prime = next_prime(prime);
    }
  }
}

} // namespace

RankCertificate rank_at(Trivector const &theta, RankOptions const &options)
{
  RankCertificate cert;
  cert.n = theta.n();
  cert.point = theta;
  cert.method = options.method;
  cert.source = options.source;
  cert.seed = options.seed;
  cert.trial = options.trial;
  cert.tool_version = kToolVersion;

  std::size_t const dim = sp_dim(cert.n);
  DistributionMatrix const d = distribution_matrix(theta);
  if (options.method == RankMethod::exact) {
    cert.rank = bareiss_rank(d.matrix);
    if (options.cross_check)
      cert.modular_rank = modular_rank_with_retry(d.matrix, cert, options.prime);
  } else {
    cert.modular_rank = modular_rank_with_retry(d.matrix, cert, options.prime);
    cert.rank = *cert.modular_rank;
    cert.lower_bound = true;
  }
  cert.kernel_dim = dim - cert.rank;
  return cert;
}

Trivector theta0(int n)
{
  if (n < 2)
    throw InvalidDimension("theta0 needs n >= 2, got " + std::to_string(n));
  Trivector t(2 * n);
  std::size_t k = 0;
  for (auto const &[a, b, c] : enumerate_triples(2 * n))
    t[k++] = a + b + c;
  return t;
}

Trivector random_trivector(int n, int bound, Rng &rng)
{
  check_half_n(n);
  if (bound < 0)
    throw DomainError("sampler bound must be nonnegative");
  Trivector t(2 * n);
  for (std::size_t k = 0; k < t.size(); ++k)
    t[k] = Rational(rng.uniform(-bound, bound));
  return t;
}

Trivector sample_point(int n, int bound, std::uint64_t seed, int trial)
{
  Rng rng(derive_seed(derive_seed(seed, static_cast<std::uint64_t>(n)), static_cast<std::uint64_t>(trial)));
  return random_trivector(n, bound, rng);
}

StabilizerKernel stabilizer_kernel(Trivector const &theta)
{
  int const n = theta.n();
  StabilizerKernel out;
  out.n = n;
  DistributionMatrix const d = distribution_matrix(theta);
  out.coefficients = kernel_basis(d.matrix);
  for (auto const &v : out.coefficients)
    out.elements.emplace_back(sp_assemble(n, v));
  return out;
}

GenericRankReport generic_rank(int n, int trials, int bound, std::uint64_t seed, RankOptions const &base)
{
  check_half_n(n);
  if (trials < 1)
    throw DomainError("trials must be >= 1");
  GenericRankReport report;
  report.n = n;
  report.trials = trials;
  report.bound = bound;
  report.seed = seed;
  report.method = base.method;

  std::vector<Trivector> points;
  for (int t = 0; t < trials; ++t)
    points.push_back(sample_point(n, bound, seed, t));

  report.samples.resize(trials);
#pragma omp parallel for schedule(dynamic, 1)
  for (int t = 0; t < trials; ++t) {
    RankOptions opts = base;
    opts.source = "random";
    opts.seed = seed;
    opts.trial = t;
    report.samples[t] = rank_at(points[t], opts);
  }

  report.witness = points.front();
  report.witness_label = "random trial 0";
  report.max_rank = report.samples.front().rank;
  for (int t = 1; t < trials; ++t)
    if (report.samples[t].rank > report.max_rank) {
      report.max_rank = report.samples[t].rank;
      report.witness = points[t];
      report.witness_label = "random trial " + std::to_string(t);
    }

  if (n >= 2) {
    RankOptions opts = base;
    opts.source = "theta0";
    report.theta0 = rank_at(theta0(n), opts);
    if (report.theta0->rank > report.max_rank) {
      report.max_rank = report.theta0->rank;
      report.witness = report.theta0->point;
      report.witness_label = "theta0";
    }
  }
  report.invariant_count =
      static_cast<long long>(lambda3_dim(2 * n)) - static_cast<long long>(report.max_rank);
  return report;
}

long long invariant_count_formula(int n)
{
  check_half_n(n);
  if (n <= 2)
    return 0;
  if (n == 3)
    return 2;
  long long const m = n;
  return m * (4 * m * m - 12 * m - 1) / 3;
}

VerificationReport verify_range(int n_lo, int n_hi, int trials, std::uint64_t seed, int bound,
                                RankOptions const &base)
{
  if (n_lo < 1 || n_hi < n_lo)
    throw DomainError("invalid range " + std::to_string(n_lo) + ".." + std::to_string(n_hi));
  if (trials < 1)
    throw DomainError("trials must be >= 1");
  VerificationReport out;
  out.n_lo = n_lo;
  out.n_hi = n_hi;
  out.trials = trials;
  out.bound = bound;
  out.seed = seed;
  out.all_pass = true;
  for (int n = n_lo; n <= n_hi; ++n) {
    VerificationRow row;
    row.n = n;
    row.lambda3 = lambda3_dim(2 * n);
    row.sp = sp_dim(n);
    row.report = generic_rank(n, trials, bound, seed, base);
    row.generic_rank = row.report.max_rank;
    row.computed = row.report.invariant_count;
    row.formula = invariant_count_formula(n);
    row.pass = row.computed == row.formula;
    out.all_pass = out.all_pass && row.pass;
    out.rows.push_back(std::move(row));
  }
  return out;
}

} // namespace sptri
