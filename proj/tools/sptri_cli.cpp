#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>

#include "sptri/action.hpp"
#include "sptri/combinatorics.hpp"
#include "sptri/errors.hpp"
#include "sptri/invariant_count.hpp"
#include "sptri/matrix_io.hpp"
#include "sptri/modular.hpp"
#include "sptri/serialize.hpp"
#include "sptri/version.hpp"

using namespace sptri;

namespace
{

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

constexpr char const *kPrimeEnv = "SPTRI_PRIME";
constexpr char const *kTrialsEnv = "SPTRI_TRIALS";

struct UsageError : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

std::uint64_t env_u64(char const *name, std::uint64_t fallback)
{
  char const *raw = std::getenv(name);
  if (!raw || !*raw)
    return fallback;
  std::string const s(raw);
  if (s.find_first_not_of("0123456789") != std::string::npos)
    throw UsageError(std::string(name) + " must be a positive integer, got '" + s + "'");
  try {
    return std::stoull(s);
  } catch (std::exception const &) {
    throw UsageError(std::string(name) + " is out of range: '" + s + "'");
  }
}

struct Output
{
  std::string format = "human";
  std::string path;
  bool no_timestamp = false;

  void add_flags(CLI::App *cmd, std::string const &formats)
  {
    cmd->add_option("--format", format, "Output format (" + formats + ")");
    cmd->add_option("-o,--output", path, "Write to this file instead of stdout");
    cmd->add_flag("--no-timestamp", no_timestamp, "Omit the generated_at field from JSON");
  }

  bool json() const { return format == "json"; }

  void check(std::initializer_list<char const *> allowed) const
  {
    for (auto const *a : allowed)
      if (format == a)
        return;
    throw UsageError("unsupported --format '" + format + "'");
  }

  Json stamp(Json body) const
  {
    if (no_timestamp)
      return body;
    std::time_t const now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    std::ostringstream ts;
    ts << std::put_time(&utc, "%Y-%m-%dT%H:%M:%SZ");
    Json out;
    out["generated_at"] = ts.str();
    for (auto &[k, v] : body.items())
      out[k] = std::move(v);
    return out;
  }

  template <typename F>
  void write(F &&emit) const
  {
    if (path.empty()) {
      emit(std::cout);
      std::cout.flush();
      return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file)
      throw Error("cannot open '" + path + "' for writing");
    emit(file);
    if (!file)
      throw Error("write to '" + path + "' failed");
  }

  void write_json(Json const &body) const
  {
    write([&](std::ostream &os) { os << stamp(body).dump(2) << '\n'; });
  }
};

struct RankFlags
{
  std::string method = "exact";
  std::uint64_t prime = kDefaultPrime;

  void add_flags(CLI::App *cmd)
  {
    cmd->add_option("--method", method, "Rank method (exact|modular)");
    cmd->add_option("--prime", prime, "Prime for modular ranks (env " + std::string(kPrimeEnv) + ")");
  }

  RankOptions options() const
  {
    RankOptions opts;
    try {
      opts.method = parse_rank_method(method);
    } catch (Error const &e) {
      throw UsageError(e.what());
    }
    if (!is_valid_prime(prime))
      throw UsageError("--prime " + std::to_string(prime) + " is not a prime in (2, 2^63)");
    opts.prime = prime;
    return opts;
  }
};

struct PointFlags
{
  int n = 0;
  std::string point = "random";
  std::string file;
  std::uint64_t seed = 42;
  int trial = 0;
  int bound = kDefaultSamplerBound;

  void add_flags(CLI::App *cmd)
  {
    cmd->add_option("--n", n, "Half dimension n (V has dimension 2n)");
    cmd->add_option("--point", point, "Point source (random|theta0|zero|file)");
    cmd->add_option("--file", file, "Trivector JSON for --point file");
    cmd->add_option("--seed", seed, "Seed for --point random");
    cmd->add_option("--trial", trial, "Trial index for --point random");
    cmd->add_option("--bound", bound, "Coordinate bound for --point random");
  }

  // The point plus how it was produced; seed/trial only for random points.
  Trivector resolve(RankOptions &opts) const
  {
    opts.source = point;
    if (point == "file") {
      if (file.empty())
        throw UsageError("--point file needs --file");
      Trivector t = read_trivector(file);
      if (n != 0 && t.two_n() != 2 * n)
        throw UsageError("--n " + std::to_string(n) + " does not match two_n " +
                         std::to_string(t.two_n()) + " in " + file);
      return t;
    }
    if (!file.empty())
      throw UsageError("--file is only valid with --point file");
    if (n < 1)
      throw UsageError("--n must be given and at least 1");
    if (point == "zero")
      return Trivector(2 * n);
    if (point == "theta0") {
      if (n < 2)
        throw UsageError("theta0 needs n >= 2");
      return theta0(n);
    }
    if (point == "random") {
      if (bound < 1 || trial < 0)
        throw UsageError("--bound must be >= 1 and --trial >= 0");
      opts.seed = seed;
      opts.trial = trial;
      return sample_point(n, bound, seed, trial);
    }
    throw UsageError("unknown --point '" + point + "'");
  }

  static Json read_json(std::string const &path)
  {
    std::ifstream in(path, std::ios::binary);
    if (!in)
      throw ParseError("cannot read '" + path + "'");
    try {
      return nlohmann::json::parse(in);
    } catch (nlohmann::json::exception const &e) {
      throw ParseError(path + ": " + e.what());
    }
  }

  static Trivector read_trivector(std::string const &path) { return trivector_from_json(read_json(path)); }
};

std::pair<int, int> parse_range(std::string const &text)
{
  static std::regex const re(R"(^\s*(\d+)\s*(?:\.\.\s*(\d+))?\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, re))
    throw UsageError("--n-range expects a..b, got '" + text + "'");
  int const lo = std::stoi(m[1]);
  int const hi = m[2].matched ? std::stoi(m[2]) : lo;
  if (lo < 1 || hi < lo)
    throw UsageError("--n-range needs 1 <= a <= b, got '" + text + "'");
  return {lo, hi};
}

void print_trivector(std::ostream &os, Trivector const &t)
{
  std::size_t k = 0;
  bool any = false;
  for (auto const &[a, b, c] : enumerate_triples(t.two_n())) {
    if (t[k] != 0) {
      os << "  y" << a << ',' << b << ',' << c << " = " << t[k].get_str() << '\n';
      any = true;
    }
    ++k;
  }
  if (!any)
    os << "  (zero)\n";
}

void print_certificate(std::ostream &os, RankCertificate const &c)
{
  os << "n = " << c.n << " (dim V = " << 2 * c.n << "), point: " << c.source;
  if (c.seed)
    os << " seed " << *c.seed << " trial " << c.trial.value_or(0);
  os << '\n';
  os << "method: " << to_string(c.method);
  if (c.prime)
    os << " (p = " << *c.prime << ")";
  os << '\n';
  os << "rank: " << c.rank << (c.lower_bound ? " (lower bound)" : "") << '\n';
  os << "kernel dimension: " << c.kernel_dim << (c.lower_bound ? " (upper bound)" : "") << '\n';
  if (c.modular_rank && c.method == RankMethod::exact)
    os << "modular cross-check: " << *c.modular_rank << (*c.modular_rank == c.rank ? " (agrees)" : " (differs)")
       << '\n';
  for (auto p : c.rejected_primes)
    os << "rejected prime: " << p << '\n';
  os << "invariants at this point: " << static_cast<long long>(lambda3_dim(2 * c.n)) - static_cast<long long>(c.rank)
     << '\n';
}

int cmd_verify(std::string const &range, int trials, std::uint64_t seed, int bound, RankFlags const &rf,
               Output const &out)
{
  out.check({"human", "json"});
  auto const [lo, hi] = parse_range(range);
  if (trials < 1)
    throw UsageError("--trials must be at least 1");
  if (bound < 1)
    throw UsageError("--bound must be at least 1");
  RankOptions const base = rf.options();
  VerificationReport const r = verify_range(lo, hi, trials, seed, bound, base);
  if (out.json()) {
    Json j = to_json(r);
    j["method"] = to_string(base.method);
    j["tool_version"] = kToolVersion;
    out.write_json(j);
  } else {
    out.write([&](std::ostream &os) {
      os << "verified range n = " << lo << ".." << hi << " (trials " << trials << ", seed " << seed << ", bound "
         << bound << ", method " << to_string(base.method) << ")\n";
      if (base.method == RankMethod::modular)
        os << "modular ranks are lower bounds\n";
      os << std::setw(4) << "n" << std::setw(10) << "C(2n,3)" << std::setw(8) << "dim sp" << std::setw(14)
         << "generic rank" << std::setw(12) << "N computed" << std::setw(11) << "N formula" << "  result\n";
      for (auto const &row : r.rows)
        os << std::setw(4) << row.n << std::setw(10) << row.lambda3 << std::setw(8) << row.sp << std::setw(14)
           << row.generic_rank << std::setw(12) << row.computed << std::setw(11) << row.formula << "  "
           << (row.pass ? "PASS" : "FAIL") << '\n';
      os << (r.all_pass ? "PASS" : "FAIL") << '\n';
    });
  }
  return r.all_pass ? kExitOk : kExitFail;
}

int cmd_rank(PointFlags const &pf, RankFlags const &rf, Output const &out)
{
  out.check({"human", "json"});
  RankOptions opts = rf.options();
  Trivector const theta = pf.resolve(opts);
  RankCertificate const c = rank_at(theta, opts);
  if (out.json())
    out.write_json(to_json(c));
  else
    out.write([&](std::ostream &os) { print_certificate(os, c); });
  return kExitOk;
}

int cmd_stabilizer(PointFlags const &pf, Output const &out)
{
  out.check({"human", "json"});
  RankOptions opts;
  Trivector const theta = pf.resolve(opts);
  StabilizerKernel const k = stabilizer_kernel(theta);
  if (out.json()) {
    Json j = to_json(k);
    j["source"] = opts.source;
    j["seed"] = opts.seed ? Json(*opts.seed) : Json(nullptr);
    j["trial"] = opts.trial ? Json(*opts.trial) : Json(nullptr);
    j["tool_version"] = kToolVersion;
    out.write_json(j);
    return kExitOk;
  }
  out.write([&](std::ostream &os) {
    os << "n = " << k.n << ", point: " << opts.source;
    if (opts.seed)
      os << " seed " << *opts.seed << " trial " << *opts.trial;
    os << "\nstabilizer dimension: " << k.dimension() << '\n';
    for (std::size_t e = 0; e < k.dimension(); ++e) {
      os << "basis element " << e + 1 << ":\n";
      MatQ const &m = k.elements[e].matrix();
      for (std::size_t r = 0; r < m.rows(); ++r) {
        os << " ";
        for (std::size_t c = 0; c < m.cols(); ++c)
          os << ' ' << std::setw(6) << m(r, c).get_str();
        os << '\n';
      }
    }
  });
  return kExitOk;
}

int cmd_export(PointFlags const &pf, Output const &out)
{
  MatrixFormat format;
  try {
    format = parse_matrix_format(out.format == "human" ? "matrixmarket" : out.format);
  } catch (Error const &e) {
    throw UsageError(e.what());
  }
  RankOptions opts;
  Trivector const theta = pf.resolve(opts);
  DistributionMatrix const d = distribution_matrix(theta);
  out.write([&](std::ostream &os) { export_matrix(d.matrix, format, os); });
  return kExitOk;
}

int cmd_delta(std::string const &file, Output const &out)
{
  out.check({"human", "json"});
  if (file.empty())
    throw UsageError("delta needs --file");
  Jet1TwoForm const jet = jet_from_json(PointFlags::read_json(file));
  Trivector const y = exterior_derivative_jet(jet);
  if (out.json()) {
    Json j;
    j["trivector"] = trivector_to_json(y);
    j["tool_version"] = kToolVersion;
    out.write_json(j);
  } else {
    out.write([&](std::ostream &os) {
      os << "(d Omega)_x on V of dimension " << y.two_n() << ":\n";
      print_trivector(os, y);
    });
  }
  return kExitOk;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Exact ranks and invariant counts for the symplectic action on trivectors"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  std::uint64_t default_prime = kDefaultPrime;
  int default_trials = kDefaultTrials;
  try {
    default_prime = env_u64(kPrimeEnv, kDefaultPrime);
    std::uint64_t const t = env_u64(kTrialsEnv, kDefaultTrials);
    if (t < 1 || t > 1'000'000)
      throw UsageError(std::string(kTrialsEnv) + " must be in 1..1000000");
    default_trials = static_cast<int>(t);
  } catch (UsageError const &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::string range = "4..8";
  int trials = default_trials;
  std::uint64_t verify_seed = 42;
  int verify_bound = kDefaultSamplerBound;
  RankFlags verify_rank{.prime = default_prime};
  Output verify_out;
  auto *verify = app.add_subcommand("verify", "Compare computed invariant counts with the closed form");
  verify->add_option("--n-range", range, "Range of n as a..b")->capture_default_str();
  verify->add_option("--trials", trials, "Random points per n (env " + std::string(kTrialsEnv) + ")")
      ->capture_default_str();
  verify->add_option("--seed", verify_seed, "Sampling seed")->capture_default_str();
  verify->add_option("--bound", verify_bound, "Coordinate bound for samples")->capture_default_str();
  verify_rank.add_flags(verify);
  verify_out.add_flags(verify, "human|json");

  PointFlags rank_point;
  RankFlags rank_flags{.prime = default_prime};
  Output rank_out;
  auto *rank = app.add_subcommand("rank", "Exact rank of the distribution at one point");
  rank_point.add_flags(rank);
  rank_flags.add_flags(rank);
  rank_out.add_flags(rank, "human|json");

  PointFlags stab_point;
  Output stab_out;
  auto *stab = app.add_subcommand("stabilizer", "Stabilizer subalgebra of a point");
  stab_point.add_flags(stab);
  stab_out.add_flags(stab, "human|json");

  PointFlags export_point;
  Output export_out;
  export_out.format = "matrixmarket";
  auto *exp = app.add_subcommand("export", "Write the distribution matrix at a point");
  export_point.add_flags(exp);
  export_out.add_flags(exp, "matrixmarket|json");

  std::string jet_file;
  Output delta_out;
  auto *delta = app.add_subcommand("delta", "Trivector (d Omega)_x of a 1-jet of a 2-form");
  delta->add_option("--file", jet_file, "Jet JSON file");
  delta_out.add_flags(delta, "human|json");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    int const code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*verify)
      return cmd_verify(range, trials, verify_seed, verify_bound, verify_rank, verify_out);
    if (*rank)
      return cmd_rank(rank_point, rank_flags, rank_out);
    if (*stab)
      return cmd_stabilizer(stab_point, stab_out);
    if (*exp)
      return cmd_export(export_point, export_out);
    return cmd_delta(jet_file, delta_out);
  } catch (UsageError const &e) {
    std::cerr << "error: " << e.what() << "\nRun with --help for usage.\n";
    return kExitUsage;
  } catch (Error const &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
