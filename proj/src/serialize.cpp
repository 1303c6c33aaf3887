#include "sptri/serialize.hpp"

#include <sstream>
#include <string>
#include <vector>

#include "sptri/errors.hpp"
#include "sptri/matrix_io.hpp"

namespace sptri
{

namespace
{

std::vector<int> parse_key(std::string const &key, std::size_t expected)
{
  std::vector<int> out;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(part, &used));
      if (used != part.size())
        throw ParseError("");
    } catch (std::exception const &) {
      throw ParseError("malformed index key '" + key + "'");
    }
  }
  if (out.size() != expected)
    throw ParseError("index key '" + key + "' should have " + std::to_string(expected) + " parts");
  return out;
}

template <typename F>
auto wrap_json_errors(F &&f)
{
  try {
    return f();
  } catch (nlohmann::json::exception const &ex) {
    throw ParseError(std::string("malformed JSON: ") + ex.what());
  } catch (IndexError const &ex) {
    throw ParseError(ex.what());
  } catch (InvalidDimension const &ex) {
    throw ParseError(ex.what());
  }
}

Json optional_number(std::optional<std::uint64_t> const &v)
{
  return v ? Json(*v) : Json(nullptr);
}

} // namespace

Json trivector_to_json(Trivector const &t)
{
  Json j;
  j["two_n"] = t.two_n();
  auto coords = Json::array();
  std::size_t k = 0;
  for (auto const &[a, b, c] : enumerate_triples(t.two_n())) {
    if (sgn(t[k]) != 0)
      coords.push_back({std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c),
                        to_string(t[k])});
    ++k;
  }
  j["coords"] = std::move(coords);
  return j;
}

Trivector trivector_from_json(nlohmann::json const &j)
{
  return wrap_json_errors([&] {
    int const two_n = j.at("two_n").get<int>();
    check_two_n(two_n);
    Trivector t(two_n);
    for (auto const &entry : j.at("coords")) {
      if (!entry.is_array() || entry.size() != 2)
        throw ParseError("trivector coordinate must be [\"a,b,c\", \"num/den\"]");
      auto const idx = parse_key(entry[0].get<std::string>(), 3);
      if (idx[0] == idx[1] || idx[1] == idx[2] || idx[0] == idx[2])
        throw ParseError("repeated index in trivector key");
      t.add_term(idx[0], idx[1], idx[2], parse_rational(entry[1].get<std::string>()));
    }
    return t;
  });
}

Json jet_to_json(Jet1TwoForm const &jet)
{
  int const two_n = jet.two_n();
  Json j;
  j["two_n"] = two_n;
  auto f = Json::array();
  auto df = Json::array();
  for (auto const &[h, i] : enumerate_pairs(two_n)) {
    std::string const key = std::to_string(h) + "," + std::to_string(i);
    if (sgn(jet.f(h, i)) != 0)
      f.push_back({key, to_string(jet.f(h, i))});
    for (int l = 1; l <= two_n; ++l)
      if (sgn(jet.df(h, i, l)) != 0)
        df.push_back({key + "," + std::to_string(l), to_string(jet.df(h, i, l))});
  }
  j["F"] = std::move(f);
  j["DF"] = std::move(df);
  return j;
}

Jet1TwoForm jet_from_json(nlohmann::json const &j)
{
  return wrap_json_errors([&] {
    int const two_n = j.at("two_n").get<int>();
    check_two_n(two_n);
    Jet1TwoForm jet(two_n);
    // F_ih = -F_hi, so a reversed pair flips the sign
    auto oriented = [](int &h, int &i) {
      if (h == i)
        throw ParseError("repeated index in 2-form key");
      if (h < i)
        return 1;
      std::swap(h, i);
      return -1;
    };
    if (j.contains("F"))
      for (auto const &entry : j.at("F")) {
        auto idx = parse_key(entry.at(0).get<std::string>(), 2);
        int const s = oriented(idx[0], idx[1]);
        Rational const v = parse_rational(entry.at(1).get<std::string>());
        jet.f(idx[0], idx[1]) += s > 0 ? v : Rational(-v);
      }
    if (j.contains("DF"))
      for (auto const &entry : j.at("DF")) {
        auto idx = parse_key(entry.at(0).get<std::string>(), 3);
        int const s = oriented(idx[0], idx[1]);
        Rational const v = parse_rational(entry.at(1).get<std::string>());
        jet.df(idx[0], idx[1], idx[2]) += s > 0 ? v : Rational(-v);
      }
    return jet;
  });
}

Json to_json(RankCertificate const &c)
{
  Json j;
  j["n"] = c.n;
  j["point"] = trivector_to_json(c.point);
  j["source"] = c.source;
  j["method"] = to_string(c.method);
  j["rank"] = c.rank;
  j["kernel_dim"] = c.kernel_dim;
  j["lower_bound"] = c.lower_bound;
  j["prime"] = optional_number(c.prime);
  j["modular_rank"] = c.modular_rank ? Json(*c.modular_rank) : Json(nullptr);
  if (c.method == RankMethod::exact && c.modular_rank)
    j["modular_agrees"] = *c.modular_rank == c.rank;
  j["rejected_primes"] = c.rejected_primes;
  j["seed"] = optional_number(c.seed);
  j["trial"] = c.trial ? Json(*c.trial) : Json(nullptr);
  j["tool_version"] = c.tool_version;
  return j;
}

Json to_json(GenericRankReport const &r)
{
  Json j;
  j["n"] = r.n;
  j["trials"] = r.trials;
  j["sampler_bound"] = r.bound;
  j["seed"] = r.seed;
  j["method"] = to_string(r.method);
  auto ranks = Json::array();
  for (auto const &s : r.samples)
    ranks.push_back(s.rank);
  j["trial_ranks"] = std::move(ranks);
  j["theta0_rank"] = r.theta0 ? Json(r.theta0->rank) : Json(nullptr);
  j["max_rank"] = r.max_rank;
  j["witness_label"] = r.witness_label;
  j["witness"] = trivector_to_json(r.witness);
  j["invariant_count"] = r.invariant_count;
  auto certs = Json::array();
  for (auto const &s : r.samples)
    certs.push_back(to_json(s));
  if (r.theta0)
    certs.push_back(to_json(*r.theta0));
  j["certificates"] = std::move(certs);
  return j;
}

Json to_json(VerificationReport const &r)
{
  Json j;
  j["n_range"] = {r.n_lo, r.n_hi};
  j["trials"] = r.trials;
  j["sampler_bound"] = r.bound;
  j["seed"] = r.seed;
  auto rows = Json::array();
  for (auto const &row : r.rows) {
    Json jr;
    jr["n"] = row.n;
    jr["lambda3_dim"] = row.lambda3;
    jr["sp_dim"] = row.sp;
    jr["generic_rank"] = row.generic_rank;
    jr["invariants_computed"] = row.computed;
    jr["invariants_formula"] = row.formula;
    jr["status"] = row.pass ? "PASS" : "FAIL";
    jr["report"] = to_json(row.report);
    rows.push_back(std::move(jr));
  }
  j["rows"] = std::move(rows);
  j["status"] = r.all_pass ? "PASS" : "FAIL";
  return j;
}

Json to_json(StabilizerKernel const &k)
{
  Json j;
  j["n"] = k.n;
  j["dimension"] = k.dimension();
  auto coeffs = Json::array();
  for (auto const &v : k.coefficients) {
    auto row = Json::array();
    for (auto const &q : v)
      row.push_back(to_string(q));
    coeffs.push_back(std::move(row));
  }
  j["coefficients"] = std::move(coeffs);
  auto mats = Json::array();
  for (auto const &e : k.elements)
    mats.push_back(matrix_to_json(SparseMatQ::from_dense(e.matrix())));
  j["elements"] = std::move(mats);
  return j;
}

} // namespace sptri
