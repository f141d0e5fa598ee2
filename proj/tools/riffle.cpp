// riffle: distributions, moments, closed forms and k-shuffle expectations for
// the no-feedback guessing game.

#include <unistd.h>

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "riffle/closedform.hpp"
#include "riffle/gf_fast.hpp"
#include "riffle/kshuffle.hpp"
#include "riffle/moments.hpp"
#include "riffle/shuffle.hpp"
#include "riffle/verify.hpp"
#include "riffle/version.hpp"

using json = nlohmann::json;
using namespace riffle;

namespace {

constexpr long kCliSlowMaxN = 15;
constexpr long kExactKShuffleMaxN = 20000;
constexpr long kExactKShuffleMaxC = 64;
constexpr std::uint64_t kMaxTrials = 100'000'000;
constexpr unsigned kMaxPrecision = 10000;
constexpr unsigned kDefaultPrecision = 50;

constexpr int kExitGuard = 2;
constexpr int kExitVerify = 3;

// Validation failures raised by the tool itself.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json rat_json(const Rat& v) { return to_string(v); }
json int_json(const BigInt& v) { return to_string(v); }
json dec_json(const Decimal& d) { return {{"decimal", d.to_string()}, {"precision", d.digits()}}; }

unsigned default_precision() {
  const char* env = std::getenv("RIFFLE_PRECISION");
  if (!env || !*env) return kDefaultPrecision;
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0' || v < 1 || v > kMaxPrecision)
    throw UsageError("RIFFLE_PRECISION must be an integer in 1.." + std::to_string(kMaxPrecision));
  return static_cast<unsigned>(v);
}

std::string join(const std::vector<std::string>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + xs[i];
  return out + "]";
}

// Writes to a sibling temporary and renames it over the target.
void write_atomic(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    f << text;
    f.flush();
    if (!f) throw std::runtime_error("write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("cannot rename onto " + path + ": " + ec.message());
  }
}

struct Output {
  std::string path;  // empty for stdout

  void emit(const std::string& text) const {
    if (path.empty())
      std::cout << text << std::flush;
    else
      write_atomic(path, text);
  }
};

json envelope(const std::string& command, json params, std::optional<Tier> tier, json payload,
              std::chrono::steady_clock::time_point start) {
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  json meta = {{"command", command}, {"parameters", std::move(params)}, {"version", kVersion}, {"timing_ms", ms}};
  meta["tier"] = tier ? json(tier_name(*tier)) : json(nullptr);
  return {{"metadata", std::move(meta)}, {"result", std::move(payload)}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void print_error(const std::string& kind, const std::string& message) {
  json err = {{"error", {{"kind", kind}, {"message", message}}}};
  std::cerr << err.dump() << "\n";
}

// ---------------------------------------------------------------------------

struct GenArgs {
  long n = 0;
  std::string tier = "fastest";
  std::string format = "json";
};

int run_gen(const GenArgs& a, const Output& out) {
  const auto start = std::chrono::steady_clock::now();
  const Tier tier = parse_tier(a.tier);
  if (a.n < 1) throw UsageError("--n must be at least 1");
  if (tier == Tier::slow && a.n > kCliSlowMaxN)
    throw GuardError("slow tier enumerates 2^n words; limited to n <= " + std::to_string(kCliSlowMaxN));
  const DistributionTable t = distribution_table(a.n, tier);

  if (a.format == "poly") {
    std::vector<BigInt> cs;
    for (const auto& row : t.rows) cs.push_back(row.count);
    out.emit(GFPoly(cs).to_string() + "\n");
    return 0;
  }
  if (a.format == "csv") {
    std::ostringstream os;
    os << "guesses,count,probability\n";
    for (const auto& row : t.rows) os << row.guesses << ',' << to_string(row.count) << ',' << to_string(row.probability) << '\n';
    out.emit(os.str());
    return 0;
  }
  json rows = json::array();
  for (const auto& row : t.rows)
    rows.push_back({{"guesses", row.guesses}, {"count", int_json(row.count)}, {"probability", rat_json(row.probability)}});
  json payload = {{"n", t.n}, {"outcomes", int_json(t.outcomes)}, {"mean", rat_json(t.mean)}, {"rows", rows}};
  out.emit(dump(envelope("gen", {{"n", a.n}, {"tier", a.tier}, {"format", a.format}}, t.used, payload, start)));
  return 0;
}

struct MomentArgs {
  long n = 0;
  unsigned r = 1;
  bool central = false;
  bool standardized = false;
  std::optional<unsigned> precision;
  std::string source = "auto";
  std::string format = "text";
};

MomentSource parse_source(const std::string& s) {
  if (s == "auto") return MomentSource::automatic;
  if (s == "numeric") return MomentSource::numeric;
  if (s == "closed-form") return MomentSource::closed_form;
  throw UsageError("unknown source '" + s + "' (auto, numeric, closed-form)");
}

int run_moments(const MomentArgs& a, const Output& out) {
  const auto start = std::chrono::steady_clock::now();
  if (a.n < 1) throw UsageError("--n must be at least 1");
  if (a.r < 1) throw UsageError("--r must be at least 1");
  const unsigned precision = a.precision ? *a.precision : default_precision();
  if (precision < 1 || precision > kMaxPrecision) throw UsageError("--precision out of range");
  const MomentSource src = parse_source(a.source);
  if (src == MomentSource::numeric && a.n > kNumericMomentMaxN)
    throw GuardError("numeric moments limited to n <= " + std::to_string(kNumericMomentMaxN));
  const MomentReport rep = central_and_standardized(a.n, a.r, precision, src);

  std::vector<std::string> raw, central, standardized;
  for (const auto& v : rep.raw) raw.push_back(to_string(v));
  for (const auto& v : rep.central) central.push_back(to_string(v));
  for (const auto& v : rep.standardized) standardized.push_back(v.to_string());

  if (a.format == "text") {
    std::string text = "raw: " + join(raw) + "\n";
    if (a.central) text += "central: " + join(central) + "\n";
    if (a.standardized)
      text += rep.standardized_defined() ? "standardized: " + join(standardized) + "\n"
                                         : "standardized: undefined (zero variance)\n";
    out.emit(text);
    return 0;
  }
  json payload = {{"n", rep.n}, {"source", source_name(rep.source)}, {"raw", json::array()}};
  for (const auto& v : rep.raw) payload["raw"].push_back(rat_json(v));
  if (a.central) {
    payload["central"] = json::array();
    for (const auto& v : rep.central) payload["central"].push_back(rat_json(v));
  }
  if (a.standardized) {
    payload["standardized"] = nullptr;
    if (rep.standardized_defined()) {
      payload["standardized"] = json::array();
      for (const auto& v : rep.standardized) payload["standardized"].push_back(dec_json(v));
    }
  }
  json params = {{"n", a.n}, {"r", a.r}, {"central", a.central}, {"standardized", a.standardized},
                 {"precision", precision}, {"source", a.source}};
  std::optional<Tier> tier;
  if (rep.source == MomentSource::numeric) tier = a.n < kFastestMinN ? Tier::fast : Tier::fastest;
  out.emit(dump(envelope("moments", params, tier, payload, start)));
  return 0;
}

struct ClosedArgs {
  unsigned r = 1;
  long alpha = 0;
  std::string format = "text";
};

int run_closed_form(const ClosedArgs& a, const Output& out) {
  const auto start = std::chrono::steady_clock::now();
  if (a.alpha < -1 || a.alpha > 2) throw UsageError("--alpha must be one of -1, 0, 1, 2");
  if (a.r > kMaxExpressionOrder) throw GuardError("closed forms cover r <= " + std::to_string(kMaxExpressionOrder));

  std::string expr = "1";
  json checks = json::array();
  bool ok = true;
  if (a.r > 0) {
    const MomentExpression& e = moment_expression(a.r, a.alpha);
    expr = e.to_string();
    // spot checks against the numeric moments at three deck sizes
    for (long big_l = 3; big_l <= 5; ++big_l) {
      const long n = 4 * big_l + a.alpha;
      const bool same = e.evaluate(n) == raw_moment(n, a.r);
      ok = ok && same;
      checks.push_back({{"n", n}, {"exact", same}});
    }
  }
  if (a.format == "text") {
    std::string text = expr + "\n";
    if (a.r > 0) {
      std::vector<std::string> ns;
      for (const auto& c : checks) ns.push_back(std::to_string(c["n"].get<long>()));
      text += std::string("check against raw moments at n = ") + join(ns) + ": " + (ok ? "pass" : "FAIL") + "\n";
    }
    out.emit(text);
  } else {
    json payload = {{"r", a.r}, {"alpha", a.alpha}, {"expression", expr}, {"checks", checks}, {"valid", ok}};
    out.emit(dump(envelope("closed-form", {{"r", a.r}, {"alpha", a.alpha}}, std::nullopt, payload, start)));
  }
  return ok ? 0 : kExitVerify;
}

struct InterpArgs {
  unsigned r = 1;
  std::string parity = "even";
  unsigned extra_degree = 0;
  std::string format = "text";
};

int run_interpolate(const InterpArgs& a, const Output& out) {
  const auto start = std::chrono::steady_clock::now();
  if (a.r < 1) throw UsageError("--r must be at least 1");
  if (a.parity != "even" && a.parity != "odd") throw UsageError("--parity must be even or odd");
  const Parity par = a.parity == "even" ? Parity::even : Parity::odd;
  const ClosedHalfMoment fit = interpolate_half_moment(a.r, par, a.extra_degree);
  const std::string pq = "P(L) = " + fit.p.to_string() + ", Q(L) = " + fit.q.to_string();

  auto list = [](const std::vector<long>& v) {
    std::vector<std::string> s;
    for (long x : v) s.push_back(std::to_string(x));
    return join(s);
  };
  if (a.format == "text") {
    out.emit(pq + "\nfit at L = " + list(fit.fit_points) + ", held out L = " + list(fit.holdout_points) + ": pass\n");
    return 0;
  }
  json p = json::array(), q = json::array();
  for (const auto& c : fit.p.coeffs()) p.push_back(rat_json(c));
  for (const auto& c : fit.q.coeffs()) q.push_back(rat_json(c));
  json payload = {{"r", a.r},        {"parity", a.parity},   {"p", p},
                  {"q", q},          {"text", pq},           {"fit_points", fit.fit_points},
                  {"holdout_points", fit.holdout_points},    {"holdout_passed", true}};
  out.emit(dump(envelope("interpolate", {{"r", a.r}, {"parity", a.parity}, {"extra_degree", a.extra_degree}},
                         std::nullopt, payload, start)));
  return 0;
}

struct KArgs {
  long n = 0;
  std::optional<unsigned> k;
  std::optional<long> c;
  std::string mode = "exact";
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  std::optional<unsigned> precision;
  std::string format = "text";
};

int run_kshuffle(const KArgs& a, const Output& out) {
  const auto start = std::chrono::steady_clock::now();
  if (a.k.has_value() == a.c.has_value()) throw UsageError("give exactly one of --k and --c");
  if (a.k && *a.k > 62) throw UsageError("--k must be at most 62");
  const long c = a.k ? (1L << *a.k) : *a.c;
  const KShuffleQuery query{a.n, c, parse_mode(a.mode)};
  query.validate();
  const unsigned precision = a.precision ? *a.precision : default_precision();
  if (precision < 1 || precision > kMaxPrecision) throw UsageError("--precision out of range");

  json params = {{"n", a.n}, {"c", c}, {"mode", a.mode}};
  if (a.k) params["k"] = *a.k;
  json payload = {{"n", a.n}, {"c", c}, {"mode", a.mode}};
  std::string text;

  switch (query.mode) {
    case KShuffleMode::exact: {
      if (a.n > kExactKShuffleMaxN || c > kExactKShuffleMaxC)
        throw GuardError("exact mode limited to n <= " + std::to_string(kExactKShuffleMaxN) +
                         " and C <= " + std::to_string(kExactKShuffleMaxC));
      const Rat e = expected_total(a.n, c);
      payload["expected"] = rat_json(e);
      payload["approximation"] = dec_json(Decimal(e, precision));
      text = to_string(e) + "\n";
      break;
    }
    case KShuffleMode::leading: {
      const Decimal d = leading_term(a.n, c, precision);
      payload["leading"] = dec_json(d);
      text = d.to_string() + "\n";
      break;
    }
    case KShuffleMode::simulate: {
      if (a.trials < 1 || a.trials > kMaxTrials)
        throw GuardError("--trials must be in 1.." + std::to_string(kMaxTrials));
      const SampleReport s = gsr_sample(ShuffleSpec::from_sequences(a.n, c), a.trials, a.seed);
      params["trials"] = a.trials;
      params["seed"] = a.seed;
      payload["mean"] = rat_json(s.mean);
      payload["mean_decimal"] = dec_json(Decimal(s.mean, precision));
      payload["second_moment"] = rat_json(s.second_moment);
      std::ostringstream se;
      se.precision(6);
      se << s.standard_error;
      payload["standard_error"] = {{"decimal", se.str()}, {"precision", 6}};
      payload["trials"] = s.trials;
      payload["seed"] = s.seed;
      payload["histogram"] = s.histogram;
      text = Decimal(s.mean, precision).to_string() + " +/- " + se.str() + " (" + std::to_string(s.trials) +
             " trials, seed " + std::to_string(s.seed) + ")\n";
      break;
    }
  }
  if (a.format == "text")
    out.emit(text);
  else
    out.emit(dump(envelope("kshuffle", params, std::nullopt, payload, start)));
  return 0;
}

struct VerifyArgs {
  std::string suite = "all";
  std::string format = "text";
};

int run_verify_cmd(const VerifyArgs& a, const Output& out) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<CheckReport> reports = run_verify(a.suite);
  std::size_t failures = 0;
  for (const auto& r : reports) failures += r.failures();

  if (a.format == "text") {
    std::ostringstream os;
    for (const auto& r : reports) {
      os << "[" << r.suite << "]\n";
      for (const auto& i : r.items)
        os << (i.passed ? "PASS " : "FAIL ") << i.name << (i.detail.empty() ? "" : " (" + i.detail + ")") << "\n";
    }
    os << (failures == 0 ? "all checks passed\n" : std::to_string(failures) + " check(s) failed\n");
    out.emit(os.str());
  } else {
    json suites = json::array();
    for (const auto& r : reports) {
      json items = json::array();
      for (const auto& i : r.items) items.push_back({{"name", i.name}, {"passed", i.passed}, {"detail", i.detail}});
      suites.push_back({{"suite", r.suite}, {"passed", r.passed()}, {"checks", items}});
    }
    json payload = {{"suites", suites}, {"failures", failures}, {"passed", failures == 0}};
    out.emit(dump(envelope("verify", {{"suite", a.suite}}, std::nullopt, payload, start)));
  }
  return failures == 0 ? 0 : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact distributions and moments of correct guesses after riffle shuffles"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  Output out;
  app.add_option("-o,--output", out.path, "Write to this file (atomically) instead of stdout");

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Distribution F_n(q) of correct guesses");
  g->add_option("--n", gen.n, "Deck size")->required();
  g->add_option("--tier", gen.tier, "slow, fast or fastest")->check(CLI::IsMember({"slow", "fast", "fastest"}));
  g->add_option("--format", gen.format, "json, csv or poly")->check(CLI::IsMember({"json", "csv", "poly"}));

  MomentArgs mom;
  auto* m = app.add_subcommand("moments", "Raw, central and standardized moments");
  m->add_option("--n", mom.n, "Deck size")->required();
  m->add_option("--r", mom.r, "Highest order")->required();
  m->add_flag("--central", mom.central, "Include central moments");
  m->add_flag("--standardized", mom.standardized, "Include standardized moments");
  m->add_option("--precision", mom.precision, "Significant digits (default RIFFLE_PRECISION or 50)");
  m->add_option("--source", mom.source, "auto, numeric or closed-form");
  m->add_option("--format", mom.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  ClosedArgs cf;
  auto* c = app.add_subcommand("closed-form", "E[X^r] in terms of L and B = binom(2L,L)/4^L for n = 4L + alpha");
  c->add_option("--r", cf.r, "Moment order")->required();
  c->add_option("--alpha", cf.alpha, "Residue: -1, 0, 1 or 2");
  c->add_option("--format", cf.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  InterpArgs ip;
  auto* i = app.add_subcommand("interpolate", "Fit D^r F_A(1) = P(L) binom(2L,L) + Q(L) 4^L");
  i->add_option("--r", ip.r, "Moment order")->required();
  i->add_option("--parity", ip.parity, "even (h = 2L) or odd (h = 2L-1)")->required();
  i->add_option("--extra-degree", ip.extra_degree, "Raise both degree bounds");
  i->add_option("--format", ip.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  KArgs ka;
  auto* k = app.add_subcommand("kshuffle", "Expected correct guesses after k shuffles (C = 2^k sequences)");
  k->add_option("--n", ka.n, "Deck size")->required();
  k->add_option("--k", ka.k, "Number of shuffles");
  k->add_option("--c", ka.c, "Number of increasing sequences");
  k->add_option("--mode", ka.mode, "exact, leading or simulate");
  k->add_option("--trials", ka.trials, "Monte Carlo trials");
  k->add_option("--seed", ka.seed, "Monte Carlo seed");
  k->add_option("--precision", ka.precision, "Significant digits (default RIFFLE_PRECISION or 50)");
  k->add_option("--format", ka.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  VerifyArgs va;
  auto* v = app.add_subcommand("verify", "Run invariant suites");
  v->add_option("--suite", va.suite, "all, tiers, closedform, series or kshuffle");
  v->add_option("--format", va.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error("usage", e.what());
    return kExitGuard;
  }

  try {
    if (g->parsed()) return run_gen(gen, out);
    if (m->parsed()) return run_moments(mom, out);
    if (c->parsed()) return run_closed_form(cf, out);
    if (i->parsed()) return run_interpolate(ip, out);
    if (k->parsed()) return run_kshuffle(ka, out);
    if (v->parsed()) return run_verify_cmd(va, out);
  } catch (const GuardError& e) {
    print_error("guard", e.what());
    return kExitGuard;
  } catch (const UsageError& e) {
    print_error("validation", e.what());
    return kExitGuard;
  } catch (const std::invalid_argument& e) {
    print_error("validation", e.what());
    return kExitGuard;
  } catch (const std::domain_error& e) {
    print_error("validation", e.what());
    return kExitGuard;
  } catch (const FitError& e) {
    print_error("fit", e.what());
    return 1;
  } catch (const std::exception& e) {
    print_error("internal", e.what());
    return 1;
  }
  return 1;
}
