#include "h2cert/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "h2cert/acceptance.hpp"
#include "h2cert/construction.hpp"
#include "h2cert/homology.hpp"
#include "h2cert/rank_analysis.hpp"
#include "h2cert/series_text.hpp"
#include "h2cert/sieve.hpp"

namespace h2cert {
namespace {

struct Outcome {
  Json result = Json::object();
  bool verified = true;
  bool holds = true;
};

using Progress = std::function<void(const std::string&)>;
using Runner = std::function<Outcome(const Progress&)>;

struct Command {
  CLI::App* app = nullptr;
  std::set<std::string> flags;
  Runner run;
};

RingTag ring_from(std::uint64_t mod, unsigned exp) {
  if (mod == 0) return RingTag::integers();
  return exp <= 1 ? RingTag::prime_field(mod) : RingTag::prime_power(mod, exp);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string strip_parens(std::string s) {
  while (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  return s;
}

Rational parse_rational(const std::string& text) {
  try {
    Rational r(text);
    if (sgn(r.get_den()) == 0) fail(ErrorCode::ZeroDenominator, "rational with zero denominator: '" + text + "'");
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    fail(ErrorCode::ParseError, "not a rational: '" + text + "'");
  }
}

RationalFunction parse_ratfunc(const std::string& text, std::uint64_t p) {
  const auto slash = text.find('/');
  const auto num = parse_int_poly(strip_parens(text.substr(0, slash)));
  if (slash == std::string::npos) return RationalFunction(PolyFp::from_integers(p, num));
  const auto den = parse_int_poly(strip_parens(text.substr(slash + 1)));
  return ratfunc_normalize(PolyFp::from_integers(p, num), PolyFp::from_integers(p, den));
}

ZBiSeries load_source(const std::string& source, const std::string& text, std::size_t nx, std::size_t ny) {
  if (source == "explicit-F") return build_F(nx, ny);
  if (source == "explicit-F-antisym") return antisymmetrize(build_F(nx, ny));
  if (source == "series") {
    if (text.empty()) fail(ErrorCode::ParseError, "--source series needs --f");
    return parse_bi_series(text, nx, ny);
  }
  fail(ErrorCode::ParseError, "unknown --source '" + source + "'");
}

bool is_explicit(const std::string& source) { return source.rfind("explicit-F", 0) == 0; }

Json isolation_json(const IsolationCertificate& c) {
  return Json{{"r", c.r.get_str()},
              {"m", c.m ? Json(*c.m) : Json(nullptr)},
              {"radius", c.radius},
              {"holds", c.holds}};
}

template <class S>
Json series_eval(const std::string& op, const S& f, const S& g, Outcome& o) {
  if (op == "mul") return series_json(mul_trunc(f, g));
  if (op == "invert") {
    const S inv = invert_unit(f);
    o.verified = mul_trunc(f, inv) == S::one(f.ring(), f.order());
    return series_json(inv);
  }
  fail(ErrorCode::ParseError, "unknown --op '" + op + "'");
}

class Cli {
 public:
  Cli() : app_("h2cert") {
    app_.option_defaults()->always_capture_default();
    app_.require_subcommand(1);
    app_.fallthrough();
    app_.add_flag("--quiet", quiet_, "suppress progress on stderr");
    add_series_eval();
    add_rank();
    add_decompose();
    add_sieve_find();
    add_sieve_verify();
    add_sieve_experiment();
    add_powers();
    add_build_f();
    add_divisibility();
    add_specker();
    add_continuum();
    add_coinvariants();
    add_h2hat();
    add_ce_h2();
    add_acceptance();
  }

  CliOutcome run(const std::vector<std::string>& args) {
    CliOutcome out;
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app_.parse(reversed);
    } catch (const CLI::CallForHelp&) {
      const CLI::App* sub = active();
      out.out = sub ? sub->help() : app_.help();
      return out;
    } catch (const CLI::ParseError& e) {
      out.exit_code = 2;
      out.err = std::string("usage error: ") + e.what() + "\n";
      return out;
    }
    const auto& [name, cmd] = *active_command();
    std::ostringstream progress_text;
    Progress progress = [&](const std::string& line) {
      if (!quiet_) progress_text << line << "\n";
    };
    const auto start = std::chrono::steady_clock::now();
    try {
      Outcome o = cmd.run(progress);
      const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
      Json report{{"schemaVersion", 1},
                  {"command", name},
                  {"params", params(cmd)},
                  {"result", std::move(o.result)},
                  {"verified", o.verified},
                  {"elapsedMs", elapsed.count()}};
      out.out = report.dump(2) + "\n";
      out.exit_code = (o.holds && o.verified) ? 0 : 1;
    } catch (const AlgebraError& e) {
      out.exit_code = 2;
      progress_text << "error: " << e.what() << "\n";
    } catch (const std::exception& e) {
      out.exit_code = 2;
      progress_text << "error: " << e.what() << "\n";
    }
    out.err = progress_text.str();
    return out;
  }

 private:
  CLI::App* sub(const std::string& name, const std::string& description) {
    CLI::App* s = app_.add_subcommand(name, description);
    commands_[name].app = s;
    return s;
  }

  void flag(const std::string& command, const std::string& name, bool& target, const std::string& description) {
    commands_[command].app->add_flag(name, target, description);
    commands_[command].flags.insert(name.substr(2));
  }

  CLI::App* active() {
    for (auto& [name, cmd] : commands_) {
      if (cmd.app->parsed()) return cmd.app;
    }
    return nullptr;
  }

  std::map<std::string, Command>::iterator active_command() {
    return std::find_if(commands_.begin(), commands_.end(), [](const auto& kv) { return kv.second.app->parsed(); });
  }

  static Json param_value(const std::string& text) {
    if (!text.empty() && text.size() < 19) {
      std::size_t used = 0;
      try {
        const long long v = std::stoll(text, &used);
        if (used == text.size() && std::to_string(v) == text) return v;
      } catch (const std::exception&) {
      }
    }
    return text;
  }

  static Json params(const Command& cmd) {
    Json out = Json::object();
    for (const CLI::Option* opt : cmd.app->get_options()) {
      if (opt == cmd.app->get_help_ptr() || opt->get_lnames().empty()) continue;
      const std::string name = opt->get_lnames().front();
      if (cmd.flags.count(name)) {
        out[name] = opt->count() > 0;
        continue;
      }
      std::string value = opt->count() > 0 ? opt->as<std::string>() : opt->get_default_str();
      if (opt->count() == 0 && value.empty()) continue;
      out[name] = param_value(value);
    }
    return out;
  }

  void add_series_eval() {
    struct Opts {
      std::string op;
      std::string f = "1";
      std::string g = "1";
      std::string q = "t";
      std::string poly = "x+y+x*y";
      std::size_t order = 8;
      std::size_t nx = 8;
      std::size_t ny = 8;
      std::uint64_t mod = 0;
      unsigned exp = 1;
    };
    auto o = std::make_shared<Opts>();
    auto* s = sub("series-eval", "truncated series arithmetic");
    s->add_option("--op", o->op, "mul | invert | phi | antisym | reduce | mul-poly | theta | transpose")->required();
    s->add_option("--f", o->f, "first operand, e.g. 1+x or x^2*y");
    s->add_option("--g", o->g, "second operand for mul and theta");
    s->add_option("--q", o->q, "Laurent polynomial in t for phi");
    s->add_option("--poly", o->poly, "bivariate polynomial for mul-poly");
    s->add_option("--order", o->order, "truncation of univariate series");
    s->add_option("--nx", o->nx, "x truncation of bivariate series");
    s->add_option("--ny", o->ny, "y truncation of bivariate series");
    s->add_option("--mod", o->mod, "prime; 0 computes over Z");
    s->add_option("--exp", o->exp, "work in Z/p^exp");
    commands_["series-eval"].run = [o](const Progress&) {
      Outcome out;
      const RingTag ring = ring_from(o->mod, o->exp);
      out.result["op"] = o->op;
      out.result["ring"] = ring_json(ring);
      Json value;
      if (o->op == "mul" || o->op == "invert") {
        const ZSeries f = parse_series(o->f, o->order);
        const ZSeries g = parse_series(o->g, o->order);
        value = ring.kind() == RingKind::IntZ ? series_eval(o->op, f, g, out)
                                              : series_eval(o->op, reduce_mod(f, ring), reduce_mod(g, ring), out);
      } else if (o->op == "phi") {
        value = series_json(phi_map(parse_laurent_poly(o->q), o->order));
      } else if (o->op == "reduce") {
        if (ring.kind() == RingKind::IntZ) fail(ErrorCode::UnsupportedRing, "reduce needs --mod");
        value = series_json(reduce_mod(parse_series(o->f, o->order), ring));
      } else if (o->op == "theta") {
        const ZSeries f = parse_series(o->f, o->order);
        const ZSeries g = parse_series(o->g, o->order);
        value = ring.kind() == RingKind::IntZ ? bi_series_json(theta_image(f, g))
                                              : bi_series_json(theta_image(reduce_mod(f, ring), reduce_mod(g, ring)));
      } else if (o->op == "antisym" || o->op == "transpose" || o->op == "mul-poly") {
        const ZBiSeries f = parse_bi_series(o->f, o->nx, o->ny);
        auto apply = [&](const auto& x) {
          if (o->op == "antisym") return bi_series_json(antisymmetrize(x));
          if (o->op == "transpose") return bi_series_json(transpose(x));
          return bi_series_json(mul_by_poly(x, parse_bi_poly(o->poly)));
        };
        value = ring.kind() == RingKind::IntZ ? apply(f) : apply(reduce_mod(f, ring));
      } else {
        fail(ErrorCode::ParseError, "unknown --op '" + o->op + "'");
      }
      out.result["series"] = std::move(value);
      return out;
    };
  }

  void add_rank() {
    struct Opts {
      std::string source = "explicit-F";
      std::string f;
      std::size_t nx = 250;
      std::size_t ny = 250;
      std::uint64_t mod = 0;
    };
    auto o = std::make_shared<Opts>();
    auto* s = sub("rank", "observed rank of the coefficient matrix");
    s->add_option("--source", o->source, "explicit-F | explicit-F-antisym | series");
    s->add_option("--f", o->f, "series text for --source series");
    s->add_option("--nx", o->nx, "x truncation");
    s->add_option("--ny", o->ny, "y truncation");
    s->add_option("--mod", o->mod, "prime; 0 ranks over Z with invariant factors");
    commands_["rank"].run = [o](const Progress& progress) {
      Outcome out;
      const ZBiSeries f = load_source(o->source, o->f, o->nx, o->ny);
      progress("series loaded, ranking " + std::to_string(o->ny) + " x " + std::to_string(o->nx));
      const RankReport r = o->mod == 0 ? observed_rank(f) : observed_rank(reduce_mod(f, RingTag::prime_field(o->mod)));
      out.result = rank_json(r);
      return out;
    };
  }

  void add_decompose() {
    struct Opts {
      std::string source = "explicit-F";
      std::string f;
      std::size_t nx = 100;
      std::size_t ny = 100;
      std::uint64_t mod = 0;
      std::size_t rank = 0;
    };
    auto o = std::make_shared<Opts>();
    auto* s = sub("decompose", "finite-rank decomposition over F_p");
    s->add_option("--source", o->source, "explicit-F | explicit-F-antisym | series");
    s->add_option("--f", o->f, "series text for --source series");
    s->add_option("--nx", o->nx, "x truncation");
    s->add_option("--ny", o->ny, "y truncation");
    s->add_option("--mod", o->mod, "prime")->required();
    s->add_option("--rank", o->rank, "expected rank")->required();
    commands_["decompose"].run = [o](const Progress&) {
      Outcome out;
      const ModBiSeries f = reduce_mod(load_source(o->source, o->f, o->nx, o->ny), RingTag::prime_field(o->mod));
      const auto pairs = finite_rank_decomposition(f, o->rank);
      Json list = Json::array();
      for (const auto& [a, b] : pairs) list.push_back(Json{{"a", series_json(a)}, {"b", series_json(b)}});
      const bool exact = recompose(f.ring(), f.nx(), f.ny(), pairs) == f;
      out.result = Json{{"rank", pairs.size()}, {"pairs", std::move(list)}, {"reconstructs", exact}};
      out.verified = exact;
      return out;
    };
  }

  void add_sieve_find() {
    struct Opts {
      std::uint64_t p = 0;
      std::size_t n = 0;
      std::size_t d = 0;
      std::size_t nx = 300;
      std::size_t ny = 300;
      long deg = 4;
      long m_max = -1;
      std::string source = "explicit-F-antisym";
      std::string f;
    };
    auto o = std::make_shared<Opts>();
    auto* s = sub("sieve-find", "search for an n,d-sieve");
    s->add_option("--p", o->p, "prime")->required();
    s->add_option("--n", o->n, "number of pillars")->required();
    s->add_option("--d", o->d, "pillar spacing")->required();
    s->add_option("--nx", o->nx, "x truncation");
    s->add_option("--ny", o->ny, "y truncation");
    s->add_option("--deg", o->deg, "independence degree bound D");
    s->add_option("--m-max", o->m_max, "largest offset; -1 uses Ny - nd - d - 1");
    s->add_option("--source", o->source, "explicit-F-antisym | explicit-F | series");
    s->add_option("--f", o->f, "series text for --source series");
    commands_["sieve-find"].run = [o](const Progress& progress) {
      Outcome out;
      const ModBiSeries f = reduce_mod(load_source(o->source, o->f, o->nx, o->ny), RingTag::prime_field(o->p));
      const std::size_t m_max = o->m_max < 0 ? default_m_max(o->ny, o->n, o->d) : static_cast<std::size_t>(o->m_max);
      progress("scanning offsets 0.." + std::to_string(m_max));
      const SieveSearch found = find_sieve(f, o->n, o->d, m_max, o->deg);
      out.result = Json{{"found", found.certificate.has_value()},
                        {"certificate", found.certificate ? certificate_json(*found.certificate) : Json(nullptr)},
                        {"mMax", found.m_max},
                        {"windowsPassed", found.windows_passed},
                        {"pillarSolves", found.pillar_solves},
                        {"boundsSkipped", found.bounds_skipped}};
      if (is_explicit(o->source)) {
        out.result["exponentChainHolds"] = exponent_chain_holds(static_cast<long>(o->d));
        if (found.certificate) out.result["pillarFamily"] = explicit_pillar_family(f, *found.certificate);
      }
      if (found.certificate) out.verified = verify_sieve(f, *found.certificate);
      progress(found.certificate ? "sieve at m = " + std::to_string(found.certificate->m) : "no sieve in range");
      return out;
    };
  }

  void add_sieve_verify() {
    struct Opts {
      std::string cert;
      long m = -1;
      std::uint64_t p = 0;
      std::size_t n = 0;
      std::size_t d = 0;
      long deg = 4;
      std::size_t nx = 300;
      std::size_t ny = 300;
      std::string source = "explicit-F-antisym";
      std::string f;
      long shift = 0;
      long corrupt_a = -1;
      long corrupt_b = -1;
    };
    auto o = std::make_shared<Opts>();
    auto* s = sub("sieve-verify", "re-check a sieve certificate");
    s->add_option("--cert", o->cert, "certificate JSON file (a sieve-find report or bare certificate)");
    s->add_option("--m", o->m, "offset to certify instead of --cert");
    s->add_option("--p", o->p, "prime, with --m");
    s->add_option("--n", o->n, "pillars, with --m");
    s->add_option("--d", o->d, "spacing, with --m");
    s->add_option("--deg", o->deg, "degree bound, with --m");
    s->add_option("--nx", o->nx, "x truncation");
    s->add_option("--ny", o->ny, "y truncation");
    s->add_option("--source", o->source, "explicit-F-antisym | explicit-F | series");
    s->add_option("--f", o->f, "series text for --source series");
    s->add_option("--shift", o->shift, "add to the certified offset");
    s->add_option("--corrupt-a", o->corrupt_a, "x exponent of a coefficient to set to 1");
    s->add_option("--corrupt-b", o->corrupt_b, "y exponent of a coefficient to set to 1");
    commands_["sieve-verify"].run = [o](const Progress&) {
      Outcome out;
      SieveCertificate cert;
      if (!o->cert.empty()) {
        std::ifstream in(o->cert);
        if (!in) fail(ErrorCode::ParseError, "cannot read " + o->cert);
        Json j;
        try {
          j = Json::parse(in);
        } catch (const Json::exception& e) {
          fail(ErrorCode::ParseError, e.what());
        }
        if (j.contains("result")) j = j["result"].at("certificate");
        cert = certificate_from_json(j);
      } else if (o->m >= 0) {
        if (o->p == 0 || o->n == 0 || o->d == 0) fail(ErrorCode::ParseError, "--m needs --p, --n and --d");
        cert.p = o->p;
        cert.n = o->n;
        cert.d = o->d;
        cert.m = static_cast<std::size_t>(o->m);
        cert.m_max = cert.m;
        cert.nx = o->nx;
        cert.ny = o->ny;
        cert.pillars = sieve_pillars(cert.m, cert.n, cert.d);
        cert.zero_windows = sieve_windows(cert.m, cert.n, cert.d);
        cert.independence.p = o->p;
        cert.independence.count = o->n;
        cert.independence.degree_bound = o->deg;
        cert.independence.truncation = static_cast<long>(o->nx);
      } else {
        fail(ErrorCode::ParseError, "give --cert or --m");
      }
      if (o->shift < 0 && static_cast<std::size_t>(-o->shift) > cert.m) fail(ErrorCode::IndexOutOfRange, "shift below 0");
      cert.m = static_cast<std::size_t>(static_cast<long>(cert.m) + o->shift);
      ModBiSeries f = reduce_mod(load_source(o->source, o->f, cert.nx, cert.ny), RingTag::prime_field(cert.p));
      if (o->corrupt_a >= 0 || o->corrupt_b >= 0) {
        if (o->corrupt_a < 0 || o->corrupt_b < 0) fail(ErrorCode::ParseError, "--corrupt-a and --corrupt-b go together");
        f.set(static_cast<std::size_t>(o->corrupt_a), static_cast<std::size_t>(o->corrupt_b), 1);
      }
      const bool valid = verify_sieve(f, cert);
      out.result = Json{{"valid", valid}, {"certificate", certificate_json(cert)}};
      out.verified = valid;
      return out;
    };
  }

  void add_sieve_experiment() {
    struct Opts {
      std::uint64_t p = 5;
      std::string alpha = "x";
      std::string beta = "1+x";
      std::size_t d = 5;
      std::size_t n = 5;
      std::size_t rank_h = 4;
      std::size_t rank_g = 4;
      std::uint64_t seed = 1;
      std::size_t runs = 1;
      std::size_t nx = 96;
      std::size_t ny = 96;
      long deg = 4;
    };
    auto o = std::make_shared<Opts>();
    auto* s = sub("sieve-experiment", "build (beta - alpha y) H + G and scan it for sieves");
    s->add_option("--p", o->p, "prime");
    s->add_option("--alpha", o->alpha, "rational function in x, e.g. x or (1+x)/(1-x)");
    s->add_option("--beta", o->beta, "rational function in x");
    s->add_option("--d", o->d, "pillar spacing");
    s->add_option("--n", o->n, "number of pillars");
    s->add_option("--rank-h", o->rank_h, "rank bound of H, at most d-1");
    s->add_option("--rank-g", o->rank_g, "rank bound of G, at most n-1");
    s->add_option("--seed", o->seed, "first seed");
    s->add_option("--runs", o->runs, "consecutive seeds to run");
    s->add_option("--nx", o->nx, "x truncation");
    s->add_option("--ny", o->ny, "y truncation");
    s->add_option("--deg", o->deg, "independence degree bound D");
    commands_["sieve-experiment"].run = [o](const Progress& progress) {
      Outcome out;
      SieveExperimentParams params;
      params.alpha = parse_ratfunc(o->alpha, o->p);
      params.beta = parse_ratfunc(o->beta, o->p);
      params.d = o->d;
      params.n = o->n;
      params.rank_h = o->rank_h;
      params.rank_g = o->rank_g;
      params.nx = o->nx;
      params.ny = o->ny;
      params.degree_bound = o->deg;
      Json runs = Json::array();
      std::size_t confirmed = 0;
      for (std::size_t k = 0; k < o->runs; ++k) {
        params.seed = o->seed + k;
        const auto trace = sieve_vs_rank_experiment(params);
        Json run{{"seed", params.seed},
                 {"layout", trace.layout},
                 {"outcome", trace.contradiction() ? "sieve-found" : "no-sieve-confirmed"},
                 {"mMax", trace.m_max},
                 {"windowsPassed", trace.windows_passed},
                 {"pillarSolves", trace.pillar_solves},
                 {"boundsSkipped", trace.bounds_skipped}};
        Json lambdas = Json::array();
        for (const auto& l : trace.lambdas) lambdas.push_back(l.to_string());
        run["lambdaOffset"] = trace.lambda_offset;
        run["lambdas"] = std::move(lambdas);
        if (o->runs == 1) {
          Json basis = Json::array();
          for (const auto& v : trace.v_basis) basis.push_back(laurent_json(v));
          run["vBasis"] = std::move(basis);
        }
        if (trace.sieve) run["sieve"] = certificate_json(*trace.sieve);
        if (!trace.contradiction()) ++confirmed;
        progress("seed " + std::to_string(params.seed) + " (" + trace.layout + "): " + run["outcome"].get<std::string>());
        runs.push_back(std::move(run));
      }
      out.result = Json{{"alpha", parse_ratfunc(o->alpha, o->p).to_string()},
                        {"beta", parse_ratfunc(o->beta, o->p).to_string()},
                        {"runs", std::move(runs)},
                        {"confirmed", confirmed},
                        {"allConfirmed", confirmed == o->runs}};
      out.holds = confirmed == o->runs;
      return out;
    };
  }

  void add_powers() {
    struct Opts {
      std::string u = "x";
      std::string v = "-1-x";
      std::uint64_t p = 5;
      std::size_t n = 8;
      bool no_check = false;
    };
    auto o = std::make_shared<Opts>();
    auto* s = sub("powers-indep", "independence of U^{n-j} V^j mod p; exit 1 when dependent");
    s->add_option("--u", o->u, "integer polynomial in x");
    s->add_option("--v", o->v, "integer polynomial in x");
    s->add_option("--p", o->p, "prime");
    s->add_option("--n", o->n, "power");
    flag("powers-indep", "--no-check", o->no_check, "skip the constant-ratio and rationality checks");
    commands_["powers-indep"].run = [o](const Progress&) {
      Outcome out;
      const auto r = powers_independent(parse_int_poly(o->u), parse_int_poly(o->v), o->p, o->n, !o->no_check);
      out.result = Json{{"independent", r.independent}, {"relation", r.relation}};
      out.holds = r.independent;
      return out;
    };
  }

  void add_build_f() {
    struct Opts {
      std::size_t nx = 100;
      std::size_t ny = 100;
      std::uint64_t mod = 0;
      bool antisym = false;
    };
    auto o = std::make_shared<Opts>();
    auto* s = sub("build-f", "the explicit series F with its exponent collisions");
    s->add_option("--nx", o->nx, "x truncation");
    s->add_option("--ny", o->ny, "y truncation");
    s->add_option("--mod", o->mod, "reduce mod this prime; 0 keeps Z");
    flag("build-f", "--antisym", o->antisym, "antisymmetrize first");
    commands_["build-f"].run = [o](const Progress&) {
      Outcome out;
      auto audited = build_F_audited(o->nx, o->ny);
      ZBiSeries f = o->antisym ? antisymmetrize(audited.f) : audited.f;
      Json collisions = Json::array();
      for (const auto& c : audited.collisions) collisions.push_back(Json{{"s", c.s}, {"t", c.t}, {"sources", c.sources}});
      out.result["series"] = o->mod == 0 ? bi_series_json(f) : bi_series_json(reduce_mod(f, RingTag::prime_field(o->mod)));
      out.result["collisions"] = std::move(collisions);
      return out;
    };
  }

  void add_divisibility() {
    struct Opts {
      std::uint64_t p = 0;
      std::size_t nx = 300;
      std::size_t ny = 300;
    };
    auto o = std::make_shared<Opts>();
    auto* s = sub("divisibility", "(F - sum_{k<p} g_k h~_k) / p");
    s->add_option("--p", o->p, "prime")->required();
    s->add_option("--nx", o->nx, "x truncation");
    s->add_option("--ny", o->ny, "y truncation");
    commands_["divisibility"].run = [o](const Progress&) {
      Outcome out;
      const auto w = divisibility_witness(o->p, o->nx, o->ny);
      ZBiSeries check = build_F(o->nx, o->ny);
      for (long k = 0; k < static_cast<long>(o->p); ++k) {
        check -= outer_product(build_generator(GeneratorKind::G, k, o->nx), build_generator(GeneratorKind::HTilde, k, o->ny));
      }
      for (std::size_t b = 0; b < o->ny; ++b) {
        for (std::size_t a = 0; a < o->nx; ++a) {
          if (check.at(a, b) != Integer(o->p) * w.quotient.at(a, b)) out.verified = false;
        }
      }
      out.result = Json{{"p", o->p}, {"residualTerms", w.residual_terms}, {"quotient", bi_series_json(w.quotient)}};
      return out;
    };
  }

  void add_specker() {
    struct Opts {
      std::uint64_t p = 3;
      unsigned k = 4;
      std::size_t n = 10;
    };
    auto o = std::make_shared<Opts>();
    auto* s = sub("specker", "sum p^i x^i y^i checked at precision p^k");
    s->add_option("--p", o->p, "prime");
    s->add_option("--k", o->k, "precision exponent");
    s->add_option("--n", o->n, "truncation");
    commands_["specker"].run = [o](const Progress&) {
      Outcome out;
      const auto r = specker_padic(o->p, o->k, o->n);
      Json factors = Json::array();
      for (const auto& v : r.invariant_factors) factors.push_back(integer_json(v));
      out.result = Json{{"p", r.p},
                        {"kCut", r.k_cut},
                        {"order", r.order},
                        {"residualDivisible", r.residual_divisible},
                        {"agreesModPk", r.agrees_mod_pk},
                        {"invariantFactors", std::move(factors)},
                        {"factorsExpected", r.factors_expected},
                        {"symmetric", r.symmetric}};
      out.holds = r.residual_divisible && r.agrees_mod_pk && r.factors_expected && r.symmetric;
      return out;
    };
  }

  void add_continuum() {
    struct Opts {
      std::string r = "-1,0,1/2,1";
      std::size_t n = 4096;
      long deg = 3;
      std::string primes = "2,3";
    };
    auto o = std::make_shared<Opts>();
    auto* s = sub("continuum", "supports, isolation and independence of the continuum family");
    s->add_option("--r", o->r, "comma-separated rationals");
    s->add_option("--n", o->n, "truncation");
    s->add_option("--deg", o->deg, "independence degree bound D; isolation radius is D+1");
    s->add_option("--primes", o->primes, "comma-separated primes");
    commands_["continuum"].run = [o](const Progress& progress) {
      Outcome out;
      std::vector<Rational> rs;
      for (const auto& t : split(o->r, ',')) rs.push_back(parse_rational(t));
      if (rs.empty()) fail(ErrorCode::ParseError, "--r is empty");
      std::sort(rs.begin(), rs.end());
      Json members = Json::array();
      std::vector<std::vector<std::size_t>> supports;
      for (const auto& r : rs) {
        supports.push_back(continuum_support(r, o->n));
        members.push_back(Json{{"r", r.get_str()}, {"support", supports.back()}});
      }
      bool monotone = true;
      for (std::size_t i = 0; i + 1 < supports.size(); ++i) {
        monotone = monotone && std::includes(supports[i + 1].begin(), supports[i + 1].end(), supports[i].begin(), supports[i].end());
      }
      Json isolation = Json::array();
      bool isolated = true;
      for (const auto& c : isolation_certificates(rs, o->n, static_cast<std::size_t>(o->deg + 1))) {
        isolated = isolated && c.holds;
        isolation.push_back(isolation_json(c));
      }
      Json independence = Json::array();
      bool independent = true;
      for (const auto& t : split(o->primes, ',')) {
        const std::uint64_t p = std::stoull(t);
        std::vector<LaurentTrunc> g;
        for (const auto& r : rs) g.push_back(LaurentTrunc::from_series(reduce_mod(continuum_member(r, o->n), RingTag::prime_field(p))));
        const auto w = rational_dependence(g, o->deg, static_cast<long>(o->n));
        independent = independent && !w.found();
        if (!verify_dependence(g, w)) out.verified = false;
        progress("mod " + t + ": " + (w.found() ? "dependent" : "independent"));
        independence.push_back(dependence_json(w));
      }
      out.result = Json{{"members", std::move(members)},
                        {"monotone", monotone},
                        {"isolation", std::move(isolation)},
                        {"independence", std::move(independence)}};
      out.holds = monotone && isolated && independent;
      return out;
    };
  }

  void add_coinvariants() {
    struct Opts {
      std::string model = "group";
      std::size_t window = 4;
    };
    auto o = std::make_shared<Opts>();
    auto* s = sub("coinvariants", "Lambda^2 coinvariants on a finite window");
    s->add_option("--model", o->model, "group | completion");
    s->add_option("--window", o->window, "window size W or truncation N");
    commands_["coinvariants"].run = [o](const Progress&) {
      Outcome out;
      WindowModel model = WindowModel::Group;
      if (o->model == "completion") {
        model = WindowModel::Completion;
      } else if (o->model != "group") {
        fail(ErrorCode::ParseError, "unknown --model '" + o->model + "'");
      }
      out.result = Json{{"model", o->model}, {"window", o->window},
                        {"presentation", presentation_json(lambda2_coinvariants(model, o->window))}};
      return out;
    };
  }

  void add_h2hat() {
    auto n = std::make_shared<std::size_t>(2);
    auto* s = sub("h2hat-quotient", "truncated quotient by (x+y+xy) and symmetric series");
    s->add_option("--n", *n, "truncation");
    commands_["h2hat-quotient"].run = [n](const Progress&) {
      Outcome out;
      out.result = Json{{"n", *n}, {"presentation", presentation_json(h2hat_quotient_presentation(*n))}};
      return out;
    };
  }

  void add_ce_h2() {
    auto n = std::make_shared<std::size_t>(2);
    auto* s = sub("ce-h2", "Chevalley-Eilenberg H_2 of Z e + Z[x]/x^N");
    s->add_option("--n", *n, "truncation");
    commands_["ce-h2"].run = [n](const Progress&) {
      Outcome out;
      const auto c = ce_h2(*n);
      Json torsion = Json::array();
      for (const auto& t : c.h2_torsion) torsion.push_back(integer_json(t));
      out.result = Json{{"n", c.n},
                        {"d2", matrix_json(c.d2)},
                        {"d3", matrix_json(c.d3)},
                        {"chainComplex", c.chain_complex},
                        {"h2Rank", c.h2_rank},
                        {"h2Torsion", std::move(torsion)},
                        {"coinvariantRank", c.coinvariant_rank},
                        {"invariantRank", c.invariant_rank},
                        {"rankIdentity", c.rank_identity()}};
      out.holds = c.chain_complex && c.rank_identity();
      return out;
    };
  }

  void add_acceptance() {
    auto scale = std::make_shared<std::string>(acceptance_scale_from_env() == AcceptanceScale::Full ? "full" : "small");
    auto* s = sub("acceptance", "run every acceptance criterion");
    s->add_option("--scale", *scale, "small | full (default from ACCEPTANCE_SCALE)");
    commands_["acceptance"].run = [scale](const Progress& progress) {
      Outcome out;
      AcceptanceScale level = AcceptanceScale::Full;
      if (*scale == "small") {
        level = AcceptanceScale::Small;
      } else if (*scale != "full") {
        fail(ErrorCode::ParseError, "unknown --scale '" + *scale + "'");
      }
      Json criteria = Json::array();
      bool all = true;
      for (const auto& r : run_acceptance(level, [&](const CriterionResult& c) { progress(format_criterion(c)); })) {
        all = all && r.pass;
        criteria.push_back(Json{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
      }
      out.result = Json{{"scale", *scale}, {"criteria", std::move(criteria)}, {"allPass", all}};
      out.holds = all;
      return out;
    };
  }

  CLI::App app_;
  bool quiet_ = false;
  std::map<std::string, Command> commands_;
};

}  // namespace

CliOutcome run_cli(const std::vector<std::string>& args) {
  Cli cli;
  return cli.run(args);
}

std::vector<std::string> replay_args(const Json& report) {
  std::vector<std::string> args{report.at("command").get<std::string>()};
  for (const auto& [key, value] : report.at("params").items()) {
    if (value.is_boolean()) {
      if (value.get<bool>()) args.push_back("--" + key);
    } else {
      args.push_back("--" + key + "=" + (value.is_string() ? value.get<std::string>() : value.dump()));
    }
  }
  return args;
}

const std::vector<std::string>& cli_commands() {
  static const std::vector<std::string> names{"series-eval",   "rank",         "decompose",  "sieve-find",
                                              "sieve-verify",  "sieve-experiment", "powers-indep", "build-f",
                                              "divisibility",  "specker",      "continuum",  "coinvariants",
                                              "h2hat-quotient", "ce-h2",        "acceptance"};
  return names;
}

}  // namespace h2cert
