#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <random>
#include <set>

#include "herglotz/debranges.hpp"
#include "herglotz/divisors.hpp"
#include "herglotz/matrix_herglotz.hpp"
#include "herglotz/scalar_herglotz.hpp"
#include "json_io.hpp"

namespace herglotz::cli {

namespace {

using io::Json;

struct Config {
  std::string output = "text";
  int max_refine = 64;
  int samples = 9;
  std::uint64_t seed = 0;
  std::string criterion = "ii";
  std::string interval;
  int steps = 256;
  std::string file;

  Limits limits() const { return Limits{max_refine}; }
};

// Result of a command: a JSON document, its text rendering and the exit code.
struct Result {
  Json doc;
  std::string text;
  int code = Success;
};

const std::set<std::string> kHypotheses{"square", "sharp_real", "real_poles", "growth"};

int exit_for(const Verdict& v, bool hypotheses_apply) {
  if (hypotheses_apply)
    for (const Check& c : v.checks)
      if (c.failed() && c.index_set.empty() && kHypotheses.contains(c.condition)) return HypothesisViolated;
  switch (v.outcome) {
    case Outcome::Accept:
    case Outcome::Consistent: return Success;
    case Outcome::Reject: return Rejected;
    case Outcome::Undecided: return Undecided;
  }
  return Undecided;
}

int exit_for(Errc e) {
  switch (e) {
    case Errc::Undecided: return Undecided;
    case Errc::InterlacingViolated:
    case Errc::NotNInterlacing: return Rejected;
    case Errc::MalformedInput:
    case Errc::DimensionMismatch:
    case Errc::IndexOutOfRange:
    case Errc::ZeroPolynomial:
    case Errc::DivisionByZero:
    case Errc::EndpointIsRoot:
    case Errc::EndpointOnSupport:
    case Errc::PoleOnGrid:
    case Errc::RankDeficient: return Malformed;
    default: return HypothesisViolated;
  }
}

std::string render_checks(const Verdict& v, const std::string& prefix = "") {
  std::string s;
  for (const Check& c : v.checks) {
    s += prefix;
    if (!c.index_set.empty()) {
      s += "[";
      for (std::size_t k = 0; k < c.index_set.size(); ++k) s += (k ? "," : "") + std::to_string(c.index_set[k]);
      s += "] ";
    }
    s += c.condition + ": " + c.result;
    for (const auto& [k, val] : c.witness) s += "  " + k + "=" + val;
    s += "\n";
  }
  for (const auto& n : v.notes) s += prefix + "note: " + n + "\n";
  return s;
}

Result verdict_result(const Verdict& v, bool hypotheses_apply) {
  return {io::from(v), "outcome: " + std::string(outcome_name(v.outcome)) + "\n" + render_checks(v),
          exit_for(v, hypotheses_apply)};
}

// Points k i / (samples + 1); a nonzero seed adds real parts in {-4, -7/2, ..., 4}.
std::vector<GaussRat> sample_grid(int samples, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::vector<GaussRat> grid;
  for (int k = 1; k <= samples; ++k) {
    const Rat x = seed == 0 ? Rat(0) : Rat(static_cast<long>(gen() % 17) - 8) / 2;
    grid.emplace_back(x, Rat(k) / (samples + 1));
  }
  return grid;
}

Result check_matrix(const Config& cfg, const MatRatFn& q) {
  if (cfg.criterion == "ii") return verdict_result(verify_criterion_ii(q, cfg.limits()), true);
  if (cfg.criterion == "iii") return verdict_result(verify_criterion_iii(q, cfg.limits()), true);

  const Verdict ii = verify_criterion_ii(q, cfg.limits());
  if (exit_for(ii, true) == HypothesisViolated) return verdict_result(ii, true);
  const Verdict iii = verify_criterion_iii(q, cfg.limits());
  const Verdict i = sample_criterion_i(q, sample_grid(cfg.samples, cfg.seed));

  bool agree = true;
  Outcome outcome = ii.outcome;
  if (ii.outcome == Outcome::Undecided || iii.outcome == Outcome::Undecided) outcome = Outcome::Undecided;
  else if (ii.outcome != iii.outcome) agree = false;
  // A sampled rejection contradicts an acceptance; a passing sample proves nothing.
  if (i.rejected() && (ii.accepted() || iii.accepted())) agree = false;
  if (!agree) outcome = Outcome::Undecided;

  Json checks = Json::array();
  std::string text;
  const std::pair<const char*, const Verdict*> parts[] = {{"ii", &ii}, {"iii", &iii}, {"i", &i}};
  Json notes = Json::array();
  for (const auto& [name, v] : parts) {
    const Json cert = io::from(*v);
    for (Json c : cert.at("checks")) {
      c["criterion"] = name;
      checks.push_back(std::move(c));
    }
    for (const auto& n : v->notes) notes.push_back(std::string(name) + ": " + n);
    text += std::string("criterion ") + name + ": " + std::string(outcome_name(v->outcome)) + "\n" + render_checks(*v, "  ");
  }
  Json doc{{"outcome", std::string(outcome_name(outcome))},
           {"agreement", agree},
           {"criteria",
            {{"ii", std::string(outcome_name(ii.outcome))},
             {"iii", std::string(outcome_name(iii.outcome))},
             {"i", std::string(outcome_name(i.outcome))}}},
           {"checks", std::move(checks)}};
  if (!notes.empty()) doc["notes"] = std::move(notes);
  text = "outcome: " + std::string(outcome_name(outcome)) + (agree ? "" : " (criteria disagree)") + "\n" + text;
  const int code = !agree ? Undecided : outcome == Outcome::Accept ? Success : outcome == Outcome::Reject ? Rejected : Undecided;
  return {std::move(doc), std::move(text), code};
}

Result check_hb(const Config& cfg, const Json& in) {
  if (in.contains("E") && in.at("E").is_object()) return verdict_result(check_hb_n(io::to_matrix(in.at("E")), cfg.limits()), false);
  Poly a, b;
  if (in.contains("E")) {
    const Poly e = io::to_poly(in.at("E"));
    a = (e + e.conj()) * GaussRat(Rat(1, 2));
    b = (e - e.conj()) * GaussRat(0, Rat(-1, 2));
  } else {
    a = io::to_poly(in.contains("A") ? in.at("A") : Json());
    b = io::to_poly(in.contains("B") ? in.at("B") : Json());
  }
  return verdict_result(classical_hb_check(a, b, cfg.limits()), false);
}

Result check_debranges_cmd(const Config& cfg, const Json& in) {
  if (in.contains("E")) return verdict_result(check_hb_n(io::to_matrix(in.at("E")), cfg.limits()), false);
  if (!in.contains("E_minus") || !in.contains("E_plus")) throw Error(Errc::MalformedInput, "expected E_minus and E_plus, or E");
  const DeBrangesInput d{io::to_matrix(in.at("E_minus")), io::to_matrix(in.at("E_plus"))};
  return verdict_result(check_debranges(d, cfg.limits()), false);
}

Result factor_det(const Config& cfg, const MatRatFn& q) {
  const auto factors = factor_determinant(q, cfg.limits());
  Json arr = Json::array();
  std::string text;
  for (const auto& f : factors) {
    arr.push_back(io::from(f));
    text += to_string(f) + "\n";
  }
  return {Json{{"factors", std::move(arr)}}, std::move(text), Success};
}

Result colour(const DivisorFn& theta) {
  const auto parts = colour_decompose(theta);
  Json arr = Json::array();
  std::string text = "order: " + std::to_string(parts.size()) + "\n";
  for (std::size_t k = 0; k < parts.size(); ++k) {
    arr.push_back(io::from(parts[k]));
    text += "part " + std::to_string(k + 1) + ":";
    for (const auto& p : parts[k].support()) text += " (" + p.point.to_string() + ", " + std::to_string(p.value) + ")";
    text += "\n";
  }
  return {Json{{"order", parts.size()}, {"parts", std::move(arr)}}, std::move(text), Success};
}

Result synth_scalar(const Config& cfg, const InterlacingData& data) {
  const HerglotzFactor f = herglotz_factor_from(data, cfg.limits());
  if (const auto r = f.as_ratfn()) return {Json{{"function", io::from(*r)}}, to_string(*r) + "\n", Success};
  // Irrational points without their conjugates stay symbolic.
  Json zeros = Json::array(), poles = Json::array();
  for (const auto& z : f.zeros) zeros.push_back(io::from(z));
  for (const auto& p : f.poles) poles.push_back(io::from(p));
  return {Json{{"factor", {{"scale", io::from(f.scale)}, {"zeros", zeros}, {"poles", poles}}}}, f.to_string() + "\n", Success};
}

Result oracle_winding(const Config& cfg, const RatFn& f) {
  const auto comma = cfg.interval.find(',');
  if (comma == std::string::npos) throw Error(Errc::MalformedInput, "--interval expects a,b");
  const Rat a = parse_rat(cfg.interval.substr(0, comma)), b = parse_rat(cfg.interval.substr(comma + 1));
  if (!(a < b)) throw Error(Errc::MalformedInput, "--interval needs a < b");
  const double w = winding_oracle(f, a, b, cfg.steps);
  return {Json{{"winding", w}, {"rounded", std::lround(w)}}, std::to_string(w) + "\n", Success};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  if (const char* env = std::getenv("HERGLOTZ_MAX_REFINE")) {
    try {
      cfg.max_refine = std::stoi(env);
    } catch (const std::exception&) {
      err << "HERGLOTZ_MAX_REFINE must be an integer\n";
      return Malformed;
    }
  }

  CLI::App app{"Exact checks and synthesis for rational Herglotz functions and de Branges matrices", "herglotz"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--output", cfg.output, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-refine", cfg.max_refine, "Interval refinement cap per decision")->check(CLI::PositiveNumber);
  app.add_option("--samples", cfg.samples, "Grid size for sampled checks")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Seed for sampled checks");

  std::function<Result()> action;
  auto with_file = [&](CLI::App* sub) { sub->add_option("file", cfg.file, "Input JSON")->required(); };

  CLI::App* check = app.add_subcommand("check", "Decide a property")->require_subcommand(1);
  CLI::App* c_scalar = check->add_subcommand("scalar", "Scalar Herglotz check");
  with_file(c_scalar);
  c_scalar->callback([&] {
    action = [&] { return verdict_result(check_scalar_herglotz(io::to_ratfn(io::read_file(cfg.file)), cfg.limits()), false); };
  });
  CLI::App* c_matrix = check->add_subcommand("matrix", "Matrix Herglotz check");
  with_file(c_matrix);
  c_matrix->add_option("--criterion", cfg.criterion, "Characterization to use")->check(CLI::IsMember({"ii", "iii", "all"}));
  c_matrix->callback([&] { action = [&] { return check_matrix(cfg, io::to_matrix(io::read_file(cfg.file))); }; });
  CLI::App* c_hb = check->add_subcommand("hb", "Hermite-Biehler check");
  with_file(c_hb);
  c_hb->callback([&] { action = [&] { return check_hb(cfg, io::read_file(cfg.file)); }; });
  CLI::App* c_db = check->add_subcommand("debranges", "de Branges matrix check");
  with_file(c_db);
  c_db->callback([&] { action = [&] { return check_debranges_cmd(cfg, io::read_file(cfg.file)); }; });

  CLI::App* factor = app.add_subcommand("factor", "Factorizations")->require_subcommand(1);
  CLI::App* f_det = factor->add_subcommand("det", "det Q as a product of Herglotz functions");
  with_file(f_det);
  f_det->callback([&] { action = [&] { return factor_det(cfg, io::to_matrix(io::read_file(cfg.file))); }; });

  CLI::App* col = app.add_subcommand("colour", "Split a divisor into 1-interlacing parts");
  with_file(col);
  col->callback([&] { action = [&] { return colour(io::to_divisor(io::read_file(cfg.file))); }; });

  CLI::App* synth = app.add_subcommand("synth", "Synthesis")->require_subcommand(1);
  CLI::App* s_scalar = synth->add_subcommand("scalar", "Herglotz function from interlacing zeros and poles");
  with_file(s_scalar);
  s_scalar->callback([&] { action = [&] { return synth_scalar(cfg, io::to_interlacing(io::read_file(cfg.file))); }; });

  CLI::App* oracle = app.add_subcommand("oracle", "Numeric oracles")->require_subcommand(1);
  CLI::App* o_wind = oracle->add_subcommand("winding", "Argument-principle count on a circle over [a, b]");
  with_file(o_wind);
  o_wind->add_option("--interval", cfg.interval, "a,b")->required();
  o_wind->add_option("--steps", cfg.steps, "Nodes per half circle")->check(CLI::PositiveNumber);
  o_wind->callback([&] { action = [&] { return oracle_winding(cfg, io::to_ratfn(io::read_file(cfg.file))); }; });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Success;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return Malformed;
  }
  if (cfg.max_refine < 1) {
    err << "max refine must be at least 1\n";
    return Malformed;
  }

  try {
    Result r = action();
    const std::string body = cfg.output == "json" ? r.doc.dump(2) + "\n" : r.text;
    (r.code == Malformed || r.code == HypothesisViolated ? err : out) << body;
    return r.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_for(e.code());
  }
}

}  // namespace herglotz::cli
