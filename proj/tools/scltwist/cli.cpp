#include "scltwist/cli.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "scltwist/certificates.hpp"
#include "scltwist/commutator.hpp"
#include "scltwist/numerology.hpp"
#include "scltwist/pi1_action.hpp"
#include "scltwist/proof_script.hpp"
#include "scltwist/rational.hpp"
#include "scltwist/reports.hpp"
#include "scltwist/scl_bounds.hpp"

namespace scltwist::cli {

namespace {

Json optional_rational(const std::optional<Rational>& r) { return r ? Json(scltwist::to_string(*r)) : Json(nullptr); }

Json factor_json(const CommutatorFactor& f) {
  Json out = Json::object();
  out["conjugator"] = f.conjugator.to_string();
  out["left"] = f.left.to_string();
  out["right"] = f.right.to_string();
  return out;
}

Json expression_json(const CommutatorExpression& e) {
  Json out = Json::object();
  out["target"] = e.target.to_string();
  out["factors"] = Json::array();
  for (const CommutatorFactor& f : e.factors) {
    out["factors"].push_back(factor_json(f));
  }
  return out;
}

Json script_json(const ProofScript& s) {
  Json out = Json::object();
  out["source"] = s.source.to_string();
  out["steps"] = Json::array();
  for (const Move& m : s.steps) {
    out["steps"].push_back(m.to_string());
  }
  out["claim"] = s.claim.to_string();
  return out;
}

std::string twist_text(const Word& w) { return from_free_word(w).to_string(); }

Json certificate_json(const TwistCertificate& c) {
  Json out = Json::object();
  out["target"] = twist_text(c.expression.target);
  out["factors"] = Json::array();
  for (const CommutatorFactor& f : c.expression.factors) {
    out["factors"].push_back(
        Json{{"conjugator", twist_text(f.conjugator)}, {"left", twist_text(f.left)}, {"right", twist_text(f.right)}});
  }
  out["mappings"] = Json::array();
  for (const MappingSymbol& m : c.mappings) {
    Json entry = Json::object();
    entry["name"] = m.name();
    entry["declared"] = Json::object();
    for (const auto& [from, to] : m.declared_mapping()) {
      entry["declared"][from] = to;
    }
    out["mappings"].push_back(entry);
  }
  out["derivation"] = script_json(c.derivation);
  return out;
}

Json failure_json(const DerivationFailure& f) {
  Json out = Json::object();
  out["step"] = f.step;
  out["kind"] = f.kind;
  out["message"] = f.message;
  return out;
}

Json error_json(const Error& e) {
  Json out = Json::object();
  out["code"] = e.code();
  out["message"] = e.what();
  return out;
}

Report refused(const std::string& command, Json failure) {
  Report r;
  r.command = command;
  r.status = Status::refused;
  r.failure = std::move(failure);
  return r;
}

std::vector<Report> verify_relations() {
  std::vector<Report> out;
  for (const ModelCheck& c : validate_model()) {
    Report r;
    r.command = "verify relations";
    r.status = c.passed ? Status::ok : Status::fail;
    r.details["check"] = c.name;
    r.details["detail"] = c.detail;
    if (!c.passed) {
      r.failure = Json{{"check", c.name}};
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Report> verify_theorem3() {
  const std::string command = "verify theorem3";
  const CurveConfiguration config = CurveConfiguration::standard();
  std::vector<Report> out;

  const ProofScript script = theorem3_script();
  const DerivationReport replay = check_script(script, config);
  Report r1;
  r1.command = command;
  r1.status = replay.accepted ? Status::ok : Status::fail;
  r1.details["item"] = "script";
  r1.details["source"] = script.source.to_string();
  r1.details["claim"] = script.claim.to_string();
  r1.details["steps"] = script.steps.size();
  r1.details["accepted"] = replay.accepted;
  if (replay.failure) {
    r1.failure = failure_json(*replay.failure);
  }
  out.push_back(std::move(r1));

  const TwistCertificate cert = theorem3_certificate();
  const DerivationReport certified = certify(cert, config);
  Report r2;
  r2.command = command;
  r2.status = certified.accepted ? Status::ok : Status::fail;
  r2.details["item"] = "certificate";
  r2.details["target"] = twist_text(cert.expression.target);
  r2.details["factors"] = cert.expression.factors.size();
  r2.details["derivation_steps"] = cert.derivation.steps.size();
  r2.details["accepted"] = certified.accepted;
  if (certified.failure) {
    r2.failure = failure_json(*certified.failure);
  }
  r2.certificate = certificate_json(cert);
  out.push_back(std::move(r2));

  const TwistModel model = TwistModel::standard();
  const TwistWord lhs = TwistWord::parse("t4 t_alpha^-1 t5 t1^-1");
  const TwistWord rhs = TwistWord::parse("t2^4 t1 t2^-1 t_beta t2^-1 t2^6");
  const bool equal = model.equal_in_rep(lhs, rhs);
  Report r3;
  r3.command = command;
  r3.status = equal ? Status::ok : Status::fail;
  r3.details["item"] = "displayed-equality";
  r3.details["lhs"] = lhs.to_string();
  r3.details["rhs"] = rhs.to_string();
  r3.details["equal_in_rep"] = equal;
  if (!equal) {
    r3.failure = Json{{"check", "displayed-equality"}};
  }
  out.push_back(std::move(r3));
  return out;
}

std::vector<Report> check_script_file(const std::string& path) {
  const std::string command = "check-script";
  const std::string name = std::filesystem::path(path).filename().string();
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return {refused(command, Json{{"code", "io-error"}, {"message", "cannot read '" + name + "'"}})};
  }
  std::ostringstream text;
  text << in.rdbuf();

  ProofScript script;
  try {
    script = parse_proof_script(text.str());
  } catch (const ParseError& e) {
    Report r = refused(command, Json{{"code", e.code()}, {"line", e.line()}, {"message", e.what()}});
    r.details["file"] = name;
    return {r};
  }
  const DerivationReport replay = check_script(script, CurveConfiguration::standard());
  Report r;
  r.command = command;
  r.status = replay.accepted ? Status::ok : Status::fail;
  r.details["file"] = name;
  r.details["source"] = script.source.to_string();
  r.details["claim"] = script.claim.to_string();
  r.details["steps"] = script.steps.size();
  r.details["accepted"] = replay.accepted;
  r.details["words"] = Json::array();
  for (const TwistWord& w : replay.words) {
    r.details["words"].push_back(w.to_string());
  }
  if (replay.failure) {
    r.failure = failure_json(*replay.failure);
  }
  return {r};
}

Report expansion_report(const std::string& command, const CommutatorExpression& e, std::int64_t expected,
                        bool emit) {
  const bool verified = verify_expression(e);
  const bool counted = static_cast<std::int64_t>(e.factors.size()) == expected;
  Report r;
  r.command = command;
  r.status = verified && counted ? Status::ok : Status::fail;
  r.details["factors"] = e.factors.size();
  r.details["expected"] = expected;
  r.details["verified"] = verified;
  if (r.status == Status::fail) {
    r.failure = Json{{"check", verified ? "factor-count" : "verify-expression"}};
  }
  if (emit) {
    r.certificate = expression_json(e);
  }
  return r;
}

struct Options {
  bool json = false;

  std::int64_t k = 0;
  std::int64_t r = 0;
  std::string u = "u";
  std::string v = "v";
  bool emit = false;

  std::string file;

  std::int64_t genus = 0;
  std::int64_t punctures = 0;
  std::int64_t boundary = 0;
  std::string curve;
  std::optional<std::int64_t> side_genus;
  std::optional<std::int64_t> growth_k;

  std::string ratio;
  std::optional<std::int64_t> n;
  bool find_n = false;

  std::int64_t size = 0;
  bool entries = false;
};

std::vector<Report> expand_culler(const Options& o) {
  Report r = expansion_report("expand culler", culler_expand(Word::parse(o.u), Word::parse(o.v), o.k),
                              culler_factor_count(o.k), o.emit);
  Json details = Json::object();
  details["k"] = o.k;
  details["u"] = Word::parse(o.u).to_string();
  details["v"] = Word::parse(o.v).to_string();
  details.update(r.details);
  r.details = std::move(details);
  return {r};
}

std::vector<Report> expand_bavard(const Options& o) {
  if (o.r < 1) {
    throw InvalidArgument("r must be at least 1");
  }
  std::vector<std::pair<Word, Word>> pairs;
  for (std::int64_t i = 1; i <= o.r; ++i) {
    pairs.emplace_back(Word::generator("u" + std::to_string(i)), Word::generator("v" + std::to_string(i)));
  }
  Report r = expansion_report("expand bavard", bavard_expand(pairs, o.k), bavard_factor_count(o.r, o.k), o.emit);
  Json details = Json::object();
  details["r"] = o.r;
  details["k"] = o.k;
  details.update(r.details);
  r.details = std::move(details);
  return {r};
}

std::vector<Report> bounds(const Options& o) {
  SurfaceSpec s;
  s.genus = o.genus;
  s.punctures = o.punctures;
  s.boundary = o.boundary;
  const auto kind = parse_curve_kind(o.curve);
  if (!kind) {
    throw InvalidArgument("unknown curve kind '" + o.curve + "'");
  }
  s.curve = *kind;
  if (s.curve == CurveKind::separating) {
    s.side_genus = o.side_genus.value_or(s.closed() ? 1 : 0);
  }

  Report r;
  r.command = "bounds";
  r.details["genus"] = s.genus;
  r.details["punctures"] = s.punctures;
  r.details["boundary"] = s.boundary;
  r.details["curve"] = std::string(scltwist::to_string(s.curve));
  if (s.curve == CurveKind::separating) {
    r.details["side_genus"] = s.side_genus;
  }
  try {
    const SclBoundReport b = bound_report(s);
    r.details["element"] = b.element;
    r.details["lower"] = optional_rational(b.lower);
    r.details["upper"] = optional_rational(b.upper);
    r.details["threshold"] = b.commutator_power_threshold ? Json(*b.commutator_power_threshold) : Json(nullptr);
    r.details["positive"] = b.positive;
    if (o.growth_k) {
      r.details["growth_k"] = *o.growth_k;
      r.details["growth_rate_lower"] = scltwist::to_string(growth_rate_lower(*o.growth_k, s));
    }
  } catch (const Error& e) {
    r.status = Status::refused;
    r.failure = error_json(e);
  }
  return {r};
}

Json invariants_json(const FibrationInvariants& f) {
  Json out = Json::object();
  out["rn"] = f.rn;
  out["chi"] = f.chi;
  out["b1_upper"] = f.b1_upper;
  out["b2minus_lower"] = f.b2minus_lower;
  out["b2plus_upper"] = f.b2plus_upper;
  out["sigma_upper"] = f.sigma_upper;
  out["c1sq_li_lower"] = f.c1sq_li_lower;
  out["c1sq_upper"] = f.c1sq_upper;
  out["b2_upper_via_chi"] = f.b2_upper_via_chi;
  out["contradiction_value"] = f.contradiction_value;
  out["contradiction"] = f.contradiction_value < 0;
  out["premises"] = Json::array({"li-inequality (assumed)"});
  return out;
}

std::vector<Report> numerology(const Options& o) {
  const Rational ratio = parse_rational(o.ratio);
  Report r;
  r.command = "numerology";
  r.details["genus"] = o.genus;
  r.details["r"] = scltwist::to_string(ratio);
  if (o.find_n) {
    const ContradictionSearch search = find_contradiction_n(o.genus, ratio);
    r.details["n"] = search.n ? Json(*search.n) : Json(nullptr);
    r.details["impossible"] = search.impossible;
    if (search.n) {
      r.details["contradiction_value"] = invariants_report(o.genus, ratio, *search.n).contradiction_value;
    }
    return {r};
  }
  const FibrationInvariants f = invariants_report(o.genus, ratio, *o.n);
  r.details["n"] = f.n;
  r.details.update(invariants_json(f));
  r.details["consistent"] = f.b2_consistent && f.c1sq_consistent;
  if (!f.b2_consistent || !f.c1sq_consistent) {
    r.status = Status::fail;
    r.failure = Json{{"check", f.b2_consistent ? "c1sq-consistency" : "b2-consistency"}};
  }
  return {r};
}

std::vector<Report> matrix(const Options& o) {
  const IntersectionMatrix m = intersection_matrix(o.size);
  Report r;
  r.command = "matrix";
  r.details["size"] = o.size;
  if (o.entries) {
    r.details["entries"] = m.entries;
  }
  r.details["minors"] = m.minors;
  r.details["positive_definite"] = m.positive_definite;
  if (!m.positive_definite) {
    r.status = Status::fail;
    r.failure = Json{{"check", "leading-minors"}};
  }
  return {r};
}

int emit(const std::vector<Report>& reports, bool json, std::ostream& out) {
  int code = kExitOk;
  for (const Report& r : reports) {
    out << (json ? render_json(r) + "\n" : render_text(r));
    if (r.status == Status::refused) {
      code = kExitRefused;
    } else if (r.status == Status::fail && code == kExitOk) {
      code = kExitFail;
    }
  }
  return code;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Mapping class group twist relations, commutator expansions and scl bounds", "scltwist"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Emit one JSON report per line");

  std::function<std::vector<Report>()> action;
  std::string command;
  auto bind = [&](CLI::App* sub, std::string name, auto fn) {
    sub->fallthrough();
    sub->callback([&, name = std::move(name), fn] {
      command = name;
      action = [&, fn] { return fn(o); };
    });
  };

  CLI::App* verify = app.add_subcommand("verify", "Replay the relation checks or the two-commutator derivation");
  verify->require_subcommand(1);
  verify->fallthrough();
  bind(verify->add_subcommand("relations", "Check every relation in the free-group model"), "verify relations",
       [](const Options&) { return verify_relations(); });
  bind(verify->add_subcommand("theorem3", "Replay the shipped script, certificate and displayed equality"),
       "verify theorem3", [](const Options&) { return verify_theorem3(); });

  CLI::App* check = app.add_subcommand("check-script", "Replay a proof script file");
  check->add_option("file", o.file, "Proof script")->required();
  bind(check, "check-script", [](const Options& opt) { return check_script_file(opt.file); });

  CLI::App* expand = app.add_subcommand("expand", "Commutator expansions of powers");
  expand->require_subcommand(1);
  expand->fallthrough();
  CLI::App* culler = expand->add_subcommand("culler", "[u,v]^k as floor(k/2)+1 commutators");
  culler->add_option("--k", o.k, "Power")->required();
  culler->add_option("--u", o.u, "First word")->capture_default_str();
  culler->add_option("--v", o.v, "Second word")->capture_default_str();
  culler->add_flag("--emit", o.emit, "Embed the factors");
  bind(culler, "expand culler", expand_culler);
  CLI::App* bavard = expand->add_subcommand("bavard", "(product of r commutators)^k");
  bavard->add_option("--r", o.r, "Commutators in the base product")->required();
  bavard->add_option("--k", o.k, "Power")->required();
  bavard->add_flag("--emit", o.emit, "Embed the factors");
  bind(bavard, "expand bavard", expand_bavard);

  CLI::App* bnd = app.add_subcommand("bounds", "scl bounds for a Dehn twist");
  bnd->add_option("--genus", o.genus, "Genus")->required();
  bnd->add_option("--punctures", o.punctures, "Punctures")->capture_default_str();
  bnd->add_option("--boundary", o.boundary, "Boundary components")->capture_default_str();
  bnd->add_option("--curve", o.curve, "Curve kind")
      ->required()
      ->check(CLI::IsMember({"nonseparating", "separating", "bounds-punctured-disc"}));
  bnd->add_option("--side-genus", o.side_genus, "Smaller-side genus of a separating curve");
  bnd->add_option("--growth-k", o.growth_k, "Generating-set size for the growth-rate bound");
  bind(bnd, "bounds", bounds);

  CLI::App* num = app.add_subcommand("numerology", "Lefschetz fibration invariants and the contradiction witness");
  num->add_option("--genus", o.genus, "Fibre genus")->required();
  num->add_option("--r", o.ratio, "Fraction of nonseparating vanishing cycles, NUM/DEN")->required();
  CLI::Option* n_opt = num->add_option("--n", o.n, "Number of singular fibres");
  CLI::Option* find_opt = num->add_flag("--find-n", o.find_n, "Least n giving a contradiction");
  n_opt->excludes(find_opt);
  find_opt->excludes(n_opt);
  bind(num, "numerology", numerology);

  CLI::App* mat = app.add_subcommand("matrix", "Tridiagonal intersection matrix and its leading minors");
  mat->add_option("--size", o.size, "Size m")->required();
  mat->add_flag("--entries", o.entries, "Include the entries");
  bind(mat, "matrix", matrix);

  std::vector<const char*> argv{"scltwist"};
  for (const std::string& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitRefused;
  }

  if (command == "numerology" && !o.n && !o.find_n) {
    err << "error: numerology needs --n N or --find-n\n" << app.help();
    return kExitRefused;
  }

  std::vector<Report> reports;
  try {
    reports = action();
  } catch (const ExpansionNotFound& e) {
    Report r;
    r.command = command;
    r.status = Status::fail;
    r.failure = error_json(e);
    reports = {r};
  } catch (const Error& e) {
    reports = {refused(command, error_json(e))};
  }
  return emit(reports, o.json, out);
}

}  // namespace scltwist::cli
