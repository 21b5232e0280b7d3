#include "kmu/cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "corpus_data.hpp"
#include "json.hpp"
#include "kmu/error.hpp"
#include "kmu/hilbert.hpp"
#include "kmu/problem_file.hpp"
#include "kmu/resolution.hpp"
#include "kmu/unprojection.hpp"

namespace kmu::cli {

using nlohmann::json;

namespace {

constexpr int kDefaultOracleDepth = 10;

json polys_json(const std::vector<Polynomial>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(to_string(p));
  return a;
}

json betti_json(const BettiTable& b) {
  json steps = json::array();
  for (const auto& s : b.steps) {
    json row = json::array();
    for (const auto& [deg, n] : s) row.push_back({deg, n});
    steps.push_back(row);
  }
  return {{"ranks", b.totals()}, {"steps", steps}};
}

json series_json(const HilbertSeries& s) {
  return {{"numerator", s.numerator}, {"denominator", s.denominator}, {"text", to_string(s)}};
}

json input_json(const ProblemFile& p, const std::string& label) {
  json vars = json::array();
  for (std::size_t i = 0; i < p.ring->arity(); ++i)
    vars.push_back({{"name", p.ring->names()[i]}, {"weight", p.ring->weights()[i]}});
  json ideals = json::object();
  for (const auto& [name, gens] : p.ideals) ideals[name] = polys_json(gens);
  return {{"label", label},
          {"ring", {{"variables", vars}, {"field", p.ring->field().to_string()}}},
          {"ideals", ideals},
          {"options", p.options}};
}

const std::vector<Polynomial>& require_ideal(const ProblemFile& p, const std::string& name) {
  const auto* gens = p.ideal(name);
  if (!gens) throw MathError("the problem file declares no ideal " + name);
  return *gens;
}

UnprojectionProblem make_problem(const ProblemFile& p) {
  UnprojectionProblem prob(p.ring, require_ideal(p, "IX"), require_ideal(p, "ID"));
  prob.mode = parse_mode(p.option("mode", "auto"));
  prob.var = p.option("var", "S");
  return prob;
}

int oracle_depth(const Options& opts, const ProblemFile& p) {
  if (opts.oracle_depth) return *opts.oracle_depth;
  return std::stoi(p.option("oracle_depth", std::to_string(kDefaultOracleDepth)));
}

json certificate_json(const Certificate& c, bool seedless) {
  json j = {{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}, {"witness", c.witness}};
  if (c.betti) j["betti"] = betti_json(*c.betti);
  if (c.series) j["series"] = series_json(*c.series);
  if (!seedless) j["seconds"] = c.seconds;
  return j;
}

json unproject_report(const Options& opts, const ProblemFile& p) {
  UnprojectionProblem prob = make_problem(p);
  CheckedProblem checked = validate_problem(prob);
  HomGenerators hom = compute_hom_generators(checked);
  UnprojectionResult r = unproject(checked, hom);

  VerifyOptions vo;
  vo.skip = opts.skip;
  vo.oracle_depth = oracle_depth(opts, p);
  CertificateReport cert = verify_certificates(r, vo);

  json j;
  j["mode"] = to_string(checked.mode);
  j["k"] = checked.k;
  j["k_X"] = checked.kX;
  j["k_D"] = checked.kD;
  j["codim_X"] = checked.codim_X;
  j["codim_D"] = checked.codim_D;
  j["s"] = {{"w", to_string(hom.w)},
            {"q", to_string(hom.q)},
            {"deg_w", *hom.w.homogeneous_degree()},
            {"deg_q", *hom.q.homogeneous_degree()},
            {"degree", hom.k},
            {"wiggle", to_string(hom.wiggle)},
            {"text", "(" + to_string(hom.q) + ")/(" + to_string(hom.w) + ")"}};
  j["unprojection"] = {{"variable", prob.var},
                       {"weight", r.ring->weights()[r.S]},
                       {"numerators", polys_json(r.h)},
                       {"IY", polys_json(r.IY.generators())},
                       {"IY_minimal", polys_json(r.IY_minimal.generators())},
                       {"J", polys_json(r.J.generators())}};
  j["betti"] = {{"X", betti_json(betti_table(checked.res_X))}, {"D", betti_json(betti_table(checked.res_D))}};
  j["hilbert"] = {{"X", series_json(series_from_resolution(checked.res_X))},
                  {"D", series_json(series_from_resolution(checked.res_D))}};
  if (const auto* gy = cert.find("Gorenstein-of-Y"); gy && gy->betti) j["betti"]["Y"] = betti_json(*gy->betti);
  if (const auto* hy = cert.find("Hilbert-identity"); hy && hy->series) j["hilbert"]["Y"] = series_json(*hy->series);
  json certs = json::array();
  for (const auto& c : cert.entries) certs.push_back(certificate_json(c, opts.seedless));
  j["certificates"] = certs;
  j["status"] = cert.all_passed() ? "pass" : "fail";
  j["exit_code"] = cert.all_passed() ? kOk : kCertificateFailure;
  return j;
}

json resolve_report(const ProblemFile& p) {
  json out = json::object();
  bool ok = true;
  for (const auto& [name, gens] : p.ideals) {
    Ideal I(p.ring, gens);
    FreeResolution res = minimal_free_resolution(I);
    json e;
    json mins = json::array();
    for (const auto& c : res.maps.empty() ? std::vector<ModuleVector>{} : res.maps[0])
      mins.push_back(to_string(c.entries[0]));
    e["minimal_generators"] = mins;
    e["betti"] = betti_json(betti_table(res));
    e["complex"] = is_complex(res);
    e["exact"] = is_exact(res, I);
    ok = ok && e["complex"].get<bool>() && e["exact"].get<bool>();
    if (!I.is_zero()) {
      auto w = gorenstein_witness(res, I);
      e["codim"] = w.codim;
      e["gorenstein"] = w.gorenstein;
      if (!w.gorenstein) e["gorenstein_reason"] = w.reason;
      if (res.modules.back().rank() == 1) e["canonical_degree"] = canonical_degree(res);
    } else {
      e["codim"] = 0;
    }
    out[name] = e;
  }
  return {{"resolutions", out}, {"exit_code", ok ? kOk : kCertificateFailure}};
}

json hilbert_report(const Options& opts, const ProblemFile& p) {
  const int depth = oracle_depth(opts, p);
  json out = json::object();
  bool ok = true;
  for (const auto& [name, gens] : p.ideals) {
    Ideal I(p.ring, gens);
    HilbertSeries s = hilbert_series(I);
    auto expansion = s.expand(depth);
    auto brute = brute_dims(I, depth);
    json e = series_json(s);
    e["expansion"] = expansion;
    e["oracle"] = brute;
    e["oracle_agrees"] = expansion == brute;
    ok = ok && expansion == brute;
    out[name] = e;
  }
  return {{"series", out}, {"oracle_depth", depth}, {"exit_code", ok ? kOk : kCertificateFailure}};
}

json project_report(const Options& opts, const ProblemFile& p) {
  std::vector<std::string> vars;
  Ideal source(p.ring);
  json j;
  if (const auto* iy = p.ideal("IY")) {
    source = Ideal(p.ring, *iy);
    vars.push_back(p.option("var", "S"));
  } else {
    UnprojectionProblem prob = make_problem(p);
    CheckedProblem checked = validate_problem(prob);
    UnprojectionResult r = unproject(checked, compute_hom_generators(checked));
    source = r.IY;
    vars.push_back(prob.var);
    j["IY"] = polys_json(r.IY.generators());
  }
  if (!opts.eliminate.empty()) vars = opts.eliminate;
  for (const auto& v : vars)
    if (!source.ring()->index_of(v)) throw MathError("'" + v + "' is not a variable of the ring");
  Ideal projected = eliminate(source, vars);
  json names = json::array();
  for (const auto& n : projected.ring()->names()) names.push_back(n);
  j["eliminated"] = vars;
  j["ring"] = names;
  j["projected"] = polys_json(projected.groebner_basis());
  j["exit_code"] = kOk;
  return j;
}

// ---- text rendering --------------------------------------------------------

void line(std::ostringstream& os, const std::string& label, const std::string& value) {
  os << std::left << std::setw(16) << label << value << "\n";
}

void lines(std::ostringstream& os, const std::string& label, const json& arr) {
  if (arr.empty()) {
    line(os, label, "(none)");
    return;
  }
  bool first = true;
  for (const auto& v : arr) {
    line(os, first ? label : "", v.get<std::string>());
    first = false;
  }
}

void betti_text(std::ostringstream& os, const std::string& label, const json& b) {
  line(os, label, "step  rank  twists (degree:count)");
  const auto& steps = b["steps"];
  for (std::size_t i = 0; i < steps.size(); ++i) {
    std::ostringstream row;
    row << std::left << std::setw(6) << i << std::setw(6) << b["ranks"][i].get<int>();
    bool first = true;
    for (const auto& pair : steps[i]) {
      row << (first ? "" : " ") << pair[0].get<int>() << ":" << pair[1].get<int>();
      first = false;
    }
    line(os, "", row.str());
  }
}

std::string render_text(const json& r) {
  std::ostringstream os;
  const std::string command = r["command"];
  line(os, "command", command);
  line(os, "input", r["input"]["label"].get<std::string>());
  line(os, "field", r["input"]["ring"]["field"].get<std::string>());
  if (r.contains("error")) {
    const auto& e = r["error"];
    line(os, "error", e["kind"].get<std::string>());
    if (e.contains("hypothesis")) line(os, "hypothesis", e["hypothesis"].get<std::string>());
    line(os, "message", e["message"].get<std::string>());
    line(os, "exit code", std::to_string(r["exit_code"].get<int>()));
    return os.str();
  }
  if (command == "unproject" || command == "verify") {
    line(os, "mode", r["mode"].get<std::string>());
    line(os, "k", std::to_string(r["k"].get<int>()) + "  (k_X = " + std::to_string(r["k_X"].get<int>()) +
                      ", k_D = " + std::to_string(r["k_D"].get<int>()) + ")");
    line(os, "s = q/w", r["s"]["text"].get<std::string>());
    if (command == "unproject") {
      if (r["s"]["wiggle"] != "0") line(os, "wiggle", r["s"]["wiggle"].get<std::string>());
      const auto& u = r["unprojection"];
      line(os, "variable", u["variable"].get<std::string>() + " (weight " + std::to_string(u["weight"].get<int>()) +
                               ")");
      lines(os, "numerators h_i", u["numerators"]);
      lines(os, "I_Y", u["IY"]);
      lines(os, "I_Y minimal", u["IY_minimal"]);
      lines(os, "J", u["J"]);
      for (const char* key : {"X", "D", "Y"})
        if (r["betti"].contains(key)) betti_text(os, std::string("betti ") + key, r["betti"][key]);
      for (const char* key : {"X", "D", "Y"})
        if (r["hilbert"].contains(key)) line(os, std::string("hilbert ") + key, r["hilbert"][key]["text"]);
    }
    line(os, "certificates", "");
    for (const auto& c : r["certificates"]) {
      std::ostringstream row;
      row << "  " << std::left << std::setw(24) << c["name"].get<std::string>() << std::setw(9)
          << c["status"].get<std::string>() << c["detail"].get<std::string>();
      if (c.contains("seconds")) row << "  [" << std::fixed << std::setprecision(3) << c["seconds"].get<double>() << " s]";
      os << row.str() << "\n";
    }
    line(os, "status", r["status"].get<std::string>());
  } else if (command == "resolve") {
    for (const auto& [name, e] : r["resolutions"].items()) {
      lines(os, name + " gens", e["minimal_generators"]);
      betti_text(os, "betti " + name, e["betti"]);
      line(os, "codim", std::to_string(e["codim"].get<int>()));
      if (e.contains("gorenstein")) line(os, "gorenstein", e["gorenstein"].get<bool>() ? "yes" : "no");
      if (e.contains("canonical_degree")) line(os, "canonical deg", std::to_string(e["canonical_degree"].get<int>()));
      line(os, "certified", e["complex"].get<bool>() && e["exact"].get<bool>() ? "complex, exact" : "FAILED");
    }
  } else if (command == "hilbert") {
    for (const auto& [name, e] : r["series"].items()) {
      line(os, "series " + name, e["text"].get<std::string>());
      std::string dims;
      for (const auto& d : e["expansion"]) dims += (dims.empty() ? "" : " ") + std::to_string(d.get<long long>());
      line(os, "dims", dims);
      line(os, "oracle", e["oracle_agrees"].get<bool>() ? "agrees to degree " + std::to_string(r["oracle_depth"].get<int>())
                                                         : "DISAGREES");
    }
  } else if (command == "project") {
    if (r.contains("IY")) lines(os, "I_Y", r["IY"]);
    std::string el;
    for (const auto& v : r["eliminated"]) el += (el.empty() ? "" : ", ") + v.get<std::string>();
    line(os, "eliminated", el);
    lines(os, "projected", r["projected"]);
  }
  if (r.contains("timings")) {
    std::ostringstream t;
    t << std::fixed << std::setprecision(3) << r["timings"]["total_seconds"].get<double>() << " s";
    line(os, "time", t.str());
  }
  line(os, "exit code", std::to_string(r["exit_code"].get<int>()));
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

const std::vector<std::pair<std::string, std::string>>& corpus() { return detail::kCorpus; }

std::optional<std::string> corpus_text(const std::string& name) {
  for (const auto& [n, text] : corpus())
    if (n == name) return text;
  return std::nullopt;
}

Outcome run_text(const Options& opts, const std::string& text, const std::string& label) {
  const auto start = std::chrono::steady_clock::now();
  json report;
  report["command"] = opts.command;
  report["input"] = {{"label", label}, {"ring", {{"field", opts.field ? opts.field->to_string() : "?"}}}};
  auto fail = [&](int code, const std::string& kind, const std::string& message) {
    report["error"] = {{"kind", kind}, {"message", message}};
    report["exit_code"] = code;
  };
  try {
    ProblemFile p = parse_problem(text, opts.field);
    report["input"] = input_json(p, label);
    json body;
    if (opts.command == "unproject" || opts.command == "verify")
      body = unproject_report(opts, p);
    else if (opts.command == "resolve")
      body = resolve_report(p);
    else if (opts.command == "hilbert")
      body = hilbert_report(opts, p);
    else if (opts.command == "project")
      body = project_report(opts, p);
    else
      throw MathError("unknown command '" + opts.command + "'");
    report.update(body);
  } catch (const ParseError& e) {
    fail(kHypothesisFailure, "parse", e.what());
    report["error"]["line"] = e.line();
    report["error"]["column"] = e.column();
  } catch (const HypothesisError& e) {
    fail(kHypothesisFailure, "hypothesis", e.what());
    report["error"]["hypothesis"] = e.hypothesis();
  } catch (const MathError& e) {
    fail(kHypothesisFailure, "input", e.what());
  } catch (const std::exception& e) {
    fail(kInternalError, "internal", e.what());
  }
  if (!opts.seedless)
    report["timings"] = {
        {"total_seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
  Outcome out;
  out.exit_code = report["exit_code"].get<int>();
  out.output = opts.json ? report.dump(2) + "\n" : render_text(report);
  return out;
}

Outcome run(const Options& opts) {
  std::string text;
  std::string label = opts.file;
  if (opts.file.rfind("corpus:", 0) == 0) {
    auto t = corpus_text(opts.file.substr(7));
    if (!t) {
      Options o = opts;
      return run_text(o, "", label);  // reports a parse error for the empty input
    }
    text = *t;
  } else {
    try {
      text = read_file(opts.file);
    } catch (const std::exception& e) {
      json report = {{"command", opts.command},
                     {"input", {{"label", label}, {"ring", {{"field", "?"}}}}},
                     {"error", {{"kind", "io"}, {"message", e.what()}}},
                     {"exit_code", kHypothesisFailure}};
      return {kHypothesisFailure, opts.json ? report.dump(2) + "\n" : render_text(report)};
    }
  }
  return run_text(opts, text, label);
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kustin-Miller unprojection: construct and certify"};
  Options opts;
  std::string field_text;
  std::vector<std::string> skip;
  app.add_option("command", opts.command, "unproject | verify | resolve | hilbert | project")
      ->required()
      ->check(CLI::IsMember({"unproject", "verify", "resolve", "hilbert", "project"}));
  app.add_option("file", opts.file, "problem file (.km) or corpus:<name>")->required();
  app.add_option("--field", field_text, "coefficient field: q | fp | fp:<p>");
  app.add_flag("--json", opts.json, "emit the JSON report");
  app.add_option("--oracle-depth", opts.oracle_depth, "degree bound for the brute-force dimension oracle")
      ->check(CLI::Range(0, 64));
  app.add_flag("--seedless", opts.seedless, "deterministic output: omit timings");
  app.add_option("--skip", skip, "certificate to skip (repeatable)")->take_all();
  app.add_option("--eliminate", opts.eliminate, "variable to eliminate in project instead of the unprojection variable (repeatable)")->take_all();
  app.footer("corpus: " + [] {
    std::string names;
    for (const auto& [n, t] : corpus()) names += (names.empty() ? "" : ", ") + n;
    return names;
  }());

  try {
    app.parse(argc, argv);
    if (!field_text.empty()) opts.field = Field::parse(field_text);
    for (const auto& s : skip) {
      const auto& names = certificate_names();
      if (std::find(names.begin(), names.end(), s) == names.end())
        throw CLI::ValidationError("--skip", "unknown certificate '" + s + "'");
      opts.skip.insert(s);
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kHypothesisFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kHypothesisFailure;
  }

  Outcome o = run(opts);
  out << o.output;
  return o.exit_code;
}

}  // namespace kmu::cli
