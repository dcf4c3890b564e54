#include "svlie/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "svlie/bialgebra.hpp"
#include "svlie/classify.hpp"
#include "svlie/error.hpp"
#include "svlie/expr.hpp"
#include "svlie/linalg.hpp"
#include "svlie/table_io.hpp"

namespace svlie::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string format = "text";

  std::string e1, e2;
  std::string x, on;
  std::string tensor;
  bool mybe = false;
  std::string r, d;
  std::string window = "6";
  std::string table_window;
  std::string file;
  std::string coeffs;
  int max_terms = 1;
  int jobs = 1;
  int rank = 2;
};

class Reporter {
 public:
  Reporter(std::ostream& out, bool as_json, std::string command)
      : out_(out), json_(as_json), doc_{{"command", std::move(command)}} {}

  bool json_mode() const { return json_; }
  void line(const std::string& s) {
    if (!json_) out_ << s << '\n';
  }
  json& doc() { return doc_; }
  int finish(int code) {
    if (json_) {
      doc_["exit_code"] = code;
      out_ << doc_.dump(2) << '\n';
    }
    return code;
  }

 private:
  std::ostream& out_;
  bool json_;
  json doc_;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string format_defect(const std::variant<Tensor2, Tensor3>& d) {
  return std::visit([](const auto& t) { return format(t); }, d);
}

json report_json(const AxiomReport& rep) {
  json j{{"image_skew", rep.image_skew},
         {"co_jacobi", rep.co_jacobi},
         {"compatibility", rep.compatibility}};
  if (rep.counterexample) {
    json inputs = json::array();
    for (const auto& b : rep.counterexample->inputs) inputs.push_back(format(b));
    j["counterexample"] = {{"axiom", to_string(rep.counterexample->axiom)},
                           {"inputs", inputs},
                           {"defect", format_defect(rep.counterexample->defect)}};
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

void report_text(Reporter& rep, const AxiomReport& r) {
  rep.line("image skew: " + yes_no(r.image_skew));
  rep.line("co-Jacobi: " + yes_no(r.co_jacobi));
  rep.line("compatibility: " + yes_no(r.compatibility));
  if (r.counterexample) {
    std::string inputs;
    for (const auto& b : r.counterexample->inputs) inputs += (inputs.empty() ? "" : ", ") + format(b);
    rep.line(std::string("counterexample (") + to_string(r.counterexample->axiom) + ") at " + inputs +
             ": " + format_defect(r.counterexample->defect));
  }
}

CocommutatorSpec spec_from(const Options& o) {
  CocommutatorSpec spec;
  if (!o.r.empty()) spec.r = parse_tensor2(o.r);
  if (!o.d.empty()) spec.d = parse_special_derivation(o.d);
  return spec;
}

int cmd_bracket(const Options& o, Reporter& rep) {
  const Element x = parse_element(o.e1);
  const Element y = parse_element(o.e2);
  const std::string result = format(bracket(x, y));
  rep.line(result);
  rep.doc()["result"] = result;
  return rep.finish(kExitOk);
}

int cmd_act(const Options& o, Reporter& rep) {
  const Element x = parse_element(o.x);
  const AnyValue t = parse_any(o.on);
  const std::string result = format(act(x, t));
  rep.line(result);
  rep.doc()["result"] = result;
  return rep.finish(kExitOk);
}

int cmd_cybe(const Options& o, Reporter& rep) {
  const Tensor2 r = parse_tensor2(o.tensor);
  const Tensor3 c = yang_baxter_c(r);
  const bool cybe = c.is_zero();
  const bool mybe = is_m0_cube_multiple(c);
  rep.line(std::string("CYBE: ") + (cybe ? "satisfied" : "violated"));
  if (o.mybe) rep.line(std::string("MYBE: ") + (mybe ? "satisfied" : "violated"));
  rep.line("c(r) = " + format(c));
  rep.doc()["cybe"] = cybe;
  if (o.mybe) rep.doc()["mybe"] = mybe;
  rep.doc()["c"] = format(c);
  const bool ok = o.mybe ? mybe : cybe;
  return rep.finish(ok ? kExitOk : kExitNegative);
}

int cmd_cojacobi(const Options& o, Reporter& rep) {
  const HalfInt window = parse_half_int(o.window);
  const AxiomReport r = check_axioms(spec_from(o), window);
  report_text(rep, r);
  rep.doc()["window"] = window.str();
  rep.doc()["report"] = report_json(r);
  return rep.finish(r.ok() ? kExitOk : kExitNegative);
}

int cmd_derive_check(const Options& o, Reporter& rep) {
  std::optional<HalfInt> requested;
  if (!o.table_window.empty()) requested = parse_half_int(o.table_window);
  const DerivationTable table = parse_derivation_table(read_file(o.file), requested);
  const HalfInt window = requested.value_or(table.window());
  const AxiomReport r = check_axioms(table, window);
  rep.line(std::string("derivation identity: ") + (r.compatibility ? "holds" : "fails"));
  report_text(rep, r);
  rep.doc()["window"] = window.str();
  rep.doc()["derivation"] = r.compatibility;
  rep.doc()["report"] = report_json(r);
  return rep.finish(r.compatibility ? kExitOk : kExitNegative);
}

int cmd_decompose(const Options& o, Reporter& rep) {
  const DerivationTable table = parse_derivation_table(read_file(o.file));
  const auto parts = decompose_derivation(table);
  json comps = json::array();
  for (const auto& [deg, t] : parts) {
    rep.line("degree " + deg.str() + ":");
    json entries = json::object();
    for (const auto& [k, v] : t.images()) {
      if (v.is_zero()) continue;
      rep.line("  " + format(k) + " -> " + format(v));
      entries[format(k)] = format(v);
    }
    comps.push_back({{"degree", deg.str()}, {"images", entries}});
  }
  if (parts.empty()) rep.line("zero table");
  rep.doc()["window"] = table.window().str();
  rep.doc()["components"] = comps;
  return rep.finish(kExitOk);
}

int cmd_classify(const Options& o, Reporter& rep) {
  const Tensor2 r = parse_tensor2(o.tensor);
  const auto [p, top] = highest_component(r);
  const auto labels = classify_highest(top, p);
  const bool rejected = labels.begin()->tag == VClass::NotCandidate;
  std::string names;
  json jl = json::array();
  for (const auto& l : labels) {
    names += (names.empty() ? "" : ", ") + l.str();
    jl.push_back(l.str());
  }
  rep.line("top component: " + format(top));
  rep.line("top degree " + p.str() + ": " + names +
           (rejected ? " (cannot head a CYBE solution)" : ""));
  rep.doc()["top_degree"] = p.str();
  rep.doc()["top_component"] = format(top);
  rep.doc()["labels"] = jl;
  return rep.finish(rejected ? kExitNegative : kExitOk);
}

int cmd_search(const Options& o, Reporter& rep) {
  SearchConfig cfg{parse_half_int(o.window), parse_rational_list(o.coeffs), o.max_terms, o.jobs};
  const auto found = search_cybe(cfg);
  json list = json::array();
  for (const auto& r : found) {
    rep.line(format(r));
    list.push_back(format(r));
  }
  std::string coeffs;
  json jc = json::array();
  for (const auto& c : cfg.coeffs) {
    coeffs += (coeffs.empty() ? "" : ",") + format(c);
    jc.push_back(format(c));
  }
  rep.line("# count: " + std::to_string(found.size()));
  rep.line("# window: " + cfg.bound.str() + "; coeffs: {" + coeffs +
           "}; max-terms: " + std::to_string(cfg.max_terms));
  rep.doc()["count"] = found.size();
  rep.doc()["config"] = {{"window", cfg.bound.str()}, {"coeffs", jc}, {"max_terms", cfg.max_terms}};
  rep.doc()["solutions"] = list;
  return rep.finish(kExitOk);
}

int cmd_invariants(const Options& o, Reporter& rep) {
  const HalfInt window = parse_half_int(o.window);
  const auto basis = invariant_tensors(o.rank, window);
  rep.line("dimension: " + std::to_string(basis.size()));
  json list = json::array();
  for (const auto& v : basis) {
    rep.line(format(v));
    list.push_back(format(v));
  }
  rep.doc()["rank"] = o.rank;
  rep.doc()["window"] = window.str();
  rep.doc()["dimension"] = basis.size();
  rep.doc()["basis"] = list;
  return rep.finish(kExitOk);
}

int cmd_certify(const Options& o, Reporter& rep) {
  const HalfInt window = parse_half_int(o.window);
  const Certificate cert = certify(spec_from(o), window);
  if (cert.verdict == Verdict::NotBialgebra) {
    rep.line("Lie bialgebra: no (" + cert.reason + ")");
    if (cert.report.counterexample) report_text(rep, cert.report);
  } else {
    rep.line("Lie bialgebra: yes; triangular coboundary: " +
             yes_no(cert.verdict == Verdict::TriangularCoboundary));
  }
  rep.doc()["verdict"] = to_string(cert.verdict);
  rep.doc()["reason"] = cert.reason;
  rep.doc()["window"] = window.str();
  rep.doc()["report"] = report_json(cert.report);
  return rep.finish(cert.verdict == Verdict::NotBialgebra ? kExitNegative : kExitOk);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact computations on the Schrodinger-Virasoro Lie algebra", "sv"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  auto* bracket_cmd = app.add_subcommand("bracket", "Lie bracket of two elements");
  bracket_cmd->add_option("E1", o.e1)->required();
  bracket_cmd->add_option("E2", o.e2)->required();

  auto* act_cmd = app.add_subcommand("act", "Diagonal adjoint action on a tensor");
  act_cmd->add_option("X", o.x)->required();
  act_cmd->add_option("--on", o.on, "Element, rank-2 or rank-3 tensor")->required();

  auto* cybe_cmd = app.add_subcommand("cybe", "Classical Yang-Baxter check c(r) = 0");
  cybe_cmd->add_option("T", o.tensor)->required();
  cybe_cmd->add_flag("--mybe", o.mybe, "Also decide the modified equation; exit code follows it");

  auto* cojacobi_cmd = app.add_subcommand("cojacobi", "Lie bialgebra axioms for x.r + D on a window");
  cojacobi_cmd->add_option("--r", o.r, "Rank-2 tensor r");
  cojacobi_cmd->add_option("--d", o.d, "alpha,alpha_dag,beta,beta_dag,gamma,gamma_dag");
  cojacobi_cmd->add_option("--window", o.window)->capture_default_str();

  auto* derive_cmd = app.add_subcommand("derive-check", "Derivation identity for a table file");
  derive_cmd->add_option("FILE", o.file)->required();
  derive_cmd->add_option("--window", o.table_window, "Defaults to the largest index in the file");

  auto* decompose_cmd = app.add_subcommand("decompose", "Homogeneous components of a table file");
  decompose_cmd->add_option("FILE", o.file)->required();

  auto* classify_cmd = app.add_subcommand("classify", "Classify the highest component of r");
  classify_cmd->add_option("T", o.tensor)->required();

  auto* search_cmd = app.add_subcommand("search", "Brute-force search for skew CYBE solutions");
  search_cmd->add_option("--window", o.window)->required();
  search_cmd->add_option("--coeffs", o.coeffs, "Comma-separated rationals")->required();
  search_cmd->add_option("--max-terms", o.max_terms)->required()->check(CLI::PositiveNumber);
  search_cmd->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber)->capture_default_str();

  auto* inv_cmd = app.add_subcommand("invariants", "Invariant tensors on a window");
  inv_cmd->add_option("--rank", o.rank)->required()->check(CLI::Range(1, 3));
  inv_cmd->add_option("--window", o.window)->required();

  auto* certify_cmd = app.add_subcommand("certify", "Classify the structure x.r + D");
  certify_cmd->add_option("--r", o.r, "Rank-2 tensor r");
  certify_cmd->add_option("--d", o.d, "alpha,alpha_dag,beta,beta_dag,gamma,gamma_dag");
  certify_cmd->add_option("--window", o.window)->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  for (auto* sub : {cojacobi_cmd, certify_cmd}) {
    if (sub->parsed() && o.r.empty() && o.d.empty()) {
      err << "error: " << sub->get_name() << " needs --r, --d or both\n";
      return kExitUsage;
    }
  }

  auto* sub = app.get_subcommands().front();
  Reporter rep(out, o.format == "json", sub->get_name());
  try {
    if (sub == bracket_cmd) return cmd_bracket(o, rep);
    if (sub == act_cmd) return cmd_act(o, rep);
    if (sub == cybe_cmd) return cmd_cybe(o, rep);
    if (sub == cojacobi_cmd) return cmd_cojacobi(o, rep);
    if (sub == derive_cmd) return cmd_derive_check(o, rep);
    if (sub == decompose_cmd) return cmd_decompose(o, rep);
    if (sub == classify_cmd) return cmd_classify(o, rep);
    if (sub == search_cmd) return cmd_search(o, rep);
    if (sub == inv_cmd) return cmd_invariants(o, rep);
    if (sub == certify_cmd) return cmd_certify(o, rep);
  } catch (const ParseError& e) {
    err << "parse error at " << e.line() << ":" << e.column() << ": " << e.message() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace svlie::cli
