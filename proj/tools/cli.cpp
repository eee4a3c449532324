#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "json_io.hpp"
#include "schema.hpp"
#include "statikit/error.hpp"

namespace statikit::cli {

using io::InputError;
using io::json;

namespace {

struct Outcome {
  json body;
  bool positive = true;
};

class Failure : public std::runtime_error {
 public:
  Failure(std::string code, std::string path, const std::string& what)
      : std::runtime_error(what), code(std::move(code)), path(std::move(path)) {}
  std::string code;
  std::string path;
};

std::string render(const json& j) { return j.dump(2) + "\n"; }

json error_document(const std::string& code, const std::string& message, const std::string& path) {
  return json{{"error", {{"code", code}, {"message", message}, {"path", path}}}};
}

json read_input(const std::string& input) {
  auto first = input.find_first_not_of(" \t\r\n");
  std::string text;
  if (first != std::string::npos && input[first] == '{') {
    text = input;
  } else {
    std::ifstream in(input, std::ios::binary);
    if (!in) throw Failure("IO_ERROR", "", "cannot read " + input);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Failure("PARSE_ERROR", "", e.what());
  }
}

void log(const JobSpec& job, const std::string& line) {
  if (job.verbose) std::cerr << "[statikit] " << line << "\n";
}

json chart_reports(const std::vector<ChartCertificate>& charts) {
  json out = json::array();
  for (const auto& ch : charts)
    out.push_back(json{{"cone", io::to_json(ch.cone)},
                       {"pullback", io::to_json(ch.pullback)},
                       {"static", ch.staticity.holds},
                       {"reports", io::to_json(ch.staticity)["reports"]}});
  return out;
}

std::vector<Integer> divisor_from(const json& doc, const std::string& key, const Graph& g) {
  auto d = io::vector_from(doc.at(key), "/" + key);
  if (d.size() != g.vertex_count())
    throw InputError("/" + key, "expected " + std::to_string(g.vertex_count()) + " entries");
  return d;
}

Outcome stratify(const json& doc, const JobSpec& job) {
  auto given = io::submodule_from(doc.at("module"), "/module");
  auto module = Submodule::from_laurent(given.nvars(), given.rank(), given.generators());
  auto support = doc.contains("support") ? io::cone_from(doc.at("support"), module.nvars(), "/support")
                                         : RationalCone::orthant(module.nvars());
  log(job, "stratifying " + std::to_string(module.generators().size()) + " generators");
  auto strat = groebner_stratification(module, support);
  return {json{{"stratification", io::to_json(strat)}}, true};
}

Outcome statify(const json& doc, const JobSpec& job) {
  auto M = io::presentation_from(doc.at("presentation"), "/presentation");
  log(job, "computing statification");
  auto cert = compute_statification(M, StatifyOptions{job.audit, job.fail_fast});
  log(job, std::to_string(cert.charts.size()) + " charts certified");
  bool ok = cert.all_static() && cert.complete && (!cert.audit || cert.audit->agrees());
  return {io::to_json(cert), ok};
}

Outcome check_static(const json& doc, const JobSpec&) {
  auto M = io::presentation_from(doc.at("presentation"), "/presentation");
  auto report = log_tor_dim_at_most(M, 1);
  bool flat = is_log_flat(M);
  return {json{{"static", report.holds}, {"log_flat", flat}, {"reports", io::to_json(report)["reports"]}},
          report.holds};
}

Outcome tor_dim(const json& doc, const JobSpec&) {
  auto M = io::presentation_from(doc.at("presentation"), "/presentation");
  auto d = io::index_from(doc.at("d"), "/d");
  auto report = log_tor_dim_at_most(M, d);
  return {json{{"d", std::to_string(d)}, {"holds", report.holds}, {"reports", io::to_json(report)["reports"]}},
          report.holds};
}

Outcome verify_theorem(const json& doc, const JobSpec& job) {
  auto M = io::presentation_from(doc.at("presentation"), "/presentation");
  auto fan = io::fan_from(doc.at("fan"), M.nvars(), "/fan");
  log(job, "checking " + std::to_string(fan.maximal_cones().size()) + " charts");
  TheoremInstance inst = [&] {
    try {
      return verify_theorem_instance(M, fan);
    } catch (const Error& e) {
      throw InputError("/fan", e.what());
    }
  }();
  return {json{{"refines", inst.refines},
               {"all_static", inst.all_static},
               {"agrees", inst.agrees()},
               {"charts", chart_reports(inst.charts)}},
          inst.agrees()};
}

Outcome jacobian(const json& doc, const JobSpec&) {
  auto g = io::graph_from(doc, "");
  auto factors = jacobian_group(g);
  Integer order = 1;
  json list = json::array();
  for (const auto& f : factors) {
    order *= f;
    list.push_back(io::to_json(f));
  }
  return {json{{"invariant_factors", list}, {"order", io::to_json(order)}}, true};
}

Outcome chip_equiv(const json& doc, const JobSpec&) {
  auto g = io::graph_from(doc.at("graph"), "/graph");
  auto d1 = divisor_from(doc, "d1", g);
  auto d2 = divisor_from(doc, "d2", g);
  bool eq = is_chip_firing_equivalent(g, d1, d2);
  return {json{{"equivalent", eq},
               {"reduced_d1", io::to_json(reduced_divisor(g, d1))},
               {"reduced_d2", io::to_json(reduced_divisor(g, d2))}},
          eq};
}

Outcome firing(const json& doc, const JobSpec&) {
  auto g = io::graph_from(doc.at("graph"), "/graph");
  auto d1 = divisor_from(doc, "d1", g);
  auto d2 = divisor_from(doc, "d2", g);
  auto script = firing_script(g, d1, d2);
  return {json{{"equivalent", script.has_value()}, {"script", script ? io::to_json(*script) : json(nullptr)}},
          script.has_value()};
}

Outcome replay_certificate(const json& doc, const JobSpec& job) {
  auto cert = io::certificate_from(doc);
  log(job, "replaying " + std::to_string(cert.charts.size()) + " charts");
  auto result = replay(cert);
  return {json{{"ok", result.ok}, {"mismatches", result.mismatches}}, result.ok};
}

using Handler = Outcome (*)(const json&, const JobSpec&);

const std::vector<std::pair<std::string, Handler>>& handlers() {
  static const std::vector<std::pair<std::string, Handler>> table{
      {"stratify", stratify},         {"statify", statify},   {"check-static", check_static},
      {"tor-dim", tor_dim},           {"verify-theorem", verify_theorem},
      {"jacobian", jacobian},         {"chip-equiv", chip_equiv},
      {"firing-script", firing},      {"replay", replay_certificate}};
  return table;
}

Handler find_handler(const std::string& name) {
  for (const auto& [n, h] : handlers())
    if (n == name) return h;
  return nullptr;
}

JobResult execute(const JobSpec& job) {
  Handler handler = find_handler(job.subcommand);
  if (handler == nullptr) throw Failure("UNKNOWN_SUBCOMMAND", "", "unknown subcommand '" + job.subcommand + "'");
  auto in_schema = *io::input_schema(job.subcommand);
  auto out_schema = *io::output_schema(job.subcommand);
  if (job.schema) return {kExitOk, render(json{{"input", in_schema}, {"output", out_schema}})};

  auto doc = read_input(job.input);
  if (auto v = io::validate(doc, in_schema)) throw Failure("SCHEMA_VIOLATION", v->path, v->message);
  Outcome outcome;
  try {
    outcome = handler(doc, job);
  } catch (const InputError& e) {
    throw Failure("INVALID_INPUT", e.path(), e.what());
  } catch (const Error& e) {
    throw Failure(std::string(error_code_name(e.code())), "", e.what());
  }
  if (auto v = io::validate(outcome.body, out_schema))
    throw std::logic_error("output violates its schema at " + v->path + ": " + v->message);
  return {outcome.positive ? kExitOk : kExitNegative, render(outcome.body)};
}

}  // namespace

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [n, h] : handlers()) out.push_back(n);
    return out;
  }();
  return names;
}

JobResult run(const JobSpec& job) {
  JobResult result;
  try {
    result = execute(job);
  } catch (const Failure& f) {
    result = {kExitInputError, render(error_document(f.code, f.what(), f.path))};
  }
  if (job.output) {
    std::ofstream out(*job.output, std::ios::binary);
    out << result.output;
    if (!out)
      result = {kExitInputError, render(error_document("IO_ERROR", "cannot write " + *job.output, ""))};
  }
  return result;
}

}  // namespace statikit::cli
