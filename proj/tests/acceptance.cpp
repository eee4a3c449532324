#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "helpers.hpp"
#include "oracles.hpp"
#include "random_instances.hpp"

using namespace th;
using nlohmann::json;

namespace {

const std::string fixtures = STATIKIT_FIXTURES;
const std::string executable = STATIKIT_EXECUTABLE;

struct Verdict {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void criterion(int number, const std::string& title, double limit_seconds, const std::function<Verdict()>& body) {
  auto start = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && secs >= limit_seconds) {
    v.pass = false;
    v.detail += " time limit exceeded";
  }
  if (!v.pass) ++failures;
  std::printf("criterion %d %s: %s (%.2f s) %s\n", number, v.pass ? "PASS" : "FAIL", title.c_str(), secs,
              v.detail.c_str());
  std::fflush(stdout);
}

bool same_module(const Submodule& a, const Submodule& b) { return is_submodule(a, b) && is_submodule(b, a); }

std::string describe(const ModulePresentation& M) {
  std::string out = "[";
  for (std::size_t c = 0; c < M.columns.size(); ++c) out += (c ? ", " : "") + format(M.columns[c]);
  return out + "]";
}

Fan quadrant_fan() { return Fan::of_cone(RationalCone::orthant(2)); }

/// The output fan with one interior ray removed when the result is still smooth, else the orthant.
Fan coarsening(const Fan& f) {
  auto rays = f.rays();
  std::sort(rays.begin(), rays.end());
  for (const auto& drop : rays) {
    if (drop == pt({1, 0}) || drop == pt({0, 1})) continue;
    std::vector<LatticePoint> keep;
    for (const auto& r : rays)
      if (r != drop) keep.push_back(r);
    std::sort(keep.begin(), keep.end(), [](const LatticePoint& a, const LatticePoint& b) {
      return a[1] * b[0] < b[1] * a[0];
    });
    std::vector<RationalCone> cones;
    bool smooth = true;
    for (std::size_t k = 0; k + 1 < keep.size(); ++k) {
      cones.push_back(RationalCone::from_generators(2, {keep[k], keep[k + 1]}));
      smooth = smooth && is_smooth(cones.back());
    }
    if (smooth) return Fan::from_cones(RationalCone::orthant(2), cones);
  }
  return quadrant_fan();
}

Fan extra_refinement(const Fan& f) {
  auto max = f.maximal_cones();
  LatticePoint sum(2, 0);
  for (const auto& r : max.front().rays())
    for (std::size_t i = 0; i < 2; ++i) sum[i] += r[i];
  return star_subdivision(f, primitive(sum));
}

std::vector<std::pair<cli::JobSpec, int>> fixture_suite() {
  std::ifstream in(fixtures + "/suite.json");
  auto suite = json::parse(in);
  std::vector<std::pair<cli::JobSpec, int>> out;
  for (const auto& entry : suite) {
    cli::JobSpec job;
    job.subcommand = entry["subcommand"];
    job.input = fixtures + "/" + entry["input"].get<std::string>();
    for (const auto& f : entry["flags"]) job.audit = job.audit || f == "--audit";
    out.emplace_back(job, entry["exit"].get<int>());
  }
  return out;
}

std::string run_process(const cli::JobSpec& job) {
  std::string cmd = "'" + executable + "' " + job.subcommand + (job.audit ? " --audit" : "") + " '" + job.input + "'";
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("cannot start " + cmd);
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  pclose(pipe);
  return out;
}

Verdict example1() {
  cli::JobSpec job;
  job.subcommand = "statify";
  job.input = fixtures + "/example1.json";
  auto r = cli::run(job);
  if (r.exit_code != 0) return {false, "exit code " + std::to_string(r.exit_code)};
  auto cert = io::certificate_from(json::parse(r.output));
  bool kernel = same_module(cert.kernel, module(2, 2, {"y^2*e1 - x^2*e2"}));
  bool fan = cert.output_fan == star_subdivision(quadrant_fan(), pt({1, 1}));
  bool charts = cert.charts.size() == 2 && cert.all_static();
  std::ostringstream d;
  d << "kernel=<(y^2,-x^2)>:" << kernel << " fan=Bl0:" << fan << " charts_static:" << charts;
  return {kernel && fan && charts && replay(cert).ok, d.str()};
}

Verdict example2() {
  cli::JobSpec job;
  job.subcommand = "statify";
  job.input = fixtures + "/example2.json";
  auto r = cli::run(job);
  if (r.exit_code != 0) return {false, "exit code " + std::to_string(r.exit_code)};
  auto cert = io::certificate_from(json::parse(r.output));
  auto octant = RationalCone::orthant(3);
  auto bl = star_subdivision(Fan::of_cone(octant), pt({1, 1, 1}));
  auto cyclic = module(3, 3, {"y*e1 + z*e2 + x*e3"});
  auto extra = vec("y^3*e1 - y*z^2*e1 + y^2*z*e2 - x^2*z*e2", 3, 3);

  bool contains_cyclic = is_submodule(cyclic, cert.kernel);
  bool cyclic_strat_is_bl = stratification_to_smooth_fan(groebner_stratification(cyclic, octant).strata) == bl;
  bool extra_syzygy = is_member(extra, cert.kernel) && !is_member(extra, cyclic);
  bool statified = cert.output_refines && cert.all_static() && replay(cert).ok;
  auto bl_instance = verify_theorem_instance(io::presentation_from(json::parse(std::ifstream(job.input))["presentation"],
                                                                   "/presentation"),
                                             bl);
  std::ostringstream d;
  d << "submodule <(y,z,x)> inside K:" << contains_cyclic << "; its stratification gives Bl0:" << cyclic_strat_is_bl
    << "; K has the further syzygy (y^3-yz^2, y^2z-x^2z, 0), so the one-generator resolution is not exact:" << extra_syzygy
    << "; on Bl0 refines=" << bl_instance.refines << " all_static=" << bl_instance.all_static
    << " (theorem sides agree:" << bl_instance.agrees() << "); computed statification has "
    << cert.output_fan.maximal_cones().size() << " smooth charts, all static:" << statified;
  return {contains_cyclic && cyclic_strat_is_bl && extra_syzygy && statified && bl_instance.agrees(), d.str()};
}

Verdict orbit_table() {
  bool a = !is_static(row(2, {"x", "y"}));
  bool b = is_static(row(2, {"x"})) && !is_log_flat(row(2, {"x"}));
  bool c = is_log_flat(ModulePresentation{SmoothChart::standard(2), 1, {}});
  std::ostringstream d;
  d << "coker(x,y) not static:" << a << " coker(x) static, not log flat:" << b << " free log flat:" << c;
  return {a && b && c, d.str()};
}

Verdict theorem_suite() {
  std::mt19937 rng(2024);
  int instances = 0, checks = 0, disagreements = 0, nontrivial = 0, negative = 0;
  std::string log;
  while (instances < 120) {
    std::size_t rows = gen::uniform(rng, 0, 3) == 0 ? 2 : 1;
    auto M = gen::presentation(rng, 2, rows, 2, 3, 3, gen::uniform(rng, 0, 5) == 0 ? 0 : 1);
    ++instances;
    auto cert = compute_statification(M);
    nontrivial += cert.input_static ? 0 : 1;
    for (const auto& fan : {cert.output_fan, coarsening(cert.output_fan), extra_refinement(cert.output_fan)}) {
      auto inst = verify_theorem_instance(M, fan);
      ++checks;
      negative += inst.refines ? 0 : 1;
      if (!inst.agrees()) {
        ++disagreements;
        log += " disagreement on " + describe(M);
      }
    }
  }
  std::ostringstream d;
  d << instances << " presentations (" << nontrivial << " not static), " << checks << " fans (" << negative
    << " not refining), " << disagreements << " disagreements" << log;
  return {disagreements == 0 && instances >= 50 && checks >= 150 && nontrivial > 0 && negative > 0, d.str()};
}

Verdict criterion_cross_check() {
  std::mt19937 rng(77);
  int count = 0, disagreements = 0, static_count = 0;
  std::string log;
  while (count < 120) {
    std::size_t n = gen::uniform(rng, 2, 3);
    auto M = gen::multigraded_presentation(rng, n, gen::uniform(rng, 1, 2), gen::uniform(rng, 1, 3), 3, 1);
    ++count;
    std::vector<std::size_t> seq;
    for (std::size_t i = 0; i < n; ++i) seq.push_back(i);
    bool chart = is_static(M);
    bool regular = is_regular_sequence_on(syzygies(M.columns, n, M.rows), seq);
    static_count += chart ? 1 : 0;
    if (chart != regular) {
      ++disagreements;
      log += " disagreement on " + describe(M) + " chart=" + std::to_string(chart) + " regular=" + std::to_string(regular);
    }
  }
  std::ostringstream d;
  d << count << " multigraded instances (" << static_count << " static), " << disagreements << " disagreements" << log;
  return {disagreements == 0 && static_count > 0 && static_count < count, d.str()};
}

Verdict dimension_shift() {
  std::mt19937 rng(99);
  int count = 0, comparisons = 0, disagreements = 0, nonvanishing = 0;
  std::string log;
  while (count < 110) {
    std::size_t n = gen::uniform(rng, 1, 3);
    auto M = gen::presentation(rng, n, gen::uniform(rng, 1, 2), gen::uniform(rng, 2, 3), 2, 2, 1);
    ++count;
    auto K = syzygies(M.columns, n, M.rows);
    auto image = gen::presentation_of(K, M.chart);
    std::vector<std::size_t> all;
    for (std::size_t i = 0; i < n; ++i) all.push_back(i);
    for (const auto& face : face_subsets(all))
      for (std::size_t i = 1; i <= 2; ++i) {
        ++comparisons;
        nonvanishing += koszul_tor(image, face, i).vanishes ? 0 : 1;
        if (koszul_tor(M, face, i + 1).vanishes != koszul_tor(image, face, i).vanishes) {
          ++disagreements;
          log += " disagreement on " + describe(M) + " degree " + std::to_string(i);
        }
      }
  }
  std::ostringstream d;
  d << count << " modules, " << comparisons << " comparisons (" << nonvanishing << " nonvanishing), " << disagreements
    << " disagreements" << log;
  return {disagreements == 0 && nonvanishing > 0, d.str()};
}

Verdict chip_firing() {
  bool cycles = true;
  for (std::size_t n = 3; n <= 8; ++n) cycles = cycles && jacobian_group(gen::cycle(n)) == std::vector<Integer>{Integer(n)};

  int graphs = 0;
  bool trees = true;
  std::vector<std::filesystem::path> files{fixtures + "/cycle5.json"};
  for (const auto& entry : std::filesystem::directory_iterator(fixtures + "/graphs")) files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& file : files) {
    auto g = io::graph_from(json::parse(std::ifstream(file)), "");
    if (g.vertex_count() > 7) continue;
    ++graphs;
    Integer order = 1;
    for (const auto& f : jacobian_group(g)) order *= f;
    trees = trees && order == Integer(oracle::spanning_trees(g.vertex_count(), g.edges()));
  }

  std::mt19937 rng(5);
  int triples = 0, equivalent = 0, mismatched = 0, bad_replays = 0;
  while (triples < 1000) {
    auto g = gen::connected_graph(rng, gen::uniform(rng, 2, 7), gen::uniform(rng, 0, 5));
    auto d1 = gen::divisor(rng, g.vertex_count(), -4, 4);
    auto d2 = triples % 2 == 0 ? fire(g, d1, gen::divisor(rng, g.vertex_count(), -3, 3))
                               : gen::divisor(rng, g.vertex_count(), -4, 4);
    ++triples;
    bool eq = is_chip_firing_equivalent(g, d1, d2);
    auto s = firing_script(g, d1, d2);
    equivalent += eq ? 1 : 0;
    if (s.has_value() != eq) ++mismatched;
    if (s && fire(g, d1, *s) != d2) ++bad_replays;
  }
  std::ostringstream d;
  d << "cycles 3..8:" << cycles << " tree counts on " << graphs << " fixture graphs:" << trees << " " << triples
    << " triples (" << equivalent << " equivalent), " << mismatched << " NONE mismatches, " << bad_replays
    << " bad replays";
  return {cycles && trees && graphs > 0 && mismatched == 0 && bad_replays == 0, d.str()};
}

Verdict determinism() {
  auto suite = fixture_suite();
  int jobs = 0, differing = 0, wrong_exit = 0;
  for (const auto& [job, expected] : suite) {
    auto a = cli::run(job);
    auto b = cli::run(job);
    auto p = run_process(job);
    auto q = run_process(job);
    ++jobs;
    if (a.output != b.output || p != q || a.output != p) ++differing;
    if (a.exit_code != expected) ++wrong_exit;
  }
  std::ostringstream d;
  d << jobs << " fixture jobs run twice in process and twice as subprocesses, " << differing << " differing, "
    << wrong_exit << " unexpected exit codes";
  return {differing == 0 && wrong_exit == 0 && jobs > 0, d.str()};
}

}  // namespace

int main() {
  criterion(1, "Example-1 reproduction", 1.0, example1);
  criterion(2, "Example-2 reproduction", 10.0, example2);
  criterion(3, "Orbit-closure staticity table", 0, orbit_table);
  criterion(4, "Refinement vs staticity property suite", 0, theorem_suite);
  criterion(5, "Criterion cross-check", 0, criterion_cross_check);
  criterion(6, "Koszul-vs-resolution oracle", 0, dimension_shift);
  criterion(7, "Chip-firing suite", 30.0, chip_firing);
  criterion(8, "Determinism", 0, determinism);
  return failures == 0 ? 0 : 1;
}
