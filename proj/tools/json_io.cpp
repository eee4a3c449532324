#include "json_io.hpp"

#include <openssl/evp.h>

#include <cctype>
#include <cstdio>
#include <cstring>

#include "statikit/error.hpp"

namespace statikit::io {

namespace {

std::string at(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string at(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

const json& member(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) throw InputError(at(path, key), "missing field '" + key + "'");
  return j.at(key);
}

const json& array_at(const json& j, const std::string& path) {
  if (!j.is_array()) throw InputError(path, "expected an array");
  return j;
}

bool boolean_from(const json& j, const std::string& path) {
  if (!j.is_boolean()) throw InputError(path, "expected a boolean");
  return j.get<bool>();
}

Rational rational_from(const json& j, const std::string& path) {
  if (!j.is_string()) throw InputError(path, "expected a decimal string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    throw InputError(path, e.what());
  }
}

json terms_json(const ModuleVector& v, bool with_component) {
  json out = json::array();
  for (const auto& t : v.terms()) {
    json term;
    term["coeff"] = to_string(t.coeff);
    json exp = json::array();
    for (std::size_t k = 0; k < v.nvars(); ++k) exp.push_back(std::to_string(t.exponent[k]));
    term["exp"] = exp;
    if (with_component) term["comp"] = std::to_string(t.component + 1);
    out.push_back(term);
  }
  return out;
}

IntMatrix matrix_from(const json& j, std::size_t n, const std::string& path) {
  IntMatrix m;
  const auto& rows = array_at(j, path);
  if (rows.size() != n) throw InputError(path, "expected " + std::to_string(n) + " rows");
  for (std::size_t i = 0; i < n; ++i) {
    auto row = vector_from(rows[i], at(path, i));
    if (row.size() != n) throw InputError(at(path, i), "expected " + std::to_string(n) + " entries");
    m.push_back(std::move(row));
  }
  return m;
}

SmoothChart chart_from(const json& j, std::size_t n, const std::string& path) {
  auto cone = cone_from(member(j, "cone", path), n, at(path, "cone"));
  std::optional<IntMatrix> basis;
  if (j.contains("basis")) basis = matrix_from(j.at("basis"), n, at(path, "basis"));
  try {
    auto standard = SmoothChart::standard(n);
    if (cone == standard.cone() && (!basis || *basis == standard.basis())) return standard;
    auto chart = SmoothChart::of_cone(cone);
    if (basis && *basis != chart.basis()) throw InputError(at(path, "basis"), "basis is not the canonical ray order");
    return chart;
  } catch (const Error& e) {
    throw InputError(path, e.what());
  }
}

}  // namespace

json to_json(const Integer& z) { return z.get_str(); }

json to_json(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

json to_json(const RationalCone& c) {
  json rays = json::array();
  for (const auto& r : c.rays()) rays.push_back(to_json(r));
  return json{{"rays", rays}};
}

json to_json(const Fan& f) {
  json cones = json::array();
  for (const auto& c : f.maximal_cones()) cones.push_back(to_json(c));
  return json{{"ambient_dim", std::to_string(f.ambient_dim())}, {"support", to_json(f.support())}, {"cones", cones}};
}

json to_json(const ModuleVector& v) { return terms_json(v, true); }

json to_json(const Submodule& m) {
  json gens = json::array();
  for (const auto& g : m.generators()) gens.push_back(to_json(g));
  return json{{"nvars", std::to_string(m.nvars())}, {"rank", std::to_string(m.rank())}, {"generators", gens}};
}

json to_json(const MarkedGB& gb) {
  json out = json::array();
  for (const auto& e : gb.elements) out.push_back(to_json(e));
  return out;
}

json to_json(const GroebnerStratification& s) {
  json cells = json::array();
  for (const auto& c : s.strata.cells())
    cells.push_back(json{{"cone", to_json(c.cone)},
                         {"stratum", std::to_string(c.label)},
                         {"initial_module", to_json(s.tag(c.label))}});
  return json{{"support", to_json(s.strata.support())},
              {"strata", std::to_string(s.initial_modules.size())},
              {"cells", cells}};
}

json to_json(const SmoothChart& c) {
  json basis = json::array();
  for (const auto& row : c.basis()) basis.push_back(to_json(row));
  return json{{"cone", to_json(c.cone())}, {"basis", basis}};
}

json to_json(const ModulePresentation& p) {
  json matrix = json::array();
  for (std::size_t r = 0; r < p.rows; ++r) {
    json row = json::array();
    for (const auto& c : p.columns) row.push_back(terms_json(c.component(r), false));
    matrix.push_back(row);
  }
  return json{{"nvars", std::to_string(p.nvars())},
              {"rows", std::to_string(p.rows)},
              {"columns", std::to_string(p.columns.size())},
              {"chart", to_json(p.chart)},
              {"matrix", matrix}};
}

json to_json(const TorReport& r) {
  json face = json::array();
  for (auto v : r.face) face.push_back(std::to_string(v));
  json out{{"face", face}, {"degree", std::to_string(r.degree)}, {"vanishes", r.vanishes}};
  if (r.witness) out["witness"] = to_json(*r.witness);
  return out;
}

json to_json(const TorDimensionReport& r) {
  json reports = json::array();
  for (const auto& x : r.reports) reports.push_back(to_json(x));
  return json{{"holds", r.holds}, {"reports", reports}};
}

json to_json(const StatificationCertificate& c) {
  json charts = json::array();
  for (const auto& ch : c.charts)
    charts.push_back(json{{"cone", to_json(ch.cone)},
                          {"pullback", to_json(ch.pullback)},
                          {"static", ch.staticity.holds},
                          {"reports", to_json(ch.staticity)["reports"]}});
  json input = to_json(c.input);
  json out{{"format", StatificationCertificate::kFormat},
           {"input_sha256", sha256_hex(input.dump())},
           {"input", input},
           {"kernel", to_json(c.kernel)},
           {"stratification", to_json(c.stratification)},
           {"input_static", c.input_static},
           {"output_fan", to_json(c.output_fan)},
           {"output_refines", c.output_refines},
           {"charts", charts},
           {"complete", c.complete},
           {"all_static", c.all_static()}};
  if (c.audit) {
    out["audit"] = json{{"presentation", to_json(c.audit->alternative)},
                        {"kernel", to_json(c.audit->kernel)},
                        {"refines_primary", c.audit->refines_primary},
                        {"refines_alternative", c.audit->refines_alternative},
                        {"agrees", c.audit->agrees()}};
  }
  return out;
}

json to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back(json::array({std::to_string(u), std::to_string(v)}));
  return json{{"vertices", std::to_string(g.vertex_count())}, {"edges", edges}};
}

Integer integer_from(const json& j, const std::string& path) {
  if (!j.is_string()) throw InputError(path, "expected a decimal integer string");
  try {
    return parse_integer(j.get<std::string>());
  } catch (const Error& e) {
    throw InputError(path, e.what());
  }
}

std::size_t index_from(const json& j, const std::string& path) {
  auto z = integer_from(j, path);
  if (z < 0 || !z.fits_ulong_p() || z > 1000000) throw InputError(path, "expected a small nonnegative integer");
  return z.get_ui();
}

IntVector vector_from(const json& j, const std::string& path) {
  IntVector out;
  const auto& a = array_at(j, path);
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(integer_from(a[i], at(path, i)));
  return out;
}

RationalCone cone_from(const json& j, std::size_t dim, const std::string& path) {
  const auto& rays = array_at(member(j, "rays", path), at(path, "rays"));
  std::vector<LatticePoint> gens;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    auto r = vector_from(rays[i], at(at(path, "rays"), i));
    if (r.size() != dim) throw InputError(at(at(path, "rays"), i), "ray has the wrong dimension");
    if (is_zero(r)) throw InputError(at(at(path, "rays"), i), "ray must be nonzero");
    gens.push_back(std::move(r));
  }
  return RationalCone::from_generators(dim, std::move(gens));
}

Fan fan_from(const json& j, std::size_t dim, const std::string& path) {
  if (j.contains("ambient_dim") && index_from(j.at("ambient_dim"), at(path, "ambient_dim")) != dim)
    throw InputError(at(path, "ambient_dim"), "fan dimension does not match");
  auto support = cone_from(member(j, "support", path), dim, at(path, "support"));
  const auto& list = array_at(member(j, "cones", path), at(path, "cones"));
  std::vector<RationalCone> cones;
  for (std::size_t i = 0; i < list.size(); ++i) cones.push_back(cone_from(list[i], dim, at(at(path, "cones"), i)));
  try {
    auto fan = Fan::from_cones(support, cones);
    auto problems = fan_violations(fan);
    if (!problems.empty()) throw InputError(path, "not a fan: " + problems.front());
    return fan;
  } catch (const Error& e) {
    throw InputError(path, e.what());
  }
}

ModuleVector module_vector_from(const json& j, std::size_t nvars, std::size_t rank, const std::string& path) {
  if (j.is_string()) {
    try {
      return parse_module_vector(j.get<std::string>(), nvars, rank);
    } catch (const Error& e) {
      throw InputError(path, e.what());
    }
  }
  const auto& terms = array_at(j, path);
  std::vector<LaurentTerm> out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    auto p = at(path, i);
    LaurentTerm t;
    t.coeff = rational_from(member(terms[i], "coeff", p), at(p, "coeff"));
    auto exp = vector_from(member(terms[i], "exp", p), at(p, "exp"));
    if (exp.size() != nvars) throw InputError(at(p, "exp"), "exponent has the wrong length");
    for (std::size_t k = 0; k < nvars; ++k) {
      if (!exp[k].fits_sint_p() || abs(exp[k]) > 100000) throw InputError(at(p, "exp"), "exponent too large");
      t.exponent[k] = static_cast<std::int32_t>(exp[k].get_si());
    }
    std::size_t comp = 1;
    if (terms[i].contains("comp")) comp = index_from(terms[i].at("comp"), at(p, "comp"));
    if (comp < 1 || comp > rank) throw InputError(at(p, "comp"), "component out of range");
    t.component = comp - 1;
    if (t.coeff == 0) throw InputError(at(p, "coeff"), "coefficient must be nonzero");
    out.push_back(std::move(t));
  }
  return ModuleVector(nvars, rank, std::move(out));
}

Submodule submodule_from(const json& j, const std::string& path) {
  auto n = index_from(member(j, "nvars", path), at(path, "nvars"));
  auto m = index_from(member(j, "rank", path), at(path, "rank"));
  if (n == 0 || n + 1 > kMaxVariables) throw InputError(at(path, "nvars"), "number of variables must be 1..7");
  const auto& gens = array_at(member(j, "generators", path), at(path, "generators"));
  std::vector<ModuleVector> out;
  for (std::size_t i = 0; i < gens.size(); ++i)
    out.push_back(module_vector_from(gens[i], n, m, at(at(path, "generators"), i)));
  return Submodule(n, m, std::move(out));
}

MarkedGB marked_gb_from(const json& j, std::size_t nvars, std::size_t rank, const std::string& path) {
  MarkedGB gb{TermOrder::grevlex(nvars), nvars, rank, {}, {}};
  const auto& elems = array_at(j, path);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    auto v = module_vector_from(elems[i], nvars, rank, at(path, i));
    if (v.is_zero()) throw InputError(at(path, i), "basis element must be nonzero");
    gb.leading.push_back(leading_term(v, gb.order));
    gb.elements.push_back(std::move(v));
  }
  return gb;
}

GroebnerStratification stratification_from(const json& j, std::size_t nvars, std::size_t rank,
                                           const std::string& path) {
  auto support = cone_from(member(j, "support", path), nvars, at(path, "support"));
  auto count = index_from(member(j, "strata", path), at(path, "strata"));
  std::vector<std::optional<MarkedGB>> tags(count);
  std::vector<StratumCell> cells;
  const auto& list = array_at(member(j, "cells", path), at(path, "cells"));
  for (std::size_t i = 0; i < list.size(); ++i) {
    auto p = at(at(path, "cells"), i);
    auto cone = cone_from(member(list[i], "cone", p), nvars, at(p, "cone"));
    auto label = index_from(member(list[i], "stratum", p), at(p, "stratum"));
    if (label >= count) throw InputError(at(p, "stratum"), "stratum label out of range");
    auto tag = marked_gb_from(member(list[i], "initial_module", p), nvars, rank, at(p, "initial_module"));
    if (tags[label] && !(*tags[label] == tag)) throw InputError(p, "cells of one stratum carry different tags");
    tags[label] = std::move(tag);
    cells.push_back({std::move(cone), label});
  }
  GroebnerStratification out{PLStratification(support, std::move(cells)), {}};
  for (std::size_t k = 0; k < count; ++k) {
    if (!tags[k]) throw InputError(at(path, "cells"), "stratum without cells");
    out.initial_modules.push_back(std::move(*tags[k]));
  }
  return out;
}

ModulePresentation presentation_from(const json& j, const std::string& path) {
  auto n = index_from(member(j, "nvars", path), at(path, "nvars"));
  if (n == 0 || n + 1 > kMaxVariables) throw InputError(at(path, "nvars"), "number of variables must be 1..7");
  auto rows = index_from(member(j, "rows", path), at(path, "rows"));
  auto chart = j.contains("chart") ? chart_from(j.at("chart"), n, at(path, "chart")) : SmoothChart::standard(n);
  const auto& matrix = array_at(member(j, "matrix", path), at(path, "matrix"));
  std::size_t cols = 0;
  if (j.contains("columns")) cols = index_from(j.at("columns"), at(path, "columns"));
  else if (!matrix.empty() && matrix[0].is_array()) cols = matrix[0].size();
  if (!matrix.empty() && matrix.size() != rows)
    throw InputError(at(path, "matrix"), "expected " + std::to_string(rows) + " rows");
  if (matrix.empty() && rows > 0 && cols > 0) throw InputError(at(path, "matrix"), "matrix is empty");
  ModulePresentation p{chart, rows, std::vector<ModuleVector>(cols, ModuleVector(n, rows))};
  for (std::size_t r = 0; r < matrix.size(); ++r) {
    const auto& row = array_at(matrix[r], at(at(path, "matrix"), r));
    if (row.size() != cols) throw InputError(at(at(path, "matrix"), r), "rows must have equal length");
    for (std::size_t c = 0; c < cols; ++c) {
      auto entry = module_vector_from(row[c], n, 1, at(at(at(path, "matrix"), r), c));
      p.columns[c] = p.columns[c] + entry.embedded(rows, r);
    }
  }
  try {
    p.validate();
  } catch (const Error& e) {
    throw InputError(at(path, "matrix"), e.what());
  }
  return p;
}

TorDimensionReport tor_reports_from(const json& j, std::size_t nvars, std::size_t rows, const std::string& path) {
  TorDimensionReport out;
  const auto& list = array_at(j, path);
  for (std::size_t i = 0; i < list.size(); ++i) {
    auto p = at(path, i);
    TorReport r;
    const auto& face = array_at(member(list[i], "face", p), at(p, "face"));
    for (std::size_t k = 0; k < face.size(); ++k) r.face.push_back(index_from(face[k], at(at(p, "face"), k)));
    r.degree = index_from(member(list[i], "degree", p), at(p, "degree"));
    r.vanishes = boolean_from(member(list[i], "vanishes", p), at(p, "vanishes"));
    if (list[i].contains("witness")) {
      std::size_t blocks = 1;
      for (std::size_t k = 0; k < r.degree; ++k) blocks = blocks * (r.face.size() - k) / (k + 1);
      r.witness = module_vector_from(list[i].at("witness"), nvars, rows * blocks, at(p, "witness"));
    }
    out.holds = out.holds && r.vanishes;
    out.reports.push_back(std::move(r));
  }
  return out;
}

StatificationCertificate certificate_from(const json& j) {
  const std::string root;
  auto format = member(j, "format", root);
  if (format != StatificationCertificate::kFormat) throw InputError("/format", "unsupported certificate format");
  auto input = presentation_from(member(j, "input", root), "/input");
  const std::size_t n = input.nvars();
  auto kernel = submodule_from(member(j, "kernel", root), "/kernel");
  if (kernel.nvars() != n || kernel.rank() != input.columns.size())
    throw InputError("/kernel", "kernel does not match the presentation");
  auto strat = stratification_from(member(j, "stratification", root), n, kernel.rank(), "/stratification");
  auto fan = fan_from(member(j, "output_fan", root), n, "/output_fan");
  StatificationCertificate c{input,
                             kernel,
                             strat,
                             boolean_from(member(j, "input_static", root), "/input_static"),
                             fan,
                             boolean_from(member(j, "output_refines", root), "/output_refines"),
                             {},
                             boolean_from(member(j, "complete", root), "/complete"),
                             std::nullopt};
  const auto& charts = array_at(member(j, "charts", root), "/charts");
  for (std::size_t i = 0; i < charts.size(); ++i) {
    auto p = at("/charts", i);
    auto cone = cone_from(member(charts[i], "cone", p), n, at(p, "cone"));
    auto pullback = presentation_from(member(charts[i], "pullback", p), at(p, "pullback"));
    auto reports = tor_reports_from(member(charts[i], "reports", p), n, pullback.rows, at(p, "reports"));
    if (reports.holds != boolean_from(member(charts[i], "static", p), at(p, "static")))
      throw InputError(at(p, "static"), "verdict disagrees with the reports");
    c.charts.push_back({std::move(cone), std::move(pullback), std::move(reports)});
  }
  if (j.contains("audit")) {
    const auto& a = j.at("audit");
    auto alt = presentation_from(member(a, "presentation", "/audit"), "/audit/presentation");
    auto k2 = submodule_from(member(a, "kernel", "/audit"), "/audit/kernel");
    c.audit = AuditReport{alt, k2, boolean_from(member(a, "refines_primary", "/audit"), "/audit/refines_primary"),
                          boolean_from(member(a, "refines_alternative", "/audit"), "/audit/refines_alternative")};
  }
  auto hash = member(j, "input_sha256", root);
  if (hash != sha256_hex(to_json(input).dump())) throw InputError("/input_sha256", "input hash mismatch");
  return c;
}

Graph graph_from(const json& j, const std::string& path) {
  auto v = index_from(member(j, "vertices", path), at(path, "vertices"));
  const auto& list = array_at(member(j, "edges", path), at(path, "edges"));
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < list.size(); ++i) {
    auto p = at(at(path, "edges"), i);
    const auto& e = array_at(list[i], p);
    if (e.size() != 2) throw InputError(p, "an edge has two endpoints");
    edges.emplace_back(index_from(e[0], at(p, 0)), index_from(e[1], at(p, 1)));
  }
  try {
    return Graph(v, std::move(edges));
  } catch (const Error& e) {
    throw InputError(path, e.what());
  }
}

ModuleVector parse_module_vector(const std::string& text, std::size_t nvars, std::size_t rank) {
  static const char* short_names = "xyzw";
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw Error(ErrorCode::kInvalidInput, "empty polynomial");
  if (s == "0") return ModuleVector(nvars, rank);

  auto bad = [&](const std::string& why) { return Error(ErrorCode::kInvalidInput, "cannot parse '" + text + "': " + why); };
  std::vector<LaurentTerm> terms;
  std::size_t i = 0;
  auto read_int = [&](bool allow_sign) {
    std::size_t start = i;
    if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start])))) throw bad("number expected");
    return s.substr(start, i - start);
  };
  while (i < s.size()) {
    Rational coeff = 1;
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') coeff = -1;
      ++i;
    } else if (!terms.empty()) {
      throw bad("operator expected");
    }
    LaurentTerm t{1, Exponent{}, 0};
    bool have_component = false, first = true;
    while (true) {
      if (!first) {
        if (i < s.size() && s[i] == '*') ++i;
        else break;
      }
      first = false;
      if (i >= s.size()) throw bad("factor expected");
      char c = s[i];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        Rational q(Integer(read_int(false)));
        if (i < s.size() && s[i] == '/') {
          ++i;
          Integer d(read_int(false));
          if (d == 0) throw bad("zero denominator");
          q /= Rational(d);
        }
        coeff *= q;
        continue;
      }
      if (c == 'e' && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
        ++i;
        auto k = std::stoul(read_int(false));
        if (have_component || k < 1 || k > rank) throw bad("bad unit vector");
        t.component = k - 1;
        have_component = true;
        continue;
      }
      std::size_t var = nvars;
      if (c == 'x' && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
        ++i;
        var = std::stoul(read_int(false)) - 1;
      } else if (const char* p = std::strchr(short_names, c); p != nullptr && c != '\0' && nvars <= 4) {
        var = static_cast<std::size_t>(p - short_names);
        ++i;
      }
      if (var >= nvars) throw bad("unknown variable");
      std::int32_t e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        bool paren = i < s.size() && s[i] == '(';
        if (paren) ++i;
        e = std::stoi(read_int(true));
        if (paren) {
          if (i >= s.size() || s[i] != ')') throw bad("')' expected");
          ++i;
        }
      }
      t.exponent[var] += e;
    }
    if (rank > 1 && !have_component) throw bad("every term needs a unit vector e1..e" + std::to_string(rank));
    t.coeff = coeff;
    terms.push_back(std::move(t));
  }
  return ModuleVector(nvars, rank, std::move(terms));
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
  std::string out;
  char buf[3];
  for (unsigned int k = 0; k < len; ++k) {
    std::snprintf(buf, sizeof buf, "%02x", digest[k]);
    out += buf;
  }
  return out;
}

}  // namespace statikit::io
