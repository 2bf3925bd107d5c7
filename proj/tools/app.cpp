#include "app.hpp"

#include "qhh/homology.hpp"
#include "qhh/koszul.hpp"
#include "qhh/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace qhh::app {

using Json = nlohmann::ordered_json;

namespace {

// Raw inputs after merging the config file under the flags.
struct Inputs {
  std::optional<long> n;
  std::vector<std::string> pairs;  // "i,j,value"
  std::optional<std::vector<std::vector<std::string>>> matrix;
  std::optional<std::string> one_parameter;
  bool symbolic = false;
  bool auto_primes = false;
  std::optional<std::string> automorphism;
  std::optional<std::vector<std::string>> p;
  std::optional<std::vector<long>> alpha;
  std::optional<long> bound;
  std::optional<long> n_max;
  bool allow_truncated = false;
  bool expect_top = false;
  std::string out_path;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::string trim(std::string s) {
  auto blank = [](unsigned char c) { return std::isspace(c) != 0; };
  s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), blank));
  s.erase(std::find_if_not(s.rbegin(), s.rend(), blank).base(), s.end());
  return s;
}

long parse_integer(const std::string& text, const std::string& what) {
  const std::string t = trim(text);
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(t, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (t.empty() || used != t.size()) throw ConfigError(what + ": expected an integer, got '" + text + "'");
  return value;
}

std::string exact_string(const Json& v, const std::string& what) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long>());
  throw ConfigError(what + ": values must be exact rational strings such as \"3/2\"");
}

void merge_config_file(const std::string& path, Inputs& in) {
  std::ifstream file(path);
  if (!file) throw ConfigError("cannot open config file '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(file);
  } catch (const Json::exception& e) {
    throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config file must hold a JSON object");
  try {
    for (const auto& [key, value] : doc.items()) {
      if (key == "n") {
        if (!in.n) in.n = value.get<long>();
      } else if (key == "q") {
        if (!in.pairs.empty()) continue;  // flags win
        if (value.is_array() && !value.empty() && value.front().is_array()) {
          std::vector<std::vector<std::string>> rows;
          for (const auto& row : value) {
            std::vector<std::string> r;
            for (const auto& entry : row) r.push_back(exact_string(entry, "q matrix"));
            rows.push_back(std::move(r));
          }
          in.matrix = std::move(rows);
        } else if (value.is_array()) {
          for (const auto& entry : value) {
            in.pairs.push_back(std::to_string(entry.at("i").get<long>()) + "," +
                               std::to_string(entry.at("j").get<long>()) + "," +
                               exact_string(entry.at("value"), "q entry"));
          }
        } else {
          throw ConfigError("'q' must be a matrix or a list of {i, j, value}");
        }
      } else if (key == "one_parameter") {
        if (!in.one_parameter) in.one_parameter = exact_string(value, "one_parameter");
      } else if (key == "symbolic") {
        in.symbolic = in.symbolic || value.get<bool>();
      } else if (key == "auto_primes") {
        in.auto_primes = in.auto_primes || value.get<bool>();
      } else if (key == "automorphism") {
        if (!in.automorphism) in.automorphism = value.get<std::string>();
      } else if (key == "p") {
        if (!in.p) {
          std::vector<std::string> p;
          for (const auto& entry : value) p.push_back(exact_string(entry, "p"));
          in.p = std::move(p);
        }
      } else if (key == "alpha") {
        if (!in.alpha) in.alpha = value.get<std::vector<long>>();
      } else if (key == "bound") {
        if (!in.bound) in.bound = value.get<long>();
      } else if (key == "nmax") {
        if (!in.n_max) in.n_max = value.get<long>();
      } else if (key == "allow_truncated") {
        in.allow_truncated = in.allow_truncated || value.get<bool>();
      } else if (key == "expect_top") {
        in.expect_top = in.expect_top || value.get<bool>();
      } else {
        throw ConfigError("unknown config key '" + key + "'");
      }
    }
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("config file has a field of the wrong type: ") + e.what());
  }
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isalnum(c) || c == '_'; });
}

QCoefficient parse_value(const std::string& text, std::vector<std::string>& symbols, bool allow_new,
                         const std::string& what) {
  QCoefficient c;
  try {
    c = parse_coefficient(trim(text), symbols, allow_new);
  } catch (const std::exception& e) {
    throw ConfigError(what + ": " + e.what());
  }
  if (c.is_zero()) throw ConfigError(what + " must be nonzero");
  return c;
}

AlgebraSpec build_from_upper(std::size_t n, std::vector<std::string> symbols, std::vector<QCoefficient> upper) {
  const auto mode = symbols.empty() ? AlgebraMode::numeric : AlgebraMode::symbolic;
  return AlgebraSpec(n, mode, std::move(symbols), std::move(upper));
}

std::size_t upper_slot(std::size_t n, std::size_t i, std::size_t j) {
  // Row-major position of (i, j), i < j, among the upper-triangular pairs.
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

AlgebraSpec build_algebra(const Inputs& in, std::size_t n, std::string& source) {
  const int sources = (in.one_parameter ? 1 : 0) + (in.pairs.empty() ? 0 : 1) + (in.matrix ? 1 : 0);
  if (sources > 1) throw ConfigError("give the parameters once: --one-parameter, --q, or a q matrix");

  if (in.one_parameter) {
    source = "one-parameter";
    const std::string value = trim(*in.one_parameter);
    if (is_identifier(value)) return AlgebraSpec::one_parameter_symbolic(n, value);
    Rational q;
    try {
      q = parse_rational(value);
    } catch (const std::exception&) {
      throw ConfigError("--one-parameter takes a symbol name or an exact rational, got '" + value + "'");
    }
    if (q == 0) throw ConfigError("--one-parameter value must be nonzero");
    return AlgebraSpec::one_parameter_numeric(n, q);
  }

  const std::size_t pair_count = n * (n - 1) / 2;
  std::vector<std::string> symbols;
  std::vector<std::optional<QCoefficient>> upper(pair_count);

  if (in.matrix) {
    source = "matrix";
    const auto& m = *in.matrix;
    if (m.size() != n) throw ConfigError("q matrix must have N rows");
    std::vector<std::vector<QCoefficient>> full(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i].size() != n) throw ConfigError("q matrix must be N×N");
      for (std::size_t j = 0; j < n; ++j) {
        full[i].push_back(parse_value(m[i][j], symbols, true,
                                      "q_" + std::to_string(i + 1) + std::to_string(j + 1)));
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!full[i][i].is_one()) throw ConfigError("q matrix diagonal must be 1");
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!(full[i][j] * full[j][i]).is_one()) {
          throw ConfigError("q matrix must satisfy q_ji = q_ij^-1 at (" + std::to_string(i + 1) + "," +
                            std::to_string(j + 1) + ")");
        }
        upper[upper_slot(n, i, j)] = full[i][j];
      }
    }
  } else if (!in.pairs.empty()) {
    source = "pairs";
    for (const auto& entry : in.pairs) {
      auto parts = split(entry, ',');
      if (parts.size() != 3) throw ConfigError("--q expects i,j,value, got '" + entry + "'");
      long i = parse_integer(parts[0], "--q index");
      long j = parse_integer(parts[1], "--q index");
      if (i < 1 || j < 1 || i > static_cast<long>(n) || j > static_cast<long>(n) || i == j) {
        throw ConfigError("--q indices must be distinct and in 1..N, got '" + entry + "'");
      }
      auto value = parse_value(parts[2], symbols, true, "--q value");
      if (i > j) {
        std::swap(i, j);
        value = value.inverse();
      }
      auto& slot = upper[upper_slot(n, static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1))];
      if (slot) throw ConfigError("--q gives q_" + std::to_string(i) + std::to_string(j) + " twice");
      slot = value;
    }
  } else {
    source = "generic";
    if (!in.symbolic && in.auto_primes) return AlgebraSpec::prime_multiparameter(n);
    return AlgebraSpec::generic_symbolic(n);
  }

  // Unspecified pairs with --q: a fresh symbol under --symbolic, a fresh
  // prime under --auto-primes, otherwise an error.
  int next_prime = 0;
  std::vector<QCoefficient> filled;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto& slot = upper[upper_slot(n, i, j)];
      if (!slot) {
        const std::string name = "q_" + std::to_string(i + 1) + std::to_string(j + 1);
        if (in.symbolic) {
          slot = parse_value(name, symbols, true, name);
        } else if (in.auto_primes) {
          slot = QCoefficient(Rational(nth_prime(next_prime++)));
        } else {
          throw ConfigError(name + " is not given (pass it with --q, or use --symbolic or --auto-primes)");
        }
      }
      filled.push_back(*slot);
    }
  }
  return build_from_upper(n, std::move(symbols), std::move(filled));
}

AutomorphismKind parse_kind(const std::string& name) {
  if (name == "canonical") return AutomorphismKind::canonical;
  if (name == "identity") return AutomorphismKind::identity;
  if (name == "explicit") return AutomorphismKind::explicit_p;
  if (name == "solve-top") return AutomorphismKind::solve_top;
  throw ConfigError("unknown automorphism '" + name + "'");
}

RunConfig build_config(const Inputs& in) {
  if (!in.n) throw ConfigError("the number of generators is required (--n)");
  if (*in.n < 1 || *in.n > 12) throw ConfigError("--n must be between 1 and 12");
  const auto n = static_cast<std::size_t>(*in.n);

  RunConfig config;
  config.algebra = build_algebra(in, n, config.algebra_source);
  config.auto_primes = in.auto_primes;
  config.allow_truncated = in.allow_truncated;
  config.expect_top = in.expect_top;
  config.out_path = in.out_path;

  if (in.automorphism) {
    config.automorphism = parse_kind(*in.automorphism);
  } else if (in.p) {
    config.automorphism = AutomorphismKind::explicit_p;
  } else if (in.alpha) {
    config.automorphism = AutomorphismKind::solve_top;
  }
  if (in.p && config.automorphism != AutomorphismKind::explicit_p) {
    throw ConfigError("--p only applies to --automorphism explicit");
  }
  if (in.alpha && config.automorphism != AutomorphismKind::solve_top) {
    throw ConfigError("--alpha only applies to --automorphism solve-top");
  }

  const auto& spec = config.algebra;
  switch (config.automorphism) {
    case AutomorphismKind::canonical:
      config.sigma = canonical_automorphism(spec);
      break;
    case AutomorphismKind::identity:
      config.sigma = ScalingAutomorphism::identity(n);
      break;
    case AutomorphismKind::explicit_p: {
      if (!in.p) throw ConfigError("--automorphism explicit needs --p");
      if (in.p->size() != n) throw ConfigError("--p needs exactly N entries");
      auto symbols = spec.symbols();
      std::vector<QCoefficient> p;
      for (const auto& entry : *in.p) p.push_back(parse_value(entry, symbols, false, "--p entry"));
      config.sigma = ScalingAutomorphism(std::move(p));
      break;
    }
    case AutomorphismKind::solve_top: {
      if (!in.alpha) throw ConfigError("--automorphism solve-top needs --alpha");
      if (in.alpha->size() != n) throw ConfigError("--alpha needs exactly N entries");
      std::vector<int> degrees;
      for (long a : *in.alpha) {
        if (a < 0 || a > 1000) throw ConfigError("--alpha entries must be in 0..1000");
        degrees.push_back(static_cast<int>(a));
      }
      config.alpha = MultiIndex(std::move(degrees));
      config.sigma = solve_automorphism_for_top(spec, *config.alpha);
      break;
    }
  }

  config.bound = static_cast<int>(in.bound.value_or(2 * static_cast<long>(n)));
  config.n_max = static_cast<int>(in.n_max.value_or(static_cast<long>(n) + 1));
  if (in.bound && (*in.bound < 0 || *in.bound > 64)) throw ConfigError("--bound must be in 0..64");
  if (in.n_max && (*in.n_max < 0 || *in.n_max > 64)) throw ConfigError("--nmax must be in 0..64");
  return config;
}

Json indices_json(const std::vector<int>& v) { return Json(v); }

Json bits_json(const ExteriorIndex& beta) {
  std::vector<int> bits;
  for (std::size_t i = 0; i < beta.size(); ++i) bits.push_back(beta[i] ? 1 : 0);
  return Json(bits);
}

Json p_json(const RunConfig& c) {
  Json p = Json::array();
  for (const auto& v : c.sigma.values()) p.push_back(c.algebra.describe(v));
  return p;
}

Json config_json(const RunConfig& c) {
  const auto& spec = c.algebra;
  Json q = Json::array();
  for (std::size_t i = 0; i < spec.n(); ++i) {
    for (std::size_t j = i + 1; j < spec.n(); ++j) {
      q.push_back({{"i", i + 1}, {"j", j + 1}, {"value", spec.describe(spec.q(i, j))}});
    }
  }
  Json automorphism = {{"kind", automorphism_name(c.automorphism)}, {"p", p_json(c)}};
  if (c.alpha) automorphism["alpha"] = indices_json(c.alpha->degrees());
  return {
      {"n", spec.n()},
      {"mode", spec.is_numeric() ? "numeric" : "symbolic"},
      {"source", c.algebra_source},
      {"symbols", spec.symbols()},
      {"q", q},
      {"automorphism", automorphism},
      {"bound", c.bound},
      {"nmax", c.n_max},
      {"auto_primes", c.auto_primes},
  };
}

Json c_sigma_json(const CSigmaSet& cs) {
  Json members = Json::array();
  for (const auto& m : cs.members) members.push_back(indices_json(m.degrees()));
  Json out = {{"bound", cs.bound}, {"complete", cs.complete}, {"members", members}};
  out["certified_max_degree"] = cs.certified_max_degree ? Json(*cs.certified_max_degree) : Json(nullptr);
  return out;
}

std::string tuple_text(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string generator_text(const KoszulBasisElement& e) {
  return monomial_text(e.alpha) + " ⊗ " + wedge_text(e.beta);
}

void emit(const RunConfig& c, const Json& doc, const std::string& text, std::ostream& out) {
  const std::string serialized = doc.dump(2) + "\n";
  if (c.out_path == "-") {
    out << serialized;
    return;
  }
  out << text;
  if (!c.out_path.empty()) {
    std::ofstream file(c.out_path, std::ios::binary | std::ios::trunc);
    if (!file) throw ConfigError("cannot write report to '" + c.out_path + "'");
    file << serialized;
  }
}

std::string header_text(const RunConfig& c) {
  const auto& spec = c.algebra;
  std::ostringstream s;
  s << "algebra      N=" << spec.n() << " (" << (spec.is_numeric() ? "numeric" : "symbolic") << ")";
  for (std::size_t i = 0; i < spec.n(); ++i) {
    for (std::size_t j = i + 1; j < spec.n(); ++j) {
      s << (i == 0 && j == 1 ? "  " : ", ") << "q_" << i + 1 << j + 1 << "=" << spec.describe(spec.q(i, j));
    }
  }
  s << "\nautomorphism " << automorphism_name(c.automorphism) << "  p = (";
  for (std::size_t i = 0; i < c.sigma.size(); ++i) s << (i ? ", " : "") << spec.describe(c.sigma.p(i));
  s << ")\n";
  return s.str();
}

int cmd_homology(const RunConfig& c, std::ostream& out, std::ostream& err) {
  auto report = homology_report(c.algebra, c.sigma, c.bound, c.n_max);
  if (report.truncated && !c.allow_truncated) {
    err << "C_sigma is not certified complete at bound " << c.bound
        << "; members of higher degree may exist. Raise --bound or pass --allow-truncated.\n";
    return exit_truncated;
  }
  Json groups = Json::array();
  Json betti = Json::array();
  std::ostringstream text;
  text << header_text(c);
  text << "bound        " << c.bound << (report.truncated ? "  (truncated: C_sigma not certified complete)" : "")
       << "\n\n";
  text << std::left << std::setw(4) << "n" << std::setw(7) << "betti"
       << "generators\n";
  for (const auto& g : report.groups) {
    Json gens = Json::array();
    for (const auto& e : g.generators) {
      gens.push_back({{"alpha", indices_json(e.alpha.degrees())}, {"beta", bits_json(e.beta)}});
    }
    std::vector<std::pair<MultiIndex, std::size_t>> graded(g.grading.begin(), g.grading.end());
    std::sort(graded.begin(), graded.end(),
              [](const auto& a, const auto& b) { return degree_then_lex_less(a.first, b.first); });
    Json grading = Json::array();
    for (const auto& [gamma, count] : graded) grading.push_back({{"gamma", indices_json(gamma.degrees())}, {"count", count}});
    groups.push_back({{"n", g.n}, {"betti", g.betti()}, {"generators", gens}, {"grading", grading}});
    betti.push_back(g.betti());

    text << std::setw(4) << g.n;
    if (g.generators.empty()) {
      text << g.betti();
    } else {
      text << std::setw(7) << g.betti();
    }
    for (std::size_t k = 0; k < g.generators.size(); ++k) text << (k ? ", " : "") << generator_text(g.generators[k]);
    text << "\n";
  }
  Json doc = {{"format", "qhh-report"},       {"version", 1},
              {"command", "homology"},        {"config", config_json(c)},
              {"truncated", report.truncated}, {"c_sigma", c_sigma_json(report.c_sigma)},
              {"betti", betti},               {"homology", groups}};
  emit(c, doc, text.str(), out);
  return exit_ok;
}

int cmd_csigma(const RunConfig& c, std::ostream& out) {
  auto cs = enumerate_c_sigma(c.algebra, c.sigma, c.bound);
  std::ostringstream text;
  text << header_text(c) << "bound        " << c.bound << "\n";
  text << "C_sigma      {";
  for (std::size_t k = 0; k < cs.members.size(); ++k) text << (k ? ", " : "") << tuple_text(cs.members[k].degrees());
  text << "}\ncomplete     " << (cs.complete ? "yes" : "no");
  if (cs.certified_max_degree) text << " (no member above degree " << *cs.certified_max_degree << ")";
  text << "\n";
  Json doc = {{"format", "qhh-report"}, {"version", 1},         {"command", "csigma"},
              {"config", config_json(c)}, {"c_sigma", c_sigma_json(cs)}};
  emit(c, doc, text.str(), out);
  return exit_ok;
}

int cmd_canonical(const RunConfig& c, std::ostream& out) {
  std::ostringstream text;
  text << header_text(c);
  for (std::size_t i = 0; i < c.sigma.size(); ++i) {
    text << "sigma(x" << i + 1 << ") = " << c.algebra.describe(c.sigma.p(i)) << " x" << i + 1 << "\n";
  }
  Json doc = {{"format", "qhh-report"}, {"version", 1}, {"command", "canonical"}, {"config", config_json(c)},
              {"p", p_json(c)}};
  emit(c, doc, text.str(), out);
  return exit_ok;
}

int cmd_generic_check(const RunConfig& c, std::ostream& out) {
  if (c.bound < 2) throw ConfigError("generic-check needs --bound of at least 2");
  auto verdict = is_generic(c.algebra, c.bound);
  std::ostringstream text;
  text << header_text(c);
  if (verdict.structural) {
    text << "generic (structurally)\n";
  } else if (verdict.generic) {
    text << "generic up to degree " << verdict.bound << "\n";
  } else {
    text << "not generic: witness gamma = " << tuple_text(verdict.witness->degrees()) << "\n";
  }
  Json doc = {{"format", "qhh-report"}, {"version", 1}, {"command", "generic-check"}, {"config", config_json(c)},
              {"generic", verdict.generic}, {"structural", verdict.structural}, {"search_bound", verdict.bound}};
  doc["witness"] = verdict.witness ? indices_json(verdict.witness->degrees()) : Json(nullptr);
  emit(c, doc, text.str(), out);
  return exit_ok;
}

Json check_json(bool passed, std::size_t checked, const std::vector<Json>& violations) {
  return {{"passed", passed}, {"checked", checked}, {"violations", violations}};
}

template <class Report>
Json koszul_check_json(const Report& r) {
  std::vector<Json> v;
  for (const auto& e : r.violations) v.push_back({{"alpha", indices_json(e.alpha.degrees())}, {"beta", bits_json(e.beta)}});
  return check_json(r.passed, r.elements_checked, v);
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  const auto& spec = c.algebra;
  if (!spec.is_numeric() && !c.auto_primes) {
    throw ConfigError("verify needs numeric parameters, or --auto-primes to evaluate symbols at distinct primes");
  }
  const auto nu = faithful_prime_assignment(spec, c.sigma);
  const AlgebraSpec numeric = spec.is_numeric() ? spec : spec.specialized(nu);
  const ScalingAutomorphism sigma = spec.is_numeric() ? c.sigma : c.sigma.specialized(nu);

  auto comparison = compare_with_koszul(spec, c.sigma, c.n_max, c.bound);
  NumericKoszul koszul(numeric, sigma);
  auto d2 = koszul.check_d_squared(c.bound);
  auto homotopy = koszul.check_homotopy_identity(c.bound);
  auto b2 = check_b_squared(numeric, sigma, c.n_max, c.bound);

  // Top class x^α ⊗ x_1∧⋯∧x_N: present iff α + (1,…,1) ∈ C_σ.
  const bool top_expected = c.expect_top || c.automorphism == AutomorphismKind::canonical ||
                            c.automorphism == AutomorphismKind::solve_top;
  MultiIndex top_alpha = c.alpha.value_or(MultiIndex(spec.n()));
  MultiIndex ones(std::vector<int>(spec.n(), 1));
  const bool top_present = in_c_sigma(spec, top_alpha + ones, c.sigma);

  const bool ok = comparison.all_agree() && d2.passed && homotopy.passed && b2.passed &&
                  (!top_expected || top_present);

  Json cells = Json::array();
  std::vector<std::array<std::size_t, 5>> totals(static_cast<std::size_t>(c.n_max) + 1);
  std::ostringstream mismatches;
  for (const auto& cell : comparison.cells) {
    cells.push_back({{"gamma", indices_json(cell.gamma.degrees())},
                     {"n", cell.n},
                     {"skipped", cell.skipped},
                     {"natural_oracle", cell.natural_oracle},
                     {"natural_koszul", cell.natural_koszul},
                     {"invariant_oracle", cell.invariant_oracle},
                     {"invariant_koszul", cell.invariant_koszul},
                     {"quotient_oracle", cell.quotient_oracle},
                     {"agrees", cell.agrees()}});
    auto& t = totals[static_cast<std::size_t>(cell.n)];
    t[0] += cell.natural_oracle;
    t[1] += cell.natural_koszul;
    t[2] += cell.invariant_oracle;
    t[3] += cell.invariant_koszul;
    t[4] += cell.quotient_oracle;
    if (!cell.agrees()) {
      mismatches << "  mismatch gamma=" << tuple_text(cell.gamma.degrees()) << " n=" << cell.n
                 << ": natural " << cell.natural_oracle << " vs " << cell.natural_koszul << ", invariant "
                 << cell.invariant_oracle << " vs " << cell.invariant_koszul << ", quotient " << cell.quotient_oracle
                 << "\n";
    }
  }
  std::vector<Json> b2_violations;
  for (const auto& g : b2.violations) b2_violations.push_back(indices_json(g.degrees()));

  Json specialization = Json::object();
  if (!spec.is_numeric()) {
    for (const auto& [id, value] : nu.values()) specialization[spec.symbols()[static_cast<std::size_t>(id)]] = to_string(value);
  }
  Json totals_json = Json::array();
  for (std::size_t n = 0; n < totals.size(); ++n) {
    const auto& t = totals[n];
    totals_json.push_back({{"n", n},
                           {"natural_oracle", t[0]},
                           {"natural_koszul", t[1]},
                           {"invariant_oracle", t[2]},
                           {"invariant_koszul", t[3]},
                           {"quotient_oracle", t[4]}});
  }
  Json doc = {{"format", "qhh-report"},
              {"version", 1},
              {"command", "verify"},
              {"config", config_json(c)},
              {"specialization", specialization},
              {"checks",
               {{"d_squared", koszul_check_json(d2)},
                {"homotopy", koszul_check_json(homotopy)},
                {"b_squared", check_json(b2.passed, b2.cells_checked, b2_violations)}}},
              {"top_class", {{"expected", top_expected}, {"present", top_present}}},
              {"comparison",
               {{"cells", cells}, {"mismatches", comparison.mismatches}, {"skipped", comparison.skipped}}},
              {"totals", totals_json},
              {"status", ok ? "ok" : "mismatch"}};

  std::ostringstream text;
  text << header_text(c) << "bound        " << c.bound << ", n <= " << c.n_max << "\n";
  if (!specialization.empty()) text << "oracle at    " << specialization.dump() << "\n";
  text << "\n" << std::left << std::setw(4) << "n" << std::setw(16) << "natural o/k" << std::setw(18)
       << "invariant o/k" << "quotient\n";
  for (std::size_t n = 0; n < totals.size(); ++n) {
    const auto& t = totals[n];
    text << std::setw(4) << n << std::setw(16) << (std::to_string(t[0]) + "/" + std::to_string(t[1]))
         << std::setw(18) << (std::to_string(t[2]) + "/" + std::to_string(t[3])) << t[4] << "\n";
  }
  text << "\ncells        " << comparison.cells.size() << " compared, " << comparison.mismatches << " mismatched, "
       << comparison.skipped << " skipped\n";
  text << "d^2 = 0      " << (d2.passed ? "pass" : "FAIL") << " (" << d2.elements_checked << " elements)\n";
  text << "dh + hd      " << (homotopy.passed ? "pass" : "FAIL") << " (" << homotopy.elements_checked
       << " elements)\n";
  text << "b^2 = 0      " << (b2.passed ? "pass" : "FAIL") << " (" << b2.cells_checked << " multidegrees)\n";
  if (top_expected) text << "top class    " << (top_present ? "present" : "MISSING") << "\n";
  text << mismatches.str();
  text << (ok ? "verified\n" : "verification FAILED\n");
  emit(c, doc, text.str(), out);
  return ok ? exit_ok : exit_mismatch;
}

}  // namespace

std::string automorphism_name(AutomorphismKind kind) {
  switch (kind) {
    case AutomorphismKind::canonical:
      return "canonical";
    case AutomorphismKind::identity:
      return "identity";
    case AutomorphismKind::explicit_p:
      return "explicit";
    case AutomorphismKind::solve_top:
      return "solve-top";
  }
  return "?";
}

std::string monomial_text(const MultiIndex& alpha) {
  std::string s;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] == 0) continue;
    if (!s.empty()) s += " ";
    s += "x" + std::to_string(i + 1);
    if (alpha[i] > 1) s += "^" + std::to_string(alpha[i]);
  }
  return s.empty() ? "1" : s;
}

std::string wedge_text(const ExteriorIndex& beta) {
  std::string s;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (!beta[i]) continue;
    if (!s.empty()) s += "∧";
    s += "x" + std::to_string(i + 1);
  }
  return s.empty() ? "1" : s;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App cli{"Twisted Hochschild homology of quantum hyperplanes", "qhh"};
  cli.require_subcommand(1);
  cli.fallthrough();

  Inputs in;
  std::string config_path;
  long n = 0;
  long bound = 0;
  long n_max = 0;
  std::string automorphism;
  std::string p_list;
  std::string alpha_list;
  std::string one_parameter;
  auto* n_opt = cli.add_option("--n", n, "number of generators N");
  cli.add_option("--q", in.pairs, "q_ij as i,j,value (1-based, repeatable)");
  cli.add_option("--config", config_path, "JSON config file; flags override its fields");
  auto* one_opt = cli.add_option("--one-parameter", one_parameter, "x_i x_j = q x_j x_i for i > j, q a symbol or rational");
  cli.add_flag("--symbolic", in.symbolic, "independent symbols for unspecified q_ij");
  cli.add_flag("--auto-primes", in.auto_primes, "evaluate symbols at distinct primes where numbers are needed");
  auto* kind_opt = cli.add_option("--automorphism", automorphism, "canonical | identity | explicit | solve-top")
                       ->check(CLI::IsMember({"canonical", "identity", "explicit", "solve-top"}));
  auto* p_opt = cli.add_option("--p", p_list, "comma-separated p_i for --automorphism explicit");
  auto* alpha_opt = cli.add_option("--alpha", alpha_list, "comma-separated α for --automorphism solve-top");
  auto* bound_opt = cli.add_option("--bound", bound, "total-degree bound (default 2N)");
  auto* nmax_opt = cli.add_option("--nmax", n_max, "highest homological degree (default N+1)");
  cli.add_option("--out", in.out_path, "write the JSON report here ('-' prints it instead of the table)");
  cli.add_flag("--allow-truncated", in.allow_truncated, "accept a C_sigma that is not certified complete");
  cli.add_flag("--expect-top", in.expect_top, "verify fails when the top class is absent");

  auto* homology = cli.add_subcommand("homology", "Betti numbers and generators");
  auto* verify = cli.add_subcommand("verify", "compare against the Hochschild complex");
  auto* csigma = cli.add_subcommand("csigma", "members of C_sigma up to the bound");
  auto* canonical = cli.add_subcommand("canonical", "p-vector of the automorphism");
  auto* generic = cli.add_subcommand("generic-check", "bounded genericity search");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    cli.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = cli.exit(e, out, err);
    return code == 0 ? exit_ok : exit_bad_config;
  }

  try {
    if (*n_opt) in.n = n;
    if (*one_opt) in.one_parameter = one_parameter;
    if (*bound_opt) in.bound = bound;
    if (*nmax_opt) in.n_max = n_max;
    if (*kind_opt) in.automorphism = automorphism;
    if (*p_opt) in.p = split(p_list, ',');
    if (*alpha_opt) {
      std::vector<long> alpha;
      for (const auto& a : split(alpha_list, ',')) alpha.push_back(parse_integer(a, "--alpha"));
      in.alpha = std::move(alpha);
    }
    if (!config_path.empty()) merge_config_file(config_path, in);
    const RunConfig config = build_config(in);

    if (homology->parsed()) return cmd_homology(config, out, err);
    if (verify->parsed()) return cmd_verify(config, out);
    if (csigma->parsed()) return cmd_csigma(config, out);
    if (canonical->parsed()) return cmd_canonical(config, out);
    if (generic->parsed()) return cmd_generic_check(config, out);
    return exit_bad_config;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return exit_bad_config;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_bad_config;
  }
}

}  // namespace qhh::app
