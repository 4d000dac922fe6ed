#include "ncsparse/io.hpp"

#include "ncsparse/parse.hpp"

#include <json.hpp>

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace ncsparse {

namespace {

using Json = nlohmann::ordered_json;

struct Field {
  std::string_view value;
  std::size_t line;
  std::size_t column;  // of the first value character
};

std::string_view trim_left(std::string_view s, std::size_t& skipped) {
  skipped = 0;
  while (skipped < s.size() && std::isspace(static_cast<unsigned char>(s[skipped]))) ++skipped;
  return s.substr(skipped);
}

std::string_view trim_right(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(const Field& f, const std::string& msg, std::size_t offset = 0) {
  throw InputError(std::to_string(f.line) + ":" + std::to_string(f.column + offset) + ": " + msg, f.line,
                   f.column + offset);
}

template <typename T>
T parse_number(const Field& f, const char* what) {
  T v{};
  auto [ptr, ec] = std::from_chars(f.value.data(), f.value.data() + f.value.size(), v);
  if (ec != std::errc() || ptr != f.value.data() + f.value.size()) fail(f, std::string("invalid ") + what);
  return v;
}

double parse_seconds(const Field& f) {
  std::string s(f.value);
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    fail(f, "invalid time budget");
  }
  if (used != s.size() || v < 0) fail(f, "invalid time budget");
  return v;
}

NcPoly parse_poly_field(const Field& f, const VariableTable& vars) {
  try {
    return parse_poly(f.value, vars);
  } catch (const SyntaxError& e) {
    fail(f, e.what(), e.offset());
  } catch (const std::invalid_argument& e) {
    fail(f, e.what());
  }
}

Json monomial_json(const ModuleTerm& t, const VariableTable& vars) {
  Json j;
  j["coeff"] = to_string(t.coeff);
  j["left"] = vars.format(t.monomial.left);
  j["gen"] = t.monomial.generator + 1;
  j["right"] = vars.format(t.monomial.right);
  return j;
}

}  // namespace

ProblemFile parse_problem(std::string_view text) {
  std::optional<Field> vars_f, claim_f, bound_f, alpha_f;
  std::vector<Field> gen_f;
  ProblemFile pf;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::size_t lead = 0;
    std::string_view body = trim_left(line, lead);
    if (trim_right(body).empty()) {
      if (end == text.size()) break;
      continue;
    }
    std::size_t colon = body.find(':');
    if (colon == std::string_view::npos)
      throw InputError(std::to_string(line_no) + ":" + std::to_string(lead + 1) + ": expected 'key: value'",
                       line_no, lead + 1);
    std::string_view key = trim_right(body.substr(0, colon));
    std::size_t vlead = 0;
    std::string_view value = trim_right(trim_left(body.substr(colon + 1), vlead));
    Field f{value, line_no, lead + colon + 1 + vlead + 1};
    if (key == "vars") {
      vars_f = f;
    } else if (key == "gen") {
      gen_f.push_back(f);
    } else if (key == "claim") {
      claim_f = f;
    } else if (key == "bound") {
      bound_f = f;
    } else if (key == "alpha") {
      alpha_f = f;
    } else if (key == "order") {
      if (value != "deglex") fail(f, "unsupported monomial order '" + std::string(value) + "'");
    } else if (key == "modorder") {
      if (value != "dopot") fail(f, "unsupported module order '" + std::string(value) + "'");
    } else if (key == "weights") {
      if (value == "uniform") pf.weights = WeightMode::Uniform;
      else if (value == "degree") pf.weights = WeightMode::Degree;
      else fail(f, "weights must be 'uniform' or 'degree'");
    } else if (key == "prune") {
      if (value == "on" || value == "true") pf.prune = true;
      else if (value == "off" || value == "false") pf.prune = false;
      else fail(f, "prune must be 'on' or 'off'");
    } else if (key == "seed") {
      pf.seed = parse_number<std::uint64_t>(f, "seed");
    } else if (key == "time_budget") {
      pf.time_budget = parse_seconds(f);
    } else {
      throw InputError(std::to_string(line_no) + ":" + std::to_string(lead + 1) + ": unknown key '" +
                           std::string(key) + "'",
                       line_no, lead + 1);
    }
    if (end == text.size()) break;
  }
  if (!vars_f) throw InputError("1:1: missing 'vars'", 1, 1);
  if (gen_f.empty()) throw InputError("1:1: missing 'gen'", 1, 1);
  if (!claim_f) throw InputError("1:1: missing 'claim'", 1, 1);
  if (!bound_f) throw InputError("1:1: missing 'bound'", 1, 1);

  std::vector<std::string> names;
  {
    std::string_view v = vars_f->value;
    std::size_t offset = 0;
    while (true) {
      std::size_t comma = v.find(',', offset);
      std::size_t lead = 0;
      std::string_view name = trim_right(trim_left(v.substr(offset, comma == std::string_view::npos ? comma : comma - offset), lead));
      if (name.empty()) fail(*vars_f, "empty variable name", offset);
      bool ok = std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_';
      for (char c : name) ok = ok && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
      if (!ok) fail(*vars_f, "invalid variable name '" + std::string(name) + "'", offset + lead);
      names.emplace_back(name);
      if (comma == std::string_view::npos) break;
      offset = comma + 1;
    }
  }
  VariableTable vars;
  try {
    vars = VariableTable(names);
  } catch (const std::invalid_argument& e) {
    fail(*vars_f, e.what());
  }
  std::vector<NcPoly> gens;
  for (const auto& g : gen_f) {
    gens.push_back(parse_poly_field(g, vars));
    if (gens.back().is_zero()) fail(g, "zero generator");
  }
  pf.system = GeneratorSystem(vars, std::move(gens));
  pf.claim = parse_poly_field(*claim_f, vars);
  pf.bound = parse_number<int>(*bound_f, "bound");
  if (pf.bound < 1) fail(*bound_f, "bound must be at least 1");
  if (alpha_f) {
    try {
      pf.alpha = parse_element(alpha_f->value, pf.system);
    } catch (const std::invalid_argument& e) {
      fail(*alpha_f, e.what());
    }
  }
  return pf;
}

ProblemFile load_problem(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

std::string certificate_json(const SparseCertificate& cert, const GeneratorSystem& sys) {
  const VariableTable& vars = sys.vars();
  Json j;
  j["vars"] = vars.names();
  j["claim"] = format_poly(cert.claim, vars);
  Json gens = Json::array();
  for (const auto& g : sys.gens()) gens.push_back(format_poly(g, vars));
  j["generators"] = gens;
  if (cert.bound.is_degree()) {
    j["bound"] = Json{{"degree", cert.bound.degree_value()}};
  } else {
    j["bound"] = Json{{"monomial", format_monomial(*cert.bound.sigma(), sys)}};
  }
  Json rep = Json::array();
  for (const auto& t : cert.representation.terms()) rep.push_back(monomial_json(t, vars));
  j["representation"] = rep;
  j["l0"] = cert.l0_weight;
  j["l1"] = to_string(cert.l1_weight);
  j["l0_optimal_up_to_bound"] = cert.l0_optimal_up_to_bound;
  const CertificateStats& s = cert.stats;
  j["stats"] = Json{{"gb_size", s.gb_size},
                    {"syzygy_basis_size", s.syzygy_basis_size},
                    {"relevant_syzygies", s.relevant_syzygies},
                    {"basis_before_prune", s.basis_before_prune},
                    {"syzygies_after_prune", s.syzygies_after_prune},
                    {"basis_after_prune", s.basis_after_prune},
                    {"rows", s.rows},
                    {"cols", s.cols},
                    {"nonzeros", s.nonzeros},
                    {"lp_pivots", s.lp_pivots},
                    {"objective", to_string(s.objective)},
                    {"initial_l0", s.initial_l0},
                    {"initial_l1", to_string(s.initial_l1)},
                    {"pure_difference_binomials", cert.tu_structural}};
  return j.dump(2) + "\n";
}

VerifyResult verify_certificate_json(std::string_view json_text) {
  VerifyResult r;
  try {
    Json j = Json::parse(json_text);
    VariableTable vars(j.at("vars").get<std::vector<std::string>>());
    std::vector<NcPoly> gens;
    for (const auto& g : j.at("generators")) gens.push_back(parse_poly(g.get<std::string>(), vars));
    GeneratorSystem sys(vars, std::move(gens));
    NcPoly claim = parse_poly(j.at("claim").get<std::string>(), vars);
    std::vector<ModuleTerm> terms;
    for (const auto& t : j.at("representation")) {
      auto gen = t.at("gen").get<long>();
      if (gen < 1 || static_cast<std::size_t>(gen) > sys.size()) {
        r.reason = "generator index out of range";
        return r;
      }
      terms.push_back({sys.monomial(vars.parse_word(t.at("left").get<std::string>()),
                                    static_cast<std::uint32_t>(gen - 1),
                                    vars.parse_word(t.at("right").get<std::string>())),
                       parse_rational(t.at("coeff").get<std::string>())});
    }
    ModuleElement rep = ModuleElement::from_terms(terms);
    if (rep.size() != terms.size()) {
      r.reason = "representation has repeated or zero terms";
      return r;
    }
    if (!(expand(rep, sys) == claim)) {
      r.reason = "representation does not expand to the claim";
      return r;
    }
    if (j.at("l0").get<std::size_t>() != rep.l0()) {
      r.reason = "stored l0 weight does not match the representation";
      return r;
    }
    if (parse_rational(j.at("l1").get<std::string>()) != rep.l1()) {
      r.reason = "stored l1 weight does not match the representation";
      return r;
    }
    const Json& b = j.at("bound");
    SignatureBound bound = b.contains("degree") ? SignatureBound::degree(b.at("degree").get<int>())
                                                : SignatureBound::explicit_monomial(
                                                      parse_monomial(b.at("monomial").get<std::string>(), sys));
    if (!rep.is_zero() && !bound.admits(rep.signature())) {
      r.reason = "representation signature is not below the bound";
      return r;
    }
    r.ok = true;
  } catch (const std::exception& e) {
    r.reason = std::string("malformed certificate: ") + e.what();
  }
  return r;
}

}  // namespace ncsparse
