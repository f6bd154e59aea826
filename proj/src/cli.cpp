#include "galg/cli.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "galg/budget.hpp"

namespace galg {

const char* const galg_version = "0.1.0";

const std::vector<std::string>& commands() {
  static const std::vector<std::string> c = {"analyze", "cm", "gorenstein", "bigrade", "decompose", "probe-conjecture"};
  return c;
}

// ---------------------------------------------------------------- input format

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

struct Located {
  std::string text;
  std::size_t column;  // 1-based column of text in its line
};

/// Splits `rest` (starting at `column`) at commas.
std::vector<Located> split_commas(std::string_view rest, std::size_t column) {
  std::vector<Located> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= rest.size(); ++i) {
    if (i == rest.size() || rest[i] == ',') {
      auto piece = rest.substr(start, i - start);
      auto lead = piece.find_first_not_of(" \t");
      out.push_back({trim(piece), column + start + (lead == std::string_view::npos ? 0 : lead)});
      start = i + 1;
    }
  }
  return out;
}

/// Splits at whitespace and commas.
std::vector<std::string> split_words(std::string_view rest) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : rest) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

bool valid_name(const std::string& n) {
  if (n.empty() || !(std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_')) return false;
  return std::all_of(n.begin(), n.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; });
}

[[noreturn]] void fail_at(const std::string& source, std::size_t line, std::size_t column, const std::string& what) {
  throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what);
}

/// Re-raises a parser error with the column shifted into the file line.
[[noreturn]] void relocate(const InputError& e, const std::string& source, std::size_t line, std::size_t column) {
  static const std::regex col(R"(^column (\d+): (.*)$)");
  std::smatch m;
  const std::string msg = e.what();
  if (std::regex_match(msg, m, col)) fail_at(source, line, column + std::stoul(m[1]) - 1, m[2]);
  fail_at(source, line, column, msg);
}

}  // namespace

std::string normalize_field(std::string_view text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (t == "QQ" || t == "Q") return "QQ";
  static const std::regex gf(R"(^GF\(?(\d+)\)?$)");
  std::smatch m;
  if (!std::regex_match(t, m, gf)) throw InputError("unknown field '" + std::string(text) + "' (use QQ or GF(p))");
  const auto p = std::stoull(m[1]);
  if (p >= (1ULL << 31)) throw InputError("prime modulus must be below 2^31: " + m[1].str());
  if (!is_prime(p)) throw InputError("modulus is not prime: " + m[1].str());
  return "GF(" + std::to_string(p) + ")";
}

AlgebraSpec parse_spec(std::string_view text, const std::string& source) {
  AlgebraSpec spec;
  std::vector<std::pair<Located, std::size_t>> exprs;  // with line numbers, validated at the end
  std::size_t names_line = 0, weights_line = 0, vars_line = 0;
  bool field_seen = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto hash = raw.find('#');
    std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    auto kw_end = line.find_first_of(" \t", start);
    const std::string kw = line.substr(start, kw_end == std::string::npos ? std::string::npos : kw_end - start);
    const std::size_t rest_at = kw_end == std::string::npos ? line.size() : kw_end;
    const std::string rest = line.substr(rest_at);
    const std::size_t rest_col = rest_at + 1;
    auto need_rest = [&] {
      if (trim(rest).empty()) fail_at(source, line_no, start + 1, "'" + kw + "' needs an argument");
    };
    if (kw == "name") {
      spec.name = trim(rest);
    } else if (kw == "field") {
      need_rest();
      if (field_seen) fail_at(source, line_no, start + 1, "field declared twice");
      field_seen = true;
      try {
        spec.field = normalize_field(rest);
      } catch (const InputError& e) {
        fail_at(source, line_no, rest_col, e.what());
      }
    } else if (kw == "vars") {
      need_rest();
      if (!spec.vars.empty()) fail_at(source, line_no, start + 1, "vars declared twice");
      spec.vars = split_words(rest);
      vars_line = line_no;
      for (const auto& v : spec.vars)
        if (!valid_name(v)) fail_at(source, line_no, rest_col, "bad variable name '" + v + "'");
    } else if (kw == "weights") {
      need_rest();
      weights_line = line_no;
      for (const auto& w : split_words(rest)) {
        int v = 0;
        try {
          std::size_t used = 0;
          v = std::stoi(w, &used);
          if (used != w.size()) throw std::invalid_argument(w);
        } catch (const std::exception&) {
          fail_at(source, line_no, rest_col, "bad weight '" + w + "'");
        }
        if (v <= 0) fail_at(source, line_no, rest_col, "weights must be positive");
        spec.weights.push_back(v);
      }
    } else if (kw == "order") {
      const auto o = trim(rest);
      if (o != "grevlex" && o != "lex") fail_at(source, line_no, rest_col, "order must be grevlex or lex");
      spec.order = o == "grevlex" ? "" : o;
    } else if (kw == "ideal" || kw == "subring") {
      for (auto& piece : split_commas(rest, rest_col)) {
        if (piece.text.empty()) {
          if (trim(rest).empty()) break;  // "ideal" alone: the zero ideal
          fail_at(source, line_no, piece.column, "empty generator");
        }
        (kw == "ideal" ? spec.ideal : spec.subring).push_back(piece.text);
        exprs.push_back({piece, line_no});
      }
      if (kw == "subring" && trim(rest).empty()) fail_at(source, line_no, start + 1, "subring needs monomials");
    } else if (kw == "names") {
      need_rest();
      names_line = line_no;
      spec.names = split_words(rest);
      for (const auto& v : spec.names)
        if (!valid_name(v)) fail_at(source, line_no, rest_col, "bad variable name '" + v + "'");
    } else if (kw == "assume") {
      const auto what = trim(rest);
      if (what == "connected")
        spec.assume_connected = true;
      else if (what == "generically-gorenstein")
        spec.assume_generically_gorenstein = true;
      else
        fail_at(source, line_no, rest_col, "unknown assumption '" + what + "'");
    } else {
      fail_at(source, line_no, start + 1, "unknown keyword '" + kw + "'");
    }
  }
  if (spec.vars.empty()) fail_at(source, line_no + 1, 1, "missing 'vars' declaration");
  if (!spec.ideal.empty() && !spec.subring.empty())
    fail_at(source, line_no + 1, 1, "ideal and subring forms are mutually exclusive");
  if (!spec.weights.empty() && spec.weights.size() != spec.vars.size())
    fail_at(source, weights_line, 1, "weights count differs from the variable count");
  if (!spec.weights.empty() && std::all_of(spec.weights.begin(), spec.weights.end(), [](int w) { return w == 1; }))
    spec.weights.clear();
  if (!spec.names.empty() && spec.subring.empty()) fail_at(source, names_line, 1, "'names' only applies to a subring");
  if (!spec.names.empty() && spec.names.size() != spec.subring.size())
    fail_at(source, names_line, 1, "need one name per subring monomial");
  if (!spec.subring.empty() && !spec.weights.empty())
    fail_at(source, weights_line, 1, "weights are derived from the monomials in the subring form");
  {
    std::vector<std::string> sorted = spec.vars;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail_at(source, vars_line, 1, "duplicate variable name");
  }

  // every expression must parse over the declared variables
  auto ring = make_poly_ring(RationalField{}, spec.vars);
  for (const auto& [piece, at] : exprs) {
    Polynomial<RationalField> f(ring);
    try {
      f = parse_polynomial(ring, piece.text);
    } catch (const InputError& e) {
      relocate(e, source, at, piece.column);
    }
    if (!spec.subring.empty() && (f.size() != 1 || f.terms()[0].coeff != 1 || f.terms()[0].mono.is_one()))
      fail_at(source, at, piece.column, "subring generators must be nonconstant monomials with coefficient 1");
  }
  return spec;
}

AlgebraSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str(), path);
}

std::string format_spec(const AlgebraSpec& spec) {
  std::ostringstream out;
  auto join = [](const std::vector<std::string>& v, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
  };
  if (!spec.name.empty()) out << "name " << spec.name << "\n";
  out << "field " << spec.field << "\n";
  out << "vars " << join(spec.vars, " ") << "\n";
  if (!spec.weights.empty()) {
    std::vector<std::string> w;
    for (int x : spec.weights) w.push_back(std::to_string(x));
    out << "weights " << join(w, " ") << "\n";
  }
  if (!spec.order.empty()) out << "order " << spec.order << "\n";
  if (!spec.subring.empty()) {
    out << "subring " << join(spec.subring, ", ") << "\n";
    if (!spec.names.empty()) out << "names " << join(spec.names, " ") << "\n";
  } else if (spec.ideal.empty()) {
    out << "ideal\n";
  }
  for (const auto& g : spec.ideal) out << "ideal " << g << "\n";
  if (spec.assume_connected) out << "assume connected\n";
  if (spec.assume_generically_gorenstein) out << "assume generically-gorenstein\n";
  return out.str();
}

namespace {

template <Field F>
QRing<F> with_order(const QRing<F>& s, OrderKind kind) {
  const auto& a = s->ambient();
  if (a->order().kind == kind) return s;
  auto ring = make_poly_ring(a->field(), a->names(), MonomialOrder{kind, a->weights()});
  std::vector<std::size_t> same(a->num_vars());
  for (std::size_t i = 0; i < same.size(); ++i) same[i] = i;
  std::vector<Polynomial<F>> gens;
  for (const auto& g : s->basis()) gens.push_back(embed(g, ring, same));
  return QuotientRing<F>::make(ring, gens, s->toric_domain());
}

}  // namespace

template <Field F>
QRing<F> build_ring(const AlgebraSpec& spec, const F& field) {
  const bool lex = spec.order == "lex";
  if (!spec.subring.empty()) {
    auto amb = make_poly_ring(field, spec.vars);
    std::vector<Monomial> monos;
    for (const auto& m : spec.subring) monos.push_back(parse_polynomial(amb, m).terms().at(0).mono);
    auto names = spec.names;
    if (names.empty())
      for (std::size_t i = 0; i < monos.size(); ++i) names.push_back("t" + std::to_string(i + 1));
    auto s = kernel_of_monomial_map(field, monos, names);
    return lex ? with_order(s, OrderKind::lex) : s;
  }
  MonomialOrder order;
  order.weights = spec.weights;
  const bool unit = std::all_of(order.weights.begin(), order.weights.end(), [](int w) { return w == 1; });
  order.kind = lex ? OrderKind::lex : unit ? OrderKind::grevlex : OrderKind::weighted_grevlex;
  auto ring = make_poly_ring(field, spec.vars, order);
  std::vector<Polynomial<F>> gens;
  for (const auto& g : spec.ideal) gens.push_back(parse_polynomial(ring, g));
  return QuotientRing<F>::make(ring, gens);
}

template <Field F>
AlgebraSpec spec_of_ring(const QRing<F>& s, const std::string& name) {
  AlgebraSpec spec;
  spec.name = name;
  spec.field = s->field().name();
  spec.vars = s->ambient()->names();
  if (!s->ambient()->has_unit_weights()) spec.weights = s->weights();
  if (s->ambient()->order().kind == OrderKind::lex) spec.order = "lex";
  for (const auto& g : s->basis()) spec.ideal.push_back(g.to_string());
  return spec;
}

// ---------------------------------------------------------------- reports

namespace {

using nlohmann::json;

json verdict_json(Verdict v) {
  if (v == Verdict::inconclusive) return nullptr;
  return v == Verdict::yes;
}

template <Field F>
json polys(const std::vector<Polynomial<F>>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(p.to_string());
  return a;
}

template <Field F>
json presentation(const PresentedModule<F>& m) {
  json rel = json::array();
  for (const auto& col : m.relations) rel.push_back(polys(col));
  return {{"generators", m.generators}, {"degrees", m.degrees}, {"relations", rel}};
}

template <Field F>
json entries_json(const ExtTable<F>& t, bool with_presentation) {
  json a = json::array();
  for (const auto& e : t.entries) {
    json j = {{"n", e.n}, {"is_zero", e.is_zero}, {"min_gens", e.min_gens}, {"hilbert", e.hilbert},
              {"annihilator", polys(e.annihilator)}};
    if (with_presentation && !e.is_zero) j["presentation"] = presentation(e.module);
    a.push_back(std::move(j));
  }
  return a;
}

template <Field F>
json certificate_json(const InvertibilityCertificate<F>& c) {
  return {{"invertible", c.verdict},
          {"fitt0", polys(c.fitt0)},
          {"fitt1", polys(c.fitt1)},
          {"one_coefficients", polys(c.one_coefficients)},
          {"reason", c.reason}};
}

json window_json(const ProbeWindow& w) {
  return {{"range", {w.lo, w.hi}}, {"nonzero", w.nonzero}, {"prediction", w.prediction}};
}

template <Field F>
json payload(const AnalysisReport<F>& a, const std::string& command) {
  const auto& r = a.inv;
  json j;
  j["dim"] = r.dim;
  j["grade"] = r.grade;
  j["pd"] = r.pd;
  j["depth"] = r.depth ? json(*r.depth) : json(nullptr);
  j["d"] = r.d;
  j["homogeneous"] = r.homogeneous;
  j["connected"] = r.connected;
  if (!r.betti.empty()) {
    json b = json::array();
    for (const auto& row : r.betti) {
      json rj = json::object();
      for (const auto& [deg, count] : row) rj[std::to_string(deg)] = count;
      b.push_back(rj);
    }
    j["betti"] = b;
  }
  j["ext_p"] = entries_json(r.ext_p, false);
  j["cm"] = {{"verdict", verdict_json(r.cm)},
             {"window", {r.window_lo, r.window_hi}},
             {"nonzero_in_window", r.window_nonzero},
             {"reason", r.cm_reason}};
  j["gorenstein"] = {{"verdict", verdict_json(r.gorenstein)},
                     {"certificate", certificate_json(r.gorenstein_certificate)},
                     {"reason", r.gorenstein_reason}};
  j["t"] = a.t ? json(*a.t) : json(nullptr);
  if (a.t) j["t_method"] = a.t_method;

  j["hochschild"] = nullptr;
  if (const auto* table = a.hochschild()) {
    json h;
    h["range"] = {table->lo, table->hi};
    h["complete"] = table->complete;
    h["entries"] = entries_json(*table, command == "analyze" || command == "decompose");
    h["bigrade"] = a.bigrade ? json(*a.bigrade) : json(nullptr);
    h["path"] = a.path_a && a.path_b ? "both" : a.path_a ? "A" : "B";
    if (a.path_a && a.path_b) h["paths_agree"] = true;
    if (a.hochschild_invertible)
      h["invertible"] = {{"verdict", verdict_json(a.hochschild_invertible->verdict)},
                         {"reason", a.hochschild_invertible->reason},
                         {"nonzero_degrees", a.hochschild_invertible->degrees}};
    j["hochschild"] = h;
  }
  j["factorization"] = nullptr;
  if (a.factorization) {
    json comps = json::array();
    for (const auto& c : a.factorization->components)
      comps.push_back({{"ideal_gens", polys(c.ideal)},
                       {"n_i", c.n},
                       {"t_i", c.t},
                       {"t_method", c.t_method},
                       {"idempotent", c.idempotent.to_string()}});
    j["factorization"] = {{"components", comps}, {"certified", a.factorization->certified}};
  }
  j["probe"] = nullptr;
  if (a.probe) {
    const auto& p = *a.probe;
    j["probe"] = {{"t", p.t},
                  {"t_method", p.t_method},
                  {"window_literal", window_json(p.literal)},
                  {"window_theorem", window_json(p.theorem)},
                  {"prediction", p.prediction},
                  {"definitive", verdict_json(p.definitive)},
                  {"flag", p.flag}};
    if (p.flag == "COUNTEREXAMPLE CANDIDATE" || p.flag == "ASSERTION VIOLATED")
      j["probe"]["certificate"] = {{"hochschild_via_canonical_module", entries_json(p.table, true)},
                                   {"ext_p", entries_json(r.ext_p, true)},
                                   {"gorenstein", certificate_json(r.gorenstein_certificate)},
                                   {"gorenstein_reason", r.gorenstein_reason}};
  }
  j["checks"] = a.checks;
  j["diagnostics"] = a.diagnostics;
  if (a.resource_limit) j["resource_limit"] = *a.resource_limit;
  return j;
}

AnalyzeOptions options_for(const std::string& command, const AlgebraSpec& spec, const RunOptions& o) {
  AnalyzeOptions a;
  a.base.assume_connected = o.assume_connected || spec.assume_connected;
  a.base.assume_generically_gorenstein = o.assume_generically_gorenstein || spec.assume_generically_gorenstein;
  a.path = o.path;
  a.max_hochschild = o.max_hochschild;
  if (command == "cm" || command == "gorenstein") {
    a.hochschild = a.factorization = a.probe = false;
  } else if (command == "bigrade") {
    a.factorization = a.probe = false;
    a.stop_at_first_nonzero = o.path == "A";
  } else if (command == "decompose") {
    a.probe = false;
    a.require_factorization = true;
  } else if (command == "probe-conjecture") {
    a.hochschild = a.factorization = false;
    a.require_probe = true;
  }
  return a;
}

template <Field F>
json run_typed(const std::string& command, const AlgebraSpec& spec, const F& field, const RunOptions& o,
               std::vector<std::string>& diagnostics) {
  auto s = build_ring(spec, field);
  auto a = analyze(s, options_for(command, spec, o));
  a.diagnostics.insert(a.diagnostics.begin(), diagnostics.begin(), diagnostics.end());
  return payload(a, command);
}

std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream out;
  out << std::hex;
  for (unsigned int i = 0; i < len; ++i) out << (md[i] < 16 ? "0" : "") << static_cast<int>(md[i]);
  return out.str();
}

const char* payload_keys[] = {"dim", "grade", "pd", "depth", "cm", "gorenstein", "hochschild", "factorization", "probe"};

}  // namespace

RunResult run_command(const std::string& command, std::string_view input_text, const std::string& input_name,
                      const RunOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  RunResult res;
  json& rep = res.report;
  rep["command"] = command;
  rep["input"] = input_name;
  for (const char* k : payload_keys) rep[k] = nullptr;
  rep["diagnostics"] = json::array();
  json envelope = {{"version", galg_version}, {"input_hash", sha256_hex(input_text)}};
  auto finish = [&] {
    envelope["wall_clock_seconds"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rep["envelope"] = envelope;
    return res;
  };
  auto fail = [&](int code, const std::string& what) {
    res.exit_code = code;
    res.error = what;
    rep["error"] = what;
    rep["diagnostics"].push_back(what);
    return finish();
  };

  if (std::find(commands().begin(), commands().end(), command) == commands().end())
    return fail(exit_input, "unknown command '" + command + "'");
  if (opts.path != "A" && opts.path != "B" && opts.path != "both")
    return fail(exit_input, "--path must be A, B or both");
  AlgebraSpec spec;
  try {
    spec = parse_spec(input_text, input_name);
    if (opts.field) spec.field = normalize_field(*opts.field);
    if (opts.order) {
      if (*opts.order != "grevlex" && *opts.order != "lex") throw InputError("--order must be grevlex or lex");
      spec.order = *opts.order == "lex" ? "lex" : "";
    }
  } catch (const Error& e) {
    return fail(exit_input, e.what());
  }
  rep["field"] = spec.field;
  const bool rational = spec.field == "QQ";
  envelope["field"] = spec.field;
  envelope["mode"] = rational ? "rational" : "modular — char-p certified only";
  std::vector<std::string> diags;
  if (rational) diags.push_back("warning: QQ mode uses exact rational arithmetic and may be slow");

  try {
    BudgetScope budget(Budget{opts.max_seconds, opts.max_basis_size});
    json body;
    if (rational) {
      body = run_typed(command, spec, RationalField{}, opts, diags);
    } else {
      const auto p = static_cast<std::uint32_t>(std::stoul(spec.field.substr(3)));
      body = run_typed(command, spec, PrimeField(p), opts, diags);
    }
    for (auto& [k, v] : body.items()) rep[k] = v;
    if (body.contains("resource_limit")) {
      // partial report: invariants are final, later stages inconclusive
      res.exit_code = exit_resource;
      res.error = body["resource_limit"].get<std::string>();
      rep["inconclusive"] = true;
    }
  } catch (const ResourceLimit& e) {
    res.exit_code = exit_resource;
    res.error = e.what();
    rep["diagnostics"].push_back(std::string("resource limit: ") + e.what());
    rep["inconclusive"] = true;
    return finish();
  } catch (const InternalError& e) {
    return fail(exit_internal, std::string("internal consistency failure: ") + e.what());
  } catch (const Error& e) {
    return fail(exit_input, e.what());
  }
  return finish();
}

RunResult run_file(const std::string& command, const std::string& path, const RunOptions& opts) {
  std::ifstream in(path);
  if (!in) {
    RunResult r;
    r.exit_code = exit_input;
    r.error = "cannot open " + path;
    r.report = {{"command", command}, {"input", path}, {"error", r.error}, {"diagnostics", {r.error}}};
    return r;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return run_command(command, ss.str(), path, opts);
}

RunResult corpus_run(const std::string& directory, const std::string& command, const RunOptions& opts) {
  namespace fs = std::filesystem;
  RunResult res;
  if (!fs::is_directory(directory)) {
    res.exit_code = exit_input;
    res.error = "not a directory: " + directory;
    res.report = {{"error", res.error}};
    return res;
  }
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(directory))
    if (e.is_regular_file() && e.path().extension() == ".alg") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  json rows = json::array();
  std::size_t ok = 0, input_errors = 0, limits = 0, violations = 0;
  for (const auto& f : files) {
    auto r = run_file(command, f.string(), opts);
    json row = {{"file", f.filename().string()}, {"exit_code", r.exit_code}};
    switch (r.exit_code) {
      case exit_ok:
        ++ok;
        break;
      case exit_resource:
        ++limits;
        break;
      case exit_internal:
        ++violations;
        break;
      default:
        ++input_errors;
    }
    if (!r.error.empty()) row["error"] = r.error;
    for (const char* k : {"dim", "grade", "pd", "depth"}) row[k] = r.report.value(k, json(nullptr));
    auto verdict = [&](const char* k) {
      const auto& v = r.report.value(k, json(nullptr));
      return v.is_object() ? v.value("verdict", json(nullptr)) : json(nullptr);
    };
    row["cm"] = verdict("cm");
    row["gorenstein"] = verdict("gorenstein");
    const auto& h = r.report.value("hochschild", json(nullptr));
    row["bigrade"] = h.is_object() ? h.value("bigrade", json(nullptr)) : json(nullptr);
    const auto& p = r.report.value("probe", json(nullptr));
    row["probe_flag"] = p.is_object() ? p.value("flag", json(nullptr)) : json(nullptr);
    row["checks"] = r.report.value("checks", json::array()).size();
    rows.push_back(std::move(row));
  }
  res.report = {{"command", command},
                {"directory", directory},
                {"rows", rows},
                {"summary",
                 {{"files", files.size()},
                  {"ok", ok},
                  {"input_errors", input_errors},
                  {"resource_limits", limits},
                  {"consistency_violations", violations},
                  {"invariant_suite", violations == 0 ? "pass" : "fail"}}}};
  res.exit_code = violations == 0 ? exit_ok : exit_internal;
  return res;
}

std::string render_text(const nlohmann::json& r) {
  std::ostringstream out;
  auto str = [](const json& v) {
    if (v.is_null()) return std::string("-");
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
  };
  if (r.contains("rows")) {
    out << "file                              exit  dim grade  pd depth  cm     gor    bigrade probe\n";
    for (const auto& row : r["rows"]) {
      char buf[256];
      std::snprintf(buf, sizeof buf, "%-33s %4d %4s %5s %3s %5s  %-6s %-6s %7s %s\n",
                    row["file"].get<std::string>().c_str(), row["exit_code"].get<int>(), str(row["dim"]).c_str(),
                    str(row["grade"]).c_str(), str(row["pd"]).c_str(), str(row["depth"]).c_str(),
                    str(row["cm"]).c_str(), str(row["gorenstein"]).c_str(), str(row["bigrade"]).c_str(),
                    str(row["probe_flag"]).c_str());
      out << buf;
      if (row.contains("error")) out << "    error: " << row["error"].get<std::string>() << "\n";
    }
    const auto& s = r["summary"];
    out << "files " << s["files"] << ", ok " << s["ok"] << ", input errors " << s["input_errors"]
        << ", resource limits " << s["resource_limits"] << ", consistency violations "
        << s["consistency_violations"] << "; invariant suite " << str(s["invariant_suite"]) << "\n";
    return out.str();
  }
  out << "input: " << str(r.value("input", json(nullptr))) << "\n";
  if (r.contains("envelope") && r["envelope"].contains("mode"))
    out << "field: " << str(r["envelope"]["field"]) << " (" << str(r["envelope"]["mode"]) << ")\n";
  if (r.contains("error")) out << "error: " << str(r["error"]) << "\n";
  if (!r.value("dim", json(nullptr)).is_null()) {
    out << "dim " << r["dim"] << ", grade " << r["grade"] << ", pd " << r["pd"] << ", depth " << str(r["depth"])
        << ", d " << r["d"] << "\n";
    out << "cohen-macaulay: " << str(r["cm"]["verdict"]) << " (" << str(r["cm"]["reason"]) << ")\n";
    out << "gorenstein: " << str(r["gorenstein"]["verdict"]) << " (" << str(r["gorenstein"]["reason"]) << ")\n";
  }
  if (r.contains("hochschild") && r["hochschild"].is_object()) {
    const auto& h = r["hochschild"];
    out << "hochschild (path " << str(h["path"]) << "):\n";
    for (const auto& e : h["entries"]) {
      out << "  Ext^" << e["n"] << ": ";
      if (e["is_zero"].get<bool>()) {
        out << "0\n";
        continue;
      }
      out << e["min_gens"] << " generators, hilbert " << e["hilbert"].dump() << ", annihilator "
          << e["annihilator"].dump() << "\n";
    }
    out << "bigrade: " << str(h["bigrade"]) << "\n";
    if (h.contains("invertible"))
      out << "invertible: " << str(h["invertible"]["verdict"]) << " (" << str(h["invertible"]["reason"]) << ")\n";
  }
  if (r.contains("factorization") && r["factorization"].is_object()) {
    out << "factorization (certified " << str(r["factorization"]["certified"]) << "):\n";
    for (const auto& c : r["factorization"]["components"])
      out << "  S/" << c["ideal_gens"].dump() << ": n = " << c["n_i"] << ", t = " << c["t_i"] << "\n";
  }
  if (r.contains("probe") && r["probe"].is_object()) {
    const auto& p = r["probe"];
    out << "probe: t = " << p["t"] << ", literal window " << p["window_literal"]["range"].dump() << " -> "
        << str(p["window_literal"]["prediction"]) << ", theorem window " << p["window_theorem"]["range"].dump()
        << " -> " << str(p["window_theorem"]["prediction"]) << ", definitive " << str(p["definitive"]) << ", flag "
        << str(p["flag"]) << "\n";
  }
  if (r.contains("diagnostics"))
    for (const auto& d : r["diagnostics"])
      if (!r.contains("error") || d != r["error"]) out << "note: " << str(d) << "\n";
  return out.str();
}

#define GALG_INSTANTIATE(F)                                              \
  template QRing<F> build_ring(const AlgebraSpec&, const F&);            \
  template AlgebraSpec spec_of_ring(const QRing<F>&, const std::string&);

GALG_INSTANTIATE(PrimeField)
GALG_INSTANTIATE(RationalField)

}  // namespace galg
