#include "moorekit/cli.hpp"

#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "moorekit/acceptance.hpp"
#include "moorekit/document.hpp"
#include "moorekit/torsion.hpp"

namespace moorekit {

namespace {

std::string scalar_text(const json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

// Indentation-based plain rendering; key order is nlohmann's (lexicographic),
// so text output is as deterministic as the JSON it mirrors.
void render_text(std::ostream& out, const json& j, int indent) {
  std::string pad(indent, ' ');
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const json& v = it.value();
      if (v.is_object() || v.is_array()) {
        if (v.empty()) {
          out << pad << it.key() << ": " << (v.is_object() ? "{}" : "[]") << "\n";
        } else {
          out << pad << it.key() << ":\n";
          render_text(out, v, indent + 2);
        }
      } else {
        out << pad << it.key() << ": " << scalar_text(v) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_object() || v.is_array()) {
        out << pad << "-\n";
        render_text(out, v, indent + 2);
      } else {
        out << pad << "- " << scalar_text(v) << "\n";
      }
    }
  } else {
    out << pad << scalar_text(j) << "\n";
  }
}

void emit(std::ostream& out, const json& payload, const std::string& format) {
  if (format == "json") out << payload.dump(2) << "\n";
  else render_text(out, payload, 0);
}

void emit_error(std::ostream& err, const std::string& code, const std::string& message,
                const json& witness) {
  err << json{{"error", {{"code", code}, {"message", message}, {"witness", witness}}}}
             .dump(2)
      << "\n";
}

int exit_code_for(const std::string& code) {
  static const std::set<std::string> usage{"ParseError",        "FileNotFound",
                                           "DocumentInvalid",   "UnknownName",
                                           "CircularReference", "InstanceMismatch",
                                           "UsageError"};
  return usage.count(code) ? 2 : 1;
}

std::pair<TheoryId, TheoryId> parse_theory_pair(const std::string& spec) {
  auto comma = spec.find(',');
  if (comma == std::string::npos)
    fail("UsageError", "expected two comma-separated theories", {{"value", spec}});
  return {parse_theory_spec(spec.substr(0, comma)),
          parse_theory_spec(spec.substr(comma + 1))};
}

ETorsionSpec parse_e_torsion_spec(const std::string& spec) {
  const std::string prefix = "normal-image:";
  if (spec.rfind(prefix, 0) == 0) {
    const std::string digits = spec.substr(prefix.size());
    if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos)
      return mu_ngeq_e_spec(std::stoi(digits));
  }
  fail("UsageError", "unknown E-torsion theory; expected normal-image:N", {{"value", spec}});
}

json chain_json(const ChainComplex& c) {
  json groups = json::array(), orders = json::array(), diffs = json::array();
  for (int k = c.lo(); k <= c.hi(); ++k) {
    groups.push_back(c.at(k).label());
    orders.push_back(c.at(k).order());
    if (k > c.lo()) diffs.push_back({{"degree", k}, {"map", c.diff(k).map()}});
  }
  return {{"label", c.label()}, {"lo", c.lo()},       {"hi", c.hi()},
          {"groups", groups},   {"orders", orders},   {"diffs", diffs}};
}

struct Ctx {
  std::ostream& out;
  std::string format;
};

int cmd_validate(const Ctx& ctx, const std::string& file, const std::string& name) {
  Document doc = Document::load_file(file);
  bool ok = true;
  json payload;
  if (!name.empty()) {
    auto slash = name.find('/');
    json report = slash == std::string::npos
                      ? doc.validate_object(name)
                      : doc.validate_object(name.substr(0, slash), name.substr(slash + 1));
    ok = report["ok"].get<bool>();
    payload = std::move(report);
  } else {
    json objects = json::array();
    for (const char* section : {"groups", "homs", "simplicial", "chains", "crossed",
                                "theories", "corpora"})
      for (const std::string& n : doc.names(section)) {
        json report = doc.validate_object(section, n);
        ok = ok && report["ok"].get<bool>();
        report["section"] = section;
        objects.push_back(std::move(report));
      }
    payload = {{"objects", objects}, {"ok", ok}};
  }
  emit(ctx.out, payload, ctx.format);
  return ok ? 0 : 1;
}

int cmd_moore(const Ctx& ctx, const std::string& file, const std::string& name) {
  Document doc = Document::load_file(file);
  MooreComplex m = moore(doc.simplicial(name));
  json degenerate = json::array();
  for (const auto& d : m.d_in_level) degenerate.push_back(d.order());
  emit(ctx.out,
       {{"object", name},
        {"chain", chain_json(m.chain.complex())},
        {"degenerate_orders", degenerate}},
       ctx.format);
  return 0;
}

int cmd_homotopy(const Ctx& ctx, const std::string& file, const std::string& name,
                 int max_n) {
  Document doc = Document::load_file(file);
  const SimplicialGroup& x = doc.simplicial(name);
  if (max_n < 0) max_n = x.degree() - 1;
  std::vector<FiniteGroup> pis = homotopy_groups(x, max_n);
  json orders = json::array(), names = json::array();
  for (const auto& g : pis) {
    orders.push_back(g.order());
    names.push_back(g.label());
  }
  emit(ctx.out, {{"object", name}, {"max", max_n}, {"orders", orders}, {"names", names}},
       ctx.format);
  return 0;
}

int cmd_decompose(const Ctx& ctx, const std::string& file, const std::string& name,
                  const std::string& theory, const std::string& pretorsion, int ttf_level,
                  const std::string& e_torsion) {
  int modes = !theory.empty() + !pretorsion.empty() + (ttf_level >= 0) + !e_torsion.empty();
  if (modes != 1)
    fail("UsageError",
         "pass exactly one of --theory, --pretorsion, --ttf, --e-torsion",
         {{"given", modes}});
  Document doc = Document::load_file(file);
  const ChainComplex& c = doc.chain(name);

  json payload;
  bool ok = false;
  if (!theory.empty()) {
    TheoryId t = parse_theory_spec(theory);
    ChainSES ses = chain_torsion_decompose(c, t);
    bool sub_ok = classify_chain(ses.sub, t).torsion;
    bool quo_ok = classify_chain(ses.quo, t).torsion_free;
    ok = sub_ok && quo_ok;
    payload = {{"object", name},          {"theory", t.name()},
               {"sequence", ses.describe()}, {"torsion_end_ok", sub_ok},
               {"free_end_ok", quo_ok},   {"ok", ok}};
  } else if (!pretorsion.empty()) {
    auto [smaller, larger] = parse_theory_pair(pretorsion);
    PretorsionDecomposition dec = pretorsion_decompose(c, smaller, larger);
    TrivialPattern pattern = classify_trivial_object(dec.middle, smaller, larger);
    ok = dec.middle_torsion_larger && dec.middle_free_smaller;
    payload = {{"object", name},
               {"smaller", smaller.name()},
               {"larger", larger.name()},
               {"decomposition", dec.describe()},
               {"middle_pattern", pattern.to_json()},
               {"ok", ok}};
  } else if (ttf_level >= 0) {
    TTFDecomposition t = ttf_decompose(c, ttf_level);
    json sections = json::array();
    for (const auto& [k, s] : t.sections)
      sections.push_back({{"degree", k}, {"map", s.map()}});
    ok = t.middles_same_class;
    payload = {{"object", name},
               {"level", ttf_level},
               {"low_high", t.low_high.describe()},
               {"mu_geq", t.mu_geq_seq.describe()},
               {"sections", sections},
               {"chain_map_section", t.chain_map_section},
               {"middles_same_class", t.middles_same_class},
               {"ok", ok}};
  } else {
    ETorsionSpec spec = parse_e_torsion_spec(e_torsion);
    bool in_e = spec.in_e(c);
    payload = {{"object", name}, {"theory", spec.name}, {"in_e", in_e}};
    if (in_e) {
      ChainSES ses = spec.decompose(c);
      bool sub_ok = spec.in_torsion(ses.sub), quo_ok = spec.in_free(ses.quo);
      ok = sub_ok && quo_ok;
      payload["sequence"] = ses.describe();
      payload["torsion_end_ok"] = sub_ok;
      payload["free_end_ok"] = quo_ok;
    } else {
      ok = false;
      payload["reason"] = "object lies outside E; no decomposition is guaranteed";
    }
    payload["ok"] = ok;
  }
  emit(ctx.out, payload, ctx.format);
  return ok ? 0 : 1;
}

int cmd_classify(const Ctx& ctx, const std::string& file, const std::string& name,
                 const std::string& theory, const std::string& pair) {
  Document doc = Document::load_file(file);
  std::string section, plain = name;
  auto slash = name.find('/');
  if (slash != std::string::npos) {
    section = name.substr(0, slash);
    plain = name.substr(slash + 1);
  } else {
    for (const char* s : {"crossed", "chains", "simplicial"})
      if (doc.has(s, plain)) {
        section = s;
        break;
      }
  }

  json payload;
  if (section == "crossed") {
    const CrossedEntry& e = doc.crossed(plain);
    if (e.kind != "crossed_module")
      fail("UsageError", "classification over crossed entries covers crossed_module only",
           {{"name", plain}, {"kind", e.kind}});
    payload = {{"object", plain},
               {"kind", "crossed_module"},
               {"classes", json(classify_crossed_module(*e.crossed_module).names())}};
  } else if (section == "chains") {
    const ChainComplex& c = doc.chain(plain);
    if (!theory.empty() == !pair.empty())
      fail("UsageError", "chain classification needs exactly one of --theory, --pair",
           {{"name", plain}});
    if (!theory.empty()) {
      TheoryId t = parse_theory_spec(theory);
      ChainClass cls = classify_chain(c, t);
      payload = {{"object", plain},
                 {"kind", "chain"},
                 {"theory", t.name()},
                 {"torsion", cls.torsion},
                 {"torsion_free", cls.torsion_free}};
    } else {
      auto [smaller, larger] = parse_theory_pair(pair);
      payload = {{"object", plain},
                 {"kind", "chain"},
                 {"smaller", smaller.name()},
                 {"larger", larger.name()},
                 {"pattern", classify_trivial_object(c, smaller, larger).to_json()}};
    }
  } else if (section == "simplicial") {
    const SimplicialGroup& x = doc.simplicial(plain);
    json levels = json::array();
    std::vector<MembershipFlags> flags = classify_membership(x);
    for (size_t n = 0; n < flags.size(); ++n)
      levels.push_back({{"level", n},
                        {"m_ngeq", flags[n].m_ngeq},
                        {"m_geq", flags[n].m_geq},
                        {"ker_cot", flags[n].ker_cot},
                        {"f_tr", flags[n].f_tr}});
    payload = {{"object", plain},
               {"kind", "simplicial"},
               {"levels", levels},
               {"t_complex", is_group_T_complex(x).is_t_complex}};
  } else {
    fail("UnknownName", "classification targets simplicial, chains, or crossed entries",
         {{"name", name}});
  }
  emit(ctx.out, payload, ctx.format);
  return 0;
}

int cmd_corpus(const Ctx& ctx, const std::string& suite) {
  if (suite != "acceptance")
    fail("UsageError", "unknown suite; only 'acceptance' is bundled", {{"suite", suite}});
  std::vector<CriterionResult> results = run_acceptance_suite();
  bool ok = true;
  for (const auto& r : results) ok = ok && r.pass;
  if (ctx.format == "json") {
    json criteria = json::array();
    for (const auto& r : results)
      criteria.push_back(
          {{"number", r.number}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    emit(ctx.out, {{"suite", "acceptance"}, {"criteria", criteria}, {"ok", ok}}, "json");
  } else {
    int passed = 0;
    for (const auto& r : results) {
      ctx.out << (r.pass ? "PASS" : "FAIL") << "  " << r.number << "  " << r.name << "\n";
      if (r.pass) ++passed;
      else render_text(ctx.out, r.detail, 6);
    }
    ctx.out << passed << "/" << results.size() << " criteria passed\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite-group simplicial, chain, and torsion-theory toolkit"};
  app.name("moorekit");
  app.fallthrough();
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text"}));

  std::string file, name, theory, pretorsion, e_torsion, pair, suite = "acceptance";
  int max_n = -1, ttf_level = -1;

  CLI::App* validate = app.add_subcommand("validate", "re-certify document entries");
  validate->add_option("file", file, "document path")->required();
  validate->add_option("--name", name, "one entry (optionally section/name)");

  CLI::App* moore_cmd = app.add_subcommand("moore", "Moore complex of a simplicial entry");
  moore_cmd->add_option("file", file, "document path")->required();
  moore_cmd->add_option("--name", name, "simplicial entry")->required();

  CLI::App* homotopy = app.add_subcommand("homotopy", "homotopy group orders");
  homotopy->add_option("file", file, "document path")->required();
  homotopy->add_option("--name", name, "simplicial entry")->required();
  homotopy->add_option("--max", max_n, "highest degree (default: degree - 1)");

  CLI::App* decompose = app.add_subcommand("decompose", "torsion-style decompositions");
  decompose->add_option("file", file, "document path")->required();
  decompose->add_option("--name", name, "chain entry")->required();
  decompose->add_option("--theory", theory, "mu-ngeq:N | mu-geq:N");
  decompose->add_option("--pretorsion", pretorsion, "smaller,larger theory pair");
  decompose->add_option("--ttf", ttf_level, "TTF level n >= 0");
  decompose->add_option("--e-torsion", e_torsion, "normal-image:N");

  CLI::App* classify = app.add_subcommand("classify", "membership / classes / patterns");
  classify->add_option("file", file, "document path")->required();
  classify->add_option("--name", name, "entry (optionally section/name)")->required();
  classify->add_option("--theory", theory, "mu-ngeq:N | mu-geq:N (chains)");
  classify->add_option("--pair", pair, "smaller,larger theory pair (chains)");

  CLI::App* corpus = app.add_subcommand("corpus", "run a bundled suite");
  corpus->add_option("--suite", suite, "suite name (acceptance)");

  std::vector<const char*> argv{"moorekit"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    emit_error(err, "UsageError", e.what(), {{"kind", e.get_name()}});
    return 2;
  }

  Ctx ctx{out, format};
  try {
    if (*validate) return cmd_validate(ctx, file, name);
    if (*moore_cmd) return cmd_moore(ctx, file, name);
    if (*homotopy) return cmd_homotopy(ctx, file, name, max_n);
    if (*decompose)
      return cmd_decompose(ctx, file, name, theory, pretorsion, ttf_level, e_torsion);
    if (*classify) return cmd_classify(ctx, file, name, theory, pair);
    if (*corpus) return cmd_corpus(ctx, suite);
  } catch (const Error& e) {
    emit_error(err, e.code(), e.what(), e.witness());
    return exit_code_for(e.code());
  }
  emit_error(err, "UsageError", "no subcommand selected", json::object());
  return 2;
}

}  // namespace moorekit
