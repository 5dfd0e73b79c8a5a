#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "cosetcover/corpus.hpp"
#include "cosetcover/errors.hpp"
#include "cosetcover/mycielski.hpp"
#include "cosetcover/search.hpp"
#include "cosetcover/verifiers.hpp"
#include "io.hpp"

namespace cosetcover::cli {

namespace {

/// Bad flag combinations; reported with exit code 2 like CLI11's own errors.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\t' || c == '\n') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::uint64_t parse_u64(std::string_view text, std::string_view what) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || p != text.data() + text.size() || text.empty())
    throw ParseError("bad " + std::string(what) + ": '" + std::string(text) + "'");
  return v;
}

std::vector<Element> parse_elements(std::string_view text, std::string_view what) {
  std::vector<Element> out;
  for (const auto& tok : split_list(text)) out.push_back(static_cast<Element>(parse_u64(tok, what)));
  return out;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read --input file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct InputOptions {
  std::string z;
  std::string input;
  std::string group;
  std::vector<std::string> cosets;
  std::string h;
  std::string demo;
  std::size_t k = 3;
};

void add_input_options(CLI::App* cmd, InputOptions& o, bool with_demo) {
  cmd->add_option("--z", o.z, "residue system, e.g. \"0/2,0/3,1/4,5/6,7/12\"");
  cmd->add_option("--input", o.input, "JSON file holding a system");
  cmd->add_option("--group", o.group, "group spec for --coset (or for the centralizer_cover demo)");
  cmd->add_option("--coset", o.cosets, "coset REP:GEN,GEN,... of the subgroup generated by the GENs (repeatable)");
  cmd->add_option("--H", o.h, "subgroup H: modulus d of dZ, or generators in a group");
  if (with_demo) {
    cmd->add_option("--demo", o.demo, "named corpus instance instead of an input");
    cmd->add_option("--k", o.k, "k for the example21 demo");
  }
}

LoadedSystem demo_system(const std::string& name, std::size_t k, const std::string& group) {
  LoadedSystem s;
  if (name == "classic_cover") s.z = classic_cover();
  else if (name == "regular_noncover") s.z = regular_noncover();
  else if (name == "example21") s.cosets = example21(k);
  else if (name == "klein_cover") s.cosets = klein_cover();
  else if (name == "q8_cover") s.cosets = q8_cover();
  else if (name == "centralizer_cover") s.cosets = centralizer_cover(group.empty() ? "S3" : group);
  else throw UsageError("unknown demo '" + name + "'");
  return s;
}

LoadedSystem load_input(const InputOptions& o) {
  int sources = !o.z.empty() + !o.input.empty() + !o.demo.empty() + (o.demo.empty() && !o.group.empty());
  if (sources != 1) throw UsageError("give exactly one of --z, --input, --group with --coset, --demo");
  if (!o.cosets.empty() && (o.group.empty() || !o.demo.empty())) throw UsageError("--coset needs --group");
  LoadedSystem sys;
  if (!o.z.empty()) {
    sys.z = parse_zsystem(o.z);
  } else if (!o.input.empty()) {
    sys = load_system_text(read_file(o.input));
  } else if (!o.demo.empty()) {
    sys = demo_system(o.demo, o.k, o.group);
  } else {
    if (o.cosets.empty()) throw UsageError("--group needs at least one --coset");
    GroupPtr g = make_group_ptr(o.group);
    CosetSystem cs{g, {}};
    for (const auto& text : o.cosets) {
      auto colon = text.find(':');
      if (colon == std::string::npos) throw ParseError("--coset expects REP:GENS, got '" + text + "'");
      auto rep = static_cast<Element>(parse_u64(text.substr(0, colon), "--coset representative"));
      if (rep >= g->order()) throw ParseError("--coset representative " + std::to_string(rep) + " out of range");
      auto gens = parse_elements(text.substr(colon + 1), "--coset generator");
      cs.items.emplace_back(*g, rep, subgroup_generated(*g, gens));
    }
    sys.cosets = std::move(cs);
  }
  if (!o.h.empty()) {
    sys.h_elements.reset();
    sys.h_modulus.reset();
    if (sys.z) {
      sys.h_modulus = parse_u64(o.h, "--H modulus");
    } else {
      const auto& g = *sys.cosets->group;
      sys.h_elements = subgroup_generated(g, parse_elements(o.h, "--H generator")).sorted();
    }
  }
  return sys;
}

json property_report(const LoadedSystem& sys, std::size_t m, std::size_t regularity_cap, bool exhaustive) {
  auto model = sys.model();
  const auto& inst = model->instance();
  json props = json::object();
  props["cover"] = is_m_cover(inst, 1);
  props["m_cover"] = is_m_cover(inst, m);
  props["exact"] = is_exact_m_cover(inst, m);
  props["minimal"] = is_minimal_m_cover(inst, m);
  if (exhaustive) props["minimal_exhaustive"] = is_minimal_m_cover_exhaustive(inst, m);
  props["regular"] = is_regular(inst, false, regularity_cap);
  props["regular_cover"] = is_regular(inst, true, regularity_cap);
  props["partition"] = is_partition(inst);
  return {{"system", sys.system_json()},
          {"description", model->describe()},
          {"k", inst.k()},
          {"carrier", inst.carrier_size()},
          {"multiplicity", multiplicity(inst)},
          {"m", m},
          {"properties", props}};
}

void print_property_report(const json& r, std::ostream& out) {
  out << "system: " << r["description"].get<std::string>() << "\n";
  out << "k = " << r["k"] << "\ncarrier = " << r["carrier"] << "\nmultiplicity = " << r["multiplicity"]
      << "\nm = " << r["m"] << "\n";
  for (const auto& [name, value] : r["properties"].items()) out << name << " = " << yes_no(value.get<bool>()) << "\n";
}

/// Returns the number of failed assertions, naming each on err.
int check_assertions(const json& report, const std::string& list, std::ostream& err) {
  int failed = 0;
  for (auto tok : split_list(list)) {
    bool want = true;
    if (!tok.empty() && tok[0] == '!') {
      want = false;
      tok.erase(0, 1);
    }
    const auto& props = report["properties"];
    if (!props.contains(tok)) throw UsageError("unknown property in --assert: '" + tok + "'");
    if (props[tok].get<bool>() != want) {
      err << "assertion failed: " << (want ? "" : "!") << tok << "\n";
      ++failed;
    }
  }
  return failed;
}

std::vector<std::string> statement_ids(const std::string& list) {
  std::vector<std::string> ids;
  for (const auto& tok : split_list(list)) {
    if (tok == "all") {
      for (const auto& s : statements()) ids.emplace_back(s.id);
    } else {
      statement_info(tok);
      ids.push_back(tok);
    }
  }
  if (ids.empty()) throw UsageError("--theorem needs at least one statement id");
  return ids;
}

struct VerifyOutcome {
  json j;
  bool proved_counterexample = false;
};

/// Runs the listed statements. With one id a precondition failure is an
/// error; with several it is recorded as skipped.
VerifyOutcome verify_system(const CoverModel& model, const std::vector<std::string>& ids, const RunOptions& opts) {
  VerifyOutcome res;
  json reports = json::array();
  json skipped = json::array();
  for (const auto& id : ids) {
    try {
      auto r = run_statement(id, model, opts);
      auto rj = to_json(r);
      const auto& info = statement_info(id);
      rj["title"] = std::string(info.title);
      rj["proved"] = info.proved;
      if (info.proved && r.overall() == Outcome::counterexample) res.proved_counterexample = true;
      reports.push_back(std::move(rj));
    } catch (const PreconditionError& e) {
      if (ids.size() == 1) throw;
      skipped.push_back({{"statement", id}, {"reason", e.what()}});
    } catch (const CapExceeded& e) {
      if (ids.size() == 1) throw;
      skipped.push_back({{"statement", id}, {"reason", e.what()}});
    }
  }
  res.j = {{"reports", reports}, {"skipped", skipped}};
  return res;
}

void print_verification(const json& v, std::ostream& out) {
  for (const auto& r : v["reports"]) {
    out << "[" << r["statement"].get<std::string>() << "] " << r["title"].get<std::string>() << ": "
        << r["verdict"].get<std::string>() << "\n";
    for (const auto& c : r["checks"]) {
      std::string outcome = c["verdict"].get<std::string>();
      outcome.resize(15, ' ');
      out << "  " << outcome << c["check"].get<std::string>();
      if (!c["detail"].get<std::string>().empty()) out << ": " << c["detail"].get<std::string>();
      out << "\n";
      if (!c["witness"].is_null()) out << "                 witness: " << c["witness"].get<std::string>() << "\n";
    }
  }
  for (const auto& s : v["skipped"])
    out << "[" << s["statement"].get<std::string>() << "] skipped: " << s["reason"].get<std::string>() << "\n";
}

RunOptions run_options(const LoadedSystem& sys, const CoverModel& model, std::size_t m, const std::string& subset,
                       std::size_t regularity_cap) {
  RunOptions opts;
  opts.m = m;
  opts.regularity_cap = regularity_cap;
  opts.h = subgroup_h(sys, model);
  if (!subset.empty()) {
    IndexSet s;
    for (auto i : parse_elements(subset, "--subset index")) {
      if (i < 1 || i > model.k()) throw ParseError("--subset index " + std::to_string(i) + " outside [1,k]");
      s = s.with(i - 1);
    }
    opts.subset = s;
  }
  return opts;
}

/// Sends text to --out when given, otherwise to out.
void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw ParseError("cannot write --out file '" + out_path + "'");
  f << text;
}

// ---- subcommands -------------------------------------------------------

struct CheckArgs {
  InputOptions in;
  std::size_t m = 1;
  bool json_out = false;
  bool exhaustive = false;
  std::string assert_list;
  std::string out_path;
  std::size_t regularity_cap = default_regularity_cap;
};

int cmd_check(const CheckArgs& a, std::ostream& out, std::ostream& err) {
  if (a.m == 0) throw UsageError("--m must be at least 1");
  auto sys = load_input(a.in);
  auto report = property_report(sys, a.m, a.regularity_cap, a.exhaustive);
  std::ostringstream text;
  if (a.json_out) text << report.dump() << "\n";
  else print_property_report(report, text);
  emit(text.str(), a.out_path, out);
  if (!a.assert_list.empty() && check_assertions(report, a.assert_list, err) > 0) return exit_assert_failed;
  return exit_ok;
}

int cmd_f(std::uint64_t n, bool json_out, std::ostream& out) {
  if (n == 0) throw UsageError("f needs n >= 1");
  auto fac = factorize(n);
  if (json_out) {
    json pairs = json::array();
    for (auto [p, e] : fac.pairs) pairs.push_back({p, e});
    out << json{{"n", n}, {"factorization", pairs}, {"f", mycielski_f(n)}}.dump() << "\n";
  } else {
    out << n << " = " << fac.to_string() << ", f = " << mycielski_f(n) << "\n";
  }
  return exit_ok;
}

int cmd_group(const std::string& spec, bool json_out, std::size_t order_cap, std::size_t lattice_cap,
              std::ostream& out) {
  auto g = make_group_ptr(spec, order_cap);
  auto subs = all_subgroups(*g, lattice_cap);
  json list = json::array();
  for (const auto& h : subs) {
    bool sub = is_subnormal(*g, h);
    std::uint64_t index = group_index(*g, h);
    json e = {{"order", h.order()},
              {"index", index},
              {"elements", h.sorted()},
              {"normal", is_normal(*g, h)},
              {"subnormal", sub},
              {"hall", is_hall(*g, h)},
              {"perfect", is_perfect(*g, h)},
              {"core_solvable", is_solvable_quotient(*g, normal_core(*g, h))},
              {"f", mycielski_f(index)}};
    e["d"] = sub ? json(depth_d(*g, h)) : json(nullptr);
    list.push_back(std::move(e));
  }
  json j = {{"group", g->label()},
            {"order", g->order()},
            {"abelian", g->is_abelian()},
            {"cyclic", g->is_cyclic()},
            {"solvable", is_solvable(*g, Subgroup::whole(*g))},
            {"center", center(*g).sorted()},
            {"subgroups", list}};
  if (json_out) {
    out << j.dump() << "\n";
    return exit_ok;
  }
  out << g->label() << ": order " << g->order() << ", " << (g->is_abelian() ? "abelian" : "nonabelian") << ", "
      << (g->is_cyclic() ? "cyclic" : "noncyclic") << ", " << (j["solvable"].get<bool>() ? "solvable" : "nonsolvable")
      << "\ncenter: " << j["center"].dump() << "\nsubgroups: " << subs.size() << "\n";
  for (const auto& e : list) {
    out << "  order=" << e["order"] << " index=" << e["index"] << " normal=" << yes_no(e["normal"].get<bool>())
        << " subnormal=" << yes_no(e["subnormal"].get<bool>()) << " d=" << (e["d"].is_null() ? "-" : e["d"].dump())
        << " f=" << e["f"] << " core_solvable=" << yes_no(e["core_solvable"].get<bool>())
        << " elements=" << e["elements"].dump() << "\n";
  }
  return exit_ok;
}

struct VerifyArgs {
  InputOptions in;
  std::string theorem = "all";
  std::size_t m = 0;
  std::string subset;
  bool cross = false;
  bool json_out = false;
  std::string out_path;
  std::size_t regularity_cap = default_regularity_cap;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  auto sys = load_input(a.in);
  auto model = sys.model();
  auto ids = statement_ids(a.theorem);
  auto opts = run_options(sys, *model, a.m, a.subset, a.regularity_cap);
  auto res = verify_system(*model, ids, opts);
  json j = res.j;
  j["system"] = sys.system_json();
  int code = res.proved_counterexample ? exit_counterexample : exit_ok;
  std::optional<CrossCheck> cc;
  if (a.cross) {
    if (!sys.z) throw UsageError("--cross-check needs a residue system");
    cc = cross_check(*sys.z, opts);
    j["cross_check"] = {{"agree", cc->agree}, {"compared", cc->compared}, {"mismatches", cc->mismatches}};
    if (!cc->agree && code == exit_ok) code = exit_assert_failed;
  }
  std::ostringstream text;
  if (a.json_out) {
    text << j.dump() << "\n";
  } else {
    text << "system: " << model->describe() << "\n";
    print_verification(j, text);
    if (cc) {
      text << "cross-check: " << (cc->agree ? "agree" : "DISAGREE") << " (" << cc->compared << " checks compared)\n";
      for (const auto& mm : cc->mismatches) text << "  " << mm << "\n";
    }
  }
  emit(text.str(), a.out_path, out);
  return code;
}

struct SearchArgs {
  SearchSpec spec;
  std::string predicate = "minimal";
  std::string hunt;
  std::string verify;
  bool json_out = false;
  std::size_t limit = 0;
  std::string out_path;
};

std::string target_text(const SearchSpec& s) {
  if (s.target == SearchSpec::Target::group) return s.group;
  return "Z, period " + std::to_string(s.min_period) + ".." + std::to_string(s.max_period);
}

int cmd_search(SearchArgs a, std::ostream& out) {
  auto& spec = a.spec;
  spec.target = spec.group.empty() ? SearchSpec::Target::z : SearchSpec::Target::group;
  spec.predicate = parse_predicate(a.predicate);
  if (!a.hunt.empty() && !a.verify.empty()) throw UsageError("--hunt and --verify are exclusive");
  std::ostringstream text;
  int code = exit_ok;
  if (!a.hunt.empty()) {
    if (a.hunt != "c1.1" && a.hunt != "c1.2") throw UsageError("--hunt expects c1.1 or c1.2");
    auto r = hunt(spec, a.hunt);
    if (a.json_out) {
      text << json{{"hunt", r.statement},
                   {"target", target_text(spec)},
                   {"examined", r.examined},
                   {"hypotheses_held", r.hypotheses_held},
                   {"confirmed", r.confirmed},
                   {"tight", r.tight},
                   {"tight_cases", r.tight_cases},
                   {"counterexamples", r.counterexamples},
                   {"disjoint_pairs", r.disjoint_pairs},
                   {"disjoint_pairs_noncoprime", r.disjoint_pairs_noncoprime}}
                  .dump()
           << "\n";
    } else {
      text << "hunt " << r.statement << " over " << target_text(spec) << "\n"
           << "examined: " << r.examined << "\nhypotheses held: " << r.hypotheses_held
           << "\nconfirmed: " << r.confirmed << "\ntight: " << r.tight
           << "\ncounterexamples: " << r.counterexamples.size() << "\n";
      if (r.disjoint_pairs > 0)
        text << "disjoint pairs: " << r.disjoint_pairs << " (non-coprime indices: " << r.disjoint_pairs_noncoprime
             << ")\n";
      if (r.counterexamples.empty()) text << "no counterexample within bounds\n";
      for (const auto& c : r.counterexamples) text << "  COUNTEREXAMPLE " << c << "\n";
      if (!r.tight_cases.empty()) text << "tight cases:\n";
      for (const auto& c : r.tight_cases) text << "  " << c << "\n";
    }
  } else if (!a.verify.empty()) {
    auto ids = statement_ids(a.verify);
    auto r = sweep(spec, ids);
    bool proved_bad = false;
    json tallies = json::object();
    for (const auto& [id, t] : r.by_statement) {
      tallies[id] = {{"confirmed", t.confirmed}, {"vacuous", t.vacuous}, {"counterexample", t.counterexample}};
      if (t.counterexample > 0 && statement_info(id).proved) proved_bad = true;
    }
    if (a.json_out) {
      text << json{{"instances", r.instances}, {"statements", tallies}, {"counterexamples", r.counterexamples}}.dump()
           << "\n";
    } else {
      text << "instances: " << r.instances << "\n";
      for (const auto& id : ids) {
        auto it = r.by_statement.find(id);
        SweepTally t = it == r.by_statement.end() ? SweepTally{} : it->second;
        text << "  " << id << ": confirmed " << t.confirmed << ", vacuous " << t.vacuous << ", counterexample "
             << t.counterexample << "\n";
      }
      for (const auto& c : r.counterexamples) text << "  COUNTEREXAMPLE " << c << "\n";
    }
    if (proved_bad) code = exit_counterexample;
  } else {
    std::size_t count = 0;
    enumerate(spec, [&](const Found& f) {
      ++count;
      if (a.limit != 0 && count > a.limit) return;
      if (a.json_out) text << json{{"system", to_json(f)}}.dump() << "\n";
      else text << f.to_string() << "\n";
    });
    if (a.json_out) text << json{{"count", count}}.dump() << "\n";
    else text << count << " systems\n";
  }
  emit(text.str(), a.out_path, out);
  return code;
}

struct DemoArgs {
  std::string name;
  std::size_t k = 3;
  std::string group;
  std::size_t m = 0;
  std::string verify;
  bool json_out = false;
};

int cmd_demo(const DemoArgs& a, std::ostream& out) {
  if (a.name.empty()) {
    for (const auto& n : demo_names()) out << n << "\n";
    return exit_ok;
  }
  auto sys = demo_system(a.name, a.k, a.group);
  auto model = sys.model();
  std::size_t m = a.m == 0 ? std::max<std::size_t>(1, multiplicity(model->instance())) : a.m;
  auto report = property_report(sys, m, default_regularity_cap, false);
  int code = exit_ok;
  if (!a.verify.empty()) {
    RunOptions opts;
    opts.m = a.m;
    auto res = verify_system(*model, statement_ids(a.verify), opts);
    report["verification"] = res.j;
    if (res.proved_counterexample) code = exit_counterexample;
  }
  if (a.json_out) {
    out << report.dump() << "\n";
  } else {
    print_property_report(report, out);
    if (report.contains("verification")) print_verification(report["verification"], out);
  }
  return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite covers of groups by cosets: properties, invariants, verification and search", "cosetcover"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* c = app.add_subcommand("check", "cover-property report for one system");
  add_input_options(c, check.in, true);
  c->add_option("--m", check.m, "multiplicity m for m-cover, exact and minimal");
  c->add_flag("--json", check.json_out, "JSON output");
  c->add_flag("--exhaustive-minimal", check.exhaustive, "also decide minimality over all subsystems");
  c->add_option("--assert", check.assert_list, "comma list of properties that must hold; prefix ! to negate");
  c->add_option("--out", check.out_path, "write the report to a file");
  c->add_option("--regularity-cap", check.regularity_cap, "largest k for the regularity test");

  std::uint64_t f_n = 0;
  bool f_json = false;
  auto* fc = app.add_subcommand("f", "factorization and Mycielski f(n)");
  fc->add_option("n", f_n, "positive integer")->required();
  fc->add_flag("--json", f_json, "JSON output");

  std::string group_spec;
  bool group_json = false;
  std::size_t order_cap = default_group_order_cap;
  std::size_t lattice_cap = default_lattice_cap;
  auto* gc = app.add_subcommand("group", "subgroup table of a built-in group");
  gc->add_option("spec", group_spec, "Zn, Sk, An, Dn, Q8 or products like Z2xS3")->required();
  gc->add_flag("--json", group_json, "JSON output");
  gc->add_option("--order-cap", order_cap, "largest group order accepted");
  gc->add_option("--lattice-cap", lattice_cap, "largest order for subgroup enumeration");

  VerifyArgs verify;
  auto* vc = app.add_subcommand("verify", "run statement checkers on one system");
  add_input_options(vc, verify.in, true);
  vc->add_option("--theorem", verify.theorem, "statement id(s), comma separated, or all");
  vc->add_option("--m", verify.m, "multiplicity m for the hypotheses (default: m(A))");
  vc->add_option("--subset", verify.subset, "index set I, 1-based, e.g. 1,3");
  vc->add_flag("--cross-check", verify.cross, "compare residue and cyclic-group verification");
  vc->add_flag("--json", verify.json_out, "JSON output");
  vc->add_option("--out", verify.out_path, "write the report to a file");
  vc->add_option("--regularity-cap", verify.regularity_cap, "largest k for the regularity test");

  SearchArgs search;
  auto* sc = app.add_subcommand("search", "enumerate systems, hunt conjectures or sweep checkers");
  sc->add_option("--min-period", search.spec.min_period, "smallest period (residue systems)");
  sc->add_option("--max-period", search.spec.max_period, "largest period (residue systems)");
  sc->add_option("--group", search.spec.group, "search coset systems in this group instead");
  sc->add_option("--min-k", search.spec.min_k, "smallest number of members");
  sc->add_option("--max-k", search.spec.max_k, "largest number of members");
  sc->add_option("--m", search.spec.m, "multiplicity for cover predicates");
  sc->add_option("--predicate", search.predicate, "minimal, exact, cover, regular-cover, regular or disjoint");
  sc->add_option("--hunt", search.hunt, "run a conjecture hunt: c1.1 or c1.2");
  sc->add_option("--verify", search.verify, "run statement checkers on every system found");
  sc->add_option("--jobs", search.spec.jobs, "worker threads");
  sc->add_flag("--distinct-moduli", search.spec.distinct_moduli, "residue systems with distinct moduli only");
  sc->add_flag("--subgroups-only", search.spec.subgroups_only, "identity representatives only");
  sc->add_flag("--subnormal-only", search.spec.subnormal_only, "subnormal member subgroups only");
  sc->add_flag("--proper-only", search.spec.proper_only, "exclude the whole group as a member");
  sc->add_flag("--json", search.json_out, "JSON lines output");
  sc->add_option("--limit", search.limit, "print at most this many systems (0: all)");
  sc->add_option("--out", search.out_path, "write the report to a file");
  sc->add_option("--regularity-cap", search.spec.regularity_cap, "largest k for the regularity test");

  DemoArgs demo;
  auto* dc = app.add_subcommand("demo", "built-in named instances");
  dc->add_option("name", demo.name, "instance name; omit to list");
  dc->add_option("--k", demo.k, "k for example21");
  dc->add_option("--group", demo.group, "group for centralizer_cover");
  dc->add_option("--m", demo.m, "multiplicity m (default: m(A))");
  dc->add_option("--verify", demo.verify, "statement id(s) to verify");
  dc->add_flag("--json", demo.json_out, "JSON output");

  std::vector<const char*> argv{"cosetcover"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (c->parsed()) return cmd_check(check, out, err);
    if (fc->parsed()) return cmd_f(f_n, f_json, out);
    if (gc->parsed()) return cmd_group(group_spec, group_json, order_cap, lattice_cap, out);
    if (vc->parsed()) return cmd_verify(verify, out);
    if (sc->parsed()) return cmd_search(search, out);
    if (dc->parsed()) return cmd_demo(demo, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace cosetcover::cli
