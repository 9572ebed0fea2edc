#include "cli.hpp"

#include "coxar/verify.hpp"
#include "dot.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

namespace coxar::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string label(int i) { return std::to_string(i + 1); }

std::string node_id(int i, int n) { return label(i) + "_" + std::to_string(n); }

std::string join(const std::vector<int>& letters, const char* sep) {
  std::string out;
  for (std::size_t k = 0; k < letters.size(); ++k) out += (k ? sep : "") + label(letters[k]);
  return out;
}

std::string show(const IntVector& v) {
  std::string out = "[";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k]);
  return out + "]";
}

std::string tsv(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t k = 0; k < cells.size(); ++k) out += (k ? "\t" : "") + cells[k];
  return out + "\n";
}

Json header(const JobSpec& spec, const RootSystem& rs) {
  Json j;
  j["schema"] = 1;
  j["command"] = spec.command;
  j["type"] = rs.type().name();
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Format format_of(const JobSpec& spec) {
  return spec.format.value_or(spec.command == "verify" ? Format::Tsv : Format::Json);
}

[[noreturn]] void unsupported(const JobSpec& spec) {
  throw std::invalid_argument("format dot is not available for " + spec.command);
}

// C from --coxeter (default s_1 ... s_r) and Pi from --pi (default the
// reference system), checked to be compatible.
struct Setup {
  RootSystemPtr rs;
  CoxeterContext ctx;
  SimpleSystem pi;
};

Setup setup(const JobSpec& spec) {
  const RootSystemPtr rs = build_root_system(DynkinType::parse(spec.dynkin));
  const DynkinDiagram& d = rs->diagram();
  const SimpleSystem ref = SimpleSystem::reference(*rs);
  std::vector<int> order(rs->rank());
  std::iota(order.begin(), order.end(), 0);
  const Orientation o = spec.coxeter ? parse_coxeter_spec(d, *spec.coxeter) : Orientation::from_order(d, order);
  CoxeterContext ctx = coxeter_from_orientation(rs, ref, o);
  SimpleSystem pi = ref;
  if (spec.pi) {
    const auto word = parse_word(d, *spec.pi);
    pi = SimpleSystem::from_witness(*rs, evaluate_word(*rs, ref, word));
    const auto c = is_compatible(ctx, pi);
    if (!c.compatible)
      throw std::invalid_argument("--pi \"" + *spec.pi + "\" is not compatible with C: l(C) = " +
                                  std::to_string(c.length) + " but r = " + std::to_string(rs->rank()));
  }
  return {rs, std::move(ctx), std::move(pi)};
}

// ---------------------------------------------------------------------------

std::string cmd_ihat(const JobSpec& spec) {
  const DynkinType type = DynkinType::parse(spec.dynkin);
  const IhatQuiver ihat = build_ihat(type);
  const auto& vertices = ihat.vertices();
  switch (format_of(spec)) {
    case Format::Json: {
      Json j;
      j["schema"] = 1;
      j["command"] = spec.command;
      j["type"] = type.name();
      j["coxeter_number"] = ihat.coxeter_number();
      j["period"] = ihat.period();
      Json vs = Json::array(), es = Json::array();
      for (const auto& v : vertices)
        vs.push_back({{"id", node_id(v.i, v.n)}, {"i", v.i + 1}, {"n", v.n}, {"parity", ihat.parity(v.i)},
                      {"tau", node_id(v.i, ihat.tau(v).n)}});
      for (const auto& [a, b] : ihat.edges()) es.push_back({{"from", node_id(a.i, a.n)}, {"to", node_id(b.i, b.n)}});
      j["vertices"] = vs;
      j["edges"] = es;
      return dump(j);
    }
    case Format::Tsv: {
      std::string out = tsv({"i", "n", "parity", "tau_n", "successors"});
      for (const auto& v : vertices) {
        std::string succ;
        for (const auto& w : ihat.successors(v)) succ += (succ.empty() ? "" : ",") + node_id(w.i, w.n);
        out += tsv({label(v.i), std::to_string(v.n), std::to_string(ihat.parity(v.i)),
                    std::to_string(ihat.tau(v).n), succ});
      }
      return out;
    }
    case Format::Dot: {
      dot::Graph g{"ihat_" + type.name(), {}, {}};
      for (const auto& v : vertices) g.nodes.push_back({node_id(v.i, v.n), {{"label", label(v.i) + ":" + std::to_string(v.n)}}});
      for (const auto& [a, b] : ihat.edges()) g.edges.push_back({node_id(a.i, a.n), node_id(b.i, b.n), {}});
      return dot::write(g);
    }
  }
  return {};
}

std::string cmd_phi(const JobSpec& spec) {
  const Setup s = setup(spec);
  const RootSystem& rs = *s.rs;
  const IhatQuiver ihat(rs.type());
  const PhiMap phi = build_phi(s.ctx, s.pi);

  // Roots are shown in Euclidean coordinates for A and D and in the basis
  // beta_1..beta_r of the canonical system for E.
  std::function<std::string(int)> display = [&](int x) { return rs.display(x); };
  std::optional<RatMatrix> to_beta;
  if (rs.type().family() == Family::E) {
    const BetaFamily beta = beta_family(s.ctx, s.ctx.canonical());
    IntMatrix basis(rs.rank(), rs.rank());
    for (int j = 0; j < rs.rank(); ++j)
      for (int i = 0; i < rs.rank(); ++i) basis(i, j) = rs.coords(beta.beta[j])[i];
    to_beta = *inverse(to_rational(basis));
    display = [&](int x) { return show(*to_integer(*to_beta * to_rational(rs.coords(x)))); };
  }

  std::vector<std::pair<IhatVertex, int>> rows;
  for (int x = 0; x < rs.size(); ++x) rows.emplace_back(phi(x), x);
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return std::pair(a.first.n, a.first.i) < std::pair(b.first.n, b.first.i);
  });
  switch (format_of(spec)) {
    case Format::Json: {
      Json j = header(spec, rs);
      j["coxeter"] = orientation_of(s.ctx, SimpleSystem::reference(rs)).to_string();
      j["basis"] = rs.type().family() == Family::E ? "beta" : "euclidean";
      Json table = Json::array();
      for (const auto& [v, x] : rows)
        table.push_back({{"i", v.i + 1}, {"n", v.n}, {"root", display(x)}, {"positive", rs.is_positive(x)}});
      j["rows"] = table;
      return dump(j);
    }
    case Format::Tsv: {
      std::string out = tsv({"n", "i", "root", "positive"});
      for (const auto& [v, x] : rows)
        out += tsv({std::to_string(v.n), label(v.i), display(x), rs.is_positive(x) ? "1" : "0"});
      return out;
    }
    case Format::Dot: {
      dot::Graph g{"phi_" + rs.type().name(), {}, {}};
      for (const auto& [v, x] : rows) {
        dot::Attributes a{{"label", label(v.i) + ":" + std::to_string(v.n) + "\n" + display(x)}};
        if (rs.is_positive(x)) a["style"] = "filled";
        g.nodes.push_back({node_id(v.i, v.n), a});
      }
      for (const auto& [a, b] : ihat.edges()) g.edges.push_back({node_id(a.i, a.n), node_id(b.i, b.n), {}});
      return dot::write(g);
    }
  }
  return {};
}

std::string cmd_euler(const JobSpec& spec) {
  const Setup s = setup(spec);
  const RootSystem& rs = *s.rs;
  const IhatQuiver ihat(rs.type());
  const EulerTable from_pi = euler_form_from_pi(s.ctx, s.pi);
  const EulerTable closed = euler_form_closed(s.ctx);
  if (!(from_pi == closed)) throw InvariantError("euler: form from Pi differs from the closed form");
  const IntMatrix on_ihat = euler_form_ihat(ihat);

  std::vector<std::string> simple, vertices;
  for (int i = 0; i < rs.rank(); ++i) simple.push_back(label(i));
  for (const auto& v : ihat.vertices()) vertices.push_back(node_id(v.i, v.n));
  auto rows_of = [](const IntMatrix& m) {
    Json out = Json::array();
    for (std::size_t a = 0; a < m.rows(); ++a) {
      Json row = Json::array();
      for (std::size_t b = 0; b < m.cols(); ++b) row.push_back(m(a, b));
      out.push_back(row);
    }
    return out;
  };
  switch (format_of(spec)) {
    case Format::Json: {
      Json j = header(spec, rs);
      j["simple_roots"] = rows_of(closed.ref_gram);
      j["beta_basis"] = rows_of(closed.on_lattice);
      j["ihat"] = {{"vertices", vertices}, {"matrix", rows_of(on_ihat)}};
      return dump(j);
    }
    case Format::Tsv: {
      std::string out = tsv({"table", "row", "col", "value"});
      auto emit = [&](const char* name, const IntMatrix& m, const std::vector<std::string>& names) {
        for (std::size_t a = 0; a < m.rows(); ++a)
          for (std::size_t b = 0; b < m.cols(); ++b) out += tsv({name, names[a], names[b], std::to_string(m(a, b))});
      };
      emit("simple_roots", closed.ref_gram, simple);
      emit("beta_basis", closed.on_lattice, simple);
      emit("ihat", on_ihat, vertices);
      return out;
    }
    case Format::Dot: unsupported(spec);
  }
  return {};
}

std::string cmd_w0(const JobSpec& spec) {
  const Setup s = setup(spec);
  const RootSystem& rs = *s.rs;
  const auto word = w0_word(s.ctx, s.pi);
  const WeylElement w = evaluate_word(rs, s.pi, word);
  for (int i = 0; i < rs.rank(); ++i)
    if (w(s.pi.root(i)) != rs.negate(s.pi.root(rs.check(i))))
      throw InvariantError("w0: word does not send alpha_" + label(i) + " to -alpha_" + label(rs.check(i)));
  switch (format_of(spec)) {
    case Format::Json: {
      Json j = header(spec, rs);
      j["word"] = join(word, " ");
      Json letters = Json::array();
      for (int a : word) letters.push_back(a + 1);
      j["letters"] = letters;
      j["length"] = word.size();
      return dump(j);
    }
    case Format::Tsv: {
      std::string out = tsv({"position", "letter"});
      for (std::size_t k = 0; k < word.size(); ++k) out += tsv({std::to_string(k + 1), label(word[k])});
      return out;
    }
    case Format::Dot: unsupported(spec);
  }
  return {};
}

std::string cmd_compatible(const JobSpec& spec) {
  const Setup s = setup(spec);
  const RootSystem& rs = *s.rs;
  const SimpleSystem ref = SimpleSystem::reference(rs);
  const auto all = enumerate_compatible(s.ctx);

  // Each orientation class is one C-orbit; list it from its least member.
  std::map<Orientation, std::vector<SimpleSystem>> classes;
  for (const auto& pi : all) classes[orientation_of(s.ctx, pi)].push_back(pi);
  struct Row {
    std::string orientation;
    int k;
    std::string witness;
    std::vector<std::string> base;
  };
  std::vector<Row> rows;
  for (const auto& [o, members] : classes) {
    SimpleSystem cur = members.front();
    for (int k = 0; k < s.ctx.coxeter_number(); ++k) {
      Row row{o.to_string(), k, join(shortlex_word(rs, ref, cur.witness()), " "), {}};
      for (int root : cur.base()) row.base.push_back(rs.display(root));
      rows.push_back(std::move(row));
      cur = cur.transformed(rs, s.ctx.element());
    }
  }
  switch (format_of(spec)) {
    case Format::Json: {
      Json j = header(spec, rs);
      j["count"] = all.size();
      Json cls = Json::array();
      for (const auto& row : rows) {
        if (cls.empty() || cls.back()["orientation"] != row.orientation)
          cls.push_back({{"orientation", row.orientation}, {"systems", Json::array()}});
        cls.back()["systems"].push_back({{"k", row.k}, {"witness", row.witness}, {"base", row.base}});
      }
      j["classes"] = cls;
      return dump(j);
    }
    case Format::Tsv: {
      std::string out = tsv({"orientation", "k", "witness", "base"});
      for (const auto& row : rows) {
        std::string base;
        for (const auto& b : row.base) base += (base.empty() ? "" : " ") + b;
        out += tsv({row.orientation, std::to_string(row.k), row.witness, base});
      }
      return out;
    }
    case Format::Dot: unsupported(spec);
  }
  return {};
}

std::string cmd_ar(const JobSpec& spec) {
  const Setup s = setup(spec);
  const RootSystem& rs = *s.rs;
  const Orientation omega = orientation_of(s.ctx, s.pi);
  const ARQuiver ar = ar_quiver(rs, omega);
  std::optional<ZIQuiver> window;
  if (spec.window) window.emplace(rs.type(), *spec.window);
  auto id = [](const ZIVertex& v) { return node_id(v.i, v.k); };
  auto is_projective = [&](const ZIVertex& v) {
    return std::find(ar.projective.begin(), ar.projective.end(), v) != ar.projective.end();
  };
  switch (format_of(spec)) {
    case Format::Json: {
      Json j = header(spec, rs);
      j["orientation"] = omega.to_string();
      Json vs = Json::array(), es = Json::array();
      for (const auto& v : ar.vertices)
        vs.push_back({{"id", id(v)}, {"i", v.i + 1}, {"k", v.k}, {"dimension", ar.dimension.at(v)},
                      {"projective", is_projective(v)}});
      for (const auto& [a, b] : ar.edges) es.push_back({{"from", id(a)}, {"to", id(b)}});
      j["vertices"] = vs;
      j["edges"] = es;
      if (window) j["window"] = window->radius();
      return dump(j);
    }
    case Format::Tsv: {
      std::string out = tsv({"i", "k", "dimension", "projective"});
      for (const auto& v : ar.vertices)
        out += tsv({label(v.i), std::to_string(v.k), show(ar.dimension.at(v)), is_projective(v) ? "1" : "0"});
      return out;
    }
    case Format::Dot: {
      dot::Graph g{"ar_" + rs.type().name(), {}, {}};
      for (const auto& v : ar.vertices)
        g.nodes.push_back({id(v), {{"label", label(v.i) + ":" + std::to_string(v.k) + "\n" + show(ar.dimension.at(v))}}});
      for (const auto& [a, b] : ar.edges) g.edges.push_back({id(a), id(b), {}});
      if (window) {
        for (const auto& v : window->vertices())
          if (!ar.contains(v))
            g.nodes.push_back({id(v), {{"label", label(v.i) + ":" + std::to_string(v.k)}, {"style", "dotted"}}});
        for (const auto& [a, b] : window->edges())
          if (!(ar.contains(a) && ar.contains(b))) g.edges.push_back({id(a), id(b), {{"style", "dotted"}}});
      }
      return dot::write(g);
    }
  }
  return {};
}

Result cmd_verify(const JobSpec& spec) {
  const DynkinType type = DynkinType::parse(spec.dynkin);
  VerifyOptions options;
  options.seed = spec.seed;
  options.perturb = spec.perturb;
  const auto results = run_verification(type, options);
  const bool ok = std::none_of(results.begin(), results.end(),
                               [](const SuiteResult& r) { return r.status == SuiteStatus::Fail; });
  Result out{ok ? kExitOk : kExitVerification, {}};
  switch (format_of(spec)) {
    case Format::Json: {
      Json j;
      j["schema"] = 1;
      j["command"] = spec.command;
      j["type"] = type.name();
      j["seed"] = spec.seed;
      if (spec.perturb) j["perturb"] = *spec.perturb;
      Json suites = Json::array();
      for (const auto& r : results) suites.push_back({{"name", r.name}, {"status", to_string(r.status)}, {"detail", r.detail}});
      j["suites"] = suites;
      j["ok"] = ok;
      out.text = dump(j);
      break;
    }
    case Format::Tsv:
      out.text = tsv({"suite", "status", "detail"});
      for (const auto& r : results) out.text += tsv({r.name, to_string(r.status), r.detail});
      break;
    case Format::Dot: unsupported(spec);
  }
  return out;
}

}  // namespace

Result execute(const JobSpec& spec) {
  if (spec.command == "verify") return cmd_verify(spec);
  if (spec.perturb) throw std::invalid_argument("--perturb only applies to verify");
  if (spec.command == "ihat") return {kExitOk, cmd_ihat(spec)};
  if (spec.command == "phi") return {kExitOk, cmd_phi(spec)};
  if (spec.command == "euler") return {kExitOk, cmd_euler(spec)};
  if (spec.command == "w0") return {kExitOk, cmd_w0(spec)};
  if (spec.command == "compatible") return {kExitOk, cmd_compatible(spec)};
  if (spec.command == "ar") return {kExitOk, cmd_ar(spec)};
  throw std::invalid_argument("unknown command '" + spec.command + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coxeter elements, the periodic quiver I-hat and Auslander-Reiten quivers of ADE type", "coxar"};
  app.require_subcommand(1);

  JobSpec spec;
  std::string positional_type, type_flag, coxeter, pi, format, out_path, perturb;
  int window = 0;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"ihat", "the periodic quiver I-hat with tau-orbits and parity"},
      {"phi", "the bijection from roots to I-hat"},
      {"euler", "Euler form on simple roots, on the beta basis and on I-hat"},
      {"w0", "reduced word for the longest element read off I-hat"},
      {"compatible", "simple systems compatible with C, by orientation class"},
      {"ar", "Auslander-Reiten quiver with dimension vectors"},
      {"verify", "run every invariant suite"},
  };
  for (const auto& [name, description] : commands) {
    CLI::App* sub = app.add_subcommand(name, description);
    sub->add_option("dynkin", positional_type, "Dynkin type, e.g. A5, D4, E6");
    sub->add_option("--type,-t", type_flag, "Dynkin type (alternative to the positional argument)");
    sub->add_option("--coxeter,-c", coxeter, "word \"1 2 3\" or orientation \"1>2 2>3\"; default s_1...s_r");
    sub->add_option("--pi", pi, "witness word w with Pi = w(Pi_ref); must be compatible with C");
    sub->add_option("--format,-f", format, "json, tsv or dot")->check(CLI::IsMember({"json", "tsv", "dot"}));
    sub->add_option("--out,-o", out_path, "write to a file instead of stdout");
    sub->add_option("--seed", spec.seed, "seed for sampled checks");
    sub->add_option("--window", window, "ZI radius drawn around the AR quiver")->check(CLI::PositiveNumber);
    if (name == "verify")
      sub->add_option("--perturb", perturb, "flip one bit of a golden table")->check(CLI::IsMember(perturbable_tables()));
  }

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  spec.command = sub->get_name();
  if (!positional_type.empty() && !type_flag.empty() && positional_type != type_flag) {
    err << "coxar: conflicting Dynkin types '" << positional_type << "' and '" << type_flag << "'\n";
    return kExitUsage;
  }
  spec.dynkin = type_flag.empty() ? positional_type : type_flag;
  if (spec.dynkin.empty()) {
    err << "coxar: a Dynkin type is required (e.g. `coxar " << spec.command << " A4`)\n";
    return kExitUsage;
  }
  auto given = [&](const char* option) { return sub->count(option) > 0; };
  if (given("--coxeter")) spec.coxeter = coxeter;
  if (given("--pi")) spec.pi = pi;
  if (given("--format")) spec.format = format == "json" ? Format::Json : format == "tsv" ? Format::Tsv : Format::Dot;
  if (given("--out")) spec.out = out_path;
  if (given("--window")) spec.window = window;
  if (spec.command == "verify" && given("--perturb")) spec.perturb = perturb;

  Result result;
  try {
    result = execute(spec);
  } catch (const std::invalid_argument& e) {
    err << "coxar: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "coxar: " << e.what() << "\n";
    return kExitVerification;
  }

  if (spec.out) {
    std::ofstream file(*spec.out, std::ios::binary);
    if (!(file << result.text)) {
      err << "coxar: cannot write " << *spec.out << "\n";
      return kExitUsage;
    }
  } else {
    out << result.text;
  }
  return result.exit_code;
}

}  // namespace coxar::cli
