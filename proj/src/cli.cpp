#include "surgobs/cli.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <exception>
#include <fstream>
#include <functional>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "surgobs/obstruction.hpp"
#include "surgobs/plumbing.hpp"
#include "surgobs/seifert.hpp"

namespace surgobs::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitIndeterminate = 2;

struct Options {
  std::string format = "table";
  int verbosity = 0;

  Format fmt() const { return format == "json" ? Format::json : Format::table; }
};

std::string format_h1(const std::vector<Integer>& h1) {
  if (h1.empty()) return "0";
  std::string s;
  for (const Integer& d : h1) {
    if (!s.empty()) s += " + ";
    s += d == 0 ? "Z" : "Z/" + d.get_str();
  }
  return s;
}

std::string format_pair(std::pair<int, int> p) {
  return "(" + std::to_string(p.first) + ", " + std::to_string(p.second) + ")";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

// Plumbing graph analysis shared by the seifert and plumbing subcommands.
struct Analysis {
  plumbing::PlumbingGraph graph;
  plumbing::FormReport form;
  bool s1xs2 = false;
  struct Class {
    std::vector<std::string> support;
    Integer square;
    std::optional<int> mu;
  };
  std::vector<Class> classes;
  std::optional<std::pair<int, int>> rohlin;
  std::string verdict;
  std::optional<std::string> problem;  // why the Rohlin computation is indeterminate
};

Analysis analyze(const plumbing::PlumbingGraph& g) {
  Analysis a{g, plumbing::intersection_form(g), false, {}, std::nullopt, "", std::nullopt};
  a.s1xs2 = plumbing::boundary_is_homology_s1xs2(a.form);
  for (const plumbing::WuClass& nu : plumbing::wu_classes(g)) {
    Analysis::Class c{plumbing::support_ids(g, nu), plumbing::wu_square(g, nu), std::nullopt};
    try {
      c.mu = plumbing::rohlin_from_plumbing(g, a.form, nu);
    } catch (const plumbing::NonSphericalWu& e) {
      if (!a.problem) a.problem = e.what();
    } catch (const plumbing::IntegralityViolation& e) {
      if (!a.problem) a.problem = e.what();
    } catch (const plumbing::NotATree& e) {
      if (!a.problem) a.problem = e.what();
    }
    a.classes.push_back(std::move(c));
  }
  if (a.problem) {
    a.verdict = "indeterminate";
  } else if (a.s1xs2 && a.classes.size() == 2) {
    a.rohlin = std::make_pair(*a.classes[0].mu, *a.classes[1].mu);
    a.verdict = obstruction::rohlin_obstruction(*a.rohlin).obstructed() ? "obstructed"
                                                                         : "inconclusive";
  } else {
    a.verdict = "n/a";
  }
  return a;
}

Json graph_json(const plumbing::PlumbingGraph& g) {
  Json vs = Json::array();
  for (const plumbing::Vertex& v : g.vertices()) vs.push_back(Json{{"id", v.id}, {"weight", v.weight}});
  Json es = Json::array();
  for (const auto& [a, b] : g.edges()) es.push_back(Json::array({g.vertex(a).id, g.vertex(b).id}));
  Json j;
  j["vertices"] = std::move(vs);
  j["edges"] = std::move(es);
  return j;
}

Json analysis_json(const Analysis& a) {
  Json j;
  j["plumbing"] = graph_json(a.graph);
  Json form;
  form["b_plus"] = a.form.b_plus;
  form["b_zero"] = a.form.b_zero;
  form["b_minus"] = a.form.b_minus;
  form["sigma"] = a.form.sigma;
  form["det"] = a.form.det.get_str();
  j["form"] = std::move(form);
  Json h1 = Json::array();
  for (const Integer& d : a.form.h1) h1.push_back(d.get_str());
  j["h1"] = std::move(h1);
  j["homology_s1xs2"] = a.s1xs2;
  Json classes = Json::array();
  for (const Analysis::Class& c : a.classes) {
    Json e;
    e["support"] = c.support;
    e["square"] = c.square.get_str();
    e["mu"] = c.mu ? Json(*c.mu) : Json(nullptr);
    classes.push_back(std::move(e));
  }
  j["wu_classes"] = std::move(classes);
  j["rohlin"] = a.rohlin ? Json::array({a.rohlin->first, a.rohlin->second}) : Json(nullptr);
  j["verdict"] = a.verdict;
  if (a.problem) j["reason"] = *a.problem;
  return j;
}

void analysis_table(std::ostream& out, const Analysis& a, int verbosity) {
  out << "plumbing:\n";
  for (const plumbing::Vertex& v : a.graph.vertices())
    out << "  vertex " << v.id << ' ' << v.weight << '\n';
  for (const auto& [x, y] : a.graph.edges())
    out << "  edge " << a.graph.vertex(x).id << ' ' << a.graph.vertex(y).id << '\n';
  if (verbosity > 0) out << "intersection form:\n" << a.form.q.matrix();
  out << "form: b+ = " << a.form.b_plus << ", b0 = " << a.form.b_zero << ", b- = " << a.form.b_minus
      << ", sigma = " << a.form.sigma << ", det = " << a.form.det << '\n';
  out << "h1: " << format_h1(a.form.h1) << '\n';
  out << "wu classes: " << a.classes.size() << '\n';
  for (const Analysis::Class& c : a.classes) {
    out << "  {" << join(c.support, ", ") << "}: square " << c.square << ", mu ";
    if (c.mu)
      out << *c.mu;
    else
      out << '?';
    out << '\n';
  }
  if (a.problem) out << "reason: " << *a.problem << '\n';
  out << "rohlin: ";
  if (a.rohlin) {
    out << format_pair(*a.rohlin);
  } else if (a.problem) {
    out << "indeterminate";
  } else {
    out << "n/a";
  }
  out << "; verdict: " << a.verdict << '\n';
}

int analysis_exit(const Analysis& a) { return a.problem ? kExitIndeterminate : kExitOk; }

template <class F>
auto with_input(const std::string& path, std::istream& in, F&& f) {
  if (path.empty() || path == "-") return f(in);
  std::ifstream file(path);
  if (!file) throw UsageError("cannot open '" + path + "'");
  return f(file);
}

int cmd_seifert(const std::string& path, const Options& o, std::istream& in, std::ostream& out) {
  const seifert::SeifertData data =
      with_input(path, in, [](std::istream& s) { return seifert::read_seifert(s); });
  std::vector<seifert::NormalizationStep> trace;
  const seifert::NormalizedSeifertData nf = seifert::normalize(data, &trace);
  const Analysis a = analyze(seifert::build_plumbing(nf));

  if (o.fmt() == Format::json) {
    Json s;
    s["input"] = seifert::format_seifert(data.e, data.slopes);
    Json steps = Json::array();
    for (const auto& st : trace)
      steps.push_back(Json{{"slope", st.slope_before.fraction()},
                           {"absorbed", st.absorbed.get_str()},
                           {"removed", st.removed}});
    s["normalization"] = std::move(steps);
    s["normal_form"] = seifert::format_seifert(nf.e, nf.slopes);
    s["euler_number"] = seifert::euler_number(nf).fraction();
    Json j;
    j["seifert"] = std::move(s);
    j["analysis"] = analysis_json(a);
    out << j.dump(2) << '\n';
  } else {
    out << "seifert: " << seifert::format_seifert(data.e, data.slopes) << '\n';
    out << "normalization:\n";
    for (const auto& st : trace) {
      out << "  " << st.slope_before << ": absorbed " << st.absorbed;
      if (st.removed) out << ", removed";
      out << '\n';
    }
    out << "normal form: " << seifert::format_seifert(nf.e, nf.slopes) << '\n';
    out << "euler number: " << seifert::euler_number(nf) << '\n';
    analysis_table(out, a, o.verbosity);
  }
  return analysis_exit(a);
}

int cmd_plumbing(const std::string& path, const Options& o, std::istream& in, std::ostream& out) {
  const plumbing::PlumbingGraph g =
      with_input(path, in, [](std::istream& s) { return plumbing::read_plumbing(s); });
  const Analysis a = analyze(g);
  if (o.fmt() == Format::json) {
    Json j;
    j["analysis"] = analysis_json(a);
    out << j.dump(2) << '\n';
  } else {
    analysis_table(out, a, o.verbosity);
  }
  return analysis_exit(a);
}

// Evaluates reports concurrently and hands them to `emit` in ascending k.
void sweep(const std::string& family, long a, long b,
           const std::function<void(const obstruction::ObstructionReport&)>& emit) {
  const std::size_t n = static_cast<std::size_t>(b - a + 1);
  const auto driver = family == "Mk" ? &obstruction::family_Mk : &obstruction::family_Nk;
  std::vector<std::optional<obstruction::ObstructionReport>> results(n);
  std::vector<std::exception_ptr> errors(n);
  std::vector<bool> done(n, false);
  std::mutex m;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};

  const std::size_t workers =
      std::min<std::size_t>(n, std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        std::optional<obstruction::ObstructionReport> r;
        std::exception_ptr e;
        try {
          r = driver(a + static_cast<long>(i));
        } catch (...) {
          e = std::current_exception();
        }
        {
          std::lock_guard lock(m);
          results[i] = std::move(r);
          errors[i] = e;
          done[i] = true;
        }
        cv.notify_all();
      }
    });
  }

  for (std::size_t i = 0; i < n; ++i) {
    std::unique_lock lock(m);
    cv.wait(lock, [&] { return done[i]; });
    if (errors[i]) {
      next = n;
      lock.unlock();
      std::rethrow_exception(errors[i]);
    }
    obstruction::ObstructionReport r = std::move(*results[i]);
    results[i].reset();
    lock.unlock();
    emit(r);
  }
}

std::string verdict_summary(const obstruction::ObstructionReport& r) {
  std::vector<std::string> kinds;
  for (const obstruction::Verdict& v : r.verdicts) kinds.push_back(obstruction::to_string(v.kind));
  return join(kinds, ",");
}

int cmd_family(const std::string& family, const std::string& range, const Options& o,
               std::ostream& out) {
  if (family != "Mk" && family != "Nk") throw UsageError("unknown family '" + family + "'");
  if (range.empty()) throw UsageError("missing k range");
  const auto [a, b] = parse_k_range(range);

  long count = 0;
  long obstructed = 0;
  bool indeterminate = false;
  const bool json = o.fmt() == Format::json;
  if (!json) {
    if (family == "Mk")
      out << "k\td_1/2\td_-1/2\tv0\tv0_dual\tverdict\n";
    else
      out << "k\tseifert\tsigma\trohlin\tweight_one\tverdict\n";
  }
  sweep(family, a, b, [&](const obstruction::ObstructionReport& r) {
    ++count;
    if (r.obstructed()) ++obstructed;
    for (const obstruction::Verdict& v : r.verdicts)
      if (v.kind == obstruction::VerdictKind::indeterminate) indeterminate = true;
    if (json) {
      out << obstruction::to_json(r).dump() << '\n';
    } else if (family == "Mk") {
      out << r.k << '\t' << r.d_terms->d_half << '\t' << r.d_terms->d_minus_half << '\t' << *r.v0
          << '\t' << *r.v0_dual << '\t' << verdict_summary(r) << '\n';
    } else {
      out << r.k << '\t' << *r.seifert << '\t' << *r.sigma << '\t'
          << (r.rohlin ? format_pair(*r.rohlin) : std::string("indeterminate")) << '\t'
          << to_string(*r.weight_one) << '\t' << verdict_summary(r) << '\n';
    }
    if (o.verbosity > 0 && !json)
      for (const obstruction::Verdict& v : r.verdicts) out << "  " << v.reason << '\n';
  });
  if (json) {
    Json s;
    s["family"] = family;
    s["count"] = count;
    s["obstructed"] = obstructed;
    out << Json{{"summary", s}}.dump() << '\n';
  } else {
    out << "summary: " << obstructed << " of " << count << " obstructed\n";
  }
  return indeterminate ? kExitIndeterminate : kExitOk;
}

int cmd_cfk(const std::string& mode, const std::string& expr, const std::string& ambient,
            int sign, const Options& o, std::ostream& out) {
  const cfk::BifilteredComplex c = parse_complex_expr(expr, std::filesystem::current_path());
  const bool json = o.fmt() == Format::json;
  if (mode == "show" || mode == "reduce") {
    const cfk::BifilteredComplex shown = mode == "reduce" ? cfk::reduce(c) : c;
    if (json) {
      Json gens = Json::array();
      for (const cfk::Generator& g : shown.generators())
        gens.push_back(Json{{"id", g.id}, {"maslov", g.maslov.fraction()}, {"alexander", g.alexander}});
      Json arrows = Json::array();
      for (const cfk::Arrow& ar : shown.arrows())
        arrows.push_back(Json{{"src", shown.generators()[ar.src].id},
                              {"dst", shown.generators()[ar.dst].id},
                              {"u", ar.u}});
      out << Json{{"generators", gens}, {"arrows", arrows}}.dump(2) << '\n';
    } else {
      cfk::write_complex(out, shown);
    }
    return kExitOk;
  }

  if (!c.is_knot_like()) throw cfk::NotKnotLike("complex is not knot-like");
  const long v = cfk::v0(c);
  const long vd = cfk::v0(cfk::dual(c));
  Json j;
  j["v0"] = v;
  j["v0_dual"] = vd;
  if (mode == "v0") {
    // nothing further
  } else if (mode == "d0") {
    Rational amb;
    try {
      amb = Rational::parse(ambient);
    } catch (const std::exception&) {
      throw UsageError("bad --ambient '" + ambient + "'");
    }
    const cfk::HalfCorrectionTerms d = cfk::d_zero_surgery(c, amb);
    j["ambient_d"] = amb.fraction();
    j["d_half"] = d.d_half.fraction();
    j["d_minus_half"] = d.d_minus_half.fraction();
  } else if (mode == "d1") {
    if (sign != 1 && sign != -1) throw UsageError("--sign must be 1 or -1");
    j["sign"] = sign;
    j["d"] = cfk::d_pm1_surgery(c, sign).fraction();
  } else {
    throw UsageError("unknown cfk mode '" + mode + "' (v0, d0, d1, show, reduce)");
  }

  if (json) {
    out << j.dump() << '\n';
    return kExitOk;
  }
  if (mode == "v0" && o.verbosity == 0) {
    out << v << '\n';
    return kExitOk;
  }
  out << "v0: " << v << '\n' << "v0_dual: " << vd << '\n';
  if (mode == "d0")
    out << "d: (" << j["d_half"].get<std::string>() << ", " << j["d_minus_half"].get<std::string>()
        << ")\n";
  if (mode == "d1") out << "d: " << j["d"].get<std::string>() << '\n';
  return kExitOk;
}

// CLI11 reads "-2/1" as a flag; glue such values onto their option.
std::vector<std::string> glue_negative_values(const std::vector<std::string>& args) {
  static const std::vector<std::string> valued{"--ambient", "--sign", "--k", "--format"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i + 1 < args.size() && std::find(valued.begin(), valued.end(), args[i]) != valued.end() &&
        args[i + 1].size() > 1 && args[i + 1][0] == '-') {
      out.push_back(args[i] + "=" + args[i + 1]);
      ++i;
    } else {
      out.push_back(args[i]);
    }
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Homology cobordism obstructions to 0-surgery on a knot", "surgobs"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"table", "json"}));
    sub->add_flag("-v,--verbose", o.verbosity, "More detail");
  };

  std::string seifert_path;
  CLI::App* seifert_cmd = app.add_subcommand("seifert", "Analyze Seifert invariants");
  seifert_cmd->add_option("file", seifert_path, "Input file, '-' or omitted for stdin");
  common(seifert_cmd);

  std::string plumbing_path;
  CLI::App* plumbing_cmd = app.add_subcommand("plumbing", "Analyze a plumbing graph");
  plumbing_cmd->add_option("file", plumbing_path, "Input file, '-' or omitted for stdin");
  common(plumbing_cmd);

  std::string family;
  std::string range;
  CLI::App* family_cmd = app.add_subcommand("family", "Sweep the Mk or Nk family");
  family_cmd->add_option("name", family, "Mk or Nk")->required();
  family_cmd->add_option("range,--k", range, "k or A..B");
  common(family_cmd);

  std::string mode;
  std::string expr;
  std::string ambient = "0";
  int sign = 1;
  CLI::App* cfk_cmd = app.add_subcommand("cfk", "Invariants of a knot complex expression");
  cfk_cmd->add_option("mode", mode, "v0, d0, d1, show or reduce")->required();
  cfk_cmd->add_option("expr", expr, "Complex expression, e.g. \"T2 7 * mirror(T2 3)\"")->required();
  cfk_cmd->add_option("--ambient", ambient, "d of the ambient homology sphere (p/q)");
  cfk_cmd->add_option("--sign", sign, "Surgery coefficient for d1 (1 or -1)");
  common(cfk_cmd);

  std::vector<std::string> args = glue_negative_values(raw_args);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  try {
    if (*seifert_cmd) return cmd_seifert(seifert_path, o, in, out);
    if (*plumbing_cmd) return cmd_plumbing(plumbing_path, o, in, out);
    if (*family_cmd) return cmd_family(family, range, o, out);
    return cmd_cfk(mode, expr, ambient, sign, o, out);
  } catch (const cfk::NotKnotLike& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const plumbing::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const plumbing::StructuralError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace surgobs::cli
