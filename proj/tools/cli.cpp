#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "wirecube/embedding.hpp"
#include "wirecube/host.hpp"
#include "wirecube/parallel.hpp"
#include "wirecube/search.hpp"
#include "wirecube/verify.hpp"
#include "wirecube/wirelength.hpp"

namespace wirecube::cli {

namespace {

using nlohmann::json;

enum class Format { Json, Tsv };

const std::map<std::string, Format> kFormats{{"json", Format::Json}, {"tsv", Format::Tsv}};

std::string kind_name(FactorKind k) { return k == FactorKind::Cycle ? "cycle" : "path"; }

std::string tuple_text(const Coordinate& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(x[i]);
  }
  return s + ")";
}

json embedding_json(const Embedding& e) {
  return json{{"host", e.host().to_string()}, {"map", std::vector<FlatIndex>(e.map().begin(), e.map().end())}};
}

json report_json(const WirelengthReport& r) {
  json j{{"method", std::string(to_string(r.method))}, {"total", r.total}};
  if (r.method == WirelengthMethod::CutSum) {
    json cuts = json::array();
    for (const auto& [cut, t] : r.per_cut) cuts.push_back({{"factor", cut.factor + 1}, {"index", cut.index}, {"theta", t}});
    j["per_cut"] = std::move(cuts);
  }
  return j;
}

// ---- formula ---------------------------------------------------------------

struct FormulaArgs {
  std::vector<std::string> hosts;
  Format format = Format::Json;
};

int cmd_formula(const FormulaArgs& a, std::ostream& out) {
  std::vector<std::pair<HostSpec, FormulaResult>> rows;
  for (const auto& text : a.hosts) {
    HostSpec spec = parse_host(text);
    FormulaResult r = formula_wl(spec);
    rows.emplace_back(std::move(spec), std::move(r));
  }
  if (a.format == Format::Tsv) {
    out << "host\tn\tk\tterms\ttotal\n";
    for (const auto& [spec, r] : rows) {
      std::string terms;
      for (const auto& t : r.terms) terms += (terms.empty() ? "" : ",") + std::to_string(t.value);
      out << spec.to_string() << '\t' << spec.dim() << '\t' << spec.k() << '\t' << terms << '\t' << r.total << '\n';
    }
    return kOk;
  }
  json docs = json::array();
  for (const auto& [spec, r] : rows) {
    json terms = json::array();
    for (const auto& t : r.terms) {
      const HostFactor& f = spec.factor(t.factor);
      terms.push_back({{"factor", t.factor + 1}, {"kind", kind_name(f.kind)}, {"exponent", f.exponent}, {"value", t.value}});
    }
    docs.push_back({{"host", spec.to_string()}, {"n", spec.dim()}, {"total", r.total}, {"terms", std::move(terms)}});
  }
  out << (docs.size() == 1 ? docs[0] : docs).dump(2) << '\n';
  return kOk;
}

// ---- eval ------------------------------------------------------------------

struct EvalArgs {
  std::string host;
  std::string embedding = "gray";
  std::string method = "both";
  Format format = Format::Json;
};

Embedding resolve_embedding(const std::string& host_text, const std::string& source) {
  if (source.rfind("file:", 0) == 0) {
    Embedding e = read_embedding_file(source.substr(5));
    if (!host_text.empty() && !(parse_host(host_text) == e.host())) {
      throw std::invalid_argument("embedding file is for host " + e.host().to_string() + ", not " +
                                  parse_host(host_text).to_string());
    }
    return e;
  }
  if (host_text.empty()) throw std::invalid_argument("--host is required unless the embedding comes from a file");
  const HostSpec spec = parse_host(host_text);
  if (source == "gray") return gray_embedding(spec);
  if (source.rfind("random:", 0) == 0) {
    const std::string seed = source.substr(7);
    std::size_t used = 0;
    std::uint64_t value = 0;
    try {
      value = std::stoull(seed, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (seed.empty() || used != seed.size()) throw std::invalid_argument("bad random seed '" + seed + "'");
    return random_embedding(spec, value);
  }
  throw std::invalid_argument("embedding must be gray, random:<seed> or file:<path>");
}

int cmd_eval(const EvalArgs& a, std::ostream& out) {
  const Embedding e = resolve_embedding(a.host, a.embedding);
  std::vector<WirelengthReport> reports;
  if (a.method == "direct" || a.method == "both") reports.push_back(wl_direct(e));
  if (a.method == "cut" || a.method == "both") reports.push_back(wl_cut(e));
  const bool both = reports.size() == 2;
  const bool agree = !both || reports[0].total == reports[1].total;

  if (a.format == Format::Tsv) {
    out << "host\tembedding\tmethod\ttotal\n";
    for (const auto& r : reports) {
      out << e.host().to_string() << '\t' << a.embedding << '\t' << to_string(r.method) << '\t' << r.total << '\n';
    }
  } else {
    json doc{{"host", e.host().to_string()}, {"embedding", a.embedding}};
    json list = json::array();
    for (const auto& r : reports) list.push_back(report_json(r));
    doc["reports"] = std::move(list);
    if (both) doc["agree"] = agree;
    if (formula_applies(e.host())) doc["formula"] = formula_wl(e.host()).total;
    out << doc.dump(2) << '\n';
  }
  return agree ? kOk : kFailure;
}

// ---- gray ------------------------------------------------------------------

struct GrayArgs {
  std::string host;
  std::string out_path;
  std::vector<std::string> vertices;
  Format format = Format::Json;
};

int cmd_gray(const GrayArgs& a, std::ostream& out) {
  const HostSpec spec = parse_host(a.host);
  const Embedding e = gray_embedding(spec);
  if (!a.out_path.empty()) write_embedding_file(a.out_path, e);
  const std::uint64_t wl = wl_direct(e).total;

  struct Located {
    std::string bits;
    Coordinate coordinate;
    FlatIndex flat;
  };
  std::vector<Located> located;
  for (const auto& bits : a.vertices) {
    if (bits.size() != static_cast<std::size_t>(spec.dim())) {
      throw std::invalid_argument("vertex '" + bits + "' needs " + std::to_string(spec.dim()) + " bits for " +
                                  spec.to_string());
    }
    const Vertex v = parse_vertex_bits(bits);
    located.push_back({bits, gray_coordinate(spec, v), e(v)});
  }

  if (a.format == Format::Tsv) {
    out << "host\twirelength\tfile\n" << spec.to_string() << '\t' << wl << '\t' << a.out_path << '\n';
    if (!located.empty()) out << "vertex\tcoordinate\tflat\n";
    for (const auto& l : located) out << l.bits << '\t' << tuple_text(l.coordinate) << '\t' << l.flat << '\n';
    return kOk;
  }
  json doc{{"host", spec.to_string()}, {"wirelength", wl}};
  if (!a.out_path.empty()) doc["file"] = a.out_path;
  if (!located.empty()) {
    json list = json::array();
    for (const auto& l : located) {
      list.push_back({{"vertex", l.bits}, {"coordinate", l.coordinate}, {"tuple", tuple_text(l.coordinate)}, {"flat", l.flat}});
    }
    doc["vertices"] = std::move(list);
  }
  out << doc.dump(2) << '\n';
  return kOk;
}

// ---- search ----------------------------------------------------------------

struct SearchArgs {
  std::string host;
  std::string method = "anneal";
  SearchBudget budget;
  double initial_temperature = 0.0;
  bool no_prune = false;
  bool no_gray_start = false;
  std::string out_path;
  Format format = Format::Json;
};

int cmd_search(SearchArgs a, std::ostream& out) {
  const HostSpec spec = parse_host(a.host);
  a.budget.method = a.method == "brute" ? SearchMethod::Brute : SearchMethod::Anneal;
  a.budget.prune_origin = !a.no_prune;
  a.budget.gray_start = !a.no_gray_start;
  if (a.initial_temperature > 0.0) a.budget.initial_temperature = a.initial_temperature;
  const SearchResult r = run_search(spec, a.budget);
  if (!a.out_path.empty()) write_embedding_file(a.out_path, r.best_embedding);
  const FormulaVerdict v = verdict(r);

  if (a.format == Format::Tsv) {
    out << "host\tmethod\tbest_wirelength\tformula\tverdict\tevaluations\n";
    out << spec.to_string() << '\t' << to_string(r.method) << '\t' << r.best_wirelength << '\t'
        << (r.formula_value ? std::to_string(*r.formula_value) : "") << '\t' << to_string(v) << '\t'
        << r.evaluations << '\n';
  } else {
    json doc{{"host", spec.to_string()},
             {"method", std::string(to_string(r.method))},
             {"best_wirelength", r.best_wirelength},
             {"evaluations", r.evaluations},
             {"verdict", std::string(to_string(v))},
             {"best_embedding", embedding_json(r.best_embedding)}};
    doc["formula"] = r.formula_value ? json(*r.formula_value) : json(nullptr);
    doc["matched_formula"] = r.matched_formula ? json(*r.matched_formula) : json(nullptr);
    if (r.method == SearchMethod::Anneal) {
      doc["best_restart"] = r.best_restart;
      doc["seed"] = a.budget.seed;
    }
    out << doc.dump(2) << '\n';
  }
  switch (v) {
    case FormulaVerdict::Below:
      return kFailure;
    case FormulaVerdict::Above:
      return kAbove;
    default:
      return kOk;
  }
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  int max_n = 0;
  std::vector<std::string> hosts;
  std::vector<std::string> embeddings;
  std::string depth = "quick";
  std::uint64_t seed = 1;
  std::uint32_t samples = 0;
  std::string out_dir = "counterexamples";
  Format format = Format::Json;
};

std::string file_safe(std::string s) {
  std::replace_if(s.begin(), s.end(), [](char c) { return !std::isalnum(static_cast<unsigned char>(c)); }, '_');
  return s;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  VerifyOptions options;
  options.depth = parse_depth(a.depth);
  options.seed = a.seed;
  options.samples = a.samples;

  std::vector<HostSpec> specs;
  for (const auto& h : a.hosts) specs.push_back(parse_host(h));
  if (a.max_n > 0 || (a.hosts.empty() && a.embeddings.empty())) {
    const int max_n = a.max_n > 0 ? a.max_n : 8;
    for (auto& s : enumerate_hosts(max_n, 3, 1)) specs.push_back(std::move(s));
  }

  std::vector<VerifyReport> reports(specs.size());
  parallel_for(specs.size(), [&](std::size_t i) { reports[i] = verify_spec(specs[i], options); });
  for (const auto& path : a.embeddings) reports.push_back(verify_embedding_file(path));

  bool passed = true;
  std::uint64_t agreement_cases = 0;
  std::uint64_t formula_matches = 0;
  std::uint64_t failed_checks = 0;
  json brute = json::object();
  for (auto& r : reports) {
    passed = passed && r.passed();
    if (const auto* c = r.find("engine_agreement"); c != nullptr && c->passed) agreement_cases += c->cases;
    if (const auto* c = r.find("gray_matches_formula"); c != nullptr && c->passed) ++formula_matches;
    if (r.brute_minimum) brute[r.subject] = *r.brute_minimum;
    for (auto& c : r.checks) {
      if (c.passed) continue;
      ++failed_checks;
      err << "FAIL " << r.subject << " " << c.name << ": " << c.detail << '\n';
      if (c.counterexample) {
        std::filesystem::create_directories(a.out_dir);
        const auto path = std::filesystem::path(a.out_dir) / (file_safe(r.subject) + "_" + c.name + ".json");
        write_embedding_file(path.string(), *c.counterexample);
        c.detail += " (counterexample: " + path.string() + ")";
      }
    }
  }

  if (a.format == Format::Tsv) {
    out << "subject\tcheck\tpassed\tcases\tdetail\n";
    for (const auto& r : reports) {
      for (const auto& c : r.checks) {
        out << r.subject << '\t' << c.name << '\t' << (c.passed ? "pass" : "FAIL") << '\t' << c.cases << '\t'
            << c.detail << '\n';
      }
    }
  } else {
    json list = json::array();
    for (const auto& r : reports) {
      json checks = json::array();
      for (const auto& c : r.checks) {
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}, {"detail", c.detail}});
      }
      json item{{"subject", r.subject}, {"passed", r.passed()}, {"checks", std::move(checks)}};
      if (r.brute_minimum) item["brute_minimum"] = *r.brute_minimum;
      list.push_back(std::move(item));
    }
    json doc{{"depth", a.depth},
             {"passed", passed},
             {"summary",
              {{"subjects", reports.size()},
               {"failed_checks", failed_checks},
               {"engine_agreement_cases", agreement_cases},
               {"formula_matches", formula_matches},
               {"brute_minima", brute}}},
             {"results", std::move(list)}};
    out << doc.dump(2) << '\n';
  }
  return passed ? kOk : kFailure;
}

void add_format(CLI::App* cmd, Format& format) {
  cmd->add_option("--format", format, "Output format")->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Wirelength of hypercube embeddings into products of paths and cycles", "wirecube"};
  app.require_subcommand(1);

  FormulaArgs formula;
  auto* f = app.add_subcommand("formula", "Closed-form minimum wirelength, one row per host");
  f->add_option("--host", formula.hosts, "Host spec such as C4xC4 (repeatable, or comma separated)")
      ->required()
      ->delimiter(',');
  add_format(f, formula.format);

  EvalArgs eval;
  auto* e = app.add_subcommand("eval", "Wirelength of one embedding");
  e->add_option("--host", eval.host, "Host spec");
  e->add_option("--embedding", eval.embedding, "gray | random:<seed> | file:<path>");
  e->add_option("--method", eval.method, "direct | cut | both")->check(CLI::IsMember({"direct", "cut", "both"}));
  add_format(e, eval.format);

  GrayArgs gray;
  auto* g = app.add_subcommand("gray", "Write the Gray code embedding and print its wirelength");
  g->add_option("--host", gray.host, "Host spec")->required();
  g->add_option("--out", gray.out_path, "Embedding file to write");
  g->add_option("--vertex", gray.vertices, "Print the image of this 0-1 vertex (repeatable)");
  add_format(g, gray.format);

  SearchArgs search;
  auto* s = app.add_subcommand("search", "Brute-force or annealing search for the minimum");
  s->add_option("--host", search.host, "Host spec")->required();
  s->add_option("--method", search.method, "brute | anneal")->check(CLI::IsMember({"brute", "anneal"}));
  s->add_option("--seed", search.budget.seed, "Random seed");
  s->add_option("--restarts", search.budget.restarts, "Annealing restarts");
  s->add_option("--iterations", search.budget.iterations_per_restart, "Moves per restart");
  s->add_option("--t0", search.initial_temperature, "Initial temperature (default 2n)");
  s->add_option("--cooling", search.budget.cooling_rate, "Geometric cooling factor");
  s->add_option("--max-vertices", search.budget.max_vertices, "Brute-force vertex limit (at most 10)");
  s->add_flag("--no-prune", search.no_prune, "Do not fix the image of vertex 0 in brute force");
  s->add_flag("--no-gray-start", search.no_gray_start, "Start every restart from a random embedding");
  s->add_option("--out", search.out_path, "Write the best embedding here");
  add_format(s, search.format);

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Run the invariant suites");
  v->add_option("--max-n", verify.max_n, "Check every host with up to 3 factors and n <= this");
  v->add_option("--hosts", verify.hosts, "Hosts to check (comma separated)")->delimiter(',');
  v->add_option("--embedding", verify.embeddings, "Embedding file to validate and check (repeatable)");
  v->add_option("--depth", verify.depth, "quick | full")->check(CLI::IsMember({"quick", "full"}));
  v->add_option("--seed", verify.seed, "Random seed");
  v->add_option("--samples", verify.samples, "Random embeddings per host (0 = depth default)");
  v->add_option("--out-dir", verify.out_dir, "Directory for counterexample embeddings");
  add_format(v, verify.format);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (f->parsed()) return cmd_formula(formula, out);
    if (e->parsed()) return cmd_eval(eval, out);
    if (g->parsed()) return cmd_gray(gray, out);
    if (s->parsed()) return cmd_search(search, out);
    if (v->parsed()) return cmd_verify(verify, out, err);
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace wirecube::cli
