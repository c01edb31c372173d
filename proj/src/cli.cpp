#include "edgepoly/cli.hpp"

#include "edgepoly/classifier.hpp"
#include "edgepoly/edge_polytopes.hpp"
#include "edgepoly/generators.hpp"
#include "edgepoly/graph_io.hpp"
#include "edgepoly/report_json.hpp"
#include "edgepoly/verification.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace edgepoly {

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

DirectedGraph read_graph(const std::string& path, std::istream& in) {
  try {
    if (path.empty() || path == "-") return parse_edge_list(in);
    std::ifstream file(path);
    if (!file) throw InputError("cannot open " + path);
    return parse_edge_list(file);
  } catch (const edgepoly::ParseError& e) {
    throw InputError(std::string(path.empty() || path == "-" ? "<stdin>" : path) + ": " + e.what());
  }
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string arc_list(const std::vector<Arc>& arcs) {
  std::string s;
  for (const auto& a : arcs) s += (s.empty() ? "" : " ") + to_string(a);
  return s;
}

std::string describe_witness(const Witness& w) {
  std::ostringstream out;
  auto v = witness_vertices(w);
  out << witness_kind(w) << " on (i1,i2,i3,i4) = (" << v[0] << "," << v[1] << "," << v[2] << "," << v[3]
      << "), arcs ";
  auto arcs = std::visit([](const auto& x) { return x.arcs(); }, w);
  out << arc_list({arcs.begin(), arcs.end()});
  return out.str();
}

void print_report(std::ostream& out, const ClassificationReport& r, const std::string& indent = "") {
  out << indent << "fano: " << yes_no(r.fano) << "\n"
      << indent << "reflexive_terminal: " << yes_no(r.reflexive_terminal) << "\n"
      << indent << "dim: " << r.dim << "\n"
      << indent << "smooth_qfactorial: " << yes_no(r.smooth_qfactorial) << "\n"
      << indent << "codim2_smooth: " << yes_no(r.codim2_smooth) << "\n"
      << indent << "codim3_qfactorial: " << yes_no(r.codim3_qfactorial) << "\n"
      << indent << "rigid: " << yes_no(r.rigid_certified) << "\n";
  if (r.witness) out << indent << "witness: " << describe_witness(*r.witness) << "\n";
  for (std::size_t i = 0; i < r.components.size(); ++i) {
    out << indent << "component " << i + 1 << ":\n";
    print_report(out, r.components[i], indent + "  ");
  }
}

std::string not_fano_message(const DirectedGraph& g) {
  auto arc = first_arc_off_cycle(g);
  return "not Fano: arc " + to_string(*arc) + " on no directed cycle";
}

int cmd_classify(const DirectedGraph& g, bool oracle, bool json, std::ostream& out) {
  if (g.arc_count() == 0) throw InputError("graph has no arcs");
  auto report = full_report(g, {oracle, RescuePolicy::ExcludePatternVertices});
  if (json) {
    out << report_to_json(report).dump(2) << "\n";
  } else if (!report.fano) {
    out << not_fano_message(g) << "\n" << "dim: " << report.dim << "\n";
  } else {
    print_report(out, report);
  }
  if (!report.fano) return kNotFano;
  return report.rigid_certified ? kRigid : kNotCertified;
}

int cmd_faces(const DirectedGraph& g, int k, std::ostream& out, std::ostream& err) {
  if (g.arc_count() == 0) throw InputError("graph has no arcs");
  if (!is_fano_graph(g)) {
    err << not_fano_message(g) << "\n";
    return kNotFano;
  }
  auto p = directed_edge_polytope(g);
  if (k < 0 || k >= p.dim()) {
    err << "warning: no proper faces of dimension " << k << " (polytope has dimension " << p.dim() << ")\n";
    return 0;
  }
  std::map<std::size_t, Arc> arc_of;
  for (const auto& a : g.arcs()) arc_of.emplace(*p.vertex_index(rho(a, g.vertex_count())), a);
  auto faces = p.faces_of_dim(k);
  out << faces.size() << " faces of dimension " << k << "\n";
  for (std::size_t i = 0; i < faces.size(); ++i) {
    std::vector<Arc> arcs;
    for (std::size_t v = 0; v < p.vertex_count(); ++v)
      if ((faces[i].vertices >> v) & 1U) arcs.push_back(arc_of.at(v));
    std::sort(arcs.begin(), arcs.end());
    out << "face " << i + 1 << ": " << arcs.size() << " vertices, arcs " << arc_list(arcs);
    if (k == 2) out << (arcs.size() == 3 ? " [triangle]" : arcs.size() == 4 ? " [square]" : " [polygon]");
    out << "\n";
  }
  return 0;
}

int cmd_verify(const VerifyOptions& options, std::ostream& out) {
  bool ok = true;
  run_verification(options, [&](const SweepResult& r) {
    out << format_sweep(r) << "\n";
    out.flush();
    ok = ok && r.passed();
  });
  out << "verify: " << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? 0 : 1;
}

int cmd_census(int max_n, const std::string& path, std::ostream& out) {
  if (max_n < 1 || max_n > 5) throw InputError("census supports --max-n between 1 and 5");
  std::ofstream file;
  std::ostream* sink = &out;
  if (!path.empty() && path != "-") {
    file.open(path);
    if (!file) throw InputError("cannot write " + path);
    sink = &file;
  }
  *sink << "n,arcs,dim,fano,smooth,rigid,square2faces\n";
  for (int n = 2; n <= max_n; ++n)
    for_each_canonical_digraph(n, DigraphFamily::Fano, [&](const DirectedGraph& g) {
      auto report = full_report(g);
      auto census = two_face_census(g);
      auto squares = census.count(4) ? census.at(4) : 0;
      *sink << n << "," << g.arc_count() << "," << report.dim << "," << int(report.fano) << ","
            << int(report.smooth_qfactorial) << "," << int(report.rigid_certified) << "," << squares << "\n";
    });
  if (file.is_open() && !file) throw InputError("error writing " + path);
  return 0;
}

std::vector<Arc> parse_cycle_spec(const std::string& spec, const DirectedGraph& g) {
  std::vector<Arc> arcs;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto dash = item.find('-');
    Arc a{};
    try {
      if (dash == std::string::npos) throw std::invalid_argument("missing '-'");
      std::size_t used = 0;
      a.tail = std::stoi(item.substr(0, dash), &used);
      if (used != dash) throw std::invalid_argument("trailing characters");
      auto rest = item.substr(dash + 1);
      a.head = std::stoi(rest, &used);
      if (used != rest.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::logic_error&) {
      throw InputError("cycle spec: cannot read arc '" + item + "', expected i-j");
    }
    if (a.tail < 1 || a.head < 1 || a.tail > g.vertex_count() || a.head > g.vertex_count() ||
        !g.has_arc(a.tail, a.head))
      throw InputError("cycle spec: " + to_string(a) + " is not an arc of the graph");
    arcs.push_back(a);
  }
  if (arcs.size() < 2) throw InputError("cycle spec needs at least two arcs");
  return arcs;
}

CycleWalk walk_from_arcs(const std::vector<Arc>& arcs) {
  auto touches = [](const Arc& a, Vertex v) { return a.tail == v || a.head == v; };
  Vertex start = touches(arcs[1], arcs[0].tail) && !touches(arcs[1], arcs[0].head) ? arcs[0].head : arcs[0].tail;
  CycleWalk w;
  Vertex cur = start;
  for (const auto& a : arcs) {
    w.vertices.push_back(cur);
    w.arcs.push_back(a);
    if (a.tail == cur) {
      w.forward.push_back(true);
      cur = a.head;
    } else if (a.head == cur) {
      w.forward.push_back(false);
      cur = a.tail;
    } else {
      throw InputError("cycle spec: arc " + to_string(a) + " does not continue the walk at vertex " +
                       std::to_string(cur));
    }
  }
  if (cur != start) throw InputError("cycle spec: the arcs do not close up into a cycle");
  auto sorted = w.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InputError("cycle spec: the walk repeats a vertex");
  return w;
}

int cmd_hyperplane(const DirectedGraph& g, const std::string& spec, std::ostream& out, std::ostream& err) {
  if (g.arc_count() == 0) throw InputError("graph has no arcs");
  if (!is_fano_graph(g)) {
    err << not_fano_message(g) << "\n";
    return kNotFano;
  }
  auto walk = walk_from_arcs(parse_cycle_spec(spec, g));
  auto cycle = as_homogeneous(walk, g.vertex_count());
  if (!cycle) {
    err << "error: not homogeneous (" << walk.forward_count() << " forward, " << walk.backward_count()
        << " backward arcs)\n";
    return 1;
  }
  SupportingHyperplane h;
  try {
    h = supporting_hyperplane(g, *cycle);
  } catch (const PreconditionError& e) {
    std::string what = e.what();
    auto colon = what.find(": ");
    err << "error: " << (colon == std::string::npos ? what : what.substr(colon + 2)) << "\n";
    return 1;
  }
  out << "a = (";
  for (std::size_t i = 0; i < h.coefficients.size(); ++i) out << (i ? ", " : "") << h.coefficients[i];
  out << ")\n";
  out << "face arcs: " << arc_list(h.face_arcs) << "\n";
  out << "postcondition: a.rho(e) <= 1 on all arcs, = 1 on the cycle: ok\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Directed edge polytopes: Fano, smoothness and rigidity checks", "edgepoly"};
  app.require_subcommand(1);

  std::string input = "-";
  bool oracle = false, json = false;
  auto* classify = app.add_subcommand("classify", "Classify the toric Fano variety of a digraph");
  classify->add_option("input", input, "Edge-list file, '-' for stdin");
  classify->add_flag("--oracle", oracle, "Recompute every verdict from the polytope");
  classify->add_flag("--json", json, "Print the report as JSON");

  int face_dim = 0;
  auto* faces = app.add_subcommand("faces", "List the faces of a given dimension");
  faces->add_option("input", input, "Edge-list file, '-' for stdin");
  faces->add_option("--dim", face_dim, "Face dimension")->required();

  VerifyOptions verify_options;
  std::string policy = "exclude-pattern";
  auto* verify = app.add_subcommand("verify", "Run the oracle equivalence sweeps");
  verify->add_option("--max-n", verify_options.max_n, "Largest vertex count (6 adds random samples)")
      ->check(CLI::Range(1, 6));
  verify->add_option("--seed", verify_options.seed, "Seed for the random samples");
  verify->add_option("--samples", verify_options.samples, "Random connected Fano graphs on 6 vertices");
  verify->add_option("--rescue-policy", policy, "C2 rescue vertices: exclude-pattern (j not in {i2,i4}) or unrestricted")
      ->check(CLI::IsMember({"exclude-pattern", "unrestricted"}));

  int census_n = 4;
  std::string census_out = "-";
  auto* census = app.add_subcommand("census", "CSV of all Fano digraphs up to isomorphism");
  census->add_option("--max-n", census_n, "Largest vertex count")->check(CLI::Range(1, 5));
  census->add_option("--out", census_out, "Output file, '-' for stdout");

  std::string cycle_spec;
  auto* hyperplane = app.add_subcommand("hyperplane", "Supporting hyperplane of a homogeneous cycle");
  hyperplane->add_option("input", input, "Edge-list file, '-' for stdin");
  hyperplane->add_option("--cycle", cycle_spec, "Cycle arcs in order, e.g. 1-2,3-2,3-4,1-4")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (classify->parsed()) return cmd_classify(read_graph(input, in), oracle, json, out);
    if (faces->parsed()) return cmd_faces(read_graph(input, in), face_dim, out, err);
    if (verify->parsed()) {
      verify_options.policy =
          policy == "unrestricted" ? RescuePolicy::Unrestricted : RescuePolicy::ExcludePatternVertices;
      return cmd_verify(verify_options, out);
    }
    if (census->parsed()) return cmd_census(census_n, census_out, out);
    if (hyperplane->parsed()) return cmd_hyperplane(read_graph(input, in), cycle_spec, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const OracleMismatch& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace edgepoly
