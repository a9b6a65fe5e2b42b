// Command-line surface for the graph / algebra / group pipeline:
// constructions, isomorphism checks and the verification suites.
//
// Exit codes: 0 success (isomorphic, for check-iso), 1 not isomorphic,
// 2 any error (bad file, bad flag value, violated precondition).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hiso/cayley.hpp"
#include "hiso/gamma.hpp"
#include "hiso/graph_iso.hpp"
#include "hiso/halgebra.hpp"
#include "hiso/hgroup.hpp"
#include "hiso/selftest.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

hiso::AlgebraKind parse_kind(const std::string& kind) {
  if (kind == "lie") return hiso::AlgebraKind::lie;
  if (kind == "commutative") return hiso::AlgebraKind::commutative;
  throw std::runtime_error("unknown --kind '" + kind + "' (want lie|commutative)");
}

int cmd_graph2algebra(const std::string& file, uint32_t p, const std::string& kind) {
  hiso::Graph g = hiso::Graph::parse(read_file(file));
  hiso::Prime prime(p);
  hiso::HAlgebra a = parse_kind(kind) == hiso::AlgebraKind::lie
                         ? hiso::HAlgebra::h_algebra(g, prime)
                         : hiso::HAlgebra::graph_algebra(g, prime);
  std::cout << hiso::algebra_to_text(a);
  return 0;
}

int cmd_graph2group(const std::string& file, uint32_t p) {
  hiso::Graph g = hiso::Graph::parse(read_file(file));
  hiso::HGroup grp(hiso::HAlgebra::h_algebra(g, hiso::Prime(p)));
  std::cout << hiso::export_presentation(grp).to_text();
  return 0;
}

int cmd_group2graph(const std::string& file, bool simple) {
  hiso::CayleyGroup g = hiso::CayleyGroup::parse(read_file(file));
  hiso::DiMultigraph m = hiso::build_gamma(g);
  if (simple) {
    std::cout << hiso::encode_simple(m).to_text();
  } else {
    std::cout << m.to_text();
  }
  return 0;
}

void print_graph_witness(const hiso::VertexBijection& w) {
  std::cout << "witness:";
  for (int i = 0; i < w.size(); ++i) std::cout << ' ' << w(i) + 1;
  std::cout << '\n';
}

void print_multigraph_witness(const hiso::VertexBijection& w,
                              const hiso::DiMultigraph& m2) {
  std::cout << "witness:";
  for (int i = 0; i < w.size(); ++i) {
    int img = w(i);
    if (img < m2.element_count()) {
      std::cout << " e" << img + 1;
    } else {
      std::cout << " t" << img - m2.element_count() + 1;
    }
  }
  std::cout << '\n';
}

int cmd_check_iso(const std::string& kind, const std::string& file1,
                  const std::string& file2) {
  if (kind == "graph") {
    hiso::Graph g1 = hiso::Graph::parse(read_file(file1));
    hiso::Graph g2 = hiso::Graph::parse(read_file(file2));
    auto w = hiso::graph_iso(g1, g2);
    if (!w) {
      std::cout << "NON-ISO\n";
      return 1;
    }
    std::cout << "ISO\n";
    print_graph_witness(*w);
    return 0;
  }
  if (kind == "multigraph") {
    hiso::DiMultigraph m1 = hiso::DiMultigraph::parse(read_file(file1));
    hiso::DiMultigraph m2 = hiso::DiMultigraph::parse(read_file(file2));
    auto w = hiso::multigraph_iso(m1, m2);
    if (!w) {
      std::cout << "NON-ISO\n";
      return 1;
    }
    std::cout << "ISO\n";
    print_multigraph_witness(*w, m2);
    return 0;
  }
  if (kind == "group-small") {
    hiso::CayleyGroup g1 = hiso::CayleyGroup::parse(read_file(file1));
    hiso::CayleyGroup g2 = hiso::CayleyGroup::parse(read_file(file2));
    auto w = hiso::group_iso_small(g1, g2);
    if (!w) {
      std::cout << "NON-ISO\n";
      return 1;
    }
    std::cout << "ISO\n";
    std::cout << "witness:";
    for (int img : *w) std::cout << ' ' << img + 1;
    std::cout << '\n';
    return 0;
  }
  throw std::runtime_error("unknown kind '" + kind +
                           "' (want graph|multigraph|group-small)");
}

int cmd_verify(const std::string& suite, uint32_t p, int max_n, uint64_t seed) {
  hiso::SuiteOptions opt;
  opt.p = p;
  opt.max_n = max_n;
  opt.seed = seed;
  std::vector<hiso::CheckResult> results = hiso::run_suite(suite, opt);
  if (suite == "sizes" || suite == "all") {
    std::vector<hiso::SizeReport> reports;
    hiso::check_size_bounds(max_n, &reports);
    for (const auto& r : reports) {
      std::cout << "SIZE " << r.input_kind << ": " << r.input_size << " -> "
                << r.output_kind << " " << r.output_size << " (" << r.bound
                << (r.bound_satisfied ? ": ok" : ": VIOLATED") << ")\n";
    }
  }
  int pass = 0, fail = 0;
  for (const auto& r : results) {
    if (r.passed) {
      ++pass;
      std::cout << "PASS " << r.name << ": " << r.detail << '\n';
    } else {
      ++fail;
      std::cout << "FAIL " << r.name << ": " << r.detail << '\n';
    }
  }
  std::cout << "RESULT pass=" << pass << " fail=" << fail << '\n';
  return fail == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph / nilpotent-algebra / p-group pipeline"};
  app.require_subcommand(1);

  std::string file1, file2, kind = "lie", iso_kind, suite = "all";
  uint32_t p = 3;
  int max_n = 4;
  uint64_t seed = 0;
  bool simple = false;

  CLI::App* g2a = app.add_subcommand(
      "graph2algebra", "Structure constants of the algebra of a graph");
  g2a->add_option("file", file1, "graph file")->required();
  g2a->add_option("--p", p, "odd prime modulus base (default 3)");
  g2a->add_option("--kind", kind, "lie|commutative (default lie)");

  CLI::App* g2g = app.add_subcommand(
      "graph2group", "Finite presentation of the group of a graph");
  g2g->add_option("file", file1, "graph file")->required();
  g2g->add_option("--p", p, "odd prime modulus base (default 3)");

  CLI::App* gg = app.add_subcommand(
      "group2graph", "Two-sorted multigraph of a multiplication table");
  gg->add_option("file", file1, "multiplication table file")->required();
  gg->add_flag("--simple", simple, "emit the simple-graph encoding instead");

  CLI::App* ci = app.add_subcommand("check-iso", "Decide isomorphism of two inputs");
  ci->add_option("kind", iso_kind, "graph|multigraph|group-small")->required();
  ci->add_option("file1", file1, "first input")->required();
  ci->add_option("file2", file2, "second input")->required();

  CLI::App* vf = app.add_subcommand("verify", "Run a named verification suite");
  vf->add_option("suite,--suite", suite, "all|algebra|group|gamma|sizes (default all)");
  vf->add_option("--p", p, "odd prime modulus base (default 3)");
  vf->add_option("--max-n", max_n, "graph-size ceiling (default 4)");
  vf->add_option("--seed", seed, "seed for randomized corpora (default 0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (g2a->parsed()) return cmd_graph2algebra(file1, p, kind);
    if (g2g->parsed()) return cmd_graph2group(file1, p);
    if (gg->parsed()) return cmd_group2graph(file1, simple);
    if (ci->parsed()) return cmd_check_iso(iso_kind, file1, file2);
    if (vf->parsed()) return cmd_verify(suite, p, max_n, seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
