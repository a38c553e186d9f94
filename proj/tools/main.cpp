// Command-line front end for the B-series algebra shared library.  Talks to
// the core exclusively through the C API in bseries.h.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bseries.h"

namespace {

struct TreeDeleter {
  void operator()(bs_tree* tree) const { bs_tree_free(tree); }
};
struct SeriesDeleter {
  void operator()(bs_series* series) const { bs_series_free(series); }
};
struct FieldDeleter {
  void operator()(bs_field* field) const { bs_field_free(field); }
};
using TreePtr = std::unique_ptr<bs_tree, TreeDeleter>;
using SeriesPtr = std::unique_ptr<bs_series, SeriesDeleter>;
using FieldPtr = std::unique_ptr<bs_field, FieldDeleter>;

std::string take_string(char* text) {
  std::string out = text ? text : "";
  bs_string_free(text);
  return out;
}

[[noreturn]] void die(const std::string& message, int code = 2) {
  std::cerr << "error: " << message << "\n";
  std::exit(code);
}

TreePtr parse_tree_arg(const std::string& text) {
  bs_tree* tree = nullptr;
  if (bs_tree_parse(text.c_str(), &tree) != BS_OK) {
    die("tree \"" + text + "\": " + bs_last_error());
  }
  return TreePtr(tree);
}

std::string read_file(const std::string& path) {
  std::ifstream input(path, std::ios::binary);
  if (!input) die("cannot open " + path);
  std::ostringstream buffer;
  buffer << input.rdbuf();
  return buffer.str();
}

FieldPtr load_field(const std::string& path) {
  bs_field* field = nullptr;
  if (bs_field_from_json(read_file(path).c_str(), &field) != BS_OK) {
    die(path + ": " + bs_last_error());
  }
  return FieldPtr(field);
}

// Series specs: "identity", "exact-flow", "random[:SEED]" (class B),
// "random-star[:SEED]" (free empty coefficient), or a JSON file path.
SeriesPtr load_series(const std::string& spec, int max_order,
                      std::uint64_t default_seed) {
  bs_series* series = nullptr;
  bs_status status;
  auto seed_of = [&](const std::string& prefix) {
    if (spec.size() > prefix.size() && spec[prefix.size()] == ':') {
      return static_cast<std::uint64_t>(
          std::stoull(spec.substr(prefix.size() + 1)));
    }
    return default_seed;
  };
  if (spec == "identity") {
    status = bs_series_identity(max_order, &series);
  } else if (spec == "exact-flow") {
    status = bs_series_exact_flow(max_order, &series);
  } else if (spec == "random" || spec.rfind("random:", 0) == 0) {
    status = bs_series_random(seed_of("random"), max_order, 1, &series);
  } else if (spec == "random-star" || spec.rfind("random-star:", 0) == 0) {
    status = bs_series_random(seed_of("random-star"), max_order, 0, &series);
  } else {
    status = bs_series_from_json(read_file(spec).c_str(), &series);
  }
  if (status != BS_OK) die("series \"" + spec + "\": " + bs_last_error());
  return SeriesPtr(series);
}

std::string ones_vector(int dimension) {
  std::string out;
  for (int i = 0; i < dimension; ++i) {
    if (i > 0) out += ',';
    out += '1';
  }
  return out;
}

int print_report(const bs_report& report) {
  if (report.equal) {
    std::cout << "equal\n";
    return 0;
  }
  std::cout << "not equal at h^" << report.first_mismatch << "\n"
            << "lhs: " << (report.lhs ? report.lhs : "") << "\n"
            << "rhs: " << (report.rhs ? report.rhs : "") << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact B-series algebra on rooted trees: enumeration, pruning, "
               "composition, and verification over polynomial vector fields."};
  app.require_subcommand(1);

  // trees
  int trees_max_order = 4;
  std::string trees_format = "tsv";
  auto* cmd_trees = app.add_subcommand(
      "trees", "Table of canonical trees with sigma and gamma");
  cmd_trees->add_option("--max-order", trees_max_order, "Largest order listed")
      ->required();
  cmd_trees->add_option("--format", trees_format, "tsv or json")
      ->check(CLI::IsMember({"tsv", "json"}));

  // sigma / gamma
  std::string sigma_tree, gamma_tree;
  auto* cmd_sigma = app.add_subcommand("sigma", "Symmetry sigma(t)");
  cmd_sigma->add_option("tree", sigma_tree, "Tree in bracket form")->required();
  auto* cmd_gamma = app.add_subcommand("gamma", "Density gamma(t)");
  cmd_gamma->add_option("tree", gamma_tree, "Tree in bracket form")->required();

  // subtree / embeddings / assignments
  std::string sub_arg, host_arg;
  auto* cmd_subtree =
      app.add_subcommand("subtree", "Whether TSUB is a subtree of T");
  cmd_subtree->add_option("tsub", sub_arg)->required();
  cmd_subtree->add_option("t", host_arg)->required();
  auto* cmd_embeddings = app.add_subcommand(
      "embeddings", "All root-preserving embeddings of TSUB into T");
  cmd_embeddings->add_option("tsub", sub_arg)->required();
  cmd_embeddings->add_option("t", host_arg)->required();
  auto* cmd_assignments = app.add_subcommand(
      "assignments", "All assignment matrices for the pair (TSUB, T)");
  cmd_assignments->add_option("tsub", sub_arg)->required();
  cmd_assignments->add_option("t", host_arg)->required();

  // prune
  std::string prune_t, prune_sub, prune_method = "assignment";
  auto* cmd_prune = app.add_subcommand("prune", "Pruning T \\ TSUB");
  cmd_prune->add_option("t", prune_t)->required();
  cmd_prune->add_option("tsub", prune_sub)->required();
  cmd_prune->add_option("--method", prune_method, "assignment or embedding")
      ->check(CLI::IsMember({"assignment", "embedding"}));

  // compose
  std::string compose_a, compose_b, compose_out;
  int compose_order = 0;
  auto* cmd_compose =
      app.add_subcommand("compose", "Composition product of two series");
  cmd_compose->add_option("--a", compose_a, "Inner series (class B)")->required();
  cmd_compose->add_option("--b", compose_b, "Outer series")->required();
  cmd_compose->add_option("--max-order", compose_order)->required();
  cmd_compose->add_option("--out", compose_out, "Write JSON here instead of stdout");

  // eval
  std::string eval_series, eval_field, eval_y0;
  int eval_order = 0;
  auto* cmd_eval = app.add_subcommand(
      "eval", "Evaluate a B-series over a polynomial vector field");
  cmd_eval->add_option("--series", eval_series)->required();
  cmd_eval->add_option("--field", eval_field, "Vector-field JSON file")->required();
  cmd_eval->add_option("--y0", eval_y0, "Comma-separated rational start vector");
  cmd_eval->add_option("--max-order", eval_order)->required();

  // verify
  std::string verify_kind, verify_field, verify_a = "random",
              verify_b = "random-star", verify_tsub, verify_vectors, verify_y0,
              verify_semantics = "assignment";
  int verify_order = 0, verify_n = 1;
  std::uint64_t verify_seed = 1;
  auto* cmd_verify = app.add_subcommand(
      "verify", "Check one of the identities lemma1, prop1, theorem1");
  cmd_verify->add_option("kind", verify_kind, "lemma1, prop1, or theorem1")
      ->required()
      ->check(CLI::IsMember({"lemma1", "prop1", "theorem1"}));
  cmd_verify->add_option("--field", verify_field, "Vector-field JSON file")->required();
  cmd_verify->add_option("--max-order", verify_order)->required();
  cmd_verify->add_option("--a", verify_a, "Series spec for a (class B)");
  cmd_verify->add_option("--b", verify_b, "Series spec for b (theorem1)");
  cmd_verify->add_option("--tsub", verify_tsub, "Subtree t' (lemma1)");
  cmd_verify->add_option("--n", verify_n, "Derivative order (prop1)");
  cmd_verify->add_option("--vectors", verify_vectors,
                         "Test vectors v1;v2;... (prop1)");
  cmd_verify->add_option("--y0", verify_y0, "Expansion point");
  cmd_verify->add_option("--seed", verify_seed,
                         "Default seed for random series specs");
  cmd_verify->add_option("--semantics", verify_semantics,
                         "assignment or embedding pruning (lemma1)")
      ->check(CLI::IsMember({"assignment", "embedding"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (cmd_trees->parsed()) {
    bs_tree** list = nullptr;
    size_t count = 0;
    if (bs_tree_list(trees_max_order, &list, &count) != BS_OK) {
      die(bs_last_error());
    }
    std::ostringstream json;
    if (trees_format == "tsv") {
      std::cout << "order\ttree\tsigma\tgamma\n";
    } else {
      json << "[\n";
    }
    for (size_t i = 0; i < count; ++i) {
      char* text = nullptr;
      int64_t sigma = 0, gamma = 0;
      if (bs_tree_render(list[i], &text) != BS_OK ||
          bs_tree_symmetry(list[i], &sigma) != BS_OK ||
          bs_tree_density(list[i], &gamma) != BS_OK) {
        die(bs_last_error());
      }
      const std::string rendered = take_string(text);
      if (trees_format == "tsv") {
        std::cout << bs_tree_order(list[i]) << '\t' << rendered << '\t'
                  << sigma << '\t' << gamma << '\n';
      } else {
        json << "  {\"order\": " << bs_tree_order(list[i]) << ", \"tree\": \""
             << rendered << "\", \"sigma\": " << sigma
             << ", \"gamma\": " << gamma << "}"
             << (i + 1 < count ? ",\n" : "\n");
      }
    }
    bs_tree_list_free(list, count);
    if (trees_format == "json") {
      json << "]";
      std::cout << json.str() << "\n";
    }
    return 0;
  }

  if (cmd_sigma->parsed() || cmd_gamma->parsed()) {
    const bool want_sigma = cmd_sigma->parsed();
    const TreePtr tree = parse_tree_arg(want_sigma ? sigma_tree : gamma_tree);
    int64_t value = 0;
    const bs_status status = want_sigma
                                 ? bs_tree_symmetry(tree.get(), &value)
                                 : bs_tree_density(tree.get(), &value);
    if (status != BS_OK) die(bs_last_error());
    std::cout << value << "\n";
    return 0;
  }

  if (cmd_subtree->parsed()) {
    const TreePtr sub = parse_tree_arg(sub_arg);
    const TreePtr host = parse_tree_arg(host_arg);
    int result = 0;
    if (bs_is_subtree(sub.get(), host.get(), &result) != BS_OK) {
      die(bs_last_error());
    }
    std::cout << (result ? "true" : "false") << "\n";
    return 0;
  }

  if (cmd_embeddings->parsed() || cmd_assignments->parsed()) {
    const TreePtr sub = parse_tree_arg(sub_arg);
    const TreePtr host = parse_tree_arg(host_arg);
    char* text = nullptr;
    size_t count = 0;
    const bs_status status =
        cmd_embeddings->parsed()
            ? bs_embeddings(sub.get(), host.get(), &text, &count)
            : bs_assignments(sub.get(), host.get(), &text, &count);
    if (status != BS_OK) die(bs_last_error());
    const std::string body = take_string(text);
    if (!body.empty()) std::cout << body << "\n";
    return 0;
  }

  if (cmd_prune->parsed()) {
    const TreePtr host = parse_tree_arg(prune_t);
    const TreePtr sub = parse_tree_arg(prune_sub);
    char* text = nullptr;
    const bs_prune_method method = prune_method == "embedding"
                                       ? BS_PRUNE_EMBEDDING
                                       : BS_PRUNE_ASSIGNMENT;
    if (bs_prune(host.get(), sub.get(), method, &text) != BS_OK) {
      die(bs_last_error());
    }
    std::cout << take_string(text) << "\n";
    return 0;
  }

  if (cmd_compose->parsed()) {
    const SeriesPtr a = load_series(compose_a, compose_order, 1);
    const SeriesPtr b = load_series(compose_b, compose_order, 2);
    bs_series* product = nullptr;
    if (bs_series_compose(a.get(), b.get(), compose_order, &product) != BS_OK) {
      die(bs_last_error());
    }
    const SeriesPtr result(product);
    char* text = nullptr;
    if (bs_series_to_json(result.get(), &text) != BS_OK) die(bs_last_error());
    const std::string body = take_string(text);
    if (compose_out.empty()) {
      std::cout << body << "\n";
    } else {
      std::ofstream output(compose_out, std::ios::binary);
      if (!output) die("cannot write " + compose_out);
      output << body << "\n";
    }
    return 0;
  }

  if (cmd_eval->parsed()) {
    const FieldPtr field = load_field(eval_field);
    const SeriesPtr series = load_series(eval_series, eval_order, 1);
    const std::string y0 =
        eval_y0.empty() ? ones_vector(bs_field_dimension(field.get())) : eval_y0;
    char* text = nullptr;
    if (bs_series_evaluate(series.get(), field.get(), y0.c_str(), eval_order,
                           &text) != BS_OK) {
      die(bs_last_error());
    }
    std::cout << take_string(text) << "\n";
    return 0;
  }

  if (cmd_verify->parsed()) {
    const FieldPtr field = load_field(verify_field);
    const int dimension = bs_field_dimension(field.get());
    const std::string y0 = verify_y0.empty() ? ones_vector(dimension) : verify_y0;
    const SeriesPtr a = load_series(verify_a, verify_order, verify_seed);
    bs_report report{};
    bs_status status;
    if (verify_kind == "lemma1") {
      if (verify_tsub.empty()) die("verify lemma1 requires --tsub");
      const TreePtr sub = parse_tree_arg(verify_tsub);
      status = bs_verify_lemma1(field.get(), a.get(), sub.get(), y0.c_str(),
                                verify_order,
                                verify_semantics == "embedding" ? 1 : 0,
                                &report);
    } else if (verify_kind == "prop1") {
      std::string vectors = verify_vectors;
      if (vectors.empty()) {
        for (int i = 0; i < verify_n; ++i) {
          if (i > 0) vectors += ';';
          vectors += ones_vector(dimension);
        }
      }
      status = bs_verify_prop1(field.get(), a.get(), verify_n, vectors.c_str(),
                               y0.c_str(), verify_order, &report);
    } else {
      const SeriesPtr b = load_series(verify_b, verify_order, verify_seed + 1);
      status = bs_verify_theorem1(field.get(), a.get(), b.get(), y0.c_str(),
                                  verify_order, &report);
    }
    if (status != BS_OK) die(bs_last_error());
    const int code = print_report(report);
    bs_report_clear(&report);
    return code;
  }

  return 2;
}
