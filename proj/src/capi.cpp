#include "bseries.h"

#include <cstdlib>
#include <cstring>
#include <limits>
#include <string>
#include <vector>

#include "bseries/elementary.hpp"
#include "bseries/errors.hpp"
#include "bseries/forest.hpp"
#include "bseries/pruning.hpp"
#include "bseries/series.hpp"
#include "bseries/tree.hpp"
#include "bseries/verify.hpp"

struct bs_tree {
  bseries::Tree value;
};
struct bs_series {
  bseries::BSeries value;
};
struct bs_field {
  bseries::PolynomialVectorField value;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

char* copy_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

// Runs the body and maps exceptions onto status codes.
template <class Fn>
bs_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const bseries::ParseError& e) {
    set_error(e.what());
    return BS_ERROR_PARSE;
  } catch (const bseries::FormatError& e) {
    set_error(e.what());
    return BS_ERROR_FORMAT;
  } catch (const bseries::TruncationError& e) {
    set_error(e.what());
    return BS_ERROR_TRUNCATION;
  } catch (const bseries::DimensionError& e) {
    set_error(e.what());
    return BS_ERROR_DIMENSION;
  } catch (const bseries::DomainError& e) {
    set_error(e.what());
    return BS_ERROR_DOMAIN;
  } catch (const std::exception& e) {
    set_error(e.what());
    return BS_ERROR_INVALID;
  }
}

bs_status invalid(const char* message) {
  set_error(message);
  return BS_ERROR_INVALID;
}

// "p/q,p/q,..." -> rational vector
std::vector<bseries::Rational> parse_vector(const std::string& text) {
  std::vector<bseries::Rational> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string piece = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    out.push_back(bseries::parse_rational(piece));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

// "v1;v2;..." -> list of rational vectors
std::vector<std::vector<bseries::Rational>> parse_vector_list(
    const std::string& text) {
  std::vector<std::vector<bseries::Rational>> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t semi = text.find(';', start);
    const std::string piece = text.substr(
        start, semi == std::string::npos ? std::string::npos : semi - start);
    out.push_back(parse_vector(piece));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return out;
}

std::string render_coefficient_row(const std::vector<bseries::Rational>& row) {
  std::string out;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i > 0) out += ' ';
    out += bseries::to_string(row[i]);
  }
  return out;
}

void fill_report(const bseries::VerifyReport& report, bs_report* out) {
  out->equal = report.equal ? 1 : 0;
  out->first_mismatch = report.first_mismatch;
  out->lhs = report.equal ? nullptr : copy_string(render_coefficient_row(report.lhs));
  out->rhs = report.equal ? nullptr : copy_string(render_coefficient_row(report.rhs));
}

int64_t to_int64_checked(const bseries::Int& value) {
  if (value > std::numeric_limits<int64_t>::max() ||
      value < std::numeric_limits<int64_t>::min()) {
    throw bseries::DomainError("value does not fit in 64 bits");
  }
  return value.convert_to<int64_t>();
}

}  // namespace

extern "C" {

const char* bs_version(void) { return "bseries 0.1.0"; }

const char* bs_last_error(void) { return g_last_error.c_str(); }

void bs_string_free(char* text) { std::free(text); }

bs_status bs_tree_parse(const char* text, bs_tree** out) {
  if (!text || !out) return invalid("bs_tree_parse: null argument");
  return guarded([&] {
    *out = new bs_tree{bseries::parse_tree(text)};
    return BS_OK;
  });
}

bs_status bs_tree_render(const bs_tree* tree, char** out) {
  if (!tree || !out) return invalid("bs_tree_render: null argument");
  return guarded([&] {
    *out = copy_string(bseries::render_tree(tree->value));
    return BS_OK;
  });
}

void bs_tree_free(bs_tree* tree) { delete tree; }

int bs_tree_order(const bs_tree* tree) {
  return tree ? tree->value.order() : 0;
}

bs_status bs_tree_symmetry(const bs_tree* tree, int64_t* out) {
  if (!tree || !out) return invalid("bs_tree_symmetry: null argument");
  return guarded([&] {
    *out = to_int64_checked(tree->value.symmetry());
    return BS_OK;
  });
}

bs_status bs_tree_density(const bs_tree* tree, int64_t* out) {
  if (!tree || !out) return invalid("bs_tree_density: null argument");
  return guarded([&] {
    *out = to_int64_checked(tree->value.density());
    return BS_OK;
  });
}

bs_status bs_tree_list(int max_order, bs_tree*** out, size_t* out_count) {
  if (!out || !out_count) return invalid("bs_tree_list: null argument");
  return guarded([&] {
    const std::vector<bseries::Tree> trees = bseries::enumerate_trees(max_order);
    bs_tree** list =
        static_cast<bs_tree**>(std::malloc(sizeof(bs_tree*) * trees.size()));
    for (std::size_t i = 0; i < trees.size(); ++i) {
      list[i] = new bs_tree{trees[i]};
    }
    *out = list;
    *out_count = trees.size();
    return BS_OK;
  });
}

void bs_tree_list_free(bs_tree** trees, size_t count) {
  if (!trees) return;
  for (size_t i = 0; i < count; ++i) delete trees[i];
  std::free(trees);
}

bs_status bs_is_subtree(const bs_tree* sub, const bs_tree* tree, int* out) {
  if (!sub || !tree || !out) return invalid("bs_is_subtree: null argument");
  return guarded([&] {
    *out = bseries::is_subtree(sub->value, tree->value) ? 1 : 0;
    return BS_OK;
  });
}

bs_status bs_embeddings(const bs_tree* sub, const bs_tree* tree, char** out,
                        size_t* out_count) {
  if (!sub || !tree || !out) return invalid("bs_embeddings: null argument");
  return guarded([&] {
    const auto embeddings = bseries::enumerate_embeddings(sub->value, tree->value);
    std::string text;
    for (const auto& embedding : embeddings) {
      if (!text.empty()) text += '\n';
      for (std::size_t i = 0; i < embedding.vertex_map.size(); ++i) {
        if (i > 0) text += ' ';
        text += std::to_string(embedding.vertex_map[i]);
      }
    }
    *out = copy_string(text);
    if (out_count) *out_count = embeddings.size();
    return BS_OK;
  });
}

bs_status bs_assignments(const bs_tree* sub, const bs_tree* tree, char** out,
                         size_t* out_count) {
  if (!sub || !tree || !out) return invalid("bs_assignments: null argument");
  return guarded([&] {
    const auto matrices = bseries::enumerate_assignments(sub->value, tree->value);
    std::string text;
    for (const auto& matrix : matrices) {
      if (!text.empty()) text += '\n';
      text += bseries::render_assignment(matrix);
    }
    *out = copy_string(text);
    if (out_count) *out_count = matrices.size();
    return BS_OK;
  });
}

bs_status bs_prune(const bs_tree* tree, const bs_tree* sub,
                   bs_prune_method method, char** out) {
  if (!tree || !sub || !out) return invalid("bs_prune: null argument");
  return guarded([&] {
    const bseries::ForestSum result =
        method == BS_PRUNE_EMBEDDING
            ? bseries::prune_by_embeddings(tree->value, sub->value)
            : bseries::prune(tree->value, sub->value);
    *out = copy_string(bseries::render_forest_sum(result));
    return BS_OK;
  });
}

bs_status bs_series_identity(int max_order, bs_series** out) {
  if (!out) return invalid("bs_series_identity: null argument");
  return guarded([&] {
    *out = new bs_series{bseries::BSeries::identity(max_order)};
    return BS_OK;
  });
}

bs_status bs_series_exact_flow(int max_order, bs_series** out) {
  if (!out) return invalid("bs_series_exact_flow: null argument");
  return guarded([&] {
    *out = new bs_series{bseries::BSeries::exact_flow(max_order)};
    return BS_OK;
  });
}

bs_status bs_series_random(uint64_t seed, int max_order, int in_class_b,
                           bs_series** out) {
  if (!out) return invalid("bs_series_random: null argument");
  return guarded([&] {
    *out = new bs_series{
        bseries::BSeries::random(seed, max_order, in_class_b != 0)};
    return BS_OK;
  });
}

bs_status bs_series_from_json(const char* json_text, bs_series** out) {
  if (!json_text || !out) return invalid("bs_series_from_json: null argument");
  return guarded([&] {
    *out = new bs_series{bseries::BSeries::from_json_text(json_text)};
    return BS_OK;
  });
}

bs_status bs_series_to_json(const bs_series* series, char** out) {
  if (!series || !out) return invalid("bs_series_to_json: null argument");
  return guarded([&] {
    *out = copy_string(series->value.to_json_text());
    return BS_OK;
  });
}

int bs_series_max_order(const bs_series* series) {
  return series ? series->value.max_order() : 0;
}

bs_status bs_series_coefficient(const bs_series* series, const bs_tree* tree,
                                char** out) {
  if (!series || !out) return invalid("bs_series_coefficient: null argument");
  return guarded([&] {
    const bseries::Rational value =
        tree ? series->value.coefficient(tree->value)
             : series->value.empty_coefficient();
    *out = copy_string(bseries::to_string(value));
    return BS_OK;
  });
}

bs_status bs_series_compose(const bs_series* a, const bs_series* b,
                            int max_order, bs_series** out) {
  if (!a || !b || !out) return invalid("bs_series_compose: null argument");
  return guarded([&] {
    *out = new bs_series{bseries::compose(a->value, b->value, max_order)};
    return BS_OK;
  });
}

void bs_series_free(bs_series* series) { delete series; }

bs_status bs_field_from_json(const char* json_text, bs_field** out) {
  if (!json_text || !out) return invalid("bs_field_from_json: null argument");
  return guarded([&] {
    *out = new bs_field{bseries::PolynomialVectorField::from_json_text(json_text)};
    return BS_OK;
  });
}

int bs_field_dimension(const bs_field* field) {
  return field ? field->value.dimension() : 0;
}

void bs_field_free(bs_field* field) { delete field; }

bs_status bs_series_evaluate(const bs_series* series, const bs_field* field,
                             const char* y0, int max_order, char** out) {
  if (!series || !field || !y0 || !out) {
    return invalid("bs_series_evaluate: null argument");
  }
  return guarded([&] {
    const auto start = parse_vector(y0);
    const bseries::SeriesVector result =
        bseries::evaluate_bseries(series->value, field->value, start, max_order);
    std::string text;
    for (int k = 0; k <= result.max_order(); ++k) {
      if (k > 0) text += '\n';
      text += "h^" + std::to_string(k) + ": " + render_coefficient_row(result.at(k));
    }
    *out = copy_string(text);
    return BS_OK;
  });
}

void bs_report_clear(bs_report* report) {
  if (!report) return;
  std::free(report->lhs);
  std::free(report->rhs);
  report->lhs = nullptr;
  report->rhs = nullptr;
}

bs_status bs_verify_lemma1(const bs_field* field, const bs_series* a,
                           const bs_tree* sub, const char* y0, int max_order,
                           int embedding_semantics, bs_report* out) {
  if (!field || !a || !sub || !y0 || !out) {
    return invalid("bs_verify_lemma1: null argument");
  }
  return guarded([&] {
    const auto report = bseries::verify_lemma1(
        field->value, a->value, sub->value, parse_vector(y0), max_order,
        embedding_semantics ? bseries::PruneSemantics::embedding
                            : bseries::PruneSemantics::assignment);
    fill_report(report, out);
    return BS_OK;
  });
}

bs_status bs_verify_prop1(const bs_field* field, const bs_series* a, int n,
                          const char* vectors, const char* y0, int max_order,
                          bs_report* out) {
  if (!field || !a || !vectors || !y0 || !out) {
    return invalid("bs_verify_prop1: null argument");
  }
  return guarded([&] {
    const auto report =
        bseries::verify_prop1(field->value, a->value, n,
                              parse_vector_list(vectors), parse_vector(y0),
                              max_order);
    fill_report(report, out);
    return BS_OK;
  });
}

bs_status bs_verify_theorem1(const bs_field* field, const bs_series* a,
                             const bs_series* b, const char* y0, int max_order,
                             bs_report* out) {
  if (!field || !a || !b || !y0 || !out) {
    return invalid("bs_verify_theorem1: null argument");
  }
  return guarded([&] {
    const auto report = bseries::verify_composition(
        field->value, a->value, b->value, parse_vector(y0), max_order);
    fill_report(report, out);
    return BS_OK;
  });
}

}  // extern "C"
