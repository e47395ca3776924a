#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "planar/effective_action.hpp"
#include "planar/report.hpp"
#include "planar/series.hpp"
#include "planar/trees.hpp"

namespace planar {

/// Optional tags carried by a series document.
struct SeriesMeta {
  std::string role;      // "moments", "cumulants", "effective_action" or empty
  std::string variable;  // letter name used by the document, e.g. "x", "y", "phi"
};

using AnySeries = std::variant<Series, FloatSeries>;

struct SeriesDocument {
  AnySeries series;
  SeriesMeta meta;
};

// All writers emit pretty-printed JSON in schema field order with a trailing newline.
// All readers throw FormatError on malformed input.

template <Scalar S>
std::string series_to_json(const BasicSeries<S>& f, const SeriesMeta& meta = {});

/// Reads a series document of either scalar kind.
SeriesDocument parse_series_document(std::string_view text);

/// Reads a series document and requires scalar kind S.
template <Scalar S>
BasicSeries<S> parse_series(std::string_view text);

template <Scalar S>
std::string field_to_json(const BasicField<S>& g);

template <Scalar S>
BasicField<S> parse_field(std::string_view text);

template <Scalar S>
std::string effective_action_to_json(const EffectiveAction<S>& l);

template <Scalar S>
EffectiveAction<S> parse_effective_action(std::string_view text);

/// Table of ℓ coefficients: header "word,value", letters separated by spaces.
template <Scalar S>
std::string l_table_csv(const EffectiveAction<S>& l);

std::string tree_to_json(const AdmissibleTree& t);
AdmissibleTree parse_tree(std::string_view text);

/// {"marks", "count", "trees": [tree document + "path" + "term"]}.
std::string tree_listing_to_json(int marks, const std::vector<AdmissibleTree>& trees);

std::string report_to_json(const IdentityReport& r);

}  // namespace planar
