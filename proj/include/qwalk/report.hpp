#pragma once

#include <string>

#include "qwalk/graph_io.hpp"
#include "qwalk/mixing.hpp"
#include "qwalk/numtheory.hpp"
#include "qwalk/verify.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

enum class OutputFormat { Json, Csv };

/// Reported total-variation convention.  L1: sum_j |p_j - q_j| (the
/// library-internal value); Half: that divided by 2.
enum class TvConvention { L1, Half };

std::string to_string(TvConvention conv);
double apply_tv_convention(double tv, TvConvention conv);

/// Shortest round-trip decimal form of x with an uppercase exponent marker
/// ("1E-09"); used for every floating-point field so reruns are
/// byte-identical.  Throws std::invalid_argument on non-finite values.
std::string format_double(double x);

/// Report builders for the CLI subcommands.  JSON output has a fixed key
/// order; CSV output is a plain table with a header row.  Both end with a
/// newline.
std::string report_spectrum(const GraphSpec& graph, const Spectrum& spectrum,
                            OutputFormat fmt);
std::string report_evolve(const GraphSpec& graph, const AmplitudeVector& state,
                          TvConvention conv, OutputFormat fmt);
std::string report_average(const GraphSpec& graph,
                           const AverageDistribution& avg, double collision_tol,
                           double uniform_tol, TvConvention conv,
                           OutputFormat fmt);
std::string report_search(const GraphSpec& graph, double t_max,
                          const MixingSearchResult& result, TvConvention conv,
                          OutputFormat fmt);
std::string report_classify(const MixingVerdict& verdict, OutputFormat fmt);
std::string report_verify(const SuiteResult& suite, OutputFormat fmt);

}  // namespace qwalk
