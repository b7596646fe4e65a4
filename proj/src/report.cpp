#include "qwalk/report.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace qwalk {

namespace {

std::string int_list(const std::vector<index_t>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out + "]";
}

std::string double_list(const std::vector<double>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += format_double(v[i]);
  }
  return out + "]";
}

std::string graph_json(const GraphSpec& graph) {
  return std::visit(
      [](const auto& s) -> std::string {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, CirculantSpec>) {
          return "{\"type\":\"circulant\",\"n\":" + std::to_string(s.n) +
                 ",\"connection\":" + int_list(s.conn) +
                 ",\"weights\":" + double_list(s.weights) + "}";
        } else {
          std::string conn = "[";
          for (std::size_t i = 0; i < s.conn.size(); ++i) {
            if (i) conn += ',';
            conn += int_list(s.conn[i]);
          }
          conn += "]";
          return "{\"type\":\"group\",\"factors\":" + int_list(s.factors) +
                 ",\"connection\":" + conn + "}";
        }
      },
      graph);
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

double uniform_linf(const std::vector<double>& probs) {
  const double u = 1.0 / static_cast<double>(probs.size());
  double linf = 0.0;
  for (double p : probs) linf = std::max(linf, std::abs(p - u));
  return linf;
}

}  // namespace

std::string to_string(TvConvention conv) {
  return conv == TvConvention::L1 ? "l1" : "half";
}

double apply_tv_convention(double tv, TvConvention conv) {
  return conv == TvConvention::L1 ? tv : 0.5 * tv;
}

std::string format_double(double x) {
  if (!std::isfinite(x))
    throw std::invalid_argument("format_double: non-finite value");
  if (x == 0.0) x = 0.0;  // collapse -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  std::string s(buf, res.ptr);
  for (char& c : s)
    if (c == 'e') c = 'E';
  return s;
}

std::string report_spectrum(const GraphSpec& graph, const Spectrum& spectrum,
                            OutputFormat fmt) {
  if (fmt == OutputFormat::Csv) {
    std::string out = "index,eigenvalue,class\n";
    for (std::size_t a = 0; a < spectrum.eigenvalues.size(); ++a) {
      out += std::to_string(a);
      out += ',';
      out += format_double(spectrum.eigenvalues[a]);
      out += ',';
      out += std::to_string(spectrum.class_of[a]);
      out += '\n';
    }
    return out;
  }
  std::string classes = "[";
  for (std::size_t c = 0; c < spectrum.collision_classes.size(); ++c) {
    if (c) classes += ',';
    classes += int_list(spectrum.collision_classes[c]);
  }
  classes += "]";
  std::string out = "{\n";
  out += "  \"command\": \"spectrum\",\n";
  out += "  \"graph\": " + graph_json(graph) + ",\n";
  out += "  \"n\": " + std::to_string(graph_order(graph)) + ",\n";
  out += "  \"collision_tol\": " + format_double(spectrum.collision_tol) + ",\n";
  out += "  \"distinct_count\": " + std::to_string(spectrum.distinct_count()) +
         ",\n";
  out += "  \"collision_pair_count\": " +
         std::to_string(spectrum.collision_pair_count()) + ",\n";
  out += "  \"eigenvalues\": " + double_list(spectrum.eigenvalues) + ",\n";
  out += "  \"collision_classes\": " + classes + "\n";
  return out + "}\n";
}

std::string report_evolve(const GraphSpec& graph, const AmplitudeVector& state,
                          TvConvention conv, OutputFormat fmt) {
  std::vector<double> probs(state.amps.size());
  for (std::size_t j = 0; j < state.amps.size(); ++j)
    probs[j] = std::norm(state.amps[j]);

  if (fmt == OutputFormat::Csv) {
    std::string out = "vertex,amplitude_re,amplitude_im,probability\n";
    for (std::size_t j = 0; j < state.amps.size(); ++j) {
      out += std::to_string(j);
      out += ',';
      out += format_double(state.amps[j].real());
      out += ',';
      out += format_double(state.amps[j].imag());
      out += ',';
      out += format_double(probs[j]);
      out += '\n';
    }
    return out;
  }
  std::string amps = "[";
  for (std::size_t j = 0; j < state.amps.size(); ++j) {
    if (j) amps += ',';
    amps += "[" + format_double(state.amps[j].real()) + "," +
            format_double(state.amps[j].imag()) + "]";
  }
  amps += "]";
  std::string out = "{\n";
  out += "  \"command\": \"evolve\",\n";
  out += "  \"graph\": " + graph_json(graph) + ",\n";
  out += "  \"n\": " + std::to_string(graph_order(graph)) + ",\n";
  out += "  \"t\": " + format_double(state.t) + ",\n";
  out += "  \"tv_convention\": \"" + to_string(conv) + "\",\n";
  out += "  \"tv_to_uniform\": " +
         format_double(apply_tv_convention(tv_to_uniform(probs), conv)) + ",\n";
  out += "  \"amplitudes\": " + amps + ",\n";
  out += "  \"probabilities\": " + double_list(probs) + "\n";
  return out + "}\n";
}

std::string report_average(const GraphSpec& graph,
                           const AverageDistribution& avg, double collision_tol,
                           double uniform_tol, TvConvention conv,
                           OutputFormat fmt) {
  const auto& probs = avg.dist.probs;
  if (fmt == OutputFormat::Csv) {
    std::string out = "vertex,probability\n";
    for (std::size_t j = 0; j < probs.size(); ++j) {
      out += std::to_string(j);
      out += ',';
      out += format_double(probs[j]);
      out += '\n';
    }
    return out;
  }
  std::string out = "{\n";
  out += "  \"command\": \"average\",\n";
  out += "  \"graph\": " + graph_json(graph) + ",\n";
  out += "  \"n\": " + std::to_string(graph_order(graph)) + ",\n";
  out += "  \"collision_tol\": " + format_double(collision_tol) + ",\n";
  out += "  \"collision_pair_count\": " +
         std::to_string(avg.collision_pair_count) + ",\n";
  out += "  \"tv_convention\": \"" + to_string(conv) + "\",\n";
  out += "  \"tv_to_uniform\": " +
         format_double(apply_tv_convention(tv_to_uniform(probs), conv)) + ",\n";
  out += "  \"uniform\": " + bool_str(uniform_linf(probs) <= uniform_tol) + ",\n";
  out += "  \"uniform_tol\": " + format_double(uniform_tol) + ",\n";
  out += "  \"probabilities\": " + double_list(probs) + "\n";
  return out + "}\n";
}

std::string report_search(const GraphSpec& graph, double t_max,
                          const MixingSearchResult& result, TvConvention conv,
                          OutputFormat fmt) {
  const double tv = apply_tv_convention(result.tv_star, conv);
  if (fmt == OutputFormat::Csv) {
    std::string out =
        "t_max,grid_points,refinement_iterations,tv_convention,t_star,tv_star\n";
    out += format_double(t_max) + "," + std::to_string(result.grid_points) +
           "," + std::to_string(result.refinement_iterations) + "," +
           to_string(conv) + "," + format_double(result.t_star) + "," +
           format_double(tv) + "\n";
    return out;
  }
  std::string out = "{\n";
  out += "  \"command\": \"search\",\n";
  out += "  \"graph\": " + graph_json(graph) + ",\n";
  out += "  \"n\": " + std::to_string(graph_order(graph)) + ",\n";
  out += "  \"t_max\": " + format_double(t_max) + ",\n";
  out += "  \"grid_points\": " + std::to_string(result.grid_points) + ",\n";
  out += "  \"refinement_iterations\": " +
         std::to_string(result.refinement_iterations) + ",\n";
  out += "  \"tv_convention\": \"" + to_string(conv) + "\",\n";
  out += "  \"t_star\": " + format_double(result.t_star) + ",\n";
  out += "  \"tv_star\": " + format_double(tv) + "\n";
  return out + "}\n";
}

std::string report_classify(const MixingVerdict& verdict, OutputFormat fmt) {
  if (fmt == OutputFormat::Csv) {
    std::string out = "n,u,q,verdict,certificate_k,certificate_l\n";
    const std::string prefix = std::to_string(verdict.n) + "," +
                               std::to_string(verdict.u) + "," +
                               std::to_string(verdict.q) + "," +
                               to_string(verdict.verdict);
    if (!verdict.certificate || verdict.certificate->empty()) {
      out += prefix + ",,\n";
      return out;
    }
    for (const auto& [k, l] : *verdict.certificate)
      out += prefix + "," + std::to_string(k) + "," + std::to_string(l) + "\n";
    return out;
  }
  std::string out = "{\n";
  out += "  \"command\": \"classify\",\n";
  out += "  \"n\": " + std::to_string(verdict.n) + ",\n";
  out += "  \"u\": " + std::to_string(verdict.u) + ",\n";
  out += "  \"q\": " + std::to_string(verdict.q) + ",\n";
  out += "  \"verdict\": \"" + to_string(verdict.verdict) + "\"";
  if (verdict.certificate) {
    std::string cert = "[";
    for (std::size_t i = 0; i < verdict.certificate->size(); ++i) {
      if (i) cert += ',';
      cert += "[" + std::to_string((*verdict.certificate)[i].first) + "," +
              std::to_string((*verdict.certificate)[i].second) + "]";
    }
    cert += "]";
    out += ",\n  \"certificate\": " + cert + "\n";
  } else {
    out += "\n";
  }
  return out + "}\n";
}

std::string report_verify(const SuiteResult& suite, OutputFormat fmt) {
  if (fmt == OutputFormat::Csv) {
    std::string out = "family,graph,check,max_error,tolerance,status\n";
    for (const auto& c : suite.checks) {
      out += c.family + "," + c.graph + "," + c.check + "," +
             format_double(c.max_error) + "," + format_double(c.tolerance) +
             "," + (c.passed ? "pass" : "fail") + "\n";
    }
    return out;
  }
  std::string out = "{\n";
  out += "  \"command\": \"verify\",\n";
  out += "  \"passed\": " + std::to_string(suite.passed_count()) + ",\n";
  out += "  \"failed\": " + std::to_string(suite.failed_count()) + ",\n";
  out += "  \"all_passed\": " + bool_str(suite.all_passed()) + ",\n";
  out += "  \"checks\": [\n";
  for (std::size_t i = 0; i < suite.checks.size(); ++i) {
    const auto& c = suite.checks[i];
    out += "    {\"family\":\"" + c.family + "\",\"graph\":\"" + c.graph +
           "\",\"check\":\"" + c.check +
           "\",\"max_error\":" + format_double(c.max_error) +
           ",\"tolerance\":" + format_double(c.tolerance) +
           ",\"passed\":" + bool_str(c.passed) + "}";
    out += (i + 1 < suite.checks.size()) ? ",\n" : "\n";
  }
  out += "  ]\n";
  return out + "}\n";
}

}  // namespace qwalk
