#include "qwalk/graph_io.hpp"

#include <fstream>
#include <initializer_list>
#include <iostream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qwalk {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument("graph description: " + msg);
}

void require_keys(const json& obj, std::initializer_list<const char*> allowed) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* key : allowed) {
      if (item.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) fail("unexpected key \"" + item.key() + "\"");
  }
}

const json& get_field(const json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) fail(std::string("missing key \"") + key + "\"");
  return *it;
}

index_t get_integer(const json& value, const std::string& where) {
  if (!value.is_number_integer()) fail(where + " must be an integer");
  if (value.is_number_unsigned() &&
      value.get<std::uint64_t>() >
          static_cast<std::uint64_t>(std::numeric_limits<index_t>::max()))
    fail(where + " is too large");
  return value.get<index_t>();
}

std::vector<index_t> get_integer_list(const json& value,
                                      const std::string& where) {
  if (!value.is_array()) fail(where + " must be an array");
  std::vector<index_t> out;
  out.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i)
    out.push_back(get_integer(value[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace

index_t graph_order(const GraphSpec& spec) {
  return std::visit(
      [](const auto& s) -> index_t {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, CirculantSpec>)
          return s.n;
        else
          return group_order(s.factors);
      },
      spec);
}

std::vector<index_t> graph_factors(const GraphSpec& spec) {
  return std::visit(
      [](const auto& s) -> std::vector<index_t> {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, CirculantSpec>)
          return {s.n};
        else
          return s.factors;
      },
      spec);
}

GraphSpec parse_graph_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("graph description: ") + e.what());
  }
  if (!doc.is_object()) fail("top level must be a JSON object");
  const json& type_field = get_field(doc, "type");
  if (!type_field.is_string()) fail("\"type\" must be a string");
  const std::string type = type_field.get<std::string>();

  if (type == "cycle") {
    require_keys(doc, {"type", "n"});
    return make_cycle(get_integer(get_field(doc, "n"), "\"n\""));
  }
  if (type == "complete") {
    require_keys(doc, {"type", "n"});
    return make_complete(get_integer(get_field(doc, "n"), "\"n\""));
  }
  if (type == "circulant") {
    require_keys(doc, {"type", "n", "connection", "weights"});
    const index_t n = get_integer(get_field(doc, "n"), "\"n\"");
    const auto conn =
        get_integer_list(get_field(doc, "connection"), "\"connection\"");
    std::vector<double> weights;
    if (const auto it = doc.find("weights"); it != doc.end()) {
      if (!it->is_array()) fail("\"weights\" must be an array");
      weights.reserve(it->size());
      for (std::size_t i = 0; i < it->size(); ++i) {
        const json& w = (*it)[i];
        if (!w.is_number())
          fail("\"weights\"[" + std::to_string(i) + "] must be a number");
        weights.push_back(w.get<double>());
      }
    }
    return make_circulant(n, conn, weights);
  }
  if (type == "hypercube") {
    require_keys(doc, {"type", "dimension"});
    return make_hypercube(get_integer(get_field(doc, "dimension"), "\"dimension\""));
  }
  if (type == "group") {
    require_keys(doc, {"type", "factors", "connection"});
    const auto factors =
        get_integer_list(get_field(doc, "factors"), "\"factors\"");
    const json& conn_field = get_field(doc, "connection");
    if (!conn_field.is_array()) fail("\"connection\" must be an array");
    std::vector<std::vector<index_t>> conn;
    conn.reserve(conn_field.size());
    for (std::size_t i = 0; i < conn_field.size(); ++i)
      conn.push_back(get_integer_list(conn_field[i],
                                      "\"connection\"[" + std::to_string(i) + "]"));
    return make_group_circulant(factors, conn);
  }
  fail("unknown type \"" + type + "\"");
}

GraphSpec load_graph_argument(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{')
    return parse_graph_json(arg);

  std::string text;
  if (arg == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(arg, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open graph file \"" + arg + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return parse_graph_json(text);
  } catch (const std::invalid_argument& e) {
    if (arg == "-") throw;
    throw std::invalid_argument(std::string(e.what()) + " (file \"" + arg +
                                "\")");
  }
}

}  // namespace qwalk
