#include "chordless/io.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include <json.hpp>

namespace chordless {

namespace {

void validate_and_add(GraphDocument& doc, long u, long v, int line_no,
                      std::set<Edge>& seen) {
  if (u < 0 || v < 0 || u >= doc.n || v >= doc.n)
    throw ParseError("vertex id out of range (n = " + std::to_string(doc.n) + ")",
                     line_no);
  if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), line_no);
  Edge e = make_edge(static_cast<int>(u), static_cast<int>(v));
  if (!seen.insert(e).second)
    throw ParseError("duplicate edge " + std::to_string(e.first) + "-" +
                         std::to_string(e.second),
                     line_no);
  doc.edges.push_back(e);
}

GraphDocument parse_edgelist(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  GraphDocument doc;
  std::set<Edge> seen;
  long m = -1;

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    if (m < 0) {
      long n;
      if (!(fields >> n >> m) || n < 0 || m < 0)
        throw ParseError("expected header 'n m'", line_no);
      std::string extra;
      if (fields >> extra) throw ParseError("trailing content after header", line_no);
      doc.n = static_cast<int>(n);
      continue;
    }
    if (static_cast<long>(doc.edges.size()) == m) {
      std::string extra;
      if (fields >> extra) throw ParseError("content after the declared edges", line_no);
      continue;
    }
    long u, v;
    if (!(fields >> u >> v)) throw ParseError("expected edge 'u v'", line_no);
    std::string extra;
    if (fields >> extra) throw ParseError("trailing content after edge", line_no);
    validate_and_add(doc, u, v, line_no, seen);
  }
  if (m < 0) throw ParseError("empty document", 0);
  if (static_cast<long>(doc.edges.size()) != m)
    throw ParseError("expected " + std::to_string(m) + " edges, got " +
                         std::to_string(doc.edges.size()),
                     0);
  return doc;
}

GraphDocument parse_structured(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw ParseError(err.what(), 0);
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw ParseError("structured graph needs fields 'n' and 'edges'", 0);
  GraphDocument doc;
  if (!j["n"].is_number_integer() || j["n"].get<long>() < 0)
    throw ParseError("'n' must be a nonnegative integer", 0);
  doc.n = j["n"].get<int>();
  if (!j["edges"].is_array()) throw ParseError("'edges' must be an array", 0);
  std::set<Edge> seen;
  for (const auto& item : j["edges"]) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
        !item[1].is_number_integer())
      throw ParseError("each edge must be a pair of integer ids", 0);
    validate_and_add(doc, item[0].get<long>(), item[1].get<long>(), 0, seen);
  }
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError("'name' must be a string", 0);
    doc.name = j["name"].get<std::string>();
  }
  return doc;
}

}  // namespace

GraphDocument parse_graph(const std::string& text, GraphFormat format) {
  if (format == GraphFormat::auto_detect) {
    size_t pos = text.find_first_not_of(" \t\r\n");
    format = (pos != std::string::npos && text[pos] == '{') ? GraphFormat::structured
                                                            : GraphFormat::edgelist;
  }
  return format == GraphFormat::structured ? parse_structured(text)
                                           : parse_edgelist(text);
}

std::string serialise_edgelist(const GraphDocument& doc) {
  std::ostringstream out;
  out << doc.n << ' ' << doc.edges.size() << '\n';
  for (const Edge& e : doc.edges) out << e.first << ' ' << e.second << '\n';
  return out.str();
}

std::string serialise_structured(const GraphDocument& doc) {
  nlohmann::json j;
  j["n"] = doc.n;
  j["edges"] = nlohmann::json::array();
  for (const Edge& e : doc.edges) j["edges"].push_back({e.first, e.second});
  if (doc.name) j["name"] = *doc.name;
  return j.dump(2) + "\n";
}

}  // namespace chordless
