#include "braidkit/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace braidkit {

namespace {

RootOfUnity parse_entry(const std::string& s, int row, int col) {
  try {
    return RootOfUnity::parse(s);
  } catch (const std::invalid_argument& e) {
    throw parse_error("braiding entry at row " + std::to_string(row + 1) + ", column " +
                      std::to_string(col + 1) + ": " + e.what());
  }
}

}  // namespace

BraidingMatrix parse_braiding_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("braiding input is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("rank") || !j.contains("q"))
    throw parse_error("braiding input must be an object with \"rank\" and \"q\"");
  if (!j["rank"].is_number_integer() || j["rank"].get<long long>() < 1)
    throw parse_error("\"rank\" must be a positive integer");
  long long rank = j["rank"].get<long long>();
  const auto& rows = j["q"];
  if (!rows.is_array() || static_cast<long long>(rows.size()) != rank)
    throw parse_error("\"q\" must be a " + std::to_string(rank) + "-row matrix");
  std::vector<std::vector<RootOfUnity>> q;
  for (size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_array() || static_cast<long long>(rows[i].size()) != rank)
      throw parse_error("row " + std::to_string(i + 1) + " of \"q\" must have " +
                        std::to_string(rank) + " entries");
    std::vector<RootOfUnity> row;
    for (size_t c = 0; c < rows[i].size(); ++c) {
      if (!rows[i][c].is_string())
        throw parse_error("braiding entry at row " + std::to_string(i + 1) + ", column " +
                          std::to_string(c + 1) + ": expected a \"k/N\" string");
      row.push_back(parse_entry(rows[i][c].get<std::string>(), static_cast<int>(i),
                                static_cast<int>(c)));
    }
    q.push_back(std::move(row));
  }
  return BraidingMatrix(std::move(q));
}

BraidingMatrix parse_braiding_inline(const std::string& text) {
  std::vector<std::vector<RootOfUnity>> q;
  std::stringstream rows(text);
  std::string row;
  int r = 0;
  while (std::getline(rows, row, ';')) {
    std::vector<RootOfUnity> entries;
    std::stringstream cells(row);
    std::string cell;
    int c = 0;
    while (std::getline(cells, cell, ',')) {
      cell.erase(std::remove_if(cell.begin(), cell.end(), ::isspace), cell.end());
      entries.push_back(parse_entry(cell, r, c));
      ++c;
    }
    q.push_back(std::move(entries));
    ++r;
  }
  if (q.empty()) throw parse_error("empty braiding matrix");
  for (size_t i = 0; i < q.size(); ++i)
    if (q[i].size() != q.size())
      throw parse_error("braiding matrix is not square: row " + std::to_string(i + 1) +
                        " has " + std::to_string(q[i].size()) + " of " +
                        std::to_string(q.size()) + " entries");
  return BraidingMatrix(std::move(q));
}

YDDatum parse_datum_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("datum input is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("factors") || !j.contains("g") || !j.contains("chi"))
    throw parse_error("datum input must be an object with \"factors\", \"g\" and \"chi\"");
  std::vector<long long> factors;
  for (const auto& f : j["factors"]) {
    if (!f.is_number_integer() || f.get<long long>() < 1)
      throw parse_error("\"factors\" must be positive integers");
    factors.push_back(f.get<long long>());
  }
  YDDatum d{AbelianGroup(factors), {}, {}};
  for (const auto& ge : j["g"]) {
    AbelianGroup::Element e;
    for (const auto& x : ge) {
      if (!x.is_number_integer()) throw parse_error("\"g\" entries must be integers");
      e.push_back(x.get<long long>());
    }
    if (e.size() != factors.size())
      throw parse_error("group element length does not match the number of factors");
    d.g.push_back(d.group.normalized(std::move(e)));
  }
  int ci = 0;
  for (const auto& ce : j["chi"]) {
    Character c;
    int vi = 0;
    for (const auto& x : ce) {
      if (!x.is_string()) throw parse_error("\"chi\" entries must be \"k/N\" strings");
      c.values.push_back(parse_entry(x.get<std::string>(), ci, vi));
      ++vi;
    }
    d.chi.push_back(std::move(c));
    ++ci;
  }
  try {
    d.validate();
  } catch (const std::invalid_argument& e) {
    throw parse_error(std::string("invalid datum: ") + e.what());
  }
  return d;
}

std::string braiding_to_json(const BraidingMatrix& b) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < b.rank(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < b.rank(); ++j) row.push_back(b.at(i, j).to_fraction());
    rows.push_back(std::move(row));
  }
  nlohmann::json j{{"rank", b.rank()}, {"q", std::move(rows)}};
  return j.dump();
}

std::string zeta_label(const RootOfUnity& r) {
  if (r.order() == 1) return "1";
  if (r.order() == 2) return "-1";
  std::string s = "ζ" + std::to_string(r.order());
  if (r.exponent_num() != 1) s += "^" + std::to_string(r.exponent_num());
  return s;
}

std::string diagram_to_dot(const DynkinDiagram& d) {
  std::ostringstream os;
  os << "graph braiding {\n";
  for (size_t i = 0; i < d.vertex_labels.size(); ++i)
    os << "  v" << (i + 1) << " [label=\"" << zeta_label(d.vertex_labels[i]) << "\"];\n";
  for (const auto& e : d.edges)
    os << "  v" << (e.i + 1) << " -- v" << (e.j + 1) << " [label=\"" << zeta_label(e.label)
       << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string diagram_to_text(const DynkinDiagram& d) {
  size_t n = d.vertex_labels.size();
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : d.edges) {
    adj[e.i].push_back(e.j);
    adj[e.j].push_back(e.i);
  }
  auto edge_label = [&](int a, int b) {
    for (const auto& e : d.edges)
      if ((e.i == a && e.j == b) || (e.i == b && e.j == a)) return zeta_label(e.label);
    return std::string();
  };

  // path detection: all degrees <= 2 and at most one connected run
  bool path = true;
  int ends = 0;
  for (size_t i = 0; i < n; ++i) {
    if (adj[i].size() > 2) path = false;
    if (adj[i].size() <= 1) ++ends;
  }
  if (path && n >= 1 && ends == 2 && d.edges.size() == n - 1) {
    int cur = 0;
    for (size_t i = 0; i < n; ++i)
      if (adj[i].size() <= 1) {
        cur = static_cast<int>(i);
        break;
      }
    std::ostringstream os;
    int prev = -1;
    for (size_t step = 0; step < n; ++step) {
      os << "o(" << zeta_label(d.vertex_labels[cur]) << ")";
      int next = -1;
      for (int w : adj[cur])
        if (w != prev) next = w;
      if (next == -1) break;
      os << " --[" << edge_label(cur, next) << "]-- ";
      prev = cur;
      cur = next;
    }
    return os.str();
  }

  std::ostringstream os;
  for (size_t i = 0; i < n; ++i) {
    if (i) os << "; ";
    os << "o" << (i + 1) << "(" << zeta_label(d.vertex_labels[i]) << ")";
  }
  for (const auto& e : d.edges)
    os << "; " << (e.i + 1) << "--" << (e.j + 1) << "[" << zeta_label(e.label) << "]";
  return os.str();
}

}  // namespace braidkit
