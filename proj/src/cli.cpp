#include "braidkit/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <memory>
#include <sstream>

#include "braidkit/io.hpp"
#include "braidkit/lifting.hpp"
#include "braidkit/relations.hpp"
#include "braidkit/tensoralgebra.hpp"

namespace braidkit {

namespace {

constexpr const char* kSchema = "braidkit/1";

int default_max_points() {
  if (const char* env = std::getenv("BRAIDKIT_MAX_POINTS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 1) return static_cast<int>(v);
  }
  return kDefaultMaxPoints;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

BraidingMatrix load_braiding(const std::string& input_path, const std::string& inline_q) {
  if (!input_path.empty() && !inline_q.empty())
    throw parse_error("give either --input or --q, not both");
  if (!input_path.empty()) return parse_braiding_json(read_file(input_path));
  if (!inline_q.empty()) return parse_braiding_inline(inline_q);
  throw parse_error("no braiding given: use --input FILE or --q \"...\"");
}

std::string braiding_inline_text(const BraidingMatrix& b) {
  std::string s;
  for (int i = 0; i < b.rank(); ++i) {
    if (i) s += ";";
    for (int j = 0; j < b.rank(); ++j) {
      if (j) s += ",";
      s += b.at(i, j).to_fraction();
    }
  }
  return s;
}

nlohmann::json braiding_json(const BraidingMatrix& b) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < b.rank(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < b.rank(); ++j) row.push_back(b.at(i, j).to_fraction());
    rows.push_back(std::move(row));
  }
  return nlohmann::json{{"rank", b.rank()}, {"q", std::move(rows)}};
}

std::string m_matrix_text(const MMatrix& m) {
  std::string s = "[";
  for (size_t i = 0; i < m.size(); ++i) {
    if (i) s += ", ";
    s += "[";
    for (size_t j = 0; j < m[i].size(); ++j) {
      if (j) s += ", ";
      s += m[i][j].has_value() ? std::to_string(*m[i][j]) : "-";
    }
    s += "]";
  }
  return s + "]";
}

std::string root_text(const std::vector<long long>& alpha) {
  std::string s = "[";
  for (size_t i = 0; i < alpha.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(alpha[i]);
  }
  return s + "]";
}

struct AnalyzeResult {
  BraidingMatrix b;
  DynkinDiagram diagram;
  MMatrix m;
  StandardnessResult standard;
  std::string cartan_name;
  std::vector<std::vector<long long>> roots;
  std::vector<long long> root_orders;
  PbwDimension pbw;
};

AnalyzeResult analyze(const BraidingMatrix& b, int max_points) {
  AnalyzeResult r{b, dynkin_diagram(b), m_matrix(b), is_standard(b, max_points), "", {}, {}, {}};
  if (r.standard.is_standard()) {
    CartanClassification cls = cartan_type(*r.standard.cartan);
    r.cartan_name = cls.to_string();
    if (cls.finite) {
      r.roots = positive_roots(*r.standard.cartan);
      for (const auto& alpha : r.roots) r.root_orders.push_back(root_order(b, alpha));
      r.pbw = pbw_dimension(std::make_shared<const BraidingMatrix>(b), max_points);
    }
  }
  return r;
}

int cmd_analyze(const BraidingMatrix& b, const std::string& format, int max_points,
                std::ostream& out) {
  AnalyzeResult r = analyze(b, max_points);
  std::string standard_text = r.standard.status == Standardness::Standard ? "yes"
                              : r.standard.status == Standardness::NotStandard ? "no"
                                                                               : "indeterminate";
  if (format == "dot") {
    out << diagram_to_dot(r.diagram);
  } else if (format == "json") {
    nlohmann::json j{{"schema", kSchema},     {"command", "analyze"},
                     {"braiding", braiding_json(b)}, {"standard", standard_text}};
    nlohmann::json mrows = nlohmann::json::array();
    for (const auto& row : r.m) {
      nlohmann::json mr = nlohmann::json::array();
      for (const auto& e : row)
        if (e.has_value())
          mr.push_back(*e);
        else
          mr.push_back(nullptr);
      mrows.push_back(std::move(mr));
    }
    j["m_matrix"] = std::move(mrows);
    j["diagram"] = diagram_to_text(r.diagram);
    if (r.standard.is_standard()) {
      j["cartan"] = r.cartan_name;
      nlohmann::json roots = nlohmann::json::array();
      for (const auto& alpha : r.roots) roots.push_back(alpha);
      j["positive_roots"] = std::move(roots);
      j["root_orders"] = r.root_orders;
      if (r.pbw.finite)
        j["pbw_dimension"] = r.pbw.value.get_str();
      else
        j["pbw_dimension"] = "infinite";
    }
    out << j.dump(2) << "\n";
  } else {
    out << "braiding: " << braiding_inline_text(b) << "\n";
    out << "diagram: " << diagram_to_text(r.diagram) << "\n";
    out << "m-matrix: " << m_matrix_text(r.m) << "\n";
    out << "standard: " << standard_text << "\n";
    if (r.standard.is_standard()) {
      out << "cartan: " << r.cartan_name << "\n";
      if (!r.roots.empty()) {
        out << "positive roots (" << r.roots.size() << "):";
        for (const auto& alpha : r.roots) out << " " << root_text(alpha);
        out << "\n";
        out << "root orders:";
        for (long long n : r.root_orders) out << " " << n;
        out << "\n";
        out << "pbw dimension: " << (r.pbw.finite ? r.pbw.value.get_str() : "infinite") << "\n";
      }
    }
  }
  return r.standard.status == Standardness::Indeterminate ? kExitOverflow : kExitOk;
}

int cmd_nichols(const BraidingMatrix& b, long long degree, const std::string& format,
                std::ostream& out) {
  auto ctx = std::make_shared<const BraidingMatrix>(b);
  std::vector<long long> dims = hilbert_series(ctx, degree);
  if (format == "json") {
    nlohmann::json j{{"schema", kSchema},
                     {"command", "nichols"},
                     {"braiding", braiding_json(b)},
                     {"max_degree", degree},
                     {"dimensions", dims}};
    out << j.dump(2) << "\n";
  } else {
    out << "hilbert series through degree " << degree << ": ";
    for (size_t i = 0; i < dims.size(); ++i) {
      if (i) out << ",";
      out << dims[i];
    }
    out << "\n";
  }
  return kExitOk;
}

nlohmann::json relation_json(const RelationVerdict& v) {
  nlohmann::json j{{"kind", relation_kind_name(v.instance.kind)},
                   {"applicable", v.instance.applicable}};
  nlohmann::json verts = nlohmann::json::array();
  for (int x : v.instance.vertices) verts.push_back(x + 1);
  j["vertices"] = std::move(verts);
  if (!v.instance.element.is_zero()) {
    j["degree"] = v.instance.total_degree();
    j["element"] = v.instance.element.to_string();
  }
  if (!v.instance.reason.empty()) j["reason"] = v.instance.reason;
  if (v.in_ideal.has_value()) j["in_ideal"] = *v.in_ideal;
  return j;
}

int cmd_relations(const BraidingMatrix& b, long long degree, const std::string& format,
                  int max_points, std::ostream& out) {
  auto ctx = std::make_shared<const BraidingMatrix>(b);
  PresentationReport rep = verify_presentation(ctx, degree, max_points);
  if (format == "json") {
    nlohmann::json j{{"schema", kSchema},
                     {"command", "relations"},
                     {"braiding", braiding_json(b)},
                     {"cartan", rep.cartan_type},
                     {"max_degree", rep.max_degree},
                     {"all_applicable_in_ideal", rep.all_applicable_in_ideal},
                     {"dimensions_match", rep.dims_match}};
    nlohmann::json rels = nlohmann::json::array();
    for (const auto& v : rep.relations) rels.push_back(relation_json(v));
    j["relations"] = std::move(rels);
    nlohmann::json dims = nlohmann::json::array();
    for (const auto& row : rep.dims)
      dims.push_back(nlohmann::json{{"degree", row.degree},
                                    {"tensor", row.dim_tensor},
                                    {"nichols", row.dim_nichols},
                                    {"quotient", row.dim_quotient}});
    j["dimensions"] = std::move(dims);
    j["pbw_dimension"] = rep.pbw.finite ? nlohmann::json(rep.pbw.value.get_str())
                                        : nlohmann::json("infinite");
    out << j.dump(2) << "\n";
  } else {
    out << "braiding: " << braiding_inline_text(b) << "\n";
    out << "cartan: " << rep.cartan_type << "\n";
    out << "relations (degree <= " << rep.max_degree << "):\n";
    for (const auto& v : rep.relations) {
      out << "  [" << relation_kind_name(v.instance.kind) << "] vertices=(";
      for (size_t i = 0; i < v.instance.vertices.size(); ++i) {
        if (i) out << ",";
        out << v.instance.vertices[i] + 1;
      }
      out << ")";
      if (!v.instance.element.is_zero()) out << " degree=" << v.instance.total_degree();
      if (!v.instance.applicable)
        out << " not-applicable (" << v.instance.reason << ")";
      else if (v.in_ideal.has_value())
        out << " in-ideal=" << (*v.in_ideal ? "yes" : "NO");
      else
        out << " beyond-degree-window";
      out << "\n";
    }
    out << "dimensions (degree, tensor, nichols, quotient):\n";
    for (const auto& row : rep.dims)
      out << "  " << row.degree << "  " << row.dim_tensor << "  " << row.dim_nichols << "  "
          << row.dim_quotient << (row.dim_nichols == row.dim_quotient ? "" : "  MISMATCH")
          << "\n";
    out << "pbw dimension: " << (rep.pbw.finite ? rep.pbw.value.get_str() : "infinite") << "\n";
    out << "all applicable relations in ideal: " << (rep.all_applicable_in_ideal ? "yes" : "NO")
        << "\n";
    out << "dimensions match: " << (rep.dims_match ? "yes" : "NO") << "\n";
  }
  return kExitOk;
}

std::string verdict_csv_row(const BraidingMatrix& b, int i, int j, const LiftVerdict& v) {
  std::string row = b.at(0, 0).to_fraction() + "," + b.at(0, 1).to_fraction() + "," +
                    b.at(1, 0).to_fraction() + "," + b.at(1, 1).to_fraction() + "," +
                    std::to_string(i + 1) + "," + std::to_string(j + 1) + ",";
  row += (v.m >= 0 ? std::to_string(v.m) : "-");
  row += "," + lift_status_name(v.status) + ",";
  row += v.case_id.has_value() ? lift_case_name(*v.case_id) : "-";
  return row;
}

nlohmann::json verdict_json(const BraidingMatrix& b, int i, int j, const LiftVerdict& v) {
  nlohmann::json jj{{"braiding", braiding_json(b)},
                    {"i", i + 1},
                    {"j", j + 1},
                    {"verdict", lift_status_name(v.status)}};
  if (v.m >= 0) jj["m"] = v.m;
  if (v.case_id.has_value()) jj["case"] = lift_case_name(*v.case_id);
  if (!v.reason.empty()) jj["reason"] = v.reason;
  return jj;
}

constexpr const char* kCsvHeader = "q11,q12,q21,q22,i,j,m,verdict,case_id";

int cmd_lift(const YDDatum& datum, const std::string& format, std::ostream& out) {
  BraidingMatrix b = datum.braiding();
  if (format == "csv" && b.rank() != 2)
    throw parse_error("csv output is only available for rank-2 data");
  std::vector<std::tuple<int, int, LiftVerdict>> rows;
  for (int i = 0; i < datum.rank(); ++i)
    for (int j = 0; j < datum.rank(); ++j)
      if (i != j) rows.emplace_back(i, j, lifting_case(datum, i, j));
  if (format == "json") {
    nlohmann::json j{{"schema", kSchema}, {"command", "lift"}, {"braiding", braiding_json(b)}};
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [i, jj, v] : rows) arr.push_back(verdict_json(b, i, jj, v));
    j["pairs"] = std::move(arr);
    out << j.dump(2) << "\n";
  } else if (format == "csv") {
    out << kCsvHeader << "\n";
    for (const auto& [i, jj, v] : rows) out << verdict_csv_row(b, i, jj, v) << "\n";
  } else {
    out << "braiding: " << braiding_inline_text(b) << "\n";
    for (const auto& [i, jj, v] : rows) {
      out << "pair (" << i + 1 << "," << jj + 1 << "): " << lift_status_name(v.status);
      if (v.m >= 0) out << " m=" << v.m;
      if (v.case_id.has_value()) out << " case=" << lift_case_name(*v.case_id);
      if (!v.reason.empty()) out << " (" << v.reason << ")";
      out << "\n";
    }
  }
  return kExitOk;
}

int cmd_scan(long long n_max, const std::string& format, int max_points, std::ostream& out) {
  std::vector<ScanRow> rows = scan_liftable(n_max, max_points);
  if (format == "json") {
    nlohmann::json j{{"schema", kSchema}, {"command", "scan"}, {"n_max", n_max}};
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows)
      if (r.verdict.status != LiftStatus::ForcedZero)
        arr.push_back(verdict_json(r.braiding, r.i, r.j, r.verdict));
    j["rows"] = std::move(arr);
    long long mismatches = 0;
    for (const auto& r : rows)
      if (r.verdict.status == LiftStatus::Mismatch) ++mismatches;
    j["mismatches"] = mismatches;
    out << j.dump(2) << "\n";
  } else {
    // csv (default) lists liftable and mismatch rows
    out << kCsvHeader << "\n";
    for (const auto& r : rows)
      if (r.verdict.status != LiftStatus::ForcedZero)
        out << verdict_csv_row(r.braiding, r.i, r.j, r.verdict) << "\n";
  }
  return kExitOk;
}

int cmd_enumerate(long long order, const std::string& filter, const std::string& format,
                  int max_points, std::ostream& out) {
  auto classes = enumerate_rank2_diagrams(order, max_points);
  struct Entry {
    const Rank2Class* cls;
    std::string cartan;
  };
  std::vector<Entry> kept;
  for (const auto& c : classes) {
    std::string cartan;
    if (c.standard.is_standard()) cartan = cartan_type(*c.standard.cartan).to_string();
    if (filter == "standard" && !c.standard.is_standard()) continue;
    if (filter == "standard-A2" && cartan != "A2") continue;
    kept.push_back({&c, cartan});
  }
  if (format == "json") {
    nlohmann::json j{{"schema", kSchema},
                     {"command", "enumerate"},
                     {"order", order},
                     {"filter", filter.empty() ? "all" : filter}};
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : kept) {
      nlohmann::json cj{{"q11", e.cls->q11.to_fraction()},
                        {"q22", e.cls->q22.to_fraction()},
                        {"p", e.cls->p.to_fraction()}};
      cj["standard"] = e.cls->standard.status == Standardness::Standard        ? "yes"
                       : e.cls->standard.status == Standardness::NotStandard ? "no"
                                                                             : "indeterminate";
      if (!e.cartan.empty()) cj["cartan"] = e.cartan;
      arr.push_back(std::move(cj));
    }
    j["classes"] = std::move(arr);
    out << j.dump(2) << "\n";
  } else {
    for (const auto& e : kept) {
      BraidingMatrix rep = BraidingMatrix::rank2_class(e.cls->q11, e.cls->q22, e.cls->p);
      out << "q11=" << e.cls->q11.to_fraction() << " q22=" << e.cls->q22.to_fraction()
          << " p=" << e.cls->p.to_fraction() << " standard="
          << (e.cls->standard.status == Standardness::Standard        ? "yes"
              : e.cls->standard.status == Standardness::NotStandard ? "no"
                                                                    : "indeterminate");
      if (!e.cartan.empty()) out << " cartan=" << e.cartan;
      out << " diagram: " << diagram_to_text(dynkin_diagram(rep)) << "\n";
    }
    out << "total classes: " << kept.size() << "\n";
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact-arithmetic analysis of diagonal braidings and their Nichols algebras"};
  app.name("braidkit");
  app.require_subcommand(1);

  std::string input_path, inline_q, datum_path;
  std::string format = "text";
  long long degree = 10, nmax = 8, order = 5;
  int max_points = default_max_points();
  std::string filter;

  auto add_braiding_opts = [&](CLI::App* cmd) {
    cmd->add_option("--input", input_path, "braiding matrix file (JSON)");
    cmd->add_option("--q", inline_q, "inline braiding matrix, e.g. \"0/1,1/3;0/1,0/1\"");
    cmd->add_option("--max-points", max_points, "groupoid point cap");
  };

  CLI::App* c_analyze = app.add_subcommand("analyze", "diagram, m-matrix, standardness, roots");
  add_braiding_opts(c_analyze);
  c_analyze->add_option("--format", format)->check(CLI::IsMember({"text", "json", "dot"}));

  CLI::App* c_nichols = app.add_subcommand("nichols", "Hilbert series of the Nichols algebra");
  add_braiding_opts(c_nichols);
  c_nichols->add_option("--degree", degree, "maximum degree");
  c_nichols->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  CLI::App* c_relations = app.add_subcommand("relations", "verify the defining relations");
  add_braiding_opts(c_relations);
  c_relations->add_option("--degree", degree, "maximum degree");
  c_relations->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  CLI::App* c_lift = app.add_subcommand("lift", "quantum Serre lifting classification");
  add_braiding_opts(c_lift);
  c_lift->add_option("--datum", datum_path, "Yetter-Drinfeld datum file (JSON)");
  c_lift->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));

  CLI::App* c_scan = app.add_subcommand("scan", "exhaustive rank-2 lifting scan");
  c_scan->add_option("--nmax", nmax, "maximum entry order")->required();
  c_scan->add_option("--max-points", max_points, "groupoid point cap");
  c_scan->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  CLI::App* c_enumerate = app.add_subcommand("enumerate", "rank-2 diagram classes");
  c_enumerate->add_option("--order", order, "root-of-unity order")->required();
  c_enumerate->add_option("--filter", filter)->check(CLI::IsMember({"standard", "standard-A2"}));
  c_enumerate->add_option("--max-points", max_points, "groupoid point cap");
  c_enumerate->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (c_analyze->parsed())
      return cmd_analyze(load_braiding(input_path, inline_q), format, max_points, out);
    if (c_nichols->parsed())
      return cmd_nichols(load_braiding(input_path, inline_q), degree, format, out);
    if (c_relations->parsed())
      return cmd_relations(load_braiding(input_path, inline_q), degree, format, max_points, out);
    if (c_lift->parsed()) {
      if (!datum_path.empty() && (!input_path.empty() || !inline_q.empty()))
        throw parse_error("give either --datum or a braiding, not both");
      YDDatum datum = datum_path.empty() ? realize(load_braiding(input_path, inline_q))
                                         : parse_datum_json(read_file(datum_path));
      if (format == "text" && datum.rank() == 2) format = "csv";
      return cmd_lift(datum, format, out);
    }
    if (c_scan->parsed()) {
      if (format == "text") format = "csv";
      return cmd_scan(nmax, format, max_points, out);
    }
    if (c_enumerate->parsed()) return cmd_enumerate(order, filter, format, max_points, out);
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  err << "error: no command\n";
  return kExitInput;
}

}  // namespace braidkit
