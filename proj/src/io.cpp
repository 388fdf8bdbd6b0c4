#include "csnd/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "csnd/errors.hpp"

namespace csnd {

using nlohmann::json;

double round_sig12(double v) {
  if (v == 0.0) return 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

namespace {

json rounded(double v) { return json(round_sig12(v)); }

json vector_to_json(const Eigen::VectorXd& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(rounded(v(i)));
  return arr;
}

json matrix_to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(rounded(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::string> labels_from_json(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    throw ValidationError(std::string("missing or non-array '") + key + "' field");
  std::vector<std::string> labels;
  for (const auto& l : j[key]) {
    if (!l.is_string()) throw ValidationError("labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  return labels;
}

Eigen::MatrixXd matrix_from_json(const json& j, const char* key, size_t rows) {
  if (!j.contains(key) || !j[key].is_array())
    throw ValidationError(std::string("missing or non-array '") + key + "' field");
  const json& m = j[key];
  if (m.size() != rows)
    throw ValidationError(std::string("'") + key + "' row count does not match labels");
  size_t cols = 0;
  for (size_t i = 0; i < m.size(); ++i) {
    if (!m[i].is_array()) throw ValidationError("matrix rows must be arrays");
    if (i == 0) cols = m[i].size();
    if (m[i].size() != cols) throw ValidationError("matrix rows have uneven length");
  }
  Eigen::MatrixXd out(rows, cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t c = 0; c < cols; ++c) {
      const json& cell = m[i][c];
      if (!cell.is_number()) throw ValidationError("matrix entries must be numbers");
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) =
          cell.get<double>();
    }
  return out;
}

}  // namespace

KernelMatrix kernel_from_json(const json& j) {
  auto labels = labels_from_json(j, "labels");
  auto m = matrix_from_json(j, "matrix", labels.size());
  if (m.cols() != m.rows())
    throw ValidationError("kernel matrix must be square");
  return KernelMatrix(std::move(labels), std::move(m));
}

json kernel_to_json(const KernelMatrix& k) {
  return json{{"labels", k.labels()}, {"matrix", matrix_to_json(k.entries())}};
}

KernelMatrix kernel_from_csv(std::istream& in) {
  std::vector<std::vector<std::string>> cells;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(cell);
    cells.push_back(std::move(row));
  }
  if (cells.size() < 2) throw ValidationError("CSV kernel needs a header and rows");
  const size_t n = cells.size() - 1;
  if (cells[0].size() != n + 1)
    throw ValidationError("CSV header width does not match the row count");

  std::vector<std::string> labels(cells[0].begin() + 1, cells[0].end());
  Eigen::MatrixXd m(n, n);
  for (size_t i = 0; i < n; ++i) {
    const auto& row = cells[i + 1];
    if (row.size() != n + 1) throw ValidationError("CSV row has wrong width");
    if (row[0] != labels[i])
      throw ValidationError("CSV row label '" + row[0] + "' does not match header");
    for (size_t j = 0; j < n; ++j) {
      try {
        size_t used = 0;
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
            std::stod(row[j + 1], &used);
        if (used != row[j + 1].size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ValidationError("CSV entry is not a number: '" + row[j + 1] + "'");
      }
    }
  }
  return KernelMatrix(std::move(labels), std::move(m));
}

std::string kernel_to_csv(const KernelMatrix& k) {
  for (const auto& l : k.labels())
    if (l.find(',') != std::string::npos)
      throw ValidationError("CSV labels must not contain commas");
  std::ostringstream out;
  out << "label";
  for (const auto& l : k.labels()) out << ',' << l;
  out << '\n';
  char buf[40];
  for (int i = 0; i < k.size(); ++i) {
    out << k.labels()[i];
    for (int j = 0; j < k.size(); ++j) {
      std::snprintf(buf, sizeof buf, "%.12g", k(i, j));
      out << ',' << buf;
    }
    out << '\n';
  }
  return out.str();
}

PointConfig points_from_json(const json& j) {
  auto labels = labels_from_json(j, "labels");
  auto m = matrix_from_json(j, "coords", labels.size());
  return PointConfig(std::move(labels), std::move(m));
}

json points_to_json(const PointConfig& p) {
  return json{{"labels", p.labels()}, {"coords", matrix_to_json(p.coords())}};
}

Graph graph_from_edge_list(std::istream& in) {
  Graph g;
  std::string base;
  std::string line;
  auto ensure_vertex = [&](const std::string& v) {
    if (!g.has_vertex(v)) g.add_vertex(v);
  };
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::stringstream ss(line);
    std::vector<std::string> tok;
    std::string t;
    while (ss >> t) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok[0] == "!base") {
      if (tok.size() != 2) throw ValidationError("!base takes one vertex label");
      base = tok[1];
      ensure_vertex(base);
    } else if (tok[0] == "!vertex") {
      if (tok.size() != 2) throw ValidationError("!vertex takes one vertex label");
      ensure_vertex(tok[1]);
    } else if (tok.size() == 2 || tok.size() == 3) {
      ensure_vertex(tok[0]);
      ensure_vertex(tok[1]);
      double w = 1.0;
      if (tok.size() == 3) {
        try {
          size_t used = 0;
          w = std::stod(tok[2], &used);
          if (used != tok[2].size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
          throw ValidationError("edge weight is not a number: '" + tok[2] + "'");
        }
      }
      g.add_edge(tok[0], tok[1], w);
    } else {
      throw ValidationError("malformed edge list line: '" + line + "'");
    }
  }
  if (!base.empty()) g.set_basepoint(base);
  if (g.size() == 0) throw ValidationError("edge list describes an empty graph");
  return g;
}

std::string graph_to_edge_list(const Graph& g) {
  std::ostringstream out;
  if (g.basepoint()) out << "!base " << *g.basepoint() << '\n';
  std::vector<char> covered(g.size(), 0);
  for (const auto& e : g.edges()) {
    covered[e.u] = 1;
    covered[e.v] = 1;
  }
  for (int i = 0; i < g.size(); ++i)
    if (!covered[i]) out << "!vertex " << g.vertex(i) << '\n';
  char buf[40];
  for (const auto& e : g.edges()) {
    out << g.vertex(e.u) << ' ' << g.vertex(e.v);
    if (e.weight != 1.0) {
      std::snprintf(buf, sizeof buf, "%.12g", e.weight);
      out << ' ' << buf;
    }
    out << '\n';
  }
  return out.str();
}

GroupPresentation presentation_from_json(const json& j) {
  GroupPresentation p;
  if (!j.contains("kind") || !j["kind"].is_string())
    throw ValidationError("missing 'kind' field ('coxeter' or 'artin')");
  std::string kind = j["kind"].get<std::string>();
  if (kind == "coxeter")
    p.kind = GroupPresentation::Kind::coxeter;
  else if (kind == "artin")
    p.kind = GroupPresentation::Kind::artin;
  else
    throw ValidationError("unknown presentation kind: '" + kind + "'");

  p.generators = labels_from_json(j, "generators");
  const int r = static_cast<int>(p.generators.size());
  if (!j.contains("m") || !j["m"].is_array() || j["m"].size() != p.generators.size())
    throw ValidationError("missing or misshapen coefficient table 'm'");
  p.coefficients.resize(r, r);
  for (int i = 0; i < r; ++i) {
    const json& row = j["m"][static_cast<size_t>(i)];
    if (!row.is_array() || row.size() != p.generators.size())
      throw ValidationError("coefficient table rows must match the generator count");
    for (int c = 0; c < r; ++c) {
      const json& cell = row[static_cast<size_t>(c)];
      if (cell.is_null() || (cell.is_string() && cell.get<std::string>() == "inf"))
        p.coefficients(i, c) = kNoRelation;
      else if (cell.is_number_integer())
        p.coefficients(i, c) = cell.get<int>();
      else
        throw ValidationError("coefficients must be integers or \"inf\"");
    }
  }
  p.validate();
  return p;
}

CircleSample circle_from_json(const json& j) {
  CircleSample s;
  if (!j.contains("angles") || !j["angles"].is_array())
    throw ValidationError("missing 'angles' array");
  for (const auto& a : j["angles"]) {
    if (!a.is_number()) throw ValidationError("angles must be numbers");
    s.angles.push_back(a.get<double>());
  }
  if (!j.contains("L") || !j["L"].is_number())
    throw ValidationError("missing circumference 'L'");
  s.circumference = j["L"].get<double>();
  return s;
}

json report_to_json(const ClassReport& r) {
  json spectrum = json::array();
  for (double v : r.kernel_spectrum) spectrum.push_back(rounded(v));
  json reduced = json::array();
  for (double v : r.reduced_spectrum) reduced.push_back(rounded(v));
  json out{
      {"verdicts",
       {{"pd", to_string(r.pd)},
        {"spd", to_string(r.spd)},
        {"cnd", to_string(r.cnd)},
        {"csnd", to_string(r.csnd)}}},
      {"kernel_spectrum", std::move(spectrum)},
      {"reduced_spectrum", std::move(reduced)},
      {"tolerance", rounded(r.tolerance_used)},
      {"scale", rounded(r.scale)},
  };
  if (r.certificate) {
    out["certificate"] = vector_to_json(*r.certificate);
    out["certificate_for"] = r.certificate_for;
  }
  return out;
}

json invertibility_to_json(const InvertibilityReport& r) {
  json out{{"csnd", r.csnd},
           {"exact", r.exact},
           {"determinant", rounded(r.determinant)}};
  if (r.exact) out["determinant_exact"] = r.determinant_exact;
  return out;
}

json decomposition_to_json(const SpdShiftDecomposition& d) {
  return json{{"A", kernel_to_json(d.spd_part)}, {"c", rounded(d.shift)}};
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file: " + path);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw ValidationError("file is not valid JSON: " + path);
  return j;
}

KernelMatrix load_kernel_file(const std::string& path) {
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open file: " + path);
    return kernel_from_csv(in);
  }
  return kernel_from_json(load_json_file(path));
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file: " + path);
  return graph_from_edge_list(in);
}

}  // namespace csnd
