#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rieszarc/arcs.hpp"
#include "rieszarc/block_union.hpp"
#include "rieszarc/common.hpp"
#include "rieszarc/gram.hpp"
#include "rieszarc/multiplicity.hpp"
#include "rieszarc/salpha.hpp"
#include "rieszarc/trig_poly.hpp"

namespace rieszarc {

// 17 significant digits: enough to reproduce any double exactly on re-parse.
inline std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return std::string(buf);
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw io_error("write failed: " + path);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open for reading: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw io_error("read failed: " + path);
  return ss.str();
}

inline nlohmann::json parse_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw io_error("malformed JSON");
  return j;
}

// ---- ArcSet with construction metadata ----

struct ArcSetFile {
  ArcSet set;
  double alpha = 0.0;
  double eps = 0.0;
  double c0 = 0.0;
  std::int64_t L = 0;
  double tail_bound = 0.0;
};

inline std::string arcset_to_json(const ArcSetFile& f) {
  std::ostringstream out;
  out << "{\n  \"arcs\": [";
  const auto& arcs = f.set.arcs();
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (i) out << ",";
    out << "\n    [" << format_double(arcs[i].start) << ", "
        << format_double(arcs[i].end) << "]";
  }
  if (!arcs.empty()) out << "\n  ";
  out << "],\n";
  out << "  \"alpha\": " << format_double(f.alpha) << ",\n";
  out << "  \"eps\": " << format_double(f.eps) << ",\n";
  out << "  \"c0\": " << format_double(f.c0) << ",\n";
  out << "  \"L\": " << f.L << ",\n";
  out << "  \"tail_bound\": " << format_double(f.tail_bound) << "\n";
  out << "}\n";
  return out.str();
}

inline ArcSetFile arcset_from_json(const std::string& text) {
  const nlohmann::json j = parse_json(text);
  if (!j.contains("arcs") || !j["arcs"].is_array())
    throw io_error("arc set file needs an \"arcs\" array");
  ArcSetFile f;
  std::vector<Arc> raw;
  for (const auto& pair : j["arcs"]) {
    if (!pair.is_array() || pair.size() != 2)
      throw io_error("each arc must be a [start, end] pair");
    raw.push_back(Arc{pair[0].get<double>(), pair[1].get<double>()});
  }
  f.set = ArcSet::from_canonical(std::move(raw));
  f.alpha = j.value("alpha", 0.0);
  f.eps = j.value("eps", 0.0);
  f.c0 = j.value("c0", 0.0);
  f.L = j.value("L", std::int64_t{0});
  f.tail_bound = j.value("tail_bound", 0.0);
  return f;
}

// ---- TrigPoly ----

inline std::string trig_poly_to_json(const TrigPoly& q) {
  std::ostringstream out;
  out << "{\n  \"terms\": [";
  bool first = true;
  for (const auto& [k, c] : q.terms()) {
    if (!first) out << ",";
    first = false;
    out << "\n    [" << k << ", " << format_double(c.real()) << ", "
        << format_double(c.imag()) << "]";
  }
  if (!first) out << "\n  ";
  out << "]\n}\n";
  return out.str();
}

inline TrigPoly trig_poly_from_json(const std::string& text) {
  const nlohmann::json j = parse_json(text);
  if (!j.contains("terms") || !j["terms"].is_array())
    throw io_error("polynomial file needs a \"terms\" array");
  TrigPoly q;
  for (const auto& t : j["terms"]) {
    if (!t.is_array() || t.size() != 3)
      throw io_error("each term must be a [k, re, im] triple");
    q.set_coeff(t[0].get<std::int64_t>(),
                cplx(t[1].get<double>(), t[2].get<double>()));
  }
  return q;
}

// ---- GramMatrix ----

inline std::string gram_to_csv(const GramMatrix& G) {
  std::ostringstream out;
  const auto n = G.dim();
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      if (c) out << ",";
      const cplx z = G.m(r, c);
      out << "\"" << format_double(z.real()) << "," << format_double(z.imag())
          << "\"";
    }
    out << "\n";
  }
  return out.str();
}

// The CSV carries only the matrix; mu_s is not part of this format.
inline GramMatrix gram_from_csv(const std::string& text) {
  std::vector<std::vector<cplx>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    std::vector<cplx> row;
    std::size_t pos = 0;
    while (pos < line.size()) {
      if (line[pos] != '"') throw io_error("gram CSV cell must be quoted");
      const std::size_t close = line.find('"', pos + 1);
      if (close == std::string::npos) throw io_error("unterminated gram cell");
      const std::string cell = line.substr(pos + 1, close - pos - 1);
      const std::size_t comma = cell.find(',');
      if (comma == std::string::npos)
        throw io_error("gram cell must contain re,im");
      try {
        row.emplace_back(std::stod(cell.substr(0, comma)),
                         std::stod(cell.substr(comma + 1)));
      } catch (const std::exception&) {
        throw io_error("unparsable number in gram cell");
      }
      pos = close + 1;
      if (pos < line.size() && line[pos] == ',') ++pos;
    }
    rows.push_back(std::move(row));
  }
  const std::size_t n = rows.size();
  require(n > 0, "gram CSV is empty");
  for (const auto& r : rows)
    if (r.size() != n) throw io_error("gram CSV is not square");
  GramMatrix G;
  G.m.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      G.m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          rows[r][c];
  G.mu_s = 0.0;
  return G;
}

inline std::string bounds_report_to_json(const RieszBounds& b,
                                         std::uint64_t seed) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"A\": " << format_double(b.A) << ",\n";
  out << "  \"B\": " << format_double(b.B) << ",\n";
  out << "  \"dim\": " << b.dim << ",\n";
  out << "  \"mu_S\": " << format_double(b.mu_S) << ",\n";
  out << "  \"seed\": " << seed << "\n";
  out << "}\n";
  return out.str();
}

// ---- StepProfile ----

inline std::string profile_to_json(const StepProfile& p) {
  std::ostringstream out;
  out << "{\n  \"ell\": " << p.ell << ",\n  \"breakpoints\": [";
  for (std::size_t i = 0; i < p.breakpoints.size(); ++i) {
    if (i) out << ", ";
    out << format_double(p.breakpoints[i]);
  }
  out << "],\n  \"values\": [";
  for (std::size_t i = 0; i < p.values.size(); ++i) {
    if (i) out << ", ";
    out << p.values[i];
  }
  out << "]\n}\n";
  return out.str();
}

inline StepProfile profile_from_json(const std::string& text) {
  const nlohmann::json j = parse_json(text);
  StepProfile p;
  if (!j.contains("ell") || !j.contains("breakpoints") || !j.contains("values"))
    throw io_error("profile file needs ell, breakpoints, values");
  p.ell = j["ell"].get<std::int64_t>();
  p.breakpoints = j["breakpoints"].get<std::vector<double>>();
  p.values = j["values"].get<std::vector<std::int64_t>>();
  if (p.breakpoints.size() != p.values.size())
    throw io_error("profile breakpoints and values must align");
  return p;
}

// ---- Assembly ----

inline std::string assembly_to_json(const BlockSchedule& sched,
                                    const Assembly& a) {
  std::ostringstream out;
  out << "{\n  \"blocks\": [";
  for (std::size_t b = 0; b < sched.blocks.size(); ++b) {
    if (b) out << ",";
    out << "\n    [";
    const auto& fs = sched.blocks[b].freqs;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (i) out << ", ";
      out << fs[i];
    }
    out << "]";
  }
  if (!sched.blocks.empty()) out << "\n  ";
  out << "],\n  \"translations\": [";
  for (std::size_t i = 0; i < a.translations.size(); ++i) {
    if (i) out << ", ";
    out << a.translations[i];
  }
  out << "],\n";
  out << "  \"bound\": " << format_double(a.bound) << ",\n";
  out << "  \"target\": " << format_double(a.target) << ",\n";
  out << "  \"mode\": \""
      << (a.mode == SearchMode::linear ? "linear" : "coarse") << "\"\n";
  out << "}\n";
  return out.str();
}

// ---- Counting table ----

struct CountingRow {
  double x = 0.0;
  std::int64_t N = 0;
  double rho = 0.0;
  std::int64_t count = 0;
  double ratio = 0.0;  // count / N^(1-rho)
};

inline std::string counting_to_csv(const std::vector<CountingRow>& rows) {
  std::ostringstream out;
  out << "x,N,rho,count,ratio\n";
  for (const auto& r : rows)
    out << format_double(r.x) << "," << r.N << "," << format_double(r.rho)
        << "," << r.count << "," << format_double(r.ratio) << "\n";
  return out.str();
}

inline std::vector<CountingRow> counting_from_csv(const std::string& text) {
  std::vector<CountingRow> rows;
  std::istringstream lines(text);
  std::string line;
  bool header = true;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    std::istringstream cells(line);
    std::string cell;
    std::vector<std::string> parts;
    while (std::getline(cells, cell, ',')) parts.push_back(cell);
    if (parts.size() != 5) throw io_error("counting CSV row needs 5 columns");
    CountingRow r;
    try {
      r.x = std::stod(parts[0]);
      r.N = std::stoll(parts[1]);
      r.rho = std::stod(parts[2]);
      r.count = std::stoll(parts[3]);
      r.ratio = std::stod(parts[4]);
    } catch (const std::exception&) {
      throw io_error("unparsable number in counting CSV");
    }
    rows.push_back(r);
  }
  return rows;
}

}  // namespace rieszarc
