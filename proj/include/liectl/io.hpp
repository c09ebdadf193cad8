#pragma once

// JSON and CSV boundaries: matrix literals {"n", "re", "im"}, system and law
// files, report serialization, trajectory CSV. Anything malformed raises
// Error(Parse) naming the offending field; physical invariants are left to
// the domain validators.

#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "control.hpp"
#include "report.hpp"

namespace liectl::io {

using json = nlohmann::ordered_json;

inline const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw Error(ErrorKind::Parse, where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw Error(ErrorKind::Parse, where + ": missing field '" + key + "'");
  return *it;
}

inline double number(const json& j, const std::string& where) {
  if (!j.is_number()) throw Error(ErrorKind::Parse, where + ": expected a number");
  return j.get<double>();
}

inline ComplexMatrix parse_matrix(const json& j, const std::string& where) {
  const json& nj = field(j, "n", where);
  if (!nj.is_number_integer() || nj.get<long>() < 1) throw Error(ErrorKind::Parse, where + ".n: expected integer >= 1");
  const auto n = static_cast<Eigen::Index>(nj.get<long>());
  auto read = [&](const char* key, bool required) -> RealMatrix {
    RealMatrix m = RealMatrix::Zero(n, n);
    auto it = j.find(key);
    if (it == j.end()) {
      if (required) throw Error(ErrorKind::Parse, where + ": missing field '" + key + "'");
      return m;
    }
    const std::string w = where + "." + key;
    if (!it->is_array() || static_cast<Eigen::Index>(it->size()) != n)
      throw Error(ErrorKind::Parse, w + ": expected " + std::to_string(n) + " rows");
    for (Eigen::Index r = 0; r < n; ++r) {
      const json& row = (*it)[r];
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n)
        throw Error(ErrorKind::Parse, w + "[" + std::to_string(r) + "]: expected " + std::to_string(n) + " entries");
      for (Eigen::Index c = 0; c < n; ++c) m(r, c) = number(row[c], w + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
    }
    return m;
  };
  const RealMatrix re = read("re", true);
  const RealMatrix im = read("im", false);
  ComplexMatrix out(n, n);
  out.real() = re;
  out.imag() = im;
  return out;
}

inline json to_json(const ComplexMatrix& m) {
  json re = json::array(), im = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json rr = json::array(), ir = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      rr.push_back(m(r, c).real());
      ir.push_back(m(r, c).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ir));
  }
  return json{{"n", m.rows()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

/// {"n", "convention": "hermitian"|"anti_hermitian", "drift": matrix|null,
///  "controls": [matrix, ...], "bound": number|"unbounded"}.
/// Hermitian blocks H are stored as Omega = -iH. Only the schema is checked
/// here; call validate() for the generator invariants.
inline ControlSystem parse_system(const json& j) {
  const std::string where = "system";
  const json& nj = field(j, "n", where);
  if (!nj.is_number_integer() || nj.get<long>() < 1) throw Error(ErrorKind::Parse, "system.n: expected integer >= 1");
  ControlSystem sys;
  sys.n = nj.get<long>();

  const json& conv = field(j, "convention", where);
  if (!conv.is_string() || (conv != "hermitian" && conv != "anti_hermitian"))
    throw Error(ErrorKind::Parse, "system.convention: expected \"hermitian\" or \"anti_hermitian\"");
  const Complex factor = conv == "hermitian" ? Complex(0.0, -1.0) : Complex(1.0, 0.0);

  auto load = [&](const json& m, const std::string& w) {
    ComplexMatrix x = parse_matrix(m, w);
    if (x.rows() != sys.n) throw Error(ErrorKind::Parse, w + ".n: does not match system.n");
    return ComplexMatrix(factor * x);
  };

  auto dit = j.find("drift");
  sys.drift = (dit == j.end() || dit->is_null()) ? ComplexMatrix::Zero(sys.n, sys.n) : load(*dit, "system.drift");

  const json& controls = field(j, "controls", where);
  if (!controls.is_array() || controls.empty())
    throw Error(ErrorKind::Parse, "system.controls: expected a non-empty array of matrices");
  for (std::size_t i = 0; i < controls.size(); ++i)
    sys.controls.push_back(load(controls[i], "system.controls[" + std::to_string(i) + "]"));

  auto bit = j.find("bound");
  if (bit != j.end() && !bit->is_null()) {
    if (bit->is_string()) {
      if (*bit != "unbounded") throw Error(ErrorKind::Parse, "system.bound: expected a number or \"unbounded\"");
    } else {
      const double b = number(*bit, "system.bound");
      if (!(b > 0.0) || !std::isfinite(b)) throw Error(ErrorKind::Parse, "system.bound: must be positive and finite");
      sys.bound = b;
    }
  }
  return sys;
}

inline ControlLaw parse_law(const json& j) {
  ControlLaw law;
  const json& bp = field(j, "breakpoints", "law");
  const json& vals = field(j, "values", "law");
  if (!bp.is_array() || !vals.is_array()) throw Error(ErrorKind::Parse, "law: breakpoints and values must be arrays");
  for (std::size_t i = 0; i < bp.size(); ++i) law.breakpoints.push_back(number(bp[i], "law.breakpoints[" + std::to_string(i) + "]"));
  for (std::size_t i = 0; i < vals.size(); ++i) {
    const std::string w = "law.values[" + std::to_string(i) + "]";
    if (!vals[i].is_array()) throw Error(ErrorKind::Parse, w + ": expected an array");
    RealVector v(static_cast<Eigen::Index>(vals[i].size()));
    for (std::size_t c = 0; c < vals[i].size(); ++c) v[c] = number(vals[i][c], w + "[" + std::to_string(c) + "]");
    law.values.push_back(std::move(v));
  }
  if (law.breakpoints.size() != law.values.size() + 1)
    throw Error(ErrorKind::Parse, "law: need exactly one more breakpoint than value rows");
  return law;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, origin + ": " + e.what());
  }
}

inline json to_json(const Report& r) {
  json entries = json::array();
  for (const auto& e : r.entries) entries.push_back({{"condition", e.condition}, {"residual", e.residual}, {"pass", e.pass}});
  return json{{"pass", r.pass()}, {"entries", std::move(entries)}};
}

/// Header t,re_00,im_00,re_01,... with row-major entries at 17 digits.
inline std::string trajectory_csv(const Trajectory& traj) {
  std::ostringstream out;
  out << std::setprecision(17);
  out << "t";
  const Eigen::Index n = traj.points.empty() ? 0 : traj.points.front().rows();
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) out << ",re_" << r << c << ",im_" << r << c;
  out << '\n';
  for (std::size_t i = 0; i < traj.size(); ++i) {
    out << traj.times[i];
    for (Eigen::Index r = 0; r < n; ++r)
      for (Eigen::Index c = 0; c < n; ++c) out << ',' << traj.points[i](r, c).real() << ',' << traj.points[i](r, c).imag();
    out << '\n';
  }
  return out.str();
}

}  // namespace liectl::io
