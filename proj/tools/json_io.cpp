#include "json_io.hpp"

#include <fstream>
#include <sstream>

namespace herglotz::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::MalformedInput, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
}

Rat to_rat(const Json& j) {
  if (j.is_number_integer()) return Rat(mpz_class(j.dump()));
  if (j.is_string()) return parse_rat(j.get<std::string>());
  bad("expected a rational literal, got " + j.dump());
}

GaussRat to_gauss(const Json& j) {
  if (j.is_object()) {
    const Rat re = j.contains("re") ? to_rat(j.at("re")) : Rat(0);
    const Rat im = j.contains("im") ? to_rat(j.at("im")) : Rat(0);
    for (const auto& [k, v] : j.items())
      if (k != "re" && k != "im") bad("unexpected key '" + k + "' in complex literal");
    return GaussRat(re, im);
  }
  return GaussRat(to_rat(j));
}

Poly to_poly(const Json& j) {
  if (!j.is_array()) bad("expected a coefficient array, got " + j.dump());
  std::vector<GaussRat> c;
  for (const auto& x : j) c.push_back(to_gauss(x));
  return Poly(std::move(c));
}

RatFn to_ratfn(const Json& j) {
  if (j.is_array()) return RatFn(to_poly(j));
  if (!j.is_object()) return RatFn(to_gauss(j));
  const Poly num = to_poly(field(j, "num"));
  const Poly den = j.contains("den") ? to_poly(j.at("den")) : Poly::constant(1);
  if (den.is_zero()) bad("zero denominator");
  return RatFn(num, den);
}

MatRatFn to_matrix(const Json& j) {
  const Json& nj = field(j, "n");
  if (!nj.is_number_integer() || nj.get<long>() < 1) bad("'n' must be a positive integer");
  const int n = nj.get<int>();
  const Json& rows = field(j, "entries");
  if (!rows.is_array() || static_cast<int>(rows.size()) != n) bad("'entries' must have n rows");
  MatRatFn m(n, n);
  for (int i = 0; i < n; ++i) {
    if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != n) bad("every row must have n entries");
    for (int k = 0; k < n; ++k) m(i, k) = to_ratfn(rows[i][k]);
  }
  return m;
}

RealAlgebraic to_point(const Json& j) {
  if (!j.is_object()) return RealAlgebraic(to_rat(j));
  const Poly p = to_poly(field(j, "poly"));
  const Json& iv = field(j, "interval");
  if (!iv.is_array() || iv.size() != 2) bad("'interval' must be [a, b]");
  if (!p.is_real()) bad("defining polynomial must be real");
  return RealAlgebraic::from_isolating_interval(p, to_rat(iv[0]), to_rat(iv[1]));
}

DivisorFn to_divisor(const Json& j) {
  if (!j.is_array()) bad("divisor must be an array");
  std::vector<DivisorPoint> pts;
  for (const auto& e : j) {
    const Json& v = field(e, "value");
    if (!v.is_number_integer()) bad("divisor value must be an integer");
    pts.push_back({to_point(field(e, "point")), v.get<int>()});
  }
  return DivisorFn::from_points(std::move(pts));
}

InterlacingData to_interlacing(const Json& j) {
  InterlacingData d;
  for (const auto& x : field(j, "zeros")) d.zeros.push_back(to_point(x));
  for (const auto& x : field(j, "poles")) d.poles.push_back(to_point(x));
  if (j.contains("scale")) d.scale = to_rat(j.at("scale"));
  return d;
}

Json from(const Rat& r) { return to_string(r); }

Json from(const GaussRat& z) {
  if (z.im() == 0) return from(z.re());
  return Json{{"re", to_string(z.re())}, {"im", to_string(z.im())}};
}

Json from(const Poly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(from(c));
  return a;
}

Json from(const RatFn& f) { return Json{{"num", from(f.num())}, {"den", from(f.den())}}; }

Json from(const MatRatFn& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(from(m(i, k)));
    rows.push_back(std::move(row));
  }
  return Json{{"n", m.rows()}, {"entries", std::move(rows)}};
}

Json from(const RealAlgebraic& x) {
  if (x.is_rational()) return from(x.value());
  return Json{{"poly", from(x.defining_poly())}, {"interval", Json::array({from(x.lo()), from(x.hi())})}};
}

Json from(const DivisorFn& d) {
  Json a = Json::array();
  for (const auto& p : d.support()) a.push_back(Json{{"point", from(p.point)}, {"value", p.value}});
  return a;
}

Json from(const Verdict& v) {
  Json checks = Json::array();
  for (const Check& c : v.checks) {
    Json w = Json::object();
    // Repeated witness names collect into an array.
    for (const auto& [k, val] : c.witness) {
      if (!w.contains(k)) {
        w[k] = val;
      } else {
        if (!w[k].is_array()) w[k] = Json::array({w[k]});
        w[k].push_back(val);
      }
    }
    checks.push_back(Json{{"index_set", c.index_set}, {"condition", c.condition}, {"result", c.result}, {"witness", w}});
  }
  Json out{{"outcome", std::string(outcome_name(v.outcome))}, {"checks", std::move(checks)}};
  if (!v.notes.empty()) out["notes"] = v.notes;
  return out;
}

}  // namespace herglotz::io
