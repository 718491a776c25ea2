#include "ineq/serialize.hpp"

#include <stdexcept>

namespace ineq {

Json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw std::invalid_argument("parse: rational must be a string");
  return Rational::parse(j.get<std::string>());
}

Json point_to_json(const Point& p) { return Json::array({p.x.str(), p.y.str()}); }

Point point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("parse: point must be [x, y]");
  return Point{rational_from_json(j[0]), rational_from_json(j[1])};
}

Json line_to_json(const Line& l) { return Json::array({l.a().str(), l.b().str(), l.c().str()}); }

Line line_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw std::invalid_argument("parse: line must be [a, b, c]");
  return Line::from_coeffs(rational_from_json(j[0]), rational_from_json(j[1]),
                           rational_from_json(j[2]));
}

Json matrix_to_json(const NonNegMatrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m.at(i, k).str());
    entries.push_back(std::move(row));
  }
  return Json{{"n", m.rows()}, {"m", m.cols()}, {"entries", std::move(entries)}};
}

NonNegMatrix matrix_from_json(const Json& j) {
  const auto& entries = j.at("entries");
  if (!entries.is_array() || entries.empty())
    throw std::invalid_argument("parse: entries must be a non-empty array of rows");
  std::vector<std::vector<Rational>> rows;
  rows.reserve(entries.size());
  for (const auto& row : entries) {
    std::vector<Rational> r;
    r.reserve(row.size());
    for (const auto& e : row) r.push_back(rational_from_json(e));
    rows.push_back(std::move(r));
  }
  NonNegMatrix m = NonNegMatrix::from_rows(std::move(rows));
  if (j.contains("n") && j.at("n").get<std::size_t>() != m.rows())
    throw std::invalid_argument("parse: declared n does not match the entry rows");
  if (j.contains("m") && j.at("m").get<std::size_t>() != m.cols())
    throw std::invalid_argument("parse: declared m does not match the entry columns");
  return m;
}

namespace {

Json pair_to_json(const std::pair<Rational, Rational>& p) {
  return Json::array({p.first.str(), p.second.str()});
}

std::pair<Rational, Rational> pair_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("parse: pair must be [u, v]");
  return {rational_from_json(j[0]), rational_from_json(j[1])};
}

Json rational_vec_to_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(r.str());
  return out;
}

std::vector<Rational> rational_vec_from_json(const Json& j) {
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(rational_from_json(e));
  return out;
}

Json polygon_to_json(const Polygon& p) {
  Json out = Json::array();
  for (const auto& v : p.vertices()) out.push_back(point_to_json(v));
  return out;
}

Polygon polygon_from_json(const Json& j) {
  std::vector<Point> pts;
  pts.reserve(j.size());
  for (const auto& e : j) pts.push_back(point_from_json(e));
  return Polygon::from_vertices(std::move(pts));
}

}  // namespace

Json instance_to_json(const Instance& inst) {
  struct Visitor {
    Json operator()(const HolderInstance& h) {
      Json j = matrix_to_json(h.matrix);
      j["statement"] = "holder";
      j["exponents"] = rational_vec_to_json(h.exponents.values());
      return j;
    }
    Json operator()(const CbsInstance& c) {
      Json j = matrix_to_json(c.matrix);
      j["statement"] = "cbs";
      return j;
    }
    Json operator()(const MinkowskiInstance& mk) {
      Json j = matrix_to_json(mk.matrix);
      j["statement"] = "minkowski";
      j["p"] = mk.p.str();
      return j;
    }
    Json operator()(const ChebyshevInstance& ch) {
      Json j = matrix_to_json(ch.matrix);
      j["statement"] = "chebyshev";
      return j;
    }
    Json operator()(const ApplicationInstance& ap) {
      return Json{{"statement", "application"},
                  {"a", pair_to_json(ap.a)},
                  {"b", pair_to_json(ap.b)},
                  {"c", pair_to_json(ap.c)}};
    }
    Json operator()(const MenelausInstance& me) {
      Json j{{"statement", "menelaus"},
             {"vertices", polygon_to_json(me.polygon)},
             {"line", line_to_json(me.line)}};
      if (me.forced_points) {
        Json pts = Json::array();
        for (const auto& p : *me.forced_points) pts.push_back(point_to_json(p));
        j["forced_points"] = std::move(pts);
      }
      return j;
    }
  };
  return std::visit(Visitor{}, inst);
}

Instance instance_from_json(const Json& j) {
  const std::string kind = j.at("statement").get<std::string>();
  if (kind == "holder") {
    return HolderInstance{matrix_from_json(j),
                          ExponentVector::from(rational_vec_from_json(j.at("exponents")))};
  }
  if (kind == "cbs") return CbsInstance{matrix_from_json(j)};
  if (kind == "minkowski")
    return MinkowskiInstance{matrix_from_json(j), rational_from_json(j.at("p"))};
  if (kind == "chebyshev") return ChebyshevInstance{matrix_from_json(j)};
  if (kind == "application")
    return ApplicationInstance{pair_from_json(j.at("a")), pair_from_json(j.at("b")),
                               pair_from_json(j.at("c"))};
  if (kind == "menelaus") {
    MenelausInstance me{polygon_from_json(j.at("vertices")), line_from_json(j.at("line")),
                        std::nullopt};
    if (j.contains("forced_points")) {
      std::vector<Point> pts;
      for (const auto& e : j.at("forced_points")) pts.push_back(point_from_json(e));
      me.forced_points = std::move(pts);
    }
    return me;
  }
  throw std::invalid_argument("parse: unknown statement '" + kind + "'");
}

Json verdict_to_json(const Verdict& v) {
  Json j{{"outcome", outcome_name(v.outcome)}};
  if (v.gap_bound) j["gap_bound"] = v.gap_bound->str();
  if (v.evidence)
    j["evidence"] = Json{{"lhs", v.evidence->lhs}, {"rhs", v.evidence->rhs},
                         {"note", v.evidence->note}};
  return j;
}

namespace {

Json step_to_json(const TraceStep& step) {
  struct Visitor {
    Json operator()(const HolderSplitStep& s) {
      return Json{{"type", "holder_split"},
                  {"level", s.level},
                  {"p_left", s.p_left.str()},
                  {"p_right", s.p_right.str()},
                  {"derived_p", s.derived_p.str()},
                  {"t1", s.t1.str()},
                  {"t2", s.t2.str()},
                  {"col_left", rational_vec_to_json(s.col_left)},
                  {"col_right", rational_vec_to_json(s.col_right)}};
    }
    Json operator()(const MinkowskiPeelStep& s) {
      return Json{{"type", "minkowski_peel"},
                  {"level", s.level},
                  {"p", s.p.str()},
                  {"peeled_col", rational_vec_to_json(s.peeled_col)},
                  {"rest_row_sums", rational_vec_to_json(s.rest_row_sums)}};
    }
    Json operator()(const ChebyshevPeelStep& s) {
      return Json{{"type", "chebyshev_peel"},
                  {"level", s.level},
                  {"product_prefix", rational_vec_to_json(s.product_prefix)},
                  {"peeled_col", rational_vec_to_json(s.peeled_col)}};
    }
    Json operator()(const MenelausCutStep& s) {
      return Json{{"type", "menelaus_cut"},
                  {"level", s.level},
                  {"a1", point_to_json(s.a1)},
                  {"a2", point_to_json(s.a2)},
                  {"an", point_to_json(s.an)},
                  {"cut_point", point_to_json(s.cut_point)},
                  {"m1", point_to_json(s.m1)},
                  {"mn", point_to_json(s.mn)},
                  {"r1", s.r1.str()},
                  {"cut_ratio", s.cut_ratio.str()},
                  {"rn", s.rn.str()}};
    }
  };
  return std::visit(Visitor{}, step);
}

TraceStep step_from_json(const Json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "holder_split") {
    HolderSplitStep s;
    s.level = j.at("level").get<std::size_t>();
    s.p_left = rational_from_json(j.at("p_left"));
    s.p_right = rational_from_json(j.at("p_right"));
    s.derived_p = rational_from_json(j.at("derived_p"));
    s.t1 = rational_from_json(j.at("t1"));
    s.t2 = rational_from_json(j.at("t2"));
    s.col_left = rational_vec_from_json(j.at("col_left"));
    s.col_right = rational_vec_from_json(j.at("col_right"));
    return s;
  }
  if (type == "minkowski_peel") {
    MinkowskiPeelStep s;
    s.level = j.at("level").get<std::size_t>();
    s.p = rational_from_json(j.at("p"));
    s.peeled_col = rational_vec_from_json(j.at("peeled_col"));
    s.rest_row_sums = rational_vec_from_json(j.at("rest_row_sums"));
    return s;
  }
  if (type == "chebyshev_peel") {
    ChebyshevPeelStep s;
    s.level = j.at("level").get<std::size_t>();
    s.product_prefix = rational_vec_from_json(j.at("product_prefix"));
    s.peeled_col = rational_vec_from_json(j.at("peeled_col"));
    return s;
  }
  if (type == "menelaus_cut") {
    MenelausCutStep s;
    s.level = j.at("level").get<std::size_t>();
    s.a1 = point_from_json(j.at("a1"));
    s.a2 = point_from_json(j.at("a2"));
    s.an = point_from_json(j.at("an"));
    s.cut_point = point_from_json(j.at("cut_point"));
    s.m1 = point_from_json(j.at("m1"));
    s.mn = point_from_json(j.at("mn"));
    s.r1 = rational_from_json(j.at("r1"));
    s.cut_ratio = rational_from_json(j.at("cut_ratio"));
    s.rn = rational_from_json(j.at("rn"));
    return s;
  }
  throw std::invalid_argument("parse: unknown step type '" + type + "'");
}

}  // namespace

Json trace_to_json(const ProofTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) steps.push_back(step_to_json(s));
  return Json{{"statement", statement_name(t.kind)},
              {"instance", instance_to_json(t.instance)},
              {"steps", std::move(steps)},
              {"base_instance", instance_to_json(t.base_instance)},
              {"base_case_count", t.base_case_count}};
}

ProofTrace trace_from_json(const Json& j) {
  auto kind = statement_from_name(j.at("statement").get<std::string>());
  if (!kind) throw std::invalid_argument("parse: unknown trace statement");
  ProofTrace t{*kind, instance_from_json(j.at("instance")), {},
               instance_from_json(j.at("base_instance")),
               j.at("base_case_count").get<std::size_t>()};
  for (const auto& s : j.at("steps")) t.steps.push_back(step_from_json(s));
  return t;
}

Json trace_verdict_to_json(const TraceVerdict& tv) {
  Json steps = Json::array();
  for (const auto& s : tv.step_results) {
    Json e{{"verdict", verdict_to_json(s.verdict)}, {"bookkeeping_ok", s.bookkeeping_ok}};
    if (!s.detail.empty()) e["detail"] = s.detail;
    steps.push_back(std::move(e));
  }
  return Json{{"steps", std::move(steps)},
              {"base", verdict_to_json(tv.base_result)},
              {"overall", verdict_to_json(tv.overall)},
              {"bookkeeping_ok", tv.bookkeeping_ok}};
}

}  // namespace ineq
