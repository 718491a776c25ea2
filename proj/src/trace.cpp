#include "ineq/trace.hpp"

#include <stdexcept>

namespace ineq {

namespace {

Expr pow_sum_expr(const std::vector<Rational>& values, const Rational& e) {
  std::vector<Expr> terms;
  terms.reserve(values.size());
  for (const auto& v : values) terms.push_back(Expr::pow(Expr::constant(v), e));
  return Expr::sum(std::move(terms));
}

std::optional<Rational> exact_pow_sum(const std::vector<Rational>& values, const Rational& e) {
  Rational acc(0);
  for (const auto& v : values) {
    auto t = pow_exact(v, e);
    if (!t) return std::nullopt;
    acc += *t;
  }
  return acc;
}

}  // namespace

Expr HolderSplitStep::lhs_bound() const {
  std::vector<Rational> prods;
  prods.reserve(col_left.size());
  for (std::size_t i = 0; i < col_left.size(); ++i) prods.push_back(col_left[i] * col_right[i]);
  return Expr::pow(pow_sum_expr(prods, derived_p), derived_p.reciprocal());
}

Expr HolderSplitStep::rhs_bound() const {
  return Expr::product({Expr::pow(pow_sum_expr(col_left, p_left), p_left.reciprocal()),
                        Expr::pow(pow_sum_expr(col_right, p_right), p_right.reciprocal())});
}

Expr MinkowskiPeelStep::lhs_bound() const {
  std::vector<Rational> sums;
  sums.reserve(peeled_col.size());
  for (std::size_t i = 0; i < peeled_col.size(); ++i)
    sums.push_back(peeled_col[i] + rest_row_sums[i]);
  return Expr::pow(pow_sum_expr(sums, p), p.reciprocal());
}

Expr MinkowskiPeelStep::rhs_bound() const {
  return Expr::sum({Expr::pow(pow_sum_expr(peeled_col, p), p.reciprocal()),
                    Expr::pow(pow_sum_expr(rest_row_sums, p), p.reciprocal())});
}

ProofTrace holder_trace(const NonNegMatrix& m, const ExponentVector& p) {
  validate_holder_instance(m, p);
  ProofTrace t{Statement::Holder, HolderInstance{m, p}, {}, HolderInstance{m, p}, 0};
  NonNegMatrix cur = m;
  std::vector<Rational> curp = p.values();
  while (cur.cols() > 2) {
    const std::size_t mm = cur.cols();
    const Rational pl = curp[mm - 2];
    const Rational pr = curp[mm - 1];
    HolderSplitStep s;
    s.level = mm;
    s.p_left = pl;
    s.p_right = pr;
    s.derived_p = (pl * pr) / (pl + pr);  // 1/derived_p = 1/p_left + 1/p_right
    s.t1 = pl / s.derived_p;
    s.t2 = pr / s.derived_p;
    s.col_left = cur.column(mm - 2);
    s.col_right = cur.column(mm - 1);

    NonNegMatrix next(cur.rows(), mm - 1);
    for (std::size_t i = 0; i < cur.rows(); ++i) {
      for (std::size_t k = 0; k + 2 < mm; ++k) next.set(i, k, cur.at(i, k));
      next.set(i, mm - 2, s.col_left[i] * s.col_right[i]);
    }
    curp.resize(mm - 2);
    curp.push_back(s.derived_p);
    cur = std::move(next);
    t.steps.push_back(std::move(s));
  }
  t.base_instance = HolderInstance{cur, ExponentVector::from(curp)};
  t.base_case_count = t.steps.size() + 1;
  return t;
}

ProofTrace minkowski_trace(const NonNegMatrix& m, const Rational& p) {
  if (p < Rational(1)) throw std::domain_error("minkowski: p must be at least 1");
  ProofTrace t{Statement::Minkowski, MinkowskiInstance{m, p}, {}, MinkowskiInstance{m, p}, 0};
  NonNegMatrix cur = m;
  while (cur.cols() > 2) {
    MinkowskiPeelStep s;
    s.level = cur.cols();
    s.p = p;
    s.peeled_col = cur.column(0);
    NonNegMatrix rest = cur.without_col(0);
    s.rest_row_sums = rest.row_sums();
    cur = std::move(rest);
    t.steps.push_back(std::move(s));
  }
  t.base_instance = MinkowskiInstance{cur, p};
  t.base_case_count = t.steps.size() + 1;
  return t;
}

ProofTrace chebyshev_trace(const SortedMatrix& s) {
  const NonNegMatrix& m = s.matrix();
  ProofTrace t{Statement::Chebyshev, ChebyshevInstance{m}, {}, ChebyshevInstance{m}, 0};
  NonNegMatrix cur = m;
  while (cur.cols() > 2) {
    ChebyshevPeelStep step;
    step.level = cur.cols();
    step.peeled_col = cur.column(cur.cols() - 1);
    step.product_prefix.reserve(cur.rows());
    NonNegMatrix rest = cur.without_col(cur.cols() - 1);
    for (std::size_t i = 0; i < rest.rows(); ++i) step.product_prefix.push_back(rest.row_product(i));
    cur = std::move(rest);
    t.steps.push_back(std::move(step));
  }
  t.base_instance = ChebyshevInstance{cur};
  t.base_case_count = t.steps.size() + 1;
  return t;
}

namespace {

Polygon cut_polygon(const Polygon& poly) {
  // A_1 A_2 .. A_n -> A_n A_2 A_3 .. A_{n-1}
  const std::size_t n = poly.size();
  std::vector<Point> v;
  v.reserve(n - 1);
  v.push_back(poly.vertex(n - 1));
  for (std::size_t i = 1; i + 1 < n; ++i) v.push_back(poly.vertex(i));
  return Polygon::from_vertices(std::move(v));
}

MenelausCutStep make_cut_step(const Polygon& poly, const Line& line) {
  const std::size_t n = poly.size();
  MenelausCutStep s;
  s.level = n;
  s.a1 = poly.vertex(0);
  s.a2 = poly.vertex(1);
  s.an = poly.vertex(n - 1);
  if (s.a2 == s.an)
    throw GeomError(GeomError::Kind::DegenerateDiagonal,
                    "decompose: diagonal endpoints coincide");
  Line diagonal = Line::through(s.a2, s.an);
  if (line.parallel_to(diagonal))
    throw GeomError(GeomError::Kind::DiagonalParallel,
                    "decompose: transversal is parallel to the cut diagonal");
  if (line.contains(s.a2) || line.contains(s.an))
    throw GeomError(GeomError::Kind::DiagonalThroughCutVertex,
                    "decompose: transversal passes through a diagonal endpoint");
  s.cut_point = line_line_intersection(line, diagonal);
  s.m1 = line_line_intersection(line, Line::through(s.a1, s.a2));
  s.mn = line_line_intersection(line, Line::through(s.an, s.a1));
  s.r1 = collinear_ratio(s.m1, s.a1, s.a2);
  s.cut_ratio = collinear_ratio(s.cut_point, s.a2, s.an);
  s.rn = collinear_ratio(s.mn, s.an, s.a1);
  return s;
}

}  // namespace

ProofTrace menelaus_decompose(const Polygon& polygon, const Line& line) {
  transversal_points(polygon, line);  // validates the configuration
  ProofTrace t{Statement::Menelaus, MenelausInstance{polygon, line, std::nullopt}, {},
               MenelausInstance{polygon, line, std::nullopt}, 0};
  Polygon cur = polygon;
  while (cur.size() > 3) {
    t.steps.push_back(make_cut_step(cur, line));
    cur = cut_polygon(cur);
  }
  t.base_instance = MenelausInstance{cur, line, std::nullopt};
  t.base_case_count = t.steps.size() + 1;
  return t;
}

ProofTrace trace_instance(const Instance& inst) {
  struct Visitor {
    ProofTrace operator()(const HolderInstance& h) { return holder_trace(h.matrix, h.exponents); }
    ProofTrace operator()(const CbsInstance& c) {
      // the m-power specialization traces as the product-sum inequality with
      // all exponents equal to m
      std::vector<Rational> p(c.matrix.cols(), Rational(static_cast<long>(c.matrix.cols())));
      return holder_trace(c.matrix, ExponentVector::from(std::move(p)));
    }
    ProofTrace operator()(const MinkowskiInstance& mk) { return minkowski_trace(mk.matrix, mk.p); }
    ProofTrace operator()(const ChebyshevInstance& ch) {
      return chebyshev_trace(SortedMatrix::validated(ch.matrix));
    }
    ProofTrace operator()(const ApplicationInstance&) {
      throw std::invalid_argument("trace: no decomposition defined for the application inequality");
    }
    ProofTrace operator()(const MenelausInstance& me) {
      return menelaus_decompose(me.polygon, me.line);
    }
  };
  return std::visit(Visitor{}, inst);
}

namespace {

struct BkRecorder {
  bool ok = true;
  std::string msg;
  void require(bool cond, const char* what) {
    if (ok && !cond) {
      ok = false;
      msg = what;
    }
  }
};

Verdict ordering_to_verdict(std::strong_ordering c, const char* note, const std::string& lhs,
                            const std::string& rhs) {
  if (c == std::strong_ordering::less) return Verdict::holds();
  if (c == std::strong_ordering::equal) return Verdict::holds_with_equality();
  return Verdict::violated({lhs, rhs, note});
}

Verdict refine_step(const Expr& lhs, const Expr& rhs, const CheckConfig& cfg, const char* note) {
  RefineOutcome out = refine_until_ordered(lhs, rhs, cfg.precision_schedule);
  switch (out.order) {
    case TriOrder::CertainlyLE:
      return Verdict::holds();
    case TriOrder::CertainlyGT:
      return Verdict::violated(
          {lhs.enclosure(out.decided_at).str(), rhs.enclosure(out.decided_at).str(), note});
    case TriOrder::Overlap:
      return Verdict::undetermined(out.gap_bound);
  }
  throw std::logic_error("unreachable");
}

Verdict holder_step_verdict(const HolderSplitStep& s, const CheckConfig& cfg) {
  const char* note = "two-term product-sum step";
  if (cfg.mode == CheckMode::ExactIfPossible) {
    std::vector<Rational> prods;
    prods.reserve(s.col_left.size());
    for (std::size_t i = 0; i < s.col_left.size(); ++i)
      prods.push_back(s.col_left[i] * s.col_right[i]);
    auto merged_sum = exact_pow_sum(prods, s.derived_p);
    auto left_sum = exact_pow_sum(s.col_left, s.p_left);
    auto right_sum = exact_pow_sum(s.col_right, s.p_right);
    if (merged_sum && left_sum && right_sum) {
      auto c = compare_power_products(
          {{*merged_sum, s.derived_p.reciprocal()}},
          {{*left_sum, s.p_left.reciprocal()}, {*right_sum, s.p_right.reciprocal()}});
      if (c)
        return ordering_to_verdict(*c, note, merged_sum->str() + "^(1/p)",
                                   left_sum->str() + ", " + right_sum->str());
    }
    // classical equality condition of the two-term base case
    if (powered_vectors_proportional(s.col_left, s.p_left, s.col_right, s.p_right))
      return Verdict::holds_with_equality();
  }
  return refine_step(s.lhs_bound(), s.rhs_bound(), cfg, note);
}

Verdict minkowski_step_verdict(const MinkowskiPeelStep& s, const CheckConfig& cfg) {
  const char* note = "two-term triangle step";
  if (s.p == Rational(1)) return Verdict::holds_with_equality();
  if (cfg.mode == CheckMode::ExactIfPossible) {
    Expr lhs = s.lhs_bound();
    Expr rhs = s.rhs_bound();
    auto le = lhs.exact();
    auto re = rhs.exact();
    if (le && re)
      return ordering_to_verdict(*le <=> *re, note, le->str(), re->str());
    if (powered_vectors_proportional(s.peeled_col, Rational(1), s.rest_row_sums, Rational(1)))
      return Verdict::holds_with_equality();
  }
  return refine_step(s.lhs_bound(), s.rhs_bound(), cfg, note);
}

Verdict chebyshev_step_verdict(const ChebyshevPeelStep& s, const CheckConfig& cfg) {
  const char* note = "two-sequence sorted-mean step (claim: >=)";
  const Rational n(static_cast<long>(s.product_prefix.size()));
  Rational mean_of_products(0);
  Rational sum_u(0), sum_v(0);
  for (std::size_t i = 0; i < s.product_prefix.size(); ++i) {
    mean_of_products += s.product_prefix[i] * s.peeled_col[i];
    sum_u += s.product_prefix[i];
    sum_v += s.peeled_col[i];
  }
  mean_of_products /= n;
  Rational product_of_means = (sum_u / n) * (sum_v / n);
  if (cfg.mode == CheckMode::ExactIfPossible)
    return ordering_to_verdict(product_of_means <=> mean_of_products, note,
                               product_of_means.str(), mean_of_products.str());
  return refine_step(Expr::constant(product_of_means), Expr::constant(mean_of_products), cfg, note);
}

Verdict combine_overall(const std::vector<StepCheck>& steps, const Verdict& base,
                        bool bookkeeping_ok) {
  for (const auto& s : steps)
    if (s.verdict.outcome == Outcome::Violated) return s.verdict;
  if (base.outcome == Outcome::Violated) return base;
  if (!bookkeeping_ok) return Verdict::undetermined(std::nullopt);
  bool all_equality = base.outcome == Outcome::HoldsWithEquality;
  for (const auto& s : steps) {
    if (s.verdict.outcome == Outcome::Undetermined) return s.verdict;
    all_equality = all_equality && s.verdict.outcome == Outcome::HoldsWithEquality;
  }
  if (base.outcome == Outcome::Undetermined) return base;
  return all_equality ? Verdict::holds_with_equality() : Verdict::holds();
}

void finish(TraceVerdict& tv, const Verdict& base, BkRecorder& trace_bk) {
  tv.base_result = base;
  tv.bookkeeping_ok = trace_bk.ok;
  for (const auto& s : tv.step_results) tv.bookkeeping_ok = tv.bookkeeping_ok && s.bookkeeping_ok;
  tv.overall = combine_overall(tv.step_results, tv.base_result, tv.bookkeeping_ok);
}

TraceVerdict verify_holder_trace(const ProofTrace& t, const CheckConfig& cfg) {
  const auto* inst = std::get_if<HolderInstance>(&t.instance);
  const auto* base = std::get_if<HolderInstance>(&t.base_instance);
  if (!inst || !base) throw std::invalid_argument("trace: instance kind mismatch");
  validate_holder_instance(inst->matrix, inst->exponents);
  if (t.steps.size() != inst->matrix.cols() - 2)
    throw std::invalid_argument("trace: split count must be m - 2");

  TraceVerdict tv;
  NonNegMatrix cur = inst->matrix;
  std::vector<Rational> curp = inst->exponents.values();
  for (const TraceStep& ts : t.steps) {
    const auto* s = std::get_if<HolderSplitStep>(&ts);
    if (!s) throw std::invalid_argument("trace: unexpected step kind");
    if (s->col_left.size() != cur.rows() || s->col_right.size() != cur.rows())
      throw std::invalid_argument("trace: step column length mismatch");
    const std::size_t mm = cur.cols();
    BkRecorder bk;
    bk.require(s->level == mm, "level does not match the folded instance");
    bk.require(s->col_left == cur.column(mm - 2) && s->col_right == cur.column(mm - 1),
               "split columns do not match the folded instance");
    bk.require(s->p_left == curp[mm - 2] && s->p_right == curp[mm - 1],
               "split exponents do not match the folded instance");
    bk.require(s->t1 > Rational(1) && s->t2 > Rational(1), "t1 and t2 must exceed 1");
    bk.require(s->t1.reciprocal() + s->t2.reciprocal() == Rational(1), "1/t1 + 1/t2 must equal 1");
    bk.require(s->derived_p * s->t1 == s->p_left, "derived_p * t1 must equal p_left");
    bk.require(s->derived_p * s->t2 == s->p_right, "derived_p * t2 must equal p_right");

    // fold with recomputed values so later steps are checked against the
    // honest chain even if this step was tampered with
    const Rational pl = curp[mm - 2];
    const Rational pr = curp[mm - 1];
    const Rational derived = (pl * pr) / (pl + pr);
    Rational inv_sum = derived.reciprocal();
    for (std::size_t k = 0; k + 2 < mm; ++k) inv_sum += curp[k].reciprocal();
    bk.require(inv_sum == Rational(1), "reduced exponent vector is not conjugate");

    tv.step_results.push_back({holder_step_verdict(*s, cfg), bk.ok, bk.msg});

    NonNegMatrix next(cur.rows(), mm - 1);
    for (std::size_t i = 0; i < cur.rows(); ++i) {
      for (std::size_t k = 0; k + 2 < mm; ++k) next.set(i, k, cur.at(i, k));
      next.set(i, mm - 2, cur.at(i, mm - 2) * cur.at(i, mm - 1));
    }
    curp.resize(mm - 2);
    curp.push_back(derived);
    cur = std::move(next);
  }

  BkRecorder trace_bk;
  trace_bk.require(base->matrix == cur, "recorded base matrix does not equal the folded chain");
  trace_bk.require(base->exponents.values() == curp,
                   "recorded base exponents do not equal the folded chain");
  Rational lhs_original(0), lhs_base(0);
  for (std::size_t i = 0; i < inst->matrix.rows(); ++i) lhs_original += inst->matrix.row_product(i);
  for (std::size_t i = 0; i < cur.rows(); ++i) lhs_base += cur.row_product(i);
  trace_bk.require(lhs_original == lhs_base, "left side is not preserved by the folds");

  Verdict base_verdict = Verdict::undetermined(std::nullopt);
  try {
    base_verdict = check_holder(base->matrix, base->exponents, cfg);
  } catch (const std::exception&) {
    trace_bk.require(false, "recorded base instance is invalid");
  }
  finish(tv, base_verdict, trace_bk);
  return tv;
}

TraceVerdict verify_minkowski_trace(const ProofTrace& t, const CheckConfig& cfg) {
  const auto* inst = std::get_if<MinkowskiInstance>(&t.instance);
  const auto* base = std::get_if<MinkowskiInstance>(&t.base_instance);
  if (!inst || !base) throw std::invalid_argument("trace: instance kind mismatch");
  if (inst->p < Rational(1)) throw std::domain_error("minkowski: p must be at least 1");
  const std::size_t expected = inst->matrix.cols() > 2 ? inst->matrix.cols() - 2 : 0;
  if (t.steps.size() != expected)
    throw std::invalid_argument("trace: peel count must be m - 2");

  TraceVerdict tv;
  NonNegMatrix cur = inst->matrix;
  for (const TraceStep& ts : t.steps) {
    const auto* s = std::get_if<MinkowskiPeelStep>(&ts);
    if (!s) throw std::invalid_argument("trace: unexpected step kind");
    if (s->peeled_col.size() != cur.rows() || s->rest_row_sums.size() != cur.rows())
      throw std::invalid_argument("trace: step column length mismatch");
    BkRecorder bk;
    bk.require(s->level == cur.cols(), "level does not match the folded instance");
    bk.require(s->p == inst->p, "step exponent does not match the instance");
    NonNegMatrix rest = cur.without_col(0);
    bk.require(s->peeled_col == cur.column(0), "peeled column does not match the folded instance");
    bk.require(s->rest_row_sums == rest.row_sums(),
               "remaining row sums do not match the folded instance");
    tv.step_results.push_back({minkowski_step_verdict(*s, cfg), bk.ok, bk.msg});
    cur = std::move(rest);
  }

  BkRecorder trace_bk;
  trace_bk.require(base->matrix == cur, "recorded base matrix does not equal the folded chain");
  trace_bk.require(base->p == inst->p, "recorded base exponent does not equal the instance");
  Verdict base_verdict = Verdict::undetermined(std::nullopt);
  try {
    base_verdict = check_minkowski(base->matrix, base->p, cfg);
  } catch (const std::exception&) {
    trace_bk.require(false, "recorded base instance is invalid");
  }
  finish(tv, base_verdict, trace_bk);
  return tv;
}

bool nonincreasing(const std::vector<Rational>& v) {
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] < v[i + 1]) return false;
  return true;
}

TraceVerdict verify_chebyshev_trace(const ProofTrace& t, const CheckConfig& cfg) {
  const auto* inst = std::get_if<ChebyshevInstance>(&t.instance);
  const auto* base = std::get_if<ChebyshevInstance>(&t.base_instance);
  if (!inst || !base) throw std::invalid_argument("trace: instance kind mismatch");
  SortedMatrix::validated(inst->matrix);
  const std::size_t expected = inst->matrix.cols() > 2 ? inst->matrix.cols() - 2 : 0;
  if (t.steps.size() != expected)
    throw std::invalid_argument("trace: peel count must be m - 2");

  TraceVerdict tv;
  NonNegMatrix cur = inst->matrix;
  for (const TraceStep& ts : t.steps) {
    const auto* s = std::get_if<ChebyshevPeelStep>(&ts);
    if (!s) throw std::invalid_argument("trace: unexpected step kind");
    if (s->product_prefix.size() != cur.rows() || s->peeled_col.size() != cur.rows())
      throw std::invalid_argument("trace: step column length mismatch");
    BkRecorder bk;
    bk.require(s->level == cur.cols(), "level does not match the folded instance");
    bk.require(s->peeled_col == cur.column(cur.cols() - 1),
               "peeled column does not match the folded instance");
    NonNegMatrix rest = cur.without_col(cur.cols() - 1);
    std::vector<Rational> prefix;
    prefix.reserve(rest.rows());
    for (std::size_t i = 0; i < rest.rows(); ++i) prefix.push_back(rest.row_product(i));
    bk.require(s->product_prefix == prefix,
               "recorded product sequence does not match the folded instance");
    // the hidden lemma: the intermediate product sequence stays sorted
    bk.require(nonincreasing(s->product_prefix), "intermediate product sequence increases");
    tv.step_results.push_back({chebyshev_step_verdict(*s, cfg), bk.ok, bk.msg});
    cur = std::move(rest);
  }

  BkRecorder trace_bk;
  trace_bk.require(base->matrix == cur, "recorded base matrix does not equal the folded chain");
  Verdict base_verdict = Verdict::undetermined(std::nullopt);
  try {
    base_verdict = check_chebyshev(SortedMatrix::validated(base->matrix), cfg);
  } catch (const std::exception&) {
    trace_bk.require(false, "recorded base instance is invalid");
  }
  finish(tv, base_verdict, trace_bk);
  return tv;
}

TraceVerdict verify_menelaus_trace(const ProofTrace& t, const CheckConfig& cfg) {
  const auto* inst = std::get_if<MenelausInstance>(&t.instance);
  const auto* base = std::get_if<MenelausInstance>(&t.base_instance);
  if (!inst || !base) throw std::invalid_argument("trace: instance kind mismatch");
  if (t.steps.size() != inst->polygon.size() - 3)
    throw std::invalid_argument("trace: cut count must be n - 3");

  TraceVerdict tv;
  Polygon cur = inst->polygon;
  for (const TraceStep& ts : t.steps) {
    const auto* s = std::get_if<MenelausCutStep>(&ts);
    if (!s) throw std::invalid_argument("trace: unexpected step kind");
    BkRecorder bk;
    Verdict step_verdict = Verdict::undetermined(std::nullopt);
    try {
      MenelausCutStep fresh = make_cut_step(cur, inst->line);
      bk.require(s->level == fresh.level, "level does not match the folded polygon");
      bk.require(s->a1 == fresh.a1 && s->a2 == fresh.a2 && s->an == fresh.an,
                 "triangle vertices do not match the folded polygon");
      bk.require(s->cut_point == fresh.cut_point, "cut point is not on both lines");
      bk.require(s->m1 == fresh.m1 && s->mn == fresh.mn,
                 "triangle transversal points do not match");
      bk.require(s->r1 == fresh.r1 && s->cut_ratio == fresh.cut_ratio && s->rn == fresh.rn,
                 "recorded ratios do not match the configuration");
      // telescoping: the two cut-point factors cancel exactly
      Polygon reduced = cut_polygon(cur);
      Rational reverse = collinear_ratio(fresh.cut_point, fresh.an, fresh.a2);
      bk.require(fresh.cut_ratio * reverse == Rational(1), "cut-point factors do not cancel");
      bk.require(menelaus_product(cur, inst->line) ==
                     s->triangle_product() * menelaus_product(reduced, inst->line),
                 "triangle and remainder products do not compose to the full product");
      step_verdict = s->triangle_product() == Rational(1)
                         ? Verdict::holds_with_equality()
                         : Verdict::violated({s->triangle_product().str(), "1",
                                              "triangle ratio product differs from 1"});
      cur = std::move(reduced);
    } catch (const std::exception& e) {
      tv.step_results.push_back(
          {step_verdict, false, std::string("step geometry is degenerate: ") + e.what()});
      continue;
    }
    tv.step_results.push_back({step_verdict, bk.ok, bk.msg});
  }

  BkRecorder trace_bk;
  trace_bk.require(base->polygon.vertices() == cur.vertices(),
                   "recorded base polygon does not equal the folded chain");
  trace_bk.require(base->line == inst->line, "recorded base line does not equal the instance");
  Verdict base_verdict = Verdict::undetermined(std::nullopt);
  try {
    base_verdict = check_menelaus(*base, cfg);
  } catch (const std::exception&) {
    trace_bk.require(false, "recorded base instance is invalid");
  }
  finish(tv, base_verdict, trace_bk);
  return tv;
}

}  // namespace

TraceVerdict verify_trace(const ProofTrace& trace, const CheckConfig& cfg) {
  switch (trace.kind) {
    case Statement::Holder:
    case Statement::Cbs:
      return verify_holder_trace(trace, cfg);
    case Statement::Minkowski:
      return verify_minkowski_trace(trace, cfg);
    case Statement::Chebyshev:
      return verify_chebyshev_trace(trace, cfg);
    case Statement::Menelaus:
      return verify_menelaus_trace(trace, cfg);
    case Statement::Application:
      throw std::invalid_argument("trace: no decomposition defined for the application inequality");
  }
  throw std::logic_error("unreachable");
}

}  // namespace ineq
