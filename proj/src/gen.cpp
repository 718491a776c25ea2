#include "ineq/gen.hpp"

#include <algorithm>
#include <stdexcept>

#include "ineq/trace.hpp"

namespace ineq {

void GenSpec::validate() const {
  if (n_min == 0 || n_min > n_max) throw std::invalid_argument("genspec: bad row range");
  if (m_min == 0 || m_min > m_max) throw std::invalid_argument("genspec: bad column range");
  if (numer_bits == 0 || numer_bits > 62 || denom_bits == 0 || denom_bits > 62)
    throw std::invalid_argument("genspec: bad magnitude bounds");
  if (statement == Statement::Minkowski) {
    if (minkowski_p_pool.empty()) throw std::invalid_argument("genspec: empty p pool");
    for (const auto& p : minkowski_p_pool)
      if (p < Rational(1)) throw std::invalid_argument("genspec: p pool entries must be >= 1");
  }
}

namespace {

long floor_div(const Rational& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.num().get_mpz_t(), q.den().get_mpz_t());
  return r.get_si();
}

long ceil_div(const Rational& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.num().get_mpz_t(), q.den().get_mpz_t());
  return r.get_si();
}

void enumerate_rec(unsigned remaining, const Rational& rem, long min_p, std::vector<long>& cur,
                   std::vector<std::vector<long>>& out) {
  if (remaining == 0) {
    if (rem.is_zero()) out.push_back(cur);
    return;
  }
  if (rem.sign() <= 0) return;
  // 1/p <= rem and remaining/p >= rem bound the search exactly
  long lo = std::max(min_p, std::max<long>(2, ceil_div(rem.reciprocal())));
  long hi = floor_div(Rational(static_cast<long>(remaining)) / rem);
  for (long p = lo; p <= hi; ++p) {
    Rational f = Rational(1, p);
    if (f > rem) continue;
    cur.push_back(p);
    enumerate_rec(remaining - 1, rem - f, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<long>> enumerate_integer_conjugate_tuples(unsigned m) {
  if (m < 2) throw std::invalid_argument("enumerate: m must be at least 2");
  if (m > 6) throw std::invalid_argument("enumerate: m above 6 is unsupported (the tuple count explodes)");
  std::vector<std::vector<long>> out;
  std::vector<long> cur;
  enumerate_rec(m, Rational(1), 2, cur, out);
  return out;
}

ExponentVector gen_conjugate_exponents_rational(unsigned m, SplitMix64& rng) {
  if (m < 2) throw std::invalid_argument("exponent generator: m must be at least 2");
  std::vector<Rational> g;
  g.reserve(m);
  Rational total(0);
  for (unsigned k = 0; k < m; ++k) {
    g.push_back(Rational(static_cast<long>(1 + rng.below(64))));
    total += g.back();
  }
  std::vector<Rational> p;
  p.reserve(m);
  for (unsigned k = 0; k < m; ++k) p.push_back(total / g[k]);
  return ExponentVector::from(std::move(p));
}

Rational gen_value(SplitMix64& rng, unsigned numer_bits, unsigned denom_bits) {
  std::uint64_t num = rng.below(1ULL << numer_bits);
  std::uint64_t den = 1 + rng.below(1ULL << denom_bits);
  return Rational(static_cast<long>(num), static_cast<long>(den));
}

NonNegMatrix gen_matrix(std::size_t n, std::size_t m, SplitMix64& rng, const GenSpec& spec) {
  NonNegMatrix out(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < m; ++k) out.set(i, k, gen_value(rng, spec.numer_bits, spec.denom_bits));
  return out;
}

SortedMatrix gen_sorted_matrix(std::size_t n, std::size_t m, SplitMix64& rng, const GenSpec& spec) {
  NonNegMatrix out = gen_matrix(n, m, rng, spec);
  for (std::size_t k = 0; k < m; ++k) {
    std::vector<Rational> col = out.column(k);
    std::sort(col.begin(), col.end(), [](const Rational& a, const Rational& b) { return a > b; });
    for (std::size_t i = 0; i < n; ++i) out.set(i, k, col[i]);
  }
  return SortedMatrix::validated(std::move(out));
}

namespace {

Rational gen_coord(SplitMix64& rng) {
  long num = static_cast<long>(rng.below(513)) - 256;
  long den = static_cast<long>(1 + rng.below(8));
  return Rational(num, den);
}

std::size_t draw_range(SplitMix64& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng.below(hi - lo + 1));
}

}  // namespace

std::pair<Polygon, Line> gen_polygon_and_transversal(std::size_t n, SplitMix64& rng,
                                                     bool require_decomposable) {
  if (n < 3) throw std::invalid_argument("polygon generator: n must be at least 3");
  constexpr int kAttemptBudget = 100000;
  for (int attempt = 0; attempt < kAttemptBudget; ++attempt) {
    std::vector<Point> pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) pts.push_back(Point{gen_coord(rng), gen_coord(rng)});
    Point p{gen_coord(rng), gen_coord(rng)};
    Point q{gen_coord(rng), gen_coord(rng)};
    if (p == q) continue;
    try {
      Polygon polygon = Polygon::from_vertices(std::move(pts));
      Line line = Line::through(p, q);
      transversal_points(polygon, line);
      if (require_decomposable) menelaus_decompose(polygon, line);
      return {std::move(polygon), std::move(line)};
    } catch (const std::exception&) {
      continue;
    }
  }
  throw std::runtime_error("polygon generator: attempt budget exhausted");
}

Instance gen_instance_rng(const GenSpec& spec, SplitMix64& rng) {
  spec.validate();
  switch (spec.statement) {
    case Statement::Holder: {
      std::size_t m = draw_range(rng, std::max<std::size_t>(2, spec.m_min), spec.m_max);
      std::size_t n = draw_range(rng, spec.n_min, spec.n_max);
      ExponentVector p = [&] {
        if (spec.exponent_mode == GenSpec::ExponentMode::RationalWeights)
          return gen_conjugate_exponents_rational(static_cast<unsigned>(m), rng);
        auto tuples = enumerate_integer_conjugate_tuples(static_cast<unsigned>(m));
        const auto& tup = tuples[rng.below(tuples.size())];
        std::vector<Rational> pv;
        pv.reserve(tup.size());
        for (long v : tup) pv.push_back(Rational(v));
        return ExponentVector::from(std::move(pv));
      }();
      return HolderInstance{gen_matrix(n, m, rng, spec), std::move(p)};
    }
    case Statement::Cbs: {
      std::size_t m = draw_range(rng, std::max<std::size_t>(2, spec.m_min), spec.m_max);
      std::size_t n = draw_range(rng, spec.n_min, spec.n_max);
      return CbsInstance{gen_matrix(n, m, rng, spec)};
    }
    case Statement::Minkowski: {
      std::size_t m = draw_range(rng, spec.m_min, spec.m_max);
      std::size_t n = draw_range(rng, spec.n_min, spec.n_max);
      Rational p = spec.minkowski_p_pool[rng.below(spec.minkowski_p_pool.size())];
      return MinkowskiInstance{gen_matrix(n, m, rng, spec), std::move(p)};
    }
    case Statement::Chebyshev: {
      std::size_t m = draw_range(rng, spec.m_min, spec.m_max);
      std::size_t n = draw_range(rng, spec.n_min, spec.n_max);
      return ChebyshevInstance{gen_sorted_matrix(n, m, rng, spec).matrix()};
    }
    case Statement::Application: {
      auto pair = [&] {
        Rational a = gen_value(rng, spec.numer_bits, spec.denom_bits);
        Rational b = gen_value(rng, spec.numer_bits, spec.denom_bits);
        return std::make_pair(std::move(a), std::move(b));
      };
      return ApplicationInstance{pair(), pair(), pair()};
    }
    case Statement::Menelaus: {
      std::size_t n = draw_range(rng, std::max<std::size_t>(3, spec.n_min), spec.n_max);
      auto [polygon, line] = gen_polygon_and_transversal(n, rng, spec.require_decomposable);
      return MenelausInstance{std::move(polygon), std::move(line), std::nullopt};
    }
  }
  throw std::logic_error("unreachable");
}

Instance gen_instance(const GenSpec& spec, std::uint64_t seed, std::uint64_t index) {
  SplitMix64 rng(seed + index);
  return gen_instance_rng(spec, rng);
}

const char* mutation_kind_name(MutationKind k) {
  switch (k) {
    case MutationKind::ConjugacyDefect: return "conjugacy";
    case MutationKind::DirectionFlip: return "direction";
    case MutationKind::SortViolation: return "sort";
    case MutationKind::PointDisplaced: return "point";
  }
  return "?";
}

std::optional<MutationKind> mutation_kind_from_name(const std::string& name) {
  for (MutationKind k : {MutationKind::ConjugacyDefect, MutationKind::DirectionFlip,
                         MutationKind::SortViolation, MutationKind::PointDisplaced})
    if (name == mutation_kind_name(k)) return k;
  return std::nullopt;
}

MutatedInstance mutate_to_false(MutationKind kind, const Instance& inst, SplitMix64& rng) {
  switch (kind) {
    case MutationKind::ConjugacyDefect: {
      const auto* h = std::get_if<HolderInstance>(&inst);
      if (!h) throw std::invalid_argument("mutate: conjugacy defect applies to the product-sum statement");
      std::vector<Rational> p = h->exponents.values();
      std::size_t k = rng.below(p.size());
      // raising one exponent drops the reciprocal sum below 1, the
      // direction in which counterexamples exist
      p[k] += Rational(1, 10);
      ExponentVector broken = ExponentVector::from(std::move(p));
      return {HolderInstance{h->matrix, broken}, kind,
              "conjugacy: exponent reciprocal sum defect " + broken.defect().str(), false};
    }
    case MutationKind::DirectionFlip:
      return {inst, kind, "direction: claimed inequality reversed", true};
    case MutationKind::SortViolation: {
      const auto* ch = std::get_if<ChebyshevInstance>(&inst);
      if (!ch) throw std::invalid_argument("mutate: sort violation applies to the sorted-mean statement");
      NonNegMatrix m = ch->matrix;
      if (m.rows() < 2) throw std::invalid_argument("mutate: need at least two rows to unsort");
      std::size_t k = rng.below(m.cols());
      std::vector<Rational> col = m.column(k);
      bool constant = std::all_of(col.begin(), col.end(),
                                  [&](const Rational& v) { return v == col.front(); });
      if (constant) {
        m.set(m.rows() - 1, k, col.back() + Rational(1));
      } else {
        for (std::size_t i = 0; i < m.rows(); ++i) m.set(i, k, col[m.rows() - 1 - i]);
      }
      return {ChebyshevInstance{std::move(m)}, kind,
              "sort: column " + std::to_string(k + 1) + " increases somewhere", false};
    }
    case MutationKind::PointDisplaced: {
      const auto* me = std::get_if<MenelausInstance>(&inst);
      if (!me) throw std::invalid_argument("mutate: point displacement applies to the transversal identity");
      Transversal tv = transversal_points(me->polygon, me->line);
      std::size_t side = rng.below(me->polygon.size());
      const Point& a = me->polygon.vertex(side);
      const Point& b = me->polygon.vertex(side + 1);
      for (int attempt = 0; attempt < 1000; ++attempt) {
        Rational t(static_cast<long>(rng.below(41)) - 20, static_cast<long>(1 + rng.below(8)));
        if (t.is_zero() || t == Rational(1)) continue;
        Point moved{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
        std::vector<Point> pts = tv.points;
        pts[side] = moved;
        Rational prod(1);
        for (std::size_t i = 0; i < pts.size(); ++i)
          prod *= collinear_ratio(pts[i], me->polygon.vertex(i), me->polygon.vertex(i + 1));
        if (prod == Rational(1)) continue;
        return {MenelausInstance{me->polygon, me->line, std::move(pts)}, kind,
                "transversal: point " + std::to_string(side + 1) + " displaced off the line", false};
      }
      throw std::runtime_error("mutate: displacement attempts exhausted");
    }
  }
  throw std::logic_error("unreachable");
}

Verdict check_mutated(const MutatedInstance& mut, const CheckConfig& cfg) {
  struct RawVisitor {
    const CheckConfig& cfg;
    Verdict operator()(const HolderInstance& h) { return check_holder_raw(h.matrix, h.exponents, cfg); }
    Verdict operator()(const CbsInstance& c) { return check_cbs(c.matrix, cfg); }
    Verdict operator()(const MinkowskiInstance& mk) { return check_minkowski(mk.matrix, mk.p, cfg); }
    Verdict operator()(const ChebyshevInstance& ch) { return check_chebyshev_raw(ch.matrix, cfg); }
    Verdict operator()(const ApplicationInstance& ap) { return check_application(ap.a, ap.b, ap.c, cfg); }
    Verdict operator()(const MenelausInstance& me) { return check_menelaus(me, cfg); }
  };
  Verdict v = std::visit(RawVisitor{cfg}, mut.instance);
  if (!mut.flipped) return v;
  switch (v.outcome) {
    case Outcome::Holds:
      return Verdict::violated({"", "", "reversed claim: the original inequality holds strictly"});
    case Outcome::Violated:
      return Verdict::holds();
    case Outcome::HoldsWithEquality:
    case Outcome::Undetermined:
      return v;
  }
  throw std::logic_error("unreachable");
}

namespace {

std::vector<Rational> entry_shrink_values(const Rational& v) {
  std::vector<Rational> out;
  if (!v.is_zero()) out.push_back(Rational(0));
  if (v != Rational(1)) out.push_back(Rational(1));
  if (!v.is_integer()) out.push_back(Rational(v.num()));  // drop the denominator
  if (abs(v) > Rational(1)) out.push_back(v / Rational(2));
  return out;
}

void matrix_shrinks(const NonNegMatrix& m, const std::function<void(NonNegMatrix)>& emit,
                    bool allow_col_drop, std::size_t min_cols) {
  if (m.rows() > 1)
    for (std::size_t i = 0; i < m.rows(); ++i) emit(m.without_row(i));
  if (allow_col_drop && m.cols() > min_cols)
    for (std::size_t k = 0; k < m.cols(); ++k) emit(m.without_col(k));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k)
      for (const Rational& nv : entry_shrink_values(m.at(i, k))) {
        NonNegMatrix cand = m;
        cand.set(i, k, nv);
        emit(std::move(cand));
      }
}

std::vector<MutatedInstance> shrink_candidates(const MutatedInstance& mut) {
  std::vector<MutatedInstance> out;
  auto push = [&](Instance inst) { out.push_back({std::move(inst), mut.kind, mut.broken_hypothesis, mut.flipped}); };
  struct Visitor {
    const MutatedInstance& mut;
    decltype(push)& emit;
    void operator()(const HolderInstance& h) {
      if (h.matrix.cols() > 2)
        for (std::size_t k = 0; k < h.matrix.cols(); ++k) {
          std::vector<Rational> p = h.exponents.values();
          p.erase(p.begin() + static_cast<std::ptrdiff_t>(k));
          emit(HolderInstance{h.matrix.without_col(k), ExponentVector::from(std::move(p))});
        }
      matrix_shrinks(h.matrix, [&](NonNegMatrix m) { emit(HolderInstance{std::move(m), h.exponents}); },
                     false, 2);
    }
    void operator()(const CbsInstance& c) {
      matrix_shrinks(c.matrix, [&](NonNegMatrix m) { emit(CbsInstance{std::move(m)}); }, true, 2);
    }
    void operator()(const MinkowskiInstance& mk) {
      matrix_shrinks(mk.matrix, [&](NonNegMatrix m) { emit(MinkowskiInstance{std::move(m), mk.p}); },
                     true, 1);
    }
    void operator()(const ChebyshevInstance& ch) {
      matrix_shrinks(ch.matrix, [&](NonNegMatrix m) { emit(ChebyshevInstance{std::move(m)}); }, true, 1);
    }
    void operator()(const ApplicationInstance& ap) {
      auto fields = {&ApplicationInstance::a, &ApplicationInstance::b, &ApplicationInstance::c};
      for (auto f : fields) {
        for (int half : {0, 1}) {
          const Rational& v = half == 0 ? (ap.*f).first : (ap.*f).second;
          for (const Rational& nv : entry_shrink_values(v)) {
            ApplicationInstance cand = ap;
            (half == 0 ? (cand.*f).first : (cand.*f).second) = nv;
            emit(std::move(cand));
          }
        }
      }
    }
    void operator()(const MenelausInstance& me) {
      if (!me.forced_points) return;
      // move the displaced point to simpler spots on its side line
      Transversal tv = transversal_points(me.polygon, me.line);
      std::size_t side = me.forced_points->size();
      for (std::size_t i = 0; i < tv.points.size(); ++i)
        if (!((*me.forced_points)[i] == tv.points[i])) {
          side = i;
          break;
        }
      if (side == me.forced_points->size()) return;
      const Point& a = me.polygon.vertex(side);
      const Point& b = me.polygon.vertex(side + 1);
      for (const Rational& t : {Rational(2), Rational(-1), Rational(1, 2), Rational(1, 3)}) {
        std::vector<Point> pts = *me.forced_points;
        pts[side] = Point{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
        MenelausInstance cand{me.polygon, me.line, std::move(pts)};
        emit(std::move(cand));
      }
    }
  };
  std::visit(Visitor{mut, push}, mut.instance);
  return out;
}

}  // namespace

CounterexampleResult counterexample_search(const SearchSpec& spec, std::size_t budget,
                                           std::uint64_t seed, const CheckConfig& cfg) {
  if (budget < 1) throw std::invalid_argument("search: budget must be positive");
  CounterexampleResult res;
  for (std::uint64_t idx = 0; idx < budget; ++idx) {
    SplitMix64 rng(seed + idx);
    Instance inst = gen_instance_rng(spec.gen, rng);
    MutatedInstance mut = spec.mutation
                              ? mutate_to_false(*spec.mutation, inst, rng)
                              : MutatedInstance{std::move(inst), std::nullopt, "none", false};
    Verdict v = check_mutated(mut, cfg);
    res.trials_used = idx + 1;
    if (v.outcome != Outcome::Violated) continue;

    // greedy shrink; every accepted step re-checked Violated
    bool improved = true;
    int rounds = 0;
    while (improved && ++rounds <= 100) {
      improved = false;
      for (MutatedInstance& cand : shrink_candidates(mut)) {
        Verdict cv;
        try {
          cv = check_mutated(cand, cfg);
        } catch (const std::exception&) {
          continue;  // shrink stumbled into an uncheckable configuration
        }
        if (cv.outcome == Outcome::Violated) {
          mut = std::move(cand);
          v = std::move(cv);
          ++res.shrink_steps;
          improved = true;
          break;
        }
      }
    }
    res.witness = std::move(mut);
    res.verdict = std::move(v);
    return res;
  }
  res.verdict = Verdict::holds();  // clean stream
  return res;
}

namespace {

const std::vector<Rational>& perturbation_factors() {
  static const std::vector<Rational> f = {
      Rational(1, 2), Rational(2, 3), Rational(3, 4), Rational(4, 5), Rational(5, 6),
      Rational(8, 9), Rational(16, 17), Rational(17, 16), Rational(9, 8), Rational(6, 5),
      Rational(5, 4), Rational(4, 3), Rational(3, 2), Rational(2)};
  return f;
}

Rational perturb_value(const Rational& v, SplitMix64& rng) {
  const auto& fs = perturbation_factors();
  const Rational& f = fs[rng.below(fs.size())];
  return v.is_zero() ? f : v * f;
}

Instance perturb(const Instance& inst, SplitMix64& rng) {
  struct Visitor {
    SplitMix64& rng;
    Instance operator()(const HolderInstance& h) {
      NonNegMatrix m = h.matrix;
      std::size_t i = rng.below(m.rows());
      std::size_t k = rng.below(m.cols());
      m.set(i, k, perturb_value(m.at(i, k), rng));
      return HolderInstance{std::move(m), h.exponents};
    }
    Instance operator()(const CbsInstance& c) {
      NonNegMatrix m = c.matrix;
      std::size_t i = rng.below(m.rows());
      std::size_t k = rng.below(m.cols());
      m.set(i, k, perturb_value(m.at(i, k), rng));
      return CbsInstance{std::move(m)};
    }
    Instance operator()(const MinkowskiInstance& mk) {
      NonNegMatrix m = mk.matrix;
      std::size_t i = rng.below(m.rows());
      std::size_t k = rng.below(m.cols());
      m.set(i, k, perturb_value(m.at(i, k), rng));
      return MinkowskiInstance{std::move(m), mk.p};
    }
    Instance operator()(const ChebyshevInstance& ch) {
      NonNegMatrix m = ch.matrix;
      std::size_t i = rng.below(m.rows());
      std::size_t k = rng.below(m.cols());
      m.set(i, k, perturb_value(m.at(i, k), rng));
      // keep the instance in the sorted hypothesis class
      std::vector<Rational> col = m.column(k);
      std::sort(col.begin(), col.end(), [](const Rational& a, const Rational& b) { return a > b; });
      for (std::size_t r = 0; r < m.rows(); ++r) m.set(r, k, col[r]);
      return ChebyshevInstance{std::move(m)};
    }
    Instance operator()(const ApplicationInstance& ap) {
      ApplicationInstance out = ap;
      std::size_t which = rng.below(6);
      Rational* slots[6] = {&out.a.first, &out.a.second, &out.b.first,
                            &out.b.second, &out.c.first, &out.c.second};
      *slots[which] = perturb_value(*slots[which], rng);
      return out;
    }
    Instance operator()(const MenelausInstance& me) { return me; }
  };
  return std::visit(Visitor{rng}, inst);
}

}  // namespace

TightnessResult tightness_search(const GenSpec& spec, std::size_t budget, std::uint64_t seed,
                                 const CheckConfig& cfg) {
  if (budget < 1) throw std::invalid_argument("tightness: budget must be positive");
  if (spec.statement == Statement::Menelaus)
    throw std::invalid_argument("tightness: no slack is defined for the transversal identity");

  SplitMix64 rng(seed);
  auto evaluate = [&](const Instance& inst) -> std::pair<double, Slack> {
    try {
      Slack s = slack_ratio(inst, cfg);
      double score = s.exact ? s.exact->to_double() : s.enclosure.mid_double();
      return {score, std::move(s)};
    } catch (const std::exception&) {
      return {-1.0, Slack{Rational(0), Interval::of_long(0, 64)}};
    }
  };

  std::optional<TightnessResult> best;
  double best_score = -2.0;
  std::size_t evals = 0;
  while (evals < budget) {
    Instance cur = gen_instance_rng(spec, rng);
    auto [cur_score, cur_slack] = evaluate(cur);
    ++evals;
    if (cur_score > best_score) {
      best_score = cur_score;
      best = TightnessResult{cur, cur_slack, 0};
    }
    std::size_t stale = 0;
    while (evals < budget && stale < 64) {
      Instance cand = perturb(cur, rng);
      auto [cand_score, cand_slack] = evaluate(cand);
      ++evals;
      if (cand_score > cur_score) {
        cur = std::move(cand);
        cur_score = cand_score;
        stale = 0;
        if (cur_score > best_score) {
          best_score = cur_score;
          best = TightnessResult{cur, cand_slack, 0};
        }
      } else {
        ++stale;
      }
    }
  }
  best->evaluations = evals;
  return std::move(*best);
}

}  // namespace ineq
