#include "pdce/embedder.hpp"

#include <algorithm>
#include <limits>

#include "pdce/error.hpp"
#include "pdce/validator.hpp"

namespace pdce {

namespace {

constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

const DirectionSet kUDR{DirLabel::U, DirLabel::D, DirLabel::R};
const DirectionSet kUDL{DirLabel::U, DirLabel::D, DirLabel::L};
const DirectionSet kULR{DirLabel::U, DirLabel::L, DirLabel::R};
const DirectionSet kDLR{DirLabel::D, DirLabel::L, DirLabel::R};
const DirectionSet kUR{DirLabel::U, DirLabel::R};

void require_size(const DirPath& p, const ConvexPointSet& s) {
  if (p.vertex_count() != s.size())
    throw Error(ErrorCode::SizeMismatch,
                "path has " + std::to_string(p.vertex_count()) + " vertices, set has " + std::to_string(s.size()) + " points");
}

void require_labels(const DirPath& p, DirectionSet allowed, const char* who) {
  if (!directions_used(p).subset_of(allowed))
    throw Error(ErrorCode::PreconditionViolated,
                std::string(who) + " needs a {" + allowed.to_string() + "}-path, got " + p.to_string());
}

void require_class(const ConvexPointSet& s, SetTag tag, const char* who) {
  if (!classify(s).contains(tag))
    throw Error(ErrorCode::PreconditionViolated, std::string(who) + " needs a " + to_string(tag) + " point set");
}

void ensure(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::InternalCaseError, what);
}

Embedding checked(const DirPath& p, const ConvexPointSet& s, Embedding e, const char* who) {
  ensure(is_pdce(p, s, e), std::string(who) + " produced an invalid embedding of " + p.to_string());
  return e;
}

bool up_or_right(DirLabel d) { return d == DirLabel::U || d == DirLabel::R; }

Embedding rotated_back(Embedding e, ConvexPointSet s, int quarter_turns) {
  for (int k = 0; k < quarter_turns; ++k) {
    e = rotate_embedding(e, s);
    s = rotate_set(s);
  }
  return e;
}

}  // namespace

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::LeftSidedWhole: return "LeftSidedWhole";
    case CaseTag::RightSidedWhole: return "RightSidedWhole";
    case CaseTag::C1: return "C1";
    case CaseTag::C2: return "C2";
    case CaseTag::C3: return "C3";
    case CaseTag::C4A: return "C4A";
    case CaseTag::C4B: return "C4B";
    case CaseTag::C4C: return "C4C";
    case CaseTag::C4D: return "C4D";
  }
  return "?";
}

std::string to_string(StepMethod method) {
  switch (method) {
    case StepMethod::LeftSided: return "left-sided";
    case StepMethod::RightSided: return "right-sided";
    case StepMethod::UpRightStrip: return "up-right strip";
    case StepMethod::SortUp: return "sort up";
    case StepMethod::SortDown: return "sort down";
  }
  return "?";
}

const PlanStep* CasePlan::step(const std::string& name) const {
  for (const auto& s : steps)
    if (s.name == name) return &s;
  return nullptr;
}

// ---------------------------------------------------------------------------
// Backward embedding and its direct consequences

Embedding backward_embedding(const DirPath& p, const ConvexPointSet& s) {
  require_size(p, s);
  const std::size_t n = s.size();
  // One order per extreme; each cursor skips points that are already used.
  std::vector<std::size_t> by_y(n);
  for (std::size_t k = 0; k < n; ++k) by_y[k] = k;
  std::vector<std::size_t> by_x = by_y;
  std::sort(by_y.begin(), by_y.end(), [&](std::size_t a, std::size_t b) { return s[a].y < s[b].y; });
  std::sort(by_x.begin(), by_x.end(), [&](std::size_t a, std::size_t b) { return s[a].x < s[b].x; });
  std::vector<bool> used(n, false);
  std::size_t lo_y = 0, hi_y = n, lo_x = 0, hi_x = n;
  auto take = [&](DirLabel d) {
    std::size_t pick = 0;
    switch (d) {
      case DirLabel::U:
        while (used[by_y[hi_y - 1]]) --hi_y;
        pick = by_y[hi_y - 1];
        break;
      case DirLabel::D:
        while (used[by_y[lo_y]]) ++lo_y;
        pick = by_y[lo_y];
        break;
      case DirLabel::L:
        while (used[by_x[lo_x]]) ++lo_x;
        pick = by_x[lo_x];
        break;
      case DirLabel::R:
        while (used[by_x[hi_x - 1]]) --hi_x;
        pick = by_x[hi_x - 1];
        break;
    }
    used[pick] = true;
    return pick;
  };
  std::vector<std::size_t> out(n);
  for (std::size_t i = n - 1; i >= 1; --i) out[i] = take(p.label(i));  // v_{i+1}
  for (std::size_t k = 0; k < n; ++k)
    if (!used[k]) out[0] = k;
  return Embedding(std::move(out));
}

Embedding embed_udr_left_sided(const DirPath& p, const ConvexPointSet& s) {
  require_size(p, s);
  require_class(s, SetTag::LeftSided, "embed_udr_left_sided");
  require_labels(p, kUDR, "embed_udr_left_sided");
  Embedding e = backward_embedding(p, s);
  const std::size_t n = s.size();
  if (n >= 2) {
    const std::size_t last = e.vertex(n);
    switch (p.label(n - 1)) {
      case DirLabel::U: ensure(last == s.top(), "left-sided: v_n not on t(S)"); break;
      case DirLabel::D: ensure(last == s.bottom(), "left-sided: v_n not on b(S)"); break;
      default: ensure(last == s.right() && (last == s.top() || last == s.bottom()), "left-sided: v_n not on r(S)"); break;
    }
  }
  return checked(p, s, std::move(e), "embed_udr_left_sided");
}

Embedding embed_udr_right_sided(const DirPath& p, const ConvexPointSet& s) {
  require_size(p, s);
  require_class(s, SetTag::RightSided, "embed_udr_right_sided");
  require_labels(p, kUDR, "embed_udr_right_sided");
  const ConvexPointSet half_turn = rotate_set(rotate_set(s));
  const DirPath flipped = reverse(rotate(rotate(p)));
  const Embedding on_half_turn = reverse_embedding(embed_udr_left_sided(flipped, half_turn));
  Embedding e = rotated_back(on_half_turn, half_turn, 2);
  if (s.size() >= 2) {
    const std::size_t first = e.vertex(1);
    switch (p.label(1)) {
      case DirLabel::U: ensure(first == s.bottom(), "right-sided: v_1 not on b(S)"); break;
      case DirLabel::D: ensure(first == s.top(), "right-sided: v_1 not on t(S)"); break;
      default: ensure(first == s.left() && (first == s.top() || first == s.bottom()), "right-sided: v_1 not on l(S)"); break;
    }
  }
  return checked(p, s, std::move(e), "embed_udr_right_sided");
}

Embedding embed_ur_strip(const DirPath& p, const ConvexPointSet& s) {
  require_size(p, s);
  require_class(s, SetTag::StripConvex, "embed_ur_strip");
  require_labels(p, kUR, "embed_ur_strip");
  Embedding e = backward_embedding(p, s);
  const std::size_t n = s.size();
  if (n >= 2) {
    ensure(e.vertex(1) == s.bottom() || e.vertex(1) == s.left(), "strip: v_1 not on b(S) or l(S)");
    const std::size_t want = p.label(n - 1) == DirLabel::U ? s.top() : s.right();
    ensure(e.vertex(n) == want, "strip: v_n not on the extreme named by d_{n-1}");
  }
  return checked(p, s, std::move(e), "embed_ur_strip");
}

// ---------------------------------------------------------------------------
// Case analysis for {U,D,R}-paths with t(S) right of b(S)

namespace {

class Planner {
 public:
  Planner(const DirPath& p, const ConvexPointSet& s) : p_(p), s_(s), n_(s.size()) {}

  CasePlan run() {
    const SplitDescriptor split = split_by_bt_line(s_);
    plan_.m = split.m;
    plan_.alpha = split.alpha;
    plan_.beta = split.beta;
    left_ = split.left_part;
    right_ = split.right_part;
    t_ = s_.top();
    b_ = s_.bottom();

    const std::size_t m = split.m;
    if (m + 2 == n_) {
      plan_.tag = CaseTag::LeftSidedWhole;
      add("S", StepMethod::LeftSided, 1, n_, all());
      return plan_;
    }
    if (m == 0) {
      plan_.tag = CaseTag::RightSidedWhole;
      add("S", StepMethod::RightSided, 1, n_, all());
      return plan_;
    }

    const DirLabel dm = d(m);
    const DirLabel dm1 = d(m + 1);
    if (dm == DirLabel::D && up_or_right(dm1)) {
      plan_.tag = CaseTag::C1;
      add("A", StepMethod::LeftSided, 1, m + 1, with(left_, {b_}));
      add("C", StepMethod::RightSided, m + 1, n_, with(right_, {t_, b_}));
    } else if (up_or_right(dm) && dm1 == DirLabel::D) {
      plan_.tag = CaseTag::C2;
      add("A", StepMethod::LeftSided, 1, m + 1, with(left_, {t_}));
      add("C", StepMethod::RightSided, m + 1, n_, with(right_, {t_, b_}));
    } else if (dm == DirLabel::D) {
      plan_case3(m);
    } else {
      plan_case4(m);
    }
    return plan_;
  }

 private:
  DirLabel d(std::size_t k) const { return p_.label(k); }

  std::vector<std::size_t> all() const {
    std::vector<std::size_t> v(n_);
    for (std::size_t k = 0; k < n_; ++k) v[k] = k;
    return v;
  }

  static std::vector<std::size_t> with(std::vector<std::size_t> v, std::initializer_list<std::size_t> extra) {
    v.insert(v.end(), extra.begin(), extra.end());
    return v;
  }

  // k extreme points of `from` according to the key, extremes first.
  template <typename Key>
  std::vector<std::size_t> take(std::vector<std::size_t> from, std::size_t k, Key key) const {
    ensure(k <= from.size(), "case plan asks for more points than available");
    std::sort(from.begin(), from.end(), [&](std::size_t a, std::size_t b) { return key(s_[a]) < key(s_[b]); });
    from.resize(k);
    return from;
  }
  std::vector<std::size_t> lowest(std::vector<std::size_t> from, std::size_t k) const {
    return take(std::move(from), k, [](const Point& q) { return q.y; });
  }
  std::vector<std::size_t> highest(std::vector<std::size_t> from, std::size_t k) const {
    return take(std::move(from), k, [](const Point& q) { return -q.y; });
  }
  std::vector<std::size_t> leftmost(std::vector<std::size_t> from, std::size_t k) const {
    return take(std::move(from), k, [](const Point& q) { return q.x; });
  }
  std::vector<std::size_t> rightmost(std::vector<std::size_t> from, std::size_t k) const {
    return take(std::move(from), k, [](const Point& q) { return -q.x; });
  }

  // S minus the given sets, plus the anchors.
  std::vector<std::size_t> rest(std::initializer_list<const std::vector<std::size_t>*> minus,
                                std::initializer_list<std::size_t> anchors) const {
    std::vector<bool> drop(n_, false);
    for (const auto* v : minus)
      for (std::size_t q : *v) drop[q] = true;
    for (std::size_t q : anchors) drop[q] = false;
    std::vector<std::size_t> out;
    for (std::size_t q = 0; q < n_; ++q)
      if (!drop[q]) out.push_back(q);
    return out;
  }

  void add(std::string name, StepMethod method, std::size_t first, std::size_t last, std::vector<std::size_t> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    ensure(points.size() == last - first + 1, "case " + to_string(plan_.tag) + ": step " + name + " has " +
                                                  std::to_string(points.size()) + " points for " +
                                                  std::to_string(last - first + 1) + " vertices");
    plan_.steps.push_back(PlanStep{std::move(name), method, first, last, std::move(points)});
  }

  // d_m = d_{m+1} = D: maximal D run P_{a,b}.
  void plan_case3(std::size_t m) {
    plan_.tag = CaseTag::C3;
    std::size_t a = m;
    while (a > 1 && d(a - 1) == DirLabel::D) --a;
    std::size_t b = m + 1;
    while (b + 1 <= n_ - 1 && d(b + 1) == DirLabel::D) ++b;
    plan_.a = a;
    plan_.b = b;
    auto A = highest(with(left_, {t_}), a);
    auto C = lowest(with(right_, {b_}), n_ - b);
    add("A", StepMethod::LeftSided, 1, a, A);
    add("B", StepMethod::SortDown, a, b + 1, rest({&A, &C}, {t_, b_}));
    add("C", StepMethod::RightSided, b + 1, n_, C);
  }

  void plan_case4(std::size_t m) {
    std::size_t i = m;
    while (i > 1 && up_or_right(d(i - 1))) --i;
    std::size_t j = m + 1;
    while (j + 1 <= n_ - 1 && up_or_right(d(j + 1))) ++j;
    plan_.i = i;
    plan_.j = j;
    const std::size_t alpha = plan_.alpha;
    const std::size_t beta = plan_.beta;

    // i <= alpha puts d_alpha inside the run (alpha >= 1); likewise for beta.
    const bool low_fits = i > alpha;
    const bool high_fits = j < beta;
    plan_.low_shift = !low_fits && d(alpha) == DirLabel::R;
    plan_.high_shift = !high_fits && d(beta) == DirLabel::R;
    const std::size_t lo = plan_.low_shift ? alpha + 1 : i;
    const std::size_t hi = plan_.high_shift ? beta - 1 : j;
    plan_.run_first = lo;
    plan_.run_last = hi;
    const bool low_ok = low_fits || plan_.low_shift;
    const bool high_ok = high_fits || plan_.high_shift;

    if (low_ok && high_ok) {
      plan_.tag = CaseTag::C4A;
      auto A = lowest(with(left_, {b_}), lo);
      auto C = highest(with(right_, {t_}), n_ - hi);
      add("A", StepMethod::LeftSided, 1, lo, A);
      add("B", StepMethod::UpRightStrip, lo, hi + 1, rest({&A, &C}, {b_, t_}));
      add("C", StepMethod::RightSided, hi + 1, n_, C);
    } else if (low_ok) {
      plan_case4b(lo, hi);
    } else if (high_ok) {
      plan_case4c(lo, hi);
    } else {
      plan_case4d(lo, hi);
    }
  }

  // Maximal U run containing d_k, clipped to [lo, hi].
  std::pair<std::size_t, std::size_t> u_run(std::size_t k, std::size_t lo, std::size_t hi) const {
    std::size_t a = k;
    while (a > lo && d(a - 1) == DirLabel::U) --a;
    std::size_t b = k;
    while (b < hi && d(b + 1) == DirLabel::U) ++b;
    return {a, b};
  }

  // Run reaches t(S) with d_beta = U; the U run around d_beta climbs to t(S).
  void plan_case4b(std::size_t lo, std::size_t hi) {
    plan_.tag = CaseTag::C4B;
    const auto [a, b] = u_run(plan_.beta, lo, hi);
    plan_.a = a;
    plan_.b = b;
    auto A = lowest(with(left_, {b_}), lo);
    auto D = highest(with(right_, {t_}), n_ - b);
    add("A", StepMethod::LeftSided, 1, lo, A);
    std::vector<std::size_t> B;
    if (a > lo) {
      B = leftmost(rest({&A}, {b_}), a - lo);
      add("B", StepMethod::UpRightStrip, lo, a - 1, B);
      add("C", StepMethod::SortUp, a, b + 1, rest({&A, &B, &D}, {t_}));
    } else {
      add("C", StepMethod::SortUp, a, b + 1, rest({&A, &D}, {b_, t_}));
    }
    add("D", StepMethod::RightSided, b + 1, n_, D);
  }

  // Run reaches below b(S) with d_alpha = U; the U run around d_alpha starts
  // at b(S) and the remaining U/R part ends at t(S).
  void plan_case4c(std::size_t lo, std::size_t hi) {
    plan_.tag = CaseTag::C4C;
    const auto [a, b] = u_run(plan_.alpha, lo, hi);
    plan_.a = a;
    plan_.b = b;
    auto A = lowest(with(left_, {b_}), a);
    auto D = highest(with(right_, {t_}), n_ - hi);
    auto middle = rest({&A, &D}, {b_, t_});
    add("A", StepMethod::LeftSided, 1, a, A);
    if (b == hi) {
      add("B", StepMethod::SortUp, a, hi + 1, middle);
    } else {
      auto B = leftmost(middle, b - a + 2);
      add("B", StepMethod::SortUp, a, b + 1, B);
      add("C", StepMethod::UpRightStrip, b + 2, hi + 1, rest({&A, &B, &D}, {t_}));
    }
    add("D", StepMethod::RightSided, hi + 1, n_, D);
  }

  void plan_case4d(std::size_t lo, std::size_t hi) {
    plan_.tag = CaseTag::C4D;
    const auto [a, b] = u_run(plan_.alpha, lo, hi);
    const auto [c, e] = u_run(plan_.beta, lo, hi);
    plan_.a = a;
    plan_.b = b;
    plan_.c = c;
    plan_.e = e;
    auto A = lowest(with(left_, {b_}), a);
    auto E = highest(with(right_, {t_}), n_ - e);
    auto middle = rest({&A, &E}, {b_, t_});
    add("A", StepMethod::LeftSided, 1, a, A);
    if (a == c) {
      add("B", StepMethod::SortUp, a, e + 1, middle);
    } else {
      auto B = leftmost(middle, b - a + 2);
      auto D = rightmost(middle, e - c + 2);
      add("B", StepMethod::SortUp, a, b + 1, B);
      if (c > b + 2) add("C", StepMethod::UpRightStrip, b + 2, c - 1, rest({&A, &B, &D, &E}, {}));
      add("D", StepMethod::SortUp, c, e + 1, D);
    }
    add("E", StepMethod::RightSided, e + 1, n_, E);
  }

  const DirPath& p_;
  const ConvexPointSet& s_;
  const std::size_t n_;
  CasePlan plan_;
  std::vector<std::size_t> left_;
  std::vector<std::size_t> right_;
  std::size_t t_ = 0;
  std::size_t b_ = 0;
};

Embedding sorted_by_y(const ConvexPointSet& sub, bool increasing) {
  std::vector<std::size_t> order(sub.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return increasing ? sub[a].y < sub[b].y : sub[a].y > sub[b].y;
  });
  return Embedding(std::move(order));
}

Embedding run_step(const PlanStep& step, const DirPath& piece, const ConvexPointSet& sub) {
  switch (step.method) {
    case StepMethod::LeftSided: return embed_udr_left_sided(piece, sub);
    case StepMethod::RightSided: return embed_udr_right_sided(piece, sub);
    case StepMethod::UpRightStrip: return embed_ur_strip(piece, sub);
    case StepMethod::SortUp:
      ensure(directions_used(piece).subset_of(DirectionSet{DirLabel::U}), "sort-up step on a non-U run");
      return sorted_by_y(sub, true);
    case StepMethod::SortDown:
      ensure(directions_used(piece).subset_of(DirectionSet{DirLabel::D}), "sort-down step on a non-D run");
      return sorted_by_y(sub, false);
  }
  return {};
}

}  // namespace

CasePlan plan_udr_case(const DirPath& p, const ConvexPointSet& s) {
  require_size(p, s);
  require_labels(p, kUDR, "plan_udr_case");
  if (s.size() < 2) throw Error(ErrorCode::PreconditionViolated, "plan_udr_case needs at least two points");
  return Planner(p, s).run();
}

Embedding embed_udr_convex(const DirPath& p, const ConvexPointSet& s) {
  const CasePlan plan = plan_udr_case(p, s);
  std::vector<std::size_t> out(s.size(), kUnset);
  for (const PlanStep& step : plan.steps) {
    auto [sub, to_parent] = s.subset(step.points);
    const DirPath piece = p.slice(step.first_vertex, step.last_vertex - 1);
    Embedding local;
    try {
      local = run_step(step, piece, sub);
    } catch (const Error& err) {
      if (err.code() == ErrorCode::InternalCaseError) throw;
      throw Error(ErrorCode::InternalCaseError,
                  "case " + to_string(plan.tag) + " step " + step.name + ": " + err.what());
    }
    for (std::size_t k = 0; k < local.size(); ++k) {
      const std::size_t v = step.first_vertex + k - 1;
      const std::size_t q = to_parent[local[k]];
      ensure(out[v] == kUnset || out[v] == q,
             "case " + to_string(plan.tag) + " step " + step.name + " disagrees at shared vertex v_" + std::to_string(v + 1));
      out[v] = q;
    }
  }
  ensure(std::find(out.begin(), out.end(), kUnset) == out.end(), "case " + to_string(plan.tag) + " left a vertex unplaced");
  Embedding e(std::move(out));
  ensure(is_pdce(p, s, e), "case " + to_string(plan.tag) + " assembled an invalid embedding of " + p.to_string());
  return e;
}

namespace {

// {U,D,R}-path on any convex set.
Embedding embed_udr_any(const DirPath& p, const ConvexPointSet& s) {
  if (s.size() == 1) return Embedding({0});
  if (s[s.top()].x > s[s.bottom()].x) return embed_udr_convex(p, s);
  const ConvexPointSet mirrored = mirror_set(s);
  const Embedding on_mirror = embed_udr_convex(mirror(reverse(p)), mirrored);
  return reverse_embedding(mirror_embedding(on_mirror, mirrored));
}

Embedding embed_udl_any(const DirPath& p, const ConvexPointSet& s) { return reverse_embedding(embed_udr_any(reverse(p), s)); }

}  // namespace

Embedding embed_three_directional(const DirPath& p, const ConvexPointSet& s) {
  require_size(p, s);
  const DirectionSet used = directions_used(p);
  if (used.size() == 4) throw Error(ErrorCode::FourDirectional, p.to_string() + " uses all four directions");
  Embedding e;
  if (used.subset_of(kUDR)) {
    e = embed_udr_any(p, s);
  } else if (used.subset_of(kUDL)) {
    e = embed_udl_any(p, s);
  } else {
    // {U,L,R} rotates to {U,D,L} and {D,L,R} to {U,D,R}; three more quarter
    // turns bring the embedding back onto S.
    const ConvexPointSet turned = rotate_set(s);
    const DirPath turned_path = rotate(p);
    const Embedding on_turned = used.subset_of(kULR) ? embed_udl_any(turned_path, turned) : embed_udr_any(turned_path, turned);
    e = rotated_back(on_turned, turned, 3);
  }
  return checked(p, s, std::move(e), "embed_three_directional");
}

Embedding embed_quarter_convex(const DirPath& p, const ConvexPointSet& s) {
  require_size(p, s);
  const PointSetClass cls = classify(s);
  const bool increasing = cls.contains(SetTag::QuarterIncreasing);
  if (!increasing && !cls.contains(SetTag::QuarterDecreasing))
    throw Error(ErrorCode::PreconditionViolated, "embed_quarter_convex needs a monotone-chain point set");
  const DirPath vertical = increasing ? relabel(p, [](DirLabel d) {
    return d == DirLabel::R ? DirLabel::U : d == DirLabel::L ? DirLabel::D : d;
  })
                                      : relabel(p, [](DirLabel d) {
                                          return d == DirLabel::R ? DirLabel::D : d == DirLabel::L ? DirLabel::U : d;
                                        });
  Embedding e = cls.contains(SetTag::LeftSided) ? embed_udr_left_sided(vertical, s) : embed_three_directional(vertical, s);
  return checked(p, s, std::move(e), "embed_quarter_convex");
}

}  // namespace pdce
