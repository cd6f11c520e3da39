// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "fixture.hpp"
#include "pdce/decider.hpp"
#include "pdce/embedder.hpp"
#include "pdce/error.hpp"
#include "pdce/oracle.hpp"
#include "pdce/validator.hpp"
#include "support.hpp"

using namespace pdce;
using pdce::testing::random_path;
using pdce::testing::reference_pdce;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

int failures = 0;

void criterion(const char* id, const char* title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double secs = seconds_since(start);
  if (!o.pass) ++failures;
  std::printf("%s %s  %s  [%s%.2f s]\n", id, o.pass ? "PASS" : "FAIL", title, o.detail.str().c_str(), secs);
  std::fflush(stdout);
}

bool full_check(const std::string& p, const ConvexPointSet& s, const Embedding& e) {
  const ValidationReport r = validate_embedding(DirPath::parse(p), s, e);
  return r.planar_prefix && r.planar_segments && r.direction_consistent && reference_pdce(p, s, e);
}

std::string four_directional_path(std::mt19937_64& rng, std::size_t edges) {
  if (edges < 4) return random_path(rng, edges, "UDLR");
  for (;;) {
    std::string p = random_path(rng, edges, "UDLR");
    if (directions_used(DirPath::parse(p)).size() == 4) return p;
  }
}

GenerationMode any_mode(std::mt19937_64& rng) { return static_cast<GenerationMode>(rng() % 6); }

}  // namespace

int main() {
  criterion("AC1", "three-directional paths embed on random convex sets", [](Outcome& o) {
    std::mt19937_64 rng(101);
    const char* alphabets[] = {"UDR", "UDL", "ULR", "DLR"};
    int ok = 0;
    for (int k = 0; k < 1000; ++k) {
      const std::size_t n = 3 + rng() % 38;
      const ConvexPointSet s = generate_random_convex(n, rng(), GenerationMode::General);
      const std::string p = random_path(rng, n - 1, alphabets[k % 4]);
      const Embedding e = embed_three_directional(DirPath::parse(p), s);
      const bool good = full_check(p, s, e);
      o.require(good, p);
      ok += good;
    }
    o.detail << ok << "/1000 valid; ";
  });

  criterion("AC2", "decider agrees with brute force", [](Outcome& o) {
    std::mt19937_64 rng(202);
    std::size_t instances = 0, yes = 0;
    auto check = [&](const std::string& p, const ConvexPointSet& s) {
      const DirPath path = DirPath::parse(p);
      const auto w = decide_pdce(path, s);
      const bool brute = !brute_force_pdce(path, s).empty();
      o.require(w.has_value() == brute, "disagreement on " + p);
      if (w) o.require(full_check(p, s, *w), "witness invalid for " + p);
      ++instances;
      yes += w.has_value();
    };
    for (std::size_t n : {4u, 5u, 6u}) {
      const ConvexPointSet s = generate_random_convex(n, 7000 + n, GenerationMode::General);
      std::string p(n - 1, 'U');
      const std::string labels = "UDLR";
      for (std::size_t code = 0; code < (std::size_t{1} << (2 * (n - 1))); ++code) {
        for (std::size_t k = 0; k + 1 < n; ++k) p[k] = labels[(code >> (2 * k)) & 3];
        check(p, s);
      }
    }
    // NO answers are rare on random pairs. A quarter of the pairs are
    // 7-point left-sided grid sets, half of them with the path LULRDR.
    for (int k = 0; k < 2000; ++k) {
      if (k % 4 == 3) {
        std::optional<ConvexPointSet> s;
        while (!s) s = sample_left_sided_in_grid(7, kSearchGrid, rng);
        check(rng() % 2 ? std::string("LULRDR") : random_path(rng, 6, "UDLR"), *s);
        continue;
      }
      const std::size_t n = 1 + rng() % 10;
      check(random_path(rng, n - 1, "UDLR"), generate_random_convex(n, rng(), any_mode(rng)));
    }
    o.require(yes < instances, "no NO instance exercised");
    o.detail << instances << " instances, " << yes << " YES, " << instances - yes << " NO; ";
  });

  criterion("AC3", "LULRDR counterexample: search and committed fixture", [](Outcome& o) {
    const DirPath p = DirPath::parse("LULRDR");
    const auto start = Clock::now();
    const SearchResult found = search_counterexample(SearchOptions{});
    const double search_secs = seconds_since(start);
    o.require(search_secs < 30.0, "search slower than 30 s");
    o.require(classify(found.set).contains(SetTag::LeftSided), "search result not left-sided");
    o.require(brute_force_pdce(p, found.set).empty() && !decide_pdce(p, found.set), "search result not certified");

    const auto fx = pdce::testing::load_fixture();
    o.require(fx.path == p, "fixture path");
    o.require(classify(fx.set).contains(SetTag::LeftSided), "fixture not left-sided");
    o.require(enumerate_planar_embeddings(fx.set).size() == 224 && fx.planar_candidates == 224, "candidate count");
    const auto census = pdce::testing::census("LULRDR", fx.set);
    o.require(census.planar == 224 && census.pdce == 0, "n! census disagrees");
    o.require(fx.pdce_count == 0, "fixture pdce_count");
    o.require(certificate_sha256(p, fx.set) == fx.certificate_sha256, "certificate hash");

    double best = 1e9;
    bool no = true;
    for (int rep = 0; rep < 20; ++rep) {
      const auto t0 = Clock::now();
      no = no && !decide_pdce(p, fx.set) && brute_force_pdce(p, fx.set).empty();
      best = std::min(best, seconds_since(t0));
    }
    o.require(no, "fixture decided YES");
    o.require(best < 1e-3, "re-certification slower than 1 ms");
    o.detail << "search " << search_secs * 1e3 << " ms after " << found.distinct << " distinct samples, re-certification "
             << best * 1e6 << " us; ";
  });

  criterion("AC4", "plane spanning paths number n*2^(n-3)", [](Outcome& o) {
    for (std::size_t n = 3; n <= 10; ++n)
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const ConvexPointSet s = generate_random_convex(n, 400 + 10 * n + seed, GenerationMode::General);
        o.require(count_plane_spanning_paths(s) == (n << (n - 3)), "n=" + std::to_string(n));
      }
    o.detail << "n=3..10, 5 sets each; ";
  });

  criterion("AC5", "any path embeds on monotone-chain sets", [](Outcome& o) {
    std::mt19937_64 rng(505);
    int ok = 0;
    for (int k = 0; k < 500; ++k) {
      const std::size_t n = 2 + rng() % 29;
      const auto mode = k % 2 ? GenerationMode::QuarterIncreasing : GenerationMode::QuarterDecreasing;
      const ConvexPointSet s = generate_random_convex(n, rng(), mode);
      const std::string p = four_directional_path(rng, n - 1);
      const bool good = full_check(p, s, embed_quarter_convex(DirPath::parse(p), s));
      o.require(good, p);
      ok += good;
    }
    o.detail << ok << "/500 valid; ";
  });

  criterion("AC6", "prefix-arc planarity equals segment planarity over all n!", [](Outcome& o) {
    std::size_t checked = 0, planar = 0;
    for (std::size_t n : {4u, 5u, 6u}) {
      const ConvexPointSet s = generate_random_convex(n, 600 + n, GenerationMode::General);
      std::vector<std::size_t> order(n);
      for (std::size_t k = 0; k < n; ++k) order[k] = k;
      do {
        const Embedding e(order);
        const bool prefix = check_planarity_prefix(s, e).planar;
        o.require(prefix == check_planarity_segments(s, e).planar, "checker disagreement");
        o.require(prefix == pdce::testing::simple_polyline(pdce::testing::placed(s, e)), "reference disagreement");
        ++checked;
        planar += prefix;
      } while (std::next_permutation(order.begin(), order.end()));
    }
    o.detail << checked << " embeddings, " << planar << " planar, 0 disagreements required; ";
  });

  criterion("AC7", "endpoint contracts of the one-sided and strip embedders", [](Outcome& o) {
    std::mt19937_64 rng(707);
    for (int k = 0; k < 500; ++k) {
      const std::size_t n = 2 + rng() % 30;
      const ConvexPointSet s = generate_random_convex(n, rng(), GenerationMode::LeftSided);
      const std::string p = random_path(rng, n - 1, "UDR");
      const Embedding e = embed_udr_left_sided(DirPath::parse(p), s);
      const std::size_t last = e.vertex(n);
      const char d = p.back();
      o.require(full_check(p, s, e), "left-sided invalid");
      o.require(d == 'U' ? last == s.top() : d == 'D' ? last == s.bottom() : (last == s.top() || last == s.bottom()),
                "left-sided endpoint " + p);
    }
    for (int k = 0; k < 500; ++k) {
      const std::size_t n = 2 + rng() % 30;
      const ConvexPointSet s = generate_random_convex(n, rng(), GenerationMode::RightSided);
      const std::string p = random_path(rng, n - 1, "UDR");
      const Embedding e = embed_udr_right_sided(DirPath::parse(p), s);
      const std::size_t first = e.vertex(1);
      const char d = p.front();
      o.require(full_check(p, s, e), "right-sided invalid");
      o.require(d == 'U' ? first == s.bottom() : d == 'D' ? first == s.top() : (first == s.top() || first == s.bottom()),
                "right-sided endpoint " + p);
    }
    for (int k = 0; k < 500; ++k) {
      const std::size_t n = 2 + rng() % 30;
      const ConvexPointSet s = generate_random_convex(n, rng(), GenerationMode::Strip);
      const std::string p = random_path(rng, n - 1, "UR");
      const Embedding e = embed_ur_strip(DirPath::parse(p), s);
      o.require(full_check(p, s, e), "strip invalid");
      o.require(e.vertex(1) == s.bottom() || e.vertex(1) == s.left(), "strip start " + p);
      o.require(e.vertex(n) == (p.back() == 'U' ? s.top() : s.right()), "strip end " + p);
    }
    o.detail << "3 x 500 instances; ";
  });

  criterion("AC8", "reverse, rotate and mirror preserve PDCEs", [](Outcome& o) {
    std::mt19937_64 rng(808);
    const char* alphabets[] = {"UDR", "UDL", "ULR", "DLR"};
    for (int k = 0; k < 500; ++k) {
      const std::size_t n = 1 + rng() % 30;
      const ConvexPointSet s = generate_random_convex(n, rng(), any_mode(rng));
      const DirPath p = DirPath::parse(random_path(rng, n - 1, alphabets[k % 4]));
      const Embedding e = embed_three_directional(p, s);
      o.require(is_pdce(p, s, e), "source not a PDCE");
      o.require(is_pdce(reverse(p), s, reverse_embedding(e)), "reverse");
      o.require(is_pdce(mirror(p), mirror_set(s), mirror_embedding(e, s)), "mirror");
      ConvexPointSet rs = s;
      DirPath rp = p;
      Embedding re = e;
      for (int turn = 0; turn < 4; ++turn) {
        re = rotate_embedding(re, rs);
        rs = rotate_set(rs);
        rp = rotate(rp);
        o.require(is_pdce(rp, rs, re), "rotate");
      }
      o.require(rs == s && rp == p && re == e, "R^4 != id");
      o.require(mirror_set(mirror_set(s)) == s && mirror(mirror(p)) == p &&
                    mirror_embedding(mirror_embedding(e, s), mirror_set(s)) == e,
                "M^2 != id");
      o.require(reverse(reverse(p)) == p && reverse_embedding(reverse_embedding(e)) == e, "(P^I)^I != P");
    }
    o.detail << "500 PDCEs; ";
  });

  criterion("AC9", "decision scales quadratically", [](Outcome& o) {
    std::mt19937_64 rng(909);
    auto timed = [&](std::size_t n) {
      double best = 1e9;
      for (int rep = 0; rep < 3; ++rep) {
        const ConvexPointSet s = generate_random_convex(n, rng(), GenerationMode::General);
        const DirPath p = DirPath::parse(four_directional_path(rng, n - 1));
        const auto start = Clock::now();
        const DPTable t = dp_table(p, s);
        const auto w = decide_pdce(p, s);
        best = std::min(best, seconds_since(start) / 2);
        o.require(t.populated_entries() <= 2 * n * n, "cell bound");
        bool cells_ok = true;
        for (std::size_t i = 1; i <= n && cells_ok; ++i)
          for (std::size_t j = 0; j < n; ++j) cells_ok = cells_ok && t.entries(i, j).size() <= 2;
        o.require(cells_ok, "more than two entries in a cell");
        if (w) o.require(is_pdce(p, s, *w), "witness invalid");
      }
      return best;
    };
    const double t1 = timed(1000);
    const double t2 = timed(2000);
    const double ratio = t2 / t1;
    o.require(ratio <= 5.0, "T(2000)/T(1000) above 5");
    o.require(t2 < 2.0, "n=2000 slower than 2 s");
    o.detail << "T(1000)=" << t1 * 1e3 << " ms, T(2000)=" << t2 * 1e3 << " ms, ratio " << ratio << "; ";
  });

  std::printf("%s: %d criterion(s) failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
