#include "pdce/oracle.hpp"

#include <openssl/evp.h>

#include <iomanip>
#include <random>
#include <set>
#include <sstream>

#include "pdce/decider.hpp"
#include "pdce/error.hpp"
#include "pdce/validator.hpp"

namespace pdce {

namespace {

// Arc extension with an optional per-step filter on the newly placed vertex.
class ArcWalker {
 public:
  using Accept = std::function<bool(std::size_t k, std::size_t from, std::size_t to)>;

  ArcWalker(const ConvexPointSet& s, Accept accept, const std::function<void(const Embedding&)>& visit)
      : s_(s), accept_(std::move(accept)), visit_(visit), order_(s.size()) {}

  void run() {
    for (std::size_t first = 0; first < s_.size(); ++first) {
      order_[0] = first;
      extend(1, first, first);
    }
  }

 private:
  void extend(std::size_t k, std::size_t lo, std::size_t hi) {
    const std::size_t n = s_.size();
    if (k == n) {
      visit_(Embedding(order_));
      return;
    }
    const std::size_t down = s_.prev(lo);
    const std::size_t up = s_.next(hi);
    const std::size_t last = order_[k - 1];
    if (accept_(k, last, down)) {
      order_[k] = down;
      extend(k + 1, down, hi);
    }
    if (up != down && accept_(k, last, up)) {
      order_[k] = up;
      extend(k + 1, lo, up);
    }
  }

  const ConvexPointSet& s_;
  Accept accept_;
  const std::function<void(const Embedding&)>& visit_;
  std::vector<std::size_t> order_;
};

void require_size(const DirPath& p, const ConvexPointSet& s) {
  if (p.vertex_count() != s.size())
    throw Error(ErrorCode::SizeMismatch,
                "path has " + std::to_string(p.vertex_count()) + " vertices, set has " + std::to_string(s.size()) + " points");
}

// x-rank and y-rank of each canonical index; equal signatures mean the same
// order type up to the labels that matter here.
std::vector<std::uint8_t> signature(const ConvexPointSet& s) {
  const std::size_t n = s.size();
  std::vector<std::uint8_t> sig(2 * n);
  for (std::size_t a = 0; a < n; ++a) {
    std::uint8_t rx = 0, ry = 0;
    for (std::size_t b = 0; b < n; ++b) {
      rx += s[b].x < s[a].x;
      ry += s[b].y < s[a].y;
    }
    sig[a] = rx;
    sig[n + a] = ry;
  }
  return sig;
}

}  // namespace

void for_each_planar_embedding(const ConvexPointSet& s, const std::function<void(const Embedding&)>& visit) {
  ArcWalker(s, [](std::size_t, std::size_t, std::size_t) { return true; }, visit).run();
}

std::vector<Embedding> enumerate_planar_embeddings(const ConvexPointSet& s) {
  std::vector<Embedding> out;
  for_each_planar_embedding(s, [&](const Embedding& e) { out.push_back(e); });
  return out;
}

std::vector<Embedding> brute_force_pdce(const DirPath& p, const ConvexPointSet& s, std::size_t bound) {
  require_size(p, s);
  if (s.size() > bound)
    throw Error(ErrorCode::BoundExceeded,
                "brute force limited to " + std::to_string(bound) + " points, got " + std::to_string(s.size()));
  std::vector<Embedding> out;
  // Pruning on direction only skips subtrees that cannot contain a PDCE.
  ArcWalker(
      s, [&](std::size_t k, std::size_t from, std::size_t to) { return direction_ok(p.label(k), s[from], s[to]); },
      [&](const Embedding& e) { out.push_back(e); })
      .run();
  return out;
}

std::uint64_t count_plane_spanning_paths(const ConvexPointSet& s) {
  std::uint64_t directed = 0;
  for_each_planar_embedding(s, [&](const Embedding&) { ++directed; });
  return s.size() == 1 ? 1 : directed / 2;
}

SearchResult search_counterexample(const SearchOptions& options) {
  if (options.budget == 0) throw Error(ErrorCode::PreconditionViolated, "search budget must be positive");
  const std::size_t n = options.path.vertex_count();
  std::mt19937_64 rng(options.seed);
  std::set<std::vector<std::uint8_t>> seen;
  std::size_t distinct = 0;
  for (std::size_t sample = 0; sample < options.budget; ++sample) {
    std::optional<ConvexPointSet> s;
    if (options.family == GenerationMode::LeftSided) {
      s = sample_left_sided_in_grid(n, kSearchGrid, rng);
    } else {
      try {
        s = generate_random_convex(n, rng(), options.family);
      } catch (const Error&) {
        s.reset();
      }
    }
    if (!s || !seen.insert(signature(*s)).second) continue;
    ++distinct;
    if (!brute_force_pdce(options.path, *s).empty()) continue;
    if (decide_pdce(options.path, *s))
      throw Error(ErrorCode::InternalCaseError, "brute force and dynamic program disagree on a sampled set");
    return SearchResult{*s, sample + 1, distinct};
  }
  throw Error(ErrorCode::NotFoundWithinBudget,
              "no set without a PDCE of " + options.path.to_string() + " among " + std::to_string(distinct) +
                  " distinct samples (budget " + std::to_string(options.budget) + ")");
}

std::string certificate_text(const DirPath& p, const ConvexPointSet& s) {
  require_size(p, s);
  std::ostringstream out;
  out << "path " << p.to_string() << '\n';
  for (const Point& q : s.points()) out << "point " << q.x << ' ' << q.y << '\n';
  std::size_t candidates = 0;
  std::size_t valid = 0;
  for_each_planar_embedding(s, [&](const Embedding& e) {
    ++candidates;
    out << "candidate";
    for (std::size_t q : e.assignment()) out << ' ' << q;
    const DirectionCheck check = check_direction_consistency(p, s, e);
    if (check.consistent) {
      ++valid;
      out << " ok\n";
    } else {
      out << " edge " << *check.first_bad_edge << '\n';
    }
  });
  out << "candidates " << candidates << "\npdce " << valid << '\n';
  return out.str();
}

std::string certificate_sha256(const DirPath& p, const ConvexPointSet& s) {
  const std::string text = certificate_text(p, s);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(text.data(), text.size(), digest, &length, EVP_sha256(), nullptr) != 1)
    throw Error(ErrorCode::InternalCaseError, "SHA-256 computation failed");
  std::ostringstream hex;
  hex << std::hex << std::setfill('0');
  for (unsigned int k = 0; k < length; ++k) hex << std::setw(2) << static_cast<int>(digest[k]);
  return hex.str();
}

}  // namespace pdce
