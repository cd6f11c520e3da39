#include "pdce/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <json.hpp>
#include <sstream>

#include "pdce/decider.hpp"
#include "pdce/embedder.hpp"
#include "pdce/error.hpp"
#include "pdce/io.hpp"
#include "pdce/oracle.hpp"
#include "pdce/svg.hpp"
#include "pdce/validator.hpp"

namespace pdce::cli {

namespace {

struct Options {
  std::string points;
  std::string path;
  std::string embedding;
  std::string svg;
  std::string out;
  std::string out_dir;
  std::string mode = "general";
  std::string family = "left_sided";
  std::string oracle_mode;
  std::uint64_t seed = 1;
  std::size_t budget = kDefaultSearchBudget;
  std::size_t n = 0;
  std::size_t count = 1;
  bool force = false;
  bool json = false;
};

Instance load_points(const Options& o) { return Instance::from_points(parse_points(read_text_file(o.points))); }

DirPath load_path(const Options& o, const Instance& inst) {
  const DirPath p = DirPath::parse(o.path);
  if (p.vertex_count() != inst.set.size())
    throw Error(ErrorCode::SizeMismatch, "path " + o.path + " has " + std::to_string(p.vertex_count()) +
                                             " vertices but the instance has " + std::to_string(inst.set.size()) +
                                             " points");
  return p;
}

void emit(const Options& o, const Instance& inst, const DirPath& p, const Embedding& e, std::ostream& out) {
  out << format_embedding(inst.to_input_order(e));
  if (!o.svg.empty()) write_text_file(o.svg, render_svg(inst.set, e, p));
}

int cmd_embed(const Options& o, std::ostream& out) {
  const Instance inst = load_points(o);
  const DirPath p = load_path(o, inst);
  const PointSetClass cls = classify(inst.set);
  Embedding e;
  if (directions_used(p).size() <= 3) {
    e = embed_three_directional(p, inst.set);
  } else if (cls.contains(SetTag::QuarterIncreasing) || cls.contains(SetTag::QuarterDecreasing)) {
    e = embed_quarter_convex(p, inst.set);
  } else {
    throw Error(ErrorCode::FourDirectional,
                "embed handles three-directional paths or monotone-chain sets only; use `pdce decide` for " + o.path);
  }
  emit(o, inst, p, e, out);
  return kOk;
}

int cmd_decide(const Options& o, std::ostream& out) {
  const Instance inst = load_points(o);
  const DirPath p = load_path(o, inst);
  const auto e = decide_pdce(p, inst.set);
  if (!e) {
    out << "NO\n";
    return kNo;
  }
  emit(o, inst, p, *e, out);
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Instance inst = load_points(o);
  const DirPath p = load_path(o, inst);
  const auto indices = parse_embedding(read_text_file(o.embedding));
  nlohmann::json report;
  try {
    const Embedding e = inst.from_input_order(indices);
    require_well_formed(e, inst.set.size());
    const ValidationReport r = validate_embedding(p, inst.set, e);
    report["pdce"] = r.is_pdce();
    report["planar_prefix"] = r.planar_prefix;
    report["planar_segments"] = r.planar_segments;
    report["direction_consistent"] = r.direction_consistent;
    if (r.first_violation)
      report["first_violation"] = {{"kind", to_string(r.first_violation->kind)}, {"index", r.first_violation->index}};
    else
      report["first_violation"] = nullptr;
  } catch (const Error& err) {
    if (err.code() != ErrorCode::InvalidEmbedding) throw;
    report["pdce"] = false;
    report["error"] = err.what();
  }
  out << report.dump() << '\n';
  return report["pdce"].get<bool>() ? kOk : kNo;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  if (o.oracle_mode == "search") {
    SearchOptions search;
    search.path = DirPath::parse(o.path.empty() ? "LULRDR" : o.path);
    search.family = parse_generation_mode(o.family);
    search.budget = o.budget;
    search.seed = o.seed;
    try {
      const SearchResult found = search_counterexample(search);
      const std::string fixture = counterexample_fixture(search.path, found.set);
      if (!o.out.empty()) write_text_file(o.out, fixture);
      out << fixture;
      return kOk;
    } catch (const Error& err) {
      if (err.code() != ErrorCode::NotFoundWithinBudget) throw;
      out << "NOT FOUND: " << err.what() << '\n';
      return kNo;
    }
  }
  const Instance inst = load_points(o);
  if (o.oracle_mode == "count") {
    out << count_plane_spanning_paths(inst.set) << '\n';
    return kOk;
  }
  const DirPath p = load_path(o, inst);
  const auto all = brute_force_pdce(p, inst.set);
  out << all.size() << '\n';
  for (const Embedding& e : all) {
    const auto order = inst.to_input_order(e);
    for (std::size_t k = 0; k < order.size(); ++k) out << (k ? " " : "") << order[k];
    out << '\n';
  }
  return all.empty() ? kNo : kOk;
}

int cmd_gen(const Options& o, std::ostream& out) {
  const GenerationMode mode = parse_generation_mode(o.mode);
  if (o.count > 1 && o.out_dir.empty()) throw Error(ErrorCode::ParseError, "--count above 1 needs --out-dir");
  for (std::size_t k = 0; k < o.count; ++k) {
    const ConvexPointSet s = generate_random_convex(o.n, o.seed + k, mode);
    const std::string text = o.json ? format_points_json(s.points()) : format_points_text(s.points());
    if (!o.out_dir.empty()) {
      std::filesystem::create_directories(o.out_dir);
      std::ostringstream name;
      name << to_string(mode) << '_' << o.n << '_' << (o.seed + k) << (o.json ? ".json" : ".txt");
      write_text_file((std::filesystem::path(o.out_dir) / name.str()).string(), text);
    } else if (!o.out.empty()) {
      write_text_file(o.out, text);
    } else {
      out << text;
    }
  }
  return kOk;
}

int cmd_render(const Options& o, std::ostream& out, std::ostream& err) {
  const Instance inst = load_points(o);
  const DirPath p = load_path(o, inst);
  std::string doc;
  try {
    const Embedding e = inst.from_input_order(parse_embedding(read_text_file(o.embedding)));
    doc = render_svg(inst.set, e, p, o.force);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InvalidEmbedding) throw;
    err << "pdce: " << e.what() << '\n';
    return kNo;
  }
  if (o.svg.empty())
    out << doc;
  else
    write_text_file(o.svg, doc);
  return kOk;
}

}  // namespace

std::string counterexample_fixture(const DirPath& p, const ConvexPointSet& s) {
  std::size_t candidates = 0;
  for_each_planar_embedding(s, [&](const Embedding&) { ++candidates; });
  std::ostringstream doc;
  doc << "{\n  \"path\": " << nlohmann::json(p.to_string()).dump() << ",\n  \"points\": [";
  for (std::size_t k = 0; k < s.size(); ++k) doc << (k ? ", " : "") << '[' << s[k].x << ", " << s[k].y << ']';
  doc << "],\n  \"planar_candidates\": " << candidates << ",\n  \"pdce_count\": " << brute_force_pdce(p, s).size()
      << ",\n  \"certificate_sha256\": \"" << certificate_sha256(p, s) << "\"\n}\n";
  return doc.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Planar direction-consistent embeddings of labelled paths on convex point sets", "pdce"};
  app.require_subcommand(1);

  auto instance_flags = [&](CLI::App* sub, bool need_path) {
    sub->add_option("--points", o.points, "Point file: \"x y\" per line, or JSON {\"points\": [[x, y], ...]}")
        ->required();
    auto* path = sub->add_option("--path", o.path, "Path labels over U, D, L, R (empty for one vertex)");
    if (need_path) path->required();
  };

  auto* embed = app.add_subcommand("embed", "Construct a PDCE (three-directional paths, monotone-chain sets)");
  instance_flags(embed, true);
  embed->add_option("--svg", o.svg, "Also write an SVG drawing");

  auto* decide = app.add_subcommand("decide", "Decide PDCE existence; prints a witness or NO");
  instance_flags(decide, true);
  decide->add_option("--svg", o.svg, "Also write an SVG drawing of the witness");

  auto* verify = app.add_subcommand("verify", "Check an embedding file; prints a JSON report");
  instance_flags(verify, true);
  verify->add_option("--embedding", o.embedding, "One point index per line, file order")->required();

  auto* oracle = app.add_subcommand("oracle", "Exhaustive count, PDCE listing or counterexample search");
  oracle->add_option("mode", o.oracle_mode, "count | all-pdce | search")
      ->required()
      ->check(CLI::IsMember({"count", "all-pdce", "search"}));
  oracle->add_option("--points", o.points, "Point file (count, all-pdce)");
  oracle->add_option("--path", o.path, "Path labels (all-pdce, search; search defaults to LULRDR)");
  oracle->add_option("--budget", o.budget, "Samples drawn by search");
  oracle->add_option("--seed", o.seed, "Search seed");
  oracle->add_option("--family", o.family, "Sampled family for search");
  oracle->add_option("--out", o.out, "Write the search fixture here");

  auto* gen = app.add_subcommand("gen", "Random convex point sets");
  gen->add_option("--n", o.n, "Number of points")->required()->check(CLI::PositiveNumber);
  gen->add_option("--mode", o.mode, "general | left_sided | right_sided | quarter_inc | quarter_dec | strip");
  gen->add_option("--seed", o.seed, "Seed of the first set");
  gen->add_option("--count", o.count, "Number of sets (seeds seed, seed+1, ...)")->check(CLI::PositiveNumber);
  gen->add_option("--out", o.out, "Output file for a single set");
  gen->add_option("--out-dir", o.out_dir, "Output directory for several sets");
  gen->add_flag("--json", o.json, "Write JSON instead of text");

  auto* render = app.add_subcommand("render", "Draw an embedding as SVG");
  instance_flags(render, true);
  render->add_option("--embedding", o.embedding, "One point index per line, file order")->required();
  render->add_option("--svg", o.svg, "Output file (stdout when omitted)");
  render->add_flag("--force", o.force, "Draw even if the embedding is not a PDCE");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "pdce: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (embed->parsed()) return cmd_embed(o, out);
    if (decide->parsed()) return cmd_decide(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (oracle->parsed()) {
      if (o.oracle_mode != "search" && o.points.empty()) throw Error(ErrorCode::ParseError, "--points is required");
      if (o.oracle_mode == "all-pdce" && !oracle->count("--path")) throw Error(ErrorCode::ParseError, "--path is required");
      return cmd_oracle(o, out);
    }
    if (gen->parsed()) return cmd_gen(o, out);
    if (render->parsed()) return cmd_render(o, out, err);
  } catch (const std::exception& e) {
    std::string line = e.what();
    std::replace(line.begin(), line.end(), '\n', ' ');
    err << "pdce: " << line << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace pdce::cli
