// sawtool: counting, sampling, chain diagnostics and rendering from the shell.
//
// Exit codes: 0 ok, 1 usage or invalid input, 2 memory cap, 3 sampling budget.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "saw/saw.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace saw;

namespace {

Walk read_walk(const std::string& text) {
  if (!text.empty() && text.front() == '(') return parse_walk(text);
  return make_walk({0, 0}, text);
}

json point_json(Point p) { return json::array({p.x, p.y}); }

void write_file(const fs::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << body;
  if (!out) throw error("cannot write " + path.string());
}

std::string numbered(const std::string& stem, std::size_t i, const std::string& ext) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "_%04zu", i);
  return stem + buf + ext;
}

// Writes the manifest: the argument vector (minus --out) and the files made.
void write_manifest(const fs::path& dir, const std::vector<std::string>& args, const std::vector<std::string>& files) {
  json m;
  m["tool"] = "sawtool";
  m["manifest_version"] = 1;
  json a = json::array();
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--out") {
      ++i;
      continue;
    }
    a.push_back(args[i]);
  }
  m["argv"] = a;
  m["outputs"] = files;
  write_file(dir / "manifest.json", m.dump(2) + "\n");
}

void regime_guard(std::uint64_t n, std::uint64_t k, int l, double alpha, double c) {
  if (n < 2 || k == 0) return;
  const double delta = 1.0 - std::log(static_cast<double>(k) / c) / std::log(static_cast<double>(n));
  if (l * delta <= 1 + 2 * alpha)
    std::cerr << "warning: l*delta = " << l * delta << " <= 1 + 2*alpha = " << 1 + 2 * alpha
              << " (delta from k = C n^(1-delta)); rejection may need many attempts\n";
}

struct Common {
  std::uint64_t mem_cap_mb = 2048;
  TableOptions table() const { return {mem_cap_mb << 20, false}; }
};

int run(const std::vector<std::string>& args);

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args);
}

namespace {

int run(const std::vector<std::string>& args) {
  CLI::App app{"Exact sampling of nearly shortest self-avoiding walks", "sawtool"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--mem-cap-mb", common.mem_cap_mb, "Memory cap for count tables (MiB)");

  // count
  auto* count = app.add_subcommand("count", "Exact counts");
  count->require_subcommand(1);
  std::uint64_t n1 = 0, n2 = 0, t = 0, k = 0;
  int l = 2;
  std::string region_spec = "full";
  auto* cwalks = count->add_subcommand("walks", "Walks of length n1+n2+2t from (0,0) to (n1,n2)");
  cwalks->add_option("--n1", n1)->required();
  cwalks->add_option("--n2", n2)->required();
  cwalks->add_option("--t", t)->required();
  auto* clow = count->add_subcommand("low-girth", "Walks with no cycle of length <= 2l, one line per length");
  clow->add_option("--n1", n1)->required();
  clow->add_option("--n2", n2)->required();
  clow->add_option("--k", k)->required();
  clow->add_option("--l", l)->required();
  clow->add_option("--region", region_spec, "full | aztec:<k> | box:x0,y0,x1,y1");

  // paths
  auto* paths = app.add_subcommand("paths", "Base paths and bumping");
  paths->require_subcommand(1);
  std::string walk_text, at_text;
  auto* pbase = paths->add_subcommand("base", "Base path of a self-avoiding walk");
  pbase->add_option("--walk", walk_text, "\"(x,y)UDLR\" or a bare move string from (0,0)")->required();
  auto* pbump = paths->add_subcommand("bump", "Bump the given moves (1-based)");
  pbump->add_option("--walk", walk_text)->required();
  pbump->add_option("--at", at_text, "comma separated 1-based move indices")->required();

  // sample
  auto* sample = app.add_subcommand("sample", "Uniform samples");
  sample->require_subcommand(1);
  std::uint64_t seed = 0, samples = 1, max_attempts = kDefaultMaxAttempts;
  std::int64_t length = -1;
  std::string format = "udlr", out_dir;
  double alpha = 0, regime_c = 1;
  auto* ssaw = sample->add_subcommand("saw", "Self-avoiding walks from (0,0) to (n1,n2)");
  ssaw->add_option("--n1", n1)->required();
  ssaw->add_option("--n2", n2)->required();
  ssaw->add_option("--k", k)->required();
  ssaw->add_option("--l", l)->required();
  ssaw->add_option("--seed", seed)->required();
  ssaw->add_option("--count", samples);
  ssaw->add_option("--length", length, "walk length (default n1+n2+2k)");
  ssaw->add_option("--max-attempts", max_attempts);
  ssaw->add_option("--format", format)->check(CLI::IsMember({"udlr", "json", "svg"}));
  ssaw->add_option("--out", out_dir, "output directory (required for svg)");
  ssaw->add_option("--alpha", alpha, "regime guard: alpha");
  ssaw->add_option("--regime-C", regime_c, "regime guard: C in k = C n^(1-delta)");

  // aztec
  auto* aztec = app.add_subcommand("aztec", "Aztec diamond partitions");
  aztec->require_subcommand(1);
  int ak = 2;
  double big_c = 1, eps = 0.5;
  std::int64_t budget = -1;
  std::string cache_dir = std::getenv("SAW_CACHE_DIR") ? std::getenv("SAW_CACHE_DIR") : "";
  auto* asample = aztec->add_subcommand("sample", "Uniform partitions in Omega");
  asample->add_option("--k", ak)->required();
  asample->add_option("--C", big_c);
  asample->add_option("--eps", eps);
  asample->add_option("--budget", budget, "explicit boundary budget (overrides 6k + C k^(1-eps))");
  asample->add_option("--l", l);
  asample->add_option("--seed", seed)->required();
  asample->add_option("--count", samples);
  asample->add_option("--format", format)->check(CLI::IsMember({"json", "svg"}));
  asample->add_option("--out", out_dir);
  asample->add_option("--cache-dir", cache_dir, "table cache directory (env SAW_CACHE_DIR)");
  asample->add_option("--max-attempts", max_attempts);

  // glauber
  auto* glauber = app.add_subcommand("glauber", "Single-flip chain on Omega");
  glauber->require_subcommand(1);
  std::uint64_t steps = 0, record_every = 1;
  std::string trace_path;
  auto* grun = glauber->add_subcommand("run", "Run the chain from the staircase cut");
  grun->add_option("--k", ak)->required();
  grun->add_option("--C", big_c);
  grun->add_option("--eps", eps);
  grun->add_option("--budget", budget);
  grun->add_option("--steps", steps)->required();
  grun->add_option("--seed", seed)->required();
  grun->add_option("--trace", trace_path, "JSON-lines trace file");
  grun->add_option("--record-every", record_every);
  auto* gcond = glauber->add_subcommand("conductance", "Exact conductance of the ordered-endpoint cut");
  gcond->add_option("--k", ak)->required();
  gcond->add_option("--C", big_c);
  gcond->add_option("--eps", eps);
  gcond->add_option("--budget", budget);

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Brute-force enumeration");
  oracle->require_subcommand(1);
  std::string kind;
  std::uint64_t olen = 0;
  auto* oenum = oracle->add_subcommand("enumerate", "Enumerate as JSON lines");
  oenum->add_option("--kind", kind)->required()->check(CLI::IsMember({"saw", "lowgirth", "walks", "partitions"}));
  oenum->add_option("--n1", n1);
  oenum->add_option("--n2", n2);
  oenum->add_option("--length", olen);
  oenum->add_option("--l", l);
  oenum->add_option("--k", ak);
  oenum->add_option("--C", big_c);
  oenum->add_option("--eps", eps);
  oenum->add_option("--budget", budget);

  // render
  auto* render = app.add_subcommand("render", "SVG of a walk");
  std::string svg_out;
  bool grid = false;
  render->add_option("--walk", walk_text)->required();
  render->add_option("--out", svg_out, "file (default stdout)");
  render->add_flag("--grid", grid);

  // verify / replay
  auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
  std::string manifest_path;
  auto* replay = app.add_subcommand("replay", "Re-run a manifest");
  replay->add_option("--manifest", manifest_path)->required();
  replay->add_option("--out", out_dir)->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e) == 0 ? 0 : 1;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e) == 0 ? 0 : 1;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return 1;
  }

  auto omega_params = [&]() {
    OmegaParams p{big_c, eps, std::nullopt};
    if (budget >= 0) p.explicit_budget = static_cast<std::uint64_t>(budget);
    return p;
  };

  try {
    if (*cwalks) {
      std::cout << to_decimal(walk_count(n1, n2, t)) << "\n";
      return 0;
    }
    if (*clow) {
      Region region = Region::full();
      if (region_spec.rfind("aztec:", 0) == 0) {
        region = aztec_region(std::stoi(region_spec.substr(6)));
      } else if (region_spec.rfind("box:", 0) == 0) {
        coord_t v[4];
        if (std::sscanf(region_spec.c_str() + 4, "%ld,%ld,%ld,%ld", &v[0], &v[1], &v[2], &v[3]) != 4)
          throw invalid_argument("box region must be box:x0,y0,x1,y1");
        region = Region::box(LatticeBox{{v[0], v[1]}, {v[2], v[3]}});
      } else if (region_spec != "full") {
        throw invalid_argument("unknown region '" + region_spec + "'");
      }
      const Point o{0, 0}, p{static_cast<coord_t>(n1), static_cast<coord_t>(n2)};
      const auto table = build_table(region, o, p, l, k, common.table());
      for (std::uint64_t j = 0; j <= k; ++j)
        std::cout << n1 + n2 + 2 * j << " " << to_decimal(low_girth_walk_count(table, n1 + n2 + 2 * j)) << "\n";
      return 0;
    }
    if (*pbase) {
      std::cout << to_string(base_path_any(read_walk(walk_text))) << "\n";
      return 0;
    }
    if (*pbump) {
      IndexSet m;
      std::stringstream ss(at_text);
      for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) m.push_back(static_cast<std::size_t>(std::stoull(item)));
      std::sort(m.begin(), m.end());
      std::cout << to_string(bump(read_walk(walk_text), m)) << "\n";
      return 0;
    }
    if (*ssaw) {
      if (format == "svg" && out_dir.empty()) throw invalid_argument("--format svg needs --out");
      const std::uint64_t n = n1 + n2;
      regime_guard(n, k, l, alpha, regime_c);
      const std::uint64_t len = length < 0 ? n + 2 * k : static_cast<std::uint64_t>(length);
      if (len < n || (len - n) % 2 != 0 || len > n + 2 * k) throw invalid_argument("--length must be n1+n2+2j with j <= k");
      const auto table = build_table(Region::full(), {0, 0}, {static_cast<coord_t>(n1), static_cast<coord_t>(n2)}, l, k,
                                     common.table());
      if (!out_dir.empty()) fs::create_directories(out_dir);
      std::vector<std::string> files;
      std::ostringstream text;
      for (std::uint64_t i = 0; i < samples; ++i) {
        RngStream rng(seed, i);
        const SampleReport rep = sample_saw(table, rng, len, max_attempts);
        if (format == "svg") {
          const auto name = numbered("walk", i, ".svg");
          write_file(fs::path(out_dir) / name, render_walk_svg(rep.walk));
          files.push_back(name);
        } else if (format == "json") {
          json j;
          j["start"] = point_json(rep.walk.start);
          j["moves"] = moves_to_string(rep.walk.moves);
          j["length"] = rep.length;
          j["attempts"] = rep.attempts;
          text << j.dump() << "\n";
        } else {
          text << to_string(rep.walk) << "\n";
        }
      }
      if (out_dir.empty()) {
        std::cout << text.str();
      } else {
        if (format != "svg") {
          const std::string name = format == "json" ? "samples.jsonl" : "samples.txt";
          write_file(fs::path(out_dir) / name, text.str());
          files.push_back(name);
        }
        write_manifest(out_dir, args, files);
      }
      return 0;
    }
    if (*asample) {
      if (format == "svg" && out_dir.empty()) throw invalid_argument("--format svg needs --out");
      PartitionSamplerOptions opt;
      opt.cache_dir = cache_dir;
      opt.table = common.table();
      if (asample->count("--max-attempts")) opt.max_attempts = max_attempts;
      PartitionSampler sampler(ak, omega_params(), l, opt);
      if (!out_dir.empty()) fs::create_directories(out_dir);
      std::vector<std::string> files;
      std::ostringstream text;
      const auto& g = aztec_geometry(ak);
      for (std::uint64_t i = 0; i < samples; ++i) {
        RngStream rng(seed, i);
        const PartitionSample s = sampler.sample(rng);
        if (format == "svg") {
          const auto name = numbered("partition", i, ".svg");
          write_file(fs::path(out_dir) / name, render_partition_svg(s.partition));
          files.push_back(name);
        } else {
          json j;
          j["k"] = ak;
          json cls = json::array();
          for (std::size_t c = 0; c < g.dual_count(); ++c)
            if (s.partition.label[c] == 1) cls.push_back(point_json(g.dual()[c]));
          j["class1"] = cls;
          j["path"] = to_string(s.path);
          j["boundary1"] = s.partition.boundary1;
          j["boundary2"] = s.partition.boundary2;
          j["attempts"] = s.attempts;
          text << j.dump() << "\n";
        }
      }
      if (out_dir.empty()) {
        std::cout << text.str();
      } else {
        if (format == "json") {
          write_file(fs::path(out_dir) / "partitions.jsonl", text.str());
          files.push_back("partitions.jsonl");
        }
        write_manifest(out_dir, args, files);
      }
      return 0;
    }
    if (*grun) {
      const auto params = omega_params();
      const Partition start = staircase_start(ak);
      const ChainTrace trace = run_chain(start, params, steps, RngStream(seed, 0), trace_path.empty() ? 0 : record_every);
      if (!trace_path.empty()) {
        std::ofstream out(trace_path, std::ios::binary | std::ios::trunc);
        for (const auto& row : trace.rows) {
          json j;
          j["step"] = row.step;
          j["from"] = row.from ? point_json(*row.from) : json(nullptr);
          j["to"] = row.to ? point_json(*row.to) : json(nullptr);
          j["in_s"] = row.in_s;
          j["boundary1"] = row.boundary1;
          j["boundary2"] = row.boundary2;
          out << j.dump() << "\n";
        }
        if (!out) throw error("cannot write " + trace_path);
      }
      json summary;
      summary["k"] = ak;
      summary["budget"] = params.budget(ak);
      summary["steps"] = steps;
      summary["accepted"] = trace.accepted;
      summary["crossings"] = trace.crossings;
      std::cout << summary.dump() << "\n";
      return 0;
    }
    if (*gcond) {
      const auto params = omega_params();
      const OmegaGraph graph = build_omega_graph(ak, params);
      const CutReport r = conductance_of_cut(graph, endpoints_ordered);
      json j;
      j["k"] = ak;
      j["budget"] = params.budget(ak);
      j["omega"] = r.omega_size;
      j["cut"] = r.cut_size;
      j["complemented"] = r.complemented;
      j["pi"] = r.pi.get_str();
      j["flow"] = r.flow.get_str();
      j["ratio"] = r.ratio.get_str();
      j["mixing_lower_bound"] = r.mixing_lower_bound ? json(r.mixing_lower_bound->get_str()) : json(nullptr);
      std::cout << j.dump() << "\n";
      return 0;
    }
    if (*oenum) {
      const Point o{0, 0}, p{static_cast<coord_t>(n1), static_cast<coord_t>(n2)};
      if (kind == "partitions") {
        const auto& g = aztec_geometry(ak);
        for (const auto& part : enumerate_partitions(ak, omega_params()).items) {
          json j;
          json cls = json::array();
          for (std::size_t c = 0; c < g.dual_count(); ++c)
            if (part.label[c] == 1) cls.push_back(point_json(g.dual()[c]));
          j["k"] = ak;
          j["class1"] = cls;
          j["boundary1"] = part.boundary1;
          j["boundary2"] = part.boundary2;
          std::cout << j.dump() << "\n";
        }
        return 0;
      }
      EnumerationResult<Walk> res;
      if (kind == "saw") res = enumerate_saws(Region::full(), o, p, olen);
      if (kind == "lowgirth") res = enumerate_low_girth_walks(Region::full(), o, p, olen, l);
      if (kind == "walks") res = enumerate_walks(o, p, olen);
      for (const auto& w : res.items) {
        json j;
        j["start"] = point_json(w.start);
        j["moves"] = moves_to_string(w.moves);
        std::cout << j.dump() << "\n";
      }
      return 0;
    }
    if (*render) {
      SvgStyle style;
      style.grid = grid;
      const std::string svg = render_walk_svg(read_walk(walk_text), style);
      if (svg_out.empty()) {
        std::cout << svg;
      } else {
        write_file(svg_out, svg);
      }
      return 0;
    }
    if (*verify) {
#ifdef SAW_ACCEPTANCE_PATH
      const std::string cmd = SAW_ACCEPTANCE_PATH;
#else
      const std::string cmd = "acceptance";
#endif
      const int rc = std::system(cmd.c_str());
      return rc == 0 ? 0 : 1;
    }
    if (*replay) {
      std::ifstream in(manifest_path);
      if (!in) throw invalid_argument("cannot read manifest " + manifest_path);
      const json m = json::parse(in);
      std::vector<std::string> again = m.at("argv").get<std::vector<std::string>>();
      again.push_back("--out");
      again.push_back(out_dir);
      return run(again);
    }
  } catch (const resource_error& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 2;
  } catch (const sampling_budget_exhausted& e) {
    std::cerr << "sampling budget exhausted: " << e.what() << "\n";
    return 3;
  } catch (const json::exception& e) {
    std::cerr << "error: malformed manifest: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace
