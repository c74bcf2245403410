#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <memory>
#include <sstream>
#include <thread>

#include "cache.hpp"
#include "plethysm/errors.hpp"
#include "plethysm/json_io.hpp"
#include "plethysm/order.hpp"
#include "plethysm/specht.hpp"
#include "plethysm/symfunc.hpp"
#include "plethysm/tabloid.hpp"

namespace plethysm::cli {

namespace {

struct Globals {
  int max_degree = 24;
  int max_tabloid_degree = 12;
  bool no_cache = false;
  bool force = false;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
};

// Splits positional words on "/" into partitions; "2/3" and "2 / 3" agree.
std::vector<Partition> partition_groups(const std::vector<std::string>& words, std::size_t expected) {
  std::vector<std::string> groups{""};
  std::vector<int> tokens{0};
  for (const std::string& w : words) {
    std::size_t start = 0;
    for (;;) {
      std::size_t slash = w.find('/', start);
      std::string piece = w.substr(start, slash == std::string::npos ? std::string::npos : slash - start);
      if (!piece.empty()) {
        groups.back() += piece;
        ++tokens.back();
      }
      if (slash == std::string::npos) break;
      groups.emplace_back();
      tokens.push_back(0);
      start = slash + 1;
    }
  }
  if (groups.size() != expected)
    throw UsageError("expected " + std::to_string(expected) + " partitions separated by '/'");
  std::vector<Partition> out;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (tokens[i] != 1) throw UsageError("each partition must be one comma-separated word (use -- for empty)");
    out.push_back(parse_partition(groups[i]));
  }
  return out;
}

class Session {
 public:
  Session(const Globals& g) : globals_(g), engine_(ExpandOptions{g.threads, g.max_degree}) {
    if (g.no_cache) return;
    if (auto dir = DiskCache::default_directory()) {
      cache_ = std::make_unique<DiskCache>(*dir);
      attach(engine_, *cache_);
    }
  }

  PlethysmEngine& engine() { return engine_; }
  const Globals& globals() const { return globals_; }

 private:
  Globals globals_;
  PlethysmEngine engine_;
  std::unique_ptr<DiskCache> cache_;
};

int cmd_plethysm(Session& s, const std::vector<std::string>& words, bool power_sum, bool oracle_check,
                 std::ostream& out, std::ostream& err) {
  auto p = partition_groups(words, 2);
  const Partition &nu = p[0], &mu = p[1];
  if (nu.size() * mu.size() > s.globals().max_degree)
    throw ResourceError("degree " + std::to_string(nu.size() * mu.size()) + " is above --max-degree " +
                        std::to_string(s.globals().max_degree));
  SymExpr schur = s.engine().schur_of_plethysm(nu, mu);
  if (oracle_check) {
    SymExpr oracle = oracle_schur_expand(nu, mu);
    if (!(oracle == schur)) {
      err << "oracle mismatch for h_" << nu << "[h_" << mu << "]\n";
      return kCrossCheck;
    }
  }
  out << dump(to_json(power_sum ? plethysm_h(nu, mu) : schur));
  return kOk;
}

int cmd_relation(Session& s, const std::vector<std::string>& words, std::ostream& out) {
  auto p = partition_groups(words, 2);
  RelationVerdict v = is_le(s.engine(), p[0], p[1]);
  out << dump(to_json(v));
  return v.holds ? kOk : kRelationFails;
}

int cmd_poset(Session& s, int max_size, const std::string& format, bool include_columns, std::ostream& out) {
  if (max_size < 0) throw UsageError("--max-size must be nonnegative");
  if (max_size > 6 && !s.globals().force)
    throw ResourceError("--max-size above 6 needs --force");
  HasseDiagram d = hasse_diagram(s.engine(), poset_nodes(max_size, include_columns));
  if (format == "dot")
    out << to_dot(d);
  else
    out << dump(to_json(d));
  return kOk;
}

int cmd_fhmap(Session& s, const std::vector<std::string>& words, bool rank_only, const std::string& dump_path,
              bool cross_check, std::ostream& out, std::ostream& err) {
  auto p = partition_groups(words, 2);
  TabloidCaps caps;
  caps.max_degree = s.globals().max_tabloid_degree;
  caps.threads = s.globals().threads;
  SparseRationalMatrix m = fh_map_matrix(p[0], p[1], caps);
  std::size_t r = rank(m);
  if (cross_check && rank(m, PivotOrder::LastRow) != r) {
    err << "rank disagrees between pivot orders\n";
    return kCrossCheck;
  }
  if (!dump_path.empty()) {
    std::ofstream f(dump_path);
    if (!f) throw UsageError("cannot write " + dump_path);
    f << m.to_coordinate_list();
  }
  bool injective = r == static_cast<std::size_t>(m.cols());
  Json j;
  if (rank_only) {
    j = Json{{"rank", r}, {"injective", injective}};
  } else {
    j = Json{{"nu", to_json(p[0])}, {"mu", to_json(p[1])}, {"rows", m.rows()},      {"cols", m.cols()},
             {"nnz", m.nnz()},      {"rank", r},            {"injective", injective}};
  }
  out << dump(j);
  return kOk;
}

int cmd_ssh_rank(Session& s, const std::vector<std::string>& words, bool cross_check, std::ostream& out,
                 std::ostream& err) {
  auto p = partition_groups(words, 3);
  SshOptions options;
  options.max_degree = s.globals().max_tabloid_degree;
  options.threads = s.globals().threads;
  std::size_t r = ssh_rank(p[0], p[1], p[2], options);
  if (cross_check) {
    Rational expected = s.engine().schur_of_plethysm(p[1], p[2]).coefficient(p[0]);
    if (expected != Rational(static_cast<unsigned long>(r))) {
      err << "ssh rank " << r << " differs from plethysm coefficient " << expected.get_str() << "\n";
      out << r << "\n";
      return kCrossCheck;
    }
  }
  out << r << "\n";
  return kOk;
}

int cmd_stability(Session& s, const std::vector<std::string>& words, const std::string& mode, std::ostream& out) {
  auto p = partition_groups(words, 3);
  LiftMode m;
  if (mode == "h")
    m = LiftMode::HStrip;
  else if (mode == "2col")
    m = LiftMode::TwoColumn;
  else
    throw UsageError("--mode must be h or 2col");
  StabilityOptions options;
  options.max_tabloid_degree = s.globals().max_tabloid_degree;
  options.threads = s.globals().threads;
  auto reports = verify_stability(s.engine(), p[0], p[1], p[2], m, options);
  bool holds = true;
  Json list = Json::array();
  for (const auto& r : reports) {
    holds = holds && r.inequality_holds;
    list.push_back(to_json(r));
  }
  Json j{{"nu", to_json(p[0])}, {"mu", to_json(p[1])}, {"mu_tilde", to_json(p[2])},
         {"mode", mode},        {"holds", holds},      {"reports", list}};
  out << dump(j);
  return holds ? kOk : kRelationFails;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  // A lone "--" names the empty partition rather than ending option parsing.
  for (std::string& a : args)
    if (a == "--") a = "()";

  CLI::App app{"Plethysm coefficients, the plethysm order, and Foulkes-Howe maps"};
  app.name("plethysm");
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--max-degree", g.max_degree, "Largest |nu||mu| expanded symbolically")->capture_default_str();
  app.add_option("--max-tabloid-degree", g.max_tabloid_degree, "Largest degree for explicit tabloid modules")
      ->capture_default_str();
  app.add_flag("--no-cache", g.no_cache, "Do not read or write the result cache");
  app.add_flag("--force", g.force, "Allow runs above the default size guards");
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::PositiveNumber);

  std::vector<std::string> words;
  bool schur = false, power_sum = false, oracle_check = false;
  auto* pleth = app.add_subcommand("plethysm", "Expand h_nu[h_mu]: plethysm NU / MU");
  pleth->add_option("partitions", words)->required();
  auto* schur_flag = pleth->add_flag("--schur", schur, "Schur basis (default)");
  pleth->add_flag("--power-sum", power_sum, "Power-sum basis")->excludes(schur_flag);
  pleth->add_flag("--oracle-check", oracle_check, "Compare with the monomial oracle");

  auto* rel = app.add_subcommand("relation", "Test nu ⊴ mu: relation NU / MU");
  rel->add_option("partitions", words)->required();

  int max_size = 3;
  std::string format = "dot";
  bool include_columns = false;
  auto* poset = app.add_subcommand("poset", "Hasse diagram of the relation on small partitions");
  poset->add_option("--max-size", max_size, "Largest partition size")->capture_default_str();
  poset->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}))->capture_default_str();
  poset->add_flag("--include-columns", include_columns, "Also include the column partitions (1^k)");

  bool rank_only = false, cross_check = false;
  std::string dump_path;
  auto* fh = app.add_subcommand("fhmap", "Generalized Foulkes-Howe map M^{nu[mu]} -> M^{mu[nu]}: fhmap NU / MU");
  fh->add_option("partitions", words)->required();
  fh->add_flag("--rank-only", rank_only, "Print only rank and injectivity");
  fh->add_option("--dump", dump_path, "Write the matrix as a coordinate list");
  fh->add_flag("--cross-check", cross_check, "Recompute the rank with the other pivot order");

  auto* ssh = app.add_subcommand("ssh-rank", "Rank of semistandard homomorphism images: ssh-rank LAMBDA / NU / MU");
  ssh->add_option("partitions", words)->required();
  ssh->add_flag("--cross-check", cross_check, "Compare with the plethysm coefficient");

  std::string mode = "h";
  auto* stab = app.add_subcommand("stability", "Stability inequalities: stability NU / MU / MU~");
  stab->add_option("partitions", words)->required();
  stab->add_option("--mode", mode, "h or 2col")->check(CLI::IsMember({"h", "2col"}))->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    Session session(g);
    if (*pleth) return cmd_plethysm(session, words, power_sum, oracle_check, out, err);
    if (*rel) return cmd_relation(session, words, out);
    if (*poset) return cmd_poset(session, max_size, format, include_columns, out);
    if (*fh) return cmd_fhmap(session, words, rank_only, dump_path, cross_check, out, err);
    if (*ssh) return cmd_ssh_rank(session, words, cross_check, out, err);
    if (*stab) return cmd_stability(session, words, mode, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const CrossCheckError& e) {
    err << "cross-check failed: " << e.what() << "\n";
    return kCrossCheck;
  }
  return kUsage;
}

}  // namespace plethysm::cli
