#include "stepalg/jobs.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "stepalg/projector.hpp"
#include "stepalg/route_calculus.hpp"
#include "stepalg/serialize.hpp"

namespace stepalg {

namespace {

std::string levi_csv(const std::vector<int>& levi) {
  std::ostringstream os;
  for (std::size_t i = 0; i < levi.size(); ++i) {
    if (i) os << ',';
    os << levi[i];
  }
  return os.str();
}

std::shared_ptr<const AlgebraContext> make_context(const JobSpec& spec) {
  return AlgebraContext::make(
      levi_pair(build_root_system(spec.series, spec.rank), spec.levi));
}

std::string model_heading(const ComplementModel& m) {
  std::ostringstream os;
  os << "class " << m.class_index() << " side " << to_string(m.side());
  return os.str();
}

}  // namespace

std::string JobSpec::canonical_key() const {
  std::ostringstream os;
  os << "command=" << command << ";series=" << series << ";rank=" << rank
     << ";levi=" << levi_csv(levi) << ";side=" << side << ";class="
     << (class_index < 0 ? std::string("all") : std::to_string(class_index))
     << ";format=" << format << ";oracle=" << (oracle ? 1 : 0)
     << ";count=" << count << ";seed=" << seed;
  return os.str();
}

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<ComplementModel> selected_models(
    const std::shared_ptr<const AlgebraContext>& ctx, const JobSpec& spec) {
  const int nc = static_cast<int>(ctx->levi().classes().size());
  if (spec.class_index >= nc)
    throw std::invalid_argument("class index out of range (have " +
                                std::to_string(nc) + " classes)");
  std::vector<ComplementModel> out;
  for (int c = 0; c < nc; ++c) {
    if (spec.class_index >= 0 && c != spec.class_index) continue;
    for (Side s : {Side::minus, Side::plus}) {
      if (spec.side == "minus" && s != Side::minus) continue;
      if (spec.side == "plus" && s != Side::plus) continue;
      out.emplace_back(ctx, c, s);
    }
  }
  return out;
}

std::string render_describe(const JobSpec& spec) {
  const LeviPair lp =
      levi_pair(build_root_system(spec.series, spec.rank), spec.levi);
  if (spec.format == "json") return describe_json(lp).dump(2) + "\n";
  if (spec.format != "text")
    throw std::invalid_argument("describe supports formats text and json");
  const RootSystem& rs = lp.ambient();
  std::ostringstream os;
  os << "ambient algebra: sl(" << rs.rank() + 1 << ")  (series "
     << rs.series() << rs.rank() << ")\n";
  os << "subalgebra simple roots:";
  for (int i : lp.levi_indices()) os << " alpha_" << i + 1;
  os << "\nsubalgebra positive roots: " << lp.g_positive_roots().size()
     << ", complement positive roots: " << lp.complement_positive_roots().size()
     << "\n";
  os << "cartan: dimension " << rs.rank() << ", center dimension "
     << rs.rank() - static_cast<int>(lp.levi_indices().size()) << "\n";
  for (std::size_t k = 0; k < lp.classes().size(); ++k) {
    os << "class " << k << ":";
    for (const Weight& w : lp.classes()[k].roots) os << ' ' << w;
    os << '\n';
  }
  return os.str();
}

std::string render_hasse(const JobSpec& spec) {
  auto ctx = make_context(spec);
  const std::vector<ComplementModel> models = selected_models(ctx, spec);
  std::ostringstream os;
  if (spec.format == "graph") {
    for (const ComplementModel& m : models)
      os << "// " << model_heading(m) << '\n'
         << to_dot(m.diagram(), ctx->roots());
    return os.str();
  }
  if (spec.format == "json") {
    ordered_json j;
    ordered_json classes = ordered_json::array();
    for (const ComplementModel& m : models) classes.push_back(model_json(m));
    j["classes"] = std::move(classes);
    return j.dump(2) + "\n";
  }
  if (spec.format != "text")
    throw std::invalid_argument("hasse supports formats text, json and graph");
  for (const ComplementModel& m : models) {
    os << model_heading(m) << '\n';
    const HasseDiagram& d = m.diagram();
    for (int i = 0; i < d.size(); ++i)
      os << "  node " << i << ": " << d.label(i) << "  weight " << d.weight(i)
         << '\n';
    for (const HasseArrow& a : d.arrows())
      os << "  arrow " << a.to << " <- " << a.from << "  alpha_"
         << a.alpha_index + 1 << "  entry " << a.entry << '\n';
  }
  return os.str();
}

std::string render_generators(const JobSpec& spec) {
  auto ctx = make_context(spec);
  const std::vector<ComplementModel> models = selected_models(ctx, spec);
  std::vector<std::vector<MickelssonGenerator>> gens;
  gens.reserve(models.size());
  for (const ComplementModel& m : models) {
    std::vector<MickelssonGenerator> g;
    for (int node = 0; node < m.node_count(); ++node)
      g.push_back(canonical_element(m, node));
    gens.push_back(std::move(g));
  }
  if (spec.format == "json")
    return document_json(ctx->levi(), models, gens, ordered_json(nullptr)).dump(2) +
           "\n";
  std::ostringstream os;
  if (spec.format == "latex") {
    for (std::size_t k = 0; k < models.size(); ++k) {
      os << "% " << model_heading(models[k]) << '\n';
      for (const MickelssonGenerator& g : gens[k])
        os << generator_latex(models[k], g) << '\n';
    }
    return os.str();
  }
  if (spec.format != "text")
    throw std::invalid_argument("generators supports formats text, json and latex");
  for (std::size_t k = 0; k < models.size(); ++k) {
    os << "# " << model_heading(models[k]) << '\n';
    for (const MickelssonGenerator& g : gens[k])
      os << generator_text(models[k], g);
  }
  return os.str();
}

namespace {

struct CheckLog {
  bool ok = true;
  std::ostringstream lines;

  void pass(const std::string& what) { lines << "ok " << what << '\n'; }
  void fail(const std::string& what) {
    ok = false;
    lines << "FAIL " << what << '\n';
  }
};

// Chains for every simple pair and top node: partition of the route set,
// expected member counts, and cancellation in both modes.
void check_chains(const ComplementModel& m, CheckLog& log) {
  const HasseDiagram& d = m.diagram();
  const RootSystem& rs = m.context()->roots();
  int chains_checked = 0, pairs_checked = 0;
  for (int ai : m.context()->levi().levi_indices()) {
    for (const SimplePair& p : simple_pairs(d, ai)) {
      ++pairs_checked;
      for (int top = 0; top < d.size(); ++top) {
        std::vector<Route> all = enumerate_routes(d, top);
        std::vector<Chain> chains = classify_chains(d, p.l, p.r, top);
        std::vector<Route> covered;
        for (const Chain& c : chains) {
          const std::size_t expected =
              c.kind == 1 ? 1u : (c.kind == 2 ? 2u : 3u);
          if (c.members.size() != expected) {
            std::ostringstream os;
            os << "chain member count: " << model_heading(m) << " pair (" << p.l
               << ',' << p.r << ") top " << top << " kind " << c.kind << " has "
               << c.members.size() << " members";
            log.fail(os.str());
          }
          covered.insert(covered.end(), c.members.begin(), c.members.end());
          const bool classical = verify_chain_killed<CartanScalar>(d, rs, c);
          const bool quantum = verify_chain_killed<QScalar>(d, rs, c);
          if (!classical || !quantum) {
            std::ostringstream os;
            os << "chain cancellation (" << (classical ? "" : "classical ")
               << (quantum ? "" : "quantum ") << "): " << model_heading(m)
               << " pair (" << p.l << ',' << p.r << ") top " << top
               << " members";
            for (const Route& r : c.members) os << ' ' << r;
            log.fail(os.str());
          }
          ++chains_checked;
        }
        std::sort(covered.begin(), covered.end());
        std::sort(all.begin(), all.end());
        if (covered != all) {
          std::ostringstream os;
          os << "chain partition: " << model_heading(m) << " pair (" << p.l
             << ',' << p.r << ") top " << top
             << " does not cover the route set exactly";
          log.fail(os.str());
        }
      }
    }
  }
  std::ostringstream os;
  os << "chains: " << chains_checked << " chains over " << pairs_checked
     << " simple pairs cancel in both modes and partition the routes ("
     << model_heading(m) << ")";
  log.pass(os.str());
}

void check_model(const ComplementModel& m, bool with_oracle, CheckLog& log,
                 bool& invariance_all, bool& oracle_all) {
  const auto& ctx = m.context();
  std::vector<MickelssonGenerator> canon, levi;
  for (int node = 0; node < m.node_count(); ++node) {
    canon.push_back(canonical_element(m, node));
    levi.push_back(levi_generator(m, node));
  }

  // Invariance of both constructions under every raising generator.
  int checked = 0;
  for (const auto* family : {&canon, &levi}) {
    for (const MickelssonGenerator& g : *family) {
      if (auto w = verify_invariance(g.element)) {
        invariance_all = false;
        std::ostringstream os;
        os << "invariance: " << model_heading(m) << " node " << g.node
           << " alpha " << w->alpha << " remainder: " << w->remainder;
        log.fail(os.str());
      }
      ++checked;
    }
  }
  if (checked == 2 * m.node_count()) {
    std::ostringstream os;
    os << "invariance: " << checked << " generators annihilated by all raising "
       << "operators (" << model_heading(m) << ")";
    log.pass(os.str());
  }

  // Termwise agreement of the route construction with the closed formula.
  bool agree = true;
  for (int node = 0; node < m.node_count(); ++node) {
    const auto& a = canon[static_cast<std::size_t>(node)];
    const auto& b = levi[static_cast<std::size_t>(node)];
    if (a.routes.size() != b.routes.size()) agree = false;
    for (std::size_t t = 0; agree && t < a.routes.size(); ++t)
      if (a.routes[t].first != b.routes[t].first ||
          !(a.routes[t].second == b.routes[t].second))
        agree = false;
    if (!(a.element == b.element)) agree = false;
    if (!agree) {
      invariance_all = false;
      std::ostringstream os;
      os << "construction agreement: " << model_heading(m) << " node " << node;
      log.fail(os.str());
      break;
    }
  }
  if (agree) {
    std::ostringstream os;
    os << "construction agreement: route sums match the closed formula "
       << "termwise (" << model_heading(m) << ")";
    log.pass(os.str());
  }

  // Leading terms.
  if (!pbw_leading_check(m, canon)) {
    invariance_all = false;
    std::ostringstream os;
    os << "leading terms: " << model_heading(m);
    log.fail(os.str());
  } else {
    std::ostringstream os;
    os << "leading terms: each generator leads with its own dual vector ("
       << model_heading(m) << ")";
    log.pass(os.str());
  }

  check_chains(m, log);

  // Intertwiner identity for all raising roots and short routes.
  int instances = 0;
  bool intertwine_ok = true;
  for (int ai : ctx->levi().levi_indices())
    for (int top = 0; top < m.node_count(); ++top)
      for (const Route& r : enumerate_routes(m.diagram(), top)) {
        if (r.length() > 3) continue;
        if (!intertwine_check(m, ai, r)) {
          intertwine_ok = false;
          invariance_all = false;
          std::ostringstream os;
          os << "intertwiner: " << model_heading(m) << " alpha_" << ai + 1
             << " route " << r;
          log.fail(os.str());
        }
        ++instances;
      }
  if (intertwine_ok) {
    std::ostringstream os;
    os << "intertwiner: " << instances << " route instances ("
       << model_heading(m) << ")";
    log.pass(os.str());
  }

  if (with_oracle) {
    bool oracle_ok = true;
    for (int node = 0; node < m.node_count(); ++node) {
      const AlgebraElement projected = projector_apply(m.psi(node));
      const AlgebraElement& z = canon[static_cast<std::size_t>(node)].element;
      if (!(projected == z)) {
        oracle_ok = false;
        std::ostringstream os;
        os << "oracle: " << model_heading(m) << " node " << node
           << " projector value differs: " << projected;
        log.fail(os.str());
      } else if (!(projector_apply(z) == z)) {
        oracle_ok = false;
        std::ostringstream os;
        os << "oracle idempotence: " << model_heading(m) << " node " << node;
        log.fail(os.str());
      }
    }
    if (!oracle_ok) oracle_all = false;
    if (oracle_ok) {
      std::ostringstream os;
      os << "oracle: projector reproduces all " << m.node_count()
         << " generators and is idempotent on them (" << model_heading(m) << ")";
      log.pass(os.str());
    }
  }
}

}  // namespace

RunOutcome run_verify(const JobSpec& spec) {
  auto ctx = make_context(spec);
  if (spec.oracle && ctx->levi().levi_indices().size() > 2)
    throw std::invalid_argument(
        "--oracle requires a subalgebra of rank <= 2 (projector factor order)");
  const std::vector<ComplementModel> models = selected_models(ctx, spec);

  CheckLog log;
  bool invariance_all = true;
  bool oracle_all = true;
  for (const ComplementModel& m : models)
    check_model(m, spec.oracle, log, invariance_all, oracle_all);

  RunOutcome out;
  out.ok = log.ok;
  if (spec.format == "json") {
    std::vector<std::vector<MickelssonGenerator>> gens;
    for (const ComplementModel& m : models) {
      std::vector<MickelssonGenerator> g;
      for (int node = 0; node < m.node_count(); ++node)
        g.push_back(canonical_element(m, node));
      gens.push_back(std::move(g));
    }
    ordered_json verification;
    verification["invariance"] = invariance_all;
    verification["oracle"] = spec.oracle ? ordered_json(oracle_all) : ordered_json(nullptr);
    out.output =
        document_json(ctx->levi(), models, gens, std::move(verification)).dump(2) +
        "\n";
  } else if (spec.format == "text") {
    std::ostringstream os;
    os << log.lines.str();
    os << (log.ok ? "verified" : "verification FAILED") << ": series "
       << spec.series << spec.rank << " levi {" << levi_csv(spec.levi) << "}\n";
    out.output = os.str();
  } else {
    throw std::invalid_argument("verify supports formats text and json");
  }
  return out;
}

namespace {

AffineForm random_form(std::mt19937_64& rng, int rank) {
  std::uniform_int_distribution<int> lin(-3, 3);
  std::uniform_int_distribution<int> cst(-5, 5);
  std::vector<Rat> coeffs(static_cast<std::size_t>(rank));
  for (auto& c : coeffs) c = lin(rng);
  return AffineForm(std::move(coeffs), cst(rng));
}

AffineForm random_nonzero_form(std::mt19937_64& rng, int rank) {
  for (;;) {
    AffineForm f = random_form(rng, rank);
    if (!f.is_zero()) return f;
  }
}

Weight random_lattice_weight(std::mt19937_64& rng, const RootSystem& rs) {
  std::uniform_int_distribution<int> c(-3, 3);
  Weight w = Weight::zero(rs.dim());
  for (int i = 0; i < rs.rank(); ++i) w += rs.simple_root(i) * Rat(c(rng));
  return w;
}

}  // namespace

RunOutcome run_qcheck(const JobSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  const int rank = spec.rank;
  const RootSystem rs = build_root_system(spec.series, rank);
  RunOutcome out;
  std::ostringstream os;

  int two_done = 0, three_done = 0;
  for (int i = 0; i < spec.count; ++i) {
    const AffineForm a = random_nonzero_form(rng, rank);
    if (!two_chain_factor<CartanScalar>(a).is_zero() ||
        !two_chain_factor<QScalar>(a).is_zero()) {
      out.ok = false;
      os << "FAIL two-chain factor at a = " << a << '\n';
      break;
    }
    ++two_done;

    AffineForm d1 = random_nonzero_form(rng, rank);
    AffineForm d2 = random_nonzero_form(rng, rank);
    while ((d2 - d1).is_zero()) d2 = random_nonzero_form(rng, rank);
    if (!three_chain_factor<CartanScalar>(d1, d2).is_zero() ||
        !three_chain_factor<QScalar>(d1, d2).is_zero()) {
      out.ok = false;
      os << "FAIL three-chain factor at d1 = " << d1 << ", d2 = " << d2 << '\n';
      break;
    }
    ++three_done;
  }
  if (out.ok)
    os << "ok chain factors: " << two_done << " two-chain + " << three_done
       << " three-chain instances, classical and quantum\n";

  int thetas_done = 0;
  if (out.ok) {
    std::uniform_int_distribution<int> pick(0, rs.rank() - 1);
    for (int i = 0; i < spec.count; ++i) {
      const Weight alpha = rs.simple_root(pick(rng));
      const Weight nu_r = random_lattice_weight(rng, rs);
      const Weight nu_j = random_lattice_weight(rng, rs);
      const Weight nu_l = nu_r + alpha;
      const AffineForm h_alpha = AffineForm::h_of(rs, alpha);
      const AffineForm lhs1 = eta_form(rs, nu_l).shifted(rs, nu_j) -
                              eta_form(rs, nu_r).shifted(rs, nu_j);
      const AffineForm rhs1 =
          h_alpha + AffineForm::constant(rank, dot(alpha, nu_j - nu_r));
      const AffineForm lhs2 = eta_form(rs, nu_l) - eta_form(rs, nu_r);
      const AffineForm rhs2 =
          h_alpha + AffineForm::constant(rank, -dot(alpha, nu_r));
      if (!(lhs1 == rhs1) || !(lhs2 == rhs2)) {
        out.ok = false;
        os << "FAIL eta translation identity at alpha = " << alpha
           << ", nu_r = " << nu_r << ", nu_j = " << nu_j << '\n';
        break;
      }
      ++thetas_done;
    }
    if (out.ok)
      os << "ok eta translation identities: " << thetas_done << " instances\n";
  }

  os << (out.ok ? "qcheck passed" : "qcheck FAILED") << " (seed " << spec.seed
     << ", count " << spec.count << ")\n";
  out.output = os.str();
  return out;
}

namespace {

bool cacheable(const std::string& command) {
  return command == "describe" || command == "hasse" || command == "generators";
}

std::filesystem::path cache_path(const JobSpec& spec) {
  std::ostringstream name;
  name << "stepalg-" << std::hex << fnv1a64(spec.canonical_key()) << ".json";
  return std::filesystem::path(spec.cache_dir) / name.str();
}

bool try_cache_read(const JobSpec& spec, std::string& output) {
  std::ifstream in(cache_path(spec));
  if (!in) return false;
  try {
    ordered_json j = ordered_json::parse(in);
    if (j.at("key").get<std::string>() != spec.canonical_key()) return false;
    output = j.at("output").get<std::string>();
    return true;
  } catch (...) {
    return false;
  }
}

void try_cache_write(const JobSpec& spec, const std::string& output) {
  std::error_code ec;
  std::filesystem::create_directories(spec.cache_dir, ec);
  if (ec) return;
  ordered_json j;
  j["key"] = spec.canonical_key();
  j["output"] = output;
  std::ofstream outf(cache_path(spec));
  if (outf) outf << j.dump(2) << '\n';
}

}  // namespace

int run_job(const JobSpec& spec, std::ostream& out, std::ostream& err) {
  if (spec.command == "verify") {
    RunOutcome r = run_verify(spec);
    out << r.output;
    return r.ok ? 0 : 1;
  }
  if (spec.command == "qcheck") {
    RunOutcome r = run_qcheck(spec);
    out << r.output;
    return r.ok ? 0 : 1;
  }
  if (!cacheable(spec.command)) {
    err << "error: unknown command '" << spec.command << "'\n";
    return 2;
  }
  if (!spec.cache_dir.empty()) {
    std::string cached;
    if (try_cache_read(spec, cached)) {
      out << cached;
      return 0;
    }
  }
  std::string rendered;
  if (spec.command == "describe")
    rendered = render_describe(spec);
  else if (spec.command == "hasse")
    rendered = render_hasse(spec);
  else
    rendered = render_generators(spec);
  if (!spec.cache_dir.empty()) try_cache_write(spec, rendered);
  out << rendered;
  return 0;
}

namespace {

const std::map<std::string, std::string>& config_key_to_flag() {
  static const std::map<std::string, std::string> m = {
      {"series", "--series"},   {"rank", "--rank"},
      {"levi", "--levi"},       {"side", "--side"},
      {"class", "--class"},     {"format", "--format"},
      {"oracle", "--oracle"},   {"count", "--count"},
      {"seed", "--seed"},       {"cache-dir", "--cache-dir"},
  };
  return m;
}

// Flat key=value files; '#' starts a comment, blank lines are skipped.
// Values become defaults: the synthesized flags precede the real command
// line, and every option takes its last occurrence.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::string config_file;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size())
      config_file = args[i + 1];
    else if (args[i].rfind("--config=", 0) == 0)
      config_file = args[i].substr(9);
  }
  if (config_file.empty()) return args;
  std::ifstream in(config_file);
  if (!in) throw std::invalid_argument("cannot open config file: " + config_file);
  std::vector<std::string> expanded;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": expected key=value");
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    const auto key_end = key.find_last_not_of(" \t");
    key = key.substr(0, key_end == std::string::npos ? 0 : key_end + 1);
    const auto val_begin = value.find_first_not_of(" \t");
    value = val_begin == std::string::npos ? "" : value.substr(val_begin);
    const auto it = config_key_to_flag().find(key);
    if (it == config_key_to_flag().end())
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": unknown key '" + key + "'");
    expanded.push_back(it->second + "=" + value);
  }
  expanded.insert(expanded.end(), args.begin(), args.end());
  return expanded;
}

std::vector<int> parse_levi_csv(const std::string& s) {
  std::vector<int> out;
  std::string token;
  std::istringstream is(s);
  while (std::getline(is, token, ',')) {
    if (token.empty()) continue;
    std::size_t pos = 0;
    const int v = std::stoi(token, &pos);
    if (pos != token.size()) throw std::invalid_argument("bad levi index: " + token);
    out.push_back(v);
  }
  return out;
}

std::string default_format(const std::string& command) {
  if (command == "hasse") return "graph";
  return "text";
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  JobSpec spec;
  std::string command, series = "A", levi_str, side = "both", format,
                       config_file, cache_dir;
  int rank = 2, class_index = -1, count = 200;
  std::uint64_t seed = 1;
  bool oracle = false;

  CLI::App app{"Step-algebra generators for Levi pairs via Hasse-diagram routes"};
  app.name("stepalg");
  app.add_option("command", command,
                 "one of: describe, hasse, generators, verify, qcheck")
      ->required()
      ->check(CLI::IsMember({"describe", "hasse", "generators", "verify", "qcheck"}));
  app.add_option("--series", series, "ambient series (A)")
      ->check(CLI::IsMember({"A"}))
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.add_option("--rank", rank, "ambient rank n (sl_{n+1})")
      ->check(CLI::Range(1, 12))
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.add_option("--levi", levi_str,
                 "comma-separated 1-based simple roots of the subalgebra")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.add_option("--side", side, "minus, plus or both")
      ->check(CLI::IsMember({"both", "minus", "plus"}))
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.add_option("--class", class_index, "restrict to one class index (default all)")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.add_option("--format", format, "text, json, latex or graph")
      ->check(CLI::IsMember({"text", "json", "latex", "graph"}))
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.add_flag("--oracle", oracle, "verify against the extremal projector");
  app.add_option("--count", count, "randomized instances for qcheck")
      ->check(CLI::Range(1, 1000000))
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.add_option("--seed", seed, "random seed for qcheck")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.add_option("--config", config_file, "flat key=value config file")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.add_option("--cache-dir", cache_dir,
                 "cache directory for rendered output (or STEPALG_CACHE_DIR)")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  try {
    const std::vector<std::string> expanded = expand_config(args);
    std::vector<const char*> argv;
    argv.push_back("stepalg");
    for (const std::string& a : expanded) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    spec.command = command;
    spec.series = series.at(0);
    spec.rank = rank;
    spec.levi = parse_levi_csv(levi_str);
    spec.side = side;
    spec.class_index = class_index;
    spec.format = format.empty() ? default_format(command) : format;
    spec.oracle = oracle;
    spec.count = count;
    spec.seed = seed;
    if (!cache_dir.empty()) {
      spec.cache_dir = cache_dir;
    } else if (const char* env = std::getenv("STEPALG_CACHE_DIR")) {
      spec.cache_dir = env;
    }
    return run_job(spec, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace stepalg
