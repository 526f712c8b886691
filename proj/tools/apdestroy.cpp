#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <vector>

#include "apd/almost.hpp"
#include "apd/blocks.hpp"
#include "apd/catalog.hpp"
#include "apd/crt.hpp"
#include "apd/io.hpp"
#include "apd/prime.hpp"
#include "apd/search.hpp"
#include "apd/verify.hpp"

namespace {

using apd::i64;

i64 parse_int(const std::string& tok, const char* what) {
  size_t pos = 0;
  i64 v = 0;
  try {
    v = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != tok.size())
    throw std::invalid_argument(std::string(what) + ": expected an integer, got '" + tok + "'");
  return v;
}

std::vector<std::string> split_on(const std::string& text, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (start <= text.size()) {
    const size_t end = text.find(sep, start);
    if (end == std::string::npos) {
      out.push_back(text.substr(start));
      break;
    }
    out.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

// "s:t,s:t,..." with optional signs
std::vector<apd::Pattern> parse_patterns(const std::string& text) {
  std::vector<apd::Pattern> out;
  for (const std::string& item : split_on(text, ',')) {
    const size_t colon = item.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("patterns: expected s:t, got '" + item + "'");
    out.push_back({parse_int(item.substr(0, colon), "patterns"),
                   parse_int(item.substr(colon + 1), "patterns")});
  }
  if (out.empty()) throw std::invalid_argument("patterns: empty list");
  return out;
}

std::pair<i64, i64> parse_pair(const std::string& text, const char* what) {
  const auto parts = split_on(text, ',');
  if (parts.size() != 2)
    throw std::invalid_argument(std::string(what) + ": expected S,T, got '" + text + "'");
  return {parse_int(parts[0], what), parse_int(parts[1], what)};
}

int g_exit = 0;

void cmd_verify(const std::string& perm_file, const std::string& patterns,
                const std::string& almost, i64 s, i64 t, bool have_st, int threads) {
  const apd::Perm p = apd::perm_from_file(perm_file);
  const apd::Certificate cert = [&] {
    if (!almost.empty()) {
      const auto [S, T] = parse_pair(almost, "almost");
      return apd::check_almost(p, S, T, threads);
    }
    if (!patterns.empty()) return apd::check_patterns(p, parse_patterns(patterns), threads);
    if (have_st) return apd::check_pattern(p, {s, t}, threads);
    return apd::check_pattern(p, {0, 0}, threads);
  }();
  std::cout << apd::certificate_json(cert) << "\n";
  g_exit = cert.pass ? 0 : 1;
}

void cmd_search(i64 n, const std::string& patterns, bool normalize, int threads,
                i64 limit, bool exhaustive, apd::u64 seed) {
  const std::vector<apd::Pattern> pats = parse_patterns(patterns);
  if (exhaustive) {
    const i64 count = apd::exhaust_count(n, pats);
    std::cout << "count=" << count << "\n";
    g_exit = count > 0 ? 0 : 1;
    return;
  }
  apd::SearchConfig cfg;
  cfg.patterns = pats;
  cfg.normalize = normalize;
  cfg.node_limit = limit;
  cfg.threads = threads;
  cfg.seed = seed;
  const apd::SearchResult res = apd::search_perm(n, cfg);
  if (res.status == apd::SearchStatus::found) {
    std::cout << apd::perm_to_text(*res.witness);
    std::cout << apd::certificate_json(apd::check_patterns(*res.witness, pats)) << "\n";
    if (!res.deterministic_witness)
      std::cerr << "note: parallel first-found witness; identity may vary between runs\n";
    g_exit = 0;
  } else if (res.status == apd::SearchStatus::none) {
    std::cerr << "no permutation of Z_" << n << " destroys the given patterns (searched "
              << res.nodes << " nodes)\n";
    g_exit = 1;
  } else {
    std::cerr << "node limit " << limit << " exhausted before resolution\n";
    g_exit = 2;
  }
}

void cmd_compose(const std::vector<std::string>& files, const std::string& coverage,
                 const std::string& claims) {
  std::vector<apd::Perm> perms;
  std::vector<i64> moduli;
  for (const std::string& f : files) {
    perms.push_back(apd::perm_from_file(f));
    moduli.push_back(perms.back().n());
  }
  const apd::CrtBasis basis = apd::make_basis(moduli);
  const apd::Perm composed = apd::compose_perms(perms, basis);
  std::cout << apd::perm_to_text(composed);
  g_exit = 0;
  if (coverage.empty() && claims.empty()) return;
  if (coverage.empty() || claims.empty())
    throw std::invalid_argument("compose: --coverage and --claims go together");
  const auto [S, T] = parse_pair(coverage, "coverage");
  const auto claim_groups = split_on(claims, ';');
  if (claim_groups.size() != files.size())
    throw std::invalid_argument("compose: need one ;-separated claim group per component");
  std::vector<std::pair<i64, std::vector<apd::Pattern>>> components;
  for (size_t i = 0; i < claim_groups.size(); ++i)
    components.emplace_back(moduli[i], parse_patterns(claim_groups[i]));
  const apd::CoverageReport rep = apd::check_coverage(components, S, T);
  std::cout << "coverage " << (rep.pass ? "pass" : "fail") << ": " << rep.detail << "\n";
  g_exit = rep.pass ? 0 : 1;
}

void cmd_build(i64 n, const std::string& master_file, i64 t, bool trace, bool unchecked,
               int threads) {
  const apd::Perm master = apd::perm_from_file(master_file);
  if (t < 0) {
    const apd::Perm built = apd::build_destroyer(n, master, !unchecked);
    const apd::Certificate cert = apd::check_pattern(built, {0, 0}, threads);
    std::cout << apd::perm_to_text(built);
    std::cout << apd::certificate_json(cert) << "\n";
    g_exit = cert.pass ? 0 : 1;
    return;
  }
  const apd::AlmostResult res = apd::build_almost(n, t, master, !unchecked);
  const apd::Certificate cert = apd::check_almost(res.perm, t, t, threads);
  std::cout << apd::perm_to_text(res.perm);
  if (trace) std::cout << apd::stage_trace_json(res.trace) << "\n";
  std::cout << apd::certificate_json(cert) << "\n";
  g_exit = cert.pass ? 0 : 1;
}

void cmd_prime(i64 p, int threads) {
  const apd::Perm perm = apd::prime_destroyer(p);
  const apd::XiWitness xi = apd::find_xi(p);
  const apd::Certificate cert = apd::check_pattern(perm, {0, 0}, threads);
  std::cout << apd::perm_to_text(perm);
  std::cout << R"({"p":)" << p << R"(,"xi":)" << xi.xi << R"(,"certificate":)"
            << apd::certificate_json(cert) << "}\n";
  g_exit = cert.pass ? 0 : 1;
}

void cmd_table_verify(int threads) {
  bool all = true;
  for (const apd::TableEntry& entry : apd::table_entries()) {
    const apd::Certificate cert = apd::check_patterns(entry.perm, entry.claimed, threads);
    std::cout << "row " << entry.index << " n=" << entry.perm.n()
              << (cert.pass ? " pass" : " fail") << "\n";
    all = all && cert.pass;
  }
  g_exit = all ? 0 : 1;
}

void cmd_stats(i64 n, i64 trials, apd::u64 seed, int threads) {
  if (trials < 1) throw std::invalid_argument("stats: trials must be positive");
  const apd::SurvivorStats st =
      apd::survivor_stats(n, static_cast<apd::u64>(trials), seed, threads);
  std::cout << apd::survivor_stats_json(st) << "\n";
  g_exit = 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"construct, compose, search, and brute-force verify AP-destroying permutations of Z_n"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "brute-force check a permutation against patterns");
  std::string v_perm, v_patterns, v_almost;
  i64 v_s = 0, v_t = 0;
  int v_threads = 0;
  verify->add_option("--perm", v_perm, "permutation file (text or JSON)")->required();
  auto* v_s_opt = verify->add_option("--s", v_s, "pattern input offset");
  verify->add_option("--t", v_t, "pattern output offset")->needs(v_s_opt);
  verify->add_option("--patterns", v_patterns, "comma list s:t,...");
  verify->add_option("--almost", v_almost, "S,T for the (S,T)-almost check");
  verify->add_option("--threads", v_threads, "worker threads (0 = auto)");
  verify->callback([&] {
    cmd_verify(v_perm, v_patterns, v_almost, v_s, v_t, !v_s_opt->empty(), v_threads);
  });

  // search
  auto* search = app.add_subcommand("search", "backtracking search for a destroying permutation");
  i64 s_n = 0, s_limit = 0;
  apd::u64 s_seed = 0;
  std::string s_patterns;
  bool s_normalize = true, s_exhaustive = false;
  int s_threads = 1;
  search->add_option("--n", s_n, "modulus")->required();
  search->add_option("--patterns", s_patterns, "comma list s:t,...")->required();
  search->add_flag("--normalize,!--no-normalize", s_normalize, "pin p(0)=0 (default on)");
  search->add_option("--threads", s_threads, "worker threads (0 = auto)");
  search->add_option("--limit", s_limit, "node budget (0 = unlimited)");
  search->add_flag("--exhaustive", s_exhaustive, "count all destroying permutations (n <= 10)");
  search->add_option("--seed", s_seed, "value-order shuffle seed (0 = ascending)");
  search->callback([&] {
    cmd_search(s_n, s_patterns, s_normalize, s_threads, s_limit, s_exhaustive, s_seed);
  });

  // compose
  auto* compose = app.add_subcommand("compose", "CRT-compose permutations of coprime moduli");
  std::vector<std::string> c_files;
  std::string c_coverage, c_claims;
  compose->add_option("files", c_files, "component permutation files")->required()->expected(-2);
  compose->add_option("--coverage", c_coverage, "S,T to check pattern coverage");
  compose->add_option("--claims", c_claims, "per-component claims, ;-separated s:t lists");
  compose->callback([&] { cmd_compose(c_files, c_coverage, c_claims); });

  // build
  auto* build = app.add_subcommand("build", "block construction driven by a master permutation");
  i64 b_n = 0, b_t = -1;
  std::string b_master;
  bool b_trace = false, b_unchecked = false;
  int b_threads = 0;
  build->add_option("--n", b_n, "target modulus")->required();
  build->add_option("--master", b_master, "master permutation file")->required();
  build->add_option("--t", b_t, "tolerance for the four-stage (t,t)-almost build");
  build->add_flag("--trace", b_trace, "emit the stage trace JSON");
  build->add_flag("--unchecked-master", b_unchecked, "skip the master quality precondition");
  build->add_option("--threads", b_threads, "worker threads for output verification (0 = auto)");
  build->callback([&] { cmd_build(b_n, b_master, b_t, b_trace, b_unchecked, b_threads); });

  // prime
  auto* prime = app.add_subcommand("prime", "quadratic-residue construction for p = 3 (mod 8)");
  i64 p_p = 0;
  int p_threads = 0;
  prime->add_option("--p", p_p, "prime modulus")->required();
  prime->add_option("--threads", p_threads, "worker threads (0 = auto)");
  prime->callback([&] { cmd_prime(p_p, p_threads); });

  // table
  auto* table = app.add_subcommand("table", "operations on the published catalog");
  auto* table_verify = table->add_subcommand("verify", "re-verify all fifteen catalog rows");
  int t_threads = 0;
  table_verify->add_option("--threads", t_threads, "worker threads (0 = auto)");
  table_verify->callback([&] { cmd_table_verify(t_threads); });
  table->require_subcommand(1);

  // stats
  auto* stats = app.add_subcommand("stats", "survivor statistics over random permutations");
  i64 st_n = 0, st_trials = 0;
  apd::u64 st_seed = 0;
  int st_threads = 0;
  stats->add_option("--n", st_n, "modulus")->required();
  stats->add_option("--trials", st_trials, "number of random permutations")->required();
  stats->add_option("--seed", st_seed, "RNG seed");
  stats->add_option("--threads", st_threads, "worker threads (0 = auto)");
  stats->callback([&] { cmd_stats(st_n, st_trials, st_seed, st_threads); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return g_exit;
}
