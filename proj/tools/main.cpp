#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "lrc/cyclic.hpp"
#include "lrc/derived.hpp"
#include "lrc/gf.hpp"
#include "lrc/group.hpp"
#include "lrc/kernels.hpp"
#include "lrc/pattern.hpp"
#include "lrc/restriction.hpp"
#include "lrc/sampling.hpp"
#include "lrc/transfer.hpp"
#include "lrc/weakmin.hpp"
#include "oracle.hpp"

using namespace lrc;

namespace {

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct Options {
  std::string group = "Z:2";
  std::string restriction;
  std::string m = "1";
  std::string total;
  std::string format = "csv";
  std::string out;
  std::string isa = "auto";
  std::string mode;
};

std::string to_str(const mpz_class& x) { return x.get_str(); }
std::string to_str(double x) {
  std::ostringstream os;
  os.precision(15);
  os << x;
  return os.str();
}

void emit(const Table& t, const Options& o, const nlohmann::json& meta = {}) {
  std::ostringstream os;
  if (o.format == "csv") {
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
    os << "\n";
    for (const auto& r : t.rows) {
      for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
      os << "\n";
    }
  } else if (o.format == "json") {
    nlohmann::json j;
    if (!meta.is_null()) j["meta"] = meta;
    j["columns"] = t.columns;
    j["rows"] = nlohmann::json::array();
    for (const auto& r : t.rows) {
      nlohmann::json jr;
      for (std::size_t i = 0; i < r.size(); ++i) jr[t.columns[i]] = r[i];
      j["rows"].push_back(jr);
    }
    os << j.dump(2) << "\n";
  } else if (o.format == "plain") {
    for (const auto& r : t.rows) os << r.back() << "\n";
  } else {
    throw SpecError("unknown format '" + o.format + "' (csv, json, plain)");
  }
  if (o.out.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream f(o.out);
    if (!f) throw SpecError("cannot open output file " + o.out);
    f << os.str();
  }
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& s) {
  auto num = [&](const std::string& x) -> std::size_t {
    if (x.empty() || x.find_first_not_of("0123456789") != std::string::npos)
      throw SpecError("bad m range '" + s + "' (expected N or A..B)");
    return std::stoul(x);
  };
  auto dots = s.find("..");
  if (dots == std::string::npos) {
    auto v = num(s);
    return {v, v};
  }
  auto a = num(s.substr(0, dots)), b = num(s.substr(dots + 2));
  if (a > b) throw SpecError("empty m range '" + s + "'");
  return {a, b};
}

void apply_isa(const std::string& isa) {
  if (isa == "auto") return;
  if (isa == "scalar") simd::select(simd::Isa::scalar);
  else if (isa == "avx2") simd::select(simd::Isa::avx2);
  else if (isa == "neon") simd::select(simd::Isa::neon);
  else throw SpecError("unknown --isa '" + isa + "' (auto, scalar, avx2, neon)");
}

struct Setup {
  GroupPtr g;
  GraphPtr D;
  std::unique_ptr<DerivedDigraph> Dx;
  std::vector<Elem> totals;
};

Setup setup(const Options& o, bool need_derived = true) {
  if (o.restriction.empty()) throw SpecError("--restriction is required");
  Setup s;
  s.g = std::make_shared<const FiniteGroup>(parse_group(o.group));
  s.D = std::make_shared<const DeBruijnSubgraph>(parse_restriction(s.g, o.restriction));
  for (const auto& w : s.D->warnings) std::cerr << "warning: " << w << "\n";
  if (need_derived) s.Dx = std::make_unique<DerivedDigraph>(s.D);
  if (o.total.empty()) {
    for (Elem a = 0; a < s.g->order(); ++a) s.totals.push_back(a);
  } else {
    s.totals.push_back(s.g->find_label(o.total));
  }
  return s;
}

std::vector<mpz_class> counts_for(const DerivedDigraph& Dx, std::size_t m, const std::string& mode) {
  if (mode == "path") return count_table(Dx, m, m).counts[0];
  if (mode == "cyclic") return count_cyclic_all(Dx, m);
  if (mode == "circular") return count_circular_all(Dx, m);
  if (mode == "aperiodic") return count_aperiodic_all(Dx, m);
  if (mode == "palindromic") return count_palindromic_all(Dx, m);
  if (mode == "undirected") return count_undirected_all(Dx, m);
  throw SpecError("unknown mode '" + mode + "' (path, cyclic, circular, aperiodic, palindromic, undirected)");
}

int run_count(const Options& o) {
  Setup s = setup(o);
  auto [lo, hi] = parse_range(o.m);
  Table t{{"m", "total", "count"}, {}};
  if (o.mode == "path") {
    auto ct = count_table(*s.Dx, lo, hi);
    for (std::size_t m = lo; m <= hi; ++m)
      for (Elem a : s.totals) t.rows.push_back({std::to_string(m), s.g->label(a), to_str(ct.at(m, a))});
  } else {
    for (std::size_t m = lo; m <= hi; ++m) {
      auto c = counts_for(*s.Dx, m, o.mode);
      for (Elem a : s.totals) t.rows.push_back({std::to_string(m), s.g->label(a), to_str(c[a])});
    }
  }
  emit(t, o, {{"mode", o.mode}, {"group", o.group}, {"restriction", s.D->descriptor}});
  return 0;
}

std::vector<std::vector<Elem>> parse_tuple_set(const FiniteGroup& g, const std::string& s) {
  std::vector<std::vector<Elem>> U;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ';'))
    if (!item.empty()) U.push_back(parse_tuple(g, item));
  if (U.empty()) throw SpecError("--U needs at least one tuple");
  return U;
}

int run_occurrences(const Options& o, const std::string& Utext, long r_max, bool cyclic, bool moments) {
  Setup s = setup(o);
  auto U = parse_tuple_set(*s.g, Utext);
  auto [lo, hi] = parse_range(o.m);
  if (moments) {
    Table t{{"m", "total", "mean", "variance"}, {}};
    for (std::size_t m = lo; m <= hi; ++m)
      for (Elem a : s.totals) {
        Moments mo = cyclic ? occurrence_moments_cyclic(*s.Dx, U, m, a) : occurrence_moments(*s.Dx, U, m, a);
        t.rows.push_back({std::to_string(m), s.g->label(a), mo.mean.get_str(), mo.variance.get_str()});
      }
    emit(t, o);
    return 0;
  }
  Table t{{"m", "total", "r", "count"}, {}};
  if (cyclic) {
    for (std::size_t m = lo; m <= hi; ++m) {
      auto tab = cyclic_occurrence_table(*s.Dx, U, m);
      const std::size_t rm = r_max < 0 ? m : std::min<std::size_t>(m, r_max);
      for (Elem a : s.totals)
        for (std::size_t r = 0; r <= rm; ++r)
          t.rows.push_back({std::to_string(m), s.g->label(a), std::to_string(r), to_str(tab[a][r])});
    }
  } else {
    const std::size_t rm = r_max < 0 ? hi : std::size_t(r_max);
    auto tab = count_with_occurrences(*s.Dx, U, lo, hi, rm);
    for (std::size_t m = lo; m <= hi; ++m)
      for (Elem a : s.totals)
        for (std::size_t r = 0; r <= rm; ++r)
          t.rows.push_back({std::to_string(m), s.g->label(a), std::to_string(r), to_str(tab.at(m, a, r))});
  }
  emit(t, o);
  return 0;
}

int run_asympt(const Options& o, double tol, std::size_t max_iter) {
  Setup s = setup(o);
  PowerOptions po;
  po.tol = tol;
  po.max_iter = max_iter;
  auto est = asymptotics(*s.Dx, po);
  auto rep = regularity_report(*s.Dx);
  for (const auto& w : est.warnings) std::cerr << "warning: " << w << "\n";
  Table t{{"field", "value"}, {}};
  t.rows.push_back({"zero_family", est.zero_family ? "yes" : "no"});
  t.rows.push_back({"regular", rep.regular() ? "yes" : "no"});
  t.rows.push_back({"equal_split_hypotheses", rep.equal_hypotheses ? "yes" : "no"});
  t.rows.push_back({"lambda", to_str(est.lambda)});
  for (Elem a = 0; a < s.g->order(); ++a)
    if (a < est.C.size()) t.rows.push_back({"C[" + s.g->label(a) + "]", to_str(est.C[a])});
  t.rows.push_back({"equal_split_deviation", to_str(est.equal_split_deviation)});
  for (const auto& c : est.components) {
    const std::string p = "component" + std::to_string(c.component) + ".";
    t.rows.push_back({p + "size", std::to_string(c.size)});
    t.rows.push_back({p + "period", std::to_string(c.period)});
    t.rows.push_back({p + "lambda", to_str(c.lambda)});
    t.rows.push_back({p + "converged", c.converged ? "yes" : "no"});
    t.rows.push_back({p + "iterations", std::to_string(c.iterations)});
  }
  emit(t, o);
  return 0;
}

int run_sample(const Options& o, std::uint64_t seed, std::size_t count) {
  Setup s = setup(o);
  auto [lo, hi] = parse_range(o.m);
  if (lo != hi) throw SpecError("sample needs a single --m");
  if (o.total.empty()) throw SpecError("sample needs --total");
  auto ws = sample_uniform(*s.Dx, lo, s.totals[0], seed, count);
  Table t{{"index", "word"}, {}};
  for (std::size_t i = 0; i < ws.size(); ++i) {
    std::string w;
    for (std::size_t j = 0; j < ws[i].size(); ++j) w += (j ? " " : "") + s.g->label(ws[i][j]);
    t.rows.push_back({std::to_string(i), w});
  }
  emit(t, o);
  return 0;
}

int run_mcmc(const Options& o, long n, const std::string& pattern, std::uint64_t seed, std::size_t count,
             long burn_in, long thin) {
  auto [lo, hi] = parse_range(o.m);
  if (lo != hi) throw SpecError("mcmc needs a single --m");
  Pattern tau = parse_pattern(pattern);
  McmcState st = mcmc_init(n, lo, tau, seed);
  const std::uint64_t burn = burn_in < 0 ? default_burn_in(lo) : std::uint64_t(burn_in);
  const std::uint64_t gap = thin < 0 ? std::uint64_t(lo) * lo : std::uint64_t(thin);
  for (std::uint64_t i = 0; i < burn; ++i) mcmc_step(st);
  Table t{{"index", "parts"}, {}};
  for (std::size_t i = 0; i < count; ++i) {
    if (i)
      for (std::uint64_t j = 0; j < gap; ++j) mcmc_step(st);
    std::string w;
    for (std::size_t j = 0; j < st.parts.size(); ++j) w += (j ? " " : "") + std::to_string(st.parts[j]);
    t.rows.push_back({std::to_string(i), w});
  }
  emit(t, o);
  return 0;
}

std::map<std::string, std::string> parse_params(const std::string& s) {
  std::map<std::string, std::string> p;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw SpecError("bad --params entry '" + item + "' (expected key=value)");
    p[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return p;
}

int param_int(const std::map<std::string, std::string>& p, const std::string& key, int dflt = -1) {
  auto it = p.find(key);
  if (it == p.end()) {
    if (dflt < 0) throw SpecError("--params needs " + key);
    return dflt;
  }
  try {
    return std::stoi(it->second);
  } catch (...) {
    throw SpecError("--params " + key + " must be an integer");
  }
}

void series_rows(Table& t, const TruncatedSeries& s, bool skip_zero_n) {
  t.columns = {"n", "m", "coeff"};
  for (int n = skip_zero_n ? 1 : 0; n <= s.n_max(); ++n)
    for (int m = 0; m <= s.m_max(); ++m) t.rows.push_back({std::to_string(n), std::to_string(m), to_str(s.at(n, m))});
}

int run_gf(const Options& o, const std::string& family, const std::string& params, int N, int M) {
  auto p = parse_params(params);
  if (N < 0) throw SpecError("--trunc-n is required");
  const bool bivariate = M >= 0;
  const int Mu = bivariate ? M : N;  // u-truncation N loses nothing when collapsing u = 1
  Table t;
  auto collapse = [&](const TruncatedSeries& s, bool skip0) {
    if (bivariate) return series_rows(t, s, skip0);
    t.columns = {"n", "coeff"};
    auto v = s.at_u1();
    for (int n = skip0 ? 1 : 0; n <= N; ++n) t.rows.push_back({std::to_string(n), to_str(v[n])});
  };
  auto row = [&](const std::vector<mpz_class>& v) {
    t.columns = {"m", "count"};
    for (std::size_t m = 0; m < v.size(); ++m) t.rows.push_back({std::to_string(m), to_str(v[m])});
  };
  auto table = [&](const std::vector<std::vector<mpz_class>>& h) {
    t.columns = {"n", "m", "count"};
    for (std::size_t n = 0; n < h.size(); ++n)
      for (std::size_t m = 0; m < h[n].size(); ++m)
        t.rows.push_back({std::to_string(n), std::to_string(m), to_str(h[n][m])});
  };
  if (family == "pair112_123") {
    collapse(gf_pair_112_123(N, Mu), false);
  } else if (family == "pair112_121") {
    std::vector<int> A;
    if (p.count("A")) {
      std::stringstream ss(p["A"]);
      std::string x;
      while (std::getline(ss, x, ':')) A.push_back(std::stoi(x));
    } else {
      for (int i = 1; i <= param_int(p, "k", N); ++i) A.push_back(i);
    }
    collapse(gf_pair_112_121(A, N, Mu), false);
  } else if (family == "cyclic122") {
    collapse(gf_cyclic_122(param_int(p, "k", std::max(N, 1)), N, Mu), true);
  } else if (family == "cyclic321") {
    collapse(gf_cyclic_321(param_int(p, "k", std::max(N, 1)), N, Mu), true);
  } else if (family == "pair212_212p") {
    row(pair_212_212p_row(param_int(p, "k"), N));
  } else if (family == "pair123_321") {
    row(pair_123_321_row(param_int(p, "k"), N));
  } else if (family == "pop2112") {
    row(pop_2112_words_row(param_int(p, "k"), N));
  } else if (family == "pop") {
    const int pp = param_int(p, "p"), q = param_int(p, "q"), r = param_int(p, "r"), k = param_int(p, "k");
    if (param_int(p, "words", 0)) {
      std::vector<mpz_class> v;
      for (int m = 0; m <= N; ++m) v.push_back(count_pop_general_words(pp, q, r, k, m));
      row(v);
    } else {
      table(pop_general_table(pp, q, r, k, N, bivariate ? M : N));
    }
  } else if (family == "pop_p0") {
    table(pop_p0_table(param_int(p, "q"), param_int(p, "r"), param_int(p, "k"), N, bivariate ? M : N));
  } else if (family == "zk121") {
    const int k = param_int(p, "k");
    auto h = zk_avoiding_121_table(k, bivariate ? M : N);
    t.columns = {"a", "m", "count"};
    for (int a = 0; a < k; ++a)
      for (std::size_t m = 0; m < h[a].size(); ++m)
        t.rows.push_back({std::to_string(a), std::to_string(m), to_str(h[a][m])});
  } else {
    throw SpecError("unknown gf family '" + family +
                    "' (pair112_123, pair112_121, pair212_212p, pair123_321, pop, pop_p0, pop2112, zk121, cyclic122, cyclic321)");
  }
  emit(t, o);
  return 0;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw SpecError("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

int run_minimize(const Options& o, const std::string& in, const std::string& mode, bool report) {
  if (in.empty()) throw SpecError("--in is required");
  auto a = automaton_from_json(slurp(in));
  MergeMode mm;
  if (mode == "weak") mm = MergeMode::Weak;
  else if (mode == "complete") mm = MergeMode::Complete;
  else throw SpecError("unknown --mode '" + mode + "' (weak, complete)");
  auto b = weak_minimize(a, mm);
  const std::string js = automaton_to_json(b) + "\n";
  if (o.out.empty()) {
    std::cout << js;
  } else {
    std::ofstream f(o.out);
    if (!f) throw SpecError("cannot open output file " + o.out);
    f << js;
  }
  if (report) {
    auto v = agreement_bound_check(a, b);
    std::cerr << "input_states," << a.states << "\noutput_states," << b.states << "\nhorizon," << v.horizon
              << "\nverdict," << (v.equivalent ? "weakly equivalent" : "not equivalent") << "\n";
  }
  return 0;
}

int run_oracle(const Options& o) {
  Setup s = setup(o, false);
  auto [lo, hi] = parse_range(o.m);
  oracle::Mode mode;
  if (o.mode == "path") mode = oracle::Mode::path;
  else if (o.mode == "cyclic") mode = oracle::Mode::cyclic;
  else if (o.mode == "circular") mode = oracle::Mode::circular;
  else if (o.mode == "aperiodic") mode = oracle::Mode::aperiodic;
  else if (o.mode == "palindromic") mode = oracle::Mode::palindromic;
  else if (o.mode == "undirected") mode = oracle::Mode::undirected;
  else throw SpecError("unknown mode '" + o.mode + "'");
  Table t{{"m", "total", "count"}, {}};
  for (std::size_t m = lo; m <= hi; ++m) {
    auto c = oracle::count(*s.D, m, mode);
    for (Elem a : s.totals) t.rows.push_back({std::to_string(m), s.g->label(a), to_str(c[a])});
  }
  emit(t, o);
  return 0;
}

void add_common(CLI::App* sc, Options& o, bool restriction = true) {
  if (restriction) {
    sc->add_option("--group", o.group, "group: Z:k, perm:CYCLES;CYCLES, prod:A,B")->capture_default_str();
    sc->add_option("--restriction", o.restriction,
                   "carlitz:d mullen:d windowsum:d subword:TAU smooth:p full:sigma forbid:@file graph:@file");
    sc->add_option("--total", o.total, "total label (default: all totals)");
  }
  sc->add_option("--m", o.m, "length or range A..B")->capture_default_str();
  sc->add_option("--format", o.format, "csv, json or plain")->capture_default_str();
  sc->add_option("--out", o.out, "output file (default stdout)");
  sc->add_option("--isa", o.isa, "kernel variant: auto, scalar, avx2, neon")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counting of locally restricted compositions over finite groups"};
  app.require_subcommand(1);
  Options o;

  auto* count = app.add_subcommand("count", "count legal compositions per (m, total)");
  add_common(count, o);
  count->add_option("--mode", o.mode, "path, cyclic, circular, aperiodic, palindromic, undirected");
  auto* cyc = app.add_subcommand("cyclic", "count cyclically restricted compositions");
  add_common(cyc, o);
  auto* circ = app.add_subcommand("circular", "count circular compositions (rotation classes)");
  add_common(circ, o);
  circ->add_option("--mode", o.mode, "circular or aperiodic");
  auto* pal = app.add_subcommand("palindromic", "count palindromic or undirected compositions");
  add_common(pal, o);
  pal->add_option("--mode", o.mode, "palindromic or undirected");

  std::string U;
  long r_max = -1;
  bool occ_cyclic = false, moments = false;
  auto* occ = app.add_subcommand("occurrences", "distribution of occurrences of a tuple set");
  add_common(occ, o);
  occ->add_option("--U", U, "tuples separated by ';', labels by ','")->required();
  occ->add_option("--r-max", r_max, "largest occurrence count tabulated (default: m)");
  occ->add_flag("--cyclic", occ_cyclic, "count cyclic windows");
  occ->add_flag("--moments", moments, "print exact mean and variance instead");

  double tol = 1e-12;
  std::size_t max_iter = 100000;
  auto* asy = app.add_subcommand("asympt", "dominant eigenvalue and constants by power iteration");
  add_common(asy, o);
  asy->add_option("--tol", tol, "convergence tolerance")->capture_default_str();
  asy->add_option("--max-iter", max_iter, "iteration cap")->capture_default_str();

  std::uint64_t seed = 1;
  std::size_t samples = 1;
  auto* smp = app.add_subcommand("sample", "exact uniform random compositions");
  add_common(smp, o);
  smp->add_option("--seed", seed, "RNG seed")->capture_default_str();
  smp->add_option("--count", samples, "number of samples")->capture_default_str();

  long n = 0, burn = -1, thin = -1;
  std::string pattern;
  auto* mc = app.add_subcommand("mcmc", "MCMC sampling of pattern-avoiding integer compositions");
  add_common(mc, o, false);
  mc->add_option("--n", n, "total")->required();
  mc->add_option("--pattern", pattern, "subword pattern with distinct letters, length >= 3")->required();
  mc->add_option("--seed", seed, "RNG seed")->capture_default_str();
  mc->add_option("--count", samples, "number of samples")->capture_default_str();
  mc->add_option("--burn-in", burn, "burn-in steps (default 100 m^2)");
  mc->add_option("--thin", thin, "steps between samples (default m^2)");

  std::string family, params;
  int trunc_n = -1, trunc_m = -1;
  auto* gf = app.add_subcommand("gf", "pattern-avoidance generating functions and recurrences");
  add_common(gf, o, false);
  gf->add_option("--family", family, "family name")->required();
  gf->add_option("--params", params, "comma separated key=value, e.g. k=3 or p=1,q=2,r=1,k=3 or A=1:2:5");
  gf->add_option("--trunc-n", trunc_n, "truncation in z (total, or word length for word families)")->required();
  gf->add_option("--trunc-m", trunc_m, "truncation in u (length); omit to collapse u = 1");

  std::string in, mmode = "weak";
  bool report = false;
  auto* mn = app.add_subcommand("minimize", "weak-equivalence reduction of a counting automaton");
  mn->add_option("--in", in, "automaton JSON")->required();
  mn->add_option("--out", o.out, "output JSON (default stdout)");
  mn->add_option("--mode", mmode, "weak or complete")->capture_default_str();
  mn->add_flag("--report", report, "print sizes and the agreement verdict to stderr");

  auto* orc = app.add_subcommand("oracle", "brute-force enumeration for cross-checks");
  add_common(orc, o);
  orc->add_option("--mode", o.mode, "path, cyclic, circular, aperiodic, palindromic, undirected");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    apply_isa(o.isa);
    if (*count) {
      if (o.mode.empty()) o.mode = "path";
      return run_count(o);
    }
    if (*cyc) {
      o.mode = "cyclic";
      return run_count(o);
    }
    if (*circ) {
      if (o.mode.empty()) o.mode = "circular";
      if (o.mode != "circular" && o.mode != "aperiodic") throw SpecError("circular --mode is circular or aperiodic");
      return run_count(o);
    }
    if (*pal) {
      if (o.mode.empty()) o.mode = "palindromic";
      if (o.mode != "palindromic" && o.mode != "undirected")
        throw SpecError("palindromic --mode is palindromic or undirected");
      return run_count(o);
    }
    if (*occ) return run_occurrences(o, U, r_max, occ_cyclic, moments);
    if (*asy) return run_asympt(o, tol, max_iter);
    if (*smp) return run_sample(o, seed, samples);
    if (*mc) return run_mcmc(o, n, pattern, seed, samples, burn, thin);
    if (*gf) return run_gf(o, family, params, trunc_n, trunc_m);
    if (*mn) return run_minimize(o, in, mmode, report);
    if (*orc) {
      if (o.mode.empty()) o.mode = "path";
      return run_oracle(o);
    }
  } catch (const SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const EmptyFamily& e) {
    std::cerr << "empty family: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
