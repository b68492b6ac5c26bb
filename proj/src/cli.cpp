#include "ramify/cli.hpp"

#include "CLI11.hpp"
#include "ramify/defect_lab.hpp"
#include "ramify/error.hpp"
#include "ramify/separation.hpp"
#include "ramify/text.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

namespace ramify::cli {

namespace {

class Report {
public:
  void section(std::string name) { sections_.push_back({std::move(name), {}}); }
  void add(std::string key, std::string value) {
    sections_.back().entries.emplace_back(std::move(key), std::move(value));
  }
  /// Appends "[name]" headers and "key: value" lines.
  void add_lines(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      if (line.front() == '[') {
        section(line.substr(1, line.size() - 2));
        continue;
      }
      const auto colon = line.find(": ");
      add(line.substr(0, colon), line.substr(colon + 2));
    }
  }

  std::string render(bool kv) const {
    std::ostringstream out;
    for (const auto& s : sections_) {
      if (kv) {
        out << '[' << s.name << "]\n";
        for (const auto& [k, v] : s.entries) out << k << ": " << v << '\n';
        continue;
      }
      std::size_t width = 0;
      for (const auto& e : s.entries) width = std::max(width, e.first.size());
      out << s.name << '\n';
      for (const auto& [k, v] : s.entries)
        out << "  " << std::left << std::setw(static_cast<int>(width)) << k << "  " << v << '\n';
      out << '\n';
    }
    return out.str();
  }

private:
  struct Section {
    std::string name;
    std::vector<std::pair<std::string, std::string>> entries;
  };
  std::vector<Section> sections_;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

long checked_prime(long p) {
  if (!is_prime(p)) throw ParseError("p must be prime", std::to_string(p));
  return p;
}

void add_break(Report& r, const Cut& H) {
  r.section("break");
  if (H.is_whole()) {
    r.add("break", "none");
    return;
  }
  const HullCut b = break_of(H);
  r.add("break", format(b));
  r.add("shape", to_string(b.shape()));
  r.add("principal", yes_no(b.shape() == CutShape::Principal));
}

void add_swan(Report& r, const SwanData& s) {
  r.add_lines(serialize(s));
  add_break(r, s.H);
}

std::optional<GroupElement> opt_element(const GroupDescriptor& g, const std::string& s) {
  if (s.empty()) return std::nullopt;
  return parse_element(g, s);
}

std::uint64_t resolve_seed(std::uint64_t flag) {
  const char* env = std::getenv("RAMIFY_SEED");
  if (env == nullptr || *env == '\0') return flag;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(env, &used);
    if (used == std::string(env).size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError("RAMIFY_SEED is not an unsigned integer", env);
}

HullElement along_unit(const GroupDescriptor& g, const Rational& r) {
  std::vector<Rational> c(g.coordinate_count(), Rational(0));
  if (g.kind() == GroupKind::IntLex) c.back() = r;
  else c.front() = r;
  return {g, std::move(c)};
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ramification of degree-p extensions of valuation rings", "ramify"};
  app.require_subcommand(1);
  std::uint64_t seed_flag = kDefaultSeed;
  std::string fmt = "kv";
  app.add_option("--seed", seed_flag, "seed for sampled checks (RAMIFY_SEED overrides)");
  app.add_option("--format", fmt, "output format")->check(CLI::IsMember({"plain", "kv"}));

  // classify
  auto* classify = app.add_subcommand("classify", "Swan ideal, rsw, defect and predictions");
  std::string c_group, c_as, c_case, c_c, c_mixed, c_e0, c_vb, c_va;
  long c_p = 0;
  int c_iters = kDefaultMaxIters;
  classify->add_option("--group", c_group, "value group, e.g. zlex:1, zp:2, quad:2")->required();
  classify->add_option("--p", c_p, "residue characteristic")->required();
  classify->add_option("--as", c_as, "Artin-Schreier datum f, e.g. \"u*t(-3)\"");
  classify->add_option("--case", c_case, "equal characteristic symbolic case i|ii|iii");
  classify->add_option("--c", c_c, "-v(f) for symbolic cases");
  classify->add_option("--mixed", c_mixed, "mixed characteristic case i..v");
  classify->add_option("--e0", c_e0, "v(zeta_p - 1)");
  classify->add_option("--vb", c_vb, "v(b) for mixed cases iii and iv");
  classify->add_option("--va", c_va, "v(a) for mixed case i");
  classify->add_option("--max-iters", c_iters, "Artin-Schreier reduction budget");

  // eval
  auto* eval = app.add_subcommand("eval", "image of G_log^I in Gal(L/K)");
  std::string e_group, e_H, e_I;
  eval->add_option("--group", e_group)->required();
  eval->add_option("--H", e_H, "Swan ideal as a cut of the group")->required();
  eval->add_option("--I", e_I, "ideal of A-bar as a cut of the hull")->required();

  // breaks
  auto* breaks = app.add_subcommand("breaks", "ramification break of H, or an extension with a prescribed break");
  std::string b_group, b_H, b_bound, b_variant = "closed";
  long b_p = 2;
  int b_depth = kDefaultDepth;
  breaks->add_option("--group", b_group)->required();
  breaks->add_option("--p", b_p);
  breaks->add_option("--H", b_H, "Swan ideal as a cut");
  breaks->add_option("--bound", b_bound, "real bound a > 0, e.g. q(1) or irr(0,1,2)");
  breaks->add_option("--variant", b_variant, "closed|open|open-irrational");
  breaks->add_option("--depth", b_depth);

  // construct-defect
  auto* defect = app.add_subcommand("construct-defect", "build and verify a defect model");
  std::string d_group, d_cut;
  long d_p = 0;
  int d_depth = kDefaultDepth, d_samples = 200;
  defect->add_option("--group", d_group)->required();
  defect->add_option("--p", d_p)->required();
  defect->add_option("--cut", d_cut, "C without minimum, e.g. \"gt q(1)\"")->required();
  defect->add_option("--depth", d_depth);
  defect->add_option("--samples", d_samples);

  // demo-br10
  auto* br10 = app.add_subcommand("demo-br10", "principal ideals cannot tell b^p A from b^p m_A");
  std::string r_group, r_b;
  long r_p = 0;
  int r_samples = 100, r_depth = kDefaultDepth;
  br10->add_option("--group", r_group)->required();
  br10->add_option("--p", r_p)->required();
  br10->add_option("--b", r_b, "v(b) > 0")->required();
  br10->add_option("--samples", r_samples);
  br10->add_option("--depth", r_depth);

  // separation
  auto* sep = app.add_subcommand("separation", "connectivity and separation thresholds");
  std::string s_group, s_gap;
  std::vector<std::string> s_gaps;
  long s_p = 2, s_n = 0;
  sep->add_option("--group", s_group, "defaults to zp:<p>");
  sep->add_option("--p", s_p);
  sep->add_option("--gap", s_gap, "common conjugate gap of a degree-p generator");
  sep->add_option("--gaps", s_gaps, "pairwise gaps for the general bound");
  sep->add_option("--n", s_n, "degree for --gaps");

  // verify
  auto* verify = app.add_subcommand("verify", "sampled theorem checks on defect models");
  std::string v_suite = "claim2", v_group = "zp:2", v_cut = "gt q(1)";
  long v_p = 2;
  int v_depth = kDefaultDepth, v_samples = 200;
  verify->add_option("--suite", v_suite)->check(CLI::IsMember({"claim2", "hlimit", "reduction", "all"}));
  verify->add_option("--group", v_group);
  verify->add_option("--cut", v_cut);
  verify->add_option("--p", v_p);
  verify->add_option("--depth", v_depth);
  verify->add_option("--samples", v_samples);

  if (!args.empty() && !args.front().starts_with("-")) {
    const auto subs = app.get_subcommands([](CLI::App*) { return true; });
    if (std::none_of(subs.begin(), subs.end(), [&](CLI::App* a) { return a->get_name() == args.front(); })) {
      err << "error: unknown subcommand\ntoken: " << args.front() << '\n';
      return 2;
    }
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  Report r;
  int status = 0;
  try {
    std::mt19937_64 rng(resolve_seed(seed_flag));

    if (classify->parsed()) {
      const auto g = parse_group(c_group);
      const long p = checked_prime(c_p);
      const int given = !c_as.empty() + !c_case.empty() + !c_mixed.empty();
      if (given != 1) throw ParseError("give exactly one of --as, --case, --mixed", args.front());
      std::optional<SwanData> s;
      if (!c_as.empty()) {
        CoeffField k(g, p);
        const FieldElement f = parse_series(k, c_as);
        s = classify_equal_char(EqualCharAS{p, f, variable_names(k), std::nullopt}, c_iters);
      } else if (!c_case.empty()) {
        s = classify_equal_char(EqualCharSymbolic{p, parse_case(c_case), opt_element(g, c_c)}, g);
      } else {
        auto e0 = opt_element(g, c_e0);
        if (!e0) throw ParseError("--mixed needs --e0", c_mixed);
        s = classify_mixed_symbolic({p, parse_case(c_mixed), *e0, opt_element(g, c_vb), opt_element(g, c_va)});
      }
      add_swan(r, *s);
    } else if (eval->parsed()) {
      const auto g = parse_group(e_group);
      const Cut H = parse_cut(g, e_H);
      const HullCut I = parse_hull_cut(g, e_I);
      if (I.is_whole()) throw ParseError("I must be a proper ideal", e_I);
      r.section("eval");
      r.add("H", format(H));
      r.add("I", format(I));
      r.add("I-cap-A", format(restrict_to_group(I)));
      r.add("image", to_string(theorem1_eval(H, I)));
    } else if (breaks->parsed()) {
      const auto g = parse_group(b_group);
      const long p = checked_prime(b_p);
      if (b_H.empty() == b_bound.empty()) throw ParseError("give exactly one of --H, --bound", args.front());
      if (!b_H.empty()) {
        const Cut H = parse_cut(g, b_H);
        r.section("input");
        r.add("H", format(H));
        add_break(r, H);
      } else {
        const auto v = parse_se4_variant(b_variant);
        add_swan(r, se4_witness(g, p, parse_point(g, b_bound), v, b_depth));
      }
    } else if (defect->parsed()) {
      const auto g = parse_group(d_group);
      const long p = checked_prime(d_p);
      const Cut C = parse_cut(g, d_cut);
      const DefectModel m = construct_defect_model(g, p, C, d_depth);
      r.section("model");
      r.add("group", format_group(g));
      r.add("p", std::to_string(p));
      r.add("C", format(m.C));
      r.add("D", format(m.D));
      r.add("depth", std::to_string(m.depth));
      for (std::size_t i = 0; i < m.e_seq.size(); ++i)
        r.add("e(" + std::to_string(i) + ")", format(m.e_seq[i]));
      add_swan(r, m.swan());
      const auto claim2 = verify_claim2(m, d_samples, rng);
      const auto steps = fixed_field_reduction(m);
      const long bad_steps = std::count_if(steps.begin(), steps.end(), [](const ReductionStep& s) {
        return !s.h_sigma_fixed || !s.relation_holds;
      });
      const bool hlimit = h_limit_check(m, sample_h_queries(m, 50, rng));
      r.section("verify");
      r.add("claim2-samples", std::to_string(claim2.samples));
      r.add("claim2-vacuous", std::to_string(claim2.vacuous));
      r.add("claim2-failures", std::to_string(claim2.failures()));
      r.add("reduction-steps", std::to_string(steps.size()));
      r.add("reduction-failures", std::to_string(bad_steps));
      r.add("h-limit", hlimit ? "pass" : "fail");
      const long failures = claim2.failures() + bad_steps + (hlimit ? 0 : 1);
      r.add("failures", std::to_string(failures));
      if (failures != 0) status = 1;
    } else if (br10->parsed()) {
      const auto g = parse_group(r_group);
      const long p = checked_prime(r_p);
      const GroupElement b = parse_element(g, r_b);
      const Br10Pair pair = br10_pair(g, p, b, r_depth);
      const HullElement pb = to_hull(int_scale(p, b));
      r.section("br10");
      r.add("H1", format(pair.L1.H));
      r.add("H2", format(pair.L2.H));
      r.add("break1", format(break_of(pair.L1.H)));
      r.add("break2", format(break_of(pair.L2.H)));
      std::uniform_int_distribution<long> num(-24, 24), den_exp(0, 4);
      int agree = 0, total = 0;
      while (total < r_samples) {
        const HullElement x =
            total == 0 ? pb : pb + along_unit(g, Rational(num(rng), 1L << den_exp(rng)));
        if (x.sign() <= 0) continue;
        const HullCut I = HullCut::principal(x);
        const auto a1 = theorem1_eval(pair.L1.H, I), a2 = theorem1_eval(pair.L2.H, I);
        if (a1 == a2) ++agree;
        r.add("I[" + std::to_string(total) + "]", format(I) + " L1=" + to_string(a1) + " L2=" + to_string(a2));
        ++total;
      }
      const HullCut gap = HullCut::open_above(pb);
      r.add("principal-agree", std::to_string(agree) + "/" + std::to_string(total));
      r.add("divergence", format(gap));
      r.add("divergence-L1", to_string(theorem1_eval(pair.L1.H, gap)));
      r.add("divergence-L2", to_string(theorem1_eval(pair.L2.H, gap)));
      if (agree != total || theorem1_eval(pair.L1.H, gap) == theorem1_eval(pair.L2.H, gap)) status = 1;
    } else if (sep->parsed()) {
      const long p = checked_prime(s_p);
      const auto g = parse_group(s_group.empty() ? "zp:" + std::to_string(p) : s_group);
      if (s_gap.empty() == s_gaps.empty()) throw ParseError("give exactly one of --gap, --gaps", args.front());
      r.section("separation");
      r.add("group", format_group(g));
      if (!s_gap.empty()) {
        const HullElement gap = parse_hull_element(g, s_gap);
        const auto t = connectivity_threshold(gap, p);
        r.add("gap", format(gap));
        r.add("p", std::to_string(p));
        r.add("connected", format(t.connected_at));
        r.add("separated", format(t.separated_at));
      } else {
        std::vector<HullElement> gaps;
        for (const auto& s : s_gaps) gaps.push_back(parse_hull_element(g, s));
        r.add("n", std::to_string(s_n));
        r.add("st-bound", format(st_bound(gaps, s_n)));
      }
    } else if (verify->parsed()) {
      const auto g = parse_group(v_group);
      const long p = checked_prime(v_p);
      const Cut C = parse_cut(g, v_cut);
      if (v_depth < 1) throw ParseError("--depth must be >= 1", std::to_string(v_depth));
      if (v_samples < 1) throw ParseError("--samples must be >= 1", std::to_string(v_samples));
      const DefectModel m = construct_defect_model(g, p, C, v_depth);
      const bool all = v_suite == "all";
      long failures = 0;
      r.section("verify");
      r.add("suite", v_suite);
      r.add("group", format_group(g));
      r.add("p", std::to_string(p));
      r.add("C", format(C));
      r.add("depth", std::to_string(v_depth));
      if (all || v_suite == "claim2") {
        const auto rep = verify_claim2(m, v_samples, rng);
        r.add("samples", std::to_string(rep.samples));
        r.add("vacuous", std::to_string(rep.vacuous));
        r.add("divisibility-failures", std::to_string(rep.divisibility_failures));
        r.add("valuation-failures", std::to_string(rep.valuation_failures));
        failures += rep.failures();
      }
      if (all || v_suite == "hlimit") {
        // queries resolved at depth 1 must stay resolved when deepening
        const auto shallow = construct_defect_model(g, p, C, 1);
        const auto qs = sample_h_queries(shallow, v_samples, rng);
        const auto base = h_limit_queries(shallow, qs);
        long bad = 0;
        for (int n = 1; n <= v_depth; ++n) {
          const auto model = construct_defect_model(g, p, C, n);
          if (!h_limit_check(model, qs)) ++bad;
          const auto h = h_limit_queries(model, qs);
          for (std::size_t i = 0; i < qs.size(); ++i)
            if (base[i].witness && h[i].witness != base[i].witness) ++bad;
        }
        r.add("queries", std::to_string(qs.size()));
        r.add("h-limit-failures", std::to_string(bad));
        failures += bad;
      }
      if (all || v_suite == "reduction") {
        const auto steps = fixed_field_reduction(m);
        long bad = 0;
        for (const auto& s : steps) {
          r.add("step(" + std::to_string(s.index) + ")", "v(f) = " + format(s.valuation));
          if (!s.h_sigma_fixed || !s.relation_holds) ++bad;
        }
        r.add("reduction-failures", std::to_string(bad));
        failures += bad;
      }
      r.add("failures", std::to_string(failures));
      if (failures != 0) status = 1;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\ntoken: " << e.token() << '\n';
    return 2;
  } catch (const InvariantViolation& e) {
    err << "invariant failure: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  out << r.render(fmt == "kv");
  return status;
}

} // namespace ramify::cli
