#include "borbit/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "borbit/orbit.hpp"
#include "borbit/rook.hpp"

namespace borbit {
namespace {

constexpr int kMaxSamples = 8;

void note_failure(SuiteResult& r, const std::string& what) {
  ++r.failures;
  if (static_cast<int>(r.samples.size()) < kMaxSamples) r.samples.push_back(what);
}

std::string group_name(GroupMode mode, int n) {
  return mode == GroupMode::C ? "W(C_" + std::to_string(n) + ")" : "S_" + std::to_string(n);
}

int action_trials(int n) { return n <= 3 ? 200 : n == 4 ? 60 : 12; }

std::string rstar_line(const RankTables& t) {
  std::ostringstream os;
  for (int r = 0; r < t.m; ++r) {
    if (r) os << " | ";
    for (int c = 0; c < t.m; ++c) {
      if (c) os << ' ';
      os << t.lower_at(r, c);
    }
  }
  return os.str();
}

nlohmann::ordered_json rstar_json(const RankTables& t) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int r = 0; r < t.m; ++r) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int c = 0; c < t.m; ++c) row.push_back(t.lower_at(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string support_str(const std::vector<RootC>& d) {
  std::string s = "{";
  for (size_t i = 0; i < d.size(); ++i) {
    if (i) s += ", ";
    s += d[i].str();
  }
  return s + "}";
}

// 0 on success, 2 on I/O failure
int emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream os(cfg.output, std::ios::binary);
  os << text;
  if (!os) {
    std::cerr << "error: cannot write " << cfg.output << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

SuiteResult suite_order_equivalence(const BruhatPoset& poset) {
  SuiteResult r;
  r.name = "order-equivalence";
  r.statement = "Bruhat order coincides with the entrywise R and R* orders on all ordered "
                "pairs of involutions of " + group_name(poset.mode(), poset.n());
  auto rep = verify_equivalences(poset);
  r.checked = rep.pairs;
  r.failures = rep.mismatches;
  const auto& inv = poset.involution_indices();
  for (const auto& v : rep.counterexamples) {
    if (static_cast<int>(r.samples.size()) >= kMaxSamples) break;
    std::ostringstream os;
    os << "sigma=" << window_of_flat(poset.element(inv[v.a]), poset.mode())
       << " tau=" << window_of_flat(poset.element(inv[v.b]), poset.mode())
       << " bruhat=" << v.bruhat << " R=" << v.rank_full << " R*=" << v.rank_lower;
    r.samples.push_back(os.str());
  }
  return r;
}

SuiteResult suite_dimension(const BruhatPoset& poset) {
  if (poset.mode() != GroupMode::C)
    throw std::invalid_argument("dimension suite needs the type C poset");
  SuiteResult r;
  r.name = "dimension";
  r.statement = "tangent rank of the linearized action at f_sigma equals the Coxeter length "
                "for every involution of " + group_name(poset.mode(), poset.n());
  for (int idx : poset.involution_indices()) {
    Involution sigma(SignedPermutation::from_flat(poset.element(idx)));
    ++r.checked;
    int dim = orbit_dimension(sigma);
    if (dim != poset.length(idx))
      note_failure(r, "sigma=" + sigma.window() + " rank=" + std::to_string(dim) +
                          " length=" + std::to_string(poset.length(idx)));
  }
  return r;
}

SuiteResult suite_sw_rank_invariance(int n, std::uint64_t seed, int trials) {
  SuiteResult r;
  r.name = "sw-rank-invariance";
  r.statement = "every south-west region rank of u.f_sigma on strictly-lower boxes equals "
                "the R* entry of sigma, seeded unipotent u, n=" + std::to_string(n);
  std::mt19937_64 rng(seed);
  for (const auto& sigma : enumerate_involutions(n)) {
    auto f = support_functional(sigma);
    auto tables = rank_tables(rook_placement(sigma.perm().to_flat(), GroupMode::C));
    for (int t = 0; t < trials; ++t) {
      auto u = random_unipotent(n, rng);
      auto moved = dual_action(u, f);
      ++r.checked;
      for (int row = 0; row < 2 * n; ++row)
        for (int col = 0; col < row; ++col) {
          int i = signed_of_pos(row, n), j = signed_of_pos(col, n);
          int got = sw_region_rank(moved, i, j);
          int want = tables.lower_at(row, col);
          if (got != want)
            note_failure(r, "sigma=" + sigma.window() + " trial=" + std::to_string(t) +
                                " pi(" + std::to_string(i) + "," + std::to_string(j) +
                                ")=" + std::to_string(got) + " want " + std::to_string(want));
        }
    }
  }
  return r;
}

SuiteResult suite_degeneration(int n) {
  SuiteResult r;
  r.name = "degeneration";
  r.statement = "the curve g(s) moves f_tau onto the expected coefficients and "
                "g(s).f_tau -> f_sigma as s -> 0, all 1 <= i < k < j <= " + std::to_string(n);
  for (int i = 1; i <= n; ++i)
    for (int k = i + 1; k <= n; ++k)
      for (int j = k + 1; j <= n; ++j) {
        ++r.checked;
        auto curve = make_degeneration_curve(i, k, j, n);
        auto rep = verify_degeneration(curve);
        std::string tag = "(i,k,j)=(" + std::to_string(i) + "," + std::to_string(k) + "," +
                          std::to_string(j) + ")";
        if (!rep.ok()) {
          note_failure(r, tag + (rep.limit_exists ? " limit differs from f_sigma"
                                                  : " limit does not exist"));
          continue;
        }
        bool coeffs_ok = true;
        for (const auto& [root, value] : rep.coefficients) {
          Laurent want;  // zero
          if (root == RootC::sum(i, j) || root == RootC::lng(k)) want = Laurent(1);
          else if (root == RootC::sum(i, k)) want = Laurent::monomial(Rat(-1), 1);
          else if (root == RootC::lng(i)) want = Laurent::monomial(Rat(1), 2);
          if (value != want) {
            note_failure(r, tag + " coefficient at " + root.str() + " is " + value.str() +
                                ", want " + want.str());
            coeffs_ok = false;
            break;
          }
        }
        if (!coeffs_ok) continue;
      }
  return r;
}

SuiteResult suite_rescaling(int n) {
  SuiteResult r;
  r.name = "rescaling";
  r.statement = "the torus product carries f_D to f_{D,xi} for every support at n=" +
                std::to_string(n) + " and every xi with values in {1, 2, -1}";
  const Rat vals[3] = {Rat(1), Rat(2), Rat(-1)};
  for (const auto& sigma : enumerate_involutions(n)) {
    auto d = support(sigma);
    std::vector<size_t> pick(d.size(), 0);
    while (true) {
      std::map<RootC, Rat> xi;
      for (size_t t = 0; t < d.size(); ++t) xi[d[t]] = vals[pick[t]];
      ++r.checked;
      auto got = rescale_functional(d, xi, n);
      auto want = Functional<Rat>::from_coeffs(n, xi);
      if (!(got == want)) {
        std::string tag = "sigma=" + sigma.window() + " xi=(";
        for (size_t t = 0; t < d.size(); ++t)
          tag += (t ? "," : "") + rat_str(vals[pick[t]]);
        note_failure(r, tag + ")");
      }
      size_t t = 0;
      while (t < pick.size() && pick[t] == 2) pick[t++] = 0;
      if (t == pick.size()) break;
      ++pick[t];
    }
  }
  return r;
}

SuiteResult suite_action_axioms(int n, std::uint64_t seed, int trials) {
  SuiteResult r;
  r.name = "action-axioms";
  r.statement = "(gh).lambda = g.(h.lambda) and id.lambda = lambda for seeded random "
                "Borel pairs and functionals, n=" + std::to_string(n);
  std::mt19937_64 rng(seed);
  auto id = GroupElem<Rat>::identity(n);
  for (int t = 0; t < trials; ++t) {
    auto g = random_borel(n, rng);
    auto h = random_borel(n, rng);
    auto lam = random_functional(n, rng);
    ++r.checked;
    if (!(dual_action(gcompose(g, h), lam) == dual_action(g, dual_action(h, lam))))
      note_failure(r, "associativity fails at trial " + std::to_string(t));
    else if (!(dual_action(id, lam) == lam))
      note_failure(r, "identity action fails at trial " + std::to_string(t));
  }
  return r;
}

namespace {

std::string verify_text(const RunConfig& cfg, const std::vector<SuiteResult>& suites,
                        bool all_passed) {
  std::ostringstream os;
  os << "verify n=" << cfg.n << " mode=" << mode_str(cfg.mode) << " seed=" << cfg.seed << "\n";
  for (const auto& s : suites) {
    os << "  [" << (s.passed() ? "PASS" : "FAIL") << "] " << s.name << ": " << s.checked
       << " instances";
    if (!s.passed()) os << ", " << s.failures << " failures";
    os << "\n";
    os << "         " << s.statement << "\n";
    for (const auto& line : s.samples) os << "         sample: " << line << "\n";
  }
  os << "RESULT: " << (all_passed ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string verify_json(const RunConfig& cfg, const std::vector<SuiteResult>& suites,
                        bool all_passed) {
  nlohmann::ordered_json doc;
  doc["command"] = "verify";
  doc["n"] = cfg.n;
  doc["mode"] = mode_str(cfg.mode);
  doc["seed"] = cfg.seed;
  doc["suites"] = nlohmann::ordered_json::array();
  for (const auto& s : suites) {
    nlohmann::ordered_json js;
    js["name"] = s.name;
    js["statement"] = s.statement;
    js["checked"] = s.checked;
    js["failures"] = s.failures;
    js["samples"] = s.samples;
    js["passed"] = s.passed();
    doc["suites"].push_back(std::move(js));
  }
  doc["passed"] = all_passed;
  return doc.dump(2) + "\n";
}

}  // namespace

int cmd_verify(const RunConfig& cfg) {
  if (cfg.format != "text" && cfg.format != "json" && cfg.format != "csv") {
    std::cerr << "error: verify supports formats text, json, csv\n";
    return 2;
  }
  try {
    auto poset = BruhatPoset::build(cfg.n, cfg.mode, cfg.max_n);
    if (cfg.format == "csv") {
      // raw pair table of the order-equivalence check
      auto rep = verify_equivalences(poset, true);
      int rc = emit(cfg, equivalence_csv(rep, poset));
      return rc != 0 ? rc : rep.mismatches == 0 ? 0 : 1;
    }
    std::vector<SuiteResult> suites;
    suites.push_back(suite_order_equivalence(poset));
    if (cfg.mode == GroupMode::C) {
      suites.push_back(suite_dimension(poset));
      if (cfg.n <= 3) {
        suites.push_back(suite_sw_rank_invariance(cfg.n, cfg.seed, 100));
        suites.push_back(suite_rescaling(cfg.n));
      }
      if (cfg.n >= 3) suites.push_back(suite_degeneration(cfg.n));
      suites.push_back(suite_action_axioms(cfg.n, cfg.seed, action_trials(cfg.n)));
    }
    bool all_passed = std::all_of(suites.begin(), suites.end(),
                                  [](const SuiteResult& s) { return s.passed(); });
    std::string text = cfg.format == "json" ? verify_json(cfg, suites, all_passed)
                                            : verify_text(cfg, suites, all_passed);
    int rc = emit(cfg, text);
    return rc != 0 ? rc : all_passed ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_enumerate(const RunConfig& cfg) {
  if (cfg.format != "text" && cfg.format != "json" && cfg.format != "csv") {
    std::cerr << "error: enumerate supports formats text, json, csv\n";
    return 2;
  }
  try {
    auto poset = BruhatPoset::build(cfg.n, cfg.mode, cfg.max_n);
    const auto& inv = poset.involution_indices();
    struct Row {
      std::string window;
      int length;
      std::vector<RootC> supp;
      RankTables tables;
    };
    std::vector<Row> rows;
    for (int idx : inv) {
      Row row;
      const auto& flat = poset.element(idx);
      row.window = window_of_flat(flat, cfg.mode);
      row.length = poset.length(idx);
      if (cfg.mode == GroupMode::C) {
        row.supp = support(Involution(SignedPermutation::from_flat(flat)));
      } else {
        std::vector<int> images(flat.size());
        for (size_t i = 0; i < flat.size(); ++i) images[i] = flat[i] + 1;
        row.supp = support_a(images);
      }
      row.tables = rank_tables(rook_placement(flat, cfg.mode));
      rows.push_back(std::move(row));
    }
    std::ostringstream os;
    if (cfg.format == "text") {
      os << "enumerate n=" << cfg.n << " mode=" << mode_str(cfg.mode) << ": " << rows.size()
         << " involutions\n";
      for (const auto& row : rows) {
        os << row.window << "  length=" << row.length << "  support=" << support_str(row.supp)
           << "\n    R*: " << rstar_line(row.tables) << "\n";
      }
    } else if (cfg.format == "csv") {
      os << "window,length,support,rstar\n";
      for (const auto& row : rows) {
        std::string supp;
        for (size_t i = 0; i < row.supp.size(); ++i) supp += (i ? ";" : "") + row.supp[i].str();
        std::string rs;
        for (int r = 0; r < row.tables.m; ++r) {
          if (r) rs += ";";
          for (int c = 0; c < row.tables.m; ++c)
            rs += (c ? " " : "") + std::to_string(row.tables.lower_at(r, c));
        }
        os << csv_quote(row.window) << "," << row.length << "," << csv_quote(supp) << ","
           << csv_quote(rs) << "\n";
      }
    } else {
      nlohmann::ordered_json doc;
      doc["command"] = "enumerate";
      doc["n"] = cfg.n;
      doc["mode"] = mode_str(cfg.mode);
      doc["count"] = rows.size();
      doc["involutions"] = nlohmann::ordered_json::array();
      for (const auto& row : rows) {
        nlohmann::ordered_json jr;
        jr["window"] = row.window;
        jr["length"] = row.length;
        jr["support"] = nlohmann::ordered_json::array();
        for (const auto& a : row.supp) jr["support"].push_back(a.str());
        jr["rstar"] = rstar_json(row.tables);
        doc["involutions"].push_back(std::move(jr));
      }
      os << doc.dump(2) << "\n";
    }
    return emit(cfg, os.str());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_hasse(const RunConfig& cfg) {
  if (cfg.format != "dot" && cfg.format != "json") {
    std::cerr << "error: hasse supports formats dot, json\n";
    return 2;
  }
  try {
    auto p = involution_poset(BruhatPoset::build(cfg.n, cfg.mode, cfg.max_n));
    return emit(cfg, cfg.format == "dot" ? hasse_dot(p) : hasse_json(p).dump(2) + "\n");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_degenerate(const RunConfig& cfg, int i, int k, int j) {
  if (cfg.format != "text" && cfg.format != "json") {
    std::cerr << "error: degenerate supports formats text, json\n";
    return 2;
  }
  try {
    auto curve = make_degeneration_curve(i, k, j, cfg.n);
    auto rep = verify_degeneration(curve);
    // the five roots of the case split, leading the report in this order
    const std::vector<RootC> leads = {RootC::sum(i, j), RootC::lng(k), RootC::sum(k, j),
                                      RootC::sum(i, k), RootC::lng(i)};
    std::ostringstream os;
    if (cfg.format == "text") {
      os << "degeneration (i,k,j)=(" << i << "," << k << "," << j << ") n=" << cfg.n << "\n";
      os << "sigma = " << curve.sigma.window() << "  support " << support_str(support(curve.sigma))
         << "\n";
      os << "tau   = " << curve.tau.window() << "  support " << support_str(support(curve.tau))
         << "\n";
      os << "g(s) =";
      for (const auto& f : curve.factors)
        os << " " << (f.kind == CurveFactor::Kind::unipotent ? "x" : "h") << "[" << f.root.str()
           << "](" << f.arg.str() << ")";
      os << "\ncoefficients of g(s).f_tau:\n";
      auto coeff_of = [&](const RootC& a) {
        for (const auto& [root, value] : rep.coefficients)
          if (root == a) return value;
        return Laurent();
      };
      for (const auto& a : leads) os << "  " << a.str() << " : " << coeff_of(a).str() << "\n";
      bool extra = false;
      for (const auto& [root, value] : rep.coefficients) {
        if (std::find(leads.begin(), leads.end(), root) != leads.end()) continue;
        if (value.is_zero()) continue;
        os << "  " << root.str() << " : " << value.str() << "\n";
        extra = true;
      }
      if (!extra) os << "  (all other coefficients vanish)\n";
      os << "limit at s=0: " << (rep.limit_exists ? "exists" : "does not exist");
      if (rep.limit_exists)
        os << ", " << (rep.limit_matches ? "equals f_sigma" : "differs from f_sigma");
      os << "\n" << (rep.ok() ? "OK" : "MISMATCH") << "\n";
    } else {
      nlohmann::ordered_json doc;
      doc["command"] = "degenerate";
      doc["n"] = cfg.n;
      doc["i"] = i;
      doc["k"] = k;
      doc["j"] = j;
      doc["sigma"] = curve.sigma.window();
      doc["tau"] = curve.tau.window();
      doc["factors"] = nlohmann::ordered_json::array();
      for (const auto& f : curve.factors) {
        nlohmann::ordered_json jf;
        jf["kind"] = f.kind == CurveFactor::Kind::unipotent ? "x" : "h";
        jf["root"] = f.root.str();
        jf["arg"] = f.arg.str();
        doc["factors"].push_back(std::move(jf));
      }
      doc["coefficients"] = nlohmann::ordered_json::array();
      for (const auto& [root, value] : rep.coefficients) {
        nlohmann::ordered_json jc;
        jc["root"] = root.str();
        jc["value"] = value.str();
        doc["coefficients"].push_back(std::move(jc));
      }
      doc["limit_exists"] = rep.limit_exists;
      doc["limit_matches"] = rep.limit_matches;
      doc["passed"] = rep.ok();
      os << doc.dump(2) << "\n";
    }
    int rc = emit(cfg, os.str());
    return rc != 0 ? rc : rep.ok() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_compare(const RunConfig& cfg, const std::string& win_a, const std::string& win_b) {
  if (cfg.format != "text" && cfg.format != "json") {
    std::cerr << "error: compare supports formats text, json\n";
    return 2;
  }
  try {
    FlatPerm fa = flat_of_window(win_a, cfg.mode);
    FlatPerm fb = flat_of_window(win_b, cfg.mode);
    if (fa.size() != fb.size())
      throw std::invalid_argument("the two windows describe different ranks");
    if (!flat_is_involution(fa) || !flat_is_involution(fb))
      throw std::invalid_argument("compare expects involutions");
    int n = cfg.mode == GroupMode::C ? static_cast<int>(fa.size()) / 2
                                     : static_cast<int>(fa.size());
    auto poset = BruhatPoset::build(n, cfg.mode, cfg.max_n);
    bool bruhat = poset.leq(poset.index_of(fa), poset.index_of(fb));
    auto ta = rank_tables(rook_placement(fa, cfg.mode));
    auto tb = rank_tables(rook_placement(fb, cfg.mode));
    bool rank_full = entrywise_leq(ta.full, tb.full);
    bool rank_lower = entrywise_leq(ta.lower, tb.lower);
    bool consistent = bruhat == rank_full && bruhat == rank_lower;
    std::ostringstream os;
    if (cfg.format == "text") {
      os << "compare n=" << n << " mode=" << mode_str(cfg.mode) << "\n";
      os << "sigma = " << win_a << "\ntau   = " << win_b << "\n";
      os << "bruhat leq : " << (bruhat ? "true" : "false") << "\n";
      os << "R leq      : " << (rank_full ? "true" : "false") << "\n";
      os << "R* leq     : " << (rank_lower ? "true" : "false") << "\n";
      os << "consistent : " << (consistent ? "yes" : "NO") << "\n";
      os << "R*(sigma): " << rstar_line(ta) << "\n";
      os << "R*(tau):   " << rstar_line(tb) << "\n";
    } else {
      nlohmann::ordered_json doc;
      doc["command"] = "compare";
      doc["n"] = n;
      doc["mode"] = mode_str(cfg.mode);
      doc["sigma"] = win_a;
      doc["tau"] = win_b;
      doc["bruhat"] = bruhat;
      doc["rank_leq"] = rank_full;
      doc["lower_rank_leq"] = rank_lower;
      doc["consistent"] = consistent;
      doc["rstar_sigma"] = rstar_json(ta);
      doc["rstar_tau"] = rstar_json(tb);
      os << doc.dump(2) << "\n";
    }
    int rc = emit(cfg, os.str());
    return rc != 0 ? rc : consistent ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace borbit
