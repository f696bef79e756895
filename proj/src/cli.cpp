#include "toricapolar/cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "toricapolar/apolarity.hpp"
#include "toricapolar/error.hpp"
#include "toricapolar/io.hpp"
#include "toricapolar/rank_bounds.hpp"
#include "toricapolar/scheme_ideals.hpp"
#include "toricapolar/secant_probe.hpp"

namespace toricapolar {

namespace {

using nlohmann::json;

constexpr const char* kExact = "exact";
constexpr const char* kModP = "mod-p lower bound";
constexpr const char* kStabilized = "heuristic-stabilized";

class Output {
 public:
  Output(std::ostream& out, bool records, std::string command)
      : out_(out), records_(records), command_(std::move(command)) {}

  bool records() const { return records_; }

  void text(const std::string& line) {
    if (!records_) out_ << line << '\n';
  }

  void record(json j) {
    if (!records_) return;
    j["command"] = command_;
    out_ << j.dump() << '\n';
  }

 private:
  std::ostream& out_;
  bool records_;
  std::string command_;
};

std::string tuple(const DegreeClass& d) {
  std::vector<std::int64_t> all = d.free_part;
  all.insert(all.end(), d.torsion_part.begin(), d.torsion_part.end());
  if (all.size() == 1) return std::to_string(all[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < all.size(); ++i) s += (i ? "," : "") + std::to_string(all[i]);
  return s + ")";
}

std::vector<std::string> split_generators(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const auto& r : raw) {
    std::stringstream ss(r);
    std::string item;
    while (std::getline(ss, item, ','))
      if (item.find_first_not_of(" \t") != std::string::npos) out.push_back(item);
  }
  if (out.empty()) throw Error(ErrorKind::InvalidInput, "no ideal generators given");
  return out;
}

std::string join(const std::vector<std::size_t>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

std::string label_for(const LengthEstimate& est) { return est.stabilized ? kStabilized : "not stabilized"; }

json samples_json(const LengthEstimate& est) {
  json s = json::array();
  for (const auto& [k, d] : est.samples) s.push_back({k, d});
  return s;
}

std::string samples_text(const LengthEstimate& est) {
  std::string s;
  for (const auto& [k, d] : est.samples) s += (s.empty() ? "" : " ") + std::to_string(d);
  return s;
}

struct Options {
  std::string fan;
  std::string degree;
  std::string form;
  std::string box;
  std::string beta;
  std::vector<std::string> ideal;
  std::string ample;
  std::size_t window = 3;
  std::size_t max_k = 12;
  std::string terms;
  std::string family;
  std::size_t r = 1;
  std::uint64_t prime = 101;
  bool prime_given = false;
  std::size_t trials = 5;
  std::uint64_t seed = 0;
  std::vector<std::size_t> chart;
  std::string at;
};

// ---------------------------------------------------------------- commands

void cmd_classgroup(const CoxRing& ring, const Options&, Output& o) {
  std::string line = "Cl = " + ring.group().describe() + "; deg";
  json degs = json::object();
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    const auto& d = ring.fan().var_degrees()[i];
    line += " " + ring.names(Side::Primal)[i] + "=" + tuple(d);
    degs[ring.names(Side::Primal)[i]] = ring.group().format(d);
  }
  o.text(line);
  const auto comp = check_complete(ring.fan());
  o.text(std::string("complete: ") + completeness_name(comp) + (ring.fan().asserted_complete() ? " (asserted)" : ""));
  std::string w;
  for (auto x : ring.certificate().weight) w += (w.empty() ? "" : ",") + std::to_string(x);
  o.text("positivity weight: (" + w + ")");
  o.record({{"group", ring.group().describe()},
            {"degrees", degs},
            {"completeness", completeness_name(comp)},
            {"weight", ring.certificate().weight},
            {"provenance", kExact}});
}

void cmd_basis(const CoxRing& ring, const Options& opt, Output& o) {
  const auto alpha = ring.group().parse(opt.degree);
  const auto& basis = ring.basis(alpha);
  std::vector<std::string> mons;
  for (const auto& m : basis) mons.push_back(ring.format(m, Side::Primal));
  o.text("dim S_" + tuple(alpha) + " = " + std::to_string(basis.size()));
  for (const auto& m : mons) o.text(m);
  o.record({{"degree", ring.group().format(alpha)}, {"dimension", basis.size()}, {"monomials", mons}, {"provenance", kExact}});
}

void cmd_hilbert(const CoxRing& ring, const Options& opt, Output& o) {
  const auto f = make_form(ring, opt.form);
  const auto box = parse_box(ring.group(), opt.box);
  const auto grid = hilbert_grid(ring, f, box);
  const bool plane = ring.group().free_rank() == 2 && ring.group().torsion_orders().empty();
  if (plane) {
    const auto& fr = box.free_ranges;
    for (auto j = fr[1].first; j <= fr[1].second; ++j) {
      std::string row = "j=" + std::to_string(j) + ":";
      for (auto i = fr[0].first; i <= fr[0].second; ++i) row += " " + std::to_string(grid.at(DegreeClass{{i, j}, {}}));
      o.text(row);
    }
  } else {
    for (const auto& d : grid.degrees) o.text("h" + (d.free_part.size() + d.torsion_part.size() == 1 ? "(" + tuple(d) + ")" : tuple(d)) + " = " + std::to_string(grid.at(d)));
  }
  for (const auto& d : grid.degrees)
    o.record({{"degree", ring.group().format(d)}, {"hilbert", grid.at(d)}, {"provenance", kExact}});
  const auto sym = check_symmetry(ring, f, box);
  if (sym.symmetric) {
    o.text("symmetry: PASS");
    o.record({{"symmetry", "PASS"}, {"provenance", kExact}});
  } else {
    o.text("symmetry: FAIL at " + tuple(*sym.witness) + " (" + std::to_string(sym.value) + " vs " + std::to_string(sym.mirror_value) + ")");
    o.record({{"symmetry", "FAIL"}, {"witness", ring.group().format(*sym.witness)}, {"provenance", kExact}});
  }
}

void bound_lines(const BoundReport& b, Output& o) {
  o.text("border rank >= " + std::to_string(b.border_bound) + " (exact)");
  o.text("rank >= " + std::to_string(b.rank_bound) + " (exact)");
  if (b.cactus_bound)
    o.text("cactus rank >= " + std::to_string(*b.cactus_bound) + " (exact)");
  else
    o.text("cactus bound: suppressed (degree not Cartier)");
}

json bound_json(const CoxRing& ring, const BoundReport& b) {
  json j{{"beta", ring.group().format(b.beta)},
         {"rows", b.rows},
         {"cols", b.cols},
         {"cat_rank", b.cat_rank},
         {"cartier", b.cartier},
         {"border_bound", b.border_bound},
         {"rank_bound", b.rank_bound},
         {"provenance", kExact}};
  j["cactus_bound"] = b.cactus_bound ? json(*b.cactus_bound) : json(nullptr);
  return j;
}

void cmd_cat(const CoxRing& ring, const Options& opt, Output& o) {
  const auto f = make_form(ring, opt.form);
  const auto beta = ring.group().parse(opt.beta);
  const auto b = bound_report(ring, f, beta);
  o.text("C_F at " + tuple(b.beta) + ": " + std::to_string(b.rows) + " x " + std::to_string(b.cols) + ", rank " +
         std::to_string(b.cat_rank) + " (exact)");
  o.text(std::string("Cartier: ") + (b.cartier ? "yes" : "no"));
  bound_lines(b, o);
  o.record(bound_json(ring, b));
}

void cmd_bounds(const CoxRing& ring, const Options& opt, Output& o) {
  const auto f = make_form(ring, opt.form);
  const auto best = best_bounds(ring, f, parse_box(ring.group(), opt.box));
  for (const auto& b : best.sweep) {
    o.text(tuple(b.beta) + ": rank " + std::to_string(b.cat_rank) + (b.cartier ? " Cartier" : " non-Cartier"));
    o.record(bound_json(ring, b));
  }
  auto report = [&](const char* kind, const std::optional<BestBound>& bb) {
    if (!bb) {
      o.text(std::string(kind) + ": no admissible degree in box");
      o.record({{"best", kind}, {"value", nullptr}, {"provenance", kExact}});
      return;
    }
    o.text(std::string(kind) + " >= " + std::to_string(bb->value) + " at " + tuple(bb->beta) + " (exact)");
    o.record({{"best", kind}, {"value", bb->value}, {"beta", ring.group().format(bb->beta)}, {"provenance", kExact}});
  };
  report("border rank", best.border);
  report("rank", best.rank);
  report("cactus rank", best.cactus);
}

void cmd_contains(const CoxRing& ring, const Options& opt, Output& o) {
  const auto f = make_form(ring, opt.form);
  const auto ideal = make_ideal(ring, split_generators(opt.ideal));
  const bool ok = apolar_contains(ring, ideal, f);
  o.text(std::string("I in F^perp: ") + (ok ? "true" : "false"));
  for (const auto& g : ideal.generators) {
    auto c = contract(g, f.form);
    if (!c.is_zero()) o.text("  " + ring.format(g) + " _| F = " + ring.format(c));
  }
  o.record({{"contained", ok}, {"provenance", kExact}});
}

void length_lines(const LengthEstimate& est, std::size_t window, Output& o) {
  o.text("length = " + std::to_string(est.value) + " (" + label_for(est) + ", window " + std::to_string(window) + ")");
  o.text("samples: " + samples_text(est));
  o.text("valid if the scheme is zero-dimensional and I is saturated in high degrees");
}

void cmd_length(const CoxRing& ring, const Options& opt, Output& o) {
  const auto ideal = make_ideal(ring, split_generators(opt.ideal));
  const auto ample = ring.group().parse(opt.ample);
  const auto est = length_estimate(ring, ideal, ample, opt.window, opt.max_k);
  length_lines(est, opt.window, o);
  o.record({{"length", est.value},
            {"stabilized", est.stabilized},
            {"samples", samples_json(est)},
            {"provenance", est.stabilized ? kStabilized : "not stabilized"}});
}

void cmd_cactus(const CoxRing& ring, const Options& opt, Output& o) {
  const auto f = make_form(ring, opt.form);
  const auto ideal = make_ideal(ring, split_generators(opt.ideal));
  const auto ample = ring.group().parse(opt.ample);
  const auto cert = cactus_certificate(ring, f, ideal, ample, opt.window, opt.max_k);
  o.text("I in F^perp: true (exact)");
  length_lines(cert.length, opt.window, o);
  if (cert.claimed)
    o.text("cr(F) <= " + std::to_string(cert.length.value));
  else
    o.text("no claim: length did not stabilize");
  json j{{"contained", true},
         {"length", cert.length.value},
         {"stabilized", cert.length.stabilized},
         {"samples", samples_json(cert.length)},
         {"provenance", cert.length.stabilized ? kStabilized : "not stabilized"}};
  j["cactus_upper_bound"] = cert.claimed ? json(cert.length.value) : json(nullptr);
  o.record(j);
}

void cmd_decompose(const CoxRing& ring, const Options& opt, Output& o) {
  const auto f = make_form(ring, opt.form);
  const auto terms = parse_terms_file(ring, read_text_file(opt.terms));
  const auto check = verify_decomposition(ring, f, terms);
  o.text(std::string("equal: ") + (check.equal ? "true" : "false"));
  if (check.equal) o.text("rank <= " + std::to_string(terms.size()));
  else o.text("residual: " + ring.format(check.residual));
  json j{{"equal", check.equal}, {"residual", ring.format(check.residual)}, {"terms", terms.size()}, {"provenance", kExact}};
  o.record(j);
}

void cmd_limit(const CoxRing& ring, const Options& opt, Output& o) {
  const auto f = make_form(ring, opt.form);
  const auto fam = parse_family_file(ring, read_text_file(opt.family));
  const auto cert = limit_certificate(ring, f, fam);
  const auto residue = format_residue(ring, fam, cert.residue);
  o.text(cert.valid ? "VALID" : "INVALID");
  o.text("residue: " + residue);
  if (cert.valid) o.text("border rank <= " + std::to_string(cert.border_rank_bound));
  json j{{"verdict", cert.valid ? "VALID" : "INVALID"}, {"residue", residue}, {"provenance", kExact}};
  j["border_upper_bound"] = cert.valid ? json(cert.border_rank_bound) : json(nullptr);
  o.record(j);
}

std::optional<Chart> chart_option(const CoxRing& ring, const Options& opt) {
  if (opt.chart.empty()) return std::nullopt;
  return make_chart(ring.fan(), opt.chart);
}

void cmd_terracini(const CoxRing& ring, const Options& opt, Output& o) {
  const auto alpha = ring.group().parse(opt.degree);
  TerraciniOptions t;
  t.r = opt.r;
  t.prime = opt.prime;
  t.trials = opt.trials;
  t.seed = opt.seed;
  t.chart = chart_option(ring, opt);
  const auto res = terracini_probe(ring, alpha, t);
  const Chart chart = t.chart ? *t.chart : default_chart(ring.fan());
  const std::string p = std::to_string(opt.prime);
  o.text("rank " + std::to_string(res.rank) + " over Z/" + p + " (" + std::string(kModP) + " for the rank over Q)");
  o.text("dim sigma_" + std::to_string(opt.r) + " >= " + std::to_string(res.estimated_dim) + " in P^" +
         std::to_string(res.space_dim - 1));
  o.text(std::string("fills space: ") + (res.fills_space ? "yes" : "no"));
  o.text("trial ranks: " + join(res.trial_ranks, " ") + "; seed " + std::to_string(opt.seed) + ", trials " +
         std::to_string(opt.trials) + ", free chart variables " + join(chart.free_vars, ","));
  if (res.degenerate)
    o.text(std::string(error_name(ErrorKind::DegenerateSample)) + ": every trial stayed below the expected rank " +
           std::to_string(res.expected_rank));
  o.text("basepoint-freeness of the degree is assumed");
  o.record({{"rank", res.rank},
            {"estimated_dim", res.estimated_dim},
            {"space_dim", res.space_dim},
            {"expected_rank", res.expected_rank},
            {"fills_space", res.fills_space},
            {"degenerate", res.degenerate},
            {"trial_ranks", res.trial_ranks},
            {"prime", opt.prime},
            {"seed", opt.seed},
            {"trials", opt.trials},
            {"provenance", kModP}});
}

void cmd_det(const CoxRing& ring, const Options& opt, Output& o) {
  const auto alpha = ring.group().parse(opt.degree);
  const auto at = parse_rational_list(opt.at);
  const auto chart = chart_option(ring, opt);
  if (opt.prime_given) {
    const auto d = terracini_determinant_mod(ring, alpha, opt.r, at, opt.prime, chart);
    o.text("det = " + std::to_string(d) + " (exact over Z/" + std::to_string(opt.prime) + ")");
    o.record({{"det", d}, {"field", "Z/" + std::to_string(opt.prime)}, {"provenance", kExact}});
  } else {
    const auto d = terracini_determinant(ring, alpha, opt.r, at, chart);
    o.text("det = " + d.get_str() + " (exact over Q)");
    o.record({{"det", d.get_str()}, {"field", "Q"}, {"provenance", kExact}});
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Apolarity and rank bounds on simplicial toric varieties", "toricapolar"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "text or records")->check(CLI::IsMember({"text", "records"}));

  Options opt;
  CLI::Option* det_prime = nullptr;
  std::map<CLI::App*, std::function<void(const CoxRing&, const Options&, Output&)>> handlers;

  auto sub = [&](const char* name, const char* help, auto handler) {
    auto* s = app.add_subcommand(name, help);
    s->add_option("fan", opt.fan, "fan file")->required();
    handlers[s] = handler;
    return s;
  };
  auto form = [&](CLI::App* s) { s->add_option("--form", opt.form, "dual form F")->required(); };
  auto ideal = [&](CLI::App* s) {
    s->add_option("--ideal", opt.ideal, "comma-separated generators")->required()->expected(1, -1);
  };
  auto stab = [&](CLI::App* s) {
    s->add_option("--ample", opt.ample, "ample Cartier degree")->required();
    s->add_option("--window", opt.window, "stabilization window")->check(CLI::PositiveNumber);
    s->add_option("--max-k", opt.max_k, "largest multiple")->check(CLI::PositiveNumber);
  };

  sub("classgroup", "class group and variable degrees", cmd_classgroup);
  sub("basis", "monomial basis of a degree", cmd_basis)->add_option("--degree", opt.degree)->required();
  {
    auto* s = sub("hilbert", "Hilbert function of the apolar algebra", cmd_hilbert);
    form(s);
    s->add_option("--box", opt.box, "degree box like 0..3,0..2")->required();
  }
  {
    auto* s = sub("cat", "catalecticant rank and bounds", cmd_cat);
    form(s);
    s->add_option("--beta", opt.beta)->required();
  }
  {
    auto* s = sub("bounds", "best catalecticant bounds over a box", cmd_bounds);
    form(s);
    s->add_option("--box", opt.box)->required();
  }
  {
    auto* s = sub("contains", "apolarity containment", cmd_contains);
    form(s);
    ideal(s);
  }
  {
    auto* s = sub("length", "length of the scheme of an ideal", cmd_length);
    ideal(s);
    stab(s);
  }
  {
    auto* s = sub("cactus-cert", "cactus rank upper bound", cmd_cactus);
    form(s);
    ideal(s);
    stab(s);
  }
  {
    auto* s = sub("decompose-check", "verify a decomposition", cmd_decompose);
    form(s);
    s->add_option("--terms", opt.terms, "terms file")->required();
  }
  {
    auto* s = sub("limit-cert", "border rank limit certificate", cmd_limit);
    form(s);
    s->add_option("--family", opt.family, "family file")->required();
  }
  {
    auto* s = sub("terracini", "secant dimension probe", cmd_terracini);
    s->add_option("--degree", opt.degree)->required();
    s->add_option("-r", opt.r)->required()->check(CLI::PositiveNumber);
    s->add_option("--prime", opt.prime);
    s->add_option("--trials", opt.trials)->check(CLI::PositiveNumber);
    s->add_option("--seed", opt.seed);
    s->add_option("--chart", opt.chart, "free chart variables")->delimiter(',');
  }
  {
    auto* s = sub("det-check", "determinant of the stacked tangent matrix", cmd_det);
    s->add_option("--degree", opt.degree)->required();
    s->add_option("-r", opt.r)->required()->check(CLI::PositiveNumber);
    s->add_option("--at", opt.at, "chart coordinates, point by point")->required();
    det_prime = s->add_option("--prime", opt.prime, "work over Z/p instead of Q");
    s->add_option("--chart", opt.chart, "free chart variables")->delimiter(',');
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  CLI::App* chosen = app.get_subcommands().front();
  opt.prime_given = det_prime->count() > 0;
  Output o(out, format == "records", chosen->get_name());
  try {
    const CoxRing ring = load_fan(opt.fan);
    handlers.at(chosen)(ring, opt, o);
  } catch (const Error& e) {
    err << e.what() << '\n';
    if (format == "records") out << json{{"command", chosen->get_name()}, {"error", error_name(e.kind())}, {"message", e.what()}}.dump() << '\n';
    return is_refusal(e.kind()) ? 1 : 2;
  } catch (const std::exception& e) {
    err << "InvalidInput: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace toricapolar
