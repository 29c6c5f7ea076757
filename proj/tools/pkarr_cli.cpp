#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "pkarr/chern.hpp"
#include "pkarr/checker.hpp"
#include "pkarr/errors.hpp"
#include "pkarr/generators.hpp"
#include "pkarr/io.hpp"
#include "pkarr/oracle.hpp"

using namespace pkarr;

namespace {

constexpr int kExitInvalid = 2;

struct Options {
  std::string format = "text";
  std::string out;

  std::string family;
  std::vector<long> params;
  std::uint64_t gen_seed = 0;
  std::string weights;

  std::string input;

  bool omega = false;
  bool pch2 = false;
  bool eta = false;
  bool oracle = false;
  int trials = 20;
  std::uint64_t seed = 0;
  bool cy = false;
};

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opt.out);
  if (!f) throw InputError("cannot write " + opt.out);
  f << text;
}

std::vector<Rational> parse_list(const std::string& s) {
  std::vector<Rational> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  return out;
}

long param(const Options& opt, std::size_t i, const char* what) {
  if (i >= opt.params.size()) throw InputError(opt.family + " needs parameter " + what);
  return opt.params[i];
}

// "uniform", "braid" (equal a_i), "braid:a1,...,ak", or an explicit list.
std::vector<Rational> weight_family(const Options& opt, const Arrangement& arr) {
  const std::string& w = opt.weights;
  if (w == "uniform") return uniform_reflection_weights(arr);
  if (w.rfind("braid", 0) == 0) {
    if (opt.family != "braid") throw InputError("braid weights need the braid family");
    const int k = static_cast<int>(param(opt, 0, "k"));
    std::vector<Rational> a;
    if (w == "braid") {
      a.assign(static_cast<std::size_t>(k), Rational(1) / k);
    } else if (w.rfind("braid:", 0) == 0) {
      a = parse_list(w.substr(6));
    } else {
      throw InputError("unknown weight family " + w);
    }
    if (static_cast<int>(a.size()) != k) throw InputError("braid weights need exactly k values");
    return braid_weights(a);
  }
  auto list = parse_list(w);
  if (static_cast<int>(list.size()) != arr.size()) {
    throw InputError("got " + std::to_string(list.size()) + " weights for " +
                     std::to_string(arr.size()) + " hyperplanes");
  }
  return list;
}

int cmd_gen(const Options& opt) {
  Arrangement arr = [&] {
    if (opt.family == "braid") return gen_braid(static_cast<int>(param(opt, 0, "k")));
    if (opt.family == "bm") return gen_bm(static_cast<int>(param(opt, 0, "m")));
    if (opt.family == "seven-lines") return gen_seven_lines();
    if (opt.family == "generic") {
      return gen_generic(static_cast<int>(param(opt, 0, "n")), static_cast<int>(param(opt, 1, "k")),
                         opt.gen_seed);
    }
    throw InputError("unknown family " + opt.family);
  }();
  if (opt.weights.empty()) {
    emit(opt, dump_arrangement(arr));
  } else {
    const auto w = weight_family(opt, arr);
    emit(opt, dump_arrangement(arr, &w));
  }
  return 0;
}

int cmd_lattice(const Options& opt) {
  const IntersectionLattice lat(load_arrangement(opt.input).arrangement);
  emit(opt, opt.format == "json" ? dump(lattice_json(lat)) : lattice_text(lat));
  return 0;
}

ArrangementFile load_weighted(const Options& opt) {
  ArrangementFile f = load_arrangement(opt.input);
  if (!f.weights) throw InputError(opt.input + " has no weights");
  return f;
}

int cmd_check(const Options& opt) {
  const ArrangementFile f = load_weighted(opt);
  const CheckReport r = check_theorem(WeightedArrangement(f.arrangement, *f.weights));
  emit(opt, opt.format == "json" ? dump(to_json(r)) : to_text(r));
  return r.verdict ? 0 : 1;
}

Json weights_json(const std::vector<Rational>& a) {
  Json j = Json::array();
  for (const auto& x : a) j.push_back(to_string(x));
  return j;
}

std::string weights_text(const std::vector<Rational>& a) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? " " : "") + to_string(a[i]);
  return s;
}

struct Trial {
  std::string label;
  std::vector<Rational> weights;
};

int cmd_verify(const Options& opt) {
  const ArrangementFile f = load_arrangement(opt.input);
  const WonderfulModel model{IntersectionLattice(f.arrangement)};
  const int n = model.lattice().dim();
  const int count = f.arrangement.size();
  const bool all = !(opt.omega || opt.pch2 || opt.eta || opt.oracle);
  if (opt.trials < 0) throw InputError("--trials must be non-negative");

  std::vector<Trial> trials;
  if (f.weights) {
    if (opt.cy && WeightedArrangement(f.arrangement, *f.weights).total() != n + 1) {
      throw InputError("--cy needs file weights summing to " + std::to_string(n + 1));
    }
    trials.push_back({"file", *f.weights});
  }
  std::mt19937_64 rng(opt.seed);
  for (int t = 0; t < opt.trials; ++t) {
    trials.push_back({"random " + std::to_string(t),
                      opt.cy ? random_simplex_point(rng, count, n + 1) : random_unit_weights(rng, count)});
  }

  bool pass = true;
  Json report;
  std::ostringstream text;
  report["seed"] = opt.seed;
  report["trials"] = opt.trials;
  report["cy"] = opt.cy;
  report["delta2"] = model.delta2().size();
  text << "seed " << opt.seed << ", trials " << opt.trials << ", cy " << (opt.cy ? "on" : "off")
       << ", |G| = " << model.g_size() << ", |Delta2| = " << model.delta2().size() << "\n";

  if (all || opt.oracle) {
    const TableComparison c = compare_table_with_oracle(model);
    pass = pass && c.pass();
    Json bad = Json::array();
    for (const auto& m : c.mismatches) {
      bad.push_back({{"monomial", model.generator_name(m.a) + "*" + model.generator_name(m.b)},
                     {"type", to_string(m.type)},
                     {"table", to_json(model, m.table)},
                     {"oracle", to_json(model, m.oracle)}});
    }
    report["oracle"] = {{"pass", c.pass()},
                        {"monomials", c.monomials},
                        {"quotient_dimension", c.quotient_dimension},
                        {"mismatches", bad}};
    text << "oracle: " << (c.pass() ? "pass" : "FAIL") << "  " << c.monomials - static_cast<int>(c.mismatches.size())
         << "/" << c.monomials << " monomials agree, quotient dimension " << c.quotient_dimension << "\n";
    for (const auto& m : c.mismatches) {
      text << "  " << to_string(m.type) << "  " << model.generator_name(m.a) << "*"
           << model.generator_name(m.b) << "\n";
    }
  }

  auto identity_suite = [&](const char* key, const char* title, bool parch) {
    Json rows = Json::array();
    bool ok = true;
    text << title << ":\n";
    for (std::size_t i = 0; i < trials.size(); ++i) {
      const IdentityReport r = verify_identities(model, trials[i].weights, opt.cy);
      const CoeffReport& c = parch ? r.parch2 : r.omega;
      ok = ok && c.all_equal();
      Json row = to_json(c);
      row["label"] = trials[i].label;
      row["weights"] = weights_json(trials[i].weights);
      rows.push_back(row);
      if (i == 0) {
        text << "  [" << trials[i].label << "] weights " << weights_text(trials[i].weights) << "\n"
             << to_text(c, std::string("  ") + key);
      } else if (!c.all_equal()) {
        text << "  [" << trials[i].label << "] weights " << weights_text(trials[i].weights) << "\n";
        for (const auto& e : c.entries) {
          if (e.compared && !e.equal) {
            text << "    " << e.name << "  " << to_string(e.computed) << " vs " << to_string(e.closed_form) << "\n";
          }
        }
      }
    }
    int good = 0;
    for (const auto& row : rows) good += row["all_equal"].get<bool>() ? 1 : 0;
    text << "  " << (ok ? "pass" : "FAIL") << "  " << good << "/" << rows.size() << " weight vectors agree\n";
    report[key] = {{"pass", ok}, {"runs", rows}};
    pass = pass && ok;
  };
  if (all || opt.omega) identity_suite("omega", "omega vs closed form", false);
  if (all || opt.pch2) identity_suite("parch2", "parch2 vs closed form", true);

  if (all || opt.eta) {
    Json rows = Json::array();
    bool ok = true;
    for (const auto& t : trials) {
      const H2Class e = eta(model, t.weights);
      Rational expected = n + 1;
      for (const auto& x : t.weights) expected -= x;
      const bool good = e.gamma.zero() && e.pullback_h == expected;
      ok = ok && good;
      rows.push_back({{"label", t.label}, {"eta", to_json(model, e)}, {"expected_h", to_string(expected)}, {"equal", good}});
    }
    report["eta"] = {{"pass", ok}, {"runs", rows}};
    text << "eta: " << (ok ? "pass" : "FAIL") << "  " << trials.size() << " weight vectors reduce to (n+1 - sum a) h\n";
    pass = pass && ok;
  }

  report["pass"] = pass;
  text << (pass ? "all identities hold\n" : "some identities FAIL\n");
  emit(opt, opt.format == "json" ? dump(report) : text.str());
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted hyperplane arrangements: PK-metric criterion and wonderful-model cohomology"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", opt.out, "Write output to PATH instead of stdout");

  auto* gen = app.add_subcommand("gen", "Generate an arrangement file (always JSON)");
  gen->add_option("family", opt.family, "braid K | bm M | seven-lines | generic N K")
      ->required()
      ->check(CLI::IsMember({"braid", "bm", "seven-lines", "generic"}));
  gen->add_option("params", opt.params, "Family parameters");
  gen->add_option("--seed", opt.gen_seed, "Seed for the generic family");
  gen->add_option("--weights", opt.weights, "uniform | braid | braid:a1,..,ak | p/q,... in file order");

  auto* lattice = app.add_subcommand("lattice", "Intersection lattice report");
  lattice->add_option("input", opt.input)->required();

  auto* check = app.add_subcommand("check", "Decide the PK-metric criterion; exit 0 yes, 1 no");
  check->add_option("input", opt.input)->required();

  auto* verify = app.add_subcommand("verify", "Verify the cohomology identities; exit 0 iff all hold");
  verify->add_option("input", opt.input)->required();
  verify->add_flag("--omega", opt.omega, "Ohtsuki class against its closed form");
  verify->add_flag("--pch2", opt.pch2, "parch2 against its closed form");
  verify->add_flag("--eta", opt.eta, "eta reduces to a multiple of h");
  verify->add_flag("--oracle", opt.oracle, "Projection table against the presentation oracle");
  verify->add_option("--trials", opt.trials, "Random weight vectors (default 20)");
  verify->add_option("--seed", opt.seed, "Seed for random weights (default 0)");
  verify->add_flag("--cy", opt.cy, "Constrain weights to sum n+1 and compare every coordinate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  try {
    if (*gen) return cmd_gen(opt);
    if (*lattice) return cmd_lattice(opt);
    if (*check) return cmd_check(opt);
    if (*verify) return cmd_verify(opt);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
