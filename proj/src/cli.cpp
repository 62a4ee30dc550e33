#include "kronbounds/cli.hpp"

#include "kronbounds/bounds.hpp"
#include "kronbounds/kronecker.hpp"
#include "kronbounds/partition.hpp"
#include "kronbounds/qbinomial.hpp"
#include "kronbounds/serialize.hpp"
#include "kronbounds/stability.hpp"
#include "kronbounds/verify.hpp"

#include "CLI11.hpp"

#include <iomanip>
#include <iostream>
#include <sstream>

namespace kronbounds {

namespace {

constexpr unsigned kSampleSeed = 0x5EED5u;  // fixed so output is reproducible

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

std::string real_str(const Real& x) { return x.str(35); }

int cmd_kron(const RunConfig& cfg, std::ostream& out) {
  Partition l = Partition::parse(cfg.partitions[0]);
  Partition m = Partition::parse(cfg.partitions[1]);
  Partition n = Partition::parse(cfg.partitions[2]);

  std::vector<std::pair<std::string, Int>> values;
  if (cfg.method == "character" || cfg.method == "both")
    values.emplace_back("character", kronecker(l, m, n));
  if (cfg.method == "alternating" || cfg.method == "both")
    values.emplace_back("alternating", kronecker_alternating(l, m, n, cfg.budget));
  bool agree = values.size() < 2 || values[0].second == values[1].second;

  if (cfg.format == "json") {
    nlohmann::json j;
    j["command"] = "kron";
    j["lambda"] = l.to_string();
    j["mu"] = m.to_string();
    j["nu"] = n.to_string();
    j["method"] = cfg.method;
    for (const auto& [name, v] : values) j["values"][name] = v.str();
    j["agree"] = agree;
    out << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    out << "lambda,mu,nu,method,value\n";
    for (const auto& [name, v] : values)
      out << csv_quote(l.to_string()) << "," << csv_quote(m.to_string()) << ","
          << csv_quote(n.to_string()) << "," << name << "," << v.str() << "\n";
  } else {
    if (values.size() == 1) {
      out << values[0].second.str() << "\n";
    } else {
      for (const auto& [name, v] : values) out << name << " " << v.str() << "\n";
    }
  }
  return agree ? 0 : 1;
}

int cmd_char(const RunConfig& cfg, std::ostream& out) {
  Partition shape = Partition::parse(cfg.partitions[0]);
  Partition cls = Partition::parse(cfg.partitions[1]);
  Int v = character(shape, cls);
  if (cfg.format == "json") {
    nlohmann::json j;
    j["command"] = "char";
    j["shape"] = shape.to_string();
    j["class"] = cls.to_string();
    j["value"] = v.str();
    out << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    out << "shape,class,value\n"
        << csv_quote(shape.to_string()) << "," << csv_quote(cls.to_string()) << ","
        << v.str() << "\n";
  } else {
    out << v.str() << "\n";
  }
  return 0;
}

int cmd_qbinom(const RunConfig& cfg, std::ostream& out) {
  int l = static_cast<int>(cfg.qbinom_l);
  int m = static_cast<int>(cfg.qbinom_m);
  if (l < 0 || m < 0) throw std::domain_error("box sides must be nonnegative");

  if (cfg.qbinom_mode == "poly") {
    IntPolynomial p = gaussian_binomial(l, m);
    if (cfg.format == "json") {
      nlohmann::json j;
      j["command"] = "qbinom";
      j["l"] = std::to_string(l);
      j["m"] = std::to_string(m);
      j["coefficients"] = polynomial_json(p);
      out << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
      out << "power,coefficient\n";
      for (long long k = 0; k <= p.degree(); ++k)
        out << k << "," << p.coeff(k).str() << "\n";
    } else {
      out << p.to_string() << "\n";
    }
    return 0;
  }

  long long k = cfg.qbinom_k;
  if (cfg.qbinom_mode == "delta") {
    if (k < 1 || k > static_cast<long long>(l) * m)
      throw std::domain_error("delta needs 1 <= k <= l*m");
    Int d = delta(l, m, k);
    if (cfg.format == "json") {
      nlohmann::json j;
      j["command"] = "qbinom";
      j["l"] = std::to_string(l);
      j["m"] = std::to_string(m);
      j["k"] = std::to_string(k);
      j["delta"] = d.str();
      out << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
      out << "l,m,k,delta\n" << l << "," << m << "," << k << "," << d.str() << "\n";
    } else {
      out << d.str() << "\n";
    }
    return 0;
  }

  // gapbound: the exact gap, the explicit lower bound, and their margin.
  Real bound = effective_gap_bound(l, m, k);  // throws outside m >= l >= 8
  Int d = delta(l, m, k);
  Real margin = Real(d) - bound;
  if (cfg.format == "json") {
    nlohmann::json j;
    j["command"] = "qbinom";
    j["l"] = std::to_string(l);
    j["m"] = std::to_string(m);
    j["k"] = std::to_string(k);
    j["delta"] = d.str();
    j["bound"] = real_str(bound);
    j["margin"] = real_str(margin);
    out << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    out << "l,m,k,delta,bound,margin\n"
        << l << "," << m << "," << k << "," << d.str() << "," << real_str(bound) << ","
        << real_str(margin) << "\n";
  } else {
    out << "delta " << d.str() << "\n";
    out << "bound " << real_str(bound) << "\n";
    out << "margin " << real_str(margin) << "\n";
  }
  return 0;
}

int cmd_stability(const RunConfig& cfg, std::ostream& out) {
  Partition l = Partition::parse(cfg.partitions[0]);
  Partition m = Partition::parse(cfg.partitions[1]);
  Partition n = Partition::parse(cfg.partitions[2]);
  StabilitySequence seq = stability_sequence(l, m, n, cfg.k, cfg.t_max);

  if (cfg.format == "json") {
    nlohmann::json j;
    j["command"] = "stability";
    j["lambda"] = seq.lambda.to_string();
    j["mu"] = seq.mu.to_string();
    j["nu"] = seq.nu.to_string();
    j["k"] = std::to_string(seq.k);
    nlohmann::json vals = nlohmann::json::array();
    for (const Int& v : seq.values) vals.push_back(v.str());
    j["values"] = std::move(vals);
    j["onset"] = std::to_string(seq.onset);
    j["stabilized"] = seq.stabilized;
    j["stable"] = seq.stabilized ? nlohmann::json(seq.stable_value.str())
                                 : nlohmann::json(nullptr);
    out << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    out << "t,value\n";
    for (std::size_t t = 0; t < seq.values.size(); ++t)
      out << t << "," << seq.values[t].str() << "\n";
  } else {
    for (std::size_t t = 0; t < seq.values.size(); ++t) {
      if (t) out << " ";
      out << seq.values[t].str();
    }
    out << " | onset " << seq.onset;
    if (seq.stabilized) out << " | stable " << seq.stable_value.str();
    else out << " | not stabilized";
    out << "\n";
  }
  return 0;
}

int cmd_bounds(const RunConfig& cfg, std::ostream& out) {
  Partition l = Partition::parse(cfg.partitions[0]);
  Partition m = Partition::parse(cfg.partitions[1]);
  Partition n = Partition::parse(cfg.partitions[2]);
  BoundReport rep = full_report(l, m, n, cfg.budget);

  if (cfg.format == "json") {
    nlohmann::json j = bound_report_json(rep);
    j["command"] = "bounds";
    out << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    out << "lambda,mu,nu,true_g,name,direction,applicable,value,satisfied\n";
    for (const BoundEntry& e : rep.entries) {
      out << csv_quote(l.to_string()) << "," << csv_quote(m.to_string()) << ","
          << csv_quote(n.to_string()) << ","
          << (rep.true_g ? rep.true_g->str() : std::string()) << "," << e.name << ","
          << (e.direction == BoundEntry::Direction::Upper ? "upper" : "lower") << ","
          << (e.applicable ? "true" : "false") << "," << rat_to_string(e.value) << ","
          << (e.satisfied ? (*e.satisfied ? "true" : "false") : std::string()) << "\n";
    }
  } else {
    out << "triple (" << l.to_string() << ") (" << m.to_string() << ") ("
        << n.to_string() << ")\n";
    out << "true_g " << (rep.true_g ? rep.true_g->str() : "skipped") << "\n";
    for (const BoundEntry& e : rep.entries) {
      out << (e.direction == BoundEntry::Direction::Upper ? "upper " : "lower ")
          << e.name << " ";
      if (!e.applicable) {
        out << "inapplicable\n";
        continue;
      }
      out << rat_to_string(e.value);
      if (boost::multiprecision::denominator(e.value) != 1)
        out << " (ceil " << rat_ceil(e.value).str() << ")";
      if (e.satisfied) out << (*e.satisfied ? " ok" : " VIOLATED");
      out << "\n";
    }
  }
  bool violated = false;
  for (const BoundEntry& e : rep.entries)
    if (e.satisfied && !*e.satisfied) violated = true;
  return violated ? 1 : 0;
}

struct SuitePlan {
  std::string name;
  int n_default, n_cap;
  int l_default, l_cap;
};

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  struct Range {
    int n = 0, l = 0, samples = 0;
  };
  auto pick = [&](int given, int fallback, int cap, const char* what) {
    int v = given < 0 ? fallback : given;
    if (v < 0 || v > cap)
      throw std::invalid_argument(std::string(what) + " out of the supported range (max " +
                                  std::to_string(cap) + ")");
    return v;
  };

  std::vector<std::string> suites;
  if (cfg.suite == "all") {
    suites = {"symmetry", "reduction", "kstab",    "bounds",
              "qbin",     "almkvist",  "stanley",  "lemma14"};
  } else {
    suites = {cfg.suite};
  }

  std::vector<SuiteResult> results;
  for (const std::string& s : suites) {
    if (s == "symmetry") {
      results.push_back(verify_symmetry(pick(cfg.n_max, 5, 7, "n"), cfg.jobs));
    } else if (s == "reduction") {
      results.push_back(verify_reduction(pick(cfg.n_max, 5, 7, "n"), cfg.jobs));
    } else if (s == "kstab") {
      int n = pick(cfg.n_max, 5, 7, "n");
      int samples = pick(cfg.samples, 50, 1000, "samples");
      results.push_back(
          verify_kstab(n, 3, 3, samples, std::min(n + 1, 8), kSampleSeed, cfg.jobs));
    } else if (s == "bounds") {
      int n = pick(cfg.n_max, 5, 7, "n");
      results.push_back(verify_bounds(n, std::min(n + 3, 10), cfg.jobs));
    } else if (s == "qbin") {
      int box = pick(cfg.l_max, 10, 12, "lmax");
      results.push_back(verify_qbin(box, 10, std::min(box, 12), cfg.jobs));
    } else if (s == "almkvist") {
      int n = pick(cfg.n_max, 30, 40, "n");
      results.push_back(verify_almkvist(n, 31, 34, cfg.jobs));
    } else if (s == "stanley") {
      results.push_back(verify_stanley(pick(cfg.n_max, 10, 12, "n")));
    } else if (s == "lemma14") {
      int l = pick(cfg.l_max, 4, 5, "lmax");
      results.push_back(verify_lemma14(l, l, cfg.jobs));
    }
  }

  bool all_passed = true;
  for (const SuiteResult& r : results)
    if (!r.passed()) all_passed = false;

  if (cfg.format == "json") {
    nlohmann::json j;
    j["command"] = "verify";
    nlohmann::json arr = nlohmann::json::array();
    for (const SuiteResult& r : results) {
      nlohmann::json js;
      js["suite"] = r.suite;
      js["checked"] = std::to_string(r.checked);
      nlohmann::json fails = nlohmann::json::array();
      for (const CheckFailure& f : r.failures)
        fails.push_back({{"instance", f.instance}, {"detail", f.detail}});
      js["failures"] = std::move(fails);
      arr.push_back(std::move(js));
    }
    j["suites"] = std::move(arr);
    j["passed"] = all_passed;
    out << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    out << "suite,checked,failures,first_witness\n";
    for (const SuiteResult& r : results)
      out << r.suite << "," << r.checked << "," << r.failures.size() << ","
          << (r.failures.empty() ? std::string() : csv_quote(r.failures[0].instance))
          << "\n";
  } else {
    for (const SuiteResult& r : results) {
      std::ostringstream line;
      line << "[" << r.suite << "] checked " << r.checked << " instances in "
           << std::fixed << std::setprecision(2) << r.seconds << "s: "
           << (r.passed() ? "PASS" : "FAIL") << "\n";
      out << line.str();
      std::size_t shown = 0;
      for (const CheckFailure& f : r.failures) {
        if (++shown > 10) {
          out << "  ... " << (r.failures.size() - 10) << " more failures\n";
          break;
        }
        out << "  " << f.instance << ": " << f.detail << "\n";
      }
    }
  }
  if (!all_passed && cfg.format == "table")
    err << "verification failed\n";
  return all_passed ? 0 : 1;
}

}  // namespace

nlohmann::json run_config_json(const RunConfig& c) {
  nlohmann::json j;
  j["command"] = c.command;
  j["partitions"] = c.partitions;
  j["method"] = c.method;
  j["suite"] = c.suite;
  j["qbinom_mode"] = c.qbinom_mode;
  j["qbinom_l"] = std::to_string(c.qbinom_l);
  j["qbinom_m"] = std::to_string(c.qbinom_m);
  j["qbinom_k"] = std::to_string(c.qbinom_k);
  j["n_max"] = std::to_string(c.n_max);
  j["l_max"] = std::to_string(c.l_max);
  j["k"] = std::to_string(c.k);
  j["t_max"] = std::to_string(c.t_max);
  j["samples"] = std::to_string(c.samples);
  j["format"] = c.format;
  j["jobs"] = std::to_string(c.jobs);
  j["budget"] = std::to_string(c.budget);
  return j;
}

RunConfig run_config_from_json(const nlohmann::json& j) {
  RunConfig c;
  c.command = j.at("command").get<std::string>();
  c.partitions = j.at("partitions").get<std::vector<std::string>>();
  c.method = j.at("method").get<std::string>();
  c.suite = j.at("suite").get<std::string>();
  c.qbinom_mode = j.at("qbinom_mode").get<std::string>();
  c.qbinom_l = std::stoll(j.at("qbinom_l").get<std::string>());
  c.qbinom_m = std::stoll(j.at("qbinom_m").get<std::string>());
  c.qbinom_k = std::stoll(j.at("qbinom_k").get<std::string>());
  c.n_max = std::stoi(j.at("n_max").get<std::string>());
  c.l_max = std::stoi(j.at("l_max").get<std::string>());
  c.k = std::stoi(j.at("k").get<std::string>());
  c.t_max = std::stoi(j.at("t_max").get<std::string>());
  c.samples = std::stoi(j.at("samples").get<std::string>());
  c.format = j.at("format").get<std::string>();
  c.jobs = std::stoi(j.at("jobs").get<std::string>());
  c.budget = std::stoll(j.at("budget").get<std::string>());
  return c;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Kronecker coefficients, symmetric group characters, and "
               "q-binomial gap verification"};
  app.name("kronbounds");
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--jobs", cfg.jobs, "Worker threads for verification suites")
      ->check(CLI::Range(1, 256));
  app.add_option("--budget", cfg.budget, "Resource ceiling for heavy computations")
      ->check(CLI::PositiveNumber);

  std::string p1, p2, p3;

  CLI::App* kron = app.add_subcommand("kron", "Kronecker coefficient of three partitions");
  kron->fallthrough();
  kron->add_option("lambda", p1, "First partition, e.g. 4,3,1")->required();
  kron->add_option("mu", p2, "Second partition")->required();
  kron->add_option("nu", p3, "Third partition")->required();
  kron->add_option("--method", cfg.method, "character | alternating | both")
      ->check(CLI::IsMember({"character", "alternating", "both"}));

  CLI::App* chr = app.add_subcommand("char", "Irreducible character value");
  chr->fallthrough();
  chr->add_option("shape", p1, "Shape partition")->required();
  chr->add_option("class", p2, "Cycle type partition")->required();

  CLI::App* qb = app.add_subcommand("qbinom", "Gaussian binomial tools");
  qb->fallthrough();
  bool want_poly = false;
  long long delta_k = -1, gap_k = -1;
  qb->add_option("l", cfg.qbinom_l, "Box height")->required();
  qb->add_option("m", cfg.qbinom_m, "Box width")->required();
  qb->add_flag("--poly", want_poly, "Print the full coefficient list");
  qb->add_option("--delta", delta_k, "Print p_k - p_{k-1}");
  qb->add_option("--gapbound", gap_k, "Print the gap, its explicit bound and margin");

  CLI::App* stab = app.add_subcommand("stability", "Shifted coefficient sequence");
  stab->fallthrough();
  stab->add_option("lambda", p1, "First partition")->required();
  stab->add_option("mu", p2, "Second partition")->required();
  stab->add_option("nu", p3, "Third partition")->required();
  stab->add_option("--k", cfg.k, "Number of shifted rows")->check(CLI::PositiveNumber);
  stab->add_option("--tmax", cfg.t_max, "Last shift evaluated")
      ->check(CLI::NonNegativeNumber);

  CLI::App* bnd = app.add_subcommand("bounds", "All bounds for one triple");
  bnd->fallthrough();
  bnd->add_option("lambda", p1, "First partition")->required();
  bnd->add_option("mu", p2, "Second partition")->required();
  bnd->add_option("nu", p3, "Third partition")->required();

  CLI::App* ver = app.add_subcommand("verify", "Run a verification suite");
  ver->fallthrough();
  ver->add_option("suite", cfg.suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"symmetry", "reduction", "kstab", "bounds", "qbin",
                             "almkvist", "stanley", "lemma14", "all"}));
  ver->add_option("--n", cfg.n_max,
                  "Size ceiling (caps: triple suites 7, stanley 12, almkvist 40)");
  ver->add_option("--lmax", cfg.l_max, "Box side ceiling (caps: lemma14 5, qbin 12)");
  ver->add_option("--samples", cfg.samples,
                  "Sample count for randomized checks (cap 1000)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (kron->parsed()) {
      cfg.command = "kron";
      cfg.partitions = {p1, p2, p3};
      return cmd_kron(cfg, out);
    }
    if (chr->parsed()) {
      cfg.command = "char";
      cfg.partitions = {p1, p2};
      return cmd_char(cfg, out);
    }
    if (qb->parsed()) {
      cfg.command = "qbinom";
      int modes = (want_poly ? 1 : 0) + (delta_k >= 0 ? 1 : 0) + (gap_k >= 0 ? 1 : 0);
      if (modes != 1)
        throw std::invalid_argument("qbinom needs exactly one of --poly, --delta, --gapbound");
      cfg.qbinom_mode = want_poly ? "poly" : (delta_k >= 0 ? "delta" : "gapbound");
      cfg.qbinom_k = want_poly ? 0 : (delta_k >= 0 ? delta_k : gap_k);
      return cmd_qbinom(cfg, out);
    }
    if (stab->parsed()) {
      cfg.command = "stability";
      cfg.partitions = {p1, p2, p3};
      return cmd_stability(cfg, out);
    }
    if (bnd->parsed()) {
      cfg.command = "bounds";
      cfg.partitions = {p1, p2, p3};
      return cmd_bounds(cfg, out);
    }
    if (ver->parsed()) {
      cfg.command = "verify";
      return cmd_verify(cfg, out, err);
    }
  } catch (const ResourceError& e) {
    err << "resource guard: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    err << "internal consistency fault: " << e.what() << "\n";
    return 1;
  }
  err << "no command executed\n";
  return 2;
}

}  // namespace kronbounds
