// Command-line front end: generators, dispatch, search, certification and
// the identity self-test.
//
// Exit codes: 0 success, 2 bad arguments, 3 hypothesis violation,
// 4 empty search, 5 certification failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "salem/certify.hpp"
#include "salem/construct.hpp"
#include "salem/report.hpp"
#include "salem/selftest.hpp"
#include "salem/trigpolys.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kBadArgs = 2;
constexpr int kHypothesis = 3;
constexpr int kEmptySearch = 4;
constexpr int kCertFailed = 5;

struct RunConfig {
  int precision_digits = 30;
  long a_min = 3;
  long a_max = 200;
  int want = 5;
  std::string format = "json";
  std::string output;
  std::uint64_t seed = 1;
  unsigned threads = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Writes to --output when given, standard output otherwise.
void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output);
  if (!out) throw std::invalid_argument("cannot write " + cfg.output);
  out << text;
}

std::string plan_text(const salem::ConstructionPlan& p) {
  std::ostringstream os;
  os << salem::to_string(p.lemma) << " k=" << p.k << "\n";
  os << "n=" << p.n << " t=" << p.t << " l=" << p.l << "\n";
  os << "factors:";
  for (const auto& name : p.factor_names) os << ' ' << name;
  os << ' ' << salem::to_string(p.shape) << "\n";
  os << "parity: r_{2+4k}=" << p.parity.r_2_4k << " r_{4k}=" << p.parity.r_4k << " C_n(0,1)=" << p.parity.cn
     << " C_n*t_{2+4k}(0,1)=" << p.parity.cn_t_2_4k << "\n";
  return os.str();
}

std::string certificate_text(const salem::SalemCertificate& c) {
  std::ostringstream os;
  os << "certified: Salem number of degree " << 2 * c.t << " with alpha^" << c.n << " - 1 a unit\n";
  os << "T = " << salem::to_pretty(c.trace_poly) << "\n";
  os << "Res(x^" << c.n << " - 1, S) = " << c.resultant_value << "\n";
  os << "alpha = " << c.alpha.decimal << "\n";
  return os.str();
}

int report_rejection(const salem::Rejection& r) {
  std::cerr << "rejected at " << salem::to_string(r.stage) << ": " << r.reason << "\n";
  if (r.resultant) std::cerr << "resultant = " << *r.resultant << "\n";
  return kCertFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Salem numbers whose powers are exceptional units"};
  app.require_subcommand(1);
  RunConfig cfg;

  int cheb_k = 0;
  auto* cheb_cmd = app.add_subcommand("cheb", "print t_k");
  cheb_cmd->add_option("--k", cheb_k, "index k >= 0")->required()->check(CLI::NonNegativeNumber);

  int ctrace_n = 0;
  auto* ctrace_cmd = app.add_subcommand("ctrace", "print C_n");
  ctrace_cmd->add_option("--n", ctrace_n, "index n >= 1")->required()->check(CLI::PositiveNumber);

  int plan_n = 0, plan_t = 0;
  std::string plan_format = "text";
  auto* plan_cmd = app.add_subcommand("plan", "select the construction for (n, t)");
  plan_cmd->add_option("--n", plan_n)->required();
  plan_cmd->add_option("--t", plan_t)->required();
  plan_cmd->add_option("--format", plan_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  int search_n = 0, search_t = 0;
  bool theorem11 = false;
  std::string d_text = "1";
  auto* search_cmd = app.add_subcommand("search", "sweep a and certify candidates");
  search_cmd->add_option("--n", search_n)->required()->check(CLI::PositiveNumber);
  search_cmd->add_option("--t", search_t)->required()->check(CLI::PositiveNumber);
  search_cmd->add_option("--a-min", cfg.a_min)->check(CLI::Range(3L, 1L << 40));
  search_cmd->add_option("--a-max", cfg.a_max);
  search_cmd->add_option("--want", cfg.want)->check(CLI::PositiveNumber);
  search_cmd->add_option("--precision", cfg.precision_digits)->check(CLI::PositiveNumber);
  search_cmd->add_option("--format", cfg.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  search_cmd->add_option("--output", cfg.output, "output path (default: standard output)");
  search_cmd->add_option("--threads", cfg.threads, "worker threads (0: all cores)");
  search_cmd->add_flag("--theorem11", theorem11, "use the C_n (x-2 | x^2-4) D (x-a) - 1 family");
  search_cmd->add_option("--d", d_text, "factor D for --theorem11 (inline coefficients or file)");

  std::string poly_text, poly_file, from_report, as = "auto";
  int certify_n = 0;
  std::string certify_format = "text";
  auto* certify_cmd = app.add_subcommand("certify", "certify a trace or minimal polynomial");
  auto* poly_opt = certify_cmd->add_option("--poly", poly_text, "ascending coefficients, e.g. 1,-3,1");
  auto* file_opt = certify_cmd->add_option("--file", poly_file, "file holding the coefficients");
  auto* report_opt = certify_cmd->add_option("--from-report", from_report, "replay every certificate in a JSON report");
  certify_cmd->add_option("--n", certify_n)->check(CLI::PositiveNumber);
  certify_cmd->add_option("--as", as, "auto, trace or min")->check(CLI::IsMember({"auto", "trace", "min"}));
  certify_cmd->add_option("--precision", cfg.precision_digits)->check(CLI::PositiveNumber);
  certify_cmd->add_option("--format", certify_format, "text or json")->check(CLI::IsMember({"text", "json"}));
  poly_opt->excludes(file_opt)->excludes(report_opt);
  file_opt->excludes(report_opt);

  bool inject_fault = false;
  auto* selftest_cmd = app.add_subcommand("selftest", "run the identity and parity suites");
  selftest_cmd->add_option("--seed", cfg.seed);
  selftest_cmd->add_flag("--inject-fault", inject_fault, "perturb C_24 to exercise failure reporting");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadArgs;
  }

  try {
    if (*cheb_cmd) {
      std::cout << salem::to_string(salem::cheb(cheb_k)) << "\n";
      return kOk;
    }
    if (*ctrace_cmd) {
      std::cout << salem::to_string(salem::ctrace(ctrace_n)) << "\n";
      return kOk;
    }
    if (*plan_cmd) {
      const auto plan = salem::dispatch(plan_n, plan_t);
      std::cout << (plan_format == "json" ? salem::to_json(plan).dump(2) + "\n" : plan_text(plan));
      return kOk;
    }
    if (*search_cmd) {
      salem::SearchOptions opts;
      opts.a_min = cfg.a_min;
      opts.a_max = cfg.a_max;
      opts.want = cfg.want;
      opts.precision_digits = cfg.precision_digits;
      opts.threads = cfg.threads;
      salem::SearchReport rep;
      if (theorem11) {
        const auto D = salem::parse_poly(std::ifstream(d_text) ? read_file(d_text) : d_text);
        rep = salem::search_plan(salem::plan_theorem11(search_n, search_t, D), opts);
      } else {
        rep = salem::search(search_n, search_t, opts);
      }
      if (cfg.format == "csv") {
        emit(cfg, salem::to_csv(rep));
      } else if (cfg.format == "text") {
        std::ostringstream os;
        os << plan_text(rep.plan);
        for (const auto& c : rep.certificates) os << "a=" << *c.a << " alpha=" << c.alpha.decimal << "\n";
        for (const auto& f : rep.failures) os << "a=" << f.a << " rejected at " << salem::to_string(f.stage) << ": " << f.reason << "\n";
        os << rep.certificates.size() << " certificates, " << rep.distinct_salem_count << " distinct\n";
        emit(cfg, os.str());
      } else {
        emit(cfg, salem::to_json(rep).dump(2) + "\n");
      }
      return rep.certificates.empty() ? kEmptySearch : kOk;
    }
    if (*certify_cmd) {
      if (!from_report.empty()) {
        const auto certs = salem::certificates_from_json(salem::json::parse(read_file(from_report)));
        int bad = 0;
        for (std::size_t i = 0; i < certs.size(); ++i) {
          const auto problems = salem::verify_certificate(certs[i]);
          std::cout << "certificate " << i << " (a=" << (certs[i].a ? std::to_string(*certs[i].a) : "-") << "): "
                    << (problems.empty() ? "ok" : "FAILED") << "\n";
          for (const auto& p : problems) std::cout << "  " << p << "\n";
          bad += problems.empty() ? 0 : 1;
        }
        std::cout << certs.size() - static_cast<std::size_t>(bad) << "/" << certs.size() << " certificates replayed\n";
        return bad == 0 ? kOk : kCertFailed;
      }
      if (poly_text.empty() && poly_file.empty()) throw CLI::RequiredError("--poly, --file or --from-report");
      if (certify_n < 1) throw CLI::RequiredError("--n");
      const auto p = salem::parse_poly(poly_file.empty() ? poly_text : read_file(poly_file));
      salem::IntPoly T = p;
      const bool looks_min = p.degree() >= 2 && p.degree() % 2 == 0 && salem::is_reciprocal(p);
      if (as == "min" || (as == "auto" && looks_min)) {
        if (p.degree() % 2 != 0 || !salem::is_reciprocal(p)) {
          std::cerr << "rejected: input is not reciprocal of even degree\n";
          return kCertFailed;
        }
        T = salem::trace_extract(p);
      }
      salem::CertifyOptions copts;
      copts.precision_digits = cfg.precision_digits;
      const auto out = salem::try_certify_trace(T, certify_n, copts);
      if (const auto* r = std::get_if<salem::Rejection>(&out)) return report_rejection(*r);
      const auto& cert = std::get<salem::SalemCertificate>(out);
      std::cout << (certify_format == "json" ? salem::to_json(cert).dump(2) + "\n" : certificate_text(cert));
      return kOk;
    }
    if (*selftest_cmd) {
      salem::SelftestConfig sc;
      sc.seed = cfg.seed;
      sc.corrupt_ctrace = inject_fault;
      const auto sum = salem::run_selftest(sc);
      for (const auto& s : sum.suites) {
        std::cout << (s.failed == 0 ? "PASS " : "FAIL ") << s.name << ": " << s.passed << " passed, " << s.failed
                  << " failed\n";
        for (const auto& f : s.failures) std::cout << "  failed: " << f << "\n";
      }
      std::cout << "total: " << sum.passed << " passed, " << sum.failed << " failed\n";
      return sum.ok() ? kOk : 1;
    }
  } catch (const salem::HypothesisError& e) {
    std::cerr << "hypothesis violated: " << e.condition() << "\n";
    return kHypothesis;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return kBadArgs;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadArgs;
  }
  return kBadArgs;
}
