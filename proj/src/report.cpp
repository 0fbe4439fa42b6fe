#include "salem/report.hpp"

#include <map>
#include <sstream>

namespace salem {

namespace {

std::string rat(const Rational& q) { return q.get_str(); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

json to_json(const RootPattern& rp) {
  return {{"below_minus2", rp.below_minus2}, {"in_minus2_2", rp.in_minus2_2}, {"at_endpoints", rp.at_endpoints},
          {"above_2", rp.above_2},           {"in_0_1", rp.in_0_1},           {"separable", rp.separable}};
}

RootPattern root_pattern_from_json(const json& j) {
  RootPattern rp;
  rp.below_minus2 = j.at("below_minus2").get<int>();
  rp.in_minus2_2 = j.at("in_minus2_2").get<int>();
  rp.at_endpoints = j.at("at_endpoints").get<int>();
  rp.above_2 = j.at("above_2").get<int>();
  rp.in_0_1 = j.at("in_0_1").get<int>();
  rp.separable = j.at("separable").get<bool>();
  return rp;
}

json to_json(const IrreducibilityWitness& w) {
  json j = {{"verdict", to_string(w.verdict)}, {"method", to_string(w.method)}};
  json primes = json::array();
  for (const auto& pd : w.filter) primes.push_back({{"prime", pd.prime}, {"degrees", pd.degrees}});
  j["primes"] = primes;
  if (w.factor) j["factor"] = to_string(*w.factor);
  if (w.method == IrreducibilityMethod::exact_factorization) {
    j["lift_prime"] = w.lift_prime;
    j["lift_exponent"] = w.lift_exponent;
    j["coefficient_bound"] = w.coefficient_bound.get_str();
    j["modular_factor_count"] = w.modular_factor_count;
    j["subsets_tried"] = w.subsets_tried;
  }
  return j;
}

IrreducibilityWitness witness_from_json(const json& j) {
  IrreducibilityWitness w;
  const auto verdict = j.at("verdict").get<std::string>();
  const auto method = j.at("method").get<std::string>();
  if (verdict == "irreducible") {
    w.verdict = Verdict::irreducible;
  } else if (verdict == "reducible") {
    w.verdict = Verdict::reducible;
  } else {
    throw std::invalid_argument("unknown irreducibility verdict '" + verdict + "'");
  }
  if (method == "modular-degree-filter") {
    w.method = IrreducibilityMethod::modular_degree_filter;
  } else if (method == "exact-factorization") {
    w.method = IrreducibilityMethod::exact_factorization;
  } else {
    throw std::invalid_argument("unknown irreducibility method '" + method + "'");
  }
  for (const auto& pd : j.at("primes")) {
    w.filter.push_back({pd.at("prime").get<std::uint64_t>(), pd.at("degrees").get<std::vector<int>>()});
  }
  if (j.contains("factor")) w.factor = parse_poly(j.at("factor").get<std::string>());
  if (j.contains("lift_prime")) {
    w.lift_prime = j.at("lift_prime").get<std::uint64_t>();
    w.lift_exponent = j.at("lift_exponent").get<int>();
    w.coefficient_bound = Integer(j.at("coefficient_bound").get<std::string>());
    w.modular_factor_count = j.at("modular_factor_count").get<int>();
    w.subsets_tried = j.at("subsets_tried").get<std::uint64_t>();
  }
  return w;
}

json to_json(const SalemCertificate& c) {
  json j;
  j["n"] = c.n;
  j["t"] = c.t;
  j["a"] = c.a ? json(*c.a) : json(nullptr);
  j["construction"] = to_string(c.construction);
  j["trace_poly"] = to_string(c.trace_poly);
  j["min_poly"] = to_string(c.min_poly);
  j["resultant"] = c.resultant_value.get_str();
  j["alpha"] = c.alpha.decimal;
  j["alpha_precision"] = c.alpha.digits;
  j["alpha_interval"] = {{"lo", rat(c.alpha.lo)}, {"hi", rat(c.alpha.hi)}};
  j["beta_interval"] = {{"lo", rat(c.beta_interval.lo)}, {"hi", rat(c.beta_interval.hi)}};
  if (c.beta_interval.exact_root) j["beta_interval"]["exact"] = rat(*c.beta_interval.exact_root);
  j["irreducibility"] = to_json(c.irreducibility);
  j["root_pattern"] = to_json(c.root_pattern);
  j["salem_degree_check"] = c.salem_degree_check;
  return j;
}

SalemCertificate certificate_from_json(const json& j) {
  SalemCertificate c;
  c.n = j.at("n").get<int>();
  c.t = j.at("t").get<int>();
  if (j.contains("a") && !j.at("a").is_null()) c.a = j.at("a").get<long>();
  const auto cid = parse_construction(j.at("construction").get<std::string>());
  if (!cid) throw std::invalid_argument("unknown construction id");
  c.construction = *cid;
  c.trace_poly = parse_poly(j.at("trace_poly").get<std::string>());
  c.min_poly = parse_poly(j.at("min_poly").get<std::string>());
  c.resultant_value = Integer(j.at("resultant").get<std::string>());
  c.alpha.decimal = j.at("alpha").get<std::string>();
  c.alpha.digits = j.at("alpha_precision").get<int>();
  c.alpha.lo = parse_rational(j.at("alpha_interval").at("lo").get<std::string>());
  c.alpha.hi = parse_rational(j.at("alpha_interval").at("hi").get<std::string>());
  const auto& b = j.at("beta_interval");
  c.beta_interval.lo = parse_rational(b.at("lo").get<std::string>());
  c.beta_interval.hi = parse_rational(b.at("hi").get<std::string>());
  if (b.contains("exact")) c.beta_interval.exact_root = parse_rational(b.at("exact").get<std::string>());
  c.irreducibility = witness_from_json(j.at("irreducibility"));
  c.root_pattern = root_pattern_from_json(j.at("root_pattern"));
  c.salem_degree_check = j.value("salem_degree_check", 2 * c.t >= 4);
  return c;
}

std::vector<SalemCertificate> certificates_from_json(const json& j) {
  std::vector<SalemCertificate> out;
  if (j.is_array()) {
    for (const auto& e : j) out.push_back(certificate_from_json(e));
  } else if (j.contains("certificates")) {
    for (const auto& e : j.at("certificates")) out.push_back(certificate_from_json(e));
  } else {
    out.push_back(certificate_from_json(j));
  }
  return out;
}

json to_json(const ConstructionPlan& p) {
  json factors = json::array();
  for (std::size_t i = 0; i < p.factors.size(); ++i) {
    factors.push_back({{"name", p.factor_names[i]}, {"poly", to_string(p.factors[i])}});
  }
  return {{"lemma", to_string(p.lemma)},
          {"n", p.n},
          {"t", p.t},
          {"k", p.k},
          {"l", p.l},
          {"factors", factors},
          {"a_factor", to_string(p.shape)},
          {"parity_evidence",
           {{"r_2_4k", p.parity.r_2_4k}, {"r_4k", p.parity.r_4k}, {"cn_in_0_1", p.parity.cn},
            {"cn_t_2_4k_in_0_1", p.parity.cn_t_2_4k}}}};
}

json to_json(const SearchReport& r) {
  json certs = json::array();
  for (const auto& c : r.certificates) certs.push_back(to_json(c));
  json fails = json::array();
  for (const auto& f : r.failures) fails.push_back({{"a", f.a}, {"check", to_string(f.stage)}, {"reason", f.reason}});
  return {{"n", r.n},
          {"t", r.t},
          {"plan", to_json(r.plan)},
          {"a_range", {r.a_min, r.a_max}},
          {"want", r.want},
          {"certificates", certs},
          {"failures", fails},
          {"distinct_salem_count", r.distinct_salem_count}};
}

std::string to_csv(const SearchReport& r) {
  std::map<long, std::string> rows;
  for (const auto& c : r.certificates) {
    rows[*c.a] = "certified,," + to_decimal((c.alpha.lo + c.alpha.hi) / 2, 15);
  }
  for (const auto& f : r.failures) {
    rows[f.a] = std::string("rejected,") + to_string(f.stage) + "," + csv_field(f.reason);
  }
  std::ostringstream os;
  os << "a,verdict,check,detail\n";
  for (const auto& [a, row] : rows) os << a << ',' << row << '\n';
  return os.str();
}

}  // namespace salem
