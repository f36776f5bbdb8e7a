#include "sitor/json_io.hpp"

#include <fstream>
#include <sstream>

namespace sitor {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw MalformedInputError(what); }

Rat rat_of(const Json& j, const char* what) {
  try {
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<long long>());
  } catch (const std::invalid_argument& e) {
    malformed(std::string(what) + ": " + e.what());
  }
  malformed(std::string(what) + ": expected an integer or a \"p/q\" string");
}

Int int_of(const Json& j, const char* what) {
  const Rat r = rat_of(j, what);
  if (!is_integer(r)) malformed(std::string(what) + ": expected an integer");
  return numerator(r);
}

Json complex_json(const std::complex<double>& z) { return Json::array({z.real(), z.imag()}); }

}  // namespace

IntMat parse_int_matrix(const Json& j) {
  if (!j.is_array() || j.empty()) malformed("matrix: expected a nonempty array of rows");
  const size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty()) malformed("matrix: rows must be nonempty arrays");
  const size_t cols = j[0].size();
  IntMat m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) malformed("matrix: ragged rows");
    for (size_t c = 0; c < cols; ++c)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) =
          int_of(j[i][c], "matrix entry");
  }
  return m;
}

IntRowVec parse_row_vector(const Json& j) {
  if (!j.is_array() || j.empty()) malformed("vector: expected a nonempty array");
  IntRowVec v(static_cast<Eigen::Index>(j.size()));
  for (size_t i = 0; i < j.size(); ++i)
    v(static_cast<Eigen::Index>(i)) = int_of(j[i], "vector entry");
  return v;
}

std::vector<Rat> parse_rat_vector(const Json& j) {
  if (!j.is_array() || j.empty()) malformed("point: expected a nonempty array");
  std::vector<Rat> v;
  v.reserve(j.size());
  for (const Json& c : j) v.push_back(rat_of(c, "coordinate"));
  return v;
}

RatPoly parse_poly(const Json& j) {
  if (!j.is_array()) malformed("polynomial: expected an array of coefficients");
  std::vector<Rat> coeffs;
  coeffs.reserve(j.size());
  for (const Json& c : j) coeffs.push_back(rat_of(c, "coefficient"));
  return RatPoly(std::move(coeffs));
}

MatrixFamily parse_family(const Json& j) {
  if (!j.is_object() || !j.contains("members"))
    malformed("family: expected an object with a \"members\" array");
  if (!j["members"].is_array() || j["members"].empty())
    malformed("family: \"members\" must be a nonempty array of matrices");
  std::vector<IntMat> members;
  for (const Json& m : j["members"]) members.push_back(parse_int_matrix(m));
  if (j.contains("n") && int_of(j["n"], "family n") != Int(members.front().rows()))
    malformed("family: \"n\" does not match the member order");
  return make_family(std::move(members));
}

MeasureSpec parse_measure(const Json& j) {
  if (!j.is_object() || !j.contains("variant")) malformed("measure: missing \"variant\"");
  const std::string variant = j["variant"].get<std::string>();
  if (variant == "lebesgue") {
    if (!j.contains("n")) malformed("measure: lebesgue needs \"n\"");
    return MeasureSpec::lebesgue(int_of(j["n"], "measure n").convert_to<long>());
  }
  if (variant != "atomic") malformed("measure: variant must be \"lebesgue\" or \"atomic\"");
  if (!j.contains("atoms") || !j["atoms"].is_array() || j["atoms"].empty())
    malformed("measure: atomic needs a nonempty \"atoms\" array");
  std::vector<Atom> atoms;
  for (const Json& aj : j["atoms"]) {
    if (!aj.is_object() || !aj.contains("point") || !aj.contains("weight"))
      malformed("measure: each atom needs \"point\" and \"weight\"");
    atoms.push_back(Atom{make_point(parse_rat_vector(aj["point"])),
                         rat_of(aj["weight"], "atom weight")});
  }
  return MeasureSpec::of(make_atomic(std::move(atoms)));
}

std::vector<PairKL> parse_pairs(const Json& j) {
  if (!j.is_array()) malformed("pairs: expected an array");
  std::vector<PairKL> pairs;
  for (const Json& pj : j) {
    PairKL p;
    if (pj.is_object() && pj.contains("k") && pj.contains("l")) {
      p.k = parse_row_vector(pj["k"]);
      p.l = parse_row_vector(pj["l"]);
    } else if (pj.is_array() && pj.size() == 2) {
      p.k = parse_row_vector(pj[0]);
      p.l = parse_row_vector(pj[1]);
    } else {
      malformed("pairs: each entry must be {\"k\":[...],\"l\":[...]} or [[...],[...]]");
    }
    pairs.push_back(std::move(p));
  }
  return pairs;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot open input file '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    malformed("cannot parse '" + path + "': " + e.what());
  }
}

Json to_json(const IntMat& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const IntRowVec& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.cols(); ++i) a.push_back(v(i).str());
  return a;
}

Json to_json(const RatPoly& p) {
  Json a = Json::array();
  for (const Rat& c : p.coeffs()) a.push_back(rat_to_string(c));
  return a;
}

Json to_json(const TorusPointQ& p) {
  Json a = Json::array();
  for (const Rat& c : p.coords) a.push_back(rat_to_string(c));
  return a;
}

Json to_json(const AtomicMeasure& mu) {
  Json j;
  j["variant"] = "atomic";
  j["n"] = std::to_string(mu.n);
  j["q"] = mu.q.str();
  Json atoms = Json::array();
  for (const Atom& atom : mu.atoms) {
    Json aj;
    aj["point"] = to_json(atom.point);
    aj["weight"] = rat_to_string(atom.weight);
    atoms.push_back(std::move(aj));
  }
  j["atoms"] = std::move(atoms);
  return j;
}

Json to_json(const MeasureSpec& mu) {
  if (mu.variant == MeasureSpec::Variant::atomic) return to_json(*mu.atomic);
  Json j;
  j["variant"] = "lebesgue";
  j["n"] = std::to_string(mu.n);
  return j;
}

Json to_json(const FourierValue& v) {
  Json j;
  j["approx"] = complex_json(v.approx);
  j["exactly_one"] = v.exactly_one;
  j["exactly_zero"] = v.exactly_zero;
  return j;
}

Json to_json(const ExactValue& v) {
  Json j;
  j["q"] = v.q.str();
  Json coords = Json::array();
  for (const Rat& c : v.value.coords()) coords.push_back(rat_to_string(c));
  j["coords"] = std::move(coords);
  if (const auto r = v.as_rational()) j["rational"] = rat_to_string(*r);
  j["approx"] = complex_json(v.approx);
  return j;
}

Json to_json(const DegreeCheck& c) {
  Json j;
  j["m"] = std::to_string(c.m);
  j["degree"] = std::to_string(c.degree);
  j["expected"] = std::to_string(c.expected);
  j["equal"] = c.equal;
  return j;
}

Json to_json(const EigenvalueDescriptor& d) {
  Json j;
  j["k"] = std::to_string(d.k);
  j["closed_form"] = d.closed_form();
  j["approx"] = d.approx;
  j["minpoly"] = to_json(d.minpoly);
  j["minpoly_pretty"] = d.minpoly.pretty();
  return j;
}

Json to_json(const RationalRootReport& r) {
  Json j;
  j["n"] = std::to_string(r.n);
  j["p_at_1"] = r.p_at_1.str();
  j["p_at_minus1"] = r.p_at_minus1.str();
  j["p_at_minus1_positive"] = r.p_at_minus1_positive;
  j["has_rational_root"] = r.has_rational_root;
  j["root_is_one"] = r.root_is_one;
  return j;
}

Json to_json(const BoxCheckReport& r) {
  Json j;
  j["K"] = std::to_string(r.K);
  j["all_pass"] = r.all_pass;
  if (r.counterexample)
    j["counterexample"] = to_json(*r.counterexample);
  else
    j["counterexample"] = nullptr;
  j["vectors_tested"] = std::to_string(r.vectors_tested);
  return j;
}

Json to_json(const SICertificate& c) {
  Json j;
  j["family_descriptor"] = c.family_descriptor;
  j["n"] = std::to_string(c.n);
  j["prime_modulus"] = std::to_string(c.modulus);
  j["modulus_is_prime"] = c.modulus_is_prime;
  Json degrees = Json::array();
  for (long d : c.per_eigenvalue_degrees) degrees.push_back(std::to_string(d));
  j["per_eigenvalue_degrees"] = std::move(degrees);
  j["conclusion"] = to_string(c.conclusion);
  j["notes"] = c.notes;
  return j;
}

Json to_json(const SIReport& r) {
  Json j;
  j["family_descriptor"] = r.family_descriptor;
  j["verdict"] = to_string(r.verdict);
  j["box"] = to_json(r.box);
  j["certificate"] = r.certificate ? to_json(*r.certificate) : Json(nullptr);
  return j;
}

Json to_json(const PairRecord& r) {
  Json j;
  j["k"] = to_json(r.pair.k);
  j["l"] = to_json(r.pair.l);
  j["verdict"] = to_string(r.verdict);
  j["target"] = r.exact_target ? to_json(*r.exact_target) : Json(nullptr);
  j["exact_limit"] = r.exact_limit ? to_json(*r.exact_limit) : Json(nullptr);
  j["preperiod"] = r.preperiod >= 0 ? Json(std::to_string(r.preperiod)) : Json(nullptr);
  j["period"] = r.period >= 0 ? Json(std::to_string(r.period)) : Json(nullptr);
  j["note"] = r.note;
  Json partials = Json::array();
  for (const auto& z : r.partials) partials.push_back(complex_json(z));
  j["partials"] = std::move(partials);
  return j;
}

Json to_json(const DiagnosticsReport& r) {
  Json j;
  j["kind"] = to_string(r.kind);
  j["inconsistent_input"] = r.inconsistent_input;
  if (!r.input_note.empty()) j["input_note"] = r.input_note;
  j["overall"] = to_string(r.overall);
  Json pairs = Json::array();
  for (const PairRecord& rec : r.per_pair) pairs.push_back(to_json(rec));
  j["pairs"] = std::move(pairs);
  return j;
}

Json to_json(const RigidityReport& r) {
  Json j;
  j["conclusion"] = to_string(r.conclusion);
  Json hyp;
  hyp["a_invariance"] = r.a_invariance;
  hyp["j_bound"] = std::to_string(r.j_bound);
  hyp["sampled_set"] = r.sampled_set;
  Json checks = Json::array();
  for (const InvarianceCheck& c : r.invariance_checks) {
    Json cj;
    cj["j"] = std::to_string(c.j);
    cj["i"] = std::to_string(c.i);
    cj["holds"] = c.holds;
    checks.push_back(std::move(cj));
  }
  hyp["invariance_checks"] = std::move(checks);
  j["hypotheses"] = std::move(hyp);
  Json chain = Json::array();
  for (size_t i = 0; i < r.fourier_chain.size(); ++i) {
    Json cj;
    cj["i"] = std::to_string(i + 1);
    cj["k_b"] = to_json(r.chain_rows[i]);
    cj["value"] = to_json(r.fourier_chain[i]);
    chain.push_back(std::move(cj));
  }
  j["fourier_chain"] = std::move(chain);
  j["all_exactly_one"] = r.all_exactly_one;
  Json bound = Json::array();
  for (const TorusPointQ& p : r.support_bound) bound.push_back(to_json(p));
  j["support_bound"] = std::move(bound);
  j["support_verified"] = r.support_verified;
  j["notes"] = r.notes;
  return j;
}

std::string emit_json(const Json& j) { return j.dump(2) + "\n"; }

std::string emit_csv(const Json& j) {
  std::ostringstream os;
  os << "key,value\n";
  for (const auto& [pointer, value] : j.flatten().items()) {
    os << pointer << ",";
    if (value.is_string())
      os << value.get<std::string>();
    else
      os << value.dump();
    os << "\n";
  }
  return os.str();
}

std::string emit_csv(const DiagnosticsReport& r) {
  std::ostringstream os;
  os << "N,average_re,average_im,target_re,target_im\n";
  for (const PairRecord& rec : r.per_pair) {
    long long n = 1;
    for (const auto& z : rec.partials) {
      os << n++ << "," << Json(z.real()).dump() << "," << Json(z.imag()).dump() << ","
         << Json(rec.target_approx.real()).dump() << ","
         << Json(rec.target_approx.imag()).dump() << "\n";
    }
  }
  return os.str();
}

}  // namespace sitor
