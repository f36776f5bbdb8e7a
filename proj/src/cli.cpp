#include "sitor/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>

#include "sitor/json_io.hpp"

namespace sitor::cli {

namespace {

Json load_inline_or_file(const std::string& s) {
  const auto pos = s.find_first_not_of(" \t");
  if (pos != std::string::npos && (s[pos] == '[' || s[pos] == '{')) {
    try {
      return Json::parse(s);
    } catch (const nlohmann::json::parse_error& e) {
      throw MalformedInputError(std::string("cannot parse inline JSON: ") + e.what());
    }
  }
  return read_json_file(s);
}

long default_box_k(long n) { return n <= 3 ? 10 : 3; }

struct Options {
  long long n = 0;
  std::string a = "2";
  std::string variant = "M";
  long long box_k = -1;  // -1: dimension-based default
  unsigned long m = 0;
  std::string matrix_path;
  std::string family_path;
  std::string measure_path;
  std::string pairs_path;
  std::string k_arg;
  std::string x0_arg;
  std::string witness_arg;
  std::string folner = "interval";
  std::string subset = "all";
  long long big_n = 100;
  long long j_bound = 64;
  unsigned threads = 0;
  std::string format = "json";
  std::string out_path;
};

FolnerSequence folner_from(const std::string& name) {
  if (name == "interval") return FolnerSequence::interval();
  if (name == "shifted") return FolnerSequence::shifted_interval();
  throw ContractError("unknown averaging sequence '" + name + "' (interval or shifted)");
}

IntegerSubset subset_from(const std::string& s) {
  if (s == "all") return IntegerSubset::all();
  if (s == "even") return IntegerSubset::progression(0, 2);
  if (s == "odd") return IntegerSubset::progression(1, 2);
  const auto colon = s.find(':');
  if (colon != std::string::npos) {
    try {
      const long long start = std::stoll(s.substr(0, colon));
      const long long step = std::stoll(s.substr(colon + 1));
      return IntegerSubset::progression(start, step);
    } catch (const std::exception&) {
      throw ContractError("bad progression '" + s + "' (expected start:step)");
    }
  }
  const Json j = load_inline_or_file(s);
  if (!j.is_array()) throw MalformedInputError("subset: expected a JSON array of integers");
  std::vector<long long> values;
  for (const Json& v : j) {
    if (!v.is_number_integer()) throw MalformedInputError("subset: entries must be integers");
    values.push_back(v.get<long long>());
  }
  return IntegerSubset::explicit_list(std::move(values));
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args) {
    CLI::App app{"exact strongly-independent matrix families, toral measures, and "
                 "Fourier mixing diagnostics"};
    app.name("sitor");
    app.require_subcommand(1);
    app.add_option("--format", opt_.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", opt_.out_path, "write the report to this file");
    app.add_option("--threads", opt_.threads, "worker threads (0 = hardware)");

    build_tridiag(app);
    build_si(app);
    build_field(app);
    build_measure(app);
    build_mix(app);

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out_, err_);
      return code == 0 ? 0 : 1;
    } catch (const MalformedInputError& e) {
      err_ << "input error: " << e.what() << "\n";
      return 2;
    } catch (const std::invalid_argument& e) {  // contract and dimension errors
      err_ << "error: " << e.what() << "\n";
      return 1;
    } catch (const std::domain_error& e) {  // singular/unsupported/domain errors
      err_ << "error: " << e.what() << "\n";
      return 1;
    }
    return 0;
  }

 private:
  void emit(const Json& j) {
    const std::string text = opt_.format == "csv" ? emit_csv(j) : emit_json(j);
    write(text);
  }

  void emit_diagnostics(const DiagnosticsReport& r) {
    const std::string text = opt_.format == "csv" ? emit_csv(r) : emit_json(to_json(r));
    write(text);
  }

  void write(const std::string& text) {
    if (opt_.out_path.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(opt_.out_path);
    if (!f) throw ContractError("cannot open output file '" + opt_.out_path + "'");
    f << text;
  }

  long checked_n() const {
    if (opt_.n < 1) throw ContractError("--n must be >= 1");
    if (opt_.n > 4096) throw ContractError("--n is too large for a desk-scale run");
    return static_cast<long>(opt_.n);
  }

  TridiagSpec tridiag_spec() const {
    TridiagSpec spec;
    spec.n = checked_n();
    spec.a = rat_from_string(opt_.a);
    spec.variant = variant_from_string(opt_.variant);
    return spec;
  }

  MatrixFamily family_for_si() const {
    if (!opt_.family_path.empty()) return parse_family(load_inline_or_file(opt_.family_path));
    if (opt_.n >= 1)
      return powers_family(make_tridiag({static_cast<long>(opt_.n), Rat(2), TridiagVariant::M}),
                           static_cast<long>(opt_.n));
    throw ContractError("give either --family FILE or --n N (powers of M_n(2))");
  }

  long effective_k(long n) const {
    if (opt_.box_k < 0) return default_box_k(n);
    if (opt_.box_k < 1) throw ContractError("--K must be >= 1");
    return static_cast<long>(opt_.box_k);
  }

  void build_tridiag(CLI::App& app) {
    auto* tri = app.add_subcommand("tridiag", "tridiagonal matrix families M_n(a), N_n(a)");
    tri->require_subcommand(1);
    tri->fallthrough();

    auto* det = tri->add_subcommand("det", "determinant by recurrence, closed form, and "
                                           "fraction-free elimination");
    det->fallthrough();
    det->add_option("--n", opt_.n, "matrix order")->required();
    det->add_option("--a", opt_.a, "diagonal value (integer)");
    det->add_option("--variant", opt_.variant, "M or N");
    det->callback([this] {
      const TridiagSpec spec = tridiag_spec();
      const Rat rec = det_recurrence(spec);
      const ClosedFormReport closed = det_closed_form(spec);
      const Int elim = sitor::det(make_tridiag(spec));
      Json j;
      j["n"] = std::to_string(spec.n);
      j["a"] = rat_to_string(spec.a);
      j["variant"] = variant_name(spec.variant);
      j["det"] = rat_to_string(rec);
      j["closed_form"] = rat_to_string(closed.value);
      j["closed_form_case"] = closed.case_applied;
      if (!closed.erratum_note.empty()) j["erratum_note"] = closed.erratum_note;
      j["fraction_free"] = elim.str();
      j["methods_agree"] = rec == closed.value && rec == Rat(elim);
      emit(j);
    });

    auto* charpoly = tri->add_subcommand("charpoly", "characteristic polynomial of M_n(2)");
    charpoly->fallthrough();
    charpoly->add_option("--n", opt_.n, "matrix order")->required();
    charpoly->callback([this] {
      const long n = checked_n();
      const RatPoly p = char_poly_m2(n);
      Json j;
      j["n"] = std::to_string(n);
      j["charpoly"] = to_json(p);
      j["pretty"] = p.pretty();
      emit(j);
    });

    auto* eigen = tri->add_subcommand("eigen", "eigenvalues of M_n(2) with minimal polynomials");
    eigen->fallthrough();
    eigen->add_option("--n", opt_.n, "matrix order")->required();
    eigen->callback([this] {
      const long n = checked_n();
      Json j;
      j["n"] = std::to_string(n);
      Json list = Json::array();
      for (const EigenvalueDescriptor& d : eigenvalues_m2(n)) list.push_back(to_json(d));
      j["eigenvalues"] = std::move(list);
      emit(j);
    });

    auto* classify = tri->add_subcommand("classify", "rational roots of the characteristic "
                                                     "polynomial of M_n(2)");
    classify->fallthrough();
    classify->add_option("--n", opt_.n, "matrix order")->required();
    classify->callback([this] {
      const long n = checked_n();
      Json j = to_json(rational_root_classification(n));
      j["n_mod_3"] = std::to_string(n % 3);
      emit(j);
    });
  }

  void build_si(CLI::App& app) {
    auto* si = app.add_subcommand("si", "strong independence checks and certificates");
    si->require_subcommand(1);
    si->fallthrough();

    auto* prove = si->add_subcommand("prove", "degree certificate for the powers of M_n(2)");
    prove->fallthrough();
    prove->add_option("--n", opt_.n, "dimension")->required();
    prove->callback([this] { emit(to_json(certify_powers_m2(checked_n()))); });

    auto* box = si->add_subcommand("box", "exhaustive check over [-K,K]^n");
    box->fallthrough();
    box->add_option("--family", opt_.family_path, "family JSON file");
    box->add_option("--n", opt_.n, "use the powers of M_n(2)");
    box->add_option("--K", opt_.box_k, "box radius");
    box->callback([this] {
      const MatrixFamily fam = family_for_si();
      emit(to_json(box_check(fam, effective_k(fam.n), opt_.threads)));
    });

    auto* report = si->add_subcommand("report", "box evidence merged with a certificate");
    report->fallthrough();
    report->add_option("--family", opt_.family_path, "family JSON file");
    report->add_option("--n", opt_.n, "use the powers of M_n(2)");
    report->add_option("--K", opt_.box_k, "box radius");
    report->callback([this] {
      const MatrixFamily fam = family_for_si();
      std::optional<SICertificate> cert;
      if (opt_.family_path.empty()) cert = certify_powers_m2(static_cast<long>(opt_.n));
      emit(to_json(si_report(fam, effective_k(fam.n), std::move(cert), opt_.threads)));
    });
  }

  void build_field(CLI::App& app) {
    auto* field = app.add_subcommand("field", "cyclotomic and real-cyclotomic polynomials");
    field->require_subcommand(1);
    field->fallthrough();

    auto* cyc = field->add_subcommand("cyclotomic", "m-th cyclotomic polynomial");
    cyc->fallthrough();
    cyc->add_option("--m", opt_.m, "index m >= 1")->required();
    cyc->callback([this] {
      const RatPoly p = cyclotomic_poly(opt_.m);
      Json j;
      j["m"] = std::to_string(opt_.m);
      j["phi"] = std::to_string(euler_phi(opt_.m));
      j["degree"] = std::to_string(p.degree());
      j["coeffs"] = to_json(p);
      j["pretty"] = p.pretty();
      emit(j);
    });

    auto* realmin = field->add_subcommand("realmin", "minimal polynomial of 2cos(2pi/m)");
    realmin->fallthrough();
    realmin->add_option("--m", opt_.m, "index m >= 3")->required();
    realmin->callback([this] {
      const RatPoly p = real_cyclotomic_minpoly(opt_.m);
      Json j;
      j["m"] = std::to_string(opt_.m);
      j["half_phi"] = std::to_string(euler_phi(opt_.m) / 2);
      j["degree"] = std::to_string(p.degree());
      j["coeffs"] = to_json(p);
      j["pretty"] = p.pretty();
      emit(j);
    });

    auto* degrees = field->add_subcommand("degrees", "field-degree report for index m");
    degrees->fallthrough();
    degrees->add_option("--m", opt_.m, "index m >= 3")->required();
    degrees->callback([this] {
      Json j;
      j["m"] = std::to_string(opt_.m);
      j["cyclotomic"] = to_json(cyclotomic_degree_check(opt_.m));
      j["real_subfield"] = to_json(real_cosine_degree_check(opt_.m));
      emit(j);
    });
  }

  void build_measure(CLI::App& app) {
    auto* measure = app.add_subcommand("measure", "measures on the torus and their "
                                                  "Fourier coefficients");
    measure->require_subcommand(1);
    measure->fallthrough();

    auto* fourier_cmd = measure->add_subcommand("fourier", "coefficient at a frequency vector");
    fourier_cmd->fallthrough();
    fourier_cmd->add_option("--measure", opt_.measure_path, "measure JSON file")->required();
    fourier_cmd->add_option("--k", opt_.k_arg, "frequency vector (inline JSON or file)")
        ->required();
    fourier_cmd->callback([this] {
      const MeasureSpec mu = parse_measure(load_inline_or_file(opt_.measure_path));
      const IntRowVec k = parse_row_vector(load_inline_or_file(opt_.k_arg));
      Json j;
      j["k"] = to_json(k);
      j["value"] = to_json(fourier(mu, k));
      emit(j);
    });

    auto* invariant = measure->add_subcommand("invariant", "pushforward invariance check");
    invariant->fallthrough();
    invariant->add_option("--measure", opt_.measure_path, "measure JSON file")->required();
    invariant->add_option("--matrix", opt_.matrix_path, "matrix JSON file")->required();
    invariant->callback([this] {
      const MeasureSpec mu = parse_measure(load_inline_or_file(opt_.measure_path));
      const IntMat a = parse_int_matrix(load_inline_or_file(opt_.matrix_path));
      Json j;
      j["matrix"] = to_json(a);
      j["invariant"] = is_invariant(mu, a);
      emit(j);
    });

    auto* support = measure->add_subcommand("support", "finite support bound from a "
                                                       "stacked frequency matrix");
    support->fallthrough();
    support->add_option("--matrix", opt_.matrix_path, "stacked rows JSON file")->required();
    support->add_option("--measure", opt_.measure_path, "optional measure to test containment");
    support->callback([this] {
      const IntMat l = parse_int_matrix(load_inline_or_file(opt_.matrix_path));
      const auto bound = finite_support_candidates(l);
      Json j;
      j["matrix"] = to_json(l);
      Json points = Json::array();
      for (const TorusPointQ& p : bound) points.push_back(to_json(p));
      j["candidates"] = std::move(points);
      j["count"] = std::to_string(bound.size());
      if (!opt_.measure_path.empty()) {
        const MeasureSpec mu = parse_measure(load_inline_or_file(opt_.measure_path));
        if (mu.variant != MeasureSpec::Variant::atomic)
          throw ContractError("containment check needs an atomic measure");
        bool inside = true;
        for (const Atom& atom : mu.atomic->atoms)
          if (!std::binary_search(bound.begin(), bound.end(), atom.point)) inside = false;
        j["support_inside_bound"] = inside;
      }
      emit(j);
    });

    auto* orbit = measure->add_subcommand("orbit", "empirical measure along an orbit");
    orbit->fallthrough();
    orbit->add_option("--x0", opt_.x0_arg, "starting point (inline JSON or file)")->required();
    orbit->add_option("--matrix", opt_.matrix_path, "matrix JSON file")->required();
    orbit->add_option("--N", opt_.big_n, "number of orbit steps")->required();
    orbit->callback([this] {
      const TorusPointQ x0 = make_point(parse_rat_vector(load_inline_or_file(opt_.x0_arg)));
      const IntMat a = parse_int_matrix(load_inline_or_file(opt_.matrix_path));
      emit(to_json(orbit_measure(x0, a, opt_.big_n)));
    });
  }

  void build_mix(CLI::App& app) {
    auto* mix = app.add_subcommand("mix", "ergodicity/mixing diagnostics and the rigidity "
                                          "harness");
    mix->require_subcommand(1);
    mix->fallthrough();

    const auto add_diag = [this, mix](const char* name, const char* desc,
                                      DiagnosticsKind kind) {
      auto* cmd = mix->add_subcommand(name, desc);
      cmd->fallthrough();
      cmd->add_option("--measure", opt_.measure_path, "measure JSON file")->required();
      cmd->add_option("--matrix", opt_.matrix_path, "matrix JSON file")->required();
      cmd->add_option("--pairs", opt_.pairs_path, "pairs JSON (inline or file)")->required();
      cmd->add_option("--folner", opt_.folner, "averaging sequence: interval or shifted");
      cmd->add_option("--N", opt_.big_n, "partial averages up to N");
      cmd->callback([this, kind] {
        DiagnosticsRequest req;
        req.mu = parse_measure(load_inline_or_file(opt_.measure_path));
        req.a = parse_int_matrix(load_inline_or_file(opt_.matrix_path));
        req.pairs = parse_pairs(load_inline_or_file(opt_.pairs_path));
        req.folner = folner_from(opt_.folner);
        req.n_max = opt_.big_n;
        req.threads = opt_.threads;
        switch (kind) {
          case DiagnosticsKind::ergodic:
            emit_diagnostics(ergodic_average(req));
            break;
          case DiagnosticsKind::weak_mixing:
            emit_diagnostics(weak_mixing_average(req));
            break;
          case DiagnosticsKind::strong_mixing:
            emit_diagnostics(strong_mixing_tail(req));
            break;
        }
      });
    };
    add_diag("ergodic", "averages of mu-hat(k A^j + l)", DiagnosticsKind::ergodic);
    add_diag("weak", "averages of squared deviations", DiagnosticsKind::weak_mixing);
    add_diag("strong", "tail of mu-hat(k A^j + l)", DiagnosticsKind::strong_mixing);

    auto* rigidity = mix->add_subcommand("rigidity", "replay the rigidity chain on a measure");
    rigidity->fallthrough();
    rigidity->add_option("--measure", opt_.measure_path, "measure JSON file")->required();
    rigidity->add_option("--matrix", opt_.matrix_path, "matrix JSON file")->required();
    rigidity->add_option("--family", opt_.family_path, "family JSON file")->required();
    rigidity->add_option("--witness", opt_.witness_arg, "witness vector (inline JSON or file)")
        ->required();
    rigidity->add_option("--K", opt_.box_k, "box radius for independence evidence");
    rigidity->add_option("--j-bound", opt_.j_bound, "sample invariance for j <= bound");
    rigidity->add_option("--E", opt_.subset, "sampled j set: all, even, odd, start:step, "
                                             "or JSON list");
    rigidity->callback([this] {
      RigidityRequest req;
      req.mu = parse_measure(load_inline_or_file(opt_.measure_path));
      req.a = parse_int_matrix(load_inline_or_file(opt_.matrix_path));
      req.family = parse_family(load_inline_or_file(opt_.family_path));
      req.witness_k = parse_row_vector(load_inline_or_file(opt_.witness_arg));
      req.e = subset_from(opt_.subset);
      req.j_bound = opt_.j_bound;
      req.box_evidence = box_check(req.family, effective_k(req.family.n), opt_.threads);
      if (!req.box_evidence->all_pass)
        throw ContractError(
            "family is refuted by the box check; the rigidity chain does not apply");
      emit(to_json(rigidity_harness(req)));
    });
  }

  Options opt_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Runner runner(out, err);
  return runner.run(args);
}

}  // namespace sitor::cli
