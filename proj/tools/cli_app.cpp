#include "cli_app.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <random>
#include <sstream>

#include "hofa/json_io.hpp"
#include "hofa/multifunction.hpp"

namespace hofa::cli {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::vector<std::int64_t> parse_factor_list(const std::string& text) {
  std::vector<std::int64_t> factors;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) factors.push_back(std::stoll(part));
  return factors;
}

std::vector<std::int64_t> parse_index_list(const std::string& text) {
  return parse_factor_list(text);
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  return json::parse(in);
}

GroupFunction load_function(const std::string& path, const std::string& group_flag,
                            std::int64_t group_cap) {
  GroupFunction f = function_from_json(load_json(path), group_cap);
  if (!group_flag.empty()) {
    const auto g = FiniteAbelianGroup::make(parse_factor_list(group_flag), group_cap);
    if (!(g == f.group))
      throw std::invalid_argument("--group disagrees with the group stored in " + path);
  }
  return f;
}

std::int64_t checked_power(std::int64_t base, int e, std::int64_t cap, const std::string& what) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > cap / base)
      throw SizeCapError(what + ": " + std::to_string(base) + "^" + std::to_string(e) +
                         " exceeds cap " + std::to_string(cap));
    r *= base;
  }
  return r;
}

double unit_real(std::mt19937_64& r) { return static_cast<double>(r() >> 11) * 0x1.0p-53; }

// ---------------------------------------------------------------------------
// subcommand payloads

struct NormArgs {
  std::string group, fn, method = "cube";
  int k = 2;
  std::int64_t cap_cube = 100'000'000;
  std::int64_t cap_definition = 100'000'000;
  std::int64_t group_cap = 10'000'000;
};

json run_norm(const NormArgs& a, json& inputs) {
  const GroupFunction f = load_function(a.fn, a.group, a.group_cap);
  inputs["group"] = group_to_json(f.group);
  inputs["k"] = a.k;
  inputs["method"] = a.method;
  inputs["fn"] = a.fn;

  json out;
  out["k"] = a.k;
  out["method"] = a.method;
  if (a.method == "cube" || a.method == "both") {
    checked_power(f.group.order(), a.k + 1, a.cap_cube, "norm cube path: order^(k+1)");
  }
  if (a.method == "cube") {
    out["U_k"] = gowers_norm(f, a.k, GowersMethod::kCube);
  } else if (a.method == "definition") {
    out["U_k"] = gowers_norm(f, a.k, GowersMethod::kDefinition, a.cap_definition);
  } else if (a.method == "both") {
    const double cube = gowers_norm(f, a.k, GowersMethod::kCube);
    const double def = gowers_norm(f, a.k, GowersMethod::kDefinition, a.cap_definition);
    out["cube"] = cube;
    out["definition"] = def;
    out["agreement"] = std::abs(cube - def);
    out["U_k"] = cube;
  } else {
    throw std::invalid_argument("norm: unknown method " + a.method);
  }
  return out;
}

struct SpectrumArgs {
  std::string group, fn, csv;
  int degree = 1;
  int top = 10;
  std::int64_t dict_cap = 1'000'000;
  std::int64_t group_cap = 10'000'000;
};

json run_spectrum(const SpectrumArgs& a, json& inputs) {
  const GroupFunction f = load_function(a.fn, a.group, a.group_cap);
  inputs["group"] = group_to_json(f.group);
  inputs["degree"] = a.degree;
  inputs["top"] = a.top;
  inputs["fn"] = a.fn;

  if (!a.csv.empty()) {
    const GroupFunction spec = fourier(f);
    std::ofstream out(a.csv);
    if (!out) throw std::invalid_argument("cannot open CSV output file: " + a.csv);
    out << "xi_index,re,im,magnitude\n";
    char buf[160];
    for (std::int64_t xi = 0; xi < spec.size(); ++xi) {
      std::snprintf(buf, sizeof(buf), "%lld,%.17g,%.17g,%.17g\n", static_cast<long long>(xi),
                    spec[xi].real(), spec[xi].imag(), std::abs(spec[xi]));
      out << buf;
    }
    inputs["csv"] = a.csv;
  }

  const PhaseDictionary dict = make_phase_dictionary(f.group, a.degree, a.dict_cap);
  const auto spectrum = correlation_spectrum(f, dict);
  json entries = json::array();
  const std::size_t keep = std::min<std::size_t>(spectrum.size(), static_cast<std::size_t>(a.top));
  for (std::size_t i = 0; i < keep; ++i) {
    entries.push_back(json{{"phase", phase_to_json(spectrum[i].first)},
                           {"re", spectrum[i].second.real()},
                           {"im", spectrum[i].second.imag()},
                           {"magnitude", std::abs(spectrum[i].second)}});
  }
  return json{{"degree", a.degree}, {"dictionary_size", dict.phases.size()},
              {"entries", std::move(entries)}};
}

struct DecomposeArgs {
  std::string group, fn, mode = "pursuit";
  int k = 2;
  double delta = 0.1;
  int max_iter = 100;
  std::int64_t dict_cap = 1'000'000;
  std::int64_t group_cap = 10'000'000;
};

json run_decompose(const DecomposeArgs& a, json& inputs) {
  const GroupFunction f = load_function(a.fn, a.group, a.group_cap);
  inputs["group"] = group_to_json(f.group);
  inputs["k"] = a.k;
  inputs["delta"] = a.delta;
  inputs["max_iter"] = a.max_iter;
  inputs["mode"] = a.mode;
  inputs["fn"] = a.fn;

  DecompositionResult r;
  if (a.mode == "pursuit") {
    r = matching_pursuit(f, a.k, a.delta, a.max_iter, a.dict_cap);
  } else if (a.mode == "truncate") {
    r = fourier_truncate(f, a.delta);
  } else {
    throw std::invalid_argument("decompose: unknown mode " + a.mode);
  }
  return decomposition_to_json(r);
}

struct KernelArgs {
  std::string op, in;
  int k = 2;
  double tol = 1e-9;
  std::int64_t dict_cap = 1'000'000;
  std::int64_t group_cap = 10'000'000;
};

json run_kernel(const KernelArgs& a, json& inputs) {
  const Kernel k = kernel_from_json(load_json(a.in), a.group_cap);
  inputs["group"] = group_to_json(k.group);
  inputs["op"] = a.op;
  inputs["k"] = a.k;
  inputs["in"] = a.in;

  if (a.op == "spectrum") {
    json spaces = json::array();
    for (const EigenSpace& s : spectral_decomposition(k)) {
      json fns = json::array();
      for (const GroupFunction& u : s.functions) {
        json values = json::array();
        for (const cplx& v : u.values) values.push_back(json::array({v.real(), v.imag()}));
        fns.push_back(std::move(values));
      }
      spaces.push_back(json{{"eigenvalue", s.eigenvalue}, {"functions", std::move(fns)}});
    }
    return json{{"eigenspaces", std::move(spaces)}};
  }
  if (a.op == "membership") {
    inputs["tol"] = a.tol;
    const CkReport r = ck_membership(k, a.k, a.tol);
    return json{{"ok", r.ok}, {"max_residual", r.max_residual}, {"k", a.k}, {"tol", a.tol}};
  }
  if (a.op == "recover") {
    json phases = json::array();
    for (const PolynomialPhase& phi : planted_phase_recovery(k, a.k, a.dict_cap))
      phases.push_back(phase_to_json(phi));
    json eigenvalues = json::array();
    for (const EigenSpace& s : spectral_decomposition(k)) eigenvalues.push_back(s.eigenvalue);
    return json{{"phases", std::move(phases)}, {"eigenvalues", std::move(eigenvalues)}};
  }
  throw std::invalid_argument("kernel: unknown op " + a.op);
}

struct CubeCheckArgs {
  std::string group;
  int k = 2;
  std::uint64_t seed = 0;
  std::int64_t group_cap = 10'000'000;
};

json run_cube_check(const CubeCheckArgs& a, json& inputs) {
  const auto g = FiniteAbelianGroup::make(parse_factor_list(a.group), a.group_cap);
  inputs["group"] = group_to_json(g);
  inputs["k"] = a.k;
  inputs["seed"] = a.seed;
  const int k = a.k;
  const std::int64_t n = g.order();
  const std::int64_t vertices = std::int64_t{1} << k;

  json checks = json::array();
  bool all_pass = true;
  auto add_check = [&](const std::string& name, bool pass, const std::string& detail) {
    checks.push_back(json{{"name", name}, {"pass", pass}, {"detail", detail}});
    all_pass = all_pass && pass;
  };

  std::mt19937_64 rng(a.seed);
  auto random_coords = [&]() {
    std::vector<GroupElement> coords;
    for (int i = 0; i <= k; ++i)
      coords.push_back(g.element_at(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n))));
    return coords;
  };

  {
    bool pass = true;
    for (int trial = 0; trial < 200; ++trial) {
      if (!cube_membership(g, k, spider_map(g, k, random_coords()))) pass = false;
    }
    add_check("spider_image_satisfies_face_equations", pass, "200 seeded spider points");
  }

  {
    double points = 1.0;
    for (int i = 0; i <= k; ++i) points *= static_cast<double>(n);
    if (points <= 1e6) {
      std::set<std::vector<std::int64_t>> image;
      std::vector<GroupElement> coords(static_cast<std::size_t>(k) + 1, g.zero());
      const auto total = static_cast<std::int64_t>(points);
      for (std::int64_t flat = 0; flat < total; ++flat) {
        std::int64_t rest = flat;
        for (int i = k; i >= 0; --i) {
          coords[static_cast<std::size_t>(i)] = g.element_at(rest % n);
          rest /= n;
        }
        std::vector<std::int64_t> idx;
        for (const GroupElement& e : spider_map(g, k, coords)) idx.push_back(g.index_of(e));
        image.insert(std::move(idx));
      }
      add_check("spider_map_injective", static_cast<std::int64_t>(image.size()) == total,
                "|B_k| = " + std::to_string(image.size()) + ", |A|^(k+1) = " + std::to_string(total));
    } else {
      add_check("spider_map_injective", true, "skipped: |A|^(k+1) too large for enumeration");
    }
  }

  {
    std::vector<GroupFunction> ones(static_cast<std::size_t>(vertices),
                                    make_constant(g, cplx{1, 0}));
    const double dev = std::abs(tilde_form(ones, k) - cplx{1, 0});
    add_check("tilde_form_normalization", dev < 1e-12, "deviation " + std::to_string(dev));
  }

  {
    std::vector<GroupFunction> fs;
    for (std::int64_t v = 0; v < vertices; ++v) {
      GroupFunction f = make_zero(g);
      for (cplx& x : f.values) x = cplx{2.0 * unit_real(rng) - 1.0, 2.0 * unit_real(rng) - 1.0};
      fs.push_back(std::move(f));
    }
    const cplx base = tilde_form(fs, k);
    double worst = 0.0;
    for (int dir = 0; dir < k; ++dir) {
      std::vector<std::uint32_t> half, comp;
      for (std::uint32_t v = 0; v < vertices; ++v)
        (((v >> dir) & 1u) ? half : comp).push_back(v);
      for (std::int64_t c = 0; c < n; ++c) {
        worst = std::max(worst, std::abs(tilde_form(apply_face_action({half, Translation{c}}, fs, k), k) - base));
        worst = std::max(worst, std::abs(tilde_form(apply_face_action({comp, Translation{c}}, fs, k), k) - base));
      }
    }
    add_check("codim1_face_translation_invariance", worst < 1e-10,
              "worst deviation " + std::to_string(worst));
    if (k == 2) {
      double worst_edge = 0.0;
      for (const auto& [v1, v2] : CubeIndex(k).edges()) {
        for (std::int64_t c = 0; c < n; ++c) {
          worst_edge = std::max(worst_edge,
                                std::abs(tilde_form(apply_face_action({{v1, v2}, Translation{c}}, fs, k), k) - base));
        }
      }
      add_check("dim2_edge_translation_invariance", worst_edge < 1e-10,
                "worst deviation " + std::to_string(worst_edge));
    }
  }

  if (k >= 2) {
    const bool ok = commutator_check(g, k, Edge{0, 1}, Edge{0, 2}, Translation{1 % n},
                                     Translation{(n > 2 ? 2 : 1) % n});
    add_check("commutator_of_translations_is_identity", ok, "edges {0,1} and {0,2}");
  }

  return json{{"checks", std::move(checks)}, {"all_pass", all_pass}};
}

struct GenArgs {
  std::string group, kind, coeffs, set, out;
  double noise = 0.0;
  std::uint64_t seed = 0;
  std::int64_t group_cap = 10'000'000;
};

json run_gen(const GenArgs& a, json& inputs) {
  const auto g = FiniteAbelianGroup::make(parse_factor_list(a.group), a.group_cap);
  inputs["group"] = group_to_json(g);
  inputs["kind"] = a.kind;
  inputs["seed"] = a.seed;
  if (!a.coeffs.empty()) inputs["coeffs"] = a.coeffs;
  if (!a.set.empty()) inputs["set"] = a.set;
  if (a.kind == "noisy-phase") inputs["noise"] = a.noise;

  std::mt19937_64 rng(a.seed);
  GroupFunction f = make_zero(g);

  auto phase_from_coeffs = [&]() {
    if (g.rank() != 1)
      throw std::invalid_argument("gen: --coeffs phase generation needs a single-factor group");
    const auto pn = as_prime_power_group(g);
    if (!pn) throw std::invalid_argument("gen: phase generation needs an odd prime order");
    std::map<Monomial, std::int64_t, MonomialLess> c;
    std::int32_t power = 0;
    for (std::int64_t v : parse_index_list(a.coeffs)) c[Monomial{power++}] = v;
    return make_phase(pn->first, 1, std::move(c));
  };

  if (a.kind == "phase") {
    f = phase_eval(phase_from_coeffs(), g);
  } else if (a.kind == "indicator") {
    f = make_indicator(g, parse_index_list(a.set));
  } else if (a.kind == "random-pm1") {
    for (cplx& v : f.values) v = cplx{(rng() & 1) ? 1.0 : -1.0, 0.0};
  } else if (a.kind == "noisy-phase") {
    f = phase_eval(phase_from_coeffs(), g);
    for (cplx& v : f.values) {
      const double mag = a.noise * std::sqrt(unit_real(rng));
      const double arg = 2.0 * 3.14159265358979323846 * unit_real(rng);
      v += std::polar(mag, arg);
    }
  } else {
    throw std::invalid_argument("gen: unknown kind " + a.kind +
                                " (expected phase|indicator|random-pm1|noisy-phase)");
  }

  const json fn_json = function_to_json(f);
  if (!a.out.empty()) {
    std::ofstream out(a.out);
    if (!out) throw std::invalid_argument("cannot open output file: " + a.out);
    out << canonical_dump(fn_json) << "\n";
    inputs["out"] = a.out;
  }
  return json{{"kind", a.kind}, {"function", fn_json}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite higher-order Fourier analysis toolkit"};
  app.require_subcommand(1);

  int threads = 0;
  std::uint64_t seed = 0;
  app.add_option("--threads", threads, "worker thread count (HOFA_THREADS overrides)");
  app.add_option("--seed", seed, "global seed echoed in the report");

  NormArgs norm_args;
  auto* norm = app.add_subcommand("norm", "Gowers norm of a function");
  norm->add_option("--group", norm_args.group, "group factors, e.g. 5 or 3,3,2");
  norm->add_option("--k", norm_args.k, "norm order")->required();
  norm->add_option("--fn", norm_args.fn, "function JSON file")->required();
  norm->add_option("--method", norm_args.method, "cube|definition|both");
  norm->add_option("--cap-cube", norm_args.cap_cube, "cube path cap on order^(k+1)");
  norm->add_option("--cap-definition", norm_args.cap_definition, "definition path cap on order^(2k)");
  norm->add_option("--group-cap", norm_args.group_cap, "group order cap");

  SpectrumArgs spec_args;
  auto* spectrum = app.add_subcommand("spectrum", "phase correlation spectrum");
  spectrum->add_option("--group", spec_args.group, "group factors");
  spectrum->add_option("--fn", spec_args.fn, "function JSON file")->required();
  spectrum->add_option("--degree", spec_args.degree, "max phase degree")->required();
  spectrum->add_option("--top", spec_args.top, "number of entries to report");
  spectrum->add_option("--csv", spec_args.csv, "also write the Fourier spectrum CSV here");
  spectrum->add_option("--dict-cap", spec_args.dict_cap, "dictionary size cap");
  spectrum->add_option("--group-cap", spec_args.group_cap, "group order cap");

  DecomposeArgs dec_args;
  auto* decompose = app.add_subcommand("decompose", "structured + uniform decomposition");
  decompose->add_option("--group", dec_args.group, "group factors");
  decompose->add_option("--fn", dec_args.fn, "function JSON file")->required();
  decompose->add_option("--k", dec_args.k, "level (dictionary degree k-1)")->required();
  decompose->add_option("--delta", dec_args.delta, "correlation threshold")->required();
  decompose->add_option("--max-iter", dec_args.max_iter, "iteration cap");
  decompose->add_option("--mode", dec_args.mode, "pursuit|truncate");
  decompose->add_option("--dict-cap", dec_args.dict_cap, "dictionary size cap");
  decompose->add_option("--group-cap", dec_args.group_cap, "group order cap");

  KernelArgs ker_args;
  auto* kernel = app.add_subcommand("kernel", "kernel algebra operations");
  kernel->add_option("--op", ker_args.op, "spectrum|membership|recover")->required();
  kernel->add_option("--in", ker_args.in, "kernel JSON file")->required();
  kernel->add_option("--k", ker_args.k, "algebra level");
  kernel->add_option("--tol", ker_args.tol, "membership tolerance");
  kernel->add_option("--dict-cap", ker_args.dict_cap, "dictionary size cap");
  kernel->add_option("--group-cap", ker_args.group_cap, "group order cap");

  CubeCheckArgs cube_args;
  auto* cube_check = app.add_subcommand("cube-check", "cube structure verification suite");
  cube_check->add_option("--group", cube_args.group, "group factors")->required();
  cube_check->add_option("--k", cube_args.k, "cube dimension")->required();
  cube_check->add_option("--group-cap", cube_args.group_cap, "group order cap");

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "test-corpus generator");
  gen->add_option("--group", gen_args.group, "group factors")->required();
  gen->add_option("--kind", gen_args.kind, "phase|indicator|random-pm1|noisy-phase")->required();
  gen->add_option("--coeffs", gen_args.coeffs, "phase coefficients by power, e.g. 0,0,1");
  gen->add_option("--set", gen_args.set, "indicator support as element indices");
  gen->add_option("--noise", gen_args.noise, "sup-norm of the complex noise");
  gen->add_option("--out", gen_args.out, "output function JSON file");
  gen->add_option("--group-cap", gen_args.group_cap, "group order cap");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help() << "\n";
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (threads > 0) set_thread_count(threads);
  cube_args.seed = seed;
  gen_args.seed = seed;

  const auto started = Clock::now();
  json report;
  report["schema"] = "hofa/1";
  report["seed"] = seed;
  json inputs = json::object();

  try {
    json outputs;
    const auto compute_started = Clock::now();
    if (norm->parsed()) {
      report["command"] = "norm";
      outputs = run_norm(norm_args, inputs);
    } else if (spectrum->parsed()) {
      report["command"] = "spectrum";
      outputs = run_spectrum(spec_args, inputs);
    } else if (decompose->parsed()) {
      report["command"] = "decompose";
      outputs = run_decompose(dec_args, inputs);
    } else if (kernel->parsed()) {
      report["command"] = "kernel";
      outputs = run_kernel(ker_args, inputs);
    } else if (cube_check->parsed()) {
      report["command"] = "cube-check";
      outputs = run_cube_check(cube_args, inputs);
    } else if (gen->parsed()) {
      report["command"] = "gen";
      outputs = run_gen(gen_args, inputs);
    }
    report["inputs"] = std::move(inputs);
    report["outputs"] = std::move(outputs);
    report["timings"] = json{{"parse_ms", std::chrono::duration<double, std::milli>(
                                              compute_started - started)
                                              .count()},
                             {"compute_ms", ms_since(compute_started)},
                             {"total_ms", ms_since(started)}};
  } catch (const json::exception& e) {
    err << "error: malformed JSON input: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }

  out << canonical_dump(report) << "\n";
  return 0;
}

}  // namespace hofa::cli
