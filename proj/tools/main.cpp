#include <cstdio>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cli_support.hpp"
#include "logriemann/ends.hpp"
#include "logriemann/model.hpp"
#include "logriemann/numerics.hpp"
#include "logriemann/skeleton.hpp"
#include "logriemann/spec_io.hpp"
#include "logriemann/svg.hpp"

using namespace lrs;
using cli::dump;
using cli::emit;
using cli::format_double;

namespace {

ExecPolicy policy_of(bool serial) { return serial ? ExecPolicy::Serial : ExecPolicy::Parallel; }

ExpForm read_form(const std::string& q, const std::string& p) {
  ExpForm f{cli::parse_laurent(q), cli::parse_polynomial(p)};
  f.check();
  return f;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Log-Riemann surfaces of finite type: sheet complexes, ends and uniformizing maps"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::string out, input;
  bool serial = false;

  // build-model
  auto* build = app.add_subcommand("build-model", "Build the model surface S(w_0..w_{n-1}, w, K) as a surface document");
  std::string z0s = "0,0", ws, wcs;
  int K = 0;
  build->add_option("--z0", z0s, "Base point re,im")->capture_default_str();
  build->add_option("--w", ws, "Infinite-order projections re,im;re,im;...")->required();
  build->add_option("--wc", wcs, "Projection w of the finite points re,im (default: a generic choice)");
  build->add_option("--K", K, "Index of the end")->required();
  build->add_option("--out", out, "Output file (default stdout)");

  // validate
  auto* val = app.add_subcommand("validate", "Check every invariant of a surface document; exit 1 when any fails");
  val->add_option("surface", input, "Surface document")->required()->check(CLI::ExistingFile);
  val->add_option("--out", out, "JSON report (default stdout)");

  // analyze
  auto* an = app.add_subcommand("analyze", "Skeleton, ramification census, Betti numbers and topology");
  std::string dot_out, dotc_out;
  an->add_option("surface", input, "Surface document")->required()->check(CLI::ExistingFile);
  an->add_option("--out", out, "JSON report (default stdout)");
  an->add_option("--dot", dot_out, "Also write the skeleton as DOT");
  an->add_option("--dot-completed", dotc_out, "Also write the finitely completed skeleton as DOT");

  // ends
  auto* en = app.add_subcommand("ends", "Classify the ends and the permutation u");
  long c2 = 2;
  en->add_option("surface", input, "Surface document")->required()->check(CLI::ExistingFile);
  en->add_option("--c2", c2, "Normalization constant c2 (c1 is the smallest admissible)")->capture_default_str();
  en->add_option("--out", out, "JSON report (default stdout)");

  // embed
  auto* em = app.add_subcommand("embed", "Embedding witness (k_j, k'_j) and host model for every cycle end");
  long c1 = 0;
  em->add_option("surface", input, "Surface document")->required()->check(CLI::ExistingFile);
  em->add_option("--c1", c1, "Normalization constant c1 (default: smallest admissible)");
  em->add_option("--c2", c2, "Normalization constant c2")->capture_default_str();
  em->add_option("--out", out, "JSON report (default stdout)");

  // uniformize
  auto* un = app.add_subcommand("uniformize", "Primitive F(z) = int_base^z Q e^P dz on a grid (CSV: re,im,F_re,F_im,est_error)");
  std::string qs = "0:1", ps, bases = "0,0", lo_s = "-1,-1", hi_s = "1,1";
  int nx = 11, ny = 11;
  double tol = 1e-9;
  un->add_option("--Q", qs, "Laurent polynomial k:c0,c1,... (c0 z^k + c1 z^{k+1} + ...)")->capture_default_str();
  un->add_option("--P", ps, "Polynomial c0,c1,... (c0 + c1 z + ...)")->required();
  un->add_option("--base", bases, "Base point re,im with F(base) = 0")->capture_default_str();
  un->add_option("--lower", lo_s, "Lower-left grid corner re,im")->capture_default_str();
  un->add_option("--upper", hi_s, "Upper-right grid corner re,im")->capture_default_str();
  un->add_option("--nx", nx, "Grid points along re")->capture_default_str()->check(CLI::Range(1, 100000));
  un->add_option("--ny", ny, "Grid points along im")->capture_default_str()->check(CLI::Range(1, 100000));
  un->add_option("--tol", tol, "Relative quadrature tolerance")->capture_default_str();
  un->add_option("--out", out, "CSV output (default stdout)");

  // asymptotics
  auto* as = app.add_subcommand("asymptotics", "Asymptotic values along the descent directions (CSV: sector,direction,re,im)");
  double atol = 1e-12;
  as->add_option("--Q", qs, "Polynomial part k:c0,c1,... with k >= 0")->capture_default_str();
  as->add_option("--P", ps, "Polynomial c0,c1,...")->required();
  as->add_option("--base", bases, "Base point re,im")->capture_default_str();
  as->add_option("--tol", atol, "Absolute tolerance")->capture_default_str();
  as->add_option("--out", out, "CSV output (default stdout)");

  // approx
  auto* ap = app.add_subcommand("approx", "Residue constants and R_N errors (CSV: N,C_N,max_error)");
  int m = 1, n = 1, samples = 64;
  std::string Ns = "8;64;512";
  double r_in = 0.5, r_out = 2.0, qtol = 1e-11;
  ap->add_option("--m", m, "Pole order m")->capture_default_str()->check(CLI::PositiveNumber);
  ap->add_option("--n", n, "Degree n")->capture_default_str()->check(CLI::PositiveNumber);
  ap->add_option("--N", Ns, "Values of N, ';'-separated")->capture_default_str();
  ap->add_option("--r-in", r_in, "Inner radius of the annulus")->capture_default_str();
  ap->add_option("--r-out", r_out, "Outer radius; also the base point")->capture_default_str();
  ap->add_option("--samples", samples, "Sample points")->capture_default_str();
  ap->add_option("--tol", qtol, "Relative quadrature tolerance")->capture_default_str();
  ap->add_flag("--serial", serial, "Run single-threaded");
  ap->add_option("--out", out, "CSV output (default stdout)");

  // probe
  auto* pr = app.add_subcommand("probe", "Cluster the limits of F along rays to estimate the completion points");
  double radius = 5.0, ctol = 0.0, ptol = 1e-10;
  int rays = 360;
  pr->add_option("--Q", qs, "Laurent polynomial k:c0,c1,...")->capture_default_str();
  pr->add_option("--P", ps, "Polynomial c0,c1,...")->required();
  pr->add_option("--radius", radius, "Radius R of the base circle")->capture_default_str();
  pr->add_option("--rays", rays, "Number of rays (>= 64)")->capture_default_str();
  pr->add_option("--cluster-tol", ctol, "Clustering tolerance (default 1e-4 R)");
  pr->add_option("--tol", ptol, "Relative quadrature tolerance")->capture_default_str();
  pr->add_flag("--serial", serial, "Run single-threaded");
  pr->add_option("--out", out, "JSON report (default stdout)");

  // export-dot
  auto* ed = app.add_subcommand("export-dot", "Skeleton as DOT");
  bool completed = false;
  ed->add_option("surface", input, "Surface document")->required()->check(CLI::ExistingFile);
  ed->add_flag("--completed", completed, "Export the finitely completed skeleton instead");
  ed->add_option("--out", out, "DOT output (default stdout)");

  // export-svg
  auto* es = app.add_subcommand("export-svg", "Slit-sheet diagram as SVG");
  es->add_option("surface", input, "Surface document")->required()->check(CLI::ExistingFile);
  es->add_option("--out", out, "SVG output (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*build) {
      ModelParams p;
      p.z0 = cli::parse_complex(z0s);
      p.w_list = cli::parse_complex_list(ws);
      p.w = wcs.empty() ? generic_partner(p.z0, p.w_list) : cli::parse_complex(wcs);
      p.K = K;
      emit(out, dump(to_spec(build_model_surface(p))));
    } else if (*val) {
      auto r = validate(load_surface(input));
      emit(out, dump(cli::validation_json(r)));
      if (!r.ok) {
        std::cerr << "error: " << r.violations.front().invariant << ": " << r.violations.front().detail << "\n";
        return 1;
      }
    } else if (*an) {
      auto c = load_surface(input);
      auto sk = skeleton(c);
      auto comp = finite_completion(sk);
      nlohmann::json j{{"vertices", sk.vertices.size()},
                       {"edges", sk.edges.size()},
                       {"components", component_count(sk)},
                       {"b1", betti(sk)},
                       {"b1_completed", betti(comp)},
                       {"census", cli::census_json(ramification_census(sk))},
                       {"topology", cli::topology_json(topology_census(c))}};
      emit(out, dump(j));
      if (!dot_out.empty()) cli::write_atomic(dot_out, to_dot(sk));
      if (!dotc_out.empty()) cli::write_atomic(dotc_out, to_dot(comp, "completed"));
    } else if (*en) {
      emit(out, dump(cli::ends_json(classify_ends(load_surface(input), c2))));
    } else if (*em) {
      auto c = load_surface(input);
      long c1v = c1 > 0 ? c1 : minimal_c1(c, c2);
      auto d = core_decomposition(c, c1v, c2);
      nlohmann::json ws_json = nlohmann::json::array();
      for (const auto& e : classify_ends(c, c2).ends) {
        const auto* ce = std::get_if<CycleEnd>(&e.kind);
        if (!ce) continue;
        CycleEnd measured = cycle_end(c, ce->cycle, d);
        ws_json.push_back(cli::witness_json(measured.cycle, embedding_witness(c, measured, d)));
      }
      emit(out, dump({{"N", d.N}, {"c1", d.c1}, {"c2", d.c2}, {"witnesses", ws_json}}));
    } else if (*un) {
      auto f = read_form(qs, ps);
      Complex base = cli::parse_complex(bases), lo = cli::parse_complex(lo_s), hi = cli::parse_complex(hi_s);
      QuadOptions qo;
      qo.tol = tol;
      std::ostringstream o;
      o << "re,im,F_re,F_im,est_error\n";
      for (int iy = 0; iy < ny; ++iy)
        for (int ix = 0; ix < nx; ++ix) {
          double x = nx == 1 ? lo.real() : lo.real() + (hi.real() - lo.real()) * ix / (nx - 1);
          double y = ny == 1 ? lo.imag() : lo.imag() + (hi.imag() - lo.imag()) * iy / (ny - 1);
          Complex z(x, y);
          QuadResult r{};
          if (z != base) r = integrate_form(f, std::vector<Complex>{base, z}, qo);
          o << format_double(x) << ',' << format_double(y) << ',' << format_double(r.value.real()) << ','
            << format_double(r.value.imag()) << ',' << format_double(r.est_error) << '\n';
        }
      emit(out, o.str());
    } else if (*as) {
      auto f = read_form(qs, ps);
      std::ostringstream o;
      o << "sector,direction,re,im\n";
      for (const auto& v : asymptotic_values(f, cli::parse_complex(bases), atol))
        o << v.sector << ',' << format_double(v.direction) << ',' << format_double(v.value.real()) << ','
          << format_double(v.value.imag()) << '\n';
      emit(out, o.str());
    } else if (*ap) {
      auto Nl = cli::parse_long_list(Ns);
      auto errs = rn_approx_error(m, n, Nl, r_in, r_out, samples, qtol, policy_of(serial));
      std::ostringstream o;
      o << "N,C_N,max_error\n";
      o << "inf," << residue_constant(m, n).str() << ",0\n";
      for (const auto& e : errs)
        o << e.N << ',' << residue_constant(m, n, e.N).str() << ',' << format_double(e.max_error) << '\n';
      emit(out, o.str());
    } else if (*pr) {
      auto f = read_form(qs, ps);
      double used = ctol > 0 ? ctol : 1e-4 * radius;
      emit(out, dump(cli::probe_json(completion_probe(f, radius, rays, used, policy_of(serial), ptol), used)));
    } else if (*ed) {
      auto sk = skeleton(load_surface(input));
      emit(out, completed ? to_dot(finite_completion(sk), "completed") : to_dot(sk));
    } else if (*es) {
      emit(out, to_svg(load_surface(input)));
    }
  } catch (const SurfaceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.invariant() == "usage" ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
