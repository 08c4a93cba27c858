#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sphlie/report.hpp"

namespace {

using namespace sphlie;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) fail(errc::parse_error, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void emit(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

Analysis load(const std::string& pair_path) {
  return Analysis::run(parse_pair_text(slurp(pair_path)));
}

void summarize(const Analysis& an) {
  const auto& rs = an.sp.g->rs();
  std::cerr << "pair: dim g = " << an.sp.g->dim() << ", dim h = " << an.sp.h.dim()
            << ", rank a_Z = " << an.sp.rank() << "\n";
  std::cerr << "F_Q = {";
  for (size_t i = 0; i < an.sp.F_Q.size(); ++i)
    std::cerr << (i ? "," : "") << "a" << an.sp.F_Q[i] + 1;
  std::cerr << "}, S = {";
  for (int i = 0; i < an.srd.num_spherical(); ++i)
    std::cerr << (i ? ", " : "") << root_name(rs, an.srd.spherical_root(i));
  std::cerr << "}\n";
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"structure theory of real spherical pairs at the Lie algebra level"};
  app.require_subcommand(1);

  std::string pair_path, I_arg, F_arg, name_arg, exp_path;

  auto add_pair_opt = [&](CLI::App* cmd) {
    cmd->add_option("--pair", pair_path, "pair description file (JSON, format 1); '-' for stdin")
        ->required();
  };

  CLI::App* analyze = app.add_subcommand("analyze", "local structure, monoid, cone, edge");
  add_pair_opt(analyze);
  CLI::App* degen = app.add_subcommand("degenerate", "boundary degeneration h_I");
  add_pair_opt(degen);
  degen->add_option("--I", I_arg, "subset of S, e.g. --I=s1,s3 (empty for h_lim)")->expected(0, 1);
  CLI::App* wf = app.add_subcommand("wavefront", "wave-front test and interlacing data");
  add_pair_opt(wf);
  CLI::App* ind = app.add_subcommand("induce", "Levi-induced pair Z_F");
  add_pair_opt(ind);
  ind->add_option("--F", F_arg, "subset of Pi containing F_Q, e.g. --F=a1,a2")->expected(0, 1);
  CLI::App* tw = app.add_subcommand("twists", "sign-twisted subalgebras h_w");
  add_pair_opt(tw);
  CLI::App* ex = app.add_subcommand("exponents", "tempered / discrete-series layer");
  add_pair_opt(ex);
  ex->add_option("--exponents", exp_path,
                 "separate exponent-data file (overrides the pair file's block)");
  CLI::App* cat = app.add_subcommand("catalog", "list entries or emit one as a pair file");
  cat->add_option("--name", name_arg, "entry to build");
  CLI::App* st = app.add_subcommand("selftest", "invariant suite over the catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (analyze->parsed()) {
      Analysis an = load(pair_path);
      summarize(an);
      emit(analyze_report(an));
    } else if (degen->parsed()) {
      Analysis an = load(pair_path);
      Json j = degenerate_report(an, parse_subset(I_arg, 's', an.srd.num_spherical()));
      std::cerr << "h_I: dim " << j["dim_h_I"] << ", spherical roots of Z_I = "
                << j["spherical_roots_of_h_I"].dump() << "\n";
      emit(j);
    } else if (wf->parsed()) {
      Analysis an = load(pair_path);
      Json j = wavefront_json(an);
      std::cerr << "wavefront: " << (j["wavefront"].get<bool>() ? "true" : "false") << "\n";
      emit(j);
    } else if (ind->parsed()) {
      Analysis an = load(pair_path);
      Json j = induce_report(an, parse_subset(F_arg, 'a', an.sp.g->rs().rank()));
      std::cerr << "Z_F: dim g_F = " << j["dim_g_F"] << ", cone identity "
                << (j["cone_identity"].get<bool>() ? "holds" : "FAILS") << ", unimodular "
                << (j["Z_F_unimodular"].get<bool>() ? "yes" : "no") << "\n";
      emit(j);
    } else if (tw->parsed()) {
      Analysis an = load(pair_path);
      Json j = twists_report(an);
      std::cerr << j["count"] << " sign characters on a rank-" << j["lattice_rank"]
                << " lattice\n";
      emit(j);
    } else if (ex->parsed()) {
      PairInput in = parse_pair_text(slurp(pair_path));
      if (!exp_path.empty()) {
        try {
          in.exponents = Json::parse(slurp(exp_path));
        } catch (const nlohmann::json::parse_error& e) {
          fail(errc::parse_error, e.what());
        }
      }
      Analysis an = Analysis::run(std::move(in));
      Json j = exponents_report(an);
      std::cerr << "tempered: " << (j["tempered"].get<bool>() ? "true" : "false")
                << ", strong inequality: "
                << (j["strong_inequality"].get<bool>() ? "true" : "false") << "\n";
      emit(j);
    } else if (cat->parsed()) {
      emit(catalog_report(name_arg));
    } else if (st->parsed()) {
      int failures = selftest(std::cerr);
      std::cout << (failures == 0 ? "selftest: all checks passed\n"
                                  : "selftest: FAILURES\n");
      return failures == 0 ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == errc::parse_error ? 2 : 1;
  }
  return 0;
}
