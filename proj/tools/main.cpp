// Command-line front end: every subcommand reads an ideal in the `n` /
// `gen` text format (from a file, or stdin with "-") and prints either
// tab-separated text or one line of JSON with --json.
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "polar/complex.hpp"
#include "polar/context.hpp"
#include "polar/errors.hpp"
#include "polar/ideal.hpp"
#include "polar/oracle.hpp"
#include "polar/powers.hpp"
#include "polar/resolution.hpp"
#include "polar/vd.hpp"
#include "polar/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace polar;

// Sticky exit status for commands that print a verdict instead of
// throwing: 3 = a verification check failed, 4 = formula and oracle
// disagree.
int g_exit = 0;

ArtinianContext load_context(const std::string& file) {
  const MonomialIdeal ideal = file == "-" ? parse_ideal(std::cin, "<stdin>")
                                          : parse_ideal_file(file);
  return build_context(ideal);
}

ordered_json face_json(const Face& f) {
  ordered_json a = ordered_json::array();
  for (PolarVar v : f) a.push_back(render(v));
  return a;
}

ordered_json header_json(const std::string& command) {
  ordered_json j;
  j["schema"] = 1;
  j["command"] = command;
  return j;
}

void emit(const ordered_json& j) { std::cout << j.dump() << "\n"; }

std::string join_numbers(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(v[i]);
  }
  return s;
}

std::string join_unsigned(const std::vector<unsigned>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(v[i]);
  }
  return s;
}

void run_info(const std::string& file, bool json) {
  const ArtinianContext ctx = load_context(file);
  const std::vector<std::uint64_t> h = h_vector(ctx);
  if (json) {
    ordered_json j = header_json("info");
    j["n"] = ctx.n();
    j["b"] = ctx.b;
    ordered_json gens = ordered_json::array();
    for (const Monomial& g : ctx.ideal.gens) gens.push_back(render(g));
    j["gens"] = gens;
    j["length"] = ctx.length();
    j["h"] = h;
    emit(j);
    return;
  }
  std::cout << "n\t" << ctx.n() << "\n";
  std::cout << "b\t" << join_unsigned(ctx.b) << "\n";
  std::cout << "gens\t";
  for (std::size_t i = 0; i < ctx.ideal.gens.size(); ++i)
    std::cout << (i ? " " : "") << render(ctx.ideal.gens[i]);
  std::cout << "\n";
  std::cout << "length\t" << ctx.length() << "\n";
  std::cout << "h\t" << join_numbers(h) << "\n";
}

void run_facets(const std::string& file, bool json) {
  const ArtinianContext ctx = load_context(file);
  const SimplicialComplex delta = delta_facets(ctx);
  if (json) {
    ordered_json j = header_json("facets");
    j["vertices"] = face_json(delta.vertices);
    ordered_json fs = ordered_json::array();
    for (const Face& f : delta.facets) fs.push_back(face_json(f));
    j["facets"] = fs;
    emit(j);
    return;
  }
  for (const Face& f : delta.facets) std::cout << render(f) << "\n";
}

void run_lgens(const std::string& file, bool json) {
  const ArtinianContext ctx = load_context(file);
  const std::vector<LGenerator> order = admissible_order(ctx);
  if (json) {
    ordered_json j = header_json("lgens");
    ordered_json rows = ordered_json::array();
    for (const LGenerator& g : order) {
      ordered_json row;
      row["rank"] = g.rank;
      row["source"] = render(g.source);
      row["face"] = face_json(g.face);
      row["colon"] = face_json(colon_set(ctx, g));
      rows.push_back(std::move(row));
    }
    j["generators"] = rows;
    emit(j);
    return;
  }
  for (const LGenerator& g : order)
    std::cout << g.rank << "\t" << render(g.source) << "\t" << render(g.face)
              << "\t" << render(colon_set(ctx, g)) << "\n";
}

void run_betti(const std::string& file, bool json, bool with_oracle, bool rational) {
  const ArtinianContext ctx = load_context(file);
  const BettiData data = betti_formula(ctx);
  std::vector<std::uint64_t> oracle_totals;
  bool match = true;
  if (with_oracle) {
    const VertexTable table(ctx.b);
    std::vector<Monomial> lgens;
    for (const LGenerator& g : admissible_order(ctx))
      lgens.push_back(face_monomial(g.face, table));
    oracle_totals =
        betti_bruteforce(lgens, static_cast<int>(table.size()), rational)
            .quotient_totals();
    match = oracle_totals == data.betti;
    if (!match) g_exit = 4;
  }
  if (json) {
    ordered_json j = header_json("betti");
    j["betti"] = data.betti;
    j["projdim"] = data.projdim;
    j["depth"] = data.depth;
    if (with_oracle) {
      j["oracle"] = oracle_totals;
      j["match"] = match;
    }
    emit(j);
    return;
  }
  std::cout << "betti\t" << join_numbers(data.betti) << "\n";
  std::cout << "projdim\t" << data.projdim << "\n";
  std::cout << "depth\t" << data.depth << "\n";
  if (with_oracle) {
    std::cout << "oracle\t" << join_numbers(oracle_totals) << "\n";
    std::cout << "match\t" << (match ? "yes" : "no") << "\n";
  }
}

void run_depth(const std::string& file, bool json, unsigned kmax) {
  const ArtinianContext ctx = load_context(file);
  const DepthProfile profile = depth_profile(ctx, kmax);
  auto stable = [&](unsigned k) {
    return profile.stabilization_k != 0 && k >= profile.stabilization_k;
  };
  if (json) {
    ordered_json j = header_json("depth");
    j["kmax"] = kmax;
    ordered_json rows = ordered_json::array();
    for (const DepthProfile::Row& r : profile.rows) {
      ordered_json row;
      row["k"] = r.k;
      row["q"] = r.q;
      row["depth"] = r.depth;
      row["stable"] = stable(r.k);
      rows.push_back(std::move(row));
    }
    j["rows"] = rows;
    j["stabilization_k"] = profile.stabilization_k;
    emit(j);
    return;
  }
  std::cout << "k\tq\tdepth\tstable\n";
  for (const DepthProfile::Row& r : profile.rows)
    std::cout << r.k << "\t" << r.q << "\t" << r.depth << "\t"
              << (stable(r.k) ? "Y" : "N") << "\n";
}

ordered_json certificate_json(const VDCertificate& cert) {
  ordered_json j;
  switch (cert.kind) {
    case VDCertificate::Kind::LeafTrivial:
      j["kind"] = "leaf-trivial";
      break;
    case VDCertificate::Kind::LeafSimplex:
      j["kind"] = "leaf-simplex";
      break;
    case VDCertificate::Kind::Shed: {
      j["kind"] = "shed";
      j["vertex"] = render(cert.vertex);
      ordered_json chain = ordered_json::array();
      for (PolarVar v : cert.cone_chain) chain.push_back(render(v));
      j["cone"] = chain;
      ordered_json pad = ordered_json::array();
      for (PolarVar v : cert.link_pad) pad.push_back(render(v));
      j["pad"] = pad;
      if (cert.del_child) j["del"] = certificate_json(*cert.del_child);
      if (cert.link_child) j["link"] = certificate_json(*cert.link_child);
      break;
    }
  }
  ordered_json gens = ordered_json::array();
  for (const Monomial& g : cert.ideal.gens) gens.push_back(g.exp);
  j["ideal"] = gens;
  return j;
}

void run_vd(const std::string& file, bool json) {
  const ArtinianContext ctx = load_context(file);
  const VDCertificate cert = vd_certificate(ctx);
  const VerifyResult replay = verify_certificate(delta_facets(ctx), cert);
  if (!replay.ok) g_exit = 4;
  if (json) {
    ordered_json j = header_json("vd");
    j["certificate"] = certificate_json(cert);
    j["verified"] = replay.ok;
    if (!replay.ok) j["witness"] = replay.witness;
    emit(j);
    return;
  }
  std::cout << certificate_text(cert);
  std::cout << "verified\t" << (replay.ok ? "yes" : "no") << "\n";
  if (!replay.ok) std::cout << "witness\t" << replay.witness << "\n";
}

void run_shelling(const std::string& file, bool json) {
  const ArtinianContext ctx = load_context(file);
  const std::vector<Face> order = shelling_order(ctx);
  const bool ok = is_shelling(order);
  if (!ok) g_exit = 4;
  if (json) {
    ordered_json j = header_json("shelling");
    ordered_json fs = ordered_json::array();
    for (const Face& f : order) fs.push_back(face_json(f));
    j["facets"] = fs;
    j["shelling"] = ok;
    emit(j);
    return;
  }
  for (const Face& f : order) std::cout << render(f) << "\n";
  std::cout << "shelling\t" << (ok ? "yes" : "no") << "\n";
}

void run_verify(const std::string& file, bool json, bool rational) {
  const ArtinianContext ctx = load_context(file);
  const std::vector<CheckOutcome> checks = run_cross_checks(ctx, rational);
  bool ok = true;
  for (const CheckOutcome& c : checks)
    if (c.status == CheckOutcome::Status::Fail) ok = false;
  if (!ok) g_exit = 3;
  auto status_name = [](CheckOutcome::Status s) {
    switch (s) {
      case CheckOutcome::Status::Pass: return "pass";
      case CheckOutcome::Status::Fail: return "fail";
      case CheckOutcome::Status::Skip: return "skip";
    }
    return "fail";
  };
  if (json) {
    ordered_json j = header_json("verify");
    ordered_json rows = ordered_json::array();
    for (const CheckOutcome& c : checks) {
      ordered_json row;
      row["name"] = c.name;
      row["status"] = status_name(c.status);
      row["detail"] = c.detail;
      rows.push_back(std::move(row));
    }
    j["checks"] = rows;
    j["ok"] = ok;
    emit(j);
    return;
  }
  for (const CheckOutcome& c : checks) {
    std::cout << c.name << "\t" << status_name(c.status);
    if (!c.detail.empty()) std::cout << "\t" << c.detail;
    std::cout << "\n";
  }
  std::cout << "result\t" << (ok ? "pass" : "fail") << "\n";
}

void run_random(bool json, int n, unsigned bmax, int extra, std::uint64_t seed) {
  const MonomialIdeal ideal = random_artinian(n, bmax, extra, seed);
  if (json) {
    ordered_json j = header_json("random");
    j["n"] = ideal.n;
    ordered_json gens = ordered_json::array();
    for (const Monomial& g : ideal.gens) gens.push_back(g.exp);
    j["gens"] = gens;
    emit(j);
    return;
  }
  std::cout << print_ideal(ideal);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact combinatorics of zero-dimensional monomial ideals"};
  app.require_subcommand(1);

  struct Common {
    std::string file = "-";
    bool json = false;
  };
  auto add_common = [](CLI::App* cmd, Common& c) {
    cmd->add_option("file", c.file, "ideal file, - for stdin")
        ->capture_default_str();
    cmd->add_flag("--json", c.json, "one line of JSON instead of text");
  };

  Common info_opts;
  CLI::App* info = app.add_subcommand("info", "variable bounds, length, h-vector");
  add_common(info, info_opts);
  info->callback([&] { run_info(info_opts.file, info_opts.json); });

  Common facets_opts;
  CLI::App* facets = app.add_subcommand("facets", "facets of the polarized complex");
  add_common(facets, facets_opts);
  facets->callback([&] { run_facets(facets_opts.file, facets_opts.json); });

  Common lgens_opts;
  CLI::App* lgens = app.add_subcommand(
      "lgens", "generators of the dual squarefree ideal with their colon sets");
  add_common(lgens, lgens_opts);
  lgens->callback([&] { run_lgens(lgens_opts.file, lgens_opts.json); });

  Common betti_opts;
  bool betti_oracle = false, betti_rational = false;
  CLI::App* betti = app.add_subcommand(
      "betti", "Betti numbers, projective dimension and depth of the dual quotient");
  add_common(betti, betti_opts);
  betti->add_flag("--oracle", betti_oracle,
                  "recompute by simplicial homology and compare");
  betti->add_flag("--rational", betti_rational,
                  "run the homology ranks a third time over the rationals");
  betti->callback([&] {
    run_betti(betti_opts.file, betti_opts.json, betti_oracle || betti_rational,
              betti_rational);
  });

  Common depth_opts;
  unsigned depth_kmax = 0;
  CLI::App* depth = app.add_subcommand("depth", "depth profile of the power quotients");
  add_common(depth, depth_opts);
  depth->add_option("--kmax", depth_kmax, "largest power to profile")->required();
  depth->callback([&] { run_depth(depth_opts.file, depth_opts.json, depth_kmax); });

  Common vd_opts;
  CLI::App* vd = app.add_subcommand("vd", "vertex-decomposition certificate, replayed");
  add_common(vd, vd_opts);
  vd->callback([&] { run_vd(vd_opts.file, vd_opts.json); });

  Common shelling_opts;
  CLI::App* shelling = app.add_subcommand("shelling", "facets in shelling order");
  add_common(shelling, shelling_opts);
  shelling->callback([&] { run_shelling(shelling_opts.file, shelling_opts.json); });

  Common verify_opts;
  bool verify_rational = false;
  CLI::App* verify = app.add_subcommand("verify", "full formula-versus-oracle battery");
  add_common(verify, verify_opts);
  verify->add_flag("--rational", verify_rational,
                   "run the homology ranks a third time over the rationals");
  verify->callback(
      [&] { run_verify(verify_opts.file, verify_opts.json, verify_rational); });

  bool random_json = false;
  int random_n = 2, random_extra = 2;
  unsigned random_bmax = 3;
  std::uint64_t random_seed = 1;
  CLI::App* random = app.add_subcommand(
      "random", "deterministic pseudo-random zero-dimensional ideal");
  random->add_flag("--json", random_json, "one line of JSON instead of text");
  random->add_option("--n", random_n, "variables")->capture_default_str();
  random->add_option("--bmax", random_bmax, "largest pure-power exponent")
      ->capture_default_str();
  random->add_option("--extra", random_extra, "extra non-pure generators")
      ->capture_default_str();
  random->add_option("--seed", random_seed, "seed")->capture_default_str();
  random->callback(
      [&] { run_random(random_json, random_n, random_bmax, random_extra, random_seed); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const polar::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const polar::ScaleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const polar::OracleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  }
  return g_exit;
}
