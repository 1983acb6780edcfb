#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "coxpath/freeprod.hpp"
#include "coxpath/intpoly.hpp"
#include "coxpath/parse.hpp"
#include "coxpath/realrep.hpp"
#include "coxpath/reflect.hpp"

using namespace coxpath;
using nlohmann::json;

namespace {

constexpr const char* kOrderNote = "length-lex, edges by (origin,terminus) vertex index";

// Exit codes per the contract: 0 success/verified, 2 validation error,
// 3 verification residue found.
constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitResidue = 3;

CoxeterMatrix load_system(const std::string& spec) {
  if (std::filesystem::exists(spec)) {
    std::ifstream in(spec);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_system(buf.str());
  }
  return preset(spec);
}

RingTag ring_tag(const std::string& name) {
  if (name == "P") return RingTag::P;
  if (name == "R") return RingTag::R;
  if (name == "Rtilde") return RingTag::Rtilde;
  if (name == "Q") return RingTag::Q;
  throw std::invalid_argument("unknown ring " + name + " (want P, R, Rtilde or Q)");
}

Word parse_word(const std::string& text, const CoxeterMatrix& m) {
  Word w;
  std::string token;
  std::stringstream in(text);
  while (std::getline(in, token, ',')) {
    std::stringstream parts(token);
    std::string name;
    while (parts >> name) {
      const int idx = m.index_of(name);
      if (idx < 0) throw std::invalid_argument("unknown generator " + name);
      w.push_back(idx);
    }
  }
  return w;
}

std::string minpoly_line(const IntPoly& p) {
  std::string out;
  for (int k = 0; k <= p.degree(); ++k) {
    if (!out.empty()) out += ' ';
    out += p.coeff(k).str();
  }
  return out + " / deg " + std::to_string(p.degree());
}

json overlap_summary(const std::string& system, const std::string& ring, int nrules,
                     const std::vector<Overlap<PathMono>>& all,
                     const CoxeterMatrix& m) {
  json j{{"system", system}, {"ring", ring}, {"rules", nrules},
         {"overlaps", all.size()}, {"order", kOrderNote}};
  int bad = 0;
  json residues = json::array();
  for (const auto& ov : all)
    if (!ov.residue.is_zero()) {
      ++bad;
      residues.push_back(print_element(ov.residue, m));
    }
  j["nonzero_residues"] = bad;
  if (bad) j["residues"] = residues;
  return j;
}

json overlap_summary_q(const std::string& system, int nrules,
                       const std::vector<Overlap<WordMono>>& all,
                       const CoxeterMatrix& m) {
  json j{{"system", system}, {"ring", "Q"}, {"rules", nrules},
         {"overlaps", all.size()}, {"order", kOrderNote}};
  int bad = 0;
  json residues = json::array();
  for (const auto& ov : all)
    if (!ov.residue.is_zero()) {
      ++bad;
      residues.push_back(print_word_element(ov.residue, m));
    }
  j["nonzero_residues"] = bad;
  if (bad) j["residues"] = residues;
  return j;
}

template <class Scalar>
json matrix_json(const DenseMat<Scalar>& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if constexpr (std::is_same_v<Scalar, Rational>)
        row.push_back(print_rational(m(i, j)));
      else
        row.push_back(m(i, j));
    }
    rows.push_back(row);
  }
  return rows;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/* max |entry| of the difference between the two sides of the equivariance
 * square, over `samples` random (word, element) pairs; the W x W^op twist
 * pairs the left module action with the right matrix action on the reversed
 * word, and vice versa. */
template <class Scalar>
double equivariance_residue(const ReflectionMatrix<Scalar>& A, const QuotientRing& ring,
                            int samples, std::uint64_t seed) {
  const auto basis = enumerate_basis(ring, 4);
  const int n = ring.matrix.size();
  double worst = 0.0;
  for (int trial = 0; trial < samples; ++trial) {
    std::mt19937_64 rng(mix_seed(seed, trial));
    QElement x;
    const int nterms = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < nterms; ++t)
      x.add_term(basis[rng() % basis.size()], 1 + static_cast<long>(rng() % 5));
    Word w(1 + rng() % 4);
    for (int& s : w) s = static_cast<int>(rng() % n);
    Word rev(w.rbegin(), w.rend());
    const DenseMat<Scalar> tx = theta_R(A, ring, x);
    const DenseMat<Scalar> left =
        theta_R(A, ring, act_word(ring, w, x, Side::Left)) - act_B_word(A, rev, tx, Side::Right);
    const DenseMat<Scalar> right =
        theta_R(A, ring, act_word(ring, w, x, Side::Right)) - act_B_word(A, rev, tx, Side::Left);
    worst = std::max({worst, matrix_residue(left), matrix_residue(right)});
  }
  return worst;
}

template <class Scalar>
int run_realrep(const CoxeterMatrix& m, const ReflectionMatrix<Scalar>& A,
                const std::string& ringname, int max_len, const std::string& expr,
                bool lax_paths, const std::vector<std::string>& checks, int samples,
                std::uint64_t seed) {
  const bool want = checks.empty();
  auto wants = [&](const char* c) {
    return want || std::find(checks.begin(), checks.end(), c) != checks.end();
  };
  const double tol = std::is_same_v<Scalar, Rational> ? 0.0 : kRealTol;

  const KillReport kill = check_kills_ideal(A, m);
  json j{{"matrix", matrix_json(A.a)},
         {"strict", A.strict},
         {"degenerate", A.degenerate},
         {"exact", std::is_same_v<Scalar, Rational>},
         {"ideal", A.strict ? "R" : "Rtilde"},
         {"order", kOrderNote}};
  if (wants("kill")) {
    j["killed"] = kill.killed;
    j["max_residue"] = kill.max_residue;
    if (!kill.failures.empty()) j["failures"] = kill.failures;
  }

  bool equivariant = true;
  int rank = -1;
  if (kill.killed) {
    const QuotientRing ring = make_quotient(m, ring_tag(ringname));
    if (wants("rank")) {
      rank = image_rank(A, ring, max_len);
      j["image_rank"] = rank;
      j["basis_cutoff"] = max_len;
    }
    if (wants("equivariance")) {
      const double res = equivariance_residue(A, ring, samples, seed);
      equivariant = res <= tol;
      j["equivariance_residue"] = res;
      j["equivariance_samples"] = samples;
      j["seed"] = seed;
    }
    if (!expr.empty()) {
      const QElement x = reduce(ring, parse_element(expr, m, lax_paths));
      j["theta"] = matrix_json(theta_R(A, ring, x));
    }
  }
  std::cout << j.dump() << "\n";
  if (!kill.killed) {
    std::cout << "relators survive theta': max residue " << kill.max_residue << "\n";
    return kExitResidue;
  }
  if (!equivariant) {
    std::cout << "equivariance violated beyond tolerance\n";
    return kExitResidue;
  }
  std::cout << "all " << (A.strict ? "C_m" : "c_m") << " relators killed";
  if (rank >= 0) std::cout << "; image rank " << rank << " at length <= " << max_len;
  std::cout << "\n";
  return kExitOk;
}

int dispatch(CLI::App& app) {
  // graph
  auto* graph = app.get_subcommand("graph");
  if (graph->parsed()) {
    const CoxeterMatrix m = load_system(graph->get_option("system")->as<std::string>());
    if (graph->get_option("--dot")->as<bool>())
      std::cout << render_dot(m);
    else
      std::cout << render_system(m);
    return kExitOk;
  }

  // minpoly
  auto* minpoly = app.get_subcommand("minpoly");
  if (minpoly->parsed()) {
    const int n = minpoly->get_option("n")->as<int>();
    std::cout << minpoly_line(min_poly_4cos2(n)) << "\n";
    return kExitOk;
  }

  // nf
  auto* nf = app.get_subcommand("nf");
  if (nf->parsed()) {
    const CoxeterMatrix m = load_system(nf->get_option("system")->as<std::string>());
    const QuotientRing ring = make_quotient(m, ring_tag(nf->get_option("--ring")->as<std::string>()));
    const bool lax = nf->get_option("--lax-paths")->as<bool>();
    const QElement x = parse_element(nf->get_option("--expr")->as<std::string>(), m, lax);
    std::cout << print_element(reduce(ring, x), m) << "\n";
    return kExitOk;
  }

  // mul
  auto* mulcmd = app.get_subcommand("mul");
  if (mulcmd->parsed()) {
    const CoxeterMatrix m = load_system(mulcmd->get_option("system")->as<std::string>());
    const QuotientRing ring = make_quotient(m, ring_tag(mulcmd->get_option("--ring")->as<std::string>()));
    const bool lax = mulcmd->get_option("--lax-paths")->as<bool>();
    const QElement a = parse_element(mulcmd->get_option("a")->as<std::string>(), m, lax);
    const QElement b = parse_element(mulcmd->get_option("b")->as<std::string>(), m, lax);
    std::cout << print_element(qmul(ring, reduce(ring, a), reduce(ring, b)), m) << "\n";
    return kExitOk;
  }

  // basis
  auto* basis = app.get_subcommand("basis");
  if (basis->parsed()) {
    const CoxeterMatrix m = load_system(basis->get_option("system")->as<std::string>());
    const QuotientRing ring = make_quotient(m, ring_tag(basis->get_option("--ring")->as<std::string>()));
    int from = -1, to = -1;
    if (const std::string f = basis->get_option("--from")->as<std::string>(); !f.empty())
      if ((from = m.index_of(f)) < 0) throw std::invalid_argument("unknown generator " + f);
    if (const std::string t = basis->get_option("--to")->as<std::string>(); !t.empty())
      if ((to = m.index_of(t)) < 0) throw std::invalid_argument("unknown generator " + t);
    for (const auto& p : enumerate_basis(ring, basis->get_option("--max-len")->as<int>(), from, to))
      std::cout << print_path(p, m) << "\n";
    return kExitOk;
  }

  // rank
  auto* rank = app.get_subcommand("rank");
  if (rank->parsed()) {
    const CoxeterMatrix m = load_system(rank->get_option("system")->as<std::string>());
    const QuotientRing ring = make_quotient(m, ring_tag(rank->get_option("--ring")->as<std::string>()));
    const int max_len = rank->get_option("--max-len")->as<int>();
    const GradedRank g = graded_rank(ring, max_len);
    for (int len = 0; len <= max_len; ++len) {
      long subtotal = 0;
      json counts = json::array();
      for (int r = 0; r < m.size(); ++r) {
        json row = json::array();
        for (int s = 0; s < m.size(); ++s) {
          row.push_back(g.counts[len][r][s]);
          subtotal += g.counts[len][r][s];
        }
        counts.push_back(row);
      }
      std::cout << json{{"len", len}, {"counts", counts}, {"subtotal", subtotal}}.dump() << "\n";
    }
    std::cout << "total rank " << g.total << " up to length " << max_len
              << " (" << kOrderNote << ")\n";
    return kExitOk;
  }

  // act
  auto* act = app.get_subcommand("act");
  if (act->parsed()) {
    const CoxeterMatrix m = load_system(act->get_option("system")->as<std::string>());
    const QuotientRing ring = make_quotient(m, ring_tag(act->get_option("--ring")->as<std::string>()));
    const bool lax = act->get_option("--lax-paths")->as<bool>();
    const Word w = parse_word(act->get_option("--word")->as<std::string>(), m);
    const std::string side = act->get_option("--side")->as<std::string>();
    if (side != "left" && side != "right")
      throw std::invalid_argument("--side must be left or right");
    const QElement x = reduce(ring, parse_element(act->get_option("--expr")->as<std::string>(), m, lax));
    const QElement y = act_word(ring, w, x, side == "left" ? Side::Left : Side::Right);
    std::cout << print_element(y, m) << "\n";
    return kExitOk;
  }

  // verify-overlaps
  auto* verify = app.get_subcommand("verify-overlaps");
  if (verify->parsed()) {
    const std::string sysname = verify->get_option("system")->as<std::string>();
    const CoxeterMatrix m = load_system(sysname);
    const std::string only = verify->get_option("--ring")->as<std::string>();
    int bad = 0;
    auto run_path = [&](const std::string& name, RewriteSystem<PathMono> sys) {
      const auto all = verify_overlaps(sys, /*include_resolved=*/true);
      const json j = overlap_summary(sysname, name, static_cast<int>(sys.rules().size()), all, m);
      bad += j["nonzero_residues"].get<int>();
      std::cout << j.dump() << "\n";
    };
    if (only.empty() || only == "R") run_path("R", rules_for_R(m));
    if (only.empty() || only == "Rtilde") run_path("Rtilde", rules_for_Rtilde(m));
    if (only.empty() || only == "Q") {
      RewriteSystem<WordMono> sys = q_system(m);
      const auto all = verify_overlaps(sys, /*include_resolved=*/true);
      const json j = overlap_summary_q(sysname, static_cast<int>(sys.rules().size()), all, m);
      bad += j["nonzero_residues"].get<int>();
      std::cout << j.dump() << "\n";
    }
    if (bad) {
      std::cout << bad << " overlap relation(s) with nonzero residue\n";
      return kExitResidue;
    }
    std::cout << "all overlap relations reduce to zero; rewriting is confluent\n";
    return kExitOk;
  }

  // realrep
  auto* realrep = app.get_subcommand("realrep");
  if (realrep->parsed()) {
    const CoxeterMatrix m = load_system(realrep->get_option("system")->as<std::string>());
    const bool want_float = realrep->get_option("--float")->as<bool>();
    const int max_len = realrep->get_option("--max-len")->as<int>();
    const std::string expr = realrep->get_option("--expr")->as<std::string>();
    const bool lax = realrep->get_option("--lax-paths")->as<bool>();
    std::vector<KChoice> ks;
    const auto kspecs = realrep->count("--k") ? realrep->get_option("--k")->as<std::vector<std::string>>()
                                              : std::vector<std::string>{};
    for (const std::string& spec : kspecs) {
      std::stringstream in(spec);
      std::string rname, sname, knum;
      if (!std::getline(in, rname, ',') || !std::getline(in, sname, ',') || !std::getline(in, knum))
        throw std::invalid_argument("--k wants r,s,k");
      const int r = m.index_of(rname), s = m.index_of(sname);
      if (r < 0 || s < 0) throw std::invalid_argument("unknown generator in --k " + spec);
      ks.push_back({r, s, std::stoi(knum)});
    }
    const auto checks = realrep->count("--check")
                            ? realrep->get_option("--check")->as<std::vector<std::string>>()
                            : std::vector<std::string>{};
    const int samples = realrep->get_option("--samples")->as<int>();
    const auto seed = realrep->get_option("--seed")->as<std::uint64_t>();
    if (want_float || !ks.empty()) {
      const ReflectionMatrix<double> A = rrm_float(m, ks);
      const std::string ring = realrep->get_option("--ring")->as<std::string>().empty()
                                   ? (A.strict ? "R" : "Rtilde")
                                   : realrep->get_option("--ring")->as<std::string>();
      return run_realrep(m, A, ring, max_len, expr, lax, checks, samples, seed);
    }
    const ReflectionMatrix<Rational> A = ngcm_crystallographic(m);
    const std::string ring = realrep->get_option("--ring")->as<std::string>().empty()
                                 ? "R"
                                 : realrep->get_option("--ring")->as<std::string>();
    return run_realrep(m, A, ring, max_len, expr, lax, checks, samples, seed);
  }

  // embed
  auto* embedcmd = app.get_subcommand("embed");
  if (embedcmd->parsed()) {
    const CoxeterMatrix m = load_system(embedcmd->get_option("system")->as<std::string>());
    const bool lax = embedcmd->get_option("--lax-paths")->as<bool>();
    const ApexEmbedding e = make_embedding(m);
    const QuotientRing base = make_quotient(m, RingTag::R);
    const QElement x = reduce(base, parse_element(embedcmd->get_option("--expr")->as<std::string>(), m, lax));
    const MatrixQ img = embed(e, x);
    for (int i = 0; i < img.size(); ++i)
      for (int j = 0; j < img.size(); ++j)
        if (!img.at(i, j).is_zero())
          std::cout << "(" << e.ext.matrix.name(i) << "," << e.ext.matrix.name(j) << ") "
                    << print_word_element(img.at(i, j), m) << "\n";
    return kExitOk;
  }

  // check-domain
  auto* domain = app.get_subcommand("check-domain");
  if (domain->parsed()) {
    const std::string sysname = domain->get_option("system")->as<std::string>();
    const CoxeterMatrix m = load_system(sysname);
    const DomainCheckReport rep = near_domain_check(
        m, domain->get_option("--trials")->as<int>(), domain->get_option("--max-len")->as<int>(),
        domain->get_option("--coeff-bound")->as<int>(), domain->get_option("--seed")->as<std::uint64_t>());
    json j{{"system", sysname},       {"seed", rep.seed},
           {"trials", rep.trials},    {"performed", rep.performed},
           {"max_len", rep.max_len},  {"coeff_bound", rep.coeff_bound},
           {"counterexamples", rep.counterexamples},
           {"embed_consistent", rep.embed_consistent},
           {"order", kOrderNote}};
    std::cout << j.dump() << "\n";
    if (!rep.ok()) {
      std::cout << "zero-divisor witness or embedding mismatch found\n";
      return kExitResidue;
    }
    std::cout << "no zero divisors in " << rep.performed << " composable products\n";
    return kExitOk;
  }

  std::cout << app.help();
  return kExitValidation;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact quotients of Coxeter path algebras: rewriting, reflection actions, "
               "real matrix images, and the matrix embedding over the edge-ring free product"};
  app.require_subcommand(0, 1);

  const std::string system_help = "Coxeter system: a file in the matrix format, or a preset "
                                  "(A3, B2, H3, I2(7), universal, running-example, ...)";

  auto* graph = app.add_subcommand("graph", "Print a system, or its graph as DOT");
  graph->add_option("system", system_help)->required();
  graph->add_flag("--dot", "emit Graphviz instead of the matrix format");

  auto* minpoly = app.add_subcommand("minpoly", "Minimal polynomial of 4cos^2(pi/n), constant term first");
  minpoly->add_option("n", "index n >= 3")->required();

  auto* nf = app.add_subcommand("nf", "Normal form of an element");
  nf->add_option("system", system_help)->required();
  nf->add_option("--ring", "P, R or Rtilde")->default_val("R");
  nf->add_option("--expr", "element expression")->required();
  nf->add_flag("--lax-paths", "treat non-paths as 0 instead of rejecting them");

  auto* mulcmd = app.add_subcommand("mul", "Product of two elements, reduced");
  mulcmd->add_option("system", system_help)->required();
  mulcmd->add_option("--ring", "P, R or Rtilde")->default_val("R");
  mulcmd->add_option("a", "left factor")->required();
  mulcmd->add_option("b", "right factor")->required();
  mulcmd->add_flag("--lax-paths", "treat non-paths as 0 instead of rejecting them");

  auto* basis = app.add_subcommand("basis", "Irreducible paths up to a length bound, one per line");
  basis->add_option("system", system_help)->required();
  basis->add_option("--ring", "R or Rtilde")->default_val("R");
  basis->add_option("--max-len", "length bound")->default_val(8);
  basis->add_option("--from", "restrict the origin");
  basis->add_option("--to", "restrict the terminus");

  auto* rank = app.add_subcommand("rank", "Graded rank of the basis, one JSON line per length");
  rank->add_option("system", system_help)->required();
  rank->add_option("--ring", "R or Rtilde")->default_val("R");
  rank->add_option("--max-len", "length bound")->default_val(8);

  auto* act = app.add_subcommand("act", "Apply a word in W to an element");
  act->add_option("system", system_help)->required();
  act->add_option("--ring", "R or Rtilde")->default_val("R");
  act->add_option("--word", "generator names, comma or space separated")->required();
  act->add_option("--side", "left or right")->default_val("left");
  act->add_option("--expr,--on", "element expression")->required();
  act->add_flag("--lax-paths", "treat non-paths as 0 instead of rejecting them");

  auto* verify = app.add_subcommand("verify-overlaps",
                                    "Certify confluence: reduce every overlap relation");
  verify->add_option("system", system_help)->required();
  verify->add_option("--ring", "restrict to R, Rtilde or Q (default: all three)");

  auto* realrep = app.add_subcommand("realrep", "Reflection matrix, kill check and image rank");
  realrep->add_option("system", system_help)->required();
  realrep->add_flag("--float", "numeric matrix -2cos(k pi/m) instead of the integral one");
  realrep->add_option("--k", "override k at a pair, as r,s,k (implies --float)")
      ->take_all();
  realrep->add_option("--ring", "factor through R or Rtilde (default by strictness)");
  realrep->add_option("--max-len", "basis cutoff for the image rank")->default_val(8);
  realrep->add_option("--check", "restrict to kill, rank or equivariance (default: all)")
      ->take_all();
  realrep->add_option("--samples", "random pairs for the equivariance check")->default_val(50);
  realrep->add_option("--seed", "RNG seed, echoed in the report")->default_val(20260815ull);
  realrep->add_option("--expr", "also print the image of this element");
  realrep->add_flag("--lax-paths", "treat non-paths as 0 instead of rejecting them");

  auto* embedcmd = app.add_subcommand("embed", "Matrix over Q embedding an element of ring R");
  embedcmd->add_option("system", system_help)->required();
  embedcmd->add_option("--expr", "element expression")->required();
  embedcmd->add_flag("--lax-paths", "treat non-paths as 0 instead of rejecting them");

  auto* domain = app.add_subcommand("check-domain", "Random search for component zero divisors");
  domain->add_option("system", system_help)->required();
  domain->add_option("--trials", "number of random products")->default_val(1000);
  domain->add_option("--max-len", "basis length bound for sampling")->default_val(5);
  domain->add_option("--coeff-bound", "coefficients drawn from [-B, B] \\ {0}")->default_val(5);
  domain->add_option("--seed", "RNG seed, echoed in the report")->default_val(20260815ull);

  try {
    app.parse(argc, argv);
    return dispatch(app);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  } catch (const SystemParseError& e) {
    std::cerr << "error: line " << e.line << ", column " << e.col << ": " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}
