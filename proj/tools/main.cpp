// command-line front end: generate complexes, compute characteristic
// polynomials, enumerate rooted forests and fitting orientations, and run
// the identity verification battery.
//
// exit codes: 0 success, 1 an identity check failed, 2 usage or input
// error, 3 enumeration caps exceeded.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "simforest/complex_io.hpp"
#include "simforest/exact_linalg.hpp"
#include "simforest/forests.hpp"
#include "simforest/generators.hpp"
#include "simforest/orientations.hpp"
#include "simforest/rng.hpp"
#include "simforest/verify.hpp"

using simforest::BigInt;
using simforest::Complex;
using simforest::EnumerationLimits;
using simforest::FaceSubset;
using simforest::IntPolynomial;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr std::size_t kMaxListedOrientations = 256;
constexpr std::size_t kMaxListedPairs = 64;

ordered_json complex_summary(const Complex& g) {
  ordered_json face_counts = ordered_json::array();
  for (int k = 0; k <= g.dimension(); ++k)
    face_counts.push_back(g.face_count(k));
  return ordered_json{{"type", g.is_simplicial() ? "simplicial" : "cell"},
                      {"dimension", g.dimension()},
                      {"face_counts", face_counts}};
}

// coefficients low -> high, as decimal strings (they outgrow any fixed
// integer width quickly)
ordered_json poly_to_json(const IntPolynomial& p) {
  ordered_json out = ordered_json::array();
  for (const BigInt& c : p.coefficients()) out.push_back(c.str());
  return out;
}

ordered_json caps_to_json(const EnumerationLimits& limits) {
  return ordered_json{{"max_facets", limits.max_facets},
                      {"max_ridges", limits.max_ridges}};
}

ordered_json identity_entry(const std::string& name, bool pass,
                            const std::string& detail) {
  return ordered_json{{"name", name}, {"pass", pass}, {"detail", detail}};
}

void emit(const ordered_json& report) { std::cout << report.dump(2) << "\n"; }

struct GenArgs {
  std::string family;
  std::vector<int> params;
  std::string output = "-";
};

Complex build_generated(const GenArgs& a) {
  auto expect = [&](std::size_t n) {
    if (a.params.size() != n)
      throw std::invalid_argument("gen: family '" + a.family + "' expects " +
                                  std::to_string(n) + " integer argument(s)");
  };
  if (a.family == "complete") {
    expect(2);
    return Complex(simforest::gen_complete(a.params[0], a.params[1]));
  }
  if (a.family == "simplex-boundary") {
    expect(1);
    return Complex(simforest::gen_simplex_boundary(a.params[0]));
  }
  if (a.family == "bipyramid") {
    expect(0);
    return Complex(simforest::gen_bipyramid());
  }
  if (a.family == "rp2") {
    expect(0);
    return Complex(simforest::gen_projective_plane_6());
  }
  if (a.family == "hypercube") {
    expect(2);
    return Complex(simforest::gen_hypercube(a.params[0], a.params[1]));
  }
  throw std::invalid_argument(
      "gen: unknown family '" + a.family +
      "' (valid: complete, simplex-boundary, bipyramid, rp2, hypercube)");
}

int run_gen(const GenArgs& a) {
  const Complex g = build_generated(a);
  if (a.output == "-") {
    simforest::write_complex(std::cout, g);
  } else {
    std::ofstream out(a.output);
    if (!out)
      throw std::invalid_argument("gen: cannot open output file " + a.output);
    simforest::write_complex(out, g);
  }
  return 0;
}

int run_charpoly(const std::string& input) {
  const Complex g = simforest::read_complex_file(input);
  const IntPolynomial p =
      simforest::char_poly_shifted(simforest::laplacian(g));
  ordered_json report{{"command", "charpoly"},
                      {"input", input},
                      {"complex", complex_summary(g)},
                      {"characteristic_polynomial", poly_to_json(p)}};
  emit(report);
  return 0;
}

int run_forests(const std::string& input, const EnumerationLimits& limits,
                bool weighted, std::uint64_t weights_seed) {
  const Complex g = simforest::read_complex_file(input);

  BigInt total = 0;
  std::map<std::size_t, BigInt> by_root_size;
  std::map<BigInt, BigInt> weight_histogram;
  std::vector<BigInt> coeffs(g.ridge_count() + 1);
  simforest::for_each_rooted_forest(
      g, limits, [&](const simforest::RootedForest& rf) {
        total += 1;
        by_root_size[rf.root.size()] += 1;
        weight_histogram[rf.weight] += 1;
        coeffs[rf.root.size()] += rf.weight * rf.weight;
      });
  const IntPolynomial forest_poly(std::move(coeffs));
  const IntPolynomial char_poly =
      simforest::char_poly_shifted(simforest::laplacian(g));

  ordered_json report{{"command", "forests"},
                      {"input", input},
                      {"complex", complex_summary(g)},
                      {"caps", caps_to_json(limits)}};
  report["rooted_forest_count"] = total.str();
  ordered_json by_size = ordered_json::object();
  for (const auto& [size, count] : by_root_size)
    by_size[std::to_string(size)] = count.str();
  report["counts_by_root_size"] = by_size;
  ordered_json histogram = ordered_json::object();
  for (const auto& [w, count] : weight_histogram)
    histogram[w.str()] = count.str();
  report["weight_histogram"] = histogram;
  report["forest_polynomial"] = poly_to_json(forest_poly);
  report["characteristic_polynomial"] = poly_to_json(char_poly);

  ordered_json identities = ordered_json::array();
  const bool poly_match = forest_poly == char_poly;
  identities.push_back(identity_entry(
      "forest_polynomial_matches_char_poly", poly_match,
      poly_match ? "sum of weight^2 * x^|root| equals det(L + x Id)"
                 : "enumerated polynomial differs from det(L + x Id)"));

  if (weighted) {
    // three integer points drawn from one seeded stream; both weighted
    // identities are evaluated at each
    constexpr int kPoints = 3;
    simforest::SplitMix64 rng(weights_seed);
    ordered_json points = ordered_json::array();
    bool forest_ok = true, bidirected_ok = true;
    std::string forest_detail, bidirected_detail;
    for (int p = 0; p < kPoints; ++p) {
      const simforest::WeightAssignment w =
          simforest::seeded_weight_assignment(g, rng);
      const simforest::WeightedSumCheck facet_check =
          simforest::weighted_rooted_forest_sum(g, w, limits);
      const simforest::WeightedSumCheck pair_check =
          simforest::weighted_bidirected_sum(g, w, limits);
      points.push_back(ordered_json{
          {"point", p},
          {"facet_weighted",
           ordered_json{{"enumerated", facet_check.enumerated.str()},
                        {"determinant", facet_check.determinant.str()}}},
          {"pair_weighted",
           ordered_json{{"enumerated", pair_check.enumerated.str()},
                        {"determinant", pair_check.determinant.str()}}}});
      if (!facet_check.matches() && forest_ok) {
        forest_ok = false;
        forest_detail = "point " + std::to_string(p) + ": enumerated " +
                        facet_check.enumerated.str() + ", determinant " +
                        facet_check.determinant.str();
      }
      if (!pair_check.matches() && bidirected_ok) {
        bidirected_ok = false;
        bidirected_detail = "point " + std::to_string(p) + ": enumerated " +
                            pair_check.enumerated.str() + ", determinant " +
                            pair_check.determinant.str();
      }
    }
    report["weighted"] =
        ordered_json{{"seed", weights_seed}, {"points", points}};
    identities.push_back(identity_entry(
        "weighted_forest_identity", forest_ok,
        forest_ok ? "facet-weighted sums match at 3 seeded points"
                  : forest_detail));
    identities.push_back(identity_entry(
        "weighted_bidirected_identity", bidirected_ok,
        bidirected_ok ? "pair-weighted bi-directed sums match at 3 seeded points"
                      : bidirected_detail));
  }

  report["identities"] = identities;
  bool all = true;
  for (const auto& entry : identities) all = all && entry["pass"].get<bool>();
  report["all_pass"] = all;
  emit(report);
  return all ? 0 : 1;
}

int run_orientations(const std::string& input, const std::vector<int>& forest,
                     const std::vector<int>& root) {
  const Complex g = simforest::read_complex_file(input);
  const int dim = g.dimension();
  const FaceSubset f = FaceSubset::of(dim, forest);
  const FaceSubset r = FaceSubset::of(dim - 1, root);

  // validates the pair: distinguishes a size mismatch from a singular
  // boundary submatrix in its error message
  const BigInt weight = simforest::homology_weight(g, f, r);
  const simforest::SmithForm structure =
      simforest::homology_structure(g, f, r);

  const simforest::IntMatrix d = g.boundary_matrix(dim);
  const std::vector<int> non_root = simforest::complement_within(
      r.members, static_cast<int>(g.ridge_count()));
  const simforest::OrientationAnalysis analysis =
      simforest::analyze_orientations(d, f.members, non_root);

  BigInt signed_sum = 0;
  for (const BigInt& s : analysis.signs) signed_sum += s;

  ordered_json report{{"command", "orientations"},
                      {"input", input},
                      {"complex", complex_summary(g)},
                      {"forest", f.members},
                      {"root", r.members},
                      {"non_root_ridges", non_root}};
  report["weight"] = weight.str();
  ordered_json factors = ordered_json::array();
  for (const BigInt& x : structure.invariant_factors)
    factors.push_back(x.str());
  report["invariant_factors"] = factors;
  report["orientation_count"] = analysis.orientations.size();
  report["signed_sum"] = signed_sum.str();

  // each orientation as explicit [ridge, facet] index pairs
  ordered_json listed = ordered_json::array();
  const std::size_t n_orient = analysis.orientations.size();
  const std::size_t shown = std::min(n_orient, kMaxListedOrientations);
  for (std::size_t i = 0; i < shown; ++i) {
    const std::vector<int>& assign = analysis.orientations[i].assigned_facet;
    ordered_json pairs = ordered_json::array();
    for (std::size_t t = 0; t < assign.size(); ++t)
      pairs.push_back(ordered_json::array(
          {non_root[t], assign[t]}));
    listed.push_back(ordered_json{{"assignment", pairs},
                                  {"sign", analysis.signs[i].str()}});
  }
  report["orientations"] = listed;
  report["orientations_truncated"] = n_orient > kMaxListedOrientations;

  // strip decomposition and sign product of every ordered orientation pair;
  // the sign law is checked on all of them, the report lists the first few
  ordered_json pair_list = ordered_json::array();
  bool strips_ok = true;
  std::string strips_detail;
  std::size_t pairs_listed = 0;
  for (std::size_t i = 0; i < n_orient; ++i) {
    const BigInt mag_i = simforest::abs_of(analysis.lambdas[i]);
    for (std::size_t j = 0; j < n_orient; ++j) {
      const simforest::StripDecomposition sd =
          simforest::strip_decomposition_raw(d, non_root,
                                             analysis.orientations[i],
                                             analysis.orientations[j]);
      const BigInt magnitude = mag_i * simforest::abs_of(analysis.lambdas[j]);
      const BigInt term = sd.oriented_strip_count() % 2 == 0
                              ? magnitude
                              : BigInt(-magnitude);
      const BigInt sign_product = analysis.signs[i] * analysis.signs[j];
      if (sign_product != term && strips_ok) {
        strips_ok = false;
        strips_detail = "pair (" + std::to_string(i) + ", " +
                        std::to_string(j) + "): sign product " +
                        sign_product.str() + ", strip parity gives " +
                        term.str();
      }
      if (pairs_listed < kMaxListedPairs) {
        ordered_json cycles = ordered_json::array();
        for (const simforest::StripCycle& c : sd.cycles)
          cycles.push_back(ordered_json{{"ridges", c.ridges},
                                        {"facets", c.facets},
                                        {"oriented", c.oriented}});
        pair_list.push_back(
            ordered_json{{"first", i},
                         {"second", j},
                         {"sign_product", sign_product.str()},
                         {"oriented_strips", sd.oriented_strip_count()},
                         {"fixed_points", sd.fixed_points},
                         {"cycles", cycles}});
        ++pairs_listed;
      }
    }
  }
  report["orientation_pairs"] = pair_list;
  report["orientation_pairs_truncated"] = n_orient * n_orient > kMaxListedPairs;

  ordered_json identities = ordered_json::array();
  const bool sum_ok = signed_sum == weight;
  identities.push_back(identity_entry(
      "orientation_signed_sum_equals_weight", sum_ok,
      "signed sum " + signed_sum.str() + ", weight " + weight.str()));
  const bool count_ok =
      BigInt(static_cast<std::uint64_t>(n_orient)) >= weight;
  identities.push_back(identity_entry(
      "orientation_count_at_least_weight", count_ok,
      std::to_string(n_orient) + " fitting orientations, weight " +
          weight.str()));
  identities.push_back(identity_entry(
      "strip_parity_matches_sign_product", strips_ok,
      strips_ok ? std::to_string(n_orient * n_orient) +
                      " ordered orientation pairs checked"
                : strips_detail));
  report["identities"] = identities;
  const bool all = sum_ok && count_ok && strips_ok;
  report["all_pass"] = all;
  emit(report);
  return all ? 0 : 1;
}

int run_verify(const std::string& input, bool extended, std::uint64_t seed,
               const EnumerationLimits& limits) {
  const Complex g = simforest::read_complex_file(input);
  simforest::VerifyOptions options;
  options.extended = extended;
  options.seed = seed;
  options.limits = limits;
  const std::vector<simforest::IdentityReport> results =
      simforest::verify_identities(g, options);

  ordered_json report{{"command", "verify"},
                      {"input", input},
                      {"complex", complex_summary(g)},
                      {"mode", extended ? "all" : "core"},
                      {"seed", seed},
                      {"caps", caps_to_json(limits)}};
  ordered_json identities = ordered_json::array();
  for (const auto& r : results)
    identities.push_back(identity_entry(r.name, r.pass, r.detail));
  report["identities"] = identities;
  const bool all = simforest::all_pass(results);
  report["all_pass"] = all;
  emit(report);
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact rooted-forest, orientation, and characteristic-polynomial "
      "toolkit for simplicial and cell complexes"};
  app.require_subcommand(1);

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand(
      "gen", "generate a built-in complex and write it as JSON");
  gen->add_option("family", gen_args.family,
                  "complete | simplex-boundary | bipyramid | rp2 | hypercube")
      ->required();
  gen->add_option("params", gen_args.params,
                  "integer parameters of the family");
  gen->add_option("-o,--output", gen_args.output,
                  "output file (default: stdout)");

  std::string charpoly_input;
  CLI::App* charpoly = app.add_subcommand(
      "charpoly",
      "characteristic polynomial det(L + x Id) of the top Laplacian");
  charpoly->add_option("input", charpoly_input, "complex file, '-' for stdin")
      ->required();

  std::string forests_input;
  EnumerationLimits forests_limits;
  std::size_t forests_cap = 0;
  std::uint64_t weights_seed = simforest::kDefaultSeed;
  bool forests_weighted = false;
  CLI::App* forests = app.add_subcommand(
      "forests", "enumerate rooted forests and check the forest polynomial");
  forests->add_option("input", forests_input, "complex file, '-' for stdin")
      ->required();
  CLI::Option* forests_cap_opt = forests->add_option(
      "--cap", forests_cap, "set both enumeration caps at once");
  CLI::Option* forests_mf_opt = forests->add_option(
      "--max-facets", forests_limits.max_facets, "enumeration cap on top faces");
  CLI::Option* forests_mr_opt = forests->add_option(
      "--max-ridges", forests_limits.max_ridges, "enumeration cap on ridges");
  CLI::Option* seed_opt = forests->add_option(
      "--weights-seed", weights_seed,
      "also check the weighted identities at weights drawn from this seed");

  std::string orient_input;
  std::vector<int> orient_forest, orient_root;
  CLI::App* orientations = app.add_subcommand(
      "orientations", "fitting orientations of one rooted forest");
  orientations->add_option("input", orient_input, "complex file, '-' for stdin")
      ->required();
  orientations
      ->add_option("--forest", orient_forest,
                   "comma-separated facet indices (default: empty)")
      ->delimiter(',');
  orientations
      ->add_option("--root", orient_root,
                   "comma-separated ridge indices (default: empty)")
      ->delimiter(',');

  std::string verify_input;
  bool verify_all = false;
  std::uint64_t verify_seed = simforest::kDefaultSeed;
  EnumerationLimits verify_limits;
  std::size_t verify_cap = 0;
  CLI::App* verify = app.add_subcommand(
      "verify", "run the identity verification battery on a complex");
  verify->add_option("input", verify_input, "complex file, '-' for stdin")
      ->required();
  verify->add_flag("--all", verify_all,
                   "include the weighted and sampled extended checks");
  verify->add_option("--seed", verify_seed,
                     "seed for weighted points and sampling");
  CLI::Option* verify_cap_opt = verify->add_option(
      "--cap", verify_cap, "set both enumeration caps at once");
  CLI::Option* verify_mf_opt = verify->add_option(
      "--max-facets", verify_limits.max_facets, "enumeration cap on top faces");
  CLI::Option* verify_mr_opt = verify->add_option(
      "--max-ridges", verify_limits.max_ridges, "enumeration cap on ridges");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return run_gen(gen_args);
    if (charpoly->parsed()) return run_charpoly(charpoly_input);
    if (forests->parsed()) {
      forests_weighted = seed_opt->count() > 0;
      if (forests_cap_opt->count() > 0) {
        // --cap fills both limits; an explicit --max-* still wins
        if (forests_mf_opt->count() == 0) forests_limits.max_facets = forests_cap;
        if (forests_mr_opt->count() == 0) forests_limits.max_ridges = forests_cap;
      }
      return run_forests(forests_input, forests_limits, forests_weighted,
                         weights_seed);
    }
    if (orientations->parsed())
      return run_orientations(orient_input, orient_forest, orient_root);
    if (verify->parsed()) {
      if (verify_cap_opt->count() > 0) {
        if (verify_mf_opt->count() == 0) verify_limits.max_facets = verify_cap;
        if (verify_mr_opt->count() == 0) verify_limits.max_ridges = verify_cap;
      }
      return run_verify(verify_input, verify_all, verify_seed, verify_limits);
    }
  } catch (const simforest::CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;  // unreachable: a subcommand is required
}
