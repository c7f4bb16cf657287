// Command-line front end: descriptor in, exact report out.
// Exit codes: 0 success, 1 validation error, 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mcb/arrangement.hpp"
#include "mcb/building.hpp"
#include "mcb/catalog.hpp"
#include "mcb/chow.hpp"
#include "mcb/claims.hpp"
#include "mcb/cover.hpp"
#include "mcb/error.hpp"
#include "mcb/jsonio.hpp"
#include "mcb/matroid.hpp"
#include "mcb/paving.hpp"
#include "mcb/polynomial.hpp"

namespace {

using mcb::Json;

struct Io {
  std::string input = "-";
  std::string format = "json";
  std::string output;
};

void add_io(CLI::App* cmd, Io& io, bool with_input = true) {
  if (with_input)
    cmd->add_option("--input", io.input, "descriptor file, - for stdin");
  cmd->add_option("--format", io.format, "json or tsv")
      ->check(CLI::IsMember({"json", "tsv"}));
  cmd->add_option("--output", io.output, "write here instead of stdout");
}

std::string read_input(const Io& io) {
  if (io.input == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(io.input);
  if (!f) mcb::fail("BadInput", "cannot read " + io.input);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Json load_descriptor(const Io& io) {
  try {
    return Json::parse(read_input(io));
  } catch (const nlohmann::json::exception& e) {
    mcb::fail("BadDescriptor", e.what());
  }
}

std::string render_scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// Key-value lines for objects, one line per element for arrays. Reports
// with a native tabular form pass it in directly instead.
std::string tsv_from_json(const Json& j) {
  std::string out;
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) out += k + "\t" + render_scalar(v) + "\n";
  } else if (j.is_array()) {
    for (const auto& v : j) out += render_scalar(v) + "\n";
  } else {
    out = render_scalar(j) + "\n";
  }
  return out;
}

void emit(const Io& io, const Json& j, const std::string* tsv_override = nullptr) {
  std::string text = io.format == "tsv"
                         ? (tsv_override ? *tsv_override : tsv_from_json(j))
                         : mcb::json_text(j);
  if (io.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(io.output);
    if (!f) mcb::fail("BadOutput", "cannot write " + io.output);
    f << text;
  }
}

mcb::SmallSet parse_flat_arg(const std::string& arg, int n) {
  Json arr = Json::array();
  std::stringstream ss(arg);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    try {
      arr.push_back(std::stoi(piece));
    } catch (const std::exception&) {
      mcb::fail("BadParameters", "bad element index " + piece);
    }
  }
  return mcb::set_from_json(arr, n);
}

Json opt_json(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

Json poly_json(const mcb::IntPoly& p) {
  Json o;
  o["coefficients"] = p.c;
  o["polynomial"] = p.str();
  return o;
}

Json mcb_report_json(const mcb::McbReport& r) {
  Json o;
  o["degree"] = r.degree;
  o["holds"] = r.holds;
  if (!r.holds) {
    o["p"] = r.p + 1;
    o["witness"] = mcb::family_to_json(r.witness);
  }
  return o;
}

Json tvector_json(const mcb::TVectorReport& tv) {
  Json o;
  Json t = Json::object();
  for (const auto& [k, v] : tv.t) t[std::to_string(k)] = v;
  o["t"] = t;
  o["diagnostic_available"] = tv.diagnostic_available;
  if (tv.diagnostic_available) {
    o["diagnostic"] = tv.diagnostic;
    o["k_interpretation"] = tv.k_interpretation;
  }
  return o;
}

// ---- mcb ----

void run_mcb_check(const Io& io, int degree) {
  mcb::Matroid m = mcb::matroid_from_descriptor(load_descriptor(io));
  emit(io, mcb_report_json(mcb::is_mcb(m, degree)));
}

void run_mcb_profile(const Io& io) {
  mcb::Matroid m = mcb::matroid_from_descriptor(load_descriptor(io));
  mcb::McbProfile p = mcb::mcb_profile(m);
  Json o;
  o["min_failure_degree"] = opt_json(p.min_failure_degree);
  o["min_nontrivial_degree"] = opt_json(p.min_nontrivial_degree);
  emit(io, o);
}

// ---- bset ----

void run_bset_closure(const Io& io) {
  auto [n, members] = mcb::family_from_descriptor(load_descriptor(io));
  mcb::BuildingSet b = mcb::building_set_closure(n, members);
  emit(io, mcb::descriptor_for_family(b.n, b.members));
}

void run_bset_mcb(const Io& io, int degree) {
  auto [n, members] = mcb::family_from_descriptor(load_descriptor(io));
  mcb::BuildingSet b = mcb::building_set(n, members);
  emit(io, mcb_report_json(mcb::bs_mcb(b, degree)));
}

void run_bset_predicate(const Io& io) {
  auto [n, members] = mcb::family_from_descriptor(load_descriptor(io));
  mcb::BuildingSet b = mcb::building_set(n, members);
  mcb::NestReport nr = mcb::nestmcb_predicate(b);
  Json o;
  o["predicate"] = nr.predicate;
  Json counts = Json::array();
  for (const auto& [member, inside] : nr.counts) {
    Json row;
    row["maximal_member"] = mcb::set_to_json(member);
    row["maximal_inside"] = inside;
    counts.push_back(row);
  }
  o["counts"] = counts;
  emit(io, o);
}

void run_bset_components(const Io& io) {
  auto [n, members] = mcb::family_from_descriptor(load_descriptor(io));
  mcb::BuildingSet b = mcb::building_set(n, members);
  mcb::BsComponents c = mcb::bs_components(b);
  Json o;
  o["connected"] = b.connected();
  o["components"] = c.components;
  o["n_minus_c"] = c.n_minus_c;
  emit(io, o);
}

// ---- chow ----

void run_chow_hilbert(const Io& io) {
  mcb::Matroid m = mcb::matroid_from_descriptor(load_descriptor(io));
  emit(io, poly_json(mcb::hilbert_fy(m)));
}

void run_chow_basis(const Io& io, int degree) {
  mcb::Matroid m = mcb::matroid_from_descriptor(load_descriptor(io));
  auto monomials = mcb::fy_basis_enumerate(m, degree);
  Json o;
  o["degree"] = degree;
  o["count"] = monomials.size();
  Json list = Json::array();
  for (const auto& mono : monomials) {
    Json factors = Json::array();
    for (const auto& f : mono) {
      Json fo;
      fo["flat"] = mcb::set_to_json(f.flat);
      fo["exponent"] = f.exponent;
      factors.push_back(fo);
    }
    list.push_back(factors);
  }
  o["monomials"] = list;
  emit(io, o);
}

void run_chow_annihilator(const Io& io, const std::string& flat_arg) {
  mcb::Matroid m = mcb::matroid_from_descriptor(load_descriptor(io));
  mcb::SmallSet flat = parse_flat_arg(flat_arg, m.n);
  mcb::AnnihilatorReport r = mcb::annihilator_quotient_dims(m, flat);
  Json o;
  o["hyperplane"] = mcb::set_to_json(r.hyperplane);
  o["dims"] = r.dims;
  o["total"] = r.total;
  emit(io, o);
}

// ---- arr ----

void run_arr_matroid(const Io& io) {
  mcb::Arrangement a = mcb::arrangement_from_descriptor(load_descriptor(io));
  mcb::Matroid m = mcb::intersection_matroid(a);
  Json o;
  o["hyperplanes"] = m.n;
  o["rank"] = m.rank;
  o["matroid"] = mcb::descriptor_for_flats(m);
  emit(io, o);
}

void run_arr_tvector(const Io& io) {
  mcb::LineArrangement l = mcb::lines_from_descriptor(load_descriptor(io));
  emit(io, tvector_json(mcb::line_arrangement_tvector(l)));
}

void run_arr_supersolvable(const Io& io) {
  mcb::Arrangement a = mcb::arrangement_from_descriptor(load_descriptor(io));
  mcb::SupersolvableChain c = mcb::supersolvable_decompose(a);
  mcb::IntPoly chi = mcb::characteristic_polynomial(mcb::intersection_matroid(a));
  Json o;
  o["supersolvable"] = c.supersolvable;
  o["e"] = c.e;
  o["chain"] = mcb::family_to_json(c.chain);
  o["characteristic_polynomial"] = poly_json(chi);
  emit(io, o);
}

void run_arr_regions(const Io& io) {
  mcb::Arrangement a = mcb::arrangement_from_descriptor(load_descriptor(io));
  mcb::RegionsReport r = mcb::regions_count(a);
  Json o;
  o["via_chi"] = r.via_chi;
  o["via_euler"] = r.via_euler;
  emit(io, o);
}

void run_arr_hh(const Io& io, const std::string& kind, int m, int a, int b) {
  mcb::HhFamily f = [&]() -> mcb::HhFamily {
    if (kind == "two_modular") return mcb::hh_two_modular(a, b);
    if (kind == "three_modular") return mcb::hh_three_modular(m);
    if (kind == "four_modular") return mcb::hh_four_modular();
    mcb::fail("BadParameters", "unknown family kind " + kind);
  }();
  Json o;
  o["kind"] = f.kind;
  o["params"] = f.params;
  o["lines"] = f.lines.lines;
  o["points"] = mcb::family_to_json(f.lines.points);
  o["tvector"] = tvector_json(mcb::line_arrangement_tvector(f.lines));
  emit(io, o);
}

// ---- paving ----

void load_paving_fields(const Json& j, int& n, int& m, std::vector<mcb::SmallSet>& blocks) {
  if (!j.is_object() || j.value("type", "") != "paving")
    mcb::fail("BadDescriptor", "expected a paving descriptor");
  mcb::Matroid parsed = mcb::matroid_from_descriptor(j);  // full validation
  n = parsed.n;
  m = parsed.rank - 1;
  blocks = parsed.hyperplanes();
}

void run_paving_validate(const Io& io) {
  int n = 0, m = 0;
  std::vector<mcb::SmallSet> blocks;
  load_paving_fields(load_descriptor(io), n, m, blocks);
  Json o;
  o["valid"] = true;
  o["n"] = n;
  o["m"] = m;
  o["rank"] = m + 1;
  o["blocks"] = blocks.size();
  emit(io, o);
}

void run_paving_cover(const Io& io) {
  mcb::Matroid m = mcb::matroid_from_descriptor(load_descriptor(io));
  mcb::Cover c = mcb::min_hyperplane_cover(m);
  Json o;
  o["size"] = c.size;
  o["cover"] = mcb::family_to_json(c.members);
  emit(io, o);
}

void run_paving_bounds(const Io& io, int k, int ratio_cap) {
  mcb::Matroid m = mcb::matroid_from_descriptor(load_descriptor(io));
  mcb::PavBound1 b1 = mcb::pav_bound_part1(m, k, ratio_cap);
  mcb::PavBound2 b2 = mcb::pav_bound_part2(m, b1.designated);
  Json o;
  Json j1;
  j1["bound"] = b1.bound;
  j1["in_regime"] = b1.in_regime;
  j1["regime_factor"] = b1.regime_factor;
  j1["k"] = b1.k;
  j1["ratio_cap"] = b1.ratio_cap;
  j1["designated"] = mcb::family_to_json(b1.designated);
  o["part1"] = j1;
  Json j2;
  j2["bound"] = b2.bound;
  j2["k"] = b2.k;
  j2["min_designated"] = b2.min_designated;
  o["part2"] = j2;
  emit(io, o);
}

void run_paving_random(const Io& io, int n, int m, std::uint64_t seed) {
  mcb::Matroid mat = mcb::random_sparse_paving(n, m, seed);
  emit(io, mcb::descriptor_for_paving(n, m, mat.hyperplanes()));
}

// ---- claims / catalog ----

void run_claims_cmd(const Io& io, bool all, const std::vector<std::string>& ids,
                    std::uint64_t seed) {
  std::vector<std::string> selection = all ? std::vector<std::string>{} : ids;
  mcb::ClaimsReport rep = mcb::run_claims(selection, seed);
  emit(io, rep.json, &rep.tsv);
}

void run_catalog_list(const Io& io) {
  Json o;
  Json rows = Json::array();
  std::string tsv = "kind\tname\tsize\trank\n";
  for (const auto& e : mcb::catalog_matroids()) {
    Json r;
    r["kind"] = e.kind;
    r["name"] = e.name;
    r["n"] = e.matroid.n;
    r["rank"] = e.matroid.rank;
    rows.push_back(r);
    tsv += e.kind + "\t" + e.name + "\t" + std::to_string(e.matroid.n) + "\t" +
           std::to_string(e.matroid.rank) + "\n";
  }
  o["matroids"] = rows;
  Json brows = Json::array();
  for (const auto& e : mcb::catalog_building_sets()) {
    Json r;
    r["name"] = e.name;
    r["n"] = e.bset.n;
    r["members"] = e.bset.members.size();
    brows.push_back(r);
    tsv += "building_set\t" + e.name + "\t" + std::to_string(e.bset.n) + "\t-\n";
  }
  o["building_sets"] = brows;
  Json arows = Json::array();
  for (const auto& e : mcb::catalog_arrangements()) {
    Json r;
    r["name"] = e.name;
    r["dim"] = e.arr.dim;
    r["hyperplanes"] = e.arr.normals.size();
    arows.push_back(r);
    tsv += "arrangement\t" + e.name + "\t" + std::to_string(e.arr.normals.size()) +
           "\t-\n";
  }
  o["arrangements"] = arows;
  Json prows = Json::array();
  for (const auto& e : mcb::catalog_pencil_instances()) {
    Json r;
    r["name"] = e.name;
    r["count"] = e.count;
    prows.push_back(r);
    tsv += "pencil\t" + e.name + "\t" + std::to_string(e.count) + "\t-\n";
  }
  o["pencils"] = prows;
  emit(io, o, &tsv);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for the matroidal Cayley-Bacharach property"};
  app.require_subcommand(1);

  // mcb
  auto* mcb_cmd = app.add_subcommand("mcb", "MCB checks on a matroid descriptor");
  mcb_cmd->require_subcommand(1);
  Io mcb_check_io;
  int mcb_degree = 0;
  auto* mcb_check = mcb_cmd->add_subcommand("check", "degree-a check");
  mcb_check->add_option("--degree", mcb_degree, "degree a")
      ->required()
      ->check(CLI::NonNegativeNumber);
  add_io(mcb_check, mcb_check_io);
  mcb_check->callback([&] { run_mcb_check(mcb_check_io, mcb_degree); });
  Io mcb_profile_io;
  auto* mcb_prof = mcb_cmd->add_subcommand("profile", "minimal failure degrees");
  add_io(mcb_prof, mcb_profile_io);
  mcb_prof->callback([&] { run_mcb_profile(mcb_profile_io); });

  // bset
  auto* bset_cmd = app.add_subcommand("bset", "building-set operations");
  bset_cmd->require_subcommand(1);
  Io bset_closure_io;
  auto* bset_closure = bset_cmd->add_subcommand("closure", "building set closure");
  add_io(bset_closure, bset_closure_io);
  bset_closure->callback([&] { run_bset_closure(bset_closure_io); });
  Io bset_mcb_io;
  int bset_degree = 0;
  auto* bset_mcb_sc = bset_cmd->add_subcommand("mcb", "degree-a check");
  bset_mcb_sc->add_option("--degree", bset_degree, "degree a")
      ->required()
      ->check(CLI::NonNegativeNumber);
  add_io(bset_mcb_sc, bset_mcb_io);
  bset_mcb_sc->callback([&] { run_bset_mcb(bset_mcb_io, bset_degree); });
  Io bset_pred_io;
  auto* bset_pred = bset_cmd->add_subcommand("predicate", "maximal-member counts");
  add_io(bset_pred, bset_pred_io);
  bset_pred->callback([&] { run_bset_predicate(bset_pred_io); });
  Io bset_comp_io;
  auto* bset_comp = bset_cmd->add_subcommand("components", "intersection components");
  add_io(bset_comp, bset_comp_io);
  bset_comp->callback([&] { run_bset_components(bset_comp_io); });

  // chow
  auto* chow_cmd = app.add_subcommand("chow", "Chow ring computations");
  chow_cmd->require_subcommand(1);
  Io chow_hilbert_io;
  auto* chow_hilbert = chow_cmd->add_subcommand("hilbert", "Hilbert series");
  add_io(chow_hilbert, chow_hilbert_io);
  chow_hilbert->callback([&] { run_chow_hilbert(chow_hilbert_io); });
  Io chow_basis_io;
  int chow_degree = 0;
  auto* chow_basis = chow_cmd->add_subcommand("basis", "graded basis monomials");
  chow_basis->add_option("--degree", chow_degree, "degree d")
      ->required()
      ->check(CLI::NonNegativeNumber);
  add_io(chow_basis, chow_basis_io);
  chow_basis->callback([&] { run_chow_basis(chow_basis_io, chow_degree); });
  Io chow_ann_io;
  std::string chow_flat;
  auto* chow_ann = chow_cmd->add_subcommand("annihilator", "annihilator quotient dims");
  chow_ann->add_option("--flat", chow_flat, "hyperplane flat, e.g. 1,2")->required();
  add_io(chow_ann, chow_ann_io);
  chow_ann->callback([&] { run_chow_annihilator(chow_ann_io, chow_flat); });

  // arr
  auto* arr_cmd = app.add_subcommand("arr", "hyperplane and line arrangements");
  arr_cmd->require_subcommand(1);
  Io arr_matroid_io;
  auto* arr_matroid = arr_cmd->add_subcommand("matroid", "intersection matroid");
  add_io(arr_matroid, arr_matroid_io);
  arr_matroid->callback([&] { run_arr_matroid(arr_matroid_io); });
  Io arr_tv_io;
  auto* arr_tv = arr_cmd->add_subcommand("tvector", "multiplicity counts");
  add_io(arr_tv, arr_tv_io);
  arr_tv->callback([&] { run_arr_tvector(arr_tv_io); });
  Io arr_ss_io;
  auto* arr_ss = arr_cmd->add_subcommand("supersolvable", "modular chain search");
  add_io(arr_ss, arr_ss_io);
  arr_ss->callback([&] { run_arr_supersolvable(arr_ss_io); });
  Io arr_reg_io;
  auto* arr_reg = arr_cmd->add_subcommand("regions", "region counts");
  add_io(arr_reg, arr_reg_io);
  arr_reg->callback([&] { run_arr_regions(arr_reg_io); });
  Io arr_hh_io;
  std::string hh_kind;
  int hh_m = 0, hh_a = 0, hh_b = 0;
  auto* arr_hh = arr_cmd->add_subcommand("hh", "incidence-classified line families");
  arr_hh->add_option("--kind", hh_kind, "two_modular|three_modular|four_modular")
      ->required()
      ->check(CLI::IsMember({"two_modular", "three_modular", "four_modular"}));
  arr_hh->add_option("--m", hh_m, "parameter for three_modular");
  arr_hh->add_option("--a", hh_a, "first multiplicity for two_modular");
  arr_hh->add_option("--b", hh_b, "second multiplicity for two_modular");
  add_io(arr_hh, arr_hh_io, /*with_input=*/false);
  arr_hh->callback([&] { run_arr_hh(arr_hh_io, hh_kind, hh_m, hh_a, hh_b); });

  // paving
  auto* pav_cmd = app.add_subcommand("paving", "paving matroid operations");
  pav_cmd->require_subcommand(1);
  Io pav_val_io;
  auto* pav_val = pav_cmd->add_subcommand("validate", "m-partition check");
  add_io(pav_val, pav_val_io);
  pav_val->callback([&] { run_paving_validate(pav_val_io); });
  Io pav_cov_io;
  auto* pav_cov = pav_cmd->add_subcommand("cover", "minimum hyperplane cover");
  add_io(pav_cov, pav_cov_io);
  pav_cov->callback([&] { run_paving_cover(pav_cov_io); });
  Io pav_bounds_io;
  int pav_k = 2, pav_cap = 2;
  auto* pav_bounds = pav_cmd->add_subcommand("bounds", "degree bounds");
  pav_bounds->add_option("--k", pav_k, "designated hyperplane count")
      ->check(CLI::PositiveNumber);
  pav_bounds->add_option("--ratio-cap", pav_cap, "size ratio cap C")
      ->check(CLI::PositiveNumber);
  add_io(pav_bounds, pav_bounds_io);
  pav_bounds->callback([&] { run_paving_bounds(pav_bounds_io, pav_k, pav_cap); });
  Io pav_rand_io;
  int pav_n = 0, pav_m = 0;
  std::uint64_t pav_seed = 0;
  auto* pav_rand = pav_cmd->add_subcommand("random", "seeded sparse paving");
  pav_rand->add_option("--n", pav_n, "ground set size")->required();
  pav_rand->add_option("--m", pav_m, "partition parameter")->required();
  pav_rand->add_option("--seed", pav_seed, "generator seed");
  add_io(pav_rand, pav_rand_io, /*with_input=*/false);
  pav_rand->callback([&] { run_paving_random(pav_rand_io, pav_n, pav_m, pav_seed); });

  // claims
  auto* claims_cmd = app.add_subcommand("claims", "claim verification harness");
  claims_cmd->require_subcommand(1);
  Io claims_io;
  bool claims_all = false;
  std::uint64_t claims_seed = 0;
  std::vector<std::string> claim_ids;
  auto* claims_run = claims_cmd->add_subcommand("run", "evaluate claims");
  claims_run->add_flag("--all", claims_all, "evaluate every claim");
  claims_run->add_option("--claim", claim_ids, "claim id, repeatable");
  claims_run->add_option("--seed", claims_seed, "echoed into the report");
  add_io(claims_run, claims_io, /*with_input=*/false);
  claims_run->callback(
      [&] { run_claims_cmd(claims_io, claims_all || claim_ids.empty(), claim_ids, claims_seed); });

  // catalog
  auto* cat_cmd = app.add_subcommand("catalog", "named instance corpus");
  cat_cmd->require_subcommand(1);
  Io cat_io;
  auto* cat_list = cat_cmd->add_subcommand("list", "list catalog entries");
  add_io(cat_list, cat_io, /*with_input=*/false);
  cat_list->callback([&] { run_catalog_list(cat_io); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const mcb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
