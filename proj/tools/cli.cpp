#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "autcode/action.hpp"
#include "autcode/classify.hpp"
#include "autcode/code.hpp"
#include "autcode/cyclotomic.hpp"
#include "autcode/dihedral.hpp"
#include "autcode/errors.hpp"
#include "autcode/fixedinteraction.hpp"
#include "autcode/mat_io.hpp"
#include "autcode/primedecomp.hpp"
#include "autcode/twopmodule.hpp"

namespace autcode::cli {

namespace {

using Json = nlohmann::ordered_json;

Json basis_json(const BinaryCode& code) {
  Json rows = Json::array();
  for (const auto& row : code.basis()) rows.push_back(row.to_string());
  return rows;
}

std::string qvector_text(const QVector& v) {
  std::string line;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) line += ',';
    line += v[i].coefficients();
  }
  return line;
}

Json ideal_basis_json(const IdealCode& code) {
  Json rows = Json::array();
  for (const auto& v : code.basis()) rows.push_back(qvector_text(v));
  return rows;
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void render_text(const Json& report, std::ostream& out) {
  for (const auto& [key, value] : report.items()) {
    if (!value.is_array()) {
      out << key << ": " << scalar_text(value) << '\n';
      continue;
    }
    out << key << ":\n";
    for (const auto& item : value) {
      if (item.is_object()) {
        std::string line;
        for (const auto& [k, v] : item.items()) line += (line.empty() ? "" : " ") + k + "=" + scalar_text(v);
        out << "  " << line << '\n';
      } else {
        out << "  " << scalar_text(item) << '\n';
      }
    }
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  std::istringstream in(text);
  while (std::getline(in, current, sep)) {
    const auto first = current.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    parts.push_back(current.substr(first, current.find_last_not_of(" \t") - first + 1));
  }
  return parts;
}

std::vector<std::string> content_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.push_back(line.substr(first));
  }
  return lines;
}

IdealCode read_bvec(const std::string& path, unsigned p, std::size_t coords) {
  std::vector<QVector> rows;
  for (const auto& line : content_lines(path)) {
    QVector v;
    for (const auto& entry : split(line, ',')) {
      if (entry.size() != p || entry.find_first_not_of("01") != std::string::npos) {
        throw ParseError("BVEC entry '" + entry + "' must be " + std::to_string(p) + " binary coefficients");
      }
      v.push_back(QuotientPoly::from_coefficients(p, entry));
    }
    if (v.size() != coords) {
      throw ParseError("BVEC line has " + std::to_string(v.size()) + " entries, expected " + std::to_string(coords));
    }
    rows.push_back(std::move(v));
  }
  return IdealCode::span(p, coords, rows);
}

std::vector<Permutation> read_permutation_list(const std::string& path, std::size_t degree) {
  std::vector<Permutation> perms;
  for (const auto& line : content_lines(path)) perms.push_back(Permutation::parse(line, degree));
  return perms;
}

// All involutions of {0..n-1}, built by pairing or fixing the smallest free point.
void enumerate_involutions(std::vector<std::size_t>& image, std::vector<bool>& used, std::size_t next,
                           const std::function<void(const Permutation&)>& visit, bool& any_pair) {
  while (next < image.size() && used[next]) ++next;
  if (next == image.size()) {
    if (any_pair) visit(Permutation(image));
    return;
  }
  used[next] = true;
  image[next] = next;
  enumerate_involutions(image, used, next + 1, visit, any_pair);
  for (std::size_t j = next + 1; j < image.size(); ++j) {
    if (used[j]) continue;
    used[j] = true;
    image[next] = j;
    image[j] = next;
    const bool saved = any_pair;
    any_pair = true;
    enumerate_involutions(image, used, next + 1, visit, any_pair);
    any_pair = saved;
    image[j] = j;
    used[j] = false;
  }
  image[next] = next;
  used[next] = false;
}

std::string type_text(const Permutation& sigma) {
  const auto order = sigma.order();
  if (order == 1 || !is_prime(order)) return "order " + std::to_string(order);
  return cycle_type(sigma, static_cast<unsigned>(order)).to_string();
}

struct Options {
  std::string code_path;
  std::string perm;
  std::string perms;
  std::string perm_p;
  std::string perm_q;
  std::string sigma_p;
  std::string a_file;
  std::string b_file;
  std::string out_path;
  std::string involutions_path;
  std::string deltas = "0,1";
  std::size_t cap = kDefaultEnumerationCap;
  unsigned p = 0;
  std::size_t n = 72;
  std::size_t f5 = 2;
  unsigned five_cap = 1;
  bool json = false;
  bool require_hypothesis = false;
};

class Runner {
 public:
  Runner(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

  int analyze() {
    const auto code = load();
    const auto sd = self_duality(code);
    report_["n"] = code.length();
    report_["k"] = code.dimension();
    report_["self_orthogonal"] = sd.self_orthogonal;
    report_["self_dual"] = sd.self_dual;
    if (code.dimension() > 0) {
      report_["d"] = min_distance(code, opt_.cap);
      Json enumerator = Json::array();
      const auto counts = weight_enumerator(code, opt_.cap);
      for (std::size_t w = 0; w < counts.size(); ++w) {
        if (counts[w]) enumerator.push_back(Json{{"weight", w}, {"count", counts[w]}});
      }
      report_["weight_enumerator"] = enumerator;
    }
    return emit(kExitOk);
  }

  int aut_check() {
    const auto code = load();
    const auto sigma = perm(opt_.perm, code.length());
    const bool aut = is_automorphism(code, sigma);
    report_["perm"] = sigma.to_string();
    report_["order"] = sigma.order();
    report_["type"] = type_text(sigma);
    report_["automorphism"] = aut;
    return emit(aut ? kExitOk : kExitPropertyFalse);
  }

  int decompose_cmd() {
    const auto code = load();
    const auto sigma = perm(opt_.perm, code.length());
    const auto d = decompose(code, sigma);
    const auto dec = ideal_decomposition(d.p());
    report_["p"] = d.p();
    report_["type"] = d.type.to_string();
    report_["s"] = dec.s;
    Json factors = Json::array();
    Json idempotents = Json::array();
    for (std::size_t j = 0; j < dec.ideal_count(); ++j) {
      factors.push_back(dec.factors[j].to_string());
      idempotents.push_back(dec.idempotents[j].to_string());
    }
    report_["factors"] = factors;
    report_["idempotents"] = idempotents;
    report_["dim_code"] = code.dimension();
    report_["dim_fixed"] = d.fixed.dimension();
    report_["dim_even"] = d.even.dimension();
    Json comps = Json::array();
    for (const auto& c : component_dims(code, sigma)) comps.push_back(Json{{"ideal", c.ideal}, {"dimension", c.dimension}});
    report_["components"] = comps;
    report_["projected_length"] = d.projected.length();
    report_["projected_basis"] = basis_json(d.projected);
    if (dec.s == d.p() - 1) report_["phi_p_image_basis"] = ideal_basis_json(phi_p_image(d));
    return emit(kExitOk);
  }

  int yorgov() {
    const auto code = load();
    const auto sigma = perm(opt_.perm, code.length());
    const auto flags = yorgov_check(code, sigma);
    report_["type"] = type_text(sigma);
    report_["code_self_dual"] = flags.code_self_dual;
    report_["projection_self_dual"] = flags.projection_self_dual;
    report_["image_hermitian_self_dual"] = flags.image_hermitian_self_dual;
    report_["a"] = flags.code_self_dual;
    report_["b"] = flags.side_b();
    report_["equivalence_holds"] = flags.code_self_dual == flags.side_b();
    return emit(flags.code_self_dual == flags.side_b() ? kExitOk : kExitPropertyFalse);
  }

  int profile() {
    auto code = load();
    const auto sigma = perm(opt_.perm, code.length());
    const auto ctx = TwoPContext::make(std::move(code), sigma);
    const auto prof = module_profile(ctx);
    const auto constraints = check_profile_constraints(prof, ctx);
    const auto proj = is_projective(ctx);
    report_["p"] = ctx.p();
    report_["s"] = prof.s;
    report_["w"] = ctx.w();
    report_["x"] = ctx.x();
    Json entries = Json::array();
    for (const auto& e : prof.entries) {
      entries.push_back(Json{{"ideal", e.ideal}, {"degree", e.degree}, {"dual_ideal", e.dual_ideal}, {"y", e.y}, {"z", e.z}});
    }
    report_["profile"] = entries;
    Json checks = Json::array();
    for (const auto& c : constraints.checks) {
      checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    report_["constraints"] = checks;
    report_["projective_criterion"] = proj.criterion;
    report_["projective_oracle"] = proj.oracle;
    const bool ok = constraints.all_passed() && proj.criterion == proj.oracle;
    return emit(ok ? kExitOk : kExitPropertyFalse);
  }

  int projective() {
    auto code = load();
    const auto sigma = perm(opt_.perm, code.length());
    const auto ctx = TwoPContext::make(std::move(code), sigma);
    const auto proj = is_projective(ctx);
    const auto chain = bouyuklieva_chain(ctx.code(), ctx.sigma_2());
    const auto cor = corollary1_check(ctx);
    report_["p"] = ctx.p();
    report_["w"] = ctx.w();
    report_["x"] = ctx.x();
    report_["chain_contained"] = chain.contained;
    report_["chain_dual_equal"] = chain.dual_equal;
    report_["dim_phi"] = chain.dim_phi;
    report_["dim_projection"] = chain.dim_projection;
    report_["projective"] = proj.criterion;
    report_["projective_oracle"] = proj.oracle;
    report_["corollary1_applicable"] = cor.applicable;
    if (cor.applicable) {
      report_["corollary1_dim_fixed"] = cor.dim_fixed;
      report_["corollary1_bound"] = cor.bound;
      report_["corollary1_holds"] = cor.bound_holds;
    }
    return emit(proj.criterion ? kExitOk : kExitPropertyFalse);
  }

  int construct_dihedral() {
    const auto a = read_mat_file(opt_.a_file);
    if (a.length() % 2 != 0) throw InputError("A must have even length");
    const auto ctx = DihedralContext::canonical(opt_.p, a.length() * opt_.p);
    const auto b = read_bvec(opt_.b_file, opt_.p, ctx.c / 2);
    const auto code = construct(DihedralPair{a, b}, ctx);
    if (!opt_.out_path.empty()) {
      std::ofstream file(opt_.out_path);
      if (!file) throw InputError("cannot write " + opt_.out_path);
      write_mat(file, code);
    }
    if (opt_.json) {
      report_["n"] = code.length();
      report_["k"] = code.dimension();
      report_["sigma_p"] = ctx.sigma_p.to_string();
      report_["sigma_2"] = ctx.sigma_2.to_string();
      report_["basis"] = basis_json(code);
      return emit(kExitOk);
    }
    if (opt_.out_path.empty()) {
      write_mat(out_, code);
    } else {
      out_ << "n: " << code.length() << "\nk: " << code.dimension() << "\nsigma_p: " << ctx.sigma_p.to_string()
           << "\nsigma_2: " << ctx.sigma_2.to_string() << '\n';
    }
    return kExitOk;
  }

  int extract_dihedral() {
    const auto code = load();
    const auto ctx = DihedralContext::canonical(opt_.p, code.length());
    const auto result = extract_pair(code, ctx, ExtractOptions{opt_.require_hypothesis});
    report_["p"] = ctx.p;
    report_["n"] = ctx.n;
    report_["sigma_p"] = ctx.sigma_p.to_string();
    report_["sigma_2"] = ctx.sigma_2.to_string();
    report_["hypothesis_met"] = result.hypothesis_met;
    report_["a_basis"] = basis_json(result.pair.a);
    report_["b_basis"] = ideal_basis_json(result.pair.b);
    return emit(kExitOk);
  }

  int fixed_sum() {
    const auto code = load();
    std::vector<Permutation> elements;
    for (const auto& text : split(opt_.perms, ';')) elements.push_back(Permutation::parse(text, code.length()));
    const auto sum = sum_fixed_codes(code, elements);
    report_["elements"] = elements.size();
    report_["dim_sum"] = sum.dimension();
    report_["basis"] = basis_json(sum);
    if (!opt_.sigma_p.empty()) {
      const auto q = quotient_profile(code, elements, perm(opt_.sigma_p, code.length()));
      report_["dim_d"] = q.dim_d;
      report_["dim_d_dual"] = q.dim_d_dual;
      report_["dim_quotient"] = q.dim_quotient;
      report_["sigma_p_fixed_dim"] = q.sigma_p_fixed_dim;
    }
    return emit(kExitOk);
  }

  int remark7() {
    const auto code = load();
    const auto r = remark7_check(code, perm(opt_.perm_p, code.length()), perm(opt_.perm_q, code.length()));
    report_["eta_p_of_q"] = r.eta_pq.to_string();
    report_["eta_q_of_p"] = r.eta_qp.to_string();
    report_["flag_a"] = r.flag_a;
    report_["flag_b"] = r.flag_b;
    report_["flag_c"] = r.flag_c;
    report_["double_projection_p"] = basis_json(r.double_p);
    report_["double_projection_q"] = basis_json(r.double_q);
    report_["double_projection_length"] = r.double_p.length();
    if (r.flag_d) {
      report_["product_type"] = r.product_type->to_string();
      report_["type_eta_p_of_q"] = r.type_pq->to_string();
      report_["type_eta_q_of_p"] = r.type_qp->to_string();
      report_["flag_d"] = *r.flag_d;
    } else {
      report_["flag_d"] = "not applicable";
    }
    const bool ok = r.flag_a && r.flag_b && r.flag_c && r.flag_d.value_or(true);
    return emit(ok ? kExitOk : kExitPropertyFalse);
  }

  int classify_orders() {
    ClassifyParams params;
    params.n = opt_.n;
    params.f5 = opt_.f5;
    params.five_cap = opt_.five_cap;
    params.deltas.clear();
    for (const auto& d : split(opt_.deltas, ',')) {
      try {
        params.deltas.push_back(static_cast<unsigned>(std::stoul(d)));
      } catch (const std::exception&) {
        throw ParseError("bad delta '" + d + "'");
      }
    }
    if (params.n != 72) params.admissible.clear();
    const auto orders = burnside_order_list(params);
    if (!opt_.json) {
      for (const auto m : orders) out_ << m << '\n';
      return kExitOk;
    }
    report_["n"] = params.n;
    report_["f5"] = params.f5;
    report_["five_cap"] = params.five_cap;
    report_["deltas"] = params.deltas;
    report_["count"] = orders.size();
    report_["orders"] = orders;
    report_["note"] = "candidate orders only; group-isomorphism filtering is not performed";
    return emit(kExitOk);
  }

  int remark3_search() {
    const auto code = load();
    std::vector<Permutation> candidates;
    if (!opt_.involutions_path.empty()) {
      candidates = read_permutation_list(opt_.involutions_path, code.length());
    } else {
      if (code.length() > 12) throw InputError("remark3-search enumerates involutions only for n <= 12; pass --involutions");
      std::vector<std::size_t> image(code.length());
      std::vector<bool> used(code.length(), false);
      for (std::size_t i = 0; i < image.size(); ++i) image[i] = i;
      bool any_pair = false;
      enumerate_involutions(image, used, 0, [&](const Permutation& s) { candidates.push_back(s); }, any_pair);
    }
    std::sort(candidates.begin(), candidates.end());
    Json found = Json::array();
    std::size_t self_dual_count = 0;
    std::size_t other_count = 0;
    for (const auto& s : candidates) {
      if (s.order() != 2) throw InputError(s.to_string() + " is not an involution");
      if (!is_automorphism(code, s)) continue;
      const bool sd = is_self_dual(project_orbits(fixed_code(code, s), orbit_partition(s)));
      (sd ? self_dual_count : other_count) += 1;
      found.push_back(Json{{"perm", s.to_string()}, {"type", type_text(s)}, {"projection_self_dual", sd}});
    }
    report_["n"] = code.length();
    report_["candidates"] = candidates.size();
    report_["automorphisms"] = found.size();
    report_["projection_self_dual"] = self_dual_count;
    report_["projection_not_self_dual"] = other_count;
    report_["involutions"] = found;
    return emit(kExitOk);
  }

 private:
  BinaryCode load() {
    if (opt_.code_path.empty()) throw InputError("--code is required");
    return read_mat_file(opt_.code_path);
  }

  Permutation perm(const std::string& text, std::size_t degree) {
    return Permutation::parse(text, degree);
  }

  int emit(int code) {
    if (opt_.json) {
      out_ << report_.dump(2) << '\n';
    } else {
      render_text(report_, out_);
    }
    return code;
  }

  const Options& opt_;
  std::ostream& out_;
  Json report_ = Json::object();
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Automorphism-aware structure of binary linear codes"};
  app.name("autcode");
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "Emit a flat JSON object instead of text");

  const auto code_opt = [&](CLI::App* sub) { sub->add_option("--code", opt.code_path, "Generator matrix (MAT)")->required(); };
  const auto perm_opt = [&](CLI::App* sub) { sub->add_option("--perm", opt.perm, "Permutation, e.g. \"(1,2,3)(4,5,6)\"")->required(); };

  auto* analyze = app.add_subcommand("analyze", "Dimension, self-duality, minimum distance, weight enumerator");
  code_opt(analyze);
  analyze->add_option("--cap", opt.cap, "Largest dimension enumerated exhaustively")->capture_default_str();

  auto* aut = app.add_subcommand("aut-check", "Test whether a permutation is an automorphism");
  code_opt(aut);
  perm_opt(aut);

  auto* dec = app.add_subcommand("decompose", "C = C(sigma) + E(sigma) for sigma of odd prime order");
  code_opt(dec);
  perm_opt(dec);

  auto* yorgov = app.add_subcommand("yorgov", "Both sides of the self-duality equivalence for an odd prime order automorphism");
  code_opt(yorgov);
  perm_opt(yorgov);

  auto* profile = app.add_subcommand("profile", "Module profile and constraints for an automorphism of order 2p");
  code_opt(profile);
  perm_opt(profile);

  auto* projective = app.add_subcommand("projective", "Projectivity criterion, fold chain and dimension bound for order 2p");
  code_opt(projective);
  perm_opt(projective);

  auto* construct_cmd = app.add_subcommand("construct-dihedral", "Build a code with a dihedral automorphism group from (A, B)");
  construct_cmd->add_option("--p", opt.p, "Odd prime with s(p) = p-1")->required();
  construct_cmd->add_option("--a-file", opt.a_file, "Self-dual code A of length c (MAT)")->required();
  construct_cmd->add_option("--b-file", opt.b_file, "Basis of B, one vector per line of comma-separated coefficient strings")->required();
  construct_cmd->add_option("--out", opt.out_path, "Write the constructed code here (MAT)");

  auto* extract_cmd = app.add_subcommand("extract-dihedral", "Recover (A, B) from a code with the canonical dihedral action");
  code_opt(extract_cmd);
  extract_cmd->add_option("--p", opt.p, "Odd prime with s(p) = p-1")->required();
  extract_cmd->add_flag("--require-hypothesis", opt.require_hypothesis,
                        "Fail unless the projected sigma_2-fixed code is self-dual");

  auto* fixed = app.add_subcommand("fixed-sum", "Sum of fixed codes, optionally with the quotient profile");
  code_opt(fixed);
  fixed->add_option("--perms", opt.perms, "Permutations separated by ';'")->required();
  fixed->add_option("--sigma-p", opt.sigma_p, "Report the fixed dimension of D^perp/D under this permutation");

  auto* remark7 = app.add_subcommand("remark7", "Compatibility flags for commuting automorphisms of prime order");
  code_opt(remark7);
  remark7->add_option("--perm-p", opt.perm_p, "First permutation")->required();
  remark7->add_option("--perm-q", opt.perm_q, "Second permutation")->required();

  auto* classify = app.add_subcommand("classify-orders", "Candidate automorphism group orders from the Burnside count");
  classify->add_option("--n", opt.n, "Code length")->capture_default_str();
  classify->add_option("--f5", opt.f5, "Fixed points of an element of order 5")->capture_default_str();
  classify->add_option("--delta", opt.deltas, "Admissible normalizer exponents, comma separated")->capture_default_str();
  classify->add_option("--five-cap", opt.five_cap, "Largest exponent of 5")->capture_default_str();

  auto* remark3 = app.add_subcommand("remark3-search", "Involutions in Aut(C) and whether their projected fixed codes are self-dual");
  code_opt(remark3);
  remark3->add_option("--involutions", opt.involutions_path, "File of involutions, one per line (required for n > 12)");

  for (auto* sub : app.get_subcommands({})) sub->add_flag("--json", opt.json, "Emit a flat JSON object instead of text");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInput;
  }

  Runner runner(opt, out);
  try {
    if (*analyze) return runner.analyze();
    if (*aut) return runner.aut_check();
    if (*dec) return runner.decompose_cmd();
    if (*yorgov) return runner.yorgov();
    if (*profile) return runner.profile();
    if (*projective) return runner.projective();
    if (*construct_cmd) return runner.construct_dihedral();
    if (*extract_cmd) return runner.extract_dihedral();
    if (*fixed) return runner.fixed_sum();
    if (*remark7) return runner.remark7();
    if (*classify) return runner.classify_orders();
    if (*remark3) return runner.remark3_search();
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const HypothesisError& e) {
    err << "hypothesis not met: " << e.what() << '\n';
    return kExitPropertyFalse;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace autcode::cli
