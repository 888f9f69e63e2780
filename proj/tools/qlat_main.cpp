// qlat: command-line surface over the lattice/quadratic-form library.
// Machine-readable JSON goes to stdout; human-readable notes to stderr
// under --verbose.  Exit codes: 0 success, 1 verification failure
// (mathematically meaningful), 2 invalid input.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "latt/arith.hpp"
#include "latt/core.hpp"
#include "latt/digest.hpp"
#include "latt/enumerate.hpp"
#include "latt/hassett.hpp"
#include "latt/json_io.hpp"

using nlohmann::ordered_json;
using namespace latt;

namespace {

bool g_verbose = false;

void note(const std::string& s) {
  if (g_verbose) std::cerr << s << "\n";
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

[[noreturn]] void fail(int code, ErrorCode ec, const std::string& msg,
                       ordered_json detail = ordered_json::object()) {
  ordered_json j;
  j["error"] = msg;
  j["code"] = static_cast<int>(ec);
  for (auto& [k, v] : detail.items()) j[k] = v;
  emit(j);
  std::exit(code);
}

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidInput:
    case ErrorCode::NotSymmetric:
      return 2;
    default:
      return 1;
  }
}

Lattice load(const std::string& path) {
  GramMatrix g = read_gram_file(path);
  return validate(g.entries);
}

Vec pick_distinguished(const Lattice& l, const std::string& spec) {
  if (spec == "auto") {
    auto dist = find_distinguished(l);
    if (dist.empty())
      throw Error(ErrorCode::NotDistinguished,
                  "lattice has no distinguished element");
    return dist.front().vector;
  }
  int idx;
  try {
    idx = std::stoi(spec);
  } catch (...) {
    throw Error(ErrorCode::InvalidInput,
                "--distinguished expects 'auto' or a basis index");
  }
  if (idx < 0 || idx >= l.gram.rank)
    throw Error(ErrorCode::InvalidInput, "basis index out of range");
  Vec o(l.gram.rank, 0);
  o[idx] = 1;
  return o;
}

int cmd_lattice_info(const std::string& file) {
  Lattice l = load(file);
  ordered_json j;
  j["rank"] = l.gram.rank;
  j["determinant"] = determinant(l.gram);
  j["even"] = is_even(l.gram);
  j["definite"] = l.definite;
  DiscriminantGroup snf = smith_normal_form(l.gram.entries);
  j["snf"] = snf.invariant_factors;
  j["l"] = snf.l();
  if (l.definite) {
    j["min_norm"] = min_norm(l);
    j["roots"] = vectors_with_norm(l, 2);
    ordered_json dist = ordered_json::array();
    for (const auto& d : find_distinguished(l)) dist.push_back(d.vector);
    j["distinguished"] = std::move(dist);
  }
  emit(j);
  return 0;
}

int cmd_form_image(const std::string& file, i64 bound, bool primitive,
                   bool complement) {
  Lattice l = load(file);
  ImageReport r = image_up_to(l, bound, primitive);
  ordered_json j = image_report_to_json(r);
  j["primitive"] = primitive;
  if (complement) {
    std::vector<i64> missed;
    size_t k = 0;
    for (i64 v = 1; v <= bound; ++v) {
      if (k < r.values.size() && r.values[k] == v)
        ++k;
      else
        missed.push_back(v);
    }
    j["missed"] = missed;
  }
  note("image has " + std::to_string(r.values.size()) + " value(s) up to " +
       std::to_string(bound));
  emit(j);
  return 0;
}

int cmd_hassett_solve(i64 d, const std::string& mode) {
  F0Solution s =
      mode == "proof" ? solve_hassett_proof(d) : solve_hassett_enum(d);
  Vec v{s.x, s.y, s.z, s.u};
  ordered_json j;
  j["d"] = d;
  j["mode"] = mode;
  j["vector"] = v;
  j["value"] = s.value;
  j["gcd"] = content(v);
  emit(j);
  return 0;
}

int cmd_dm(const std::string& file, const std::string& dist) {
  Lattice l = load(file);
  Vec o = pick_distinguished(l, dist);
  Lattice q = dm_quotient(l, o);
  ordered_json j = gram_to_json(q.gram);
  j["distinguished"] = o;
  emit(j);
  return 0;
}

int cmd_lift(const std::string& file) {
  Lattice f = validate_definite(read_gram_file(file).entries);
  LiftResult r = lift_form(f);
  ordered_json j = gram_to_json(r.lattice.gram);
  j["distinguished"] = r.distinguished.vector;
  j["parity"] = r.parity_flag;
  emit(j);
  return 0;
}

int cmd_yangyu(const std::string& file) {
  Lattice l = load(file);
  YangYuReport r = yang_yu_check(l);
  ordered_json j;
  j["rank"] = r.rank;
  j["l"] = r.l;
  j["roots"] = r.roots;
  if (r.has_distinguished)
    j["distinguished"] = *r.has_distinguished;
  else
    j["distinguished"] = nullptr;
  j["passes"] = r.passes;
  j["codimension"] = r.codimension;
  emit(j);
  return r.passes ? 0 : 1;
}

int cmd_zcheck(const std::string& file, i64 bound, const std::string& out,
               const std::string& mode_str, const std::string& dist) {
  Lattice l = load(file);
  Vec o = pick_distinguished(l, dist);
  ZMode mode = mode_str == "proof" ? ZMode::Proof : ZMode::Enumeration;
  ZCertificate cert = verify_z_membership(l, o, bound, mode);
  ordered_json j = certificate_to_json(cert);
  int codim = l.gram.rank - 1;
  j["summary"] =
      "codim " + std::to_string(codim) + ", dim " + std::to_string(20 - codim);
  if (!out.empty()) {
    std::ofstream f(out, std::ios::binary);
    if (!f) throw Error(ErrorCode::InvalidInput, "cannot write " + out);
    f << canonical_dump(certificate_to_json(cert)) << "\n";
  }
  note("verified " + std::to_string(cert.witnesses.size()) +
       " discriminant(s) up to " + std::to_string(bound));
  emit(j);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"integral lattice and quadratic form toolkit"};
  app.require_subcommand(1);
  app.add_flag("--verbose", g_verbose, "human-readable notes on stderr");

  std::string file, out, mode = "proof", dist = "auto";
  i64 bound = 100, d = 0;
  bool primitive = false, complement = false;

  auto* info = app.add_subcommand("lattice-info", "rank, determinant, roots");
  info->add_option("file", file)->required();

  auto* image = app.add_subcommand("form-image", "represented values");
  image->add_option("file", file)->required();
  image->add_option("--bound", bound)->required();
  image->add_flag("--primitive", primitive);
  image->add_flag("--complement", complement);

  auto* solve = app.add_subcommand("hassett-solve",
                                   "primitive witness for a discriminant");
  solve->add_option("d", d)->required();
  solve->add_option("--mode", mode)->check(CLI::IsMember({"proof", "enum"}));

  auto* dm = app.add_subcommand("dm", "distinguished-element quotient");
  dm->add_option("file", file)->required();
  dm->add_option("--distinguished", dist);

  auto* lift = app.add_subcommand("lift", "rank n+1 lift of a form");
  lift->add_option("file", file)->required();

  auto* yy = app.add_subcommand("yangyu", "admissibility report");
  yy->add_option("file", file)->required();

  std::string zmode = "enumeration";
  auto* z = app.add_subcommand("zcheck", "bounded membership certificate");
  z->add_option("file", file)->required();
  z->add_option("--bound", bound)->required();
  z->add_option("--out", out);
  z->add_option("--mode", zmode)
      ->check(CLI::IsMember({"enumeration", "proof"}));
  z->add_option("--distinguished", dist);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*info) return cmd_lattice_info(file);
    if (*image) return cmd_form_image(file, bound, primitive, complement);
    if (*solve) return cmd_hassett_solve(d, mode);
    if (*dm) return cmd_dm(file, dist);
    if (*lift) return cmd_lift(file);
    if (*yy) return cmd_yangyu(file);
    if (*z) return cmd_zcheck(file, bound, out, zmode, dist);
  } catch (const MissingDiscriminantsError& e) {
    fail(1, e.code(), e.what(), {{"missing", e.missing()}});
  } catch (const NotSupportedInHError& e) {
    fail(1, e.code(), e.what(),
         {{"witness", e.witness()}, {"value", e.value()}});
  } catch (const Error& e) {
    fail(exit_code_for(e.code()), e.code(), e.what());
  } catch (const std::exception& e) {
    fail(2, ErrorCode::InvalidInput, e.what());
  }
  return 2;
}
