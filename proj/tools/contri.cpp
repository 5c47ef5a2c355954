// contri: command-line front end for the contact triangulation toolkit.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "contri/acceptance.hpp"
#include "contri/error.hpp"
#include "contri/facet_io.hpp"
#include "contri/generators.hpp"
#include "contri/homology.hpp"
#include "contri/ledger.hpp"
#include "contri/presentation.hpp"
#include "contri/report.hpp"
#include "contri/solid_torus.hpp"
#include "contri/surgery.hpp"
#include "contri/symmetry.hpp"

using namespace contri;
using nlohmann::json;

namespace {

struct Globals {
  bool json = false;
  bool quiet = false;
};

/// A path to a facet file, or a generator name.
NamedComplex load(const std::string& source, int n = 0) {
  if (std::filesystem::is_regular_file(source)) {
    return {std::filesystem::path(source).filename().string(), read_facets_file(source), std::nullopt, "file", nullptr};
  }
  return generate(source, n);
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw Error(ErrorCode::BadParameter, "cannot write " + out);
  f << text;
}

std::string fvector_json(const FVector& f) { return json(f.counts).dump(); }

int print_report(const VerificationReport& r, const Globals& g) {
  if (g.json)
    std::cout << to_json(r).dump(2) << "\n";
  else
    std::cout << to_table(r);
  return r.exit_status();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"contri: combinatorial contact triangulations"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "JSON output");
  app.add_flag("--quiet", g.quiet, "suppress the version banner");

  // generate
  auto* gen = app.add_subcommand("generate", "write a named complex as a facet list");
  std::string gen_name, gen_out;
  int gen_n = 0;
  bool gen_off = false;
  gen->add_option("name", gen_name, "complex name")->required();
  gen->add_option("--n", gen_n, "family parameter");
  gen->add_option("--out", gen_out, "output file");
  gen->add_flag("--off", gen_off, "write OFF instead of facets");

  // verify
  auto* ver = app.add_subcommand("verify", "run the verification suite for a complex");
  std::string ver_name;
  int ver_n = 0;
  bool ver_all = false;
  ver->add_option("name", ver_name, "target");
  ver->add_option("--n", ver_n, "family parameter");
  ver->add_flag("--all", ver_all, "run every acceptance criterion");

  auto* fv = app.add_subcommand("fvector", "print the f-vector");
  std::string fv_src;
  fv->add_option("source", fv_src, "facet file or complex name")->required();

  auto* hom = app.add_subcommand("homology", "integral homology");
  std::string hom_src, hom_base;
  bool hom_pi1 = false;
  hom->add_option("source", hom_src, "facet file or complex name")->required();
  hom->add_flag("--pi1", hom_pi1, "also simplify an edge-path presentation of pi_1");
  hom->add_option("--basepoint", hom_base, "basepoint for --pi1");

  auto* aut = app.add_subcommand("aut", "automorphism group");
  std::string aut_src;
  std::size_t aut_max = 16;
  aut->add_option("source", aut_src, "facet file or complex name")->required();
  aut->add_option("--max-vertices", aut_max, "search guard");

  auto* cs = app.add_subcommand("consum", "connected sum of two closed manifolds");
  std::string cs_a, cs_b, cs_s1, cs_s2, cs_out;
  cs->add_option("first", cs_a, "facet file or complex name")->required();
  cs->add_option("second", cs_b, "facet file or complex name")->required();
  cs->add_option("--sigma1", cs_s1, "facet of the first summand, e.g. \"a b c d\"")->required();
  cs->add_option("--sigma2", cs_s2, "facet of the second summand")->required();
  cs->add_option("--out", cs_out, "output file");

  auto* sc = app.add_subcommand("schain", "iterated sum of S12 copies with their twist ledger");
  int sc_n = 1;
  std::string sc_sign = "+", sc_out;
  sc->add_option("--n", sc_n, "number of twists")->required();
  sc->add_option("--sign", sc_sign, "+, - or 0");
  sc->add_option("--out", sc_out, "write the facets here");

  auto* qu = app.add_subcommand("quotient", "identify vertices of a complex");
  std::string qu_src, qu_map, qu_out;
  qu->add_option("source", qu_src, "facet file or complex name")->required();
  qu->add_option("--map", qu_map, "file of 'vertex representative' lines")->required();
  qu->add_option("--out", qu_out, "output file");

  auto* t3 = app.add_subcommand("t3", "3-torus with n twists: statistics and disk containment");
  int t3_n = 1;
  double t3_r0 = 0.45;
  t3->add_option("--n", t3_n, "number of twists")->required();
  t3->add_option("--r0", t3_r0, "outer radius in (1/4, 1/2)");

  auto* de = app.add_subcommand("delta", "estimate the disk constant of T1");
  std::size_t de_samples = 1000;
  double de_tol = 1e-9;
  de->add_option("--samples", de_samples, "grid size");
  de->add_option("--tol", de_tol, "bisection tolerance");

  auto* le = app.add_subcommand("ledger", "contact class bookkeeping");
  le->require_subcommand(1);
  auto* le_new = le->add_subcommand("new", "fresh ledger");
  std::string le_manifold = "s3";
  std::int64_t le_f0 = 5;
  std::size_t le_rank = 0;
  le_new->add_option("--manifold", le_manifold, "s3, t3 or any id");
  le_new->add_option("--f0", le_f0, "certified vertex count");
  le_new->add_option("--rank", le_rank, "H1 rank for manifolds other than s3 and t3");
  auto* le_tw = le->add_subcommand("twist", "apply a Lutz twist to a ledger read from a file or stdin");
  std::string le_in = "-", le_class, le_name = "K";
  std::optional<std::int64_t> le_sl;
  std::int64_t le_df0 = 0;
  le_tw->add_option("ledger", le_in, "ledger JSON file, - for stdin");
  le_tw->add_option("--class", le_class, "homology class a,b,c (empty for rank 0)");
  le_tw->add_option("--sl", le_sl, "self-linking number of a null-homologous knot");
  le_tw->add_option("--df0", le_df0, "vertex count change");
  le_tw->add_option("--name", le_name, "knot name");
  auto* le_bd = le->add_subcommand("bound", "vertex-count formulas");
  std::int64_t le_n = 0;
  std::optional<std::int64_t> le_bf0;
  le_bd->add_option("--n", le_n, "twist count")->required();
  le_bd->add_option("--f0", le_bf0, "vertex count of the starting triangulation");

  auto* ex = app.add_subcommand("export", "OFF mesh of the 2-skeleton");
  std::string ex_src, ex_out;
  int ex_n = 0;
  ex->add_option("source", ex_src, "complex name")->required();
  ex->add_option("--n", ex_n, "family parameter");
  ex->add_option("--out", ex_out, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (!g.quiet) std::cerr << "contri 1.0\n";

  try {
    auto off_of = [](const NamedComplex& c) {
      if (!c.realization) throw Error(ErrorCode::MissingCoordinates, c.name + " has no realization");
      if (c.realization->model() == Model::FlatTorus3) {
        if (!c.pre_quotient) throw Error(ErrorCode::MissingCoordinates, "flat torus without its cube");
        return off_export(c.pre_quotient->complex, *c.pre_quotient->realization,
                          c.name + ": pre-quotient cube; opposite faces are identified");
      }
      return off_export(c.complex, *c.realization, c.name);
    };

    if (*gen) {
      const auto c = generate(gen_name, gen_n);
      emit(gen_off ? off_of(c) : write_facets(c.complex), gen_out);
      return 0;
    }
    if (*ver) {
      if (ver_all) {
        int status = 0;
        json all = json::array();
        for (const auto& c : run_acceptance()) {
          if (g.json)
            all.push_back(to_json(c.report));
          else
            std::cout << to_table(c.report) << "\n";
          status = std::max(status, c.report.exit_status());
        }
        if (g.json) std::cout << all.dump(2) << "\n";
        return status;
      }
      if (ver_name.empty()) throw CLI::RequiredError("verify needs a target or --all");
      return print_report(verify_target(ver_name, ver_n), g);
    }
    if (*fv) {
      const auto f = f_vector(load(fv_src).complex);
      std::cout << (g.json ? fvector_json(f) : to_string(f)) << "\n";
      return 0;
    }
    if (*hom) {
      const auto c = load(hom_src);
      const auto h = homology(c.complex);
      json j = {{"homology", to_json(h)}, {"text", to_string(h)}};
      std::string text = to_string(h) + "\n";
      if (hom_pi1) {
        const std::string base = hom_base.empty() ? c.complex.labels().front() : hom_base;
        const auto t = tietze_simplify(fundamental_group(c.complex, base), 100000);
        const std::string status = t.status == TietzeStatus::Trivialized ? "trivial" : "unknown";
        j["pi1"] = {{"status", status}, {"presentation", to_string(t.presentation)}, {"moves", t.moves}};
        text += "pi1: " + status + " " + to_string(t.presentation) + "\n";
      }
      std::cout << (g.json ? j.dump(2) + "\n" : text);
      return 0;
    }
    if (*aut) {
      const auto c = load(aut_src);
      const auto grp = automorphism_group(c.complex, aut_max);
      const auto eo = orbits(grp, c.complex.faces(1)).size();
      const auto to = c.complex.dimension() >= 2 ? orbits(grp, c.complex.faces(2)).size() : 0;
      std::vector<std::string> gens;
      for (const auto& p : grp.generators) gens.push_back(cycle_notation(grp.labels, p));
      if (g.json) {
        std::cout << json{{"order", grp.order.str()}, {"generators", gens}, {"edge_orbits", eo}, {"triangle_orbits", to}}
                         .dump(2)
                  << "\n";
      } else {
        std::cout << "order: " << grp.order << "\n";
        for (const auto& s : gens) std::cout << "generator: " << s << "\n";
        std::cout << "edge orbits: " << eo << "\ntriangle orbits: " << to << "\n";
      }
      return 0;
    }
    if (*cs) {
      const auto a = load(cs_a), b = load(cs_b);
      const auto sum = connected_sum(a.complex, b.complex, parse_label_set(cs_s1), parse_label_set(cs_s2));
      if (!cs_out.empty() || !g.json) emit(write_facets(sum), cs_out);
      if (g.json) std::cout << json{{"f_vector", f_vector(sum).counts}}.dump() << "\n";
      return 0;
    }
    if (*sc) {
      const auto chain = s_chain(sc_n, parse_twist_sign(sc_sign));
      if (!sc_out.empty()) emit(write_facets(chain.complex.complex), sc_out);
      json summands = json::array();
      for (const auto& s : chain.summands)
        summands.push_back({{"copy", s.copy},
                            {"removed_chain_facet", s.removed_chain_facet},
                            {"removed_copy_facet", s.removed_copy_facet},
                            {"knot", s.knot},
                            {"sl", s.self_linking},
                            {"carrier", s.carrier},
                            {"df0", s.df0}});
      const auto f = f_vector(chain.complex.complex);
      if (g.json) {
        std::cout << json{{"name", chain.complex.name}, {"f_vector", f.counts}, {"ledger", to_json(chain.ledger)},
                          {"summands", summands}}
                         .dump(2)
                  << "\n";
      } else {
        std::cout << chain.complex.name << "\nf-vector: " << to_string(f) << "\nd3: "
                  << (chain.ledger.d3 ? std::to_string(*chain.ledger.d3) : "UNDEFINED")
                  << "\nf0 bound: " << *chain.ledger.f0_bound << "\n";
        auto join = [](const LabelSet& s) {
          std::string out;
          for (const auto& l : s) out += (out.empty() ? "" : " ") + l;
          return s.empty() ? std::string("-") : out;
        };
        for (const auto& s : chain.summands)
          std::cout << "copy " << s.copy << ": " << s.knot << " (sl " << s.self_linking << "), removed {"
                    << join(s.removed_chain_facet) << "} / {" << join(s.removed_copy_facet) << "}\n";
      }
      return 0;
    }
    if (*qu) {
      const auto c = load(qu_src);
      IdentificationScheme scheme;
      std::ifstream in(qu_map);
      if (!in) throw Error(ErrorCode::ParseError, "cannot read " + qu_map);
      std::string line;
      while (std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        std::istringstream ls(line);
        std::string v, rep;
        if (!(ls >> v)) continue;
        if (!(ls >> rep)) throw Error(ErrorCode::ParseError, "map line needs 'vertex representative'");
        scheme.representative[v] = rep;
      }
      const auto q = quotient(c.complex, scheme);
      if (!qu_out.empty() || !g.json) emit(write_facets(q), qu_out);
      if (g.json) std::cout << json{{"f_vector", f_vector(q).counts}}.dump() << "\n";
      return 0;
    }
    if (*t3) {
      const auto led = t3_ledger(t3_n, t3_r0);
      NamedComplex t = t3_n == 1 ? t3_40() : t3_family(t3_n);
      const auto& cube = *t.pre_quotient;
      VerificationReport rep;
      rep.target = t3_n == 1 ? "t3_40" : "t3_family(" + std::to_string(t3_n) + ")";
      const auto f = f_vector(t.complex);
      rep.add("f-vector", true, to_string(f), "-", "", "triangulated 3-torus");
      rep.add("d2", led.ledger.d2 == std::vector<std::int64_t>{0, 0, -t3_n}, json(led.ledger.d2).dump(),
              json(std::vector<std::int64_t>{0, 0, -t3_n}).dump(), "", "d2 = -n PD([K])");
      for (const auto& d : led.disks) {
        const auto dc = disk_containment_report(cube.complex, *cube.realization, d);
        rep.add(Check{"disk k=" + std::to_string(d.twist_index) + " r in (" + format_number(d.r_lo) + ", " +
                          format_number(d.r_hi) + ")",
                      dc.status == ContainmentStatus::Pass ? Status::Pass : Status::Unknown,
                      "max diameter " + format_number(dc.max_diameter), "< " + format_number(dc.threshold),
                      "margin " + format_number(dc.margin), "no tetrahedron contains an overtwisted disk"});
      }
      return print_report(rep, g);
    }
    if (*de) {
      const auto m = pl_solid_torus(solid_torus(1));
      const auto d = delta_estimate(m, de_samples, de_tol);
      if (g.json) {
        std::cout << json{{"delta", d.delta}, {"argmax", d.argmax}, {"samples", d.samples},
                          {"degenerate", d.degenerate}, {"model", m.note}}
                         .dump(2)
                  << "\n";
      } else {
        std::cout << "delta: " << format_number(d.delta) << " at t = " << format_number(d.argmax) << "\nsamples: "
                  << d.samples << " (" << d.degenerate << " on cell walls)\nmodel: " << m.note << "\n";
      }
      return d.delta < 1 ? 0 : 1;
    }
    if (*le) {
      if (*le_new) {
        const std::size_t rank = le_manifold == "s3" ? 0 : le_manifold == "t3" ? 3 : le_rank;
        std::cout << to_json(ContactClass::make(le_manifold, rank, le_f0)).dump(2) << "\n";
        return 0;
      }
      if (*le_tw) {
        json in;
        try {
          if (le_in == "-") {
            std::cin >> in;
          } else {
            std::ifstream f(le_in);
            if (!f) throw Error(ErrorCode::ParseError, "cannot read " + le_in);
            f >> in;
          }
        } catch (const json::exception& e) {
          throw Error(ErrorCode::ParseError, e.what());
        }
        auto c = contact_class_from_json(in);
        std::vector<std::int64_t> cls;
        if (!le_class.empty())
          for (const auto& s : parse_label_set(le_class)) cls.push_back(std::stoll(s));
        if (cls.empty()) cls.assign(c.d2.size(), 0);
        KnotClass k{cls, le_sl, le_name};
        std::cout << to_json(apply_lutz(c, k, le_df0)).dump(2) << "\n";
        return 0;
      }
      if (*le_bd) {
        json j = {{"n", le_n}, {"s3_vertex_bound", s3_vertex_bound(le_n)}};
        if (le_bf0) j["general_vertex_bound"] = general_vertex_bound(*le_bf0, le_n);
        if (g.json) {
          std::cout << j.dump(2) << "\n";
        } else {
          std::cout << "s3_vertex_bound(" << le_n << ") = " << s3_vertex_bound(le_n) << "\n";
          if (le_bf0)
            std::cout << "general_vertex_bound(" << *le_bf0 << ", " << le_n << ") = " << j["general_vertex_bound"] << "\n";
        }
        return 0;
      }
    }
    if (*ex) {
      emit(off_of(generate(ex_src, ex_n)), ex_out);
      return 0;
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
