#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "apd/almost.hpp"
#include "apd/blocks.hpp"
#include "apd/catalog.hpp"
#include "apd/crt.hpp"
#include "apd/intseq.hpp"
#include "apd/io.hpp"
#include "apd/prime.hpp"
#include "apd/search.hpp"
#include "apd/transform.hpp"
#include "apd/verify.hpp"

namespace py = pybind11;

namespace {

apd::Perm as_perm(const std::vector<apd::i64>& images) { return apd::make_perm(images); }

std::vector<apd::Pattern> as_patterns(const std::vector<std::pair<apd::i64, apd::i64>>& pats) {
  std::vector<apd::Pattern> out;
  out.reserve(pats.size());
  for (const auto& [s, t] : pats) out.push_back({s, t});
  return out;
}

py::dict cert_to_dict(const apd::Certificate& cert) {
  py::dict d;
  d["n"] = cert.perm.n();
  d["perm"] = cert.perm.images();
  py::list pats;
  for (const apd::Pattern& p : cert.claims) pats.append(py::make_tuple(p.s, p.t));
  d["patterns"] = pats;
  d["verdict"] = cert.pass ? "pass" : "fail";
  if (cert.counterexample.has_value()) {
    const apd::Counterexample& cx = *cert.counterexample;
    py::dict c;
    c["a"] = cx.a;
    c["b"] = cx.b;
    c["c"] = cx.c;
    c["eta1"] = cx.eta1;
    c["eta2"] = cx.eta2;
    d["counterexample"] = c;
  } else {
    d["counterexample"] = py::none();
  }
  return d;
}

py::object big_to_py(const apd::bigint& v) { return py::int_(py::str(v.str())); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "AP-destroying permutations of Z_n: constructions, composition, search, certificates";

  m.def("make_perm", [](const std::vector<apd::i64>& images) { return as_perm(images).images(); },
        py::arg("images"), "validate an image list as a permutation of Z_n");
  m.def("perm_inverse",
        [](const std::vector<apd::i64>& images) { return apd::perm_inverse(as_perm(images)).images(); },
        py::arg("images"));
  m.def("mod_inv", &apd::mod_inv, py::arg("a"), py::arg("n"));
  m.def("centered", &apd::centered, py::arg("v"), py::arg("n"));

  m.def("check_pattern",
        [](const std::vector<apd::i64>& images, apd::i64 s, apd::i64 t, int threads) {
          return cert_to_dict(apd::check_pattern(as_perm(images), {s, t}, threads));
        },
        py::arg("images"), py::arg("s"), py::arg("t"), py::arg("threads") = 0);
  m.def("check_patterns",
        [](const std::vector<apd::i64>& images,
           const std::vector<std::pair<apd::i64, apd::i64>>& pats, int threads) {
          return cert_to_dict(apd::check_patterns(as_perm(images), as_patterns(pats), threads));
        },
        py::arg("images"), py::arg("patterns"), py::arg("threads") = 0);
  m.def("check_almost",
        [](const std::vector<apd::i64>& images, apd::i64 s, apd::i64 t, int threads) {
          return cert_to_dict(apd::check_almost(as_perm(images), s, t, threads));
        },
        py::arg("images"), py::arg("s"), py::arg("t"), py::arg("threads") = 0);
  m.def("count_survivors",
        [](const std::vector<apd::i64>& images, apd::i64 s, apd::i64 t, int threads) {
          return apd::count_survivors(as_perm(images), {s, t}, threads);
        },
        py::arg("images"), py::arg("s"), py::arg("t"), py::arg("threads") = 0);
  m.def("survivor_stats",
        [](apd::i64 n, apd::u64 trials, apd::u64 seed, int threads) {
          const apd::SurvivorStats st = apd::survivor_stats(n, trials, seed, threads);
          py::dict d;
          d["n"] = st.n;
          d["trials"] = st.trials;
          d["mean"] = st.mean;
          d["variance"] = st.variance;
          d["seed"] = st.seed;
          return d;
        },
        py::arg("n"), py::arg("trials"), py::arg("seed") = 0, py::arg("threads") = 0);

  m.def("scale_output",
        [](const std::vector<apd::i64>& images, apd::i64 t) {
          return apd::scale_output(as_perm(images), t).images();
        },
        py::arg("images"), py::arg("t"));
  m.def("scale_both",
        [](const std::vector<apd::i64>& images, apd::i64 s, apd::i64 t) {
          return apd::scale_both(as_perm(images), s, t).images();
        },
        py::arg("images"), py::arg("s"), py::arg("t"));
  m.def("fix_point_translate",
        [](const std::vector<apd::i64>& images, apd::i64 q) {
          return apd::fix_point_translate(as_perm(images), q).images();
        },
        py::arg("images"), py::arg("q"));

  m.def("compose",
        [](const std::vector<std::vector<apd::i64>>& components) {
          std::vector<apd::Perm> perms;
          std::vector<apd::i64> moduli;
          for (const auto& im : components) {
            perms.push_back(as_perm(im));
            moduli.push_back(perms.back().n());
          }
          return apd::compose_perms(perms, apd::make_basis(moduli)).images();
        },
        py::arg("components"));
  m.def("check_coverage",
        [](const std::vector<std::pair<apd::i64, std::vector<std::pair<apd::i64, apd::i64>>>>& comps,
           apd::i64 S, apd::i64 T) {
          std::vector<std::pair<apd::i64, std::vector<apd::Pattern>>> components;
          for (const auto& [n, pats] : comps) components.emplace_back(n, as_patterns(pats));
          const apd::CoverageReport rep = apd::check_coverage(components, S, T);
          return py::make_tuple(rep.pass, rep.detail);
        },
        py::arg("components"), py::arg("S"), py::arg("T"));

  m.def("prime_destroyer",
        [](apd::i64 p) { return apd::prime_destroyer(p).images(); }, py::arg("p"));
  m.def("find_xi", [](apd::i64 p) { return apd::find_xi(p).xi; }, py::arg("p"));
  m.def("legendre", &apd::legendre, py::arg("a"), py::arg("p"));
  m.def("form_solvable", &apd::form_solvable, py::arg("a"), py::arg("b"), py::arg("c"),
        py::arg("p"));

  m.def("int_ap_destroyer",
        [](apd::i64 k) {
          const apd::IntPerm p = apd::int_ap_destroyer(k);
          return std::vector<apd::i64>(p.images.begin(), p.images.end());
        },
        py::arg("k"));
  m.def("verify_int",
        [](const std::vector<apd::i64>& images) -> py::tuple {
          apd::IntPerm p;
          p.images.reserve(images.size());
          for (apd::i64 v : images) p.images.push_back(static_cast<apd::u32>(v));
          const apd::IntVerdict v = apd::verify_int(p);
          if (v.pass) return py::make_tuple(true, py::none());
          return py::make_tuple(false, py::make_tuple(v.a, v.b, v.c));
        },
        py::arg("images"));

  m.def("block_sizes",
        [](apd::i64 n, apd::i64 m) {
          const apd::BlockLayout lay = apd::block_layout(n, m);
          std::vector<apd::i64> sizes;
          for (apd::i64 j = 0; j < m; ++j) sizes.push_back(lay.size(j));
          return sizes;
        },
        py::arg("n"), py::arg("m"));
  m.def("check_claims",
        [](apd::i64 n, apd::i64 m, const std::string& which) -> py::tuple {
          const apd::Claim claim = which == "claim-1" ? apd::Claim::one : apd::Claim::two;
          if (which != "claim-1" && which != "claim-2")
            throw std::invalid_argument("check_claims: which must be 'claim-1' or 'claim-2'");
          const apd::ClaimResult res = apd::check_claims(n, m, claim);
          if (res.pass) return py::make_tuple(true, py::none());
          return py::make_tuple(false, py::make_tuple(res.a, res.b, res.c, res.value));
        },
        py::arg("n"), py::arg("m"), py::arg("which"));
  m.def("build_destroyer",
        [](apd::i64 n, const std::vector<apd::i64>& master, bool verify_master) {
          return apd::build_destroyer(n, as_perm(master), verify_master).images();
        },
        py::arg("n"), py::arg("master"), py::arg("verify_master") = true);
  m.def("build_almost",
        [](apd::i64 n, apd::i64 t, const std::vector<apd::i64>& master, bool verify_master) {
          const apd::AlmostResult res = apd::build_almost(n, t, as_perm(master), verify_master);
          py::dict trace;
          trace["n"] = res.trace.n;
          trace["m"] = res.trace.m;
          trace["t"] = res.trace.t;
          trace["beta1"] = res.trace.beta1;
          trace["beta2"] = res.trace.beta2;
          trace["beta3"] = res.trace.beta3;
          trace["beta4"] = res.trace.beta4;
          return py::make_tuple(res.perm.images(), trace);
        },
        py::arg("n"), py::arg("t"), py::arg("master"), py::arg("verify_master") = true);

  m.def("product_perm",
        [](const std::vector<apd::i64>& chi_m, const std::vector<apd::i64>& chi_r) {
          return apd::product_perm(as_perm(chi_m), as_perm(chi_r)).images();
        },
        py::arg("chi_m"), py::arg("chi_r"));
  m.def("restrict_at_fixed_point",
        [](const std::vector<apd::i64>& images) {
          return apd::restrict_at_fixed_point(as_perm(images)).images();
        },
        py::arg("images"));
  m.def("coprime_ap_terms", &apd::coprime_ap_terms, py::arg("first"), py::arg("diff"),
        py::arg("count"));
  m.def("superblock_sizes",
        [](apd::i64 M, apd::i64 t) { return apd::superblock_partition(M, t).group_sizes; },
        py::arg("M"), py::arg("t"));

  m.def("search_perm",
        [](apd::i64 n, const std::vector<std::pair<apd::i64, apd::i64>>& pats, bool normalize,
           apd::i64 node_limit, apd::i64 threads, apd::u64 seed, bool exhaustive) {
          apd::SearchConfig cfg;
          cfg.patterns = as_patterns(pats);
          cfg.normalize = normalize;
          cfg.node_limit = node_limit;
          cfg.threads = threads;
          cfg.seed = seed;
          cfg.exhaustive = exhaustive;
          const apd::SearchResult res = apd::search_perm(n, cfg);
          py::dict d;
          d["status"] = res.status == apd::SearchStatus::found
                            ? "found"
                            : res.status == apd::SearchStatus::none ? "none" : "limit";
          d["witness"] = res.witness.has_value() ? py::cast(res.witness->images())
                                                 : py::object(py::none());
          d["count"] = res.count;
          d["nodes"] = res.nodes;
          d["deterministic_witness"] = res.deterministic_witness;
          return d;
        },
        py::arg("n"), py::arg("patterns"), py::arg("normalize") = true,
        py::arg("node_limit") = 0, py::arg("threads") = 1, py::arg("seed") = 0,
        py::arg("exhaustive") = false);
  m.def("exhaust_count",
        [](apd::i64 n, const std::vector<std::pair<apd::i64, apd::i64>>& pats, bool normalize) {
          return apd::exhaust_count(n, as_patterns(pats), normalize);
        },
        py::arg("n"), py::arg("patterns"), py::arg("normalize") = false);

  m.def("table_entries", [] {
    py::list rows;
    for (const apd::TableEntry& e : apd::table_entries()) {
      py::dict d;
      d["index"] = e.index;
      d["n"] = e.perm.n();
      d["perm"] = e.perm.images();
      py::list claims;
      for (const apd::Pattern& p : e.claimed) claims.append(py::make_tuple(p.s, p.t));
      d["claims"] = claims;
      rows.append(d);
    }
    return rows;
  });
  m.def("derived_components",
        [](const std::string& part) {
          if (part != "one" && part != "two")
            throw std::invalid_argument("derived_components: part must be 'one' or 'two'");
          py::list rows;
          for (const apd::ComponentEntry& e :
               apd::derived_components(part == "one" ? apd::Part::one : apd::Part::two)) {
            py::dict d;
            d["index"] = e.index;
            d["n"] = e.perm.n();
            d["perm"] = e.perm.images();
            py::list claims;
            for (const apd::Pattern& p : e.claims) claims.append(py::make_tuple(p.s, p.t));
            d["claims"] = claims;
            rows.append(d);
          }
          return rows;
        },
        py::arg("part"));
  m.def("constants", [] {
    const apd::CompositeConstants& c = apd::constants();
    py::dict d;
    d["sqrt_n0"] = c.sqrt_n0;
    d["n0"] = big_to_py(c.n0);
    d["r"] = big_to_py(c.r);
    return d;
  });

  m.def("perm_to_text",
        [](const std::vector<apd::i64>& images) { return apd::perm_to_text(as_perm(images)); },
        py::arg("images"));
  m.def("perm_from_string",
        [](const std::string& text) { return apd::perm_from_string(text).images(); },
        py::arg("text"));
}
