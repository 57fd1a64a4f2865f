#include "imprim/json_io.hpp"

namespace imprim {

Json cyc_to_json(const CycNum& x) {
  Json coeffs = Json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(rational_to_string(c));
  return Json{{"order", x.order()}, {"coeffs", coeffs}};
}

CycNum cyc_from_json(const Json& j) {
  unsigned order = j.at("order").get<unsigned>();
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coeffs"))
    coeffs.push_back(rational_from_string(c.get<std::string>()));
  if (coeffs.size() != CycNum::euler_phi(order))
    fail(ErrorKind::BadParams, "coefficient count != phi(order)");
  return CycNum(order, std::move(coeffs));
}

Json group_element_to_json(const MonomialMatrix& g) {
  Json perm = Json::array(), exps = Json::array();
  for (int v : g.perm()) perm.push_back(v + 1);
  for (int e : g.exps()) exps.push_back(e);
  return Json{{"perm", perm}, {"exps", exps}};
}

MonomialMatrix group_element_from_json(const Json& j, unsigned r) {
  std::vector<int> perm, exps;
  for (const auto& v : j.at("perm")) perm.push_back(v.get<int>() - 1);
  for (const auto& v : j.at("exps")) exps.push_back(v.get<int>());
  return MonomialMatrix(std::move(perm), std::move(exps), r);
}

Json multipartition_to_json(const MultiPartition& mp) {
  Json out = Json::array();
  for (const auto& comp : mp.comps()) {
    Json part = Json::array();
    for (int x : comp) part.push_back(x);
    out.push_back(part);
  }
  return out;
}

MultiPartition multipartition_from_json(const Json& j, unsigned p, unsigned d) {
  std::vector<Partition> comps;
  for (const auto& comp : j) {
    Partition part;
    for (const auto& x : comp) part.push_back(x.get<int>());
    comps.push_back(std::move(part));
  }
  return MultiPartition(p, d, std::move(comps));
}

Json tableau_to_json(const StdTableau& t) {
  Json out = Json::array();
  const MultiPartition& shape = t.shape();
  // invert entry -> cell into per-component row matrices
  for (unsigned f = 0; f < shape.r(); ++f) {
    const Partition& part = shape.comp_flat(f);
    Json comp = Json::array();
    for (size_t row = 0; row < part.size(); ++row)
      comp.push_back(Json::array_t(static_cast<size_t>(part[row]), 0));
    out.push_back(comp);
  }
  for (unsigned y = 1; y <= t.n(); ++y) {
    const Cell& c = t.cell_of(y);
    out[static_cast<size_t>(c.comp)][static_cast<size_t>(c.row - 1)]
       [static_cast<size_t>(c.col - 1)] = y;
  }
  return out;
}

Json matrix_to_json(const CycMatrix& m) {
  CycMatrix lifted = mat_with_common_order(m);
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < lifted.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < lifted.cols(); ++j)
      row.push_back(cyc_to_json(lifted(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json params_to_json(const HeckeParams& hp) {
  Json v = Json::array(), u = Json::array();
  for (const auto& x : hp.v) v.push_back(cyc_to_json(x));
  for (const auto& x : hp.u) u.push_back(cyc_to_json(x));
  return Json{{"r", hp.gp.r},    {"p", hp.gp.p},        {"n", hp.gp.n},
              {"q", cyc_to_json(hp.q)}, {"v", v},       {"xi", cyc_to_json(hp.xi)},
              {"u", u},          {"group_mode", hp.group_mode}};
}

Json rep_to_json(const Rep& rep, bool include_matrices) {
  Json basis = Json::array();
  for (const auto& t : rep.basis) basis.push_back(tableau_to_json(t));
  Json out{{"params", params_to_json(rep.params)},
           {"shape", multipartition_to_json(rep.shape)},
           {"dimension", rep.dim()},
           {"basis", basis}};
  if (include_matrices) {
    Json gens = Json::array();
    for (const auto& g : rep.gens) gens.push_back(matrix_to_json(g));
    out["generators"] = gens;
  }
  return out;
}

KTable ktable_from_json(const Json& j, const Arrangement& arr) {
  auto parse_list = [](const Json& list) {
    std::vector<CycNum> out;
    for (const auto& s : list)
      out.push_back(CycNum(rational_from_string(s.get<std::string>())));
    return out;
  };
  std::vector<CycNum> coord, diff;
  if (j.contains("coordinate")) coord = parse_list(j.at("coordinate"));
  if (j.contains("difference")) diff = parse_list(j.at("difference"));

  KTable k;
  k.k.resize(arr.orbit_count());
  for (size_t o = 0; o < arr.orbit_count(); ++o) {
    unsigned e = arr.orbit_e[o];
    const auto& interior =
        static_cast<int>(o) == arr.coordinate_orbit ? coord : diff;
    if (interior.size() + 1 != e)
      fail(ErrorKind::BadParams, "k-table length must be e_H - 1");
    std::vector<CycNum> row(e + 1, CycNum(0));
    for (size_t i = 0; i < interior.size(); ++i) row[i + 1] = interior[i];
    k.k[o] = std::move(row);
  }
  return k;
}

Json ktable_to_json(const KTable& k, const Arrangement& arr) {
  Json out;
  for (size_t o = 0; o < arr.orbit_count(); ++o) {
    Json list = Json::array();
    for (size_t i = 1; i + 1 < k.k[o].size(); ++i) {
      const CycNum& x = k.k[o][i];
      if (x.is_rational())
        list.push_back(rational_to_string(x.to_rational()));
      else
        list.push_back(cyc_to_json(x));
    }
    out[static_cast<int>(o) == arr.coordinate_orbit ? "coordinate" : "difference"] =
        list;
  }
  return out;
}

}  // namespace imprim
