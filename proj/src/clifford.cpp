#include "imprim/clifford.hpp"

#include <map>
#include <sstream>

namespace imprim {

Rep tau_twist(const Rep& rep) {
  Rep out = rep;
  CycNum scale = rep.params.xi.inverse();
  out.gens[0] = scale * out.gens[0];
  return out;
}

CycMatrix shift_relabeling(const Rep& from, const Rep& to) {
  if (!(from.shape.shifted() == to.shape))
    fail(ErrorKind::BadParams, "relabeling requires to = shift(from)");
  CycMatrix r = CycMatrix::Constant(to.dim(), from.dim(), CycNum(0));
  for (Eigen::Index t = 0; t < from.dim(); ++t) {
    int img = to.basis_index(from.basis[static_cast<size_t>(t)].shifted());
    if (img < 0) fail(ErrorKind::RelationFailure, "shift image tableau missing");
    r(img, t) = CycNum(1);
  }
  return r;
}

IntertwinerResult verify_tau_shift_inverse(const MultiPartition& lambda,
                                           const HeckeParams& params) {
  Rep a = build_rep(lambda, params, false);
  Rep b = tau_twist(build_rep(lambda.shifted(), params, false));
  CycMatrix r = shift_relabeling(a, b);
  for (unsigned i = 1; i <= params.gp.n; ++i) {
    CycMatrix lhs = r * a.gens[i - 1];
    CycMatrix rhs = b.gens[i - 1] * r;
    if (!mat_equal(lhs, rhs)) {
      std::ostringstream os;
      os << "generator T_" << i << " at shape " << lambda.to_string();
      return {false, r, os.str()};
    }
  }
  return {true, r, ""};
}

CycMatrix t1_inverse_by_polynomial(const Rep& rep) {
  // prod_j (T_1 - u_j) = 0 gives sum_k c_k T_1^k = 0 with c_0 = prod(-u_j),
  // so T_1^{-1} = -(1/c_0) * sum_{k >= 1} c_k T_1^{k-1}.
  UniPoly minpoly = rep.params.t1_min_poly();
  CycNum c0 = minpoly.coeff(0);
  if (c0.is_zero())
    fail(ErrorKind::NonInvertible, "some u_j = 0; T_1 is not invertible");
  Eigen::Index dim = rep.dim();
  CycMatrix acc = CycMatrix::Constant(dim, dim, CycNum(0));
  CycMatrix power = CycMatrix::Identity(dim, dim);
  for (int k = 1; k <= minpoly.degree(); ++k) {
    acc = acc + minpoly.coeff(k) * power;
    power = power * rep.gens[0];
  }
  CycMatrix inv = (-c0.inverse()) * acc;
  if (!mat_equal(rep.gens[0] * inv, CycMatrix::Identity(dim, dim)))
    fail(ErrorKind::RelationFailure, "polynomial inverse of T_1 failed");
  return inv;
}

SubalgebraGens restrict_to_subalgebra(const Rep& rep) {
  SubalgebraGens out;
  unsigned n = rep.params.gp.n, p = rep.params.gp.p;
  CycMatrix t0 = CycMatrix::Identity(rep.dim(), rep.dim());
  for (unsigned k = 0; k < p; ++k) t0 = t0 * rep.gens[0];
  out.t.push_back(std::move(t0));
  out.names.push_back("t_0");
  if (n >= 2) {
    CycMatrix t1inv = t1_inverse_by_polynomial(rep);
    out.t.push_back(t1inv * rep.gens[1] * rep.gens[0]);
    out.names.push_back("t_1");
  }
  for (unsigned i = 2; i <= n; ++i) {
    out.t.push_back(rep.gens[i - 1]);
    std::ostringstream os;
    os << "t_" << i;
    out.names.push_back(os.str());
  }
  return out;
}

namespace {

CycMatrix kron(const CycMatrix& a, const CycMatrix& b) {
  CycMatrix out = CycMatrix::Constant(a.rows() * b.rows(), a.cols() * b.cols(),
                                      CycNum(0));
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

// dim of { M : M g = g' M for all paired generators }
long intertwiner_dimension(const std::vector<CycMatrix>& gens_from,
                           const std::vector<CycMatrix>& gens_to) {
  if (gens_from.empty()) fail(ErrorKind::BadParams, "no generators");
  Eigen::Index dfrom = gens_from[0].cols(), dto = gens_to[0].rows();
  // vec(M g) = (g^T kron I) vec(M), vec(g' M) = (I kron g') vec(M)
  Eigen::Index vars = dfrom * dto;
  CycMatrix sys(static_cast<Eigen::Index>(gens_from.size()) * vars, vars);
  CycMatrix id_to = CycMatrix::Identity(dto, dto);
  CycMatrix id_from = CycMatrix::Identity(dfrom, dfrom);
  for (size_t k = 0; k < gens_from.size(); ++k) {
    CycMatrix block = kron(gens_from[k].transpose(), id_to) -
                      kron(id_from, gens_to[k]);
    sys.block(static_cast<Eigen::Index>(k) * vars, 0, vars, vars) = block;
  }
  return exact_nullspace(sys).cols();
}

long commutant_dimension(const std::vector<CycMatrix>& gens) {
  return intertwiner_dimension(gens, gens);
}

}  // namespace

DecompositionReport decompose_restriction(const Rep& rep) {
  const unsigned p = rep.params.gp.p;
  CyclicClass cc = cyclic_class(rep.shape);
  unsigned m = cc.stabilizer_exponent;  // p / e_lambda
  unsigned e = cc.e_lambda;

  DecompositionReport report;
  report.shape = rep.shape;
  report.e_lambda = e;
  report.orbit_size = cc.class_size;

  // U = relabeling by shift^m, a permutation of the tableau basis.
  Eigen::Index dim = rep.dim();
  CycMatrix u = CycMatrix::Constant(dim, dim, CycNum(0));
  for (Eigen::Index t = 0; t < dim; ++t) {
    StdTableau img = rep.basis[static_cast<size_t>(t)];
    for (unsigned k = 0; k < m; ++k) img = img.shifted();
    int idx = rep.basis_index(img);
    if (idx < 0) fail(ErrorKind::RelationFailure, "shift^m image missing");
    u(idx, t) = CycNum(1);
  }
  report.intertwiner_u = u;

  CycMatrix id = CycMatrix::Identity(dim, dim);
  CycMatrix upow = id;
  for (unsigned k = 0; k < e; ++k) upow = upow * u;
  if (!mat_equal(upow, id))
    fail(ErrorKind::RelationFailure, "U^e != identity");

  SubalgebraGens sub = restrict_to_subalgebra(rep);
  for (size_t k = 0; k < sub.t.size(); ++k)
    if (!mat_equal(u * sub.t[k], sub.t[k] * u))
      fail(ErrorKind::RelationFailure, "U does not commute with " + sub.names[k]);

  // projectors P_l = (1/e) sum_k omega^{-lk} U^k
  CycNum omega = CycNum::root_of_unity(e, 1);
  CycNum einv = CycNum(static_cast<int>(e)).inverse();
  std::vector<CycMatrix> upowers(e, id);
  for (unsigned k = 1; k < e; ++k) upowers[k] = upowers[k - 1] * u;
  std::vector<CycMatrix> projectors;
  for (unsigned l = 0; l < e; ++l) {
    CycMatrix pl = CycMatrix::Constant(dim, dim, CycNum(0));
    for (unsigned k = 0; k < e; ++k)
      pl = pl + omega.pow(-static_cast<long>(l) * k) * upowers[k];
    pl = einv * pl;
    projectors.push_back(std::move(pl));
  }

  // exact projector identities and invariance
  CycMatrix sum = CycMatrix::Constant(dim, dim, CycNum(0));
  for (unsigned l = 0; l < e; ++l) {
    sum = sum + projectors[l];
    if (!mat_equal(projectors[l] * projectors[l], projectors[l]))
      fail(ErrorKind::RelationFailure, "projector not idempotent");
    for (unsigned l2 = l + 1; l2 < e; ++l2)
      if (!mat_is_zero(projectors[l] * projectors[l2]))
        fail(ErrorKind::RelationFailure, "projectors not orthogonal");
    for (size_t k = 0; k < sub.t.size(); ++k)
      if (!mat_equal(projectors[l] * sub.t[k], sub.t[k] * projectors[l]))
        fail(ErrorKind::RelationFailure, "projector image not invariant");
    if (!mat_equal(u * projectors[l], omega.pow(l) * projectors[l]))
      fail(ErrorKind::RelationFailure, "projector label mismatch");
  }
  if (!mat_equal(sum, id))
    fail(ErrorKind::RelationFailure, "projectors do not sum to identity");

  Eigen::Index dimsum = 0;
  for (unsigned l = 0; l < e; ++l) {
    Summand s;
    s.label = static_cast<int>(l);
    s.dimension = exact_rank(projectors[l]);
    s.projector = projectors[l];
    dimsum += s.dimension;
    report.summands.push_back(std::move(s));
  }
  if (dimsum != dim)
    fail(ErrorKind::RelationFailure, "summand dimensions do not sum to dim");
  for (const auto& s : report.summands)
    if (s.dimension * static_cast<Eigen::Index>(e) != dim)
      fail(ErrorKind::CommutantMismatch, "summand dimensions unequal");

  // independent commutant computation
  report.commutant_dimension = commutant_dimension(sub.t);
  if (report.commutant_dimension != static_cast<long>(e)) {
    std::ostringstream os;
    os << "commutant dimension " << report.commutant_dimension << " != e = " << e
       << " at " << rep.shape.to_string() << " (p = " << p << ")";
    fail(ErrorKind::CommutantMismatch, os.str());
  }
  return report;
}

CensusReport smash_product_census(const HeckeParams& params) {
  const GroupParams& gp = params.gp;
  auto shapes = multipartitions(gp.r, gp.p, gp.n);

  // cache one Rep per shape
  std::map<std::vector<Partition>, Rep> reps;
  for (const auto& s : shapes) reps.emplace(s.comps(), build_rep(s, params, false));

  // orbit representatives
  std::vector<MultiPartition> orbit_reps;
  std::map<std::vector<Partition>, bool> seen;
  for (const auto& s : shapes) {
    CyclicClass cc = cyclic_class(s);
    if (!seen.count(cc.representative.comps())) {
      seen[cc.representative.comps()] = true;
      orbit_reps.push_back(cc.representative);
    }
  }

  CensusReport census;
  census.expected_sum_dim_sq = static_cast<unsigned long>(gp.p) * group_order(gp);

  for (const auto& lambda : orbit_reps) {
    CyclicClass cc = cyclic_class(lambda);
    unsigned m = cc.class_size, e = cc.e_lambda;
    std::vector<const Rep*> orbit;
    std::vector<CycMatrix> rel;  // rel[k]: V(shift^k) -> V(shift^{k+1})
    MultiPartition cur = lambda;
    for (unsigned k = 0; k < m; ++k) {
      orbit.push_back(&reps.at(cur.comps()));
      MultiPartition next = cur.shifted();
      // shift^m(lambda) = lambda, so the last relabeling returns to block 0
      const Rep& to = k + 1 < m ? reps.at(next.comps()) : reps.at(lambda.comps());
      rel.push_back(shift_relabeling(*orbit.back(), to));
      cur = next;
    }

    Eigen::Index block = orbit[0]->dim();
    Eigen::Index dim = static_cast<Eigen::Index>(m) * block;
    CycNum omega = CycNum::root_of_unity(e, 1);

    for (unsigned l = 0; l < e; ++l) {
      InducedModule mod;
      mod.orbit_representative = lambda;
      mod.pi_label = static_cast<int>(l);
      mod.e_lambda = e;
      mod.orbit_size = m;
      mod.dimension = dim;

      for (unsigned i = 1; i <= gp.n; ++i) {
        CycMatrix h = CycMatrix::Constant(dim, dim, CycNum(0));
        for (unsigned k = 0; k < m; ++k)
          h.block(k * block, k * block, block, block) = orbit[k]->gens[i - 1];
        mod.h_gens.push_back(std::move(h));
      }

      CycMatrix g = CycMatrix::Constant(dim, dim, CycNum(0));
      for (unsigned k = 1; k < m; ++k)
        g.block((k - 1) * block, k * block, block, block) = exact_inverse(rel[k - 1]);
      g.block((m - 1) * block, 0, block, block) =
          omega.pow(l) * exact_inverse(rel[m - 1]);
      mod.g_op = std::move(g);

      // smash relations: G T_1 = xi T_1 G, G T_i = T_i G, G^p = 1
      if (!mat_equal(mod.g_op * mod.h_gens[0], params.xi * mod.h_gens[0] * mod.g_op))
        fail(ErrorKind::CensusMismatch, "G does not twist T_1 by xi");
      for (unsigned i = 2; i <= gp.n; ++i)
        if (!mat_equal(mod.g_op * mod.h_gens[i - 1], mod.h_gens[i - 1] * mod.g_op))
          fail(ErrorKind::CensusMismatch, "G does not commute with T_i");
      CycMatrix gp_pow = CycMatrix::Identity(dim, dim);
      for (unsigned k = 0; k < gp.p; ++k) gp_pow = gp_pow * mod.g_op;
      if (!mat_equal(gp_pow, CycMatrix::Identity(dim, dim)))
        fail(ErrorKind::CensusMismatch, "G^p != identity");

      census.sum_dim_sq += static_cast<unsigned long>(dim) * dim;
      census.simples.push_back(std::move(mod));
    }
  }

  // simplicity of every induced module
  census.all_simple = true;
  for (const auto& mod : census.simples) {
    std::vector<CycMatrix> gens = mod.h_gens;
    gens.push_back(mod.g_op);
    if (commutant_dimension(gens) != 1) {
      census.all_simple = false;
      fail(ErrorKind::CensusMismatch,
           "induced module not simple at " + mod.orbit_representative.to_string());
    }
  }

  // restricted JM spectra separate cyclically inequivalent classes
  auto spectra_of = [&](const InducedModule& mod) {
    std::vector<std::vector<CycNum>> out;
    CyclicClass cc = cyclic_class(mod.orbit_representative);
    std::vector<std::vector<CycNum>> per_k(gp.n);
    MultiPartition cur = mod.orbit_representative;
    for (unsigned k = 0; k < cc.class_size; ++k) {
      Rep rep = build_rep(cur, params, false);
      auto sp = jm_spectra(rep);
      for (unsigned i = 0; i < gp.n; ++i)
        per_k[i].insert(per_k[i].end(), sp[i].begin(), sp[i].end());
      cur = cur.shifted();
    }
    for (auto& v : per_k) {
      std::sort(v.begin(), v.end(), [](const CycNum& a, const CycNum& b) {
        return CycNum::compare(a, b) < 0;
      });
      out.push_back(std::move(v));
    }
    return out;
  };
  census.spectra_separate_classes = true;
  for (size_t a = 0; a < census.simples.size(); ++a)
    for (size_t b = a + 1; b < census.simples.size(); ++b) {
      if (census.simples[a].orbit_representative ==
          census.simples[b].orbit_representative)
        continue;
      if (spectra_of(census.simples[a]) == spectra_of(census.simples[b]))
        census.spectra_separate_classes = false;
    }

  // within one class, different characters give non-isomorphic modules
  census.within_class_nonisomorphic = true;
  for (size_t a = 0; a < census.simples.size(); ++a)
    for (size_t b = a + 1; b < census.simples.size(); ++b) {
      const auto& ma = census.simples[a];
      const auto& mb = census.simples[b];
      if (!(ma.orbit_representative == mb.orbit_representative)) continue;
      std::vector<CycMatrix> ga = ma.h_gens, gb = mb.h_gens;
      ga.push_back(ma.g_op);
      gb.push_back(mb.g_op);
      if (intertwiner_dimension(ga, gb) != 0)
        census.within_class_nonisomorphic = false;
    }

  if (census.sum_dim_sq != census.expected_sum_dim_sq)
    fail(ErrorKind::CensusMismatch, "sum of squared dimensions mismatch");
  return census;
}

}  // namespace imprim
