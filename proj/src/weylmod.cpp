#include "cellred/weylmod.hpp"

#include "cellred/error.hpp"

namespace cellred {

IntPoly dim_template(const RootSystem& rs, const WeightTemplate& tmpl, std::int64_t min_prime) {
  if (static_cast<int>(tmpl.coords.size()) != rs.rank() || !tmpl.dominant_from(min_prime))
    throw Error(Errc::NonDominantTemplate, tmpl.str() + " from p = " + std::to_string(min_prime));
  IntPoly num(1);
  Integer den = 1;
  for (std::size_t k = 0; k < rs.coroot_pairings.size(); ++k) {
    // <lambda + rho, alpha_k^vee> as an affine form in t.
    Integer c0 = 0, c1 = 0;
    for (int i = 0; i < rs.rank(); ++i) {
      c0 += Integer(rs.coroot_pairings[k][i]) * (tmpl.coords[i].first + 1);
      c1 += Integer(rs.coroot_pairings[k][i]) * tmpl.coords[i].second;
    }
    num *= IntPoly::linear(c0, c1);
    den *= rs.weyl_vector_pairings[k];
  }
  return num * Rational(1, den);
}

std::map<ElemId, DeltaPoly> delta_table(const WeylGroup& g, const TypeTables& t) {
  if (!t.m_w) throw Error(Errc::MissingMwData, g.type().name() + " has no M_w data");
  std::map<ElemId, DeltaPoly> out;
  for (const auto& [w, terms] : *t.m_w) {
    DeltaPoly d;
    d.w = w;
    for (const auto& term : terms)
      d.pi += dim_template(g.root_system(), term.tmpl, t.min_prime) * Rational(term.coef);
    d.c = lowest_degree(d.pi);
    out.emplace(w, std::move(d));
  }
  return out;
}

ElemId DualityResult::partner(ElemId w) const {
  for (const auto& m : matches)
    if (m.w == w) return m.candidates.size() == 1 ? m.candidates[0] : -1;
  return -1;
}

DualityResult find_duality(const WeylGroup& g, const std::map<ElemId, DeltaPoly>& deltas) {
  DualityResult res;
  const GenSet all = (GenSet{1} << g.rank()) - 1;
  for (const auto& [w, dw] : deltas) {
    DualityMatch m;
    m.w = w;
    IntPoly rev;
    try {
      rev = reverse_at(g.nu(), dw.pi);
    } catch (const Error& e) {
      res.findings.push_back("NoMatch " + g.str(w) + ": " + e.what());
      res.matches.push_back(std::move(m));
      continue;
    }
    for (const auto& [x, dx] : deltas) {
      if (g.left_descent_set(x) != (all & ~g.left_descent_set(w))) continue;
      if (rev == dx.pi) {
        m.candidates.push_back(x);
        m.sign = 1;
      } else if (rev == -dx.pi) {
        m.candidates.push_back(x);
        m.sign = -1;
      }
    }
    if (m.candidates.empty()) res.findings.push_back("NoMatch " + g.str(w));
    if (m.candidates.size() > 1) {
      res.findings.push_back("AmbiguousMatch " + g.str(w));
      m.sign = 0;
    }
    res.matches.push_back(std::move(m));
  }
  res.is_involution = res.findings.empty();
  for (const auto& m : res.matches) {
    const ElemId x = res.partner(m.w);
    if (x >= 0 && res.partner(x) != m.w) {
      res.findings.push_back("not involutive at " + g.str(m.w));
      res.is_involution = false;
    }
  }
  return res;
}

}  // namespace cellred
