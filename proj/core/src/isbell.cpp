#include "tropsem/isbell.hpp"

#include <algorithm>
#include <set>

#include "tropsem/error.hpp"
#include "tropsem/polyhedron.hpp"

namespace tropsem {

ExtVector map_l(const DirectedMetric& d, const ExtVector& x) {
  if (x.size() != d.size()) throw InvalidInput("map_l: length mismatch");
  ExtVector out(d.size(), ExtReal::neg_inf());
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j) out[i] = tmax(out[i], tmax_mul(d.log(i, j), -x[j]));
  return out;
}

ExtVector map_r(const DirectedMetric& d, const ExtVector& y) {
  if (y.size() != d.size()) throw InvalidInput("map_r: length mismatch");
  ExtVector out(d.size(), ExtReal::neg_inf());
  for (std::size_t j = 0; j < d.size(); ++j)
    for (std::size_t i = 0; i < d.size(); ++i) out[j] = tmax(out[j], tmax_mul(d.log(i, j), -y[i]));
  return out;
}

bool isbell_member(const DirectedMetric& d, const ExtVector& x) { return approx_equal(map_l(d, map_r(d, x)), x); }

std::vector<ExtVector> max_closure(const std::vector<ExtVector>& vectors, const DirectedMetric& d, std::size_t cap) {
  std::vector<ExtVector> out;
  std::set<ExtVector> seen;
  for (const auto& v : vectors) {
    if (!is_member(v, d, Side::Lower)) throw InvalidInput("max_closure: input is not a member of P(L)");
    if (seen.insert(v).second) out.push_back(v);
  }
  // out[0..done) have been paired with every earlier vector.
  std::size_t done = 0;
  while (done < out.size()) {
    for (std::size_t a = 0; a <= done; ++a) {
      for (const auto& c : {pointwise_max(out[a], out[done]), pointwise_min(out[a], out[done])}) {
        if (all_pos_inf(c) || seen.count(c)) continue;
        if (!is_member(c, d, Side::Lower)) throw VerificationError("max_closure: lattice operation left P(L)");
        if (out.size() >= cap) throw ResourceLimit("max_closure: more than " + std::to_string(cap) + " vectors");
        seen.insert(c);
        out.push_back(c);
      }
    }
    ++done;
  }
  return out;
}

}  // namespace tropsem
