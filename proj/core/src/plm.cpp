#include "tropsem/plm.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "tropsem/error.hpp"

namespace tropsem {

std::string to_string(OrderMode m) {
  switch (m) {
    case OrderMode::OneSided: return "one-sided";
    case OrderMode::TwoSided: return "two-sided";
    case OrderMode::Explicit: return "explicit";
  }
  return "?";
}

OrderMode parse_order_mode(const std::string& s) {
  if (s == "one-sided" || s == "one") return OrderMode::OneSided;
  if (s == "two-sided" || s == "two") return OrderMode::TwoSided;
  if (s == "explicit") return OrderMode::Explicit;
  throw InvalidInput("unknown order mode '" + s + "'");
}

std::string text_label(const Text& t) {
  if (t.empty()) return "<empty>";
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ' ';
    out += t[i];
  }
  return out;
}

bool is_prefix(const Text& a, const Text& b) {
  return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
}

bool is_substring(const Text& a, const Text& b) {
  if (a.size() > b.size()) return false;
  if (a.empty()) return true;
  return std::search(b.begin(), b.end(), a.begin(), a.end()) != b.end();
}

bool Plm::has_empty_text() const { return empty_text_index().has_value(); }

std::optional<std::size_t> Plm::empty_text_index() const {
  for (std::size_t i = 0; i < texts.size(); ++i)
    if (texts[i].empty()) return i;
  return std::nullopt;
}

std::optional<Rational> Plm::probability(std::size_t i, std::size_t j) const {
  const auto it = pr.find({i, j});
  if (it != pr.end()) return it->second;
  if (i == j) return Rational(1);
  return std::nullopt;
}

PartialOrder Plm::order() const {
  const std::size_t n = texts.size();
  if (mode == OrderMode::Explicit) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& [key, value] : pr)
      if (key.first != key.second) pairs.push_back(key);
    return PartialOrder::closure_of(n, pairs);
  }
  PartialOrder p(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const bool rel = mode == OrderMode::OneSided ? is_prefix(texts[i], texts[j]) : is_substring(texts[i], texts[j]);
      p.set(i, j, rel);
    }
  return p;
}

std::vector<std::string> Plm::labels() const {
  std::vector<std::string> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(text_label(t));
  return out;
}

ValidationReport validate_plm(const Plm& m) {
  ValidationReport rep;
  const std::size_t n = m.size();
  for (const auto& [key, value] : m.pr) {
    if (key.first >= n || key.second >= n) {
      rep.order_issues.push_back("probability on out-of-range pair (" + std::to_string(key.first) + "," +
                                 std::to_string(key.second) + ")");
    }
  }
  if (!rep.order_issues.empty()) return rep;

  const PartialOrder ord = m.order();
  if (!ord.is_antisymmetric()) rep.order_issues.emplace_back("subtext relation is not antisymmetric (duplicate texts?)");
  if (!ord.is_transitive()) rep.order_issues.emplace_back("subtext relation is not transitive");

  for (std::size_t i = 0; i < n; ++i) {
    const auto it = m.pr.find({i, i});
    if (it != m.pr.end() && it->second != 1) rep.reflexivity.push_back(i);
  }
  for (const auto& [key, value] : m.pr) {
    const auto [i, j] = key;
    if (i == j) continue;
    if (!ord.leq(i, j)) {
      rep.not_comparable.emplace_back(i, j);
      continue;
    }
    if (value <= 0 || (!m.extended_values && value > 1)) rep.out_of_range.emplace_back(i, j);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && ord.leq(i, j) && !m.pr.count({i, j})) rep.missing.emplace_back(i, j);

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !ord.leq(i, j)) continue;
      const auto pij = m.probability(i, j);
      if (!pij) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == j || k == i || !ord.leq(j, k)) continue;
        const auto pjk = m.probability(j, k);
        const auto pik = m.probability(i, k);
        if (!pjk || !pik) continue;
        const Rational through = *pij * *pjk;
        if (*pik != through) rep.triples.push_back({i, j, k, *pik, through});
      }
    }
  if (rep.ok()) {
    try {
      potentials(m);
    } catch (const InvalidInput& e) {
      rep.warnings.emplace_back(e.what());
    }
  }
  return rep;
}

std::vector<std::string> ValidationReport::describe(const Plm& m) const {
  const auto labels = m.labels();
  auto name = [&](std::size_t i) { return i < labels.size() ? "'" + labels[i] + "'" : std::to_string(i); };
  std::vector<std::string> out;
  for (const auto& s : order_issues) out.push_back(s);
  for (auto i : reflexivity) out.push_back("Pr(" + name(i) + "|" + name(i) + ") != 1");
  for (const auto& [i, j] : not_comparable)
    out.push_back("probability given for incomparable pair " + name(i) + " -> " + name(j));
  for (const auto& [i, j] : missing) out.push_back("missing Pr(" + name(j) + "|" + name(i) + ")");
  for (const auto& [i, j] : out_of_range)
    out.push_back("Pr(" + name(j) + "|" + name(i) + ") out of range: " + m.pr.at({i, j}).str());
  for (const auto& w : warnings) out.push_back("warning: " + w);
  for (const auto& t : triples) {
    std::ostringstream os;
    os << "multiplicativity fails on " << name(t.i) << " <= " << name(t.j) << " <= " << name(t.k) << ": "
       << t.direct.str() << " != " << t.through.str();
    out.push_back(os.str());
  }
  return out;
}

std::vector<Potential> potentials(const Plm& m, const std::vector<std::size_t>& references) {
  const PartialOrder ord = m.order();
  const auto comps = ord.components();
  if (!references.empty() && references.size() != comps.size())
    throw InvalidInput("potentials: need one reference per component");

  auto pr_of = [&](std::size_t i, std::size_t j) -> Rational {
    const auto p = m.probability(i, j);
    if (!p) throw InvalidInput("potentials: missing Pr for comparable pair");
    if (*p <= 0) throw InvalidInput("potentials: zero probability on a comparable pair");
    return *p;
  };

  const auto labels = m.labels();
  std::vector<Potential> out;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    Potential pot;
    pot.component = c;
    pot.members = comps[c];
    pot.reference = references.empty() ? comps[c].front() : references[c];
    if (std::find(pot.members.begin(), pot.members.end(), pot.reference) == pot.members.end())
      throw InvalidInput("potentials: reference is not in its component");

    std::map<std::size_t, std::size_t> parent;
    pot.value[pot.reference] = 1;
    parent[pot.reference] = pot.reference;
    std::deque<std::size_t> queue{pot.reference};
    while (!queue.empty()) {
      const auto i = queue.front();
      queue.pop_front();
      for (auto j : pot.members) {
        if (j == i || !ord.comparable(i, j) || pot.value.count(j)) continue;
        pot.value[j] = ord.leq(i, j) ? pot.value[i] * pr_of(i, j) : pot.value[i] / pr_of(j, i);
        parent[j] = i;
        queue.push_back(j);
      }
    }

    auto path_to_ref = [&](std::size_t v) {
      std::vector<std::size_t> path{v};
      while (parent[v] != v) path.push_back(v = parent[v]);
      return path;
    };
    for (auto i : pot.members)
      for (auto j : pot.members) {
        if (i == j || !ord.leq(i, j)) continue;
        if (pot.value[j] == pot.value[i] * pr_of(i, j)) continue;
        auto pi = path_to_ref(i);
        auto pj = path_to_ref(j);
        while (pi.size() > 1 && pj.size() > 1 && pi[pi.size() - 2] == pj[pj.size() - 2]) {
          pi.pop_back();
          pj.pop_back();
        }
        std::string cycle;
        for (auto v : pi) cycle += "'" + labels[v] + "' - ";
        for (auto it = pj.rbegin() + 1; it != pj.rend(); ++it) cycle += "'" + labels[*it] + "' - ";
        cycle += "'" + labels[i] + "'";
        throw InvalidInput("no potential exists: path weights disagree around cycle " + cycle);
      }
    out.push_back(std::move(pot));
  }
  return out;
}

}  // namespace tropsem
