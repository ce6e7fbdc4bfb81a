#include "tropsem_cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <nlohmann/json.hpp>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "tropsem/corpus.hpp"
#include "tropsem/directed_metric.hpp"
#include "tropsem/duality.hpp"
#include "tropsem/error.hpp"
#include "tropsem/extension.hpp"
#include "tropsem/funk.hpp"
#include "tropsem/io.hpp"
#include "tropsem/isbell.hpp"
#include "tropsem/oracle.hpp"
#include "tropsem/polyhedron.hpp"
#include "tropsem/rays.hpp"

namespace tropsem::cli {

namespace {

using json = nlohmann::ordered_json;

struct Config {
  std::string model;
  std::string out;
  std::string csv;
  std::string side = "lower";
  std::string order_mode = "two";
  std::string vectors;
  std::string sub;
  std::string map;
  std::string subset;
  std::string text;
  bool oracle = false;
  bool include_empty = false;
  bool use_float = false;
  bool compare_span = false;
  double big_m = 0.0;
  double temperature = 1.0;
  std::size_t max_len = 0;
  std::uint64_t seed = 1;
  std::size_t samples = 20;
  // Set when the corresponding option was given.
  bool has_big_m = false;
  bool has_temperature = false;
  bool has_max_len = false;
};

std::string decimal(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

json rational_json(const Rational& q, bool use_float) {
  if (use_float) return q.convert_to<double>();
  return q.str();
}

std::string rational_text(const Rational& q, bool use_float) {
  return use_float ? decimal(q.convert_to<double>()) : q.str();
}

json mult_json(const Mult& m, bool use_float) {
  if (m.is_infinite()) return "inf";
  return rational_json(m.rational(), use_float);
}

json ext_json(const ExtReal& x) {
  if (x.is_pos_inf()) return "inf";
  if (x.is_neg_inf()) return "-inf";
  return x.value();
}

json vector_json(const ExtVector& x) {
  json out = json::array();
  for (const auto& v : x) out.push_back(ext_json(v));
  return out;
}

json mult_vector_json(const MultVector& z, bool use_float) {
  json out = json::array();
  for (const auto& v : z) out.push_back(mult_json(v, use_float));
  return out;
}

void emit(const Config& cfg, const std::string& content, std::ostream& out) {
  if (cfg.out.empty())
    out << content;
  else
    write_file_atomic(cfg.out, content);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    const auto b = item.find_first_not_of(' ');
    const auto e = item.find_last_not_of(' ');
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

/// Label, or a bare index when no label matches.
std::size_t resolve_text(const DirectedMetric& d, const std::string& name) {
  const auto& labels = d.labels();
  const auto it = std::find(labels.begin(), labels.end(), name);
  if (it != labels.end()) return static_cast<std::size_t>(it - labels.begin());
  if (!name.empty() && name.find_first_not_of("0123456789") == std::string::npos) {
    const auto i = std::stoul(name);
    if (i < d.size()) return i;
  }
  throw InvalidInput("no text named '" + name + "'");
}

std::vector<std::string> labels_of(const LowerSet& s, const DirectedMetric& d) {
  std::vector<std::string> out;
  for (auto i : s.elements()) out.push_back(d.label(i));
  return out;
}

// ---------------------------------------------------------------- check

int cmd_check(const Config& cfg, std::ostream& out) {
  const std::string text = read_file(cfg.model);
  bool is_model = false;
  try {
    is_model = json::parse(text).contains("texts");
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
  int status = kOk;
  auto row = [&](const std::string& name, bool ok, const std::string& detail = "") {
    out << (ok ? "pass  " : "FAIL  ") << name;
    if (!detail.empty()) out << "  " << detail;
    out << "\n";
  };

  DirectedMetric d;
  if (is_model) {
    const Plm m = parse_plm(text);
    const auto rep = validate_plm(m);
    row("model validation", rep.ok(), std::to_string(m.size()) + " texts");
    for (const auto& line : rep.describe(m)) out << "      " << line << "\n";
    if (!rep.ok()) return kInputError;
    d = metric_from_plm(m);
  } else {
    d = parse_model_input(text).metric;
    out << "skip  multiplicativity  not a model file\n";
  }

  const auto metric = check_metric(d);
  row("zero diagonal", metric.zero_diagonal);
  row("triangle inequality", metric.triangle);
  for (const auto& f : metric.failures) out << "      " << f << "\n";
  const bool projector = check_projector(d);
  row("projector d_min^2 = d_min", projector);

  bool yoneda_ok = true;
  bool coyoneda_ok = true;
  if (!d.has_neg_inf()) {
    for (std::size_t i = 0; i < d.size(); ++i)
      for (std::size_t j = 0; j < d.size(); ++j) {
        yoneda_ok = yoneda_ok && funk_exact(yoneda_q(d, i), yoneda_q(d, j)) == d.prob(i, j);
        coyoneda_ok = coyoneda_ok && funk_exact(coyoneda_q(d, j), coyoneda_q(d, i)) == d.prob(i, j);
      }
  }
  row("Yoneda isometry", yoneda_ok);
  row("co-Yoneda isometry", coyoneda_ok);
  const auto order = order_from_metric(d);
  out << (order.is_order() ? "pass  " : "note  ") << "finite distances form a partial order\n";
  if (!metric.ok() || !projector || !yoneda_ok || !coyoneda_ok) status = kVerification;
  return status;
}

// ---------------------------------------------------------------- rays

struct RayRow {
  QVector generator;
  std::vector<std::string> carrier;
  std::optional<std::string> principal;
  std::size_t rank = 0;
};

std::optional<std::size_t> principal_index(const QVector& g, const DirectedMetric& d, Side side) {
  for (std::size_t k = 0; k < d.size(); ++k)
    if (canonical_ray(to_rational(embed_q(d, side, k))) == g) return k;
  return std::nullopt;
}

std::vector<RayRow> oracle_rows(const DirectedMetric& d, Side side) {
  const auto cons = cone_constraints(d, side);
  std::vector<RayRow> rows;
  for (const auto& g : oracle_rays(cons, d.size())) {
    RayRow r;
    r.generator = g;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g[i] != 0) r.carrier.push_back(d.label(i));
    if (const auto k = principal_index(g, d, side)) r.principal = d.label(*k);
    r.rank = certificate_rank(g, cons);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string rays_csv(const std::vector<RayRow>& rows, const DirectedMetric& d, bool use_float,
                     const std::string& prefix_header = "", const std::string& prefix = "") {
  std::string csv = prefix_header + "vertex";
  for (const auto& l : d.labels()) csv += "," + l;
  csv += "\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    csv += prefix + std::to_string(r);
    for (const auto& c : normalize_to_simplex(rows[r].generator)) csv += "," + rational_text(c, use_float);
    csv += "\n";
  }
  return csv;
}

int cmd_rays(const Config& cfg, std::ostream& out, std::ostream& err) {
  const Side side = parse_side(cfg.side);
  auto in = read_model_input(cfg.model);
  DirectedMetric d = in.metric;
  std::optional<Plm> plm = in.plm;
  if (cfg.has_big_m) {
    auto t = truncate_big_m(d, cfg.big_m);
    if (t.warning) err << "warning: " << *t.warning << "\n";
    d = t.metric;
    plm.reset();
  }

  std::vector<RayRow> rows;
  int status = kOk;
  if (plm) {
    const auto rays = enumerate_rays(*plm, side);
    for (const auto& r : rays) {
      RayRow row{r.generator, labels_of(r.carrier, d), std::nullopt, r.certificate_rank};
      if (r.principal_of) row.principal = d.label(*r.principal_of);
      rows.push_back(std::move(row));
    }
    if (cfg.oracle) {
      std::vector<QVector> mine;
      for (const auto& r : rows) mine.push_back(r.generator);
      if (mine != oracle_rays(cone_constraints(d, side), d.size())) {
        err << "oracle mismatch: lower-set enumeration and the oracle disagree\n";
        status = kVerification;
      } else {
        err << "oracle agrees on " << rows.size() << " rays\n";
      }
    }
  } else {
    err << "note: not a model metric; connected-set enumeration disabled, rays from the oracle\n";
    rows = oracle_rows(d, side);
  }

  json list = json::array();
  for (const auto& r : rows) {
    json g = json::array();
    for (const auto& c : r.generator) g.push_back(rational_json(c, cfg.use_float));
    list.push_back({{"generator", g},
                    {"carrier", r.carrier},
                    {"principal", r.principal ? json(*r.principal) : json(nullptr)},
                    {"certificateRank", r.rank}});
  }
  emit(cfg, list.dump(2) + "\n", out);
  if (!cfg.csv.empty()) write_file_atomic(cfg.csv, rays_csv(rows, d, cfg.use_float));
  return status;
}

// ---------------------------------------------------------------- crosssection

double max_abs_diff(const QVector& a, const QVector& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::fabs((a[i] - b[i]).convert_to<double>()));
  return m;
}

int cmd_crosssection(const Config& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.has_big_m || !(cfg.big_m > 0)) throw InvalidInput("crosssection needs --big-m M with M > 0");
  const auto base = read_model_input(cfg.model).metric;
  std::string csv = "side,vertex";
  for (const auto& l : base.labels()) csv += "," + l;
  csv += "\n";
  for (Side side : {Side::Lower, Side::Upper}) {
    auto at = [&](double m) {
      auto t = truncate_big_m(base, m);
      if (t.warning) err << "warning: " << *t.warning << "\n";
      std::vector<QVector> verts;
      for (const auto& g : oracle_rays(cone_constraints(t.metric, side), base.size()))
        verts.push_back(normalize_to_simplex(g));
      return verts;
    };
    const auto verts = at(cfg.big_m);
    const auto far = at(10 * cfg.big_m);
    err << to_string(side) << ": " << verts.size() << " vertices at M=" << decimal(cfg.big_m) << ", " << far.size()
        << " at M=" << decimal(10 * cfg.big_m) << "\n";
    for (std::size_t v = 0; v < verts.size(); ++v) {
      csv += to_string(side) + "," + std::to_string(v);
      for (const auto& c : verts[v]) csv += "," + rational_text(c, cfg.use_float);
      csv += "\n";
      double drift = INFINITY;
      for (const auto& w : far) drift = std::min(drift, max_abs_diff(verts[v], w));
      err << "  vertex " << v << " drift " << decimal(drift) << "\n";
    }
  }
  emit(cfg, csv, out);
  return kOk;
}

// ---------------------------------------------------------------- dual

int cmd_dual(const Config& cfg, std::ostream& out) {
  const auto d = read_model_input(cfg.model).metric;
  int status = kOk;
  for (std::size_t k = 0; k < d.size(); ++k) {
    const auto y = yoneda(d, k);
    const auto b = map_b(d, y);
    const bool lower = check_fixed_negation(d, y, Side::Lower);
    const bool upper = check_fixed_negation(d, coyoneda(d, k), Side::Upper);
    const bool formulas = dual_decompose(d, k).ok();
    if (!lower || !upper || !formulas) status = kVerification;
    out << d.label(k) << "\n"
        << "  Y     " << to_string(y) << "\n"
        << "  B(Y)  " << to_string(b) << "\n"
        << "  B(Y) = -Y: " << (lower ? "yes" : "NO") << "   A(co-Y) = -co-Y: " << (upper ? "yes" : "NO")
        << "   dual formulas: " << (formulas ? "hold" : "FAIL") << "\n";
  }
  return status;
}

// ---------------------------------------------------------------- isbell

ExtVector sample_member(std::mt19937_64& rng, const DirectedMetric& d) {
  std::bernoulli_distribution absent(0.3);
  std::uniform_real_distribution<double> weight(0.0, 3.0);
  std::uniform_int_distribution<std::size_t> forced(0, d.size() - 1);
  ExtVector lambda(d.size(), ExtReal::pos_inf());
  const std::size_t keep = forced(rng);
  for (std::size_t j = 0; j < d.size(); ++j)
    if (j == keep || !absent(rng)) lambda[j] = ExtReal(weight(rng));
  return span_combine(lambda, d, Side::Lower);
}

int cmd_isbell(const Config& cfg, std::ostream& out) {
  const auto d = read_model_input(cfg.model).metric;
  std::vector<ExtVector> vectors;
  if (!cfg.vectors.empty()) {
    vectors = parse_ext_vectors(read_file(cfg.vectors));
  } else {
    std::mt19937_64 rng(cfg.seed);
    for (std::size_t s = 0; s < cfg.samples; ++s) vectors.push_back(sample_member(rng, d));
  }
  json report = json::object();
  report["vectors"] = json::array();
  std::vector<ExtVector> members;
  for (const auto& x : vectors) {
    if (x.size() != d.size()) throw InvalidInput("vector length does not match the model");
    const bool in_p = !all_pos_inf(x) && std::none_of(x.begin(), x.end(), [](const ExtReal& v) {
      return v.is_neg_inf();
    }) && is_member(x, d, Side::Lower);
    if (in_p) members.push_back(x);
    report["vectors"].push_back({{"x", vector_json(x)},
                                 {"memberP", in_p},
                                 {"isbell", isbell_member(d, x)},
                                 {"LR", vector_json(map_l(d, map_r(d, x)))}});
  }
  if (cfg.compare_span) {
    const auto closure = max_closure(members, d);
    json outside = json::array();
    for (const auto& x : closure)
      if (!isbell_member(d, x)) outside.push_back(vector_json(x));
    report["closure"] = {{"size", closure.size()}, {"outsideCompletion", outside}};
  }
  emit(cfg, report.dump(2) + "\n", out);
  return kOk;
}

// ---------------------------------------------------------------- embed

int cmd_embed(const Config& cfg, std::ostream& out) {
  if (cfg.sub.empty() || cfg.map.empty()) throw InvalidInput("embed needs --sub FILE and --map a,b,...");
  const auto big = read_model_input(cfg.model);
  const auto sub = read_model_input(cfg.sub);
  std::vector<std::size_t> mapping;
  for (const auto& name : split_list(cfg.map)) mapping.push_back(resolve_text(big.metric, name));
  const Embedding e = (big.plm && sub.plm) ? embed_model(*sub.plm, *big.plm, mapping)
                                          : embed_model(sub.metric, big.metric, mapping);
  out << "isometric embedding of " << sub.metric.size() << " texts into " << big.metric.size() << "\n";
  for (std::size_t a = 0; a < sub.metric.size(); ++a)
    out << "  " << sub.metric.label(a) << " -> " << big.metric.label(mapping[a]) << "  "
        << to_string(e.extend(yoneda(sub.metric, a))) << "\n";
  return kOk;
}

// ---------------------------------------------------------------- retract

int cmd_retract(const Config& cfg, std::ostream& out) {
  const auto in = read_model_input(cfg.model);
  const auto& d = in.metric;
  std::vector<std::size_t> subset;
  if (!cfg.subset.empty()) {
    for (const auto& name : split_list(cfg.subset)) subset.push_back(resolve_text(d, name));
  } else if (cfg.has_max_len) {
    if (!in.plm) throw InvalidInput("--max-len needs a model file with texts");
    for (std::size_t i = 0; i < in.plm->size(); ++i)
      if (in.plm->texts[i].size() <= cfg.max_len) subset.push_back(i);
  } else {
    throw InvalidInput("retract needs --subset w1,w2,... or --max-len K");
  }
  const auto r = retraction_from_subset(d, subset);

  std::vector<std::size_t> texts;
  if (!cfg.text.empty()) {
    texts.push_back(resolve_text(d, cfg.text));
  } else {
    for (std::size_t k = 0; k < d.size(); ++k) texts.push_back(k);
  }

  if (!cfg.has_temperature) {
    json list = json::array();
    for (auto k : texts) {
      const auto image = r.apply(yoneda(d, k));
      json entry = {{"text", d.label(k)}};
      if (!image) {
        entry["retracted"] = nullptr;
        entry["flag"] = "no overlap with the subset";
      } else {
        entry["retracted"] = vector_json(*image);
        entry["exact"] = mult_vector_json(*r.apply_exact(yoneda_q(d, k)), cfg.use_float);
      }
      list.push_back(entry);
    }
    emit(cfg, list.dump(2) + "\n", out);
    return kOk;
  }

  std::string csv = "text,coordinate,v,readback,min_plus\n";
  for (auto k : texts) {
    std::vector<BoltzmannTerm> terms;
    for (auto j : r.subset)
      if (!d.log(j, k).is_pos_inf()) terms.push_back({d.log(j, k), yoneda(d, j), d.prob(j, k), yoneda_q(d, j)});
    if (terms.empty()) continue;
    const auto res = boltzmann(terms, cfg.temperature);
    for (std::size_t i = 0; i < d.size(); ++i) {
      const std::string v = res.exact_v ? rational_text((*res.exact_v)[i], cfg.use_float) : decimal(res.v[i]);
      csv += d.label(k) + "," + d.label(i) + "," + v + "," + to_string_short(res.readback[i]) + "," +
             to_string_short(res.min_plus[i]) + "\n";
    }
  }
  emit(cfg, csv, out);
  return kOk;
}

// ---------------------------------------------------------------- ingest

int cmd_ingest(const Config& cfg, std::ostream& out) {
  if (!cfg.has_max_len) throw InvalidInput("ingest needs --max-len K");
  const auto mode = parse_order_mode(cfg.order_mode);
  if (mode == OrderMode::Explicit) throw InvalidInput("--order-mode must be one or two");
  const Plm m = ingest_corpus(tokenize(read_file(cfg.model)), mode, cfg.max_len, cfg.include_empty);
  emit(cfg, plm_to_json(m), out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Directed metrics, polyhedra and duality for probabilistic language models", "tropsem"};
  app.require_subcommand(1);
  Config cfg;

  auto model_arg = [&](CLI::App* sc, const char* what = "model or metric JSON file") {
    sc->add_option("model", cfg.model, what)->required();
  };
  auto out_opt = [&](CLI::App* sc) { sc->add_option("--out", cfg.out, "write output to PATH (atomic)"); };
  auto float_opt = [&](CLI::App* sc) { sc->add_flag("--float", cfg.use_float, "decimal instead of exact output"); };
  auto big_m_opt = [&](CLI::App* sc) {
    return sc->add_option("--big-m", cfg.big_m, "replace +inf distances by M");
  };

  auto* check = app.add_subcommand("check", "validate a model and its metric");
  model_arg(check);

  auto* rays = app.add_subcommand("rays", "extremal rays of Q(L) or its upper analogue");
  model_arg(rays);
  rays->add_option("--side", cfg.side, "lower|upper")->check(CLI::IsMember({"lower", "upper"}));
  rays->add_flag("--oracle", cfg.oracle, "cross-check against the double description oracle");
  auto* rays_big_m = big_m_opt(rays);
  rays->add_option("--csv", cfg.csv, "simplex-normalized vertices as CSV");
  out_opt(rays);
  float_opt(rays);

  auto* cross = app.add_subcommand("crosssection", "normalized vertices of the truncated cones");
  model_arg(cross);
  auto* cross_big_m = big_m_opt(cross);
  out_opt(cross);
  float_opt(cross);

  auto* dual = app.add_subcommand("dual", "negation pairing and duality formulas per text");
  model_arg(dual);

  auto* isbell = app.add_subcommand("isbell", "Isbell completion membership");
  model_arg(isbell);
  isbell->add_option("--vectors", cfg.vectors, "JSON array of vectors (default: sampled members)");
  isbell->add_option("--seed", cfg.seed, "sampling seed");
  isbell->add_option("--samples", cfg.samples, "number of sampled members");
  isbell->add_flag("--compare-span", cfg.compare_span, "report lattice-closure vectors outside the completion");
  out_opt(isbell);

  auto* embed = app.add_subcommand("embed", "check an isometric embedding of a sub-model");
  model_arg(embed, "big model file");
  embed->add_option("--sub", cfg.sub, "sub-model file")->required();
  embed->add_option("--map", cfg.map, "big-model texts for each sub text, comma separated")->required();

  auto* retract = app.add_subcommand("retract", "retraction onto the span of a subset of texts");
  model_arg(retract);
  retract->add_option("--subset", cfg.subset, "texts w1,w2,...");
  auto* retract_len = retract->add_option("--max-len", cfg.max_len, "subset = texts of at most K words");
  auto* retract_temp = retract->add_option("--temperature", cfg.temperature, "Boltzmann vectors at temperature T");
  retract->add_option("--text", cfg.text, "only this text");
  out_opt(retract);
  float_opt(retract);

  auto* ingest = app.add_subcommand("ingest", "model from the n-grams of a corpus file");
  model_arg(ingest, "corpus text file");
  auto* ingest_len = ingest->add_option("--max-len", cfg.max_len, "longest n-gram")->required();
  ingest->add_option("--order-mode", cfg.order_mode, "one|two")->check(CLI::IsMember({"one", "two"}));
  ingest->add_flag("--include-empty", cfg.include_empty, "add the empty text");
  out_opt(ingest);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kOk : kInputError;
  }
  cfg.has_big_m = rays_big_m->count() > 0 || cross_big_m->count() > 0;
  cfg.has_max_len = retract_len->count() > 0 || ingest_len->count() > 0;
  cfg.has_temperature = retract_temp->count() > 0;

  try {
    if (check->parsed()) return cmd_check(cfg, out);
    if (rays->parsed()) return cmd_rays(cfg, out, err);
    if (cross->parsed()) return cmd_crosssection(cfg, out, err);
    if (dual->parsed()) return cmd_dual(cfg, out);
    if (isbell->parsed()) return cmd_isbell(cfg, out);
    if (embed->parsed()) return cmd_embed(cfg, out);
    if (retract->parsed()) return cmd_retract(cfg, out);
    if (ingest->parsed()) return cmd_ingest(cfg, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << "\n";
    return kVerification;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResource;
  }
  return kInputError;
}

}  // namespace tropsem::cli
