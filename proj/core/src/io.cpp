#include "tropsem/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "tropsem/error.hpp"

namespace tropsem {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

Rational rational_of(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  throw InvalidInput("rationals must be strings such as \"1/2\"");
}

ExtReal ext_of(const json& v) {
  if (v.is_string()) return parse_ext_real(v.get<std::string>());
  if (v.is_number()) return ExtReal(v.get<double>());
  throw InvalidInput("extended reals must be numbers or \"inf\"/\"-inf\"");
}

std::size_t index_of(const json& v, std::size_t n, const char* what) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw InvalidInput(std::string(what) + " must be a nonnegative integer");
  const auto i = v.get<std::size_t>();
  if (i >= n) throw InvalidInput(std::string(what) + " index out of range");
  return i;
}

Plm plm_of(const json& j) {
  Plm m;
  if (!j.contains("texts") || !j["texts"].is_array()) throw InvalidInput("model file needs a \"texts\" array");
  for (const auto& t : j["texts"]) {
    Text text;
    if (t.is_string()) {
      std::istringstream is(t.get<std::string>());
      std::string tok;
      while (is >> tok) text.push_back(tok);
    } else if (t.is_array()) {
      for (const auto& tok : t) {
        if (!tok.is_string()) throw InvalidInput("tokens must be strings");
        text.push_back(tok.get<std::string>());
      }
    } else {
      throw InvalidInput("each text is a token array or a string");
    }
    m.texts.push_back(std::move(text));
  }
  m.mode = parse_order_mode(j.value("orderMode", std::string("two-sided")));
  m.extended_values = j.value("extendedValues", false);
  if (j.contains("pr")) {
    for (const auto& e : j["pr"]) {
      const auto from = index_of(e.at("from"), m.size(), "pr.from");
      const auto to = index_of(e.at("to"), m.size(), "pr.to");
      if (m.pr.count({from, to})) throw InvalidInput("duplicate pr entry");
      m.pr[{from, to}] = rational_of(e.at("p"));
    }
  }
  if (j.contains("includeEmpty") && j["includeEmpty"].get<bool>() != m.has_empty_text())
    throw InvalidInput("\"includeEmpty\" does not match the presence of an empty text");
  return m;
}

DirectedMetric metric_of(const json& j) {
  std::vector<std::string> labels = j.at("labels").get<std::vector<std::string>>();
  const std::size_t n = labels.size();
  const auto& rows = j.at("distances");
  if (!rows.is_array() || rows.size() != n) throw InvalidInput("\"distances\" must be an n x n array");
  auto log = Matrix<ExtReal>::square(n, ExtReal::pos_inf());
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) throw InvalidInput("\"distances\" must be an n x n array");
    for (std::size_t k = 0; k < n; ++k) log(i, k) = ext_of(rows[i][k]);
  }
  if (!j.contains("surrogates")) return DirectedMetric::from_log(std::move(labels), log);
  const auto& srows = j["surrogates"];
  if (!srows.is_array() || srows.size() != n) throw InvalidInput("\"surrogates\" must be an n x n array");
  auto prob = Matrix<Mult>::square(n, Mult::zero());
  for (std::size_t i = 0; i < n; ++i) {
    if (!srows[i].is_array() || srows[i].size() != n) throw InvalidInput("\"surrogates\" must be an n x n array");
    for (std::size_t k = 0; k < n; ++k) {
      const auto& v = srows[i][k];
      prob(i, k) = (v.is_string() && v.get<std::string>() == "inf") ? Mult::infinite() : Mult(rational_of(v));
    }
  }
  return DirectedMetric(std::move(labels), std::move(log), std::move(prob), false);
}

}  // namespace

ModelInput parse_model_input(const std::string& json_text) {
  const json j = parse_json(json_text);
  try {
    if (j.contains("texts")) {
      Plm m = plm_of(j);
      DirectedMetric d = metric_from_plm(m);
      return {std::move(m), std::move(d)};
    }
    if (j.contains("distances")) return {std::nullopt, metric_of(j)};
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("model file: ") + e.what());
  }
  throw InvalidInput("model file needs \"texts\" (model) or \"distances\" (metric)");
}

ModelInput read_model_input(const std::string& path) { return parse_model_input(read_file(path)); }

Plm parse_plm(const std::string& json_text) {
  try {
    return plm_of(parse_json(json_text));
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("model file: ") + e.what());
  }
}

std::string plm_to_json(const Plm& m, int indent) {
  nlohmann::ordered_json j;
  j["texts"] = nlohmann::ordered_json::array();
  for (const auto& t : m.texts) j["texts"].push_back(t);
  j["orderMode"] = to_string(m.mode);
  j["pr"] = nlohmann::ordered_json::array();
  for (const auto& [key, value] : m.pr)
    j["pr"].push_back({{"from", key.first}, {"to", key.second}, {"p", value.str()}});
  j["includeEmpty"] = m.has_empty_text();
  if (m.extended_values) j["extendedValues"] = true;
  return j.dump(indent) + "\n";
}

ExtVector parse_ext_vector(const std::string& json_text) {
  const json j = parse_json(json_text);
  if (!j.is_array()) throw InvalidInput("vector must be a JSON array");
  ExtVector out;
  for (const auto& v : j) out.push_back(ext_of(v));
  return out;
}

std::vector<ExtVector> parse_ext_vectors(const std::string& json_text) {
  const json j = parse_json(json_text);
  if (!j.is_array()) throw InvalidInput("vector list must be a JSON array");
  std::vector<ExtVector> out;
  for (const auto& row : j) out.push_back(parse_ext_vector(row.dump()));
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InvalidInput("cannot write '" + tmp.string() + "'");
    out << content;
    if (!out.flush()) throw InvalidInput("write failed for '" + tmp.string() + "'");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) throw InvalidInput("cannot move output into place: " + ec.message());
}

}  // namespace tropsem
