#include "hofa/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace hofa {

namespace {

json complex_to_json(const cplx& v) { return json::array({v.real(), v.imag()}); }

cplx complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("json: complex value must be a [re, im] pair");
  return cplx{j[0].get<double>(), j[1].get<double>()};
}

std::vector<cplx> values_from_json(const json& j, std::int64_t expected, const char* what) {
  if (!j.is_array() || static_cast<std::int64_t>(j.size()) != expected)
    throw std::invalid_argument(std::string(what) + ": values length mismatch");
  std::vector<cplx> out;
  out.reserve(j.size());
  for (const json& v : j) out.push_back(complex_from_json(v));
  return out;
}

}  // namespace

json group_to_json(const FiniteAbelianGroup& g) {
  return json{{"factors", g.factors()}};
}

FiniteAbelianGroup group_from_json(const json& j, std::int64_t size_cap) {
  if (!j.contains("factors")) throw std::invalid_argument("json group: missing \"factors\"");
  return FiniteAbelianGroup::make(j.at("factors").get<std::vector<std::int64_t>>(), size_cap);
}

json function_to_json(const GroupFunction& f) {
  json values = json::array();
  for (const cplx& v : f.values) values.push_back(complex_to_json(v));
  return json{{"group", group_to_json(f.group)}, {"values", std::move(values)}};
}

GroupFunction function_from_json(const json& j, std::int64_t size_cap) {
  const FiniteAbelianGroup g = group_from_json(j.at("group"), size_cap);
  GroupFunction f{g, values_from_json(j.at("values"), g.order(), "json function")};
  return f;
}

json partition_to_json(const Partition& p) {
  return json{{"group", group_to_json(p.group())}, {"labels", p.labels()}};
}

Partition partition_from_json(const json& j, std::int64_t size_cap) {
  const FiniteAbelianGroup g = group_from_json(j.at("group"), size_cap);
  const auto labels = j.at("labels").get<std::vector<std::int32_t>>();
  return Partition::from_labels(g, labels);
}

namespace {

std::string monomial_key(const Monomial& m) {
  std::string key;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) key.push_back(',');
    key += std::to_string(m[i]);
  }
  return key;
}

Monomial monomial_from_key(const std::string& key, int n) {
  Monomial m;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, ',')) m.push_back(static_cast<std::int32_t>(std::stol(part)));
  if (static_cast<int>(m.size()) != n)
    throw std::invalid_argument("json phase: monomial key arity mismatch");
  return m;
}

}  // namespace

json phase_to_json(const PolynomialPhase& phi) {
  json coeffs = json::object();
  for (const auto& [mono, c] : phi.coeffs) coeffs[monomial_key(mono)] = c;
  return json{{"p", phi.p}, {"n", phi.n}, {"coeffs", std::move(coeffs)}};
}

PolynomialPhase phase_from_json(const json& j) {
  const std::int64_t p = j.at("p").get<std::int64_t>();
  const int n = j.at("n").get<int>();
  std::map<Monomial, std::int64_t, MonomialLess> coeffs;
  for (const auto& [key, value] : j.at("coeffs").items()) {
    coeffs[monomial_from_key(key, n)] = value.get<std::int64_t>();
  }
  return make_phase(p, n, std::move(coeffs));
}

json kernel_to_json(const Kernel& k) {
  json values = json::array();
  for (const cplx& v : k.values) values.push_back(complex_to_json(v));
  return json{{"group", group_to_json(k.group)}, {"values", std::move(values)}};
}

Kernel kernel_from_json(const json& j, std::int64_t size_cap) {
  const FiniteAbelianGroup g = group_from_json(j.at("group"), size_cap);
  Kernel k{g, values_from_json(j.at("values"), g.order() * g.order(), "json kernel")};
  return k;
}

json term_to_json(const FiniteAbelianGroup& g, const DecompositionTerm& term) {
  json out;
  if (const auto* freq = std::get_if<FrequencyLabel>(&term.label)) {
    out["kind"] = "frequency";
    out["xi"] = g.index_of(freq->xi);
  } else {
    out["kind"] = "phase";
    out["phase"] = phase_to_json(std::get<PolynomialPhase>(term.label));
  }
  out["coefficient"] = complex_to_json(term.coefficient);
  return out;
}

json decomposition_to_json(const DecompositionResult& r) {
  json terms = json::array();
  for (const DecompositionTerm& t : r.terms) terms.push_back(term_to_json(r.residual.group, t));
  json residual_values = json::array();
  for (const cplx& v : r.residual.values) residual_values.push_back(complex_to_json(v));
  return json{{"terms", std::move(terms)},
              {"residual", json{{"group", group_to_json(r.residual.group)},
                                {"values", std::move(residual_values)}}},
              {"residual_l2", l2_norm(r.residual)},
              {"residual_gowers", r.residual_gowers},
              {"iterations", r.iterations},
              {"max_iter_exhausted", r.max_iter_exhausted}};
}

namespace {

void dump_rec(const json& j, std::string& out) {
  switch (j.type()) {
    case json::value_t::null:
      out += "null";
      return;
    case json::value_t::boolean:
      out += j.get<bool>() ? "true" : "false";
      return;
    case json::value_t::number_integer:
      out += std::to_string(j.get<std::int64_t>());
      return;
    case json::value_t::number_unsigned:
      out += std::to_string(j.get<std::uint64_t>());
      return;
    case json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) throw std::invalid_argument("canonical_dump: non-finite number");
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.17g", v);
      out += buf;
      return;
    }
    case json::value_t::string:
      out += json(j.get<std::string>()).dump();
      return;
    case json::value_t::array: {
      out.push_back('[');
      bool first = true;
      for (const json& v : j) {
        if (!first) out.push_back(',');
        first = false;
        dump_rec(v, out);
      }
      out.push_back(']');
      return;
    }
    case json::value_t::object: {
      out.push_back('{');
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {  // nlohmann objects iterate key-sorted
        if (!first) out.push_back(',');
        first = false;
        out += json(it.key()).dump();
        out.push_back(':');
        dump_rec(it.value(), out);
      }
      out.push_back('}');
      return;
    }
    default:
      throw std::invalid_argument("canonical_dump: unsupported value type");
  }
}

}  // namespace

std::string canonical_dump(const json& j) {
  std::string out;
  dump_rec(j, out);
  return out;
}

}  // namespace hofa
