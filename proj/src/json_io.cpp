#include "cybe/json_io.hpp"

#include <fstream>

#include "cybe/errors.hpp"

namespace cybe {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

FieldPtr default_extension(std::uint64_t p) {
  const FieldPtr base = Field::prime(p);
  const FieldEnumeration elems = enumerate_field(base);
  for (std::uint64_t c1 = 0; c1 < p; ++c1)
    for (std::uint64_t c0 = 0; c0 < p; ++c0) {
      try {
        return Field::quadratic(base, elems.at(c0), elems.at(c1));
      } catch (const Error&) {
        continue;
      }
    }
  throw Error("no irreducible quadratic over GF(" + std::to_string(p) + ")");
}

Scalar scalar_from_json(const Json& j, const FieldPtr& f) {
  if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
  if (j.is_number_integer()) return Scalar::of(f, j.get<long long>());
  throw ParseError("scalar values must be strings or integers, got " + j.dump());
}

}  // namespace

FieldPtr parse_field_spec(const std::string& spec) {
  if (spec == "q") return Field::rationals();
  auto parse_modulus = [&](const std::string& text, const FieldPtr& base) {
    const std::string prefix = "modulus=";
    if (text.rfind(prefix, 0) != 0)
      throw ParseError("field spec '" + spec + "': expected 'modulus=c0,c1'");
    const auto parts = split(text.substr(prefix.size()), ',');
    if (parts.size() != 2)
      throw ParseError("field spec '" + spec + "': modulus needs two coefficients");
    return Field::quadratic(base, Scalar::parse(base, parts[0]), Scalar::parse(base, parts[1]));
  };
  if (spec.rfind("q^2", 0) == 0) {
    if (spec == "q^2") throw ParseError("q^2 requires an explicit modulus");
    if (spec.size() > 4 && spec[3] == ':') return parse_modulus(spec.substr(4), Field::rationals());
    throw ParseError("malformed field spec '" + spec + "'");
  }
  if (spec.rfind("gf:", 0) == 0) {
    const std::string rest = spec.substr(3);
    const std::size_t caret = rest.find('^');
    if (caret == std::string::npos) {
      return Field::prime(std::stoull(rest));
    }
    const std::uint64_t p = std::stoull(rest.substr(0, caret));
    const std::string after = rest.substr(caret + 1);
    if (after == "2") return default_extension(p);
    if (after.rfind("2:", 0) == 0) return parse_modulus(after.substr(2), Field::prime(p));
    throw ParseError("malformed field spec '" + spec + "': only degree-2 extensions exist");
  }
  throw ParseError("unknown field spec '" + spec + "' (use q, gf:p, gf:p^2[:modulus=c0,c1])");
}

Json field_to_json(const FieldPtr& f) {
  switch (f->kind()) {
    case FieldKind::Rationals:
      return Json{{"kind", "rationals"}};
    case FieldKind::PrimeField:
      return Json{{"kind", "gf"}, {"p", f->p()}};
    case FieldKind::QuadraticExtension: {
      const auto [c0, c1] = f->modulus();
      return Json{{"kind", "extension"},
                  {"base", field_to_json(f->base())},
                  {"modulus", Json::array({c0.str(), c1.str()})}};
    }
  }
  throw Error("unreachable");
}

FieldPtr field_from_json(const Json& j) {
  if (j.is_string()) return parse_field_spec(j.get<std::string>());
  if (!j.is_object() || !j.contains("kind")) throw ParseError("field document needs a 'kind'");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "rationals" || kind == "q") return Field::rationals();
  if (kind == "gf" || kind == "prime") return Field::prime(j.at("p").get<std::uint64_t>());
  if (kind == "extension" || kind == "ext") {
    const FieldPtr base = field_from_json(j.at("base"));
    const auto& mod = j.at("modulus");
    if (!mod.is_array() || mod.size() != 2)
      throw ParseError("extension modulus must be [c0, c1]");
    return Field::quadratic(base, scalar_from_json(mod[0], base), scalar_from_json(mod[1], base));
  }
  throw ParseError("unknown field kind '" + kind + "'");
}

AlgebraInput algebra_from_json(const Json& j, const FieldPtr& fallback_field) {
  AlgebraInput out;
  if (j.contains("field"))
    out.field = field_from_json(j.at("field"));
  else if (fallback_field)
    out.field = fallback_field;
  else
    throw ParseError("algebra document has no 'field' and none was given");

  if (j.contains("canonical")) {
    const auto& c = j.at("canonical");
    out.canonical = CanonicalParams{
        scalar_from_json(c.at("alpha"), out.field), scalar_from_json(c.at("beta"), out.field),
        scalar_from_json(c.at("gamma"), out.field), scalar_from_json(c.at("delta"), out.field)};
    return out;
  }
  if (!j.contains("structure")) throw ParseError("algebra document needs 'canonical' or 'structure'");
  const int dim = j.value("dim", 3);
  const std::size_t n = static_cast<std::size_t>(dim);
  std::vector<Scalar> tableau(n * n * n, Scalar::zero(out.field));
  std::vector<bool> given(n * n, false);
  for (const auto& entry : j.at("structure")) {
    if (!entry.is_array() || entry.size() != 3)
      throw ParseError("structure entries must be [i, j, [coeffs...]]");
    const int i = entry[0].get<int>() - 1;
    const int jj = entry[1].get<int>() - 1;
    if (i < 0 || i >= dim || jj < 0 || jj >= dim)
      throw ParseError("structure entry index out of range");
    const auto& coeffs = entry[2];
    if (!coeffs.is_array() || coeffs.size() != n)
      throw ParseError("structure entry needs " + std::to_string(dim) + " coefficients");
    for (int m = 0; m < dim; ++m)
      tableau[(static_cast<std::size_t>(i) * n + static_cast<std::size_t>(jj)) * n +
              static_cast<std::size_t>(m)] = scalar_from_json(coeffs[static_cast<std::size_t>(m)], out.field);
    given[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(jj)] = true;
  }
  for (int i = 0; i < dim; ++i)
    for (int jj = 0; jj < dim; ++jj) {
      if (!given[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(jj)]) continue;
      if (given[static_cast<std::size_t>(jj) * n + static_cast<std::size_t>(i)]) continue;
      for (int m = 0; m < dim; ++m)
        tableau[(static_cast<std::size_t>(jj) * n + static_cast<std::size_t>(i)) * n +
                static_cast<std::size_t>(m)] =
            -tableau[(static_cast<std::size_t>(i) * n + static_cast<std::size_t>(jj)) * n +
                     static_cast<std::size_t>(m)];
    }
  out.algebra = LieAlgebra::make(out.field, dim, std::move(tableau));
  return out;
}

namespace {

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

}  // namespace

AlgebraInput parse_algebra_spec(const std::string& spec, const FieldPtr& field) {
  const std::string prefix = "canonical:";
  if (spec.rfind(prefix, 0) == 0) {
    if (!field) throw ParseError("inline canonical parameters need --field");
    const auto parts = split(spec.substr(prefix.size()), ',');
    if (parts.size() != 4)
      throw ParseError("canonical parameters need four values: canonical:a,b,g,d");
    AlgebraInput out;
    out.field = field;
    out.canonical = CanonicalParams{Scalar::parse(field, parts[0]), Scalar::parse(field, parts[1]),
                                    Scalar::parse(field, parts[2]), Scalar::parse(field, parts[3])};
    return out;
  }
  const std::string path = spec.rfind('@', 0) == 0 ? spec.substr(1) : spec;
  return algebra_from_json(load_json_file(path), field);
}

Tensor2 tensor_from_json(const Json& j, const FieldPtr& field) {
  if (j.contains("coefficients")) {
    const auto& rows = j.at("coefficients");
    if (!rows.is_array() || rows.empty()) throw ParseError("'coefficients' must be a matrix");
    const int dim = static_cast<int>(rows.size());
    std::vector<Scalar> entries;
    for (const auto& row : rows) {
      if (!row.is_array() || static_cast<int>(row.size()) != dim)
        throw ParseError("'coefficients' must be a square matrix");
      for (const auto& cell : row) entries.push_back(scalar_from_json(cell, field));
    }
    return Tensor2::from_entries(field, dim, std::move(entries));
  }
  static const char* alias[9] = {"x", "p", "s", "q", "y", "u", "t", "v", "z"};
  std::vector<Scalar> entries(9, Scalar::zero(field));
  for (int i = 0; i < 9; ++i)
    if (j.contains(alias[i])) entries[static_cast<std::size_t>(i)] = scalar_from_json(j.at(alias[i]), field);
  return Tensor2::from_entries(field, 3, std::move(entries));
}

Tensor2 parse_tensor_spec(const std::string& spec, const FieldPtr& field) {
  if (!field) throw ParseError("tensors need a field");
  if (spec == "0") return Tensor2::zero(field, 3);
  if (spec.find('=') != std::string::npos) {
    Json aliases = Json::object();
    for (const auto& part : split(spec, ',')) {
      const std::size_t eq = part.find('=');
      if (eq == std::string::npos || eq == 0)
        throw ParseError("tensor entry '" + part + "' is not name=value");
      aliases[part.substr(0, eq)] = part.substr(eq + 1);
    }
    for (auto& [key, value] : aliases.items()) {
      static const std::string known = "xyzpqstuv";
      if (key.size() != 1 || known.find(key) == std::string::npos)
        throw ParseError("unknown tensor alias '" + key + "' (use x,y,z,p,q,s,t,u,v)");
      (void)value;
    }
    return tensor_from_json(aliases, field);
  }
  const std::string path = spec.rfind('@', 0) == 0 ? spec.substr(1) : spec;
  return tensor_from_json(load_json_file(path), field);
}

Json params_to_json(const CanonicalParams& p) {
  return Json{{"alpha", p.alpha.str()},
              {"beta", p.beta.str()},
              {"gamma", p.gamma.str()},
              {"delta", p.delta.str()}};
}

CanonicalParams params_from_json(const Json& j, const FieldPtr& field) {
  if (j.is_array()) {
    if (j.size() != 4) throw ParseError("parameter tuples are [alpha, beta, gamma, delta]");
    return {scalar_from_json(j[0], field), scalar_from_json(j[1], field),
            scalar_from_json(j[2], field), scalar_from_json(j[3], field)};
  }
  return {scalar_from_json(j.at("alpha"), field), scalar_from_json(j.at("beta"), field),
          scalar_from_json(j.at("gamma"), field), scalar_from_json(j.at("delta"), field)};
}

Json verdict_to_json(const Verdict& v) {
  Json failed = Json::array();
  for (const auto& f : v.failed) failed.push_back(Json{{"name", f.name}, {"value", f.value.str()}});
  return Json{{"solution", v.is_solution}, {"family", family_name(v.family)}, {"failed", failed}};
}

Json axioms_to_json(const AxiomReport& a) {
  return Json{{"cocycle", a.cocycle},
              {"co_antisymmetry", a.co_antisymmetry},
              {"co_jacobi", a.co_jacobi},
              {"cybe", a.cybe}};
}

Json bialgebra_verdict_to_json(const BialgebraVerdict& v) {
  return Json{{"coboundary", v.coboundary},
              {"triangular", v.triangular},
              {"axioms", axioms_to_json(v.axioms)},
              {"form_value", v.form_value.str()}};
}

namespace {

Json matrix3_to_json(const Matrix3& m) {
  Json rows = Json::array();
  for (int r = 0; r < 3; ++r) {
    Json row = Json::array();
    for (int c = 0; c < 3; ++c) row.push_back(m.at(r, c).str());
    rows.push_back(row);
  }
  return rows;
}

Json matrix2_to_json(const Matrix2& m) {
  Json rows = Json::array();
  for (int r = 0; r < 2; ++r) {
    Json row = Json::array();
    for (int c = 0; c < 2; ++c) row.push_back(m.at(r, c).str());
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

Json recognition_to_json(const Recognition& r) {
  return Json{{"basis", matrix3_to_json(r.basis)}, {"params", params_to_json(r.params)}};
}

Json eigenform_to_json(const EigenForm& e) {
  return Json{{"case", eigen_case_name(e.tag)},
              {"field", field_to_json(e.coeff_field)},
              {"lambda1", e.lambda1.str()},
              {"lambda2", e.lambda2.str()},
              {"D", matrix2_to_json(e.d)},
              {"Q", matrix3_to_json(e.q)},
              {"beta_prime", e.beta_prime.str()},
              {"delta_prime", e.delta_prime.str()}};
}

Json report_to_json(const FieldPtr& field, TensorFilter filter, const std::string& predicate,
                    const EquivalenceReport& rep) {
  Json mismatches = Json::array();
  for (const auto& m : rep.mismatches) {
    Json rows = Json::array();
    for (int r = 0; r < 3; ++r) {
      Json row = Json::array();
      for (int c = 0; c < 3; ++c) row.push_back(m.tensor.at(r, c).str());
      rows.push_back(row);
    }
    mismatches.push_back(Json{{"params", params_to_json(m.params)},
                              {"tensor", rows},
                              {"oracle", m.oracle_solution},
                              {"predicate", m.predicate_solution}});
  }
  Json per_tuple = Json::array();
  for (const auto& t : rep.per_tuple)
    per_tuple.push_back(Json{{"params", params_to_json(t.params)},
                             {"total", t.total},
                             {"oracle", t.oracle},
                             {"predicate", t.predicate}});
  return Json{{"field", field->to_string()},
              {"filter", tensor_filter_name(filter)},
              {"predicate", predicate},
              {"tuples", rep.per_tuple.size()},
              {"tensors_per_tuple", rep.per_tuple.empty() ? 0 : rep.per_tuple.front().total},
              {"total", rep.total},
              {"oracle", rep.oracle_solutions},
              {"predicate_solutions", rep.predicate_solutions},
              {"mismatch_count", rep.mismatch_count},
              {"mismatches", mismatches},
              {"per_tuple", per_tuple}};
}

}  // namespace cybe
