#include "gbke/json_io.hpp"

#include "gbke/errors.hpp"

#include <fstream>

namespace gbke {

json ring_to_json(const RingContext& ring) {
  return {{"n", ring.num_vars()}, {"field", ring.field().to_string()}, {"vars", ring.var_names()}};
}

Ring ring_from_json(const json& j) {
  try {
    auto vars = j.at("vars").get<std::vector<std::string>>();
    if (j.contains("n") && j.at("n").get<std::size_t>() != vars.size())
      throw DomainError("ring n does not match the variable list");
    return make_ring(Field::parse(j.at("field").get<std::string>()), std::move(vars));
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed ring JSON: ") + e.what());
  }
}

json polynomial_to_json(const Polynomial& p) {
  json out = json::array();
  const Field& k = p.ring()->field();
  for (const auto& t : p.terms()) out.push_back(json::array({k.format(t.coeff), t.exp}));
  return out;
}

Polynomial polynomial_from_json(const Ring& ring, const json& j) {
  try {
    std::vector<Term> terms;
    for (const auto& t : j) {
      Exponent e = t.at(1).get<Exponent>();
      if (e.size() != ring->num_vars()) throw DomainError("exponent length does not match the ring");
      terms.push_back({ring->field().parse_element(t.at(0).get<std::string>()), std::move(e)});
    }
    return Polynomial(ring, std::move(terms));
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed polynomial JSON: ") + e.what());
  }
}

json ugb_to_json(const UniversalBasis& U) {
  json polys = json::array();
  for (const auto& f : U.elements()) polys.push_back(polynomial_to_json(f));
  return {{"ring", ring_to_json(*U.ring())}, {"polynomials", polys}, {"provenance", U.provenance()}};
}

UniversalBasis ugb_from_json(const json& j) {
  try {
    Ring ring = ring_from_json(j.at("ring"));
    std::vector<Polynomial> elems;
    for (const auto& p : j.at("polynomials")) elems.push_back(polynomial_from_json(ring, p));
    return UniversalBasis(ring, std::move(elems), j.value("provenance", std::string()));
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed universal basis JSON: ") + e.what());
  }
}

json weight_to_json(const WeightVector& w) {
  json out = json::array();
  for (const auto& x : w) {
    if (x.fits_slong_p())
      out.push_back(x.get_si());
    else
      out.push_back(x.get_str());
  }
  return out;
}

WeightVector weight_from_json(const json& j) {
  WeightVector w;
  for (const auto& x : j) {
    if (x.is_number_integer())
      w.emplace_back(static_cast<long>(x.get<long long>()));
    else
      w.emplace_back(x.get<std::string>());
  }
  return w;
}

json keylist_to_json(const RingContext& ring, const KeyList& keys) {
  json out = json::array();
  for (std::size_t i = 0; i < keys.keys.size(); ++i) {
    const auto& k = keys.keys[i];
    json gens = json::array(), exps = json::array();
    for (const auto& m : k.gens.monomials) {
      gens.push_back(format_monomial(ring, m));
      exps.push_back(m);
    }
    json entry = {{"gens", gens},
                  {"exponents", exps},
                  {"k_bound", k.k_bound},
                  {"eta_raw", k.eta_raw},
                  {"key_hex", to_hex(k.key_bytes)}};
    if (i < keys.witness_weights.size() && keys.witness_weights[i])
      entry["witness_w"] = weight_to_json(*keys.witness_weights[i]);
    else
      entry["witness_w"] = nullptr;
    out.push_back(std::move(entry));
  }
  return out;
}

KeyList keylist_from_json(const RingContext& ring, const json& j) {
  try {
    KeyList list;
    for (const auto& e : j) {
      MonomialSet gens;
      for (const auto& m : e.at("exponents")) {
        Exponent x = m.get<Exponent>();
        if (x.size() != ring.num_vars()) throw DomainError("key exponent length mismatch");
        gens.monomials.push_back(std::move(x));
      }
      gens.minimal = true;
      GrobnerKey key = canonical_key(gens, e.at("k_bound").get<std::uint32_t>());
      if (key.eta_raw != e.at("eta_raw").get<std::string>() ||
          to_hex(key.key_bytes) != e.at("key_hex").get<std::string>())
        throw DomainError("key list entry is inconsistent with its generators");
      list.keys.push_back(std::move(key));
      if (e.contains("witness_w") && !e.at("witness_w").is_null())
        list.witness_weights.emplace_back(weight_from_json(e.at("witness_w")));
      else
        list.witness_weights.emplace_back(std::nullopt);
    }
    return list;
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed key list JSON: ") + e.what());
  }
}

json order_to_json(const MonomialOrder& o) {
  switch (o.kind()) {
    case MonomialOrder::Kind::Lex:
      return {{"kind", "lex"}, {"perm", o.perm()}};
    case MonomialOrder::Kind::Grevlex:
      return {{"kind", "grevlex"}, {"perm", o.perm()}};
    case MonomialOrder::Kind::Weight: {
      WeightVector w(o.weights().begin(), o.weights().end());
      return {{"kind", "weight"}, {"perm", o.perm()}, {"weights", weight_to_json(w)}};
    }
  }
  return {};
}

MonomialOrder order_from_json(const json& j) {
  try {
    const auto kind = j.at("kind").get<std::string>();
    auto perm = j.at("perm").get<std::vector<std::size_t>>();
    if (kind == "lex") return MonomialOrder::lex(std::move(perm));
    if (kind == "grevlex") return MonomialOrder::grevlex(std::move(perm));
    if (kind == "weight") {
      std::vector<mpq_class> w;
      for (const auto& x : weight_from_json(j.at("weights"))) w.emplace_back(x);
      return MonomialOrder::weight(w, std::move(perm));
    }
    throw DomainError("unknown order kind '" + kind + "'");
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed order JSON: ") + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw DomainError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace gbke
