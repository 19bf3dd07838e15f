#include "heisfock/json_io.hpp"

#include "heisfock/errors.hpp"

namespace heisfock::json {

namespace {

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed ") + what + ": " + e.what());
  }
}

Rational decode_rational(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(static_cast<long>(j.get<long long>())));
  throw Error(ErrorKind::InvalidInput, "expected a rational string, got " + j.dump());
}

}  // namespace

json encode(const Partition& p) { return json(p.vec()); }

json encode(const VirtualRep& rep) {
  json terms = json::array();
  for (const auto& [mu, mult] : rep.terms()) terms.push_back({{"mu", encode(mu)}, {"mult", mult}});
  return {{"n", rep.degree()}, {"terms", terms}};
}

json encode(const SymFunc& f) {
  json terms = json::array();
  for (const auto& [mu, c] : f.terms()) terms.push_back({{"mu", encode(mu)}, {"coeff", format_rational(c)}});
  return {{"basis", to_string(f.basis())}, {"terms", terms}};
}

json encode(const LaurentScalar& s) {
  json monomials = json::array();
  for (const auto& [e, c] : s.terms()) monomials.push_back({{"vexp", format_rational(e)}, {"c", format_rational(c)}});
  return {{"monomials", monomials}};
}

json encode(const FockVector& x) {
  json terms = json::array();
  for (const auto& [mu, c] : x.terms()) terms.push_back({{"mu", encode(mu)}, {"coeff", encode(c)}});
  return {{"terms", terms}};
}

json encode(const SimpleLabel& label) { return {{"eta", encode(label.eta)}, {"m", format_rational(label.m)}}; }

json encode(const LabelMultiset& labels) {
  json out = json::array();
  for (const auto& image : labels) {
    json entry = encode(image.label);
    entry["mult"] = image.multiplicity;
    out.push_back(entry);
  }
  return out;
}

json encode(const CharacterTable& table) {
  json irreps = json::array();
  for (const auto& p : table.irreps) irreps.push_back(encode(p));
  json classes = json::array();
  for (const auto& p : table.classes) classes.push_back(encode(p));
  return {{"n", table.n}, {"irreps", irreps}, {"classes", classes}, {"values", table.values}};
}

json encode(const HilbertSeries& series) {
  json coeffs = json::array();
  for (const auto& c : series.coeffs) coeffs.push_back(c.get_str());
  return {{"shift", format_rational(series.shift)}, {"coeffs", coeffs}};
}

json encode(const StabilityInterval& interval) {
  return {{"lo", interval.lo ? json(std::to_string(*interval.lo)) : json("-inf")},
          {"hi", interval.hi ? json(std::to_string(*interval.hi)) : json("+inf")}};
}

json encode(const BlockId& block) { return {{"alpha", block.alpha}, {"sigma", format_rational(block.sigma)}}; }

json encode(const std::vector<SupportStratum>& strata) {
  json out = json::array();
  for (const auto& s : strata) out.push_back({{"k", s.k}, {"l", s.l}, {"dim", s.dim}});
  return out;
}

Partition decode_partition(const json& j) {
  return guarded("partition", [&] {
    if (!j.is_array()) throw Error(ErrorKind::InvalidInput, "a partition is a JSON array, got " + j.dump());
    for (const auto& part : j) {
      if (!part.is_number_integer()) throw Error(ErrorKind::InvalidInput, "partition parts must be integers, got " + j.dump());
    }
    return Partition(j.get<std::vector<int>>());
  });
}

VirtualRep decode_virtual_rep(const json& j) {
  return guarded("virtual representation", [&] {
    VirtualRep rep(j.at("n").get<int>());
    for (const auto& t : j.at("terms")) rep.add(decode_partition(t.at("mu")), t.at("mult").get<long long>());
    return rep;
  });
}

SymFunc decode_symfunc(const json& j) {
  return guarded("symmetric function", [&] {
    const std::string basis = j.value("basis", "schur");
    if (basis != "schur" && basis != "powersum") throw Error(ErrorKind::InvalidInput, "unknown basis " + basis);
    SymFunc f(basis == "schur" ? Basis::Schur : Basis::PowerSum);
    for (const auto& t : j.at("terms")) f.add_term(decode_partition(t.at("mu")), decode_rational(t.at("coeff")));
    return f;
  });
}

LaurentScalar decode_laurent(const json& j) {
  return guarded("Laurent scalar", [&] {
    if (j.is_string() || j.is_number_integer()) return LaurentScalar(decode_rational(j));
    LaurentScalar s;
    for (const auto& m : j.at("monomials")) s.add_term(decode_rational(m.at("vexp")), decode_rational(m.at("c")));
    return s;
  });
}

FockVector decode_fock(const json& j) {
  return guarded("Fock vector", [&] {
    FockVector x;
    for (const auto& t : j.at("terms")) x.add_term(decode_partition(t.at("mu")), decode_laurent(t.at("coeff")));
    return x;
  });
}

SimpleLabel decode_label(const json& j) {
  return guarded("label", [&] { return SimpleLabel{decode_partition(j.at("eta")), decode_rational(j.at("m"))}; });
}

CharacterTable decode_character_table(const json& j) {
  return guarded("character table", [&] {
    CharacterTable table;
    table.n = j.at("n").get<int>();
    for (const auto& p : j.at("irreps")) table.irreps.push_back(decode_partition(p));
    for (const auto& p : j.at("classes")) table.classes.push_back(decode_partition(p));
    table.values = j.at("values").get<std::vector<std::vector<long long>>>();
    return table;
  });
}

}  // namespace heisfock::json
