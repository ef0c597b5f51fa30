#include "wittknot/report.hpp"

#include <sstream>

#include <json.hpp>

namespace wittknot {

namespace {

using nlohmann::json;

json json_int(const BigInt& x) {
  if (x.fits_slong_p()) return json(x.get_si());
  return json(x.get_str());
}

json residue_json(const ResidueClass& r) {
  json j;
  j["p"] = json_int(r.prime());
  j["group"] = r.group_name();
  if (r.group() == ResidueGroup::Z2xZ2) {
    j["value"] = json::array({r.v1(), r.v2()});
  } else {
    j["value"] = r.v1();
  }
  return j;
}

}  // namespace

std::string Report::to_json() const {
  json j;
  j["name"] = name;
  if (category) j["category"] = to_string(*category);
  j["matrix_size"] = matrix_size;
  json gens = json::array();
  for (const BigInt& g : witt.generators()) gens.push_back(json_int(g));
  j["witt_generators"] = gens;
  j["signature"] = signature;
  j["determinant"] = json_int(determinant);
  LocalProfile lp = witt.local_profile();
  json primes = json::array();
  for (const BigInt& p : witt.support()) primes.push_back(json_int(p));
  j["relevant_primes"] = primes;
  json residues = json::array();
  for (const auto& [p, r] : lp.residues) residues.push_back(residue_json(r));
  j["residues"] = residues;
  if (order == WittOrder::infinite) {
    j["order"] = "infinite";
  } else {
    j["order"] = static_cast<int>(order);
  }
  if (alexander_poly) {
    json a = json::object();
    for (const auto& [k, c] : alexander_poly->coefficients()) {
      a[std::to_string(k)] = json_int(c);
    }
    j["alexander"] = a;
  }
  if (predicted) {
    j["predicted_order"] =
        predicted->order == WittOrder::infinite
            ? json("infinite")
            : json(static_cast<int>(predicted->order));
    j["rule"] = predicted->rule;
  }
  return j.dump(2);
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << name;
  if (category) out << "  [category " << to_string(*category) << "]";
  out << "\n";
  out << "  matrix size:  " << matrix_size << "\n";
  out << "  witt class:   ";
  if (witt.generators().empty()) {
    out << "0";
  } else {
    bool first = true;
    for (const BigInt& g : witt.generators()) {
      if (!first) out << " + ";
      out << "\u27e8" << g.get_str() << "\u27e9";
      first = false;
    }
  }
  out << "\n";
  out << "  signature:    " << signature << "\n";
  out << "  determinant:  " << determinant.get_str() << "\n";
  LocalProfile lp = witt.local_profile();
  out << "  residues:     ";
  if (lp.residues.empty()) {
    out << "all zero";
  } else {
    bool first = true;
    for (const auto& [p, r] : lp.residues) {
      if (!first) out << ", ";
      out << "d_" << p.get_str() << " = ";
      if (r.group() == ResidueGroup::Z2xZ2) {
        out << "(" << r.v1() << "," << r.v2() << ")";
      } else {
        out << r.v1();
      }
      out << " in " << r.group_name();
      first = false;
    }
  }
  out << "\n";
  out << "  order:        " << to_string(order) << "\n";
  if (alexander_poly) {
    out << "  alexander:    " << alexander_poly->to_string() << "\n";
  }
  if (predicted) {
    out << "  predicted:    " << to_string(predicted->order) << "  (rule "
        << predicted->rule << ")\n";
  }
  return out.str();
}

Report report_for(const PretzelKnot& k, bool with_alexander) {
  Report r;
  r.name = k.name();
  r.category = k.category();
  SeifertMatrix v = seifert_matrix(k);
  r.matrix_size = v.size();
  r.witt = witt_closed_form(k);
  r.signature = signature_closed_form(k);
  r.determinant = determinant_closed_form(k);
  r.order = r.witt.order();
  r.predicted = predicted_order(k);
  if (with_alexander) {
    r.alexander_poly = alexander(Knot(k.name(), std::move(v)));
  }
  return r;
}

Report report_for(const Knot& k, bool with_alexander) {
  Report r;
  r.name = k.name();
  r.matrix_size = k.size();
  r.witt = witt_class(k);
  r.signature = knot_signature(k);
  r.determinant = knot_determinant(k);
  r.order = r.witt.order();
  if (with_alexander) r.alexander_poly = alexander(k);
  return r;
}

}  // namespace wittknot
