#include "sugra47/io.hpp"

#include "sugra47/errors.hpp"

namespace sugra47 {

Json scalar_to_json(const Scalar& s) {
  if (s.exact()) return s.str();
  return s.value();
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(static_cast<long long>(j.get<std::int64_t>()));
  if (j.is_number_float()) return Scalar::of_double(j.get<double>());
  throw structural_error("scalar: expected string or number, got " + j.dump());
}

Json kform_to_json(const KForm& a) {
  Json j;
  j["degree"] = a.degree();
  Json terms = Json::array();
  for (const auto& [m, c] : a.terms()) {
    Json t;
    Json idx = Json::array();
    for (int i : mask_indices(m)) idx.push_back(i + 1);
    t["indices"] = idx;
    t["coeff"] = scalar_to_json(c);
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j;
}

KForm kform_from_json(const Json& j, const Frame& frame) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("terms"))
    throw structural_error("kform: expected {degree, terms}");
  KForm a(frame, j.at("degree").get<int>());
  for (const auto& t : j.at("terms")) {
    std::vector<int> idx0;
    int prev = 0;
    for (const auto& i : t.at("indices")) {
      int v = i.get<int>();
      if (v < 1 || v > frame.dim())
        throw structural_error("kform: index " + std::to_string(v) + " out of range");
      if (v <= prev) throw structural_error("kform: indices must be strictly ascending");
      prev = v;
      idx0.push_back(v - 1);
    }
    a.add_term(mask_of_indices(idx0), scalar_from_json(t.at("coeff")));
  }
  return a;
}

Json flux_to_json(const FluxForm& fl) {
  Json j;
  j["f"] = scalar_to_json(fl.f);
  j["F7"] = kform_to_json(fl.f7);
  return j;
}

FluxForm flux_from_json(const Json& j, const ProductFrame& pf) {
  return FluxForm(pf, scalar_from_json(j.at("f")), kform_from_json(j.at("F7"), pf.right()));
}

Json lie_to_json(const LieAlgebraData& g) {
  Json j;
  j["dim"] = g.dim();
  j["labels"] = g.labels();
  Json brackets = Json::array();
  for (int i = 0; i < g.dim(); ++i)
    for (int jj = i + 1; jj < g.dim(); ++jj) {
      auto vec = g.bracket_basis(i, jj);
      if (vec.empty()) continue;
      Json b;
      b["i"] = i + 1;
      b["j"] = jj + 1;
      Json coeffs;
      for (const auto& [k, c] : vec) coeffs[std::to_string(k + 1)] = scalar_to_json(c);
      b["coeffs"] = coeffs;
      brackets.push_back(b);
    }
  j["brackets"] = brackets;
  return j;
}

LieAlgebraData lie_from_json(const Json& j) {
  int dim = j.at("dim").get<int>();
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  std::vector<std::tuple<int, int, int, Scalar>> triples;
  if (j.contains("brackets"))
    for (const auto& b : j.at("brackets")) {
      int i = b.at("i").get<int>() - 1;
      int jj = b.at("j").get<int>() - 1;
      for (const auto& [key, val] : b.at("coeffs").items())
        triples.emplace_back(i, jj, std::stoi(key) - 1, scalar_from_json(val));
    }
  return LieAlgebraData(dim, std::move(labels), triples);
}

Json dga_to_json(const CoframeDGA& dga) {
  Json j;
  j["generators"] = dga.names();
  Json d = Json::array();
  for (int i = 0; i < dga.generators(); ++i) {
    Json e;
    e["gen"] = dga.names()[static_cast<std::size_t>(i)];
    e["two_form"] = kform_to_json(dga.d_generator(i));
    d.push_back(e);
  }
  j["d"] = d;
  return j;
}

CoframeDGA dga_from_json(const Json& j) {
  auto names = j.at("generators").get<std::vector<std::string>>();
  Frame fr = Frame::euclidean(static_cast<int>(names.size()));
  fr.set_labels(names);
  std::vector<KForm> d(names.size(), KForm(fr, 2));
  if (!j.contains("d")) throw structural_error("coframe_dga: missing d table");
  for (const auto& e : j.at("d")) {
    std::string gen = e.at("gen").get<std::string>();
    auto it = std::find(names.begin(), names.end(), gen);
    if (it == names.end()) throw structural_error("coframe_dga: unknown generator '" + gen + "'");
    d[static_cast<std::size_t>(it - names.begin())] = kform_from_json(e.at("two_form"), fr);
  }
  return CoframeDGA(names, std::move(d));
}

Json orbit_to_json(const OrbitClass& oc) {
  Json j;
  j["class"] = orbit_tag_name(oc.tag);
  j["detB"] = scalar_to_json(oc.det_b);
  j["signature"] = Json::array({oc.sig_p, oc.sig_q});
  j["signatureB"] = Json::array({oc.sig_b_p, oc.sig_b_q});
  if (oc.near_zero_warning) j["near_zero_warning"] = true;
  return j;
}

Json background_report_to_json(const BackgroundReport& rep) {
  Json j;
  j["closure_residual"] = scalar_to_json(rep.closure_residual);
  j["maxwell_residual"] = scalar_to_json(rep.maxwell_residual);
  j["einstein_residual"] = scalar_to_json(rep.einstein_residual);
  j["maxwell_ok"] = rep.maxwell_ok;
  j["einstein_ok"] = rep.einstein_ok;
  j["phi_norm2"] = scalar_to_json(rep.phi_norm2);
  j["f"] = scalar_to_json(rep.f);
  j["lambda"] = scalar_to_json(rep.lambda);
  if (rep.type) {
    j["type"] = solution_tag_name(rep.type->tag);
    j["genericity"] = orbit_to_json(rep.type->genericity);
  }
  j["crosscheck_residual"] = scalar_to_json(rep.crosscheck_residual);
  j["crosscheck_ok"] = rep.crosscheck_ok;
  j["flags"] = rep.flags;
  return j;
}

Json maxwell_result_to_json(const MaxwellResult& mr) {
  Json j;
  j["invariant_dim"] = mr.invariant_dim;
  j["coclosed_dim"] = mr.coclosed_dim;
  j["unresolved_dim"] = mr.unresolved_dim;
  Json pairs = Json::array();
  for (const auto& p : mr.pairs) {
    Json e;
    e["f"] = scalar_to_json(p.f);
    e["multiplicity"] = p.eigenforms.size();
    Json forms = Json::array();
    for (const auto& f : p.eigenforms) forms.push_back(kform_to_json(f));
    e["eigenforms"] = forms;
    pairs.push_back(e);
  }
  j["eigenpairs"] = pairs;
  j["notes"] = mr.notes;
  return j;
}

}  // namespace sugra47
