#include "adinkra/report_json.hpp"

#include "adinkra/error.hpp"

namespace adinkra {

nlohmann::json to_json(const monodromy::AnalysisReport& r) {
  nlohmann::json j;
  j["schema"] = kReportSchema;
  j["N"] = r.n;
  j["k"] = r.k;
  j["d"] = r.d;
  j["h1_in_code"] = r.h1_in_code;
  j["genus"] = r.genus;
  j["K_tag"] = monodromy::to_string(r.k_tag);
  j["chi0"] = r.chi0;
  j["H_order"] = r.h_order;
  j["H_structure"] = "G_" + std::to_string(r.h_structure);
  j["Sigma_order"] = r.sigma_order;
  j["Sigma_elementary_abelian"] = r.sigma_elementary_abelian;
  j["M_order"] = r.m_order;
  if (r.relation_witness) {
    j["relation_witness"] = {{"sign", r.relation_witness->sign}, {"word", r.relation_witness->word}};
  } else {
    j["relation_witness"] = nullptr;
  }
  j["generators"] = r.generators;
  j["dashing"] = r.dashing;
  j["rainbow_original"] = r.rainbow_original;
  j["rainbow_applied"] = r.rainbow_applied;
  j["components"] = r.components;
  return j;
}

graph::Adinkra adinkra_from_report(const nlohmann::json& report) {
  try {
    if (report.at("schema").get<int>() != kReportSchema) {
      throw Error(Errc::parse_error, "unsupported report schema");
    }
    if (report.at("components").get<std::size_t>() != 1) {
      throw Error(Errc::parse_error, "only connected Adinkras can be rebuilt from a report");
    }
    const int n = report.at("N").get<int>();
    std::vector<gf2::BinaryWord> gens;
    for (const auto& g : report.at("generators")) gens.push_back(gf2::BinaryWord::parse(g.get<std::string>()));
    const gf2::LinearCode code(n, std::move(gens));
    auto a = graph::build_chromotopology(code);
    a = graph::relabel_colors(a, report.at("rainbow_applied").get<std::vector<int>>());
    return a.with_dashing(report.at("dashing").get<std::vector<int>>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, std::string("malformed report: ") + e.what());
  }
}

}  // namespace adinkra
