#include "holord/series_json.hpp"

namespace holord {

nlohmann::json series_to_json(const TruncSeries& s) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : s.terms()) {
    auto idx = m.indices();
    terms.push_back({std::vector<int>(idx.begin(), idx.end()), c.get_num().get_str(),
                     c.get_den().get_str()});
  }
  return {{"rank", s.rank()}, {"trunc", s.trunc()}, {"terms", std::move(terms)}};
}

TruncSeries series_from_json(const nlohmann::json& j) {
  try {
    const int rank = j.at("rank").get<int>();
    const int trunc = j.at("trunc").get<int>();
    TruncSeries::Terms terms;
    for (const auto& entry : j.at("terms")) {
      if (!entry.is_array() || entry.size() != 3) throw Error("series term must be a triple");
      Monomial m(entry.at(0).get<std::vector<int>>());
      mpz_class num(entry.at(1).get<std::string>());
      mpz_class den(entry.at(2).get<std::string>());
      if (den == 0) throw Error("zero denominator in series JSON");
      Rational c(num, den);
      c.canonicalize();
      if (!terms.emplace(std::move(m), c).second) throw Error("duplicate monomial in series");
    }
    return TruncSeries(rank, trunc, std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed series JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw Error(std::string("malformed rational in series JSON: ") + e.what());
  }
}

}  // namespace holord
