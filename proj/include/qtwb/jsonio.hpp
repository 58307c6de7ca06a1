#pragma once

#include "qtwb/symfunc.hpp"

#include <json.hpp>

namespace qtwb {

nlohmann::json poly_to_json(const QTPoly& p);
QTPoly poly_from_json(const nlohmann::json& j);

nlohmann::json qtrat_to_json(const QTRat& r);
QTRat qtrat_from_json(const nlohmann::json& j);

nlohmann::json sf_to_json(const SymFunc& f);
SymFunc sf_from_json(const nlohmann::json& j);

std::string qtrat_latex(const QTRat& r);
std::string sf_latex(const SymFunc& f);

uint64_t fnv1a(const std::string& s);

} // namespace qtwb
