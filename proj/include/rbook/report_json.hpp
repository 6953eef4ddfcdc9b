#pragma once

#include <json.hpp>

#include "rbook/book_engine.hpp"
#include "rbook/bounds.hpp"
#include "rbook/geometry.hpp"
#include "rbook/log_scalar.hpp"
#include "rbook/oracle.hpp"
#include "rbook/pipeline.hpp"

namespace rbook {

nlohmann::json to_json(const VertexSet& s);
nlohmann::json to_json(const InequalityCheck& c);
nlohmann::json to_json(const LogScalar& v);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const ChainReport& r);
nlohmann::json to_json(const BookTargetBounds& b);
nlohmann::json to_json(const Lemma53Report& r);
nlohmann::json to_json(const RegularisationResult& r);
nlohmann::json to_json(const DriverReport& r);
nlohmann::json to_json(const MonitorSummary& s);
nlohmann::json to_json(const RamseyResult& r);
nlohmann::json to_json(const BookResult& r);
nlohmann::json to_json(const EngineOutcome& o);

}  // namespace rbook
