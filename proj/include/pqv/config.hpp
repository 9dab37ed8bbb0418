#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "pqv/classification.hpp"
#include "pqv/pq_model.hpp"

namespace pqv {

inline constexpr int kFormatVersion = 1;

using Json = nlohmann::ordered_json;

/// Model documents. Parsing throws UsageError on malformed or
/// inconsistently shaped input; mathematical validation is separate
/// (validate_model).
Json model_to_json(const ProductQuotientModel& pq);
ProductQuotientModel model_from_json(const Json& doc);

ProductQuotientModel load_model(const std::string& path);
void save_model(const ProductQuotientModel& pq, const std::string& path);

/// Group lists for the classifier. Each entry has a "name" and one of
/// "cyclic": [n1, ...], "permutations": [[...], ...] (one-line notation on
/// 0..d-1) or "table": [[...], ...] with "identity".
std::vector<NamedGroup> groups_from_json(const Json& doc);
std::vector<NamedGroup> load_groups(const std::string& path);

Json read_json_file(const std::string& path);

}  // namespace pqv
