#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "overlap/certificate.hpp"
#include "overlap/decision.hpp"

namespace overlap {

nlohmann::json verdict_to_json(const Verdict& v);
nlohmann::json certificate_to_json(const Certificate& c);
nlohmann::json verify_result_to_json(const VerifyResult& r);

/// Certificate document as found on disk: either field may be absent.
/// Permutation entries are kept signed so range errors surface at verify
/// time rather than as parse failures.
struct CertificateDoc {
  std::optional<std::vector<std::int64_t>> permutation;
  std::optional<std::vector<std::pair<std::string, std::string>>> path;
};

/// Throws parse_error when the document does not match the schema
/// {"permutation": [int...], "path": [[from,to]...]} (both optional,
/// at least one required).
CertificateDoc certificate_doc_from_json(const nlohmann::json& j);

}  // namespace overlap
