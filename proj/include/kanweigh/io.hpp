#pragma once

#include <filesystem>
#include <map>
#include <string>

#include <json.hpp>

#include "kanweigh/fincat.hpp"
#include "kanweigh/promod.hpp"
#include "kanweigh/setfun.hpp"
#include "kanweigh/weighted.hpp"

namespace kanweigh::io {

using json = nlohmann::json;

std::string sha256_hex(const std::string& bytes);

/// Reads documents and nested references, recording a digest for every file touched.
/// Relative references resolve against the directory of the document that names them.
class Loader {
 public:
  /// Reads and parses a file; throws InvalidInput when missing or malformed.
  json read(const std::filesystem::path& path);
  const std::map<std::string, std::string>& digests() const { return digests_; }

  /// Inline document, path string, {"opposite": c} or {"product": [c, d]}.
  CatPtr category(const json& doc, const std::filesystem::path& base);
  Functor functor(const json& doc, const std::filesystem::path& base);
  /// `source` overrides the document's own source when given.
  SetFunctor set_functor(const json& doc, const std::filesystem::path& base, CatPtr source = nullptr);
  Weight weight(const json& doc, const std::filesystem::path& base, bool op = false);
  /// Source must be a product category of the form product(opposite(B), A).
  Module module(const json& doc, const std::filesystem::path& base);
  /// A set functor (a diagram in finite sets), {"yoneda": c}, or
  /// {"shape": c, "ambient": x, "at": {obj: set functor}, "along": {mor: components}}.
  Diagram diagram(const json& doc, const std::filesystem::path& base);

 private:
  std::map<std::string, std::string> digests_;
};

json to_json(const FinCat& c);
json to_json(const Functor& f);
json to_json(const SetFunctor& f);
json to_json(const Weight& w);
json to_json(const Module& m);
/// The {"shape", "ambient", "at", "along"} form read back by Loader::diagram.
json to_json(const Diagram& d);
/// {object: {element: element}} with identifiers from the two functors.
json components_json(const SetFunctor& from, const SetFunctor& to, const Components& c);
Components components_from_json(const json& doc, const SetFunctor& from, const SetFunctor& to);
json verdict_json(const ComparisonVerdict& v);

/// Canonical serialization: sorted keys, two-space indent, UTF-8, trailing newline.
std::string dump(const json& doc);

}  // namespace kanweigh::io
