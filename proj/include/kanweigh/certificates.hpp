#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "kanweigh/cauchy_isbell.hpp"
#include "kanweigh/io.hpp"
#include "kanweigh/promod.hpp"
#include "kanweigh/weighted.hpp"

// Self-contained JSON certificates. Each carries a "kind" and every structure
// needed to re-check it without the inputs that produced it.
namespace kanweigh::certificates {

using io::json;

json isomorphism(const SetFunctor& from, const SetFunctor& to, const Components& c);
json adjunction(const AdjunctionCertificate& cert);
json fully_faithful(const Functor& f);
json equivalence(const Functor& f);
json retract(const SetFunctor& phi, const RetractWitness& w);
json colimit_witness(const Weight& phi, const Diagram& d, const SetFunctor& object);
json counterexample(const Weight& phi, const Weight& psi, const SetFunctor& s);
json refutation(const SetFunctor& presheaf, const CocontinuityRefutation& r);

bool is_certificate(const json& doc);
/// nullopt when the certificate checks out, otherwise the first failure.
std::optional<std::string> verify(const json& cert, const std::filesystem::path& base = {});
/// Verifies every certificate found anywhere in `doc`; throws InvalidInput listing failures.
/// Returns one {"kind", "at"} entry per certificate, "at" being a JSON pointer.
json verify_all(const json& doc, const std::filesystem::path& base = {});

}  // namespace kanweigh::certificates
