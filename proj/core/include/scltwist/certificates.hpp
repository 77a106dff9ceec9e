#pragma once

#include <string>
#include <vector>

#include "scltwist/commutator.hpp"
#include "scltwist/curve_configuration.hpp"
#include "scltwist/proof_script.hpp"

namespace scltwist {

/// A commutator factorization over the twist alphabet (free-group generators
/// "t_<curve>" and mapping names) with a derivation from the factors' product
/// to the target.
struct TwistCertificate {
  CommutatorExpression expression;
  std::vector<MappingSymbol> mappings;
  ProofScript derivation;
};

/// [t_a t_b^-1, g] = t_a t_b^-1 t_c t_d^-1 when g sends a -> d and b -> c,
/// with the three-step naturality derivation. Throws Error("mapping-mismatch").
TwistCertificate lemma5_commutator(const std::string& a, const std::string& b, const std::string& c,
                                   const std::string& d, const MappingSymbol& g);

/// t2^10 = t2^4 [h, t1 t2^-1] t2^-4 [t4 t_alpha^-1, g] with
/// g: a4 -> a1, alpha -> a5 and h: a1 -> a2, a2 -> beta.
TwistCertificate theorem3_certificate();

/// Checks that the derivation starts at the factors' product and ends at the
/// target (up to free reduction), then replays it under `config`. A linkage
/// failure is reported with kind "certificate-mismatch".
DerivationReport certify(const TwistCertificate& certificate, const CurveConfiguration& config);

}  // namespace scltwist
