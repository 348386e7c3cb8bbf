#ifndef ELEMVAR_CATALOG_HPP
#define ELEMVAR_CATALOG_HPP

#include <string>

#include "elemvar/repmod.hpp"

namespace elemvar {

/// Human-readable listing of the algebra and module spec grammars, included
/// in rejection messages for unknown specs.
std::string catalog_text();

/// Builds an algebra from a spec string. Grammar:
///   gl:N | sl:N | sp:N | un:N | unr:R,S | parab-nilrad:N:J=a,b,...
///   | heis:N | abelian:N | gtilde:N[:phi=c0,c1,...] | g1n:N
/// and direct sums joined with '+', e.g. "sl:2+sl:2".
LieAlgebra algebra_from_spec(const std::string& spec, uint32_t p);

/// Builds a module over g from a spec string. Grammar:
///   triv | defining | adjoint | free:R,A | dual:<m> | tensor:<m>,<m>
///   | sum:<m>,<m> | file:<path>
/// free:R,A requires g = abelian(R). file loads {"dim": d, "ops": [...]}
/// with one integer matrix per algebra basis vector (validated on load).
Module module_from_spec(const std::string& spec, const LieAlgebra& g);

/// Resolves a --within argument: "all", "nilradical", or
/// "subalgebra:<algebra spec>" (embedded through the matrix realization).
std::optional<Subspace> within_from_spec(const std::string& spec, const LieAlgebra& g);

}  // namespace elemvar

#endif
