#pragma once

#include <iomanip>
#include <sstream>
#include <string>

#include <json.hpp>

#include "tatecalc/suites.hpp"
#include "tatecalc/version.hpp"

namespace tate {

/// Reports use ordered JSON so identical inputs, flags and seeds always
/// serialize to identical bytes.
using Json = nlohmann::ordered_json;

inline Json ring_json(const LocalAlgebra& R) {
    RingInvariants inv = ring_invariants(R);
    Json j;
    j["p"] = R.field().modulus();
    j["dim"] = R.dim();
    j["socle_dim"] = inv.socle_dim;
    j["embedding_dim"] = inv.embedding_dim;
    j["gorenstein"] = inv.is_gorenstein;
    j["hypersurface"] = inv.is_hypersurface;
    std::string basis;
    for (std::size_t i = 0; i < R.dim(); ++i)
        basis += (i ? ", " : "") + R.basis()[i].str(R.var_names());
    j["basis"] = basis;
    return j;
}

inline Json invariant_json(const InvariantReport& rep) {
    Json j;
    j["kind"] = kind_name(rep.kind);
    j["from"] = rep.lo;
    j["to"] = rep.hi();
    j["values"] = rep.values;
    j["provenance"] = rep.provenance;
    return j;
}

inline Json certificate_json(const PeriodicityCertificate& c) {
    Json j;
    j["n0"] = c.n0;
    j["period"] = c.s;
    j["window"] = {c.window_lo, c.window_hi};
    j["witness_dim"] = c.witness.source.dim();
    j["witness_rank"] = rank(c.witness.matrix);
    j["chunk_checked"] = true;
    return j;
}

inline Json suite_json(const SuiteReport& rep) {
    Json j;
    j["suite"] = rep.name;
    j["status"] = status_name(rep.status);
    if (!rep.note.empty()) j["note"] = rep.note;
    j["instances"] = rep.lines;
    return j;
}

inline Json balance_json(const BalanceReport& rep) {
    Json j;
    j["from"] = rep.lo;
    j["to"] = rep.hi;
    j["hom_via_projective"] = rep.hom_via_projective;
    j["hom_via_injective"] = rep.hom_via_injective;
    j["hom_balanced"] = rep.hom_balanced;
    j["tensor_via_projective"] = rep.tensor_via_projective;
    j["tensor_via_injective"] = rep.tensor_via_injective;
    j["tensor_balanced"] = rep.tensor_balanced;
    return j;
}

/// A degree-indexed table like "n: -2 -1 0 1 / value: 1 2 1 2".
inline std::string invariant_table(const std::string& label, const InvariantReport& rep) {
    std::ostringstream os;
    os << std::left << std::setw(10) << "n";
    for (int n = rep.lo; n <= rep.hi(); ++n) os << std::setw(6) << n;
    os << "\n" << std::setw(10) << label;
    for (auto v : rep.values) os << std::setw(6) << v;
    os << "\n";
    return os.str();
}

inline std::string ring_table(const LocalAlgebra& R) {
    RingInvariants inv = ring_invariants(R);
    std::ostringstream os;
    os << "ring: F_" << R.field().modulus() << "[";
    for (std::size_t i = 0; i < R.var_names().size(); ++i)
        os << (i ? "," : "") << R.var_names()[i];
    os << "] / (";
    for (std::size_t i = 0; i < R.relations().gens.size(); ++i)
        os << (i ? ", " : "") << R.relations().gens[i].str(R.var_names());
    os << "), dim " << R.dim() << "\n";
    os << "socle dim " << inv.socle_dim << ", embedding dim " << inv.embedding_dim
       << (inv.is_gorenstein ? ", Gorenstein" : ", not Gorenstein")
       << (inv.is_hypersurface ? ", hypersurface" : "") << "\n";
    return os.str();
}

}  // namespace tate
