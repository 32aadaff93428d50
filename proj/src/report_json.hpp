#pragma once

#include <json.hpp>
#include <string>

#include "group_action.hpp"
#include "metric_core.hpp"
#include "thurston.hpp"
#include "tree_backend.hpp"
#include "windmill_core.hpp"

namespace windmill {

// Reports are ordered JSON with rationals as "p/q" strings; byte-identical
// output for identical runs.
using OJson = nlohmann::ordered_json;

inline OJson rat_json(const Rat& r) { return format_rat(r); }

OJson axiom_report_json(const AxiomReport& rep);
OJson constants_report_json(const ConstantsReport& rep);
OJson complex_json(const ComplexGraph& g, bool include_edges);
OJson invariance_json(const InvarianceReport& rep);
OJson equivariance_json(const EquivarianceReport& rep);
OJson spinning_json(const SpinningReport& rep);
OJson windmill_summary_json(const WindmillSummary& s);
OJson statements_json(const StatementsReport& s);
OJson certificate_json(const CertificateResult& c);
OJson distance_formula_json(const DistanceFormulaReport& rep);
OJson quadratic_json(const QuadraticNumber& q);
OJson dihedral_json(const DihedralReport& rep);

std::string dump_report(const OJson& report);

}  // namespace windmill
