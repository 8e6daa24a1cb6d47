#ifndef SCHUR_JSON_IO_HPP
#define SCHUR_JSON_IO_HPP

#include "json.hpp"

#include "schur/harness.hpp"
#include "schur/partition.hpp"
#include "schur/positivity.hpp"
#include "schur/skew_shape.hpp"
#include "schur/tableaux.hpp"

namespace schur {

// JSON forms used by the CLI and golden tests.
//   Partition                [4,4,3]
//   SkewShape                {"outer":[...], "inner":[...]}
//   LRFilling                [[row entries], ...] top to bottom
//   SchurExpansion           [{"nu":[...],"coeff":c}, ...] decreasing lex
//   OverlapProfile           {"rows":[[...],...], "cols":[...], "rects":[[...],...]}
//   ScreenVerdict            {"passed":b, "witnesses":[{"family":...,"k":...,
//                             "l":...,"prefix":...,"lhs":...,"rhs":...}, ...]}
//   NecessaryConditionReport {"screen":..., "support_contained":b|"skipped",
//                             "schur_positive":b|"skipped",
//                             "implication_consistent":b}

nlohmann::json to_json(const Partition& p);
nlohmann::json to_json(const SkewShape& shape);
nlohmann::json to_json(const LRFilling& filling);
nlohmann::json to_json(const SchurExpansion& expansion);
nlohmann::json to_json(const OverlapProfile& profile);
nlohmann::json to_json(const ScreenWitness& witness);
nlohmann::json to_json(const ScreenVerdict& verdict);
nlohmann::json to_json(const NecessaryConditionReport& report);
nlohmann::json to_json(const VerificationReport& report);

} // namespace schur

#endif
