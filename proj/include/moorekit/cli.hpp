#pragma once
// Command-line surface over the document loader and the algebra engines.
//
//   moorekit validate FILE [--name NAME]
//   moorekit moore FILE --name SIMPLICIAL
//   moorekit homotopy FILE --name SIMPLICIAL [--max N]
//   moorekit decompose FILE --name CHAIN
//            (--theory mu-ngeq:N|mu-geq:N | --pretorsion A,B | --ttf N |
//             --e-torsion normal-image:N)
//   moorekit classify FILE --name OBJECT [--theory T | --pair A,B]
//   moorekit corpus --suite acceptance
//
// Global flag --format json|text (default text). NAME may be qualified as
// "section/name" to disambiguate entries that share a name across sections.
//
// Exit codes: 0 all checks passed; 1 a check failed (reports carry the
// witness); 2 usage, parse, or document errors. Failures print a JSON object
// {"error": {"code", "message", "witness"}} to the error stream. Output is
// byte-identical across runs for identical input: no timestamps, object keys
// lexicographic, rows sorted by label.

#include <iosfwd>
#include <string>
#include <vector>

namespace moorekit {

// `args` excludes the program name. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace moorekit
