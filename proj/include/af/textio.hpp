#pragma once
// Versioned, line-oriented wire format ("afc 1") for certificates and
// verdicts, plus the human-readable renderings the CLI prints by default.
// parse(print(x)) == x for every value the library can produce.

#include <string>

#include "af/criteria.hpp"

namespace af {

std::string print_certificate(const Certificate& c);
Certificate parse_certificate(const std::string& text);

std::string print_verdict(const Verdict& v);
Verdict parse_verdict(const std::string& text);

std::string format_certificate_human(const Certificate& c);
std::string format_verdict_human(const Verdict& v);

// "3,5" or "-" <-> SSet; used by the wire format and the CLI.
std::string sset_to_text(const SSet& s);
SSet sset_from_text(const std::string& text);

}  // namespace af
