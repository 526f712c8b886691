#pragma once

#include <string>

#include "apd/perm.hpp"

namespace apd {

// Text format, written bit-exactly with LF line ends and no trailing blanks:
//   n=<modulus>\n
//   <n images space-separated>\n
std::string perm_to_text(const Perm& p);
Perm perm_from_text(const std::string& text);

// JSON alternative: {"n": <int>, "perm": [<ints>]}
std::string perm_to_json(const Perm& p);
Perm perm_from_json(const std::string& text);

// Sniffs the leading non-space byte: '{' selects JSON, anything else text.
Perm perm_from_string(const std::string& text);
Perm perm_from_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace apd
