#pragma once

#include "sod/homspaces.hpp"

namespace sod {

/// Result of parsing the CLI object syntax. `kind` is set when the text
/// carried a push:/pull: prefix.
struct ParsedObject {
    std::optional<TotKind> kind;
    GrObject object;
};

/// Grammar:  [push:|pull:] term (+ term)* [@shift]
/// term:     factor (* factor)*
/// factor:   O | U[w1,w2,...] | Q[w1,w2,...]
/// Weights follow the comma-separated convention; nonnegative tails are
/// padded with zeros to the required rank.
ParsedObject parse_object(const std::string& text, Context ctx);

}  // namespace sod
