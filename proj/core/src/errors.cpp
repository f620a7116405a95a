#include "brauer2/errors.hpp"

namespace brauer2 {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::degenerate_model: return "degenerate-model";
    case ErrorKind::zero_divisor: return "zero-divisor";
    case ErrorKind::bad_reduction: return "bad-reduction";
    case ErrorKind::precision_cap: return "precision-cap";
    case ErrorKind::unsupported_geometry: return "unsupported-geometry";
    case ErrorKind::invalid_divisor: return "invalid-divisor";
    case ErrorKind::not_split: return "not-split";
    case ErrorKind::indeterminate_residue: return "indeterminate-residue";
    case ErrorKind::unsupported_symbol: return "unsupported-symbol";
    case ErrorKind::syntax: return "syntax";
    case ErrorKind::degree: return "degree";
    }
    return "unknown";
}

SyntaxError::SyntaxError(const std::string& w, int line, int column)
    : Error(ErrorKind::syntax,
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + w),
      line_(line), column_(column)
{
}

} // namespace brauer2
