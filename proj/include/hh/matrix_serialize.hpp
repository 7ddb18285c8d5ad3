#pragma once

#include "hh/fock.hpp"
#include "hh/serialize.hpp"

namespace hh {

// Sparse schema {"n", "lambda", "N", "entries": [{"mu", "nu", "c"}...]} with
// entries ordered by column (graded-lex), then row. Byte-deterministic for
// equal operators.
ojson operator_to_json(const OperatorMatrix& m);
OperatorMatrix operator_from_json(const ojson& j);

} // namespace hh
