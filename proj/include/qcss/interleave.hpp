#pragma once

#include "qcss/core.hpp"

namespace qcss {

/// Column-interleave a period-n sequence into a K x N matrix, entry (k, t) = seq[k + K*t].
/// Requires K > 1, K | n and N = n/K > 1.
ComplementaryMatrix interleave(const PhaseExponentSequence& seq, int K);

/// Exact inverse of interleave.
PhaseExponentSequence flatten(const ComplementaryMatrix& mat);

/// Member-wise interleaving; declared vartheta_max carries over from the
/// sequence family's declared theta_max. M <= K is legal here, it just
/// disqualifies the QCSS label (see QcssFamily::qualifies_as_qcss).
QcssFamily interleave_family(const SequenceFamily& fam, int K);

}  // namespace qcss
