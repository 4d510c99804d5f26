#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ltistab/rational_tf.hpp"

namespace ltistab {

/// Block diagram tree. JSON shape:
///   {"kind": "tf", "expr": "1/(s+1)"}
///   {"kind": "series" | "parallel", "blocks": [node, ...]}
///   {"kind": "feedback", "forward": node}      (unity negative feedback)
/// Unknown keys are rejected.
struct DiagramNode {
    enum class Kind { Tf, Series, Parallel, Feedback };

    Kind kind = Kind::Tf;
    std::string expr;
    /// series/parallel operands; the single forward path for feedback
    std::vector<DiagramNode> blocks;
};

using BlockDiagramSpec = DiagramNode;

/// Throws Error{InvalidDiagram} naming the JSON path of the offending node.
BlockDiagramSpec parse_diagram(std::string_view json_text);

/// Bottom-up fold with series / parallel / feedback_unity. Errors from leaf
/// parsing or loop closure are re-thrown with the node path prefixed.
TransferFunction elaborate_diagram(const BlockDiagramSpec& spec);

}  // namespace ltistab
