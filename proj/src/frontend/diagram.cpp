#include "ltistab/diagram.hpp"

#include <json.hpp>

#include "ltistab/error.hpp"
#include "ltistab/parser.hpp"

namespace ltistab {

namespace {

using nlohmann::json;

[[noreturn]] void invalid(const std::string& path, const std::string& message) {
    throw Error(ErrorCode::InvalidDiagram, path + ": " + message);
}

void require_keys(const json& node, const std::string& path, std::initializer_list<std::string_view> allowed) {
    for (const auto& [key, value] : node.items()) {
        bool known = false;
        for (auto a : allowed) known = known || key == a;
        if (!known) invalid(path, "unknown key '" + key + "'");
    }
    for (auto a : allowed)
        if (!node.contains(std::string(a))) invalid(path, "missing key '" + std::string(a) + "'");
}

DiagramNode node_from_json(const json& node, const std::string& path) {
    if (!node.is_object()) invalid(path, "expected an object");
    if (!node.contains("kind") || !node["kind"].is_string()) invalid(path, "missing string key 'kind'");
    const std::string kind = node["kind"].get<std::string>();

    DiagramNode out;
    if (kind == "tf") {
        require_keys(node, path, {"kind", "expr"});
        if (!node["expr"].is_string()) invalid(path, "'expr' must be a string");
        out.kind = DiagramNode::Kind::Tf;
        out.expr = node["expr"].get<std::string>();
    } else if (kind == "series" || kind == "parallel") {
        require_keys(node, path, {"kind", "blocks"});
        const json& blocks = node["blocks"];
        if (!blocks.is_array() || blocks.empty()) invalid(path, "'blocks' must be a nonempty array");
        out.kind = kind == "series" ? DiagramNode::Kind::Series : DiagramNode::Kind::Parallel;
        for (std::size_t i = 0; i < blocks.size(); ++i)
            out.blocks.push_back(node_from_json(blocks[i], path + ".blocks[" + std::to_string(i) + "]"));
    } else if (kind == "feedback") {
        require_keys(node, path, {"kind", "forward"});
        out.kind = DiagramNode::Kind::Feedback;
        out.blocks.push_back(node_from_json(node["forward"], path + ".forward"));
    } else {
        invalid(path, "unknown kind '" + kind + "'");
    }
    return out;
}

TransferFunction fold(const DiagramNode& node, const std::string& path) {
    try {
        switch (node.kind) {
            case DiagramNode::Kind::Tf: return parse_transfer_function(node.expr);
            case DiagramNode::Kind::Series:
            case DiagramNode::Kind::Parallel: {
                const char* field = ".blocks[";
                TransferFunction acc = fold(node.blocks.front(), path + field + "0]");
                for (std::size_t i = 1; i < node.blocks.size(); ++i) {
                    const TransferFunction next = fold(node.blocks[i], path + field + std::to_string(i) + "]");
                    acc = node.kind == DiagramNode::Kind::Series ? series(acc, next) : parallel(acc, next);
                }
                return acc;
            }
            case DiagramNode::Kind::Feedback:
                if (node.blocks.size() != 1) invalid(path, "feedback needs exactly one forward path");
                return feedback_unity(fold(node.blocks.front(), path + ".forward"));
        }
    } catch (const Error& e) {
        // Only the innermost failing node prefixes its path.
        const std::string what = e.what();
        if (what.starts_with("$")) throw;
        throw Error(e.code(), path + ": " + what, e.offset());
    }
    invalid(path, "unreachable node kind");
}

}  // namespace

BlockDiagramSpec parse_diagram(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::InvalidDiagram, std::string("malformed JSON: ") + e.what());
    }
    return node_from_json(doc, "$");
}

TransferFunction elaborate_diagram(const BlockDiagramSpec& spec) { return fold(spec, "$"); }

}  // namespace ltistab
