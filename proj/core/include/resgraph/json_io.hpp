#pragma once

#include <string>

#include "resgraph/document.hpp"
#include "resgraph/graph.hpp"

namespace resgraph {

/// Parses a graph document from JSON text. Accepts either the bare graph
/// schema {"vertices": [...], "edges": [...]} or the document container
/// {"schema_version": "1", "graph": {...}, "analytic_hints": {...}}.
/// Unknown top-level keys are ignored. Throws ParseError on malformed input
/// and DomainError when the graph violates structural invariants.
GraphDocument parse_document_json(const std::string& text);

/// Reads a file and parses it; throws ParseError when unreadable.
GraphDocument load_document(const std::string& path);

/// Graph serialization, byte-stable: vertices and edges in stored order,
/// keys in schema order, two-space indent, trailing newline.
std::string graph_json(const DualGraph& g);

/// Document serialization wrapping graph_json.
std::string document_json(const GraphDocument& doc);

}  // namespace resgraph
