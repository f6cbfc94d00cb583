use std::fmt::Write;

use crate::numeric::Expression;
use crate::solver::ExpressionTree;

fn node_id(e: &Expression) -> String {
    format!("n{}_{}_{}", e.d(), e.x(), e.y())
}

/// Graphviz digraph of an expression tree. Nodes are ranked by level and
/// labelled `d:(x,y)`; edges are labelled with the unit expression added.
pub fn tree_to_dot(tree: &ExpressionTree) -> String {
    let mut out = String::new();
    out.push_str("digraph expression_tree {\n");
    out.push_str("  node [shape=box];\n");
    for level in &tree.levels {
        out.push_str("  { rank=same;");
        for e in &level.expressions {
            let _ = write!(out, " {} [label=\"{}\"];", node_id(e), e);
        }
        out.push_str(" }\n");
    }
    for t in tree.all_edges() {
        let _ = writeln!(
            out,
            "  {} -> {} [label=\"{}\"];",
            node_id(&t.from),
            node_id(&t.to),
            t.added
        );
    }
    out.push_str("}\n");
    out
}
