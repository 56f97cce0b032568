use std::fmt::Write;

use super::{FiniteBinaryTree, TreePair};
use crate::coretree::VertexAddress;

fn node_id(prefix: &str, v: &VertexAddress) -> String {
    format!(
        "{prefix}_{}",
        if v.is_root() {
            "r".to_string()
        } else {
            format!("r{v}")
        }
    )
}

fn write_tree(out: &mut String, prefix: &str, label: &str, tree: &FiniteBinaryTree) {
    let _ = writeln!(out, "  subgraph cluster_{prefix} {{");
    let _ = writeln!(out, "    label=\"{label}\";");
    for c in tree.caret_addresses() {
        let _ = writeln!(out, "    {} [shape=point];", node_id(prefix, &c));
    }
    for (i, leaf) in tree.leaf_addresses().iter().enumerate() {
        let _ = writeln!(
            out,
            "    {} [shape=box, label=\"{i}: {}\"];",
            node_id(prefix, leaf),
            leaf.to_interval()
        );
    }
    for c in tree.caret_addresses() {
        for child in [c.left(), c.right()] {
            let _ = writeln!(
                out,
                "    {} -> {};",
                node_id(prefix, &c),
                node_id(prefix, &child)
            );
        }
    }
    out.push_str("  }\n");
}

/// Graphviz rendering: one cluster per tree, leaves labelled with their index
/// and standard dyadic interval.
pub fn tree_pair_dot(pair: &TreePair) -> String {
    let mut out = String::from("digraph tree_pair {\n  node [fontname=\"monospace\"];\n");
    write_tree(&mut out, "domain", "domain", &pair.domain);
    write_tree(&mut out, "range", "range", &pair.range);
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::{generator_element, Generator};

    #[test]
    fn x0_dot_is_well_formed() {
        let dot = tree_pair_dot(generator_element(Generator::X0).tree_pair());
        assert_eq!(dot.matches('{').count(), dot.matches('}').count());
        assert!(dot.contains("cluster_domain"));
        assert!(dot.contains("[1/2^2,2/2^2]"));
        assert_eq!(dot.matches("->").count(), 8);
    }
}
