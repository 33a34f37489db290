//! Graphviz export of attaching graphs.

use std::fmt::Write as _;

use fillpair_core::{AGraph, Scheme};

/// `tree`, or why the graph is not one.
pub fn verdict(graph: &AGraph) -> String {
    if graph.is_tree() {
        return "tree".into();
    }
    let components = graph.component_count();
    let cycles = graph.cyclomatic_number();
    match (graph.is_forest(), components) {
        (true, c) => format!("not a tree (forest with {c} components)"),
        (false, 1) => format!(
            "not a tree (connected, {})",
            plural(cycles, "independent cycle")
        ),
        (false, c) => format!(
            "not a tree ({c} components, {})",
            plural(cycles, "independent cycle")
        ),
    }
}

fn plural(count: usize, word: &str) -> String {
    if count == 1 {
        format!("1 {word}")
    } else {
        format!("{count} {word}s")
    }
}

/// Nodes are seed face ids, one edge per attached handle, with the
/// verdict in a comment header.
pub fn to_dot(scheme: &Scheme) -> String {
    let graph = scheme.a_graph();
    let mut out = String::new();
    let _ = writeln!(
        out,
        "// attaching graph of a scheme on the {}-crossing torus seed with {} handles",
        scheme.seed_m(),
        scheme.handle_count()
    );
    let _ = writeln!(out, "// verdict: {}", verdict(&graph));
    let _ = writeln!(
        out,
        "// components: {}, independent cycles: {}, forest: {}",
        graph.component_count(),
        graph.cyclomatic_number(),
        if graph.is_forest() { "yes" } else { "no" }
    );
    out.push_str("graph agraph {\n  node [shape=circle];\n");
    for v in 0..graph.vertex_count() {
        let _ = writeln!(out, "  f{v} [label=\"{v}\"];");
    }
    for (k, &(a, b)) in graph.edges().iter().enumerate() {
        let _ = writeln!(out, "  f{a} -- f{b} [label=\"h{k}\"];");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use fillpair_core::{odd_scheme, GammaArc, SurgeryKind};

    #[test]
    fn odd_scheme_is_a_tree() {
        let dot = to_dot(&odd_scheme(5).unwrap());
        assert!(dot.contains("// verdict: tree\n"));
        assert_eq!(dot.matches(" -- ").count(), 4);
        assert_eq!(dot.matches("[label=\"h").count(), 4);
    }

    #[test]
    fn nwse_single_is_a_self_loop() {
        let scheme = Scheme::new(3, vec![GammaArc::point(0, SurgeryKind::SingleNwSe, 3)]).unwrap();
        let dot = to_dot(&scheme);
        assert!(dot.contains("not a tree"));
    }
}
