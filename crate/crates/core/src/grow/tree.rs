//! The tree of quantum groups grown from `A_1`, and DOT output for it and
//! for single Dynkin diagrams.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::Result;
use crate::lattice::{reference_cartan, Series};
use crate::qrep::RepKind;

use super::{extended_cartan, target_series};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Node {
    pub series: Series,
    pub rank: usize,
}

impl std::fmt::Display for Node {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}{}", self.series, self.rank)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeStatus {
    /// Re-derived here by a growth step.
    Verified,
    /// Known rank induction, not recomputed.
    Cited,
    /// The growth step ran but did not reproduce the target.
    Failed,
}

impl std::fmt::Display for EdgeStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            EdgeStatus::Verified => "verified",
            EdgeStatus::Cited => "cited",
            EdgeStatus::Failed => "failed",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeEdge {
    pub from: Node,
    pub to: Node,
    pub rep: Option<String>,
    /// Display form of λ, e.g. `q^(-1)`.
    pub lambda: Option<String>,
    pub status: EdgeStatus,
    pub cartan: Option<Vec<Vec<i64>>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tree {
    pub nodes: Vec<Node>,
    pub edges: Vec<TreeEdge>,
}

impl Tree {
    pub fn edge(&self, from: &str, to: &str) -> Option<&TreeEdge> {
        self.edges.iter().find(|e| e.from.to_string() == from && e.to.to_string() == to)
    }
}

fn node(series: Series, rank: usize) -> Node {
    Node { series, rank }
}

/// Grows the tree up to rank `max_rank`. Every B/C/D edge is recomputed;
/// `A_{n−1} → A_n` edges are cited.
pub fn build_tree(max_rank: usize) -> Result<Tree> {
    let mut nodes = vec![node(Series::A, 1)];
    let mut edges = Vec::new();
    for n in 2..=max_rank {
        let from = node(Series::A, n - 1);
        nodes.push(node(Series::A, n));
        edges.push(TreeEdge {
            from,
            to: node(Series::A, n),
            rep: None,
            lambda: None,
            status: EdgeStatus::Cited,
            cartan: None,
        });
        for kind in [RepKind::Vector, RepKind::Sym2, RepKind::Wedge2] {
            if n < kind.min_n() {
                continue;
            }
            let series = target_series(kind);
            let g = extended_cartan(kind, n)?;
            let ok = g.passed() && g.cartan == reference_cartan(series, n)?;
            let to = node(series, n);
            nodes.push(to);
            edges.push(TreeEdge {
                from,
                to,
                rep: Some(kind.tag().to_string()),
                lambda: Some(format!("q^({})", g.lambda.q_exponent().expect("λ is a q-power"))),
                status: if ok { EdgeStatus::Verified } else { EdgeStatus::Failed },
                cartan: Some(g.cartan),
            });
        }
    }
    nodes.sort();
    nodes.dedup();
    edges.sort_by_key(|a| (a.to, a.from));
    Ok(Tree { nodes, edges })
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn emit_tree_dot(t: &Tree) -> String {
    let mut out = String::from("digraph tree {\n  rankdir=LR;\n");
    for v in &t.nodes {
        let _ = writeln!(out, "  {};", quote(&v.to_string()));
    }
    for e in &t.edges {
        let mut label = Vec::new();
        if let Some(r) = &e.rep {
            label.push(r.clone());
        }
        if let Some(l) = &e.lambda {
            label.push(format!("λ={l}"));
        }
        label.push(e.status.to_string());
        let style = if e.status == EdgeStatus::Cited { ", style=dashed" } else { "" };
        let _ = writeln!(
            out,
            "  {} -> {} [label={}{}];",
            quote(&e.from.to_string()),
            quote(&e.to.to_string()),
            quote(&label.join(", ")),
            style
        );
    }
    out.push_str("}\n");
    out
}

/// Dynkin diagram of a Cartan matrix. Node `i` is labelled `α{i}`; an edge
/// carries multiplicity `a_ij a_ji` and, when multi-laced, an arrow toward
/// the short root.
pub fn emit_diagram_dot(name: &str, a: &[Vec<i64>]) -> String {
    let r = a.len();
    let mut out = format!("graph {} {{\n", quote(name));
    for i in 0..r {
        let _ = writeln!(out, "  \"α{}\";", i + 1);
    }
    for i in 0..r {
        for j in i + 1..r {
            let m = a[i][j] * a[j][i];
            if m == 0 {
                continue;
            }
            let mut attrs = format!("label=\"{m}\"");
            if m > 1 {
                // |a_ij| > 1 means α_i is the short root
                let (long, short) = if a[i][j].abs() > 1 { (j, i) } else { (i, j) };
                let _ = write!(attrs, ", arrow=\"α{}>α{}\"", long + 1, short + 1);
            }
            let _ = writeln!(out, "  \"α{}\" -- \"α{}\" [{attrs}];", i + 1, j + 1);
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_one_is_a_single_node() {
        let t = build_tree(1).unwrap();
        assert_eq!(t.nodes, vec![node(Series::A, 1)]);
        assert!(t.edges.is_empty());
        let dot = emit_tree_dot(&t);
        assert!(dot.contains("\"A1\";"));
        assert!(!dot.contains("->"));
    }

    #[test]
    fn rank_two_has_b2_and_c2() {
        let t = build_tree(2).unwrap();
        assert_eq!(t.edge("A1", "B2").unwrap().status, EdgeStatus::Verified);
        assert_eq!(t.edge("A1", "C2").unwrap().status, EdgeStatus::Verified);
        assert_eq!(t.edge("A1", "A2").unwrap().status, EdgeStatus::Cited);
    }

    #[test]
    fn no_d_edge_below_rank_four() {
        let t = build_tree(3).unwrap();
        assert!(t.nodes.iter().all(|v| v.series != Series::D));
    }

    #[test]
    fn d4_edge_label() {
        let t = build_tree(4).unwrap();
        let dot = emit_tree_dot(&t);
        assert!(dot.contains("\"A3\" -> \"D4\" [label=\"wedge2, λ=q^(-1), verified\"];"), "{dot}");
        for (f, to) in [("A1", "B2"), ("A2", "C3"), ("A3", "D4")] {
            assert_eq!(t.edge(f, to).unwrap().status, EdgeStatus::Verified);
        }
    }

    #[test]
    fn b2_diagram_arrow_points_to_short_root() {
        let a = reference_cartan(Series::B, 2).unwrap();
        let dot = emit_diagram_dot("B2", &a);
        assert_eq!(dot.matches(" -- ").count(), 1);
        assert!(dot.contains("label=\"2\", arrow=\"α1>α2\""), "{dot}");
    }
}
