//! Graphviz rendering. Members of `S` are filled, members of `I` get a thick
//! double outline, and the forcing edges of `M` are drawn bold.

use std::fmt::Write;

use zforce_core::{Certificate, Graph};

pub fn graph_dot(g: &Graph, name: &str) -> String {
    let mut out = format!("graph \"{name}\" {{\n  node [shape=circle];\n");
    for v in g.vertices() {
        writeln!(out, "  {v};").unwrap();
    }
    for &(u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn certificate_dot(g: &Graph, c: &Certificate, name: &str) -> String {
    let mut out = format!(
        "graph \"{name}\" {{\n  label=\"{} |S|={} |I|={}\";\n  node [shape=circle];\n",
        c.mode.as_str(),
        c.s.len(),
        c.i.len()
    );
    for v in g.vertices() {
        let mut attrs = Vec::new();
        if c.s.contains(v) {
            attrs.push("style=filled, fillcolor=\"#d62728\", fontcolor=white");
        }
        if c.i.contains(v) {
            attrs.push("peripheries=2, penwidth=2.5");
        }
        match attrs.is_empty() {
            true => writeln!(out, "  {v};").unwrap(),
            false => writeln!(out, "  {v} [{}];", attrs.join(", ")).unwrap(),
        }
    }
    for &(u, v) in g.edges() {
        let matched =
            c.m.iter()
                .any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u));
        match matched {
            true => writeln!(out, "  {u} -- {v} [style=bold, penwidth=3];").unwrap(),
            false => writeln!(out, "  {u} -- {v};").unwrap(),
        }
    }
    out.push_str("}\n");
    out
}
