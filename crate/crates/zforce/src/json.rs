//! JSON forms of graphs, chronicles, partitions, certificates and reports.

use serde::{Deserialize, Serialize};
use zforce_core::solvers::{BoundsReport, Inequality};
use zforce_core::{Certificate, Chronicle, Graph, GraphError, UnitKind, UnitPartition, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl GraphJson {
    pub fn to_graph(&self) -> Result<Graph, GraphError> {
        Graph::from_edge_list(self.n, self.edges.iter().map(|&[u, v]| (u, v)))
    }
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            n: g.n(),
            edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChronicleJson {
    pub initial: Vec<usize>,
    pub plays: Vec<[usize; 2]>,
}

impl From<&Chronicle> for ChronicleJson {
    fn from(c: &Chronicle) -> Self {
        ChronicleJson {
            initial: c.initial.to_vec(),
            plays: c.plays.iter().map(|p| [p.forcer, p.forced]).collect(),
        }
    }
}

impl From<&ChronicleJson> for Chronicle {
    fn from(c: &ChronicleJson) -> Self {
        Chronicle {
            initial: c.initial.iter().collect(),
            plays: c
                .plays
                .iter()
                .map(|&[forcer, forced]| zforce_core::Play { forcer, forced })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitJson {
    pub kind: String,
    pub members: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ends: Option<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionJson {
    pub units: Vec<UnitJson>,
}

impl From<&UnitPartition> for PartitionJson {
    fn from(p: &UnitPartition) -> Self {
        let units = p
            .units
            .iter()
            .map(|u| UnitJson {
                kind: match u.kind {
                    UnitKind::Triangle => "triangle",
                    UnitKind::Diamond => "diamond",
                }
                .to_string(),
                members: u.members.clone(),
                ends: u.ends.map(|(a, b)| [a, b]),
            })
            .collect();
        PartitionJson { units }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub mode: String,
    #[serde(rename = "S")]
    pub s: Vec<usize>,
    #[serde(rename = "I")]
    pub i: Vec<usize>,
    #[serde(rename = "M")]
    pub m: Vec<[usize; 2]>,
    pub chronicle: ChronicleJson,
}

impl From<&Certificate> for CertificateJson {
    fn from(c: &Certificate) -> Self {
        CertificateJson {
            mode: c.mode.as_str().to_string(),
            s: c.s.to_vec(),
            i: c.i.to_vec(),
            m: c.m.iter().map(|&(u, v)| [u, v]).collect(),
            chronicle: (&c.chronicle).into(),
        }
    }
}

/// One inequality row. `rhs` is a JSON number (an integer when exact);
/// `rhs_exact` keeps the exact fraction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InequalityJson {
    pub name: String,
    pub lhs: u64,
    pub rhs: serde_json::Number,
    pub rhs_exact: String,
    pub holds: bool,
    pub equality: bool,
}

impl From<&Inequality> for InequalityJson {
    fn from(r: &Inequality) -> Self {
        let rhs = match r.rhs.as_integer() {
            Some(x) => x.into(),
            None => serde_json::Number::from_f64(r.rhs.as_f64()).expect("finite"),
        };
        InequalityJson {
            name: r.name.to_string(),
            lhs: r.lhs,
            rhs,
            rhs_exact: r.rhs.to_string(),
            holds: r.holds,
            equality: r.equality,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportJson {
    pub graph: String,
    pub n: usize,
    pub n3: usize,
    pub n4: usize,
    #[serde(rename = "Z")]
    pub z: usize,
    #[serde(rename = "Z_witness")]
    pub z_witness: Vec<usize>,
    #[serde(rename = "Ft")]
    pub ft: usize,
    #[serde(rename = "Ft_witness")]
    pub ft_witness: Vec<usize>,
    pub alpha: usize,
    pub alpha_witness: Vec<usize>,
    pub alpha_prime: usize,
    pub matching_witness: Vec<[usize; 2]>,
    pub cert_size: usize,
    pub certificate_verified: bool,
    pub z_equals_alpha_plus_one: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub named: Option<String>,
    pub violations: Vec<String>,
    pub rows: Vec<InequalityJson>,
    pub certificate: CertificateJson,
}

fn set(s: &VertexSet) -> Vec<usize> {
    s.to_vec()
}

impl ReportJson {
    pub fn new(graph6: String, r: &BoundsReport) -> Self {
        let named = if r.is_prism {
            Some("prism")
        } else if r.is_n2 {
            Some("N2")
        } else if r.is_n3 {
            Some("N3")
        } else {
            None
        };
        ReportJson {
            graph: graph6,
            n: r.n,
            n3: r.n3,
            n4: r.n4,
            z: r.z,
            z_witness: set(&r.z_witness),
            ft: r.ft,
            ft_witness: set(&r.ft_witness),
            alpha: r.alpha,
            alpha_witness: set(&r.alpha_witness),
            alpha_prime: r.alpha_prime,
            matching_witness: r.matching_witness.iter().map(|&(u, v)| [u, v]).collect(),
            cert_size: r.cert_size,
            certificate_verified: r.certificate_verified,
            z_equals_alpha_plus_one: r.z_equals_alpha_plus_one,
            named: named.map(str::to_string),
            violations: r.violations().into_iter().map(str::to_string).collect(),
            rows: r.inequalities.iter().map(InequalityJson::from).collect(),
            certificate: (&r.certificate).into(),
        }
    }
}

/// A graph that did not qualify for a command, with the reason.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkippedJson {
    pub graph: String,
    pub skipped: String,
}

#[cfg(test)]
mod tests {
    use super::*;
    use zforce_core::generators::prism;
    use zforce_core::{build_certificate, triangle_diamond_partition};

    #[test]
    fn graph_round_trip() {
        let g = prism();
        let text = serde_json::to_string(&GraphJson::from(&g)).unwrap();
        assert!(text.starts_with(r#"{"n":6,"edges":[[0,1],"#));
        let back: GraphJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_graph().unwrap(), g);
    }

    #[test]
    fn partition_shape() {
        let g = zforce_core::generators::necklace(2).unwrap();
        let p = PartitionJson::from(&triangle_diamond_partition(&g).unwrap());
        let v = serde_json::to_value(&p).unwrap();
        assert_eq!(v["units"][0]["kind"], "diamond");
        assert_eq!(v["units"][0]["ends"], serde_json::json!([0, 3]));
        let t = PartitionJson::from(&triangle_diamond_partition(&prism()).unwrap());
        assert!(serde_json::to_value(&t).unwrap()["units"][0]
            .get("ends")
            .is_none());
    }

    #[test]
    fn certificate_keys() {
        let c = build_certificate(&prism()).unwrap();
        let v = serde_json::to_value(CertificateJson::from(&c)).unwrap();
        assert_eq!(v["mode"], "small-case");
        assert_eq!(v["S"], serde_json::json!([0, 1, 2]));
        assert!(v["chronicle"]["plays"].is_array());
        let replayed = Chronicle::from(&CertificateJson::from(&c).chronicle);
        assert_eq!(replayed, c.chronicle);
    }
}
