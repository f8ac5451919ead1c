//! Per-graph analysis shared by the CLI and the acceptance suite.

use thiserror::Error;
use zforce_core::certify::{CertifyError, VerificationReport};
use zforce_core::forcing::ForcingError;
use zforce_core::generators::{enumerate_connected_claw_free_cubic, ENUMERATION_CAP};
use zforce_core::solvers::{bounds_report, BoundsReport, ReportError, SolverError};
use zforce_core::structure::StructureError;
use zforce_core::{build_certificate, verify_certificate, Certificate, Graph, SolverConfig};

use crate::batch::ordered_map;

/// Why a graph does not qualify.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Skip {
    IsK4,
    NotClawFreeCubic,
    Disconnected,
    InstanceTooLarge,
}

impl Skip {
    pub fn as_str(self) -> &'static str {
        match self {
            Skip::IsK4 => "IsK4",
            Skip::NotClawFreeCubic => "NotClawFreeCubic",
            Skip::Disconnected => "Disconnected",
            Skip::InstanceTooLarge => "InstanceTooLarge",
        }
    }
}

pub fn qualify(g: &Graph) -> Result<(), Skip> {
    if g.is_k4() {
        Err(Skip::IsK4)
    } else if !g.is_cubic() || !g.is_claw_free() {
        Err(Skip::NotClawFreeCubic)
    } else if !g.is_connected() {
        Err(Skip::Disconnected)
    } else {
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub enum Analysis {
    Report(Box<BoundsReport>),
    Skipped(Skip),
    /// The certificate builder failed on a qualifying graph.
    Failed(String),
}

pub fn analyze(g: &Graph, config: &SolverConfig) -> Analysis {
    if let Err(skip) = qualify(g) {
        return Analysis::Skipped(skip);
    }
    if g.n() > config.cap {
        return Analysis::Skipped(Skip::InstanceTooLarge);
    }
    match bounds_report(g, config) {
        Ok(r) => Analysis::Report(Box::new(r)),
        Err(ReportError::Forcing(ForcingError::InstanceTooLarge { .. }))
        | Err(ReportError::Solver(SolverError::InstanceTooLarge { .. })) => {
            Analysis::Skipped(Skip::InstanceTooLarge)
        }
        Err(e) => Analysis::Failed(e.to_string()),
    }
}

#[derive(Debug, Clone)]
pub enum Certification {
    Built(Box<Certificate>, VerificationReport),
    Skipped(Skip),
    Failed(String),
}

pub fn certify(g: &Graph) -> Certification {
    if let Err(skip) = qualify(g) {
        return Certification::Skipped(skip);
    }
    match build_certificate(g) {
        Ok(c) => {
            let report = verify_certificate(g, &c);
            Certification::Built(Box::new(c), report)
        }
        Err(CertifyError::Structure(StructureError::IsK4)) => Certification::Skipped(Skip::IsK4),
        Err(e) => Certification::Failed(e.to_string()),
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HuntError {
    #[error("--max-n {max_n} exceeds the enumeration limit {limit}")]
    EnumerationLimit { max_n: usize, limit: usize },
    #[error("--max-n {max_n} exceeds the solver cap {cap}")]
    SolverCap { max_n: usize, cap: usize },
}

#[derive(Debug, Clone)]
pub struct Finding {
    pub graph: Graph,
    pub report: BoundsReport,
}

#[derive(Debug, Clone, Default)]
pub struct HuntOutcome {
    pub examined: usize,
    /// Graphs with `Z = alpha + 1`, in corpus order.
    pub findings: Vec<Finding>,
    /// Graphs where some row or check failed.
    pub violations: Vec<Finding>,
    pub failures: Vec<(Graph, String)>,
}

/// Exact solve over the whole corpus up to `max_n`.
pub fn hunt(
    max_n: usize,
    config: &SolverConfig,
    pool: &rayon::ThreadPool,
) -> Result<HuntOutcome, HuntError> {
    if max_n > ENUMERATION_CAP {
        return Err(HuntError::EnumerationLimit {
            max_n,
            limit: ENUMERATION_CAP,
        });
    }
    if max_n > config.cap {
        return Err(HuntError::SolverCap {
            max_n,
            cap: config.cap,
        });
    }
    let corpus = enumerate_connected_claw_free_cubic(max_n).expect("max_n checked");
    let results = ordered_map(pool, &corpus, |g| analyze(g, config));
    let mut out = HuntOutcome {
        examined: corpus.len(),
        ..HuntOutcome::default()
    };
    for (g, a) in corpus.into_iter().zip(results) {
        match a {
            Analysis::Report(r) => {
                if !r.violations().is_empty() {
                    out.violations.push(Finding {
                        graph: g.clone(),
                        report: (*r).clone(),
                    });
                }
                if r.z_equals_alpha_plus_one {
                    out.findings.push(Finding {
                        graph: g,
                        report: *r,
                    });
                }
            }
            Analysis::Skipped(s) => out.failures.push((g, s.as_str().to_string())),
            Analysis::Failed(e) => out.failures.push((g, e)),
        }
    }
    Ok(out)
}
