use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use thiserror::Error;

use super::{independence_number, matching_number, SolverError, DEFAULT_INDEPENDENCE_CAP};
use crate::certify::{build_certificate, verify_certificate, Certificate, CertifyError};
use crate::forcing::{total_forcing_number, zero_forcing_number, ForcingError, SolverConfig};
use crate::generators::{necklace, prism};
use crate::structure::{triangle_diamond_partition, StructureError};
use crate::{are_isomorphic, Graph, Vertex, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReportError {
    #[error(transparent)]
    Forcing(#[from] ForcingError),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error(transparent)]
    Certify(#[from] CertifyError),
    #[error(transparent)]
    Structure(#[from] StructureError),
}

/// A non-negative rational `num / den`, used for right-hand sides such as
/// `2n/5 + 1`. Comparisons are exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rational {
    pub num: u64,
    pub den: u64,
}

impl Rational {
    pub fn new(num: u64, den: u64) -> Self {
        Rational { num, den }
    }

    pub fn int(x: u64) -> Self {
        Rational { num: x, den: 1 }
    }

    pub fn cmp_int(&self, x: u64) -> Ordering {
        (x * self.den).cmp(&self.num).reverse()
    }

    pub fn as_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    pub fn as_integer(&self) -> Option<u64> {
        self.num
            .is_multiple_of(self.den)
            .then_some(self.num / self.den)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_integer() {
            Some(x) => write!(f, "{x}"),
            None => write!(f, "{}/{}", self.num, self.den),
        }
    }
}

/// `lhs <= rhs`, evaluated exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Inequality {
    pub name: &'static str,
    pub lhs: u64,
    pub rhs: Rational,
    pub holds: bool,
    pub equality: bool,
}

impl Inequality {
    fn new(name: &'static str, lhs: u64, rhs: Rational) -> Self {
        let ord = rhs.cmp_int(lhs);
        Inequality {
            name,
            lhs,
            rhs,
            holds: ord != Ordering::Less,
            equality: ord == Ordering::Equal,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    pub n: usize,
    pub n3: usize,
    pub n4: usize,
    pub z: usize,
    pub z_witness: VertexSet,
    pub ft: usize,
    pub ft_witness: VertexSet,
    pub alpha: usize,
    pub alpha_witness: VertexSet,
    pub alpha_prime: usize,
    pub matching_witness: Vec<(Vertex, Vertex)>,
    pub cert_size: usize,
    pub certificate: Certificate,
    pub certificate_verified: bool,
    pub inequalities: Vec<Inequality>,
    pub is_prism: bool,
    pub is_n2: bool,
    pub is_n3: bool,
    pub z_equals_alpha_plus_one: bool,
}

impl BoundsReport {
    pub fn row(&self, name: &str) -> Option<&Inequality> {
        self.inequalities.iter().find(|r| r.name == name)
    }

    /// `Z = n/2` exactly on the prism and the two-diamond necklace.
    pub fn half_order_equality_characterized(&self) -> bool {
        (2 * self.z == self.n) == (self.is_prism || self.is_n2)
    }

    /// Names of failed rows and checks; empty on every valid input.
    pub fn violations(&self) -> Vec<&'static str> {
        let mut out: Vec<&'static str> = self
            .inequalities
            .iter()
            .filter(|r| !r.holds)
            .map(|r| r.name)
            .collect();
        if !self.half_order_equality_characterized() {
            out.push("Thm3Equality");
        }
        if !self.certificate_verified {
            out.push("Certificate");
        }
        out
    }
}

/// Evaluates every bound on one connected claw-free cubic graph.
///
/// The forcing numbers honor `config.cap`; the independence search uses the
/// larger of that cap and its own default.
pub fn bounds_report(g: &Graph, config: &SolverConfig) -> Result<BoundsReport, ReportError> {
    let partition = triangle_diamond_partition(g)?;
    let certificate = build_certificate(g)?;
    let certificate_verified = verify_certificate(g, &certificate).passed();
    let (z, z_witness) = zero_forcing_number(g, config)?;
    let (ft, ft_witness) = total_forcing_number(g, config)?;
    let (alpha, alpha_witness) = independence_number(g, config.cap.max(DEFAULT_INDEPENDENCE_CAP))?;
    let (alpha_prime, matching_witness) = matching_number(g);

    let n = g.n() as u64;
    let (n3, n4) = (partition.triangle_count(), partition.diamond_count());
    let units = (n3 + n4) as u64;
    let cert = certificate.s.len() as u64;
    let (zz, a, ap) = (z as u64, alpha as u64, alpha_prime as u64);

    let inequalities = alloc::vec![
        Inequality::new("Thm1", a, Rational::new(2 * n, 5)),
        Inequality::new("Thm2", zz, Rational::new(n + 2, 2)),
        Inequality::new("Thm3", zz, Rational::new(n, 2)),
        Inequality::new("Thm4a", zz, Rational::int(a + 1)),
        Inequality::new("Thm4b", zz, Rational::int(ap)),
        Inequality::new("Cor5", zz, Rational::new(2 * n + 5, 5)),
        Inequality::new("Cor7a", zz, Rational::int(units + 2)),
        Inequality::new("Cor7b", zz, Rational::new(n + 6, 3)),
        Inequality::new("FtHalf", ft as u64, Rational::new(n, 2)),
        Inequality::new("ZleFt", zz, Rational::int(ft as u64)),
        Inequality::new("ZleCert", zz, Rational::int(cert)),
        Inequality::new("CertAlpha", cert, Rational::int(a + 1)),
        Inequality::new("CertMatching", cert, Rational::int(ap)),
        Inequality::new("CertUnits", cert, Rational::int(units + 2)),
        Inequality::new("CertThird", cert, Rational::new(n + 6, 3)),
    ];

    let n2 = necklace(2).expect("k = 2");
    let n3_graph = necklace(3).expect("k = 3");
    Ok(BoundsReport {
        n: g.n(),
        n3,
        n4,
        z,
        z_witness,
        ft,
        ft_witness,
        alpha,
        alpha_witness,
        alpha_prime,
        matching_witness,
        cert_size: certificate.s.len(),
        certificate,
        certificate_verified,
        inequalities,
        is_prism: are_isomorphic(g, &prism()),
        is_n2: are_isomorphic(g, &n2),
        is_n3: are_isomorphic(g, &n3_graph),
        z_equals_alpha_plus_one: z == alpha + 1,
    })
}
