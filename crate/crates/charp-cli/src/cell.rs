//! Per-cell computations shared by `verify-paper`, `sweep`, and
//! `frobenius-ass`: one cell is one pair `(p, e)` together with the
//! hypersurface polynomial, and the checks are the identities the engine
//! exists to confirm.

use std::sync::Arc;
use std::time::Instant;

use anyhow::{anyhow, Result};
use serde::Serialize;

use charp_core::{
    geometric_colon_check, parse, probe_associated_primes, split_image_is_power_image, tau,
    torsion_checks, Hypersurface, MultiPoly, PolyRing,
};

/// The hypersurface used when none is given: four pairwise non-proportional
/// linear forms for every prime.
pub const DEFAULT_F: &str = "x*y*(x-y)*(x-t*y)";

/// Shorthand for hoisting core errors into `anyhow` (the core crate is
/// `no_std` and does not implement `std::error::Error`).
pub fn ce(e: charp_core::Error) -> anyhow::Error {
    anyhow!("{e}")
}

pub fn txy_ring(p: u64) -> Result<Arc<PolyRing>> {
    PolyRing::txy(p).map_err(ce)
}

pub fn parse_f(f_expr: &str, ring: &Arc<PolyRing>) -> Result<MultiPoly> {
    parse(f_expr, ring).map_err(|pe| anyhow!("in {f_expr:?}: {pe}"))
}

/// The identity checks for one `(p, e)` cell.
#[derive(Debug, Clone)]
pub struct Cell {
    pub p: u64,
    pub e: u32,
    pub q: u64,
    /// `q = 2`: the unscaled witness already lies in the ideal, so the
    /// non-membership leg is vacuous there.
    pub degenerate: bool,
    /// The colon identity `(x^(q-1), y^(q-1)) : (x - y) = (y^(q-1), gamma)`.
    pub lemma11: bool,
    /// `tau * G` lies in `(x^q, y^q, f)`.
    pub member_tau_g: bool,
    /// `G` itself does not.
    pub not_member_g: bool,
    /// `((x^q, y^q, f) : G) ∩ F_p[t] = (tau)`.
    pub contraction_is_tau: bool,
    /// Image of the split intersection equals the image of `(x, y)^q`;
    /// `None` when `f` is not a reduced product of linear forms, in which
    /// case there is nothing to compare.
    pub ge_check: Option<bool>,
    pub duration_ms: u64,
}

impl Cell {
    /// True when every check that is expected to hold does hold.
    pub fn ok(&self) -> bool {
        self.lemma11
            && self.member_tau_g
            && (self.degenerate || self.not_member_g)
            && self.contraction_is_tau
            && self.ge_check != Some(false)
    }
}

/// Runs the identity checks for one cell.
pub fn check_cell(p: u64, e: u32, f_expr: &str) -> Result<Cell> {
    let start = Instant::now();
    let ring = txy_ring(p)?;
    let f = parse_f(f_expr, &ring)?;
    let q = ring.field().power_of_p(e).map_err(ce)?;
    let lemma11 = geometric_colon_check(&ring, q).map_err(ce)?;
    let tc = torsion_checks(&f, e).map_err(ce)?;
    let h = Hypersurface::new(f).map_err(ce)?;
    let ge_check = match split_image_is_power_image(&h, e) {
        Ok(b) => Some(b),
        Err(charp_core::Error::MissingSplitForm | charp_core::Error::InvalidSplitForm) => None,
        Err(other) => return Err(ce(other)),
    };
    Ok(Cell {
        p,
        e,
        q,
        degenerate: q == 2,
        lemma11,
        member_tau_g: tc.scaled_witness_member,
        not_member_g: !tc.witness_member,
        contraction_is_tau: tc.contraction_is_scale,
        ge_check,
        duration_ms: start.elapsed().as_millis() as u64,
    })
}

/// One associated-prime probe, serialization-ready.
#[derive(Debug, Clone, Serialize)]
pub struct ProbeJson {
    pub pi: String,
    pub associated: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// The elementary-divisor and associated-prime data for one cell.
#[derive(Debug, Clone)]
pub struct ProbeData {
    pub q: u64,
    /// Non-unit elementary divisors of the quotient as an `F_p[t]`-module.
    pub divisors: Vec<String>,
    pub free_rank: usize,
    /// Whether `tau(q)` divides the largest elementary divisor; `None`
    /// when every divisor is zero and there is nothing to divide.
    pub tau_divides_largest: Option<bool>,
    pub probes: Vec<ProbeJson>,
}

/// Computes elementary divisors and probes every irreducible factor of the
/// largest one.
pub fn probe_cell(p: u64, e: u32, f_expr: &str, seed: u64) -> Result<ProbeData> {
    let ring = txy_ring(p)?;
    let f = parse_f(f_expr, &ring)?;
    let report = probe_associated_primes(&f, e, seed).map_err(ce)?;
    let scale = tau(ring.field(), e).map_err(ce)?;
    let tau_divides_largest =
        report.elementary.largest().map(|d| d.is_multiple_of(&scale));
    Ok(ProbeData {
        q: report.q,
        divisors: report.elementary.torsion().iter().map(|d| d.to_string()).collect(),
        free_rank: report.elementary.free_rank,
        tau_divides_largest,
        probes: report
            .probes
            .iter()
            .map(|pr| ProbeJson {
                pi: pr.pi.to_string(),
                associated: pr.associated,
                witness: pr.witness.as_ref().map(|w| w.to_string()),
            })
            .collect(),
    })
}
