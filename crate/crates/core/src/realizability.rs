//! Exponent certificates for `r = 2 - a/b`.
//!
//! Every qualifying `(a, b)` is reached from one of four base rooted graphs
//! (a star for `a = 1`, a rooted path, `T_{a-1,t}` or `T_{a-1,1,1}`) by
//! attaching `K_{1,1}` some number of times; each attachment raises the
//! density by one, i.e. sends `b/a` to `(b + a)/a`. [`derive`] picks the base
//! from `b mod a` using only integer arithmetic, and [`verify_certificate`]
//! rebuilds the graph and re-measures it with the density module.

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::density::{is_balanced, rho};
use crate::error::{Error, Result};
use crate::families::{
    attach_ktt_rooted, height_two_tree, rooted_path, rooted_power, rooted_star, tree_r11, RootedGraph,
};
use crate::graph::{Bipartition, Graph};
use crate::rational::{int, rat, Rational};

/// Power used when the caller does not pick one.
pub const DEFAULT_L: usize = 2;
/// Largest `a_max` / `b_max` accepted by [`enumerate_realizable`].
pub const SWEEP_BOUND: u64 = 50;

const S0_RULE: &str = "s0 = |V(H)|";
const L_RULE: &str = "l >= l0(F)";

/// `a/b` in lowest terms with `0 < a < b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ReducedRational {
    pub a: u64,
    pub b: u64,
}

impl ReducedRational {
    /// Reduces `a/b`; requires `0 < a < b` after reduction.
    pub fn new(a: u64, b: u64) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::InvalidParameter("a and b must be positive".into()));
        }
        let g = a.gcd(&b);
        let (a, b) = (a / g, b / g);
        if a >= b {
            return Err(Error::InvalidParameter(format!("need a < b, got {a}/{b}")));
        }
        Ok(ReducedRational { a, b })
    }

    /// The exponent `2 - a/b`.
    pub fn exponent(&self) -> Rational {
        int(2) - rat(self.a as i64, self.b as i64)
    }
}

/// Whether `2 - a/b` is covered: in lowest terms `b > a` and
/// `b >= max(a, (a-1)^2)`.
pub fn qualifies(a: u64, b: u64) -> bool {
    if a == 0 || b == 0 {
        return false;
    }
    let g = a.gcd(&b);
    let (a, b) = (a / g, b / g);
    b > a && b >= a.max((a - 1) * (a - 1))
}

/// Base rooted graph of a certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BaseFamily {
    /// Star `K_{1,t}` rooted at its leaves; powers are `K_{t,l}`.
    Ktl { t: u64 },
    /// Path with `len` edges rooted at its ends; powers are theta graphs.
    Theta { len: u64 },
    /// `T_{r,t}`.
    HeightTwo { r: u64, t: u64 },
    /// `T_{r,1,1}`.
    Tr11 { r: u64 },
}

impl BaseFamily {
    /// Density of the base as `(numerator, denominator)` with the
    /// denominator equal to the number of non-roots.
    pub fn density_parts(&self) -> (u64, u64) {
        match *self {
            BaseFamily::Ktl { t } => (t, 1),
            BaseFamily::Theta { len } => (len, len - 1),
            BaseFamily::HeightTwo { r, t } => (r * t + r, r + 1),
            BaseFamily::Tr11 { r } => (2 * r + 1, r + 1),
        }
    }

    /// `(vertices, roots)` of the base graph.
    fn sizes(&self) -> (u64, u64) {
        match *self {
            BaseFamily::Ktl { t } => (t + 1, t),
            BaseFamily::Theta { len } => (len + 1, 2),
            BaseFamily::HeightTwo { r, t } => (1 + r + r * t, r * t),
            BaseFamily::Tr11 { r } => (2 * r + 2, r + 1),
        }
    }

    pub fn build(&self) -> Result<RootedGraph> {
        let u = |v: u64| v as usize;
        match *self {
            BaseFamily::Ktl { t } => rooted_star(u(t)),
            BaseFamily::Theta { len } => rooted_path(u(len)),
            BaseFamily::HeightTwo { r, t } => height_two_tree(u(r), u(t)),
            BaseFamily::Tr11 { r } => tree_r11(u(r)),
        }
    }
}

/// A derivation of `2 - a/b`: base family, number of `K_{1,1}` attachments
/// and the power `l` used for the witness `H`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizabilityCertificate {
    pub a: u64,
    pub b: u64,
    pub base: BaseFamily,
    pub reductions: u64,
    pub l: u64,
    pub s0: u64,
    #[serde(with = "crate::rational::as_string")]
    pub exponent: Rational,
    pub verified: bool,
    pub s0_rule: String,
    pub l_rule: String,
}

impl RealizabilityCertificate {
    pub fn target(&self) -> Result<ReducedRational> {
        ReducedRational::new(self.a, self.b)
    }
}

/// Picks the base family and reduction count for `2 - a/b`, with `l = 2`.
pub fn derive(a: u64, b: u64) -> Result<RealizabilityCertificate> {
    derive_with_l(a, b, DEFAULT_L as u64)
}

pub fn derive_with_l(a: u64, b: u64, l: u64) -> Result<RealizabilityCertificate> {
    if !qualifies(a, b) {
        return Err(Error::NotQualified { a, b });
    }
    if l == 0 {
        return Err(Error::InvalidParameter("l must be positive".into()));
    }
    let target = ReducedRational::new(a, b)?;
    let (a, b) = (target.a, target.b);
    let residue = b % a;

    // (base, base numerator); the base denominator is always `a`
    let (base, base_num) = if a == 1 {
        (BaseFamily::Ktl { t: b }, b)
    } else if residue == 1 {
        (BaseFamily::Theta { len: a + 1 }, a + 1)
    } else if residue == a - 1 {
        // a >= 3 here: for a = 2 the residue 1 branch above wins
        (BaseFamily::Tr11 { r: a - 1 }, 2 * a - 1)
    } else if (2..=a - 2).contains(&residue) {
        let t = a - 1 - residue;
        (BaseFamily::HeightTwo { r: a - 1, t }, (a - 1) * (t + 1))
    } else {
        return Err(Error::CertificateInvalid(format!(
            "residue {residue} of {b} mod {a} has no chain"
        )));
    };

    if base_num > b || (b - base_num) % a != 0 {
        return Err(Error::CertificateInvalid(format!(
            "base density {base_num}/{a} does not reach {b}/{a}"
        )));
    }
    let reductions = (b - base_num) / a;
    if base.density_parts() != (base_num, a) {
        return Err(Error::CertificateInvalid(format!(
            "base {base:?} does not have density {base_num}/{a}"
        )));
    }

    let (n0, r0) = base.sizes();
    let non_roots = n0 - r0;
    let s0 = r0 + 2 * reductions + l * non_roots;

    Ok(RealizabilityCertificate {
        a,
        b,
        base,
        reductions,
        l,
        s0,
        exponent: target.exponent(),
        verified: false,
        s0_rule: S0_RULE.into(),
        l_rule: L_RULE.into(),
    })
}

/// The rooted graph `F` certified by a certificate, its parts, and
/// `H = F_R^l`.
#[derive(Clone, Debug)]
pub struct Witness {
    pub f_final: RootedGraph,
    pub parts: Bipartition,
    pub h: Graph,
    pub s0: usize,
}

pub fn build_witness(cert: &RealizabilityCertificate, l: usize) -> Result<Witness> {
    let mut f = cert.base.build()?;
    let mut parts = f
        .graph()
        .bipartition()
        .ok_or_else(|| Error::NotBipartite("base graph".into()))?;
    for _ in 0..cert.reductions {
        let (next, next_parts) = attach_ktt_rooted(&f, &parts, 1)?;
        f = next;
        parts = next_parts;
    }
    let h = rooted_power(&f, l)?.rooted.into_graph();
    let s0 = h.n();
    Ok(Witness {
        f_final: f,
        parts,
        h,
        s0,
    })
}

/// Why a certificate was rejected.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ReasonCode {
    NotQualified,
    ExponentMismatch,
    BuildFailed,
    NotBipartite,
    RhoMismatch,
    Unbalanced,
    S0Mismatch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verification {
    pub ok: bool,
    pub reason: Option<ReasonCode>,
}

impl Verification {
    fn fail(reason: ReasonCode) -> Self {
        Verification {
            ok: false,
            reason: Some(reason),
        }
    }
}

/// Rebuilds the certified graph and re-checks it from scratch: the exponent,
/// bipartiteness, `ρ(F) = b/a`, balancedness and `s0`.
pub fn verify_certificate(cert: &RealizabilityCertificate) -> Verification {
    if !qualifies(cert.a, cert.b) {
        return Verification::fail(ReasonCode::NotQualified);
    }
    let Ok(target) = cert.target() else {
        return Verification::fail(ReasonCode::NotQualified);
    };
    if target != (ReducedRational { a: cert.a, b: cert.b }) || cert.exponent != target.exponent() {
        return Verification::fail(ReasonCode::ExponentMismatch);
    }
    let Ok(witness) = build_witness(cert, cert.l as usize) else {
        return Verification::fail(ReasonCode::BuildFailed);
    };
    if witness.parts.check_edges(witness.f_final.graph()).is_err() || witness.h.bipartition().is_none() {
        return Verification::fail(ReasonCode::NotBipartite);
    }
    if rho(&witness.f_final) != rat(cert.b as i64, cert.a as i64) {
        return Verification::fail(ReasonCode::RhoMismatch);
    }
    match is_balanced(&witness.f_final) {
        Ok(rep) if rep.balanced => {}
        _ => return Verification::fail(ReasonCode::Unbalanced),
    }
    if witness.s0 as u64 != cert.s0 {
        return Verification::fail(ReasonCode::S0Mismatch);
    }
    Verification { ok: true, reason: None }
}

/// [`derive_with_l`] followed by [`verify_certificate`]; the returned
/// certificate has `verified = true`.
pub fn certify(a: u64, b: u64, l: u64) -> Result<RealizabilityCertificate> {
    let mut cert = derive_with_l(a, b, l)?;
    let check = verify_certificate(&cert);
    if !check.ok {
        return Err(Error::CertificateInvalid(format!(
            "{:?} for {}/{}",
            check.reason, cert.a, cert.b
        )));
    }
    cert.verified = true;
    Ok(cert)
}

/// All reduced qualifying `(a, b)` with `a <= a_max`, `b <= b_max`, in
/// lexicographic order, each with a verified certificate.
pub fn enumerate_realizable(a_max: u64, b_max: u64) -> Result<Vec<RealizabilityCertificate>> {
    if a_max > SWEEP_BOUND || b_max > SWEEP_BOUND {
        return Err(Error::TooLarge(format!("sweep bounds are capped at {SWEEP_BOUND}")));
    }
    let pairs: Vec<(u64, u64)> = (1..=a_max)
        .flat_map(|a| (a + 1..=b_max).map(move |b| (a, b)))
        .filter(|&(a, b)| a.gcd(&b) == 1 && qualifies(a, b))
        .collect();
    pairs
        .into_par_iter()
        .map(|(a, b)| certify(a, b, DEFAULT_L as u64))
        .collect()
}
