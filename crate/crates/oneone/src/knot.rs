//! From a twist word to the invariants of the associated (1,1)-knot:
//! ambient lens space, knot-group relator, and homology of the complement.

use num_bigint::BigInt;

use crate::intlinalg::AbelianGroup;
use crate::mcg::{apply_mcg, omega, MCGWord};
use crate::words::{Pi1Word, PiGen, Word};

/// A (1,1)-knot given by a twist word, with its derived invariants.
///
/// `p`, `q_prime`, `q_dblprime` are the abelianization coordinates of the
/// image of the beta loop: `psi(beta) = p*alpha + q'*beta + q''*gamma`. The
/// ambient lens space is `L(|p|, q' + q'')`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneOneKnot {
    pub psi: MCGWord,
    pub psi_beta: Pi1Word,
    /// Relator of the knot group: `psi_beta` with all beta syllables erased.
    pub relator: Pi1Word,
    pub p: i64,
    pub q_prime: i64,
    pub q_dblprime: i64,
}

impl OneOneKnot {
    /// `|p|`, the order parameter of the ambient lens space.
    pub fn lens_p(&self) -> i64 {
        self.p.abs()
    }

    /// Raw `q = q' + q''`.
    pub fn lens_q_raw(&self) -> i64 {
        self.q_prime + self.q_dblprime
    }

    /// `q` reduced into `[0, |p|)` when `|p| > 0`.
    pub fn lens_q_normalized(&self) -> Option<i64> {
        let p = self.lens_p();
        (p > 0).then(|| self.lens_q_raw().rem_euclid(p))
    }

    /// Human-readable ambient space: `S^3`, `S^1 x S^2`, or `L(p,q)`.
    pub fn ambient(&self) -> String {
        match (self.lens_p(), self.lens_q_normalized()) {
            (1, _) => "S^3".to_string(),
            (0, _) => "S^1 x S^2".to_string(),
            (p, Some(q)) => format!("L({p},{q})"),
            _ => unreachable!(),
        }
    }
}

/// Two-generator one-relator presentation of the knot-group complement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnotGroup {
    /// Generators are always `alpha-bar` and `gamma-bar`.
    pub relator: Pi1Word,
}

/// Computes the full invariant set of the (1,1)-knot defined by `psi`.
///
/// Panics if the exponent sums of `psi(beta)` disagree with the matrix image
/// of `psi`; that would be an implementation bug, not bad input.
pub fn analyze(psi: &MCGWord) -> OneOneKnot {
    let psi_beta = apply_mcg(psi, &Word::generator(PiGen::BetaBar))
        .expect("beta is over the twist-action alphabet");
    let relator = psi_beta.erase(PiGen::BetaBar);
    let p = psi_beta.exponent_sum(PiGen::AlphaBar);
    let q_prime = psi_beta.exponent_sum(PiGen::BetaBar);
    let q_dblprime = psi_beta.exponent_sum(PiGen::GammaBar);

    let m = omega(psi);
    assert_eq!(p, m.m21, "internal error: p disagrees with Omega(psi)");
    assert_eq!(
        q_prime + q_dblprime,
        m.m11,
        "internal error: q' + q'' disagrees with Omega(psi)"
    );

    OneOneKnot { psi: psi.clone(), psi_beta, relator, p, q_prime, q_dblprime }
}

pub fn knot_group(k: &OneOneKnot) -> KnotGroup {
    KnotGroup { relator: k.relator.clone() }
}

/// `H_1` of the knot complement: `<alpha, gamma | p*alpha + q''*gamma>`,
/// isomorphic to `Z + Z_gcd(p, q'')`. `gcd(0,0)` is taken as 0, giving `Z^2`.
pub fn complement_homology(k: &OneOneKnot) -> AbelianGroup {
    let g = num_integer::gcd(k.p, k.q_dblprime);
    if g == 0 {
        AbelianGroup::free(2)
    } else if g == 1 {
        AbelianGroup::free(1)
    } else {
        AbelianGroup { rank: 1, torsion: vec![BigInt::from(g)] }
    }
}
