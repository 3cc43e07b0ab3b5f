//! Strongly-cyclic branched coverings of a (1,1)-knot: which `n`-fold
//! coverings exist, their monodromies, and the cyclic presentation of the
//! covering's fundamental group.

use num_integer::Integer;
use thiserror::Error;

use crate::cyclicpres::{CyclicPresentation, CyclicPresError};
use crate::knot::OneOneKnot;
use crate::words::{GeneratorMap, Pi1Word, PiGen, Word};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CoveringError {
    #[error("sheet count n must be at least 2")]
    BadSheetCount,
    #[error("monodromy does not satisfy p*x + q'' = 0 mod n for this knot")]
    InconsistentMonodromy,
    #[error("relator contains no alpha-hat syllable; the word theorem does not apply")]
    DegenerateRelator,
    #[error(transparent)]
    CyclicPres(#[from] CyclicPresError),
}

/// Monodromy of an `n`-fold strongly-cyclic branched covering, determined by
/// the value `x = ω_f(alpha)` in `[0, n)`; `ω_f(gamma) = 1` always.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Monodromy {
    pub n: i64,
    pub x: i64,
}

fn check_monodromy(k: &OneOneKnot, m: Monodromy) -> Result<(), CoveringError> {
    if m.n < 2 {
        return Err(CoveringError::BadSheetCount);
    }
    if (k.p * m.x + k.q_dblprime).rem_euclid(m.n) != 0 {
        return Err(CoveringError::InconsistentMonodromy);
    }
    Ok(())
}

/// Enumerates the monodromies of `n`-fold strongly-cyclic branched coverings.
///
/// Coverings exist iff `d = gcd(p, n)` divides `q''`; then there are exactly
/// `d` of them, the solutions `x` of `p*x + q'' = 0 mod n`, returned in
/// ascending order. `gcd(0, n) = n`, so a knot with `p = 0` is covered iff
/// `n | q''`.
pub fn covering_monodromies(k: &OneOneKnot, n: i64) -> Result<Vec<Monodromy>, CoveringError> {
    if n < 2 {
        return Err(CoveringError::BadSheetCount);
    }
    let p = k.p.rem_euclid(n);
    let q = (-k.q_dblprime).rem_euclid(n);
    // solve p*x = q (mod n)
    let e = i64::extended_gcd(&p, &n);
    let d = e.gcd;
    if q % d != 0 {
        return Ok(Vec::new());
    }
    let step = n / d;
    let x0 = (e.x * (q / d)).rem_euclid(step);
    Ok((0..d).map(|t| Monodromy { n, x: x0 + t * step }).collect())
}

/// Rewrites the knot-group relator over the covering generators: substitutes
/// `alpha-bar -> alpha-hat gamma-bar^x` and reduces. The gamma exponent sum
/// of the result is divisible by `n`.
pub fn rbar(k: &OneOneKnot, m: Monodromy) -> Result<Pi1Word, CoveringError> {
    check_monodromy(k, m)?;
    let map = GeneratorMap::new()
        .with(
            PiGen::AlphaBar,
            Word::generator(PiGen::AlphaHat)
                .concat(&Word::generator(PiGen::GammaBar).pow(m.x)),
        )
        .with(PiGen::GammaBar, Word::generator(PiGen::GammaBar));
    Ok(k.relator
        .substitute(&map)
        .expect("relator is over alpha-bar and gamma-bar"))
}

/// The relator written as `α̂^{ε_1} γ̄^{δ_1} ... α̂^{ε_s} γ̄^{δ_s}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyllableDecomposition {
    pub pairs: Vec<(i64, i64)>,
}

/// How a relator decomposes for the word theorem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RelatorShape {
    /// Empty relator: the covering group is free of rank `n`.
    Free,
    /// Alternating alpha-hat / gamma-bar form, rotated to start with an
    /// alpha-hat syllable.
    Decomposed(SyllableDecomposition),
}

/// Reads off the `(ε_k, δ_k)` pairs of a relator over `{alpha-hat,
/// gamma-bar}`. The word is first cyclically rotated to begin with an
/// alpha-hat syllable (a conjugate relator, so the resulting cyclic word
/// changes only by a θ-shift).
pub fn decompose(r: &Pi1Word) -> Result<RelatorShape, CoveringError> {
    if r.is_identity() {
        return Ok(RelatorShape::Free);
    }
    let start = r
        .syllables()
        .iter()
        .position(|&(g, _)| g == PiGen::AlphaHat)
        .ok_or(CoveringError::DegenerateRelator)?;
    let rotated = r.cyclic_rotate(start);
    let syl = rotated.syllables();
    let mut pairs: Vec<(i64, i64)> = Vec::new();
    let mut i = 0;
    while i < syl.len() {
        debug_assert_eq!(syl[i].0, PiGen::AlphaHat);
        let eps = syl[i].1;
        let delta = if i + 1 < syl.len() && syl[i + 1].0 == PiGen::GammaBar {
            i += 2;
            syl[i - 1].1
        } else {
            i += 1;
            0
        };
        pairs.push((eps, delta));
    }
    Ok(RelatorShape::Decomposed(SyllableDecomposition { pairs }))
}

/// The word theorem: `w = x_{i_1}^{ε_1} ... x_{i_s}^{ε_s}` with
/// `i_k = 1 + Σ_{j<k} δ_j (mod n)`, defining the cyclic presentation
/// `G_n(w)` of the covering's fundamental group.
pub fn cyclic_word(k: &OneOneKnot, m: Monodromy) -> Result<CyclicPresentation, CoveringError> {
    let r = rbar(k, m)?;
    match decompose(&r)? {
        RelatorShape::Free => Ok(CyclicPresentation::new(m.n as usize, [])?),
        RelatorShape::Decomposed(dec) => {
            let mut raw: Vec<(i64, i64)> = Vec::with_capacity(dec.pairs.len());
            let mut acc: i64 = 0;
            for &(eps, delta) in &dec.pairs {
                raw.push((1 + acc, eps));
                acc += delta;
            }
            Ok(CyclicPresentation::new(m.n as usize, raw)?)
        }
    }
}
