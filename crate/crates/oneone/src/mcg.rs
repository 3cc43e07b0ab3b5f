//! The pure mapping class group of the twice-punctured torus: words in the
//! Dehn twists `d_alpha`, `d_beta`, `d_gamma`, their action on the
//! fundamental group of the punctured torus, and the homomorphism to
//! `SL(2,Z)`.
//!
//! Composition convention: in a twist word read left to right, the rightmost
//! factor acts first on loops (function composition). The matrix image
//! multiplies factors in the same left-to-right order. Both conventions are
//! pinned by golden tests against the worked torus-knot formulas.

use std::fmt;

use thiserror::Error;

use crate::words::{parse_factors, render_word, GeneratorMap, Pi1Word, PiGen, Word, WordError};

/// The three right-hand Dehn twist generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Twist {
    Alpha,
    Beta,
    Gamma,
}

impl Twist {
    pub fn symbol(self) -> char {
        match self {
            Twist::Alpha => 'a',
            Twist::Beta => 'b',
            Twist::Gamma => 'g',
        }
    }

    pub fn from_symbol(c: char) -> Option<Twist> {
        match c {
            'a' => Some(Twist::Alpha),
            'b' => Some(Twist::Beta),
            'g' => Some(Twist::Gamma),
            _ => None,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum McgError {
    #[error("the twist action is defined only on the a, b, g alphabet")]
    AlphaHatInWord,
    #[error("torus-knot parameters require h >= 1 and k >= 1")]
    BadTorusParams,
    #[error(transparent)]
    Word(#[from] WordError),
}

/// A word in the twist generators, stored with adjacent equal twists merged
/// and zero exponents dropped. The empty word is the identity mapping class.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MCGWord {
    factors: Vec<(Twist, i64)>,
}

impl MCGWord {
    pub fn identity() -> Self {
        MCGWord { factors: Vec::new() }
    }

    pub fn from_factors<I: IntoIterator<Item = (Twist, i64)>>(raw: I) -> Self {
        let mut factors: Vec<(Twist, i64)> = Vec::new();
        for (t, e) in raw {
            if e == 0 {
                continue;
            }
            match factors.last_mut() {
                Some((top, te)) if *top == t => {
                    *te += e;
                    if *te == 0 {
                        factors.pop();
                    }
                }
                _ => factors.push((t, e)),
            }
        }
        MCGWord { factors }
    }

    /// Parses the grammar `factor*`, `factor := ('a'|'b'|'g') ('^' int)?`,
    /// e.g. `a^-2 g^-2 a^-2`. Adjacent equal letters are merged.
    pub fn parse(text: &str) -> Result<Self, WordError> {
        Ok(MCGWord::from_factors(parse_factors(text, Twist::from_symbol)?))
    }

    pub fn factors(&self) -> &[(Twist, i64)] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn concat(&self, other: &MCGWord) -> MCGWord {
        MCGWord::from_factors(
            self.factors.iter().chain(other.factors.iter()).copied(),
        )
    }

    pub fn inverse(&self) -> MCGWord {
        MCGWord {
            factors: self.factors.iter().rev().map(|&(t, e)| (t, -e)).collect(),
        }
    }
}

impl fmt::Display for MCGWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Word<Twist> = Word::from_syllables(self.factors.iter().copied());
        write!(f, "{}", render_word(&w, |t| t.symbol().to_string()))
    }
}

/// An element of `SL(2,Z)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SL2Matrix {
    pub m11: i64,
    pub m12: i64,
    pub m21: i64,
    pub m22: i64,
}

impl SL2Matrix {
    pub const IDENTITY: SL2Matrix = SL2Matrix { m11: 1, m12: 0, m21: 0, m22: 1 };

    pub fn mul(self, o: SL2Matrix) -> SL2Matrix {
        SL2Matrix {
            m11: self.m11 * o.m11 + self.m12 * o.m21,
            m12: self.m11 * o.m12 + self.m12 * o.m22,
            m21: self.m21 * o.m11 + self.m22 * o.m21,
            m22: self.m21 * o.m12 + self.m22 * o.m22,
        }
    }

    pub fn det(self) -> i64 {
        self.m11 * self.m22 - self.m12 * self.m21
    }

    /// Integer power by repeated multiplication of the matrix or its inverse.
    pub fn pow(self, e: i64) -> SL2Matrix {
        let base = if e < 0 {
            // inverse of a det-1 matrix
            SL2Matrix { m11: self.m22, m12: -self.m12, m21: -self.m21, m22: self.m11 }
        } else {
            self
        };
        let mut out = SL2Matrix::IDENTITY;
        for _ in 0..e.unsigned_abs() {
            out = out.mul(base);
        }
        out
    }
}

fn check_alphabet(w: &Pi1Word) -> Result<(), McgError> {
    if w.syllables().iter().any(|&(g, _)| g == PiGen::AlphaHat) {
        Err(McgError::AlphaHatInWord)
    } else {
        Ok(())
    }
}

/// The substitution of a single twist power `t^e` on loop classes.
///
/// Each twist fixes the letter it introduces, so the power has the closed
/// form obtained by iterating the generator action: e.g. `d_alpha^e` sends
/// `beta -> alpha^e beta` and `gamma -> alpha^e gamma`.
fn twist_map(t: Twist, e: i64) -> GeneratorMap<PiGen, PiGen> {
    use PiGen::*;
    let mut m = GeneratorMap::identity();
    let a = Word::generator(AlphaBar);
    let b = Word::generator(BetaBar);
    let g = Word::generator(GammaBar);
    match t {
        Twist::Alpha => {
            m.set(BetaBar, a.pow(e).concat(&b));
            m.set(GammaBar, a.pow(e).concat(&g));
        }
        Twist::Beta => {
            m.set(AlphaBar, b.pow(-e).concat(&a));
        }
        Twist::Gamma => {
            m.set(AlphaBar, a.concat(&g.pow(-e)));
        }
    }
    m
}

/// Applies a single twist or its inverse (`e = ±1`) to a word over the
/// `alpha-bar, beta-bar, gamma-bar` alphabet.
pub fn apply_twist(t: Twist, e: i64, w: &Pi1Word) -> Result<Pi1Word, McgError> {
    check_alphabet(w)?;
    Ok(w.substitute(&twist_map(t, e))?)
}

/// Applies a full twist word, rightmost factor first.
pub fn apply_mcg(psi: &MCGWord, w: &Pi1Word) -> Result<Pi1Word, McgError> {
    check_alphabet(w)?;
    let mut out = w.clone();
    for &(t, e) in psi.factors().iter().rev() {
        out = out.substitute(&twist_map(t, e))?;
    }
    Ok(out)
}

/// The homomorphism to `SL(2,Z)` with respect to the ordered homology basis
/// `(beta, alpha)`: `d_alpha -> [[1,0],[1,1]]`,
/// `d_beta, d_gamma -> [[1,-1],[0,1]]`.
pub fn omega(psi: &MCGWord) -> SL2Matrix {
    let gen = |t: Twist| match t {
        Twist::Alpha => SL2Matrix { m11: 1, m12: 0, m21: 1, m22: 1 },
        Twist::Beta | Twist::Gamma => SL2Matrix { m11: 1, m12: -1, m21: 0, m22: 1 },
    };
    psi.factors()
        .iter()
        .fold(SL2Matrix::IDENTITY, |acc, &(t, e)| acc.mul(gen(t).pow(e)))
}

/// Sign of the `d_alpha^{±h}` factor in the four-factor torus-knot word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlphaSign {
    Plus,
    Minus,
}

impl AlphaSign {
    pub fn as_i64(self) -> i64 {
        match self {
            AlphaSign::Plus => 1,
            AlphaSign::Minus => -1,
        }
    }
}

/// The word `d_alpha^{±h} d_gamma^{-k} d_beta^{1+k} d_alpha`, representing
/// the torus knot `t(k, hk∓1)`: exponent sign `+` gives `t(k, hk-1)`,
/// sign `-` gives `t(k, hk+1)`.
pub fn torus_knot_mcg(k: i64, h: i64, sign: AlphaSign) -> Result<MCGWord, McgError> {
    if k < 1 || h < 1 {
        return Err(McgError::BadTorusParams);
    }
    Ok(MCGWord::from_factors([
        (Twist::Alpha, sign.as_i64() * h),
        (Twist::Gamma, -k),
        (Twist::Beta, 1 + k),
        (Twist::Alpha, 1),
    ]))
}
