//! Closed-form constructions and fixture data: torus-knot cyclic words,
//! classical torus-knot Alexander polynomials, and the named cyclically
//! presented families.

use thiserror::Error;

use crate::cyclicpres::{CyclicPresentation, IntPoly};
use crate::mcg::{torus_knot_mcg, AlphaSign, MCGWord};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CatalogError {
    #[error("torus parameters require h >= 1 and k >= 1")]
    BadTorusParams,
    #[error("sheet count n must be at least 2")]
    BadSheetCount,
    #[error("torus knot t(a,b) requires a, b >= 2 and gcd(a,b) = 1")]
    BadAlexanderParams,
}

/// Which torus-knot family: `t(k, hk+1)` or `t(k, hk-1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BSign {
    Plus,
    Minus,
}

/// Parameters of the torus knot `t(k, hk±1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TorusParams {
    pub k: i64,
    pub h: i64,
    pub sign: BSign,
}

impl TorusParams {
    pub fn new(k: i64, h: i64, sign: BSign) -> Result<Self, CatalogError> {
        if k < 1 || h < 1 {
            return Err(CatalogError::BadTorusParams);
        }
        Ok(TorusParams { k, h, sign })
    }

    /// The second torus-knot index `hk ± 1`.
    pub fn b(self) -> i64 {
        match self.sign {
            BSign::Plus => self.h * self.k + 1,
            BSign::Minus => self.h * self.k - 1,
        }
    }

    /// The four-factor twist word representing this knot. `t(k, hk+1)`
    /// needs the negative alpha exponent, `t(k, hk-1)` the positive one.
    pub fn mcg_word(self) -> MCGWord {
        let alpha_sign = match self.sign {
            BSign::Plus => AlphaSign::Minus,
            BSign::Minus => AlphaSign::Plus,
        };
        torus_knot_mcg(self.k, self.h, alpha_sign).expect("params checked on construction")
    }
}

/// The closed-form cyclic word for the `n`-fold covering of `t(k, hk±1)`.
///
/// For `t(k, hk+1)`:
/// `w = (Π_{j=0}^{h(k-1)} x_{1-jk}) (Π_{i=0}^{k-2} Π_{l=1}^{h} x_{2+i-(h(k-1-i)+1-l)k}^{-1})`.
/// For `t(k, hk-1)`:
/// `w = (Π_{j=1}^{h(k-1)-1} x_{1+jk}^{-1}) (Π_{i=0}^{k-2} Π_{l=0}^{h-1} x_{2+i+(h(k-1-i)-1-l)k})`.
/// Indices are taken mod `n`; empty product ranges contribute nothing
/// (`k = 1` is the unknot family).
///
/// At `k = 1` the minus-sign formula needs care: both products are empty,
/// but the cyclic reduction that produces the closed form cancels only
/// `h - 1` letter pairs there, leaving one generator. The empty word would
/// present a free group of rank `n` instead of the trivial group, so this
/// boundary case returns `x1` — matching the plus-sign formula at `k = 1`
/// and the fact that every branched cyclic covering of the unknot is the
/// 3-sphere.
pub fn torus_word_formula(tp: TorusParams, n: i64) -> Result<CyclicPresentation, CatalogError> {
    if n < 2 {
        return Err(CatalogError::BadSheetCount);
    }
    let (h, k) = (tp.h, tp.k);
    let mut raw: Vec<(i64, i64)> = Vec::new();
    match tp.sign {
        BSign::Minus if k == 1 => raw.push((1, 1)),
        BSign::Plus => {
            for j in 0..=h * (k - 1) {
                raw.push((1 - j * k, 1));
            }
            for i in 0..=k - 2 {
                for l in 1..=h {
                    raw.push((2 + i - (h * (k - 1 - i) + 1 - l) * k, -1));
                }
            }
        }
        BSign::Minus => {
            for j in 1..=h * (k - 1) - 1 {
                raw.push((1 + j * k, -1));
            }
            for i in 0..=k - 2 {
                for l in 0..=h - 1 {
                    raw.push((2 + i + (h * (k - 1 - i) - 1 - l) * k, 1));
                }
            }
        }
    }
    Ok(CyclicPresentation::new(n as usize, raw).expect("n >= 2"))
}

/// Alexander polynomial of the torus knot `t(a,b)`:
/// `(t^{ab} - 1)(t - 1) / ((t^a - 1)(t^b - 1))`, by exact division.
pub fn torus_alexander(a: i64, b: i64) -> Result<IntPoly, CatalogError> {
    if a < 2 || b < 2 || num_integer::gcd(a, b) != 1 {
        return Err(CatalogError::BadAlexanderParams);
    }
    // numerator (t^{ab} - 1)(t - 1)
    let ab = (a * b) as usize;
    let mut num = vec![0i64; ab + 2];
    num[0] = 1;
    num[1] = -1;
    num[ab] = -1;
    num[ab + 1] = 1;
    // divide by t^a - 1, then by t^b - 1
    let num = poly_div_exact(&num, a as usize);
    let num = poly_div_exact(&num, b as usize);
    Ok(IntPoly::new(num))
}

// exact quotient by t^m - 1
fn poly_div_exact(p: &[i64], m: usize) -> Vec<i64> {
    let deg = p.len() - 1;
    let mut rem = p.to_vec();
    let mut quot = vec![0i64; deg - m + 1];
    for i in (m..=deg).rev() {
        let c = rem[i];
        if c == 0 {
            continue;
        }
        quot[i - m] = c;
        rem[i] = 0;
        rem[i - m] += c;
    }
    assert!(rem.iter().all(|&c| c == 0), "division was not exact");
    quot
}

/// Named cyclically presented families from the classical literature,
/// usable as test fixtures.
pub enum NamedPresentation {
    /// `G_n(x1^-1 x2^2 x3^-1 x2)`, the Fibonacci group `F(2n)`.
    Fibonacci,
    /// `G_n(x1 x3 x2^-1)`, the Sieradski group `S(n)`.
    Sieradski,
    /// `G_n((x1^-l x2^l)^k x2 (x3^-l x2^l)^k)`, the fractional Fibonacci
    /// group.
    FractionalFibonacci { l: i64, k: i64 },
}

impl NamedPresentation {
    pub fn name(&self) -> &'static str {
        match self {
            NamedPresentation::Fibonacci => "Fibonacci",
            NamedPresentation::Sieradski => "Sieradski",
            NamedPresentation::FractionalFibonacci { .. } => "fractional Fibonacci",
        }
    }

    pub fn presentation(&self, n: usize) -> CyclicPresentation {
        let raw: Vec<(i64, i64)> = match *self {
            NamedPresentation::Fibonacci => vec![(1, -1), (2, 2), (3, -1), (2, 1)],
            NamedPresentation::Sieradski => vec![(1, 1), (3, 1), (2, -1)],
            NamedPresentation::FractionalFibonacci { l, k } => {
                let mut raw = Vec::new();
                for _ in 0..k {
                    raw.push((1, -l));
                    raw.push((2, l));
                }
                raw.push((2, 1));
                for _ in 0..k {
                    raw.push((3, -l));
                    raw.push((2, l));
                }
                raw
            }
        };
        CyclicPresentation::new(n, raw).expect("n >= 1")
    }
}
