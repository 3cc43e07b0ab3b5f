//! Cyclically presented groups `G_n(w)`: the shift automorphism, the
//! associated polynomial `f_w(t)`, the circulant relation matrix, the
//! abelianization, and equivalence of defining words up to shift.

use std::fmt;

use thiserror::Error;

use crate::intlinalg::{circulant, cokernel, AbelianGroup, IntMatrix};
use crate::words::Word;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CyclicPresError {
    #[error("presentations have different n")]
    MismatchedN,
    #[error("n must be at least 1")]
    BadN,
    #[error("syntax error at column {0}")]
    Syntax(usize),
    #[error("zero exponent at column {0}")]
    ZeroExponent(usize),
}

/// The presentation `G_n(w) = <x_1..x_n | w, θw, ..., θ^{n-1}w>` with
/// `θ(x_i) = x_{i+1}` (indices mod `n`). Indices are stored as
/// representatives in `[1, n]` and `w` is kept freely reduced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicPresentation {
    n: usize,
    word: Word<usize>,
}

fn norm_index(i: i64, n: usize) -> usize {
    (i - 1).rem_euclid(n as i64) as usize + 1
}

impl CyclicPresentation {
    /// Builds from raw `(index, exponent)` syllables; indices may be any
    /// integers and are normalized mod `n` into `[1, n]`.
    pub fn new<I: IntoIterator<Item = (i64, i64)>>(
        n: usize,
        raw: I,
    ) -> Result<Self, CyclicPresError> {
        if n < 1 {
            return Err(CyclicPresError::BadN);
        }
        let word = Word::from_syllables(raw.into_iter().map(|(i, e)| (norm_index(i, n), e)));
        Ok(CyclicPresentation { n, word })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn word(&self) -> &Word<usize> {
        &self.word
    }

    /// Applies `θ^s`: every index `i` becomes `((i-1+s) mod n)+1`.
    pub fn theta_shift(&self, s: i64) -> CyclicPresentation {
        let n = self.n;
        let word = Word::from_syllables(
            self.word
                .syllables()
                .iter()
                .map(|&(i, e)| (norm_index(i as i64 + s, n), e)),
        );
        CyclicPresentation { n, word }
    }

    /// The associated polynomial `f_w(t) = Σ a_i t^{i-1}`, `a_i` the
    /// exponent sum of `x_i` in `w`.
    pub fn polynomial(&self) -> IntPoly {
        let mut coeffs = vec![0i64; self.n];
        for &(i, e) in self.word.syllables() {
            coeffs[i - 1] += e;
        }
        IntPoly::new(coeffs)
    }

    /// The `n x n` relation matrix whose row `k` is the exponent-sum vector
    /// of `θ^{k-1}(w)`; circulant by construction.
    pub fn relation_matrix(&self) -> IntMatrix {
        circulant(&self.polynomial().coeffs).expect("n >= 1")
    }

    /// Abelianization of `G_n(w)` as the cokernel of the relation matrix.
    pub fn abelianization(&self) -> AbelianGroup {
        cokernel(&self.relation_matrix())
    }

    /// Parses the syntax `x1 x2^3 x3 x2^-1`.
    pub fn parse(n: usize, text: &str) -> Result<Self, CyclicPresError> {
        if n < 1 {
            return Err(CyclicPresError::BadN);
        }
        let mut raw: Vec<(i64, i64)> = Vec::new();
        let mut chars = text.char_indices().peekable();
        while let Some(&(pos, c)) = chars.peek() {
            if c.is_whitespace() {
                chars.next();
                continue;
            }
            if c != 'x' {
                return Err(CyclicPresError::Syntax(pos + 1));
            }
            chars.next();
            let mut idx = String::new();
            while let Some(&(_, d)) = chars.peek() {
                if d.is_ascii_digit() {
                    idx.push(d);
                    chars.next();
                } else {
                    break;
                }
            }
            let index: i64 = idx.parse().map_err(|_| CyclicPresError::Syntax(pos + 1))?;
            let mut exp: i64 = 1;
            if let Some(&(_, '^')) = chars.peek() {
                chars.next();
                let mut digits = String::new();
                if let Some(&(_, '-')) = chars.peek() {
                    digits.push('-');
                    chars.next();
                }
                while let Some(&(_, d)) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                exp = digits.parse().map_err(|_| CyclicPresError::Syntax(pos + 1))?;
                if exp == 0 {
                    return Err(CyclicPresError::ZeroExponent(pos + 1));
                }
            }
            raw.push((index, exp));
        }
        CyclicPresentation::new(n, raw)
    }
}

impl fmt::Display for CyclicPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            crate::words::render_word(&self.word, |i| format!("x{i}"))
        )
    }
}

/// Flags for word equivalence testing.
#[derive(Debug, Clone, Copy)]
pub struct ShiftEquivOptions {
    /// Also compare cyclic permutations of the word (relator conjugation).
    pub conjugation: bool,
    /// Also compare against the inverted relator.
    pub inversion: bool,
}

impl Default for ShiftEquivOptions {
    fn default() -> Self {
        ShiftEquivOptions { conjugation: true, inversion: false }
    }
}

fn letter_vec(w: &Word<usize>) -> Vec<(usize, i64)> {
    w.letters().collect()
}

fn is_cyclic_rotation(a: &[(usize, i64)], b: &[(usize, i64)]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    let doubled: Vec<_> = b.iter().chain(b.iter()).copied().collect();
    doubled.windows(a.len()).any(|win| win == a)
}

/// Tests whether `θ^s(p1) = p2` for some `s` in `[0, n)`; returns the
/// witness shift. With `conjugation` set (the default), words are compared
/// as cyclic words after cyclic reduction.
pub fn equivalent_up_to_shift(
    p1: &CyclicPresentation,
    p2: &CyclicPresentation,
    opts: ShiftEquivOptions,
) -> Result<Option<usize>, CyclicPresError> {
    if p1.n != p2.n {
        return Err(CyclicPresError::MismatchedN);
    }
    let mut targets: Vec<Word<usize>> = vec![p2.word.clone()];
    if opts.inversion {
        targets.push(p2.word.inverse());
    }
    let target_letters: Vec<Vec<(usize, i64)>> = targets
        .iter()
        .map(|w| letter_vec(&w.cyclic_reduce()))
        .collect();
    for s in 0..p1.n {
        let cand = p1.theta_shift(s as i64);
        if targets.iter().any(|t| *t == cand.word) {
            return Ok(Some(s));
        }
        if opts.conjugation {
            let cl = letter_vec(&cand.word.cyclic_reduce());
            if target_letters.iter().any(|t| is_cyclic_rotation(&cl, t)) {
                return Ok(Some(s));
            }
        }
    }
    Ok(None)
}

/// Dense integer polynomial `Σ coeffs[i] t^i`, used both for associated
/// polynomials `f_w` and for Alexander polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly {
    pub coeffs: Vec<i64>,
}

impl IntPoly {
    pub fn new(coeffs: Vec<i64>) -> Self {
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Coefficients with leading and trailing zeros stripped.
    fn trimmed(&self) -> &[i64] {
        let lo = self.coeffs.iter().position(|&c| c != 0);
        match lo {
            None => &[],
            Some(lo) => {
                let hi = self.coeffs.iter().rposition(|&c| c != 0).unwrap();
                &self.coeffs[lo..=hi]
            }
        }
    }

    pub fn coefficient_sum(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|&c| c != 0)
    }

    /// Renders like `1 - t + t^2`, or `0`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if c < 0 { " - " } else { " + " });
            }
            let term = match (i, mag) {
                (0, m) => m.to_string(),
                (1, 1) => "t".to_string(),
                (1, m) => format!("{m}t"),
                (i, 1) => format!("t^{i}"),
                (i, m) => format!("{m}t^{i}"),
            };
            out.push_str(&term);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// True iff `f = ± t^j g` for some integer `j`.
pub fn equal_up_to_units(f: &IntPoly, g: &IntPoly) -> bool {
    let a = f.trimmed();
    let b = g.trimmed();
    a == b || (a.len() == b.len() && a.iter().zip(b).all(|(x, y)| *x == -*y))
}
