//! Free-group word arithmetic in reduced syllable form.
//!
//! A [`Word`] is a product of syllables `g^e` with nonzero exponents and no
//! two adjacent syllables sharing a generator. Every constructor and
//! operation reduces eagerly, so words are always in normal form and equality
//! of values is equality in the free group.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use thiserror::Error;

/// Loop generators of the twice-punctured torus fundamental group, plus the
/// derived generator used when passing to the covering presentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PiGen {
    AlphaBar,
    BetaBar,
    GammaBar,
    AlphaHat,
}

impl PiGen {
    pub const ALL: [PiGen; 4] = [
        PiGen::AlphaBar,
        PiGen::BetaBar,
        PiGen::GammaBar,
        PiGen::AlphaHat,
    ];

    pub fn symbol(self) -> char {
        match self {
            PiGen::AlphaBar => 'a',
            PiGen::BetaBar => 'b',
            PiGen::GammaBar => 'g',
            PiGen::AlphaHat => 'A',
        }
    }

    pub fn from_symbol(c: char) -> Option<PiGen> {
        match c {
            'a' => Some(PiGen::AlphaBar),
            'b' => Some(PiGen::BetaBar),
            'g' => Some(PiGen::GammaBar),
            'A' => Some(PiGen::AlphaHat),
            _ => None,
        }
    }
}

impl fmt::Display for PiGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordError {
    #[error("generator map has no image for a generator occurring in the word")]
    MissingImage,
    #[error("syntax error at column {0}")]
    Syntax(usize),
    #[error("zero exponent at column {0}")]
    ZeroExponent(usize),
}

/// A freely reduced word over generator alphabet `G`.
///
/// The empty word is the identity. Syllable exponents are `i64`; the words
/// reachable from any feasible input are far shorter than `i64::MAX` letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word<G> {
    syllables: Vec<(G, i64)>,
}

impl<G> Default for Word<G> {
    fn default() -> Self {
        Word { syllables: Vec::new() }
    }
}

impl<G: Copy + Eq> Word<G> {
    /// The identity word.
    pub fn identity() -> Self {
        Word::default()
    }

    /// Builds a word from raw `(generator, exponent)` pairs, freely reducing.
    pub fn from_syllables<I: IntoIterator<Item = (G, i64)>>(raw: I) -> Self {
        let mut stack: Vec<(G, i64)> = Vec::new();
        for (g, e) in raw {
            if e == 0 {
                continue;
            }
            match stack.last_mut() {
                Some((top, te)) if *top == g => {
                    *te += e;
                    if *te == 0 {
                        stack.pop();
                    }
                }
                _ => stack.push((g, e)),
            }
        }
        Word { syllables: stack }
    }

    /// Builds a word from single letters `g^±1`.
    pub fn from_letters<I: IntoIterator<Item = (G, i64)>>(raw: I) -> Self {
        Self::from_syllables(raw)
    }

    /// A single generator as a word.
    pub fn generator(g: G) -> Self {
        Word { syllables: vec![(g, 1)] }
    }

    pub fn syllables(&self) -> &[(G, i64)] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn syllable_count(&self) -> usize {
        self.syllables.len()
    }

    /// Total letter length |e_1| + ... + |e_s|.
    pub fn letter_len(&self) -> u64 {
        self.syllables.iter().map(|&(_, e)| e.unsigned_abs()).sum()
    }

    /// Concatenation followed by free reduction.
    pub fn concat(&self, other: &Word<G>) -> Word<G> {
        Word::from_syllables(
            self.syllables.iter().chain(other.syllables.iter()).copied(),
        )
    }

    pub fn inverse(&self) -> Word<G> {
        Word {
            syllables: self
                .syllables
                .iter()
                .rev()
                .map(|&(g, e)| (g, -e))
                .collect(),
        }
    }

    /// `self^n` for any integer `n`.
    pub fn pow(&self, n: i64) -> Word<G> {
        if n == 0 || self.is_identity() {
            return Word::identity();
        }
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..n.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// Deletes every syllable in `g` and re-reduces.
    pub fn erase(&self, g: G) -> Word<G> {
        Word::from_syllables(
            self.syllables.iter().copied().filter(|&(h, _)| h != g),
        )
    }

    /// Sum of exponents of syllables in `g` (the abelianization coordinate).
    pub fn exponent_sum(&self, g: G) -> i64 {
        self.syllables
            .iter()
            .filter(|&&(h, _)| h == g)
            .map(|&(_, e)| e)
            .sum()
    }

    /// Cyclic permutation of syllables starting at index `k`, re-reduced at
    /// the seam. Represents a conjugate of the original word.
    pub fn cyclic_rotate(&self, k: usize) -> Word<G> {
        if self.syllables.is_empty() {
            return Word::identity();
        }
        let k = k % self.syllables.len();
        Word::from_syllables(
            self.syllables[k..]
                .iter()
                .chain(self.syllables[..k].iter())
                .copied(),
        )
    }

    /// Cyclically reduces: strips matching inverse syllable-parts from the two
    /// ends. The result is the shortest word in the conjugacy class, up to
    /// rotation.
    pub fn cyclic_reduce(&self) -> Word<G> {
        let mut w = self.clone();
        loop {
            let s = &w.syllables;
            let n = s.len();
            if n < 2 {
                return w;
            }
            let (g0, e0) = s[0];
            let (g1, e1) = s[n - 1];
            if g0 != g1 || (e0 > 0) == (e1 > 0) {
                return w;
            }
            // cancel the smaller end against the larger
            let cancel = e0.abs().min(e1.abs());
            let mut syl = s.clone();
            syl[0].1 -= cancel * e0.signum();
            syl[n - 1].1 -= cancel * e1.signum();
            w = Word::from_syllables(syl);
        }
    }

    /// Expands into single letters `(g, ±1)`.
    pub fn letters(&self) -> impl Iterator<Item = (G, i64)> + '_ {
        self.syllables.iter().flat_map(|&(g, e)| {
            let sgn = e.signum();
            (0..e.unsigned_abs()).map(move |_| (g, sgn))
        })
    }
}

impl<G: Copy + Eq + Hash> Word<G> {
    /// Applies a free-group homomorphism given by a [`GeneratorMap`].
    pub fn substitute<H: Copy + Eq>(
        &self,
        map: &GeneratorMap<G, H>,
    ) -> Result<Word<H>, WordError> {
        let mut out = Word::identity();
        for &(g, e) in &self.syllables {
            let image = map.image(g).ok_or(WordError::MissingImage)?;
            out = out.concat(&image.pow(e));
        }
        Ok(out)
    }
}

/// A homomorphism of free groups, given by the image of each generator.
#[derive(Debug, Clone)]
pub struct GeneratorMap<G: Eq + Hash, H> {
    images: HashMap<G, Word<H>>,
}

impl<G: Copy + Eq + Hash, H: Copy + Eq> GeneratorMap<G, H> {
    pub fn new() -> Self {
        GeneratorMap { images: HashMap::new() }
    }

    pub fn with(mut self, g: G, image: Word<H>) -> Self {
        self.images.insert(g, image);
        self
    }

    pub fn set(&mut self, g: G, image: Word<H>) {
        self.images.insert(g, image);
    }

    pub fn image(&self, g: G) -> Option<&Word<H>> {
        self.images.get(&g)
    }
}

impl<G: Copy + Eq + Hash, H: Copy + Eq> Default for GeneratorMap<G, H> {
    fn default() -> Self {
        Self::new()
    }
}

impl GeneratorMap<PiGen, PiGen> {
    /// The identity map on the full alphabet.
    pub fn identity() -> Self {
        let mut m = GeneratorMap::new();
        for g in PiGen::ALL {
            m.set(g, Word::generator(g));
        }
        m
    }
}

pub type Pi1Word = Word<PiGen>;

/// Parses the plain-text syntax `a^2 g a^-1` over letters `a b g A`.
/// Juxtaposition is concatenation; whitespace is optional between factors.
pub fn parse_pi1(text: &str) -> Result<Pi1Word, WordError> {
    let syllables = parse_factors(text, |c| PiGen::from_symbol(c))?;
    Ok(Word::from_syllables(syllables))
}

/// Shared factor-list parser for the `letter ('^' int)?` grammars.
/// Column positions in errors are 1-based byte offsets.
pub(crate) fn parse_factors<G>(
    text: &str,
    letter: impl Fn(char) -> Option<G>,
) -> Result<Vec<(G, i64)>, WordError> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        let g = letter(c).ok_or(WordError::Syntax(pos + 1))?;
        chars.next();
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
            exp = digits
                .parse()
                .map_err(|_| WordError::Syntax(pos + 1))?;
            if exp == 0 {
                return Err(WordError::ZeroExponent(pos + 1));
            }
        }
        out.push((g, exp));
    }
    Ok(out)
}

/// Renders a word in the plain-text syntax, `1` for the identity.
pub fn render_pi1(w: &Pi1Word) -> String {
    render_word(w, |g| g.symbol().to_string())
}

pub(crate) fn render_word<G: Copy + Eq>(
    w: &Word<G>,
    sym: impl Fn(G) -> String,
) -> String {
    if w.is_identity() {
        return "1".to_string();
    }
    w.syllables()
        .iter()
        .map(|&(g, e)| {
            if e == 1 {
                sym(g)
            } else {
                format!("{}^{}", sym(g), e)
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}
