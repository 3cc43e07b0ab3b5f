//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use oneone::catalog::{torus_alexander, torus_word_formula, BSign, TorusParams};
use oneone::covering::{covering_monodromies, cyclic_word, rbar, Monodromy};
use oneone::cyclicpres::{
    equal_up_to_units, equivalent_up_to_shift, CyclicPresentation, IntPoly, ShiftEquivOptions,
};
use oneone::intlinalg::{determinant, smith_normal_form, IntMatrix};
use oneone::knot::{analyze, complement_homology};
use oneone::mcg::{apply_mcg, omega, torus_knot_mcg, AlphaSign, MCGWord, SL2Matrix, Twist};
use oneone::words::{parse_pi1, PiGen, Word};

fn report(criterion: &str, ok: bool) {
    println!("{}: {criterion}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "criterion failed: {criterion}");
}

// deterministic xorshift for the randomized criteria
struct Rng(u64);

impl Rng {
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    fn range(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.next() % (hi - lo + 1) as u64) as i64
    }
}

fn random_mcg(rng: &mut Rng, max_len: usize) -> MCGWord {
    let twists = [Twist::Alpha, Twist::Beta, Twist::Gamma];
    let len = rng.range(0, max_len as i64) as usize;
    MCGWord::from_factors((0..len).map(|_| {
        let t = twists[rng.range(0, 2) as usize];
        let mut e = rng.range(-3, 3);
        if e == 0 {
            e = 1;
        }
        (t, e)
    }))
}

#[test]
fn criterion_1_torus_pipeline_identity() {
    let mut ok = true;
    let a = Word::generator(PiGen::AlphaBar);
    let g = Word::generator(PiGen::GammaBar);
    for (sign, e) in [(AlphaSign::Plus, 1i64), (AlphaSign::Minus, -1)] {
        for h in 1..=4i64 {
            for k in 1..=4i64 {
                let psi = torus_knot_mcg(k, h, sign).unwrap();
                let knot = analyze(&psi);
                // relator a^{1-ehk} (g a^{eh})^k, exact after reduction
                let expect = a.pow(1 - e * h * k).concat(&g.concat(&a.pow(e * h)).pow(k));
                ok &= knot.relator == expect;
                ok &= omega(&psi)
                    == SL2Matrix { m11: 0, m12: -1, m21: 1, m22: 1 - e * h };
            }
        }
    }
    report("1: torus-knot relator and Omega identity for h,k <= 4, both signs", ok);
}

#[test]
fn criterion_2_example_i_golden() {
    let psi = MCGWord::parse("a^2 g a^-4").unwrap();
    let k = analyze(&psi);
    let expect_beta = parse_pi1("a^2 g a^-1")
        .unwrap()
        .pow(4)
        .concat(&parse_pi1("a^2 b").unwrap());
    let h1 = complement_homology(&k);
    let ok = k.psi_beta == expect_beta
        && apply_mcg(&psi, &Word::generator(PiGen::BetaBar)).unwrap() == expect_beta
        && k.ambient() == "L(6,5)"
        && h1.rank == 1
        && h1.torsion == vec![BigInt::from(2)]
        && covering_monodromies(&k, 6).unwrap().is_empty();
    report("2: L(6,5) example golden values", ok);
}

#[test]
fn criterion_3_example_ii_golden() {
    let k = analyze(&MCGWord::parse("a^-2 g^-2 a^-2").unwrap());
    let h1 = complement_homology(&k);
    let mut ok = k.ambient() == "L(4,1)" && h1.rank == 1 && h1.torsion == vec![BigInt::from(4)];

    let ms = covering_monodromies(&k, 4).unwrap();
    ok &= ms.iter().map(|m| m.x).collect::<Vec<_>>() == vec![0, 1, 2, 3];

    let expected_words = [
        "x4^2 x3 x2^2 x1^-1",
        "x4 x1^3 x2 x1^-1",
        "x4 x2 x3 x4 x2 x1^-1",
        "x4 x3 x1 x3 x2 x1^-1",
    ];
    let expected_h1: [(usize, Vec<i64>); 4] =
        [(0, vec![8, 8]), (1, vec![4]), (0, vec![8, 8]), (1, vec![4])];
    // single common shift per word: strict theta-shift, no conjugation
    let strict = ShiftEquivOptions { conjugation: false, inversion: false };
    for (i, m) in ms.iter().enumerate() {
        let w = cyclic_word(&k, *m).unwrap();
        let target = CyclicPresentation::parse(4, expected_words[i]).unwrap();
        ok &= equivalent_up_to_shift(&w, &target, strict).unwrap().is_some();
        let g = w.abelianization();
        let torsion: Vec<i64> = g.torsion.iter().map(|t| i64::try_from(t).unwrap()).collect();
        ok &= (g.rank, torsion) == expected_h1[i].clone().into();
    }
    report("3: L(4,1) example: four coverings, words w0..w3, homology", ok);
}

// The pipeline pins w only up to a theta-shift; shifting w cyclically
// rotates the coefficient vector of f_w (indices live mod n), so the
// unit-equivalence check must be made against some shift representative.
fn poly_matches_up_to_shift(w: &CyclicPresentation, delta: &IntPoly) -> bool {
    (0..w.n() as i64).any(|s| equal_up_to_units(&w.theta_shift(s).polynomial(), delta))
}

#[test]
fn criterion_4_trefoil_sieradski() {
    let mut ok = true;
    let psi = MCGWord::parse("a^-1 g^-2 b^3 a").unwrap();
    let k = analyze(&psi);
    let delta = torus_alexander(2, 3).unwrap();
    for n in 3..=12i64 {
        let ms = covering_monodromies(&k, n).unwrap();
        ok &= ms.len() == 1;
        let w = cyclic_word(&k, ms[0]).unwrap();
        let target = CyclicPresentation::parse(n as usize, "x3 x1 x2^-1").unwrap();
        ok &= equivalent_up_to_shift(&w, &target, ShiftEquivOptions::default())
            .unwrap()
            .is_some();
        ok &= poly_matches_up_to_shift(&w, &delta);
    }
    report("4: trefoil pipeline word is x3 x1 x2^-1 with f_w = t^2 - t + 1, n = 3..12", ok);
}

#[test]
fn criterion_5_closed_form_cross_validation() {
    let mut ok = true;
    for sign in [BSign::Plus, BSign::Minus] {
        for h in 1..=3i64 {
            for k in 1..=3i64 {
                let tp = TorusParams::new(k, h, sign).unwrap();
                let knot = analyze(&tp.mcg_word());
                for n in 5..=20i64 {
                    let ms = covering_monodromies(&knot, n).unwrap();
                    assert_eq!(ms.len(), 1, "knots in S^3 have a unique covering");
                    let pipeline = cyclic_word(&knot, ms[0]).unwrap();
                    let formula = torus_word_formula(tp, n).unwrap();
                    let eq = equivalent_up_to_shift(
                        &pipeline,
                        &formula,
                        ShiftEquivOptions::default(),
                    )
                    .unwrap()
                    .is_some();
                    if !eq {
                        eprintln!(
                            "mismatch h={h} k={k} sign={sign:?} n={n}: \
                             pipeline {pipeline} vs formula {formula}"
                        );
                    }
                    ok &= eq;
                }
            }
        }
    }
    report("5: pipeline agrees with closed-form words, h,k <= 3, both signs, n = 5..20", ok);
}

#[test]
fn criterion_6_alexander_polynomial_law() {
    let mut ok = true;
    for sign in [BSign::Plus, BSign::Minus] {
        for h in 1..=3i64 {
            for k in 1..=3i64 {
                let tp = TorusParams::new(k, h, sign).unwrap();
                let b = tp.b();
                if k < 2 || b < 2 {
                    continue; // unknot family, no Alexander polynomial regime
                }
                let delta = torus_alexander(k, b).unwrap();
                let deg = (k - 1) * (b - 1);
                let knot = analyze(&tp.mcg_word());
                for n in deg + 1..=deg + 6 {
                    let ms = covering_monodromies(&knot, n).unwrap();
                    let w = cyclic_word(&knot, ms[0]).unwrap();
                    let eq = poly_matches_up_to_shift(&w, &delta);
                    if !eq {
                        eprintln!(
                            "poly mismatch t({k},{b}) n={n}: f_w={:?} delta={:?}",
                            w.polynomial().coeffs,
                            delta.coeffs
                        );
                    }
                    ok &= eq;
                }
                // one n <= deg: regime excluded, nothing asserted
                if deg >= 2 {
                    let ms = covering_monodromies(&knot, deg).unwrap();
                    let _ = cyclic_word(&knot, ms[0]).unwrap().polynomial();
                }
            }
        }
    }
    report("6: f_w equals the Alexander polynomial up to units when n > deg", ok);
}

#[test]
fn criterion_7_count_law_random() {
    let mut rng = Rng(0x11C0DE);
    let mut ok = true;
    for _ in 0..500 {
        let psi = random_mcg(&mut rng, 15);
        let k = analyze(&psi);
        let n = rng.range(2, 30);
        let got = covering_monodromies(&k, n).unwrap();
        let brute: Vec<i64> = (0..n)
            .filter(|&x| (k.p * x + k.q_dblprime).rem_euclid(n) == 0)
            .collect();
        ok &= got.iter().map(|m| m.x).collect::<Vec<_>>() == brute;
        let d = num_integer::gcd(k.p.rem_euclid(n), n);
        let expect = if k.q_dblprime.rem_euclid(n) % d == 0 { d as usize } else { 0 };
        ok &= got.len() == expect;
    }
    report("7: covering count law on 500 random twist words vs brute force", ok);
}

fn random_matrix(rng: &mut Rng) -> IntMatrix {
    let n = rng.range(1, 6) as usize;
    let entries: Vec<i64> = (0..n * n).map(|_| rng.range(-9, 9)).collect();
    IntMatrix::from_i64(n, n, &entries).unwrap()
}

fn cofactor_det(m: &IntMatrix) -> BigInt {
    let n = m.rows();
    if n == 1 {
        return m.at(0, 0).clone();
    }
    let mut det = BigInt::zero();
    for c in 0..n {
        if m.at(0, c).is_zero() {
            continue;
        }
        let mut sub = IntMatrix::zeros(n - 1, n - 1);
        for r in 1..n {
            let mut cc = 0;
            for col in 0..n {
                if col != c {
                    *sub.at_mut(r - 1, cc) = m.at(r, col).clone();
                    cc += 1;
                }
            }
        }
        let term = m.at(0, c) * cofactor_det(&sub);
        if c % 2 == 0 {
            det += term;
        } else {
            det -= term;
        }
    }
    det
}

#[test]
fn criterion_8_structural_invariants() {
    let mut rng = Rng(0xACCE97);
    let mut ok = true;
    let pi_gens = [PiGen::AlphaBar, PiGen::BetaBar, PiGen::GammaBar];

    for _ in 0..1000 {
        // homomorphism laws
        let psi1 = random_mcg(&mut rng, 6);
        let psi2 = random_mcg(&mut rng, 6);
        let w = Word::from_syllables((0..rng.range(0, 8) as usize).map(|_| {
            (pi_gens[rng.range(0, 2) as usize], rng.range(-3, 3))
        }));
        ok &= apply_mcg(&psi1.concat(&psi2), &w).unwrap()
            == apply_mcg(&psi1, &apply_mcg(&psi2, &w).unwrap()).unwrap();
        ok &= omega(&psi1.concat(&psi2)) == omega(&psi1).mul(omega(&psi2));
        ok &= omega(&psi1).det() == 1;

        // p/q consistency with Omega
        let k = analyze(&psi1);
        let m = omega(&psi1);
        ok &= k.p == m.m21 && k.q_prime + k.q_dblprime == m.m11;

        // gamma-balance of rbar
        let n = rng.range(2, 12);
        for mono in covering_monodromies(&k, n).unwrap() {
            ok &= rbar(&k, mono).unwrap().exponent_sum(PiGen::GammaBar).rem_euclid(n) == 0;
        }

        // free-reduction idempotence
        ok &= Word::from_syllables(w.syllables().iter().copied()) == w;
    }

    for _ in 0..1000 {
        let m = random_matrix(&mut rng);
        let snf = smith_normal_form(&m);
        for pair in snf.diagonal.windows(2) {
            if pair[0].is_zero() {
                ok &= pair[1].is_zero();
            } else if !pair[1].is_zero() {
                ok &= (&pair[1] % &pair[0]).is_zero();
            }
        }
        let det = determinant(&m).unwrap();
        ok &= det == cofactor_det(&m);
        let prod: BigInt = snf.diagonal.iter().filter(|d| !d.is_zero()).product();
        if snf.diagonal.iter().all(|d| !d.is_zero()) {
            ok &= prod == det.abs();
        } else {
            ok &= det.is_zero();
        }
    }

    report("8: structural invariant suite, 1000 random cases per law", ok);
}

#[test]
fn criterion_3b_monodromy_for_covering() {
    // sanity cross-check used by criterion 3: the monodromy constraint holds
    let k = analyze(&MCGWord::parse("a^-2 g^-2 a^-2").unwrap());
    for x in 0..4 {
        assert!(rbar(&k, Monodromy { n: 4, x }).is_ok());
    }
}
