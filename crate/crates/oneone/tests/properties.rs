//! Property-based invariants for the word, twist, covering, and linear
//! algebra layers.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use oneone::covering::{covering_monodromies, rbar};
use oneone::cyclicpres::{equivalent_up_to_shift, CyclicPresentation, ShiftEquivOptions};
use oneone::intlinalg::{determinant, smith_normal_form, IntMatrix};
use oneone::knot::analyze;
use oneone::mcg::{apply_mcg, omega, MCGWord, Twist};
use oneone::words::{GeneratorMap, Pi1Word, PiGen, Word};

const PI_GENS: [PiGen; 3] = [PiGen::AlphaBar, PiGen::BetaBar, PiGen::GammaBar];
const TWISTS: [Twist; 3] = [Twist::Alpha, Twist::Beta, Twist::Gamma];

fn arb_pi1_word() -> impl Strategy<Value = Pi1Word> {
    prop::collection::vec((0usize..3, -3i64..=3), 0..12).prop_map(|raw| {
        Word::from_syllables(raw.into_iter().map(|(g, e)| (PI_GENS[g], e)))
    })
}

fn arb_mcg_word() -> impl Strategy<Value = MCGWord> {
    prop::collection::vec((0usize..3, -4i64..=4), 0..8).prop_map(|raw| {
        MCGWord::from_factors(raw.into_iter().map(|(t, e)| (TWISTS[t], e)))
    })
}

fn arb_generator_map() -> impl Strategy<Value = GeneratorMap<PiGen, PiGen>> {
    (arb_pi1_word(), arb_pi1_word(), arb_pi1_word()).prop_map(|(a, b, g)| {
        GeneratorMap::new()
            .with(PiGen::AlphaBar, a)
            .with(PiGen::BetaBar, b)
            .with(PiGen::GammaBar, g)
            .with(PiGen::AlphaHat, Word::generator(PiGen::AlphaHat))
    })
}

fn arb_small_matrix() -> impl Strategy<Value = IntMatrix> {
    (1usize..=6).prop_flat_map(|n| {
        prop::collection::vec(-9i64..=9, n * n)
            .prop_map(move |e| IntMatrix::from_i64(n, n, &e).unwrap())
    })
}

// independent oracle: determinant by cofactor expansion
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
                if col == c {
                    continue;
                }
                *sub.at_mut(r - 1, cc) = m.at(r, col).clone();
                cc += 1;
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

proptest! {
    #[test]
    fn reduction_is_idempotent(w in arb_pi1_word()) {
        let again = Word::from_syllables(w.syllables().iter().copied());
        prop_assert_eq!(&again, &w);
    }

    #[test]
    fn substitute_respects_concatenation(
        u in arb_pi1_word(),
        v in arb_pi1_word(),
        m in arb_generator_map(),
    ) {
        let lhs = u.concat(&v).substitute(&m).unwrap();
        let rhs = u.substitute(&m).unwrap().concat(&v.substitute(&m).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn erase_removes_and_preserves_other_sums(w in arb_pi1_word()) {
        let e = w.erase(PiGen::BetaBar);
        prop_assert!(!e.syllables().iter().any(|&(g, _)| g == PiGen::BetaBar));
        for g in [PiGen::AlphaBar, PiGen::GammaBar] {
            prop_assert_eq!(e.exponent_sum(g), w.exponent_sum(g));
        }
    }

    #[test]
    fn exponent_sum_rotation_invariant(w in arb_pi1_word(), k in 0usize..12) {
        let r = w.cyclic_rotate(k.min(w.syllable_count().saturating_sub(1)));
        for g in PI_GENS {
            prop_assert_eq!(r.exponent_sum(g), w.exponent_sum(g));
        }
    }

    #[test]
    fn apply_mcg_is_composition(
        psi1 in arb_mcg_word(),
        psi2 in arb_mcg_word(),
        w in arb_pi1_word(),
    ) {
        let composed = apply_mcg(&psi1.concat(&psi2), &w).unwrap();
        let stepwise = apply_mcg(&psi1, &apply_mcg(&psi2, &w).unwrap()).unwrap();
        prop_assert_eq!(composed, stepwise);
    }

    #[test]
    fn omega_is_homomorphism(psi1 in arb_mcg_word(), psi2 in arb_mcg_word()) {
        prop_assert_eq!(omega(&psi1.concat(&psi2)), omega(&psi1).mul(omega(&psi2)));
        prop_assert_eq!(omega(&psi1).det(), 1);
    }

    #[test]
    fn twist_inverse_cancels(psi in arb_mcg_word(), w in arb_pi1_word()) {
        let back = apply_mcg(&psi.inverse(), &apply_mcg(&psi, &w).unwrap()).unwrap();
        prop_assert_eq!(back, w);
    }

    #[test]
    fn analyze_matches_omega(psi in arb_mcg_word()) {
        let k = analyze(&psi); // panics internally on any mismatch
        let m = omega(&psi);
        prop_assert_eq!(k.p, m.m21);
        prop_assert_eq!(k.q_prime + k.q_dblprime, m.m11);
    }

    #[test]
    fn monodromy_count_law(psi in arb_mcg_word(), n in 2i64..=50) {
        let k = analyze(&psi);
        let got: Vec<i64> = covering_monodromies(&k, n).unwrap().iter().map(|m| m.x).collect();
        let brute: Vec<i64> = (0..n)
            .filter(|&x| (k.p * x + k.q_dblprime).rem_euclid(n) == 0)
            .collect();
        prop_assert_eq!(&got, &brute);
        let d = num_integer::gcd(k.p.rem_euclid(n), n);
        let expect = if k.q_dblprime.rem_euclid(n) % d == 0 { d as usize } else { 0 };
        prop_assert_eq!(got.len(), expect);
    }

    #[test]
    fn gamma_balance_of_rbar(psi in arb_mcg_word(), n in 2i64..=20) {
        let k = analyze(&psi);
        for m in covering_monodromies(&k, n).unwrap() {
            let r = rbar(&k, m).unwrap();
            prop_assert_eq!(r.exponent_sum(PiGen::GammaBar).rem_euclid(n), 0);
        }
    }

    #[test]
    fn snf_chain_and_det(m in arb_small_matrix()) {
        let snf = smith_normal_form(&m);
        // divisibility chain, zeros at the tail
        let diag = &snf.diagonal;
        for pair in diag.windows(2) {
            if pair[0].is_zero() {
                prop_assert!(pair[1].is_zero());
            } else if !pair[1].is_zero() {
                prop_assert!((&pair[1] % &pair[0]).is_zero());
            }
        }
        let det = determinant(&m).unwrap();
        prop_assert_eq!(&det, &cofactor_det(&m));
        let prod: BigInt = diag.iter().filter(|d| !d.is_zero()).product();
        if diag.iter().all(|d| !d.is_zero()) {
            prop_assert_eq!(prod, det.abs());
        } else {
            prop_assert!(det.is_zero());
        }
    }

    #[test]
    fn snf_unimodular_invariance(m in arb_small_matrix(), seed in 0u64..1000) {
        // random elementary row/col operations preserve the SNF diagonal
        let n = m.rows();
        let mut t = m.clone();
        let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1);
        for _ in 0..6 {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let i = (state >> 33) as usize % n;
            let j = (state >> 13) as usize % n;
            let c = ((state >> 3) % 5) as i64 - 2;
            if i == j {
                continue;
            }
            if state % 2 == 0 {
                for col in 0..n {
                    let add = BigInt::from(c) * t.at(j, col);
                    *t.at_mut(i, col) += add;
                }
            } else {
                for row in 0..n {
                    let add = BigInt::from(c) * t.at(row, j);
                    *t.at_mut(row, i) += add;
                }
            }
        }
        prop_assert_eq!(smith_normal_form(&t), smith_normal_form(&m));
    }

    #[test]
    fn polynomial_rotates_under_shift(
        raw in prop::collection::vec((1i64..=6, -3i64..=3), 0..8),
        s in 0i64..6,
        n in 2usize..=6,
    ) {
        let p = CyclicPresentation::new(n, raw).unwrap();
        let shifted = p.theta_shift(s);
        let a = p.polynomial().coeffs;
        let b = shifted.polynomial().coeffs;
        for i in 0..n {
            prop_assert_eq!(b[(i + s as usize) % n], a[i]);
        }
        prop_assert_eq!(p.polynomial().coefficient_sum(), shifted.polynomial().coefficient_sum());
    }

    #[test]
    fn relation_matrix_is_circulant(
        raw in prop::collection::vec((1i64..=8, -3i64..=3), 0..8),
        n in 2usize..=8,
    ) {
        let p = CyclicPresentation::new(n, raw).unwrap();
        let m = p.relation_matrix();
        for i in 0..n {
            for j in 0..n {
                prop_assert_eq!(m.at(i, j), m.at(0, (j + n - i) % n));
            }
        }
    }

    #[test]
    fn torsion_product_matches_det(
        raw in prop::collection::vec((1i64..=8, -2i64..=2), 1..6),
        n in 2usize..=8,
    ) {
        let p = CyclicPresentation::new(n, raw).unwrap();
        let m = p.relation_matrix();
        let g = p.abelianization();
        if g.rank == 0 {
            let prod: BigInt = g.torsion.iter().product::<BigInt>().max(BigInt::one());
            prop_assert_eq!(prod, determinant(&m).unwrap().abs());
        } else {
            prop_assert!(determinant(&m).unwrap().is_zero());
        }
    }

    #[test]
    fn shift_equivalence_is_equivalence(
        raw in prop::collection::vec((1i64..=5, -2i64..=2), 0..6),
        s1 in 0i64..5,
        s2 in 0i64..5,
        n in 2usize..=5,
    ) {
        let opts = ShiftEquivOptions::default();
        let p = CyclicPresentation::new(n, raw).unwrap();
        let q = p.theta_shift(s1);
        let r = q.theta_shift(s2);
        // reflexive
        prop_assert!(equivalent_up_to_shift(&p, &p, opts).unwrap().is_some());
        // symmetric
        prop_assert_eq!(
            equivalent_up_to_shift(&p, &q, opts).unwrap().is_some(),
            equivalent_up_to_shift(&q, &p, opts).unwrap().is_some()
        );
        // transitive along the orbit
        prop_assert!(equivalent_up_to_shift(&p, &r, opts).unwrap().is_some());
    }
}
