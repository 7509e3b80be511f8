use betti_core::bounds;
use betti_core::decompose::{greedy_decompose, is_pure, recompose};
use betti_core::diagram::{
    binomial, hk_moment, pi, pi_all, pure_diagram, shape_params, sum_pi, truncate, BettiDiagram,
};
use betti_core::polycert::{point_for, symbolic_sum_pi, RatFun};
use betti_core::verify::{enumerate, is_excluded, EnumSpec};
use betti_core::{DegreeSequence, Rat};
use proptest::prelude::*;

/// `{0, a, a + g_1, a + g_1 + g_2, ...}` with `a >= a_min` and gaps in `1..=4`.
fn degree_sequence(n: std::ops::RangeInclusive<usize>, a_min: i64) -> impl Strategy<Value = DegreeSequence> {
    (a_min..=8i64, prop::collection::vec(1..=4i64, n))
        .prop_map(|(a, gaps)| {
            let mut d = vec![0, a];
            for g in gaps.iter().skip(1) {
                let last = *d.last().unwrap();
                d.push(last + g);
            }
            DegreeSequence::new(d).unwrap()
        })
}

/// `d_1 ... d_n / prod_{j != i} |d_i - d_j|`, with `j` running over `0..=n`.
fn pi_oracle(d: &DegreeSequence, i: usize) -> Rat {
    let num: i128 = (1..=d.n()).map(|j| d.d(j) as i128).product();
    let den: i128 = (0..=d.n())
        .filter(|&j| j != i)
        .map(|j| (d.d(i) - d.d(j)).abs() as i128)
        .product();
    Rat::new(num, den).unwrap()
}

fn symbolic_sums() -> &'static [RatFun] {
    static SUMS: std::sync::OnceLock<Vec<RatFun>> = std::sync::OnceLock::new();
    SUMS.get_or_init(|| (3..=5).map(|n| symbolic_sum_pi(n).unwrap()).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn pi_matches_product_formula(d in degree_sequence(1..=9, 1)) {
        for i in 0..=d.n() {
            prop_assert_eq!(pi(&d, i).unwrap(), pi_oracle(&d, i));
        }
        let all = pi_all(&d);
        prop_assert_eq!(&all[0], &Rat::one());
        prop_assert!(all.iter().all(Rat::is_positive));
    }

    #[test]
    fn moments_vanish(d in degree_sequence(1..=8, 1)) {
        for k in 0..d.n() as u32 {
            prop_assert!(hk_moment(&d, k).is_zero());
        }
        // the first nonvanishing moment
        prop_assert!(!hk_moment(&d, d.n() as u32).is_zero());
    }

    #[test]
    fn truncation_keeps_shape(d in degree_sequence(2..=10, 2), pick in 0usize..100) {
        let i = 1 + pick % d.n();
        let t = truncate(&d, i).unwrap();
        prop_assert_eq!(t.d(i), d.d(i));
        prop_assert_eq!(t.d(1), d.d(1));
        prop_assert_eq!(t.d(t.n()), d.d(d.n()));
        prop_assert_eq!(shape_params(&t, i).unwrap(), shape_params(&d, i).unwrap());
        prop_assert_eq!(truncate(&t, i).unwrap(), t.clone());
        prop_assert!(pi(&d, i).unwrap() >= pi(&t, i).unwrap());
    }

    #[test]
    fn jump_total_is_index_free(d in degree_sequence(2..=10, 2)) {
        let totals: Vec<i64> = (1..=d.n())
            .map(|i| { let p = shape_params(&d, i).unwrap(); p.b + p.e })
            .collect();
        prop_assert!(totals.windows(2).all(|w| w[0] == w[1]));
        prop_assert_eq!(totals[0] + d.d(1) - 1, d.regularity());
    }

    #[test]
    fn bridge_identity(d in degree_sequence(3..=11, 2), pick in 0usize..100) {
        let i = 1 + pick % d.n();
        let p = shape_params(&d, i).unwrap();
        let lhs = pi(&truncate(&d, i).unwrap(), i).unwrap();
        let rhs = bounds::f_params(&p).unwrap() * Rat::from(binomial(d.n() as u64, i as u64));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn decomposition_round_trip(
        chain in prop::collection::vec((1i64..=3, 1i64..=5), 1..=4),
        base in degree_sequence(2..=4, 1),
    ) {
        // a chain of sequences, each dominating the last entrywise
        let n = base.n();
        let mut seqs = vec![base.clone()];
        for &(bump, _) in chain.iter().skip(1) {
            let prev = seqs.last().unwrap();
            let pos = 1 + (bump as usize) % n;
            let mut d = prev.degrees().to_vec();
            for v in d.iter_mut().skip(pos) {
                *v += 1;
            }
            seqs.push(DegreeSequence::new(d).unwrap());
        }
        let mut b = BettiDiagram::new();
        let mut entries: std::collections::BTreeMap<(usize, i64), Rat> = Default::default();
        for (d, &(_, w)) in seqs.iter().zip(&chain) {
            let p = pure_diagram(d, &Rat::from(w)).unwrap();
            for (i, j, v) in p.placements() {
                *entries.entry((i, j)).or_default() += v.clone();
            }
        }
        for ((i, j), v) in entries {
            b.insert(i, j, v).unwrap();
        }
        let dec = greedy_decompose(&b).unwrap();
        prop_assert_eq!(recompose(&dec), b.clone());
        prop_assert_eq!(dec.lambda_sum(), b.total(0));
        prop_assert!(dec.summands.iter().all(|s| s.lambda.is_positive()));
        // summands form an increasing chain
        for w in dec.summands.windows(2) {
            let (x, y) = (w[0].degrees.degrees(), w[1].degrees.degrees());
            prop_assert!(x.iter().zip(y).all(|(p, q)| p <= q));
        }
    }

    #[test]
    fn pure_diagrams_are_recognized(d in degree_sequence(1..=6, 1), w in 1i64..=9) {
        let b = pure_diagram(&d, &Rat::from(w)).unwrap().to_betti_diagram();
        prop_assert_eq!(is_pure(&b), Some((Rat::from(w), d.clone())));
        let dec = greedy_decompose(&b).unwrap();
        prop_assert_eq!(dec.summands.len(), 1);
    }

    #[test]
    fn symbolic_sum_agrees(a in 2i64..=6, jumps in prop::collection::vec(0i64..=3, 4)) {
        for n in 3..=5usize {
            let mut d = vec![0, a];
            for &x in &jumps[..n - 1] {
                let last = *d.last().unwrap();
                d.push(last + x + 1);
            }
            let d = DegreeSequence::new(d).unwrap();
            let point = point_for(&d).unwrap();
            let rf = &symbolic_sums()[n - 3];
            prop_assert_eq!(rf.evaluate_ints(&point).unwrap(), sum_pi(&d));
            for f in &rf.denominator {
                prop_assert!(f.evaluate_ints(&point).unwrap().is_positive());
            }
        }
    }
}

#[test]
fn enumeration_matches_brute_force() {
    for n in 3..=5usize {
        for strict in [false, true] {
            let spec = EnumSpec { strict, ..EnumSpec::single(n, 4).unwrap() };
            let listed: Vec<DegreeSequence> = enumerate(&spec).unwrap().collect();
            let mut brute = Vec::new();
            // every strictly increasing sequence with d_n <= 2*4 - 2 + n
            let top = 2 * 4 - 2 + n as i64;
            let mut d = vec![0i64; n + 1];
            fn rec(d: &mut Vec<i64>, k: usize, top: i64, spec: &EnumSpec, out: &mut Vec<DegreeSequence>) {
                if k == d.len() {
                    let s = DegreeSequence::new(d.clone()).unwrap();
                    if spec.admits(&s) {
                        out.push(s);
                    }
                    return;
                }
                for v in d[k - 1] + 1..=top {
                    d[k] = v;
                    rec(d, k + 1, top, spec, out);
                }
            }
            rec(&mut d, 1, top, &spec, &mut brute);
            let mut sorted = listed.clone();
            sorted.sort_by_key(|s| s.shift_vector());
            sorted.dedup();
            assert_eq!(sorted.len(), listed.len(), "duplicates for n = {n}");
            brute.sort_by_key(|s| s.shift_vector());
            assert_eq!(sorted, brute, "n = {n}, strict = {strict}");
        }
    }
}

#[test]
fn exclusion_is_the_unit_jump_family() {
    let spec = EnumSpec::new(6, 8, 6).unwrap();
    for d in enumerate(&spec).unwrap() {
        let p = shape_params(&d, 1).unwrap();
        let family = (p.a == 2 || p.a == 3) && p.b + p.e == 1;
        assert_eq!(is_excluded(&d), family, "{d}");
    }
}
