use num_complex::Complex64;
use proptest::prelude::*;
use quadric_moduli::acceptance::random_sl2;
use quadric_moduli::arith::{ExactMatrix, GaussianRational, Matrix, Rational};
use quadric_moduli::potential_moduli::{reconstruct_spectrum, verify_covering_identities, SymPotentialMatrix, SPECTRUM_TOLERANCE};
use quadric_moduli::quintuple::{j_matrix, Quintuple, Stability};
use quadric_moduli::weighted::WeightedPoint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn small_gaussian() -> impl Strategy<Value = GaussianRational> {
    (-3i64..=3, -3i64..=3).prop_map(|(a, b)| GaussianRational::from_ints(a, b))
}

fn quintuple() -> impl Strategy<Value = Quintuple> {
    prop::collection::vec(small_gaussian(), 16).prop_map(|v| Quintuple::from_fn(|i, j, k, l| v[8 * i + 4 * j + 2 * k + l].clone()))
}

fn sym_matrix() -> impl Strategy<Value = SymPotentialMatrix> {
    prop::collection::vec((-9i64..=9, 1i64..=5), 10).prop_map(|v| {
        let e: [Rational; 10] = std::array::from_fn(|k| Rational::new(v[k].0, v[k].1));
        SymPotentialMatrix::from_upper(&e)
    })
}

fn to_c(z: &GaussianRational) -> Complex64 {
    Complex64::new(z.re.to_f64(), z.im.to_f64())
}

type C4 = [[Complex64; 4]; 4];

fn cmul(a: &C4, b: &C4) -> C4 {
    let mut out = [[Complex64::new(0.0, 0.0); 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = (0..4).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

fn ctrans(a: &C4) -> C4 {
    std::array::from_fn(|i| std::array::from_fn(|j| a[j][i]))
}

/// Orthonormal frame for `J`: `TᵀJT = I`. The rows of `raw` are the
/// orthonormal vectors, so the frame is its transpose; a scalar multiple of
/// `raw` itself only reaches `diag(i, i, −i, −i)`.
fn orthonormal_frame() -> C4 {
    let (o, i, z) = (Complex64::new(1.0, 0.0), Complex64::new(0.0, 1.0), Complex64::new(0.0, 0.0));
    let raw = [[o, z, z, o], [z, i, i, z], [z, -o, o, z], [i, z, z, -i]];
    ctrans(&raw.map(|row| row.map(|x| x / 2f64.sqrt())))
}

fn j_float() -> C4 {
    let j = j_matrix();
    std::array::from_fn(|a| std::array::from_fn(|b| to_c(&j[(a, b)])))
}

#[test]
fn frame_is_orthonormal() {
    let t = orthonormal_frame();
    let g = cmul(&cmul(&ctrans(&t), &j_float()), &t);
    for (a, row) in g.iter().enumerate() {
        for (b, x) in row.iter().enumerate() {
            let want = if a == b { 1.0 } else { 0.0 };
            assert!((x - Complex64::new(want, 0.0)).norm() < 1e-12);
        }
    }
}

fn close(exact: &GaussianRational, float: Complex64) -> bool {
    let e = to_c(exact);
    (e - float).norm() <= 1e-9 * e.norm().max(1.0)
}

proptest! {
    #[test]
    fn invariants_agree_with_the_orthogonal_model(w in quintuple()) {
        // with T⁻¹ = TᵀJ, the matrix C = TᵀJ M J T satisfies T⁻¹AT = CᵀC
        let t = orthonormal_frame();
        let j = j_float();
        let m = w.reshape_to_matrix();
        let mf: C4 = std::array::from_fn(|a| std::array::from_fn(|b| to_c(&m[(a, b)])));
        let c = cmul(&cmul(&cmul(&cmul(&ctrans(&t), &j), &mf), &j), &t);
        let ctc = cmul(&ctrans(&c), &c);
        let mut p = ctc;
        let mut traces = Vec::new();
        for _ in 0..3 {
            traces.push((0..4).map(|k| p[k][k]).sum::<Complex64>());
            p = cmul(&p, &ctc);
        }
        let inv = w.invariants();
        prop_assert!(close(&inv.f2, traces[0]));
        prop_assert!(close(&inv.f4, traces[1]));
        prop_assert!(close(&inv.f6, traces[2]));
    }

    #[test]
    fn quintuple_invariants_are_homogeneous(w in quintuple(), t in small_gaussian()) {
        let a = w.invariants();
        let b = w.scale(&t).invariants();
        prop_assert_eq!(b.f2, &a.f2 * &t.pow(2));
        prop_assert_eq!(b.f4, &a.f4 * &t.pow(4));
        prop_assert_eq!(b.g4, &a.g4 * &t.pow(4));
        prop_assert_eq!(b.f6, &a.f6 * &t.pow(6));
    }

    #[test]
    fn stable_is_never_unstable(w in quintuple()) {
        let s = w.classify_stability().unwrap();
        if !w.invariants().g4.is_zero() {
            prop_assert_eq!(s, Stability::Stable);
            prop_assert!(!w.twisted_square().is_nilpotent().unwrap());
        }
        if s == Stability::Unstable {
            prop_assert!(w.invariants().all_zero());
        }
    }

    #[test]
    fn planted_degeneracy_is_not_geometric(v in prop::collection::vec(small_gaussian(), 8), slot in 0usize..4, seed: u64) {
        // w lies in (a line) ⊗ (the other three slots), so contracting the
        // complementary covector on that slot kills it
        prop_assume!(v.iter().any(|x| !x.is_zero()));
        let w = Quintuple::from_fn(|i, j, k, l| {
            let idx = [i, j, k, l];
            if idx[slot] != 0 {
                return GaussianRational::zero();
            }
            let rest: Vec<usize> = (0..4).filter(|&s| s != slot).map(|s| idx[s]).collect();
            v[4 * rest[0] + 2 * rest[1] + rest[2]].clone()
        });
        prop_assert!(!w.is_geometric().unwrap().geometric);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g: [ExactMatrix; 4] = std::array::from_fn(|_| random_sl2(&mut rng));
        prop_assert!(!w.act([&g[0], &g[1], &g[2], &g[3]]).is_geometric().unwrap().geometric);
    }

    #[test]
    fn potential_round_trip(n in sym_matrix()) {
        let phi = n.to_potential();
        prop_assert_eq!(SymPotentialMatrix::from_potential(&phi).unwrap(), n.clone());
        prop_assert_eq!(phi.classes().len(), count_nonzero_classes(&n));
    }

    #[test]
    fn potential_invariants_are_sl_invariant_and_homogeneous(n in sym_matrix(), seed: u64, t in (-4i64..=4, 1i64..=3)) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (g0, g1): (Matrix<Rational>, Matrix<Rational>) = (random_sl2(&mut rng), random_sl2(&mut rng));
        prop_assert_eq!(n.act(&g0, &g1).invariants(), n.invariants());
        let t = Rational::new(t.0, t.1);
        let scaled = SymPotentialMatrix::new(n.matrix().scale(&t)).unwrap().invariants().to_vec();
        for (d, (a, b)) in n.invariants().to_vec().iter().zip(&scaled).enumerate() {
            prop_assert_eq!(b, &(a * &t.pow(d as i32 + 1)));
        }
    }

    #[test]
    fn covering_identities_hold(n in sym_matrix()) {
        prop_assert!(verify_covering_identities(&n));
    }

    #[test]
    fn spectrum_reproduces_power_sums(n in sym_matrix()) {
        let s = reconstruct_spectrum(&n);
        let scale = n.invariants().to_vec().iter().map(|f| f.to_f64().abs()).fold(1.0, f64::max);
        prop_assert_eq!(s.roots.len(), 4);
        prop_assert!(s.residual <= SPECTRUM_TOLERANCE * scale, "residual {} at scale {}", s.residual, scale);
    }

    #[test]
    fn weighted_points_absorb_scaling(c in prop::collection::vec(small_gaussian(), 4), l in small_gaussian()) {
        prop_assume!(c.iter().any(|x| !x.is_zero()) && !l.is_zero());
        let p = WeightedPoint::new(vec![2, 4, 4, 6], c).unwrap();
        prop_assert!(p.equivalent(&p.scale(&l)).unwrap());
        prop_assert!(p.scale(&l).equivalent(&p).unwrap());
    }
}

proptest! {
    // exact gcds over ℚ(i) with large entries; fewer cases keep this quick
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn quintuple_invariants_and_geometricity_are_sl_invariant(w in quintuple(), seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g: [ExactMatrix; 4] = std::array::from_fn(|_| random_sl2(&mut rng));
        let v = w.act([&g[0], &g[1], &g[2], &g[3]]);
        prop_assert_eq!(v.invariants(), w.invariants());
        if !w.is_zero() {
            prop_assert_eq!(v.is_geometric().unwrap().geometric, w.is_geometric().unwrap().geometric);
        }
    }
}

fn count_nonzero_classes(n: &SymPotentialMatrix) -> usize {
    let m = n.matrix();
    (0..4).flat_map(|i| (i..4).map(move |j| (i, j))).filter(|&(i, j)| !m[(i, j)].is_zero()).count()
}
