use proptest::prelude::*;
use quadric_moduli::arith::{binary_form_gcd, BinaryForm, Field, GaussianRational, Matrix, PrimeField, Rational};

fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=12).prop_map(|(n, d)| Rational::new(n, d))
}

fn gaussian() -> impl Strategy<Value = GaussianRational> {
    (rational(), rational()).prop_map(|(a, b)| GaussianRational::new(a, b))
}

fn small_gaussian() -> impl Strategy<Value = GaussianRational> {
    (-3i64..=3, -3i64..=3).prop_map(|(a, b)| GaussianRational::from_ints(a, b))
}

fn check_field<T: Field>(a: T, b: T, c: T) {
    assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
    assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
    assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
    assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
    assert_eq!(
        a.clone() * (b.clone() + c.clone()),
        a.clone() * b.clone() + a.clone() * c.clone()
    );
    assert_eq!(a.clone() - a.clone(), T::zero());
    assert_eq!(a.clone() + (-a.clone()), T::zero());
    assert_eq!(a.clone() * T::one(), a);
    match a.inv() {
        Some(i) => assert_eq!(a * i, T::one()),
        None => assert!(a.is_zero()),
    }
}

/// Determinant by cofactor expansion along the first row.
fn laplace_det(m: &[Vec<GaussianRational>]) -> GaussianRational {
    if m.is_empty() {
        return GaussianRational::one();
    }
    let mut acc = GaussianRational::zero();
    for (j, a) in m[0].iter().enumerate() {
        let minor: Vec<Vec<GaussianRational>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = a * &laplace_det(&minor);
        acc = if j % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

/// Largest `k` with a nonzero `k × k` minor.
fn minor_rank(rows: &[Vec<GaussianRational>]) -> usize {
    let (r, c) = (rows.len(), rows[0].len());
    (1..=r.min(c))
        .rev()
        .find(|&k| {
            subsets(r, k).iter().any(|rs| {
                subsets(c, k).iter().any(|cs| {
                    let m: Vec<Vec<_>> = rs.iter().map(|&i| cs.iter().map(|&j| rows[i][j].clone()).collect()).collect();
                    !laplace_det(&m).is_zero()
                })
            })
        })
        .unwrap_or(0)
}

/// Sylvester resultant of two binary quadratics.
fn resultant(f: &BinaryForm, g: &BinaryForm) -> GaussianRational {
    let (a, b) = (f.coeffs(), g.coeffs());
    let z = GaussianRational::zero;
    let rows = vec![
        vec![a[2].clone(), a[1].clone(), a[0].clone(), z()],
        vec![z(), a[2].clone(), a[1].clone(), a[0].clone()],
        vec![b[2].clone(), b[1].clone(), b[0].clone(), z()],
        vec![z(), b[2].clone(), b[1].clone(), b[0].clone()],
    ];
    laplace_det(&rows)
}

proptest! {
    #[test]
    fn rationals_form_a_field(a in rational(), b in rational(), c in rational()) {
        check_field(a, b, c);
    }

    #[test]
    fn gaussian_rationals_form_a_field(a in gaussian(), b in gaussian(), c in gaussian()) {
        check_field(a, b, c);
    }

    #[test]
    fn prime_fields_form_a_field(p in prop::sample::select(vec![2u64, 3, 5, 7, 13, 101]), a: i64, b: i64, c: i64) {
        let f = PrimeField::new(p).unwrap();
        let (a, b, c) = (f.element(a), f.element(b), f.element(c));
        prop_assert_eq!(a + b, b + a);
        prop_assert_eq!(a * (b + c), a * b + a * c);
        prop_assert_eq!(a - a, f.zero());
        match a.inv() {
            Some(i) => prop_assert_eq!(a * i, f.one()),
            None => prop_assert!(a.is_zero()),
        }
    }

    #[test]
    fn rational_reduction_is_a_ring_map(p in prop::sample::select(vec![3u64, 5, 7, 11]), a in rational(), b in rational()) {
        let f = PrimeField::new(p).unwrap();
        if let (Ok(x), Ok(y)) = (f.reduce(&a), f.reduce(&b)) {
            prop_assert_eq!(f.reduce(&(&a * &b)).unwrap(), x * y);
            prop_assert_eq!(f.reduce(&(&a + &b)).unwrap(), x + y);
        }
    }

    #[test]
    fn rank_matches_minors(rows in 1usize..=4, cols in 1usize..=4, seed in prop::collection::vec(-2i64..=2, 16), rank_cap in 1usize..=4) {
        // entries from a product of a rows×cap and cap×cols matrix, so low ranks occur often
        let cap = rank_cap.min(rows).min(cols);
        let left = Matrix::<GaussianRational>::from_fn(rows, cap, |i, j| GaussianRational::from_integer(seed[(i * 4 + j) % 16]));
        let right = Matrix::<GaussianRational>::from_fn(cap, cols, |i, j| GaussianRational::from_ints(seed[(i * 4 + j + 5) % 16], seed[(j + 3) % 16]));
        let m = &left * &right;
        let dense: Vec<Vec<GaussianRational>> = (0..rows).map(|i| m.row(i).to_vec()).collect();
        prop_assert_eq!(m.rank(), minor_rank(&dense));
        prop_assert!(m.rank() <= cap);
        if rows == cols {
            prop_assert_eq!(m.determinant().unwrap(), laplace_det(&dense));
        }
    }

    #[test]
    fn nilpotency_matches_characteristic_polynomial(upper in prop::collection::vec(-3i64..=3, 6), diag in prop::collection::vec(-1i64..=1, 4), g in prop::collection::vec(-2i64..=2, 4)) {
        // triangular matrix conjugated by a unimodular matrix; nilpotent iff the diagonal vanishes
        let mut t = Matrix::<Rational>::zeros(4, 4);
        let mut k = 0;
        for i in 0..4 {
            t[(i, i)] = Rational::from_integer(diag[i]);
            for j in i + 1..4 {
                t[(i, j)] = Rational::from_integer(upper[k]);
                k += 1;
            }
        }
        let mut u = Matrix::<Rational>::identity(4);
        for (i, &x) in g.iter().enumerate() {
            u[(i, (i + 1) % 4)] = Rational::from_integer(x);
        }
        let Some(u_inv) = invert(&u) else { return Ok(()); };
        let m = &(&u * &t) * &u_inv;
        // x⁴ is the characteristic polynomial iff every eigenvalue is zero
        let expected = diag.iter().all(|&d| d == 0);
        prop_assert_eq!(m.is_nilpotent().unwrap(), expected);
    }

    #[test]
    fn gcd_divides_and_absorbs_common_factors(f in prop::collection::vec(small_gaussian(), 2), g in prop::collection::vec(small_gaussian(), 2), h in prop::collection::vec(small_gaussian(), 2)) {
        let (f, g, h) = (BinaryForm::new(f), BinaryForm::new(g), BinaryForm::new(h));
        let (a, b) = (f.mul(&h), g.mul(&h));
        let d = binary_form_gcd(&[a.clone(), b.clone()]).unwrap();
        prop_assert!(d.divides(&a) && d.divides(&b));
        if !h.is_zero() && !(a.is_zero() && b.is_zero()) {
            prop_assert!(h.divides(&d));
        }
    }

    #[test]
    fn gcd_is_nonconstant_iff_resultant_vanishes(f in prop::collection::vec(small_gaussian(), 3), g in prop::collection::vec(small_gaussian(), 3)) {
        let (f, g) = (BinaryForm::new(f), BinaryForm::new(g));
        prop_assume!(!f.is_zero() && !g.is_zero());
        let d = binary_form_gcd(&[f.clone(), g.clone()]).unwrap();
        prop_assert_eq!(d.degree() > 0, resultant(&f, &g).is_zero());
    }
}

fn invert(m: &Matrix<Rational>) -> Option<Matrix<Rational>> {
    // Gauss-Jordan on [m | I]
    let n = m.rows();
    let mut a: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut row = m.row(i).to_vec();
            row.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        let inv = a[col][col].recip().unwrap();
        for x in a[col].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pivot_row = a[col].clone();
                for (x, p) in a[r].iter_mut().zip(&pivot_row) {
                    *x = &*x - &(&f * p);
                }
            }
        }
    }
    Some(Matrix::from_fn(n, n, |i, j| a[i][n + j].clone()))
}

#[test]
fn gaussian_square_roots_square_back() {
    for (a, b) in [(3, 4), (-7, 24), (0, 2), (4, 0), (-9, 0)] {
        let z = GaussianRational::from_ints(a, b);
        let r = z.sqrt().unwrap();
        assert_eq!(&r * &r, z);
    }
    assert_eq!(GaussianRational::from_integer(5).sqrt(), None);
}
