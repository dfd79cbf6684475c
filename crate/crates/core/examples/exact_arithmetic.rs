//! Exact building blocks: ranks over ℚ(i), gcds of binary forms, prime fields
//! and equality in weighted projective space.

use quadric_moduli::arith::{binary_form_gcd, BinaryForm, ExactMatrix, GaussianRational, PrimeField, Rational};
use quadric_moduli::weighted::WeightedPoint;

fn main() -> quadric_moduli::Result<()> {
    let g = GaussianRational::from_ints;
    let m = ExactMatrix::from_rows(vec![
        vec![g(1, 1), g(2, 0), g(0, 1)],
        vec![g(0, 2), g(2, 2), g(-1, 1)],
        vec![g(1, 0), g(0, 0), g(3, 0)],
    ]);
    println!("rank {} determinant {}", m.rank(), m.determinant()?);

    // (u1 - u2)(u1 + 2u2) and (u1 - u2)u2 share u1 - u2
    let f = BinaryForm::from_ints(&[-2, 1, 1]);
    let h = BinaryForm::from_ints(&[0, 1, -1]);
    println!("gcd coefficients {:?}", binary_form_gcd(&[f, h])?.coeffs());

    let f7 = PrimeField::new(7)?;
    println!("-3/2 mod 7 = {}", f7.reduce(&Rational::new(-3, 2))?);

    let w = vec![2, 4];
    let p = WeightedPoint::new(w.clone(), vec![g(1, 0), g(1, 0)])?;
    let q = WeightedPoint::new(w, vec![g(1, 0), g(-1, 0)])?;
    // i·(1, 1) = (−1, 1) in P(2,4); (1, −1) is not in that orbit
    println!("{p} == {}: {}", p.scale(&g(0, 1)), p.equivalent(&p.scale(&g(0, 1)))?);
    println!("{p} == {q}: {}", p.equivalent(&q)?);
    Ok(())
}
