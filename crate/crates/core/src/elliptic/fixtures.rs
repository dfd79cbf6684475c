//! Exact rational points via the chord-tangent law, and random fixtures.

use rand::seq::IndexedRandom;
use rand::Rng;

use super::{group_elements, EllPoint, EllipticConfiguration, GroupElement, LambdaValue};
use crate::arith::{GaussianRational, Rational};
use crate::error::Result;

/// `p + q` with `[1:0:0]` as the identity. In the chart `x = X/Y, y = Z/Y²`
/// the curve is `y² = λ₁x³ − (λ₀+λ₁)x² + λ₀x`.
pub fn add_points(lambda: &LambdaValue, p: &EllPoint, q: &EllPoint) -> Result<EllPoint> {
    let o = EllPoint::origin();
    if *p == o {
        return Ok(q.clone());
    }
    if *q == o {
        return Ok(p.clone());
    }
    let [l0, l1] = lambda.pair();
    let (a, b, c) = (l1.clone(), -(l0 + l1), l0.clone());
    let chart = |p: &EllPoint| {
        let [x, y, z] = p.coords();
        (x / y, z / &(y * y))
    };
    let (x1, y1) = chart(p);
    let (x2, y2) = chart(q);
    let m = if x1 != x2 {
        &(&y2 - &y1) / &(&x2 - &x1)
    } else if y1 == -&y2 {
        return Ok(o);
    } else {
        let three = GaussianRational::from_integer(3);
        let two = GaussianRational::from_integer(2);
        &(&(&(&three * &a) * &(&x1 * &x1)) + &(&(&two * &b) * &x1) + c) / &(&two * &y1)
    };
    let x3 = &(&(&(&m * &m) - &b) / &a) - &(&x1 + &x2);
    let y3 = -(&y1 + &(&m * &(&x3 - &x1)));
    EllPoint::new(x3, GaussianRational::one(), y3)
}

fn small_rational(rng: &mut impl Rng) -> Rational {
    loop {
        let n = rng.random_range(-9..=9);
        if n != 0 {
            return Rational::new(n, rng.random_range(1..=9));
        }
    }
}

/// `k · p₁` for the first point of `config`.
pub fn random_point_multiple(config: &EllipticConfiguration, k: u32) -> Result<EllPoint> {
    let mut acc = EllPoint::origin();
    for _ in 0..k {
        acc = add_points(&config.lambda, &acc, &config.p1)?;
    }
    Ok(acc)
}

/// Admissible configuration `(λ, p, 2p)` over ℚ: pick `p = (1 : Y : Z)` and
/// solve the curve equation for `λ`.
pub fn random_configuration(rng: &mut impl Rng) -> EllipticConfiguration {
    loop {
        let y = small_rational(rng);
        let z = small_rational(rng);
        if y.is_one() {
            continue;
        }
        let one = Rational::one();
        let lambda = (&one - &(&z * &z) / (&y * &(&one - &y))) / &y;
        let Ok(l) = LambdaValue::affine(GaussianRational::real(lambda)) else {
            continue;
        };
        let p1 = EllPoint::new(
            GaussianRational::one(),
            GaussianRational::real(y),
            GaussianRational::real(z),
        )
        .unwrap();
        let Ok(p2) = add_points(&l, &p1, &p1) else {
            continue;
        };
        if let Ok(c) = EllipticConfiguration::new(l, p1, p2) {
            if c.is_admissible() {
                return c;
            }
        }
    }
}

pub fn random_group_element(rng: &mut impl Rng, include_involution: bool) -> GroupElement {
    group_elements(include_involution).choose(rng).unwrap().clone()
}
