//! Configurations (λ, p₁, p₂) on the Legendre family: 2-torsion translations,
//! λ-symmetries and orbit equivalence. Prints a configuration and an
//! equivalent one as JSON.

use quadric_moduli::arith::{GaussianRational, Rational};
use quadric_moduli::elliptic::{
    add_points, group_elements, orbit_witness, translate_2torsion, EllPoint, EllipticConfiguration, LambdaValue, Translation,
};
use quadric_moduli::json;

fn main() -> quadric_moduli::Result<()> {
    // p = (1 : 3 : 1) lies on the curve for λ = 7/18
    let lambda = LambdaValue::affine(GaussianRational::real(Rational::new(7, 18)))?;
    let p = EllPoint::from_ints(1, 3, 1);
    let c = EllipticConfiguration::new(lambda.clone(), p.clone(), add_points(&lambda, &p, &p)?)?;
    println!("configuration {c:?}, admissible: {}", c.is_admissible());
    for t in Translation::ALL {
        println!("  {} p1 = {}", t.as_str(), translate_2torsion(&lambda, &c.p1, t)?);
    }

    let g = &group_elements(false)[37];
    let moved = g.apply(&c)?;
    println!("moved by {g}: {moved:?}");
    match orbit_witness(&c, &moved, false) {
        Some(w) => println!("witness found: {w}"),
        None => println!("no witness"),
    }
    println!("{}", serde_json::to_string(&json::configuration(&c)).unwrap());
    println!("{}", serde_json::to_string(&json::configuration(&moved)).unwrap());
    Ok(())
}
