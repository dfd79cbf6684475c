//! Point counts of framed conifold representations over prime fields, for the
//! conifold potential and two diagonal deformations.

use quadric_moduli::arith::Rational;
use quadric_moduli::dt::{counting_report, render_poly, StabilityParameter};
use quadric_moduli::quiver::CyclicPotential;

fn main() -> quadric_moduli::Result<()> {
    let theta = StabilityParameter::standard();
    let r = Rational::from_integer;
    let potentials = [
        CyclicPotential::conifold_standard(),
        CyclicPotential::diagonal([r(1), r(2), r(3), r(5)]),
        CyclicPotential::diagonal([r(1), r(1), r(1), r(1)]),
    ];
    for phi in &potentials {
        let rep = counting_report(phi, &theta, &[2, 3, 5, 7, 11, 13])?;
        println!("{} at theta = {}", rep.potential, rep.theta);
        for c in &rep.counts {
            let note = c.excluded.as_deref().map(|e| format!("  (excluded: {e})")).unwrap_or_default();
            println!("  p = {:>2}: {:?}{note}", c.p, c.count);
        }
        match &rep.polynomial {
            Some(poly) => println!("  fit {} , Euler number {}", render_poly(poly), rep.euler_number.as_ref().unwrap()),
            None => println!("  {:?}", rep.status),
        }
    }
    Ok(())
}
