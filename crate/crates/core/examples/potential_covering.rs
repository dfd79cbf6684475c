//! Conifold potentials as symmetric 4×4 matrices: trace invariants, the
//! degree-4 map to quintuple invariants and its fibers.

use quadric_moduli::arith::Rational;
use quadric_moduli::potential_moduli::{
    covering_formulas, fiber_experiment, reconstruct_spectrum, verify_covering_identities, SymPotentialMatrix,
};
use quadric_moduli::quiver::CyclicPotential;

fn main() -> quadric_moduli::Result<()> {
    let phi = CyclicPotential::conifold_standard();
    let n = SymPotentialMatrix::from_potential(&phi)?;
    let f = n.invariants();
    println!("potential {}", phi.render());
    println!("(f1, f2, f3, f4) = ({}, {}, {}, {})", f.f1, f.f2, f.f3, f.f4);
    let (g4, f6) = covering_formulas(&f);
    println!("g4 = {g4}, f6 = {f6} from the covering formulas");
    println!("covering identities hold exactly: {}", verify_covering_identities(&n));
    let image = n.to_quintuple();
    println!("image quintuple is stable: {}", image.classify_stability()?.as_str());

    let s = reconstruct_spectrum(&n);
    let roots: Vec<String> = s.roots.iter().map(|z| format!("{:.4}{:+.4}i", z.re, z.im)).collect();
    // a fourfold root, so the companion matrix only resolves it to about 1e-4
    println!("spectrum of NJ [{}] (power-sum residual {:.1e})", roots.join(", "), s.residual);

    let x = [1, 2, 3, 5].map(Rational::from_integer);
    let fiber = fiber_experiment(&x)?;
    println!("fiber over {}: {} preimages", fiber.target, fiber.distinct_preimages());
    for p in &fiber.preimages {
        println!("  {p}");
    }
    Ok(())
}
