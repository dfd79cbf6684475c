//! Classical invariants, GIT stability and geometricity of 2×2×2×2 tensors.

use quadric_moduli::arith::GaussianRational;
use quadric_moduli::quintuple::Quintuple;

fn report(name: &str, w: &Quintuple) -> quadric_moduli::Result<()> {
    let inv = w.invariants();
    let geo = w.is_geometric()?;
    println!("{name}");
    println!("  (f2, f4, g4, f6) = ({}, {}, {}, {})", inv.f2, inv.f4, inv.g4, inv.f6);
    println!("  stability: {}", w.classify_stability()?.as_str());
    if !inv.all_zero() {
        println!("  weighted point: {}", w.weighted_point()?);
        println!("  invariants of a linear quintuple: {}", w.has_linear_invariants()?);
    }
    println!("  geometric: {} {:?}", geo.geometric, geo.failing_index);
    Ok(())
}

fn unit(i: usize, j: usize, k: usize, l: usize) -> Quintuple {
    let mut w = Quintuple::zero();
    w.set(i, j, k, l, GaussianRational::one());
    w
}

fn main() -> quadric_moduli::Result<()> {
    report("linear reference", &Quintuple::linear_reference())?;

    let g = GaussianRational::from_ints;
    let generic = Quintuple::from_fn(|i, j, k, l| {
        let n = (i + 2 * j + 3 * k + 5 * l) as i64;
        g(n * n % 7 - 3, (i * l) as i64)
    });
    report("a generic tensor", &generic)?;

    // E₀₃ + E₃₀ in the reshaped 4×4 matrix
    let mut semi = unit(0, 0, 1, 1);
    semi.set(1, 1, 0, 0, GaussianRational::one());
    report("E03 + E30", &semi)?;

    report("a single product x0 x0 x0 x0", &unit(0, 0, 0, 0))?;
    Ok(())
}
