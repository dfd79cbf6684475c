//! Cyclic derivatives, Jacobi relations and Hilbert functions of the conifold
//! quiver with potential and of its double cover.

use quadric_moduli::quiver::{graded_dimension, jacobi_generators, partial_derivative, potential_double_cover, CyclicPotential};

fn main() -> quadric_moduli::Result<()> {
    let phi = CyclicPotential::conifold_standard();
    let q = phi.quiver();
    println!("potential {}", phi.render());
    for a in ["a1", "a2", "b1", "b2"] {
        println!("  d/d{a} = {}", partial_derivative(&phi, a)?.render(q));
    }
    println!("{} Jacobi relations", jacobi_generators(&phi).len());
    for (from, to) in [("v0", "v0"), ("v0", "v1")] {
        println!("dims {from} -> {to}: {:?}", graded_dimension(&phi, from, to, 8)?);
    }

    let lift = potential_double_cover(&phi)?;
    println!("double cover potential {}", lift.render());
    println!("dims v00 -> v00: {:?}", graded_dimension(&lift, "v00", "v00", 8)?);
    Ok(())
}
