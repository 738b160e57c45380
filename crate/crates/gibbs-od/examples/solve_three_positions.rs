//! Solve the three-position problem with both methods and compare.
//!
//! Run: `cargo run --example solve_three_positions`

use nalgebra::Vector3;

use gibbs_od::algebraic;
use gibbs_od::gibbs::{gibbs_geometry, gibbs_intermediates_with_tol, gibbs_velocity};
use gibbs_od::MU_EARTH;

fn main() {
    // Three position measurements of a satellite, km (these carry ~5
    // significant digits, hence the relaxed coplanarity tolerance).
    let r1 = Vector3::new(1642.9, 2845.6, -9027.6);
    let r2 = Vector3::new(-19201.0, 10197.0, 2114.2);
    let r3 = Vector3::new(-11678.0, 547.76, 14739.0);
    let tol = 1e-5;

    let alg = algebraic::solve_with_tol(&r1, &r2, &r3, tol).expect("algebraic solve");
    println!("algebraic: a = {:.1} km, e = {:.4}, p = {:.1} km", alg.a, alg.e, alg.p);
    println!("  p_hat = {:.4?}", alg.p_hat.unwrap().as_slice());
    println!("  w_hat = {:.4?}", alg.w_hat.as_slice());

    let g = gibbs_intermediates_with_tol(&r1, &r2, &r3, tol).expect("gibbs intermediates");
    let gib = gibbs_geometry(&g).expect("gibbs geometry");
    println!("gibbs:     a = {:.1} km, e = {:.4}, p = {:.1} km", gib.a, gib.e, gib.p);

    let v1 = gibbs_velocity(&g, &r1, MU_EARTH).unwrap();
    println!("v1 = {:.4?} km/s (|v1| = {:.4})", v1.as_slice(), v1.norm());

    let dp = (alg.p - gib.p).abs() / gib.p;
    println!("cross-method relative disagreement in p: {dp:.2e}");
}
