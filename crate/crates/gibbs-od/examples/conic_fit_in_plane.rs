//! The algebraic pipeline step by step: build the orbit-plane frame,
//! project the positions, factor the constraints into lines, intersect
//! them, and read the conic parameters.
//!
//! Run: `cargo run --example conic_fit_in_plane`

use nalgebra::Vector3;

use gibbs_od::algebraic::{build_lines, fit_conic, locus_residual};
use gibbs_od::conic::geometry_from_conic;
use gibbs_od::plane::build_frame_with_tol;

fn main() {
    let r1 = Vector3::new(1642.9, 2845.6, -9027.6);
    let r2 = Vector3::new(-19201.0, 10197.0, 2114.2);
    let r3 = Vector3::new(-11678.0, 547.76, 14739.0);

    let frame = build_frame_with_tol(&r1, &r2, &r3, 1e-5).expect("frame");
    println!("w  = {:.4?}", frame.w.as_slice());
    println!("e1 = {:.4?}", frame.e1.as_slice());
    println!("e2 = {:.4?}", frame.e2.as_slice());

    let p1 = frame.project(&r1).unwrap();
    let p2 = frame.project(&r2).unwrap();
    let p3 = frame.project(&r3).unwrap();
    for (i, p) in [&p1, &p2, &p3].iter().enumerate() {
        println!("planar point {}: ({:.1}, {:.1}) km, r = {:.1}", i + 1, p.x, p.y, p.r);
    }

    let lines = build_lines(&p1, &p2, &p3).unwrap();
    println!("u123 = {:.4?}", lines.u123.coords().as_slice());
    println!("v123 = {:.4?}", lines.v123.coords().as_slice());

    let conic = fit_conic(&p1, &p2, &p3).expect("conic fit");
    println!("X = {:.4e}, Y = {:.4e}, Z^2 = {:.4e}", conic.x, conic.y, conic.zsq);
    for (i, p) in [&p1, &p2, &p3].iter().enumerate() {
        println!("locus residual at point {}: {:.2e}", i + 1, locus_residual(&conic, p));
    }

    let geom = geometry_from_conic(&conic).unwrap();
    println!("p = {:.1} km, e = {:.4}, a = {:.1} km", geom.p, geom.e, geom.a);
}
