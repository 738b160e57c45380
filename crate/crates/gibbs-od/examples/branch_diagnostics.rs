//! Why u123 x v123 is always the right line intersection: the K-determinant
//! sign tests reject the other three candidates, which would scatter the
//! points over both branches of a hyperbola.
//!
//! Run: `cargo run --example branch_diagnostics`

use gibbs_od::algebraic::branch_diagnostics;
use gibbs_od::plane::PlanarPoint;

fn main() {
    let cases: [(&str, f64, f64, [f64; 3]); 3] = [
        ("ellipse e=0.5", 0.5, 11250.0, [1.22, 2.90, 3.78]),
        ("hyperbola e=1.5", 1.5, 8000.0, [-0.9, 0.4, 1.7]),
        ("circle e=0", 0.0, 10000.0, [0.1, 2.0, 4.4]),
    ];
    let labels = ["u123 x v123", "u456 x v123", "u123 x v456", "u456 x v456"];

    for (name, e, p, thetas) in cases {
        let pts = thetas.map(|th: f64| {
            let r = p / (1.0 + e * th.cos());
            PlanarPoint::new(r * th.cos(), r * th.sin())
        });
        let d = branch_diagnostics(&pts[0], &pts[1], &pts[2]).unwrap();
        println!("{name}:");
        println!("  K1 = {:.4e} km^3, K2 = {:.4e} km^2, K3 = {:.4e} km^3", d.k1, d.k2, d.k3);
        for (label, ok) in labels.iter().zip(d.consistent) {
            println!("  {label}: {}", if ok { "consistent" } else { "rejected" });
        }
    }
}
