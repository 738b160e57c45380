//! Fit a hyperbolic flyby from three positions on one branch. The fitted
//! Z^2 comes out negative, classifying the conic without any special
//! casing.
//!
//! Run: `cargo run --example hyperbolic_flyby`

use gibbs_od::algebraic;
use gibbs_od::elements::{position_at, KeplerElements};

fn main() {
    let e = 1.8;
    let p = 12000.0;
    let truth = KeplerElements {
        a: p / (1.0 - e * e),
        e,
        i: 25f64.to_radians(),
        raan: 10f64.to_radians(),
        argp: 120f64.to_radians(),
    };
    let theta_inf = (-1.0f64 / e).acos();
    println!("asymptote at +/- {:.2} deg of true anomaly", theta_inf.to_degrees());

    let thetas = [-0.6 * theta_inf, 0.1 * theta_inf, 0.7 * theta_inf];
    let positions = thetas.map(|th| position_at(&truth, th).expect("inside asymptotes"));

    let geom = algebraic::solve(&positions[0], &positions[1], &positions[2]).expect("solve");
    println!("recovered e = {:.6} (truth {e})", geom.e);
    println!("recovered p = {:.3} km (truth {p})", geom.p);
    println!("recovered a = {:.3} km (negative: hyperbola)", geom.a);
}
