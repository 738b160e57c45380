//! Generate positions from known elements, solve, and recover the elements:
//! the oracle round trip that validates both solvers.
//!
//! Run: `cargo run --example synthetic_round_trip`

use gibbs_od::algebraic;
use gibbs_od::elements::{geometry_to_elements, position_at, KeplerElements};

fn main() {
    let truth = KeplerElements {
        a: 26560.0,
        e: 0.72,
        i: 63.4f64.to_radians(),
        raan: 40f64.to_radians(),
        argp: 270f64.to_radians(),
    };
    let thetas = [20f64, 95.0, 150.0].map(f64::to_radians);
    let positions = thetas.map(|th| position_at(&truth, th).expect("on physical branch"));
    for (i, r) in positions.iter().enumerate() {
        println!("r{} = {:.3?} km", i + 1, r.as_slice());
    }

    let geom = algebraic::solve(&positions[0], &positions[1], &positions[2]).expect("solve");
    let recovered = geometry_to_elements(&geom);

    println!("\n            truth        recovered");
    println!("a    : {:12.4} {:12.4} km", truth.a, recovered.a);
    println!("e    : {:12.8} {:12.8}", truth.e, recovered.e);
    println!("i    : {:12.6} {:12.6} deg", truth.i.to_degrees(), recovered.i.to_degrees());
    println!("raan : {:12.6} {:12.6} deg", truth.raan.to_degrees(), recovered.raan.to_degrees());
    println!("argp : {:12.6} {:12.6} deg", truth.argp.to_degrees(), recovered.argp.to_degrees());
}
