//! Export orbit-locus plot data (CSV) for an orbit solved from three
//! positions, including the measurement points themselves.
//!
//! Run: `cargo run --example locus_export > orbit.csv`

use nalgebra::Vector3;

use gibbs_od::algebraic;
use gibbs_od::cli::cmd_locus;
use gibbs_od::elements::geometry_to_elements;

fn main() {
    let positions = [
        Vector3::new(1642.9, 2845.6, -9027.6),
        Vector3::new(-19201.0, 10197.0, 2114.2),
        Vector3::new(-11678.0, 547.76, 14739.0),
    ];
    let geom = algebraic::solve_with_tol(&positions[0], &positions[1], &positions[2], 1e-5)
        .expect("solve");
    let elements = geometry_to_elements(&geom);
    let csv = cmd_locus(&elements, Some((&geom, &positions)), 180).expect("locus");
    print!("{csv}");
}
