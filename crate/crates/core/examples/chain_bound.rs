// The overlap forced by one backbone link, and a chain of cells that
// attains the resulting area bound.

use std::error::Error;

use gaf_cells::bounds::{avg_cell_bound, chain_max_area, delta, theoretical_bound, verify_chain_construction};
use gaf_cells::geometry::{intersection_area_mc, lens_area, Disc};
use gaf_cells::Point;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let range = 1.0;
    let samples = 200_000;
    println!("overlap closed form {:.9}, lens {:.9}", delta(range)?, lens_area(range, range)?);
    let discs = [Disc::new(Point::new(0.0, 0.0), range)?, Disc::new(Point::new(range, 0.0), range)?];
    let mc = intersection_area_mc(&discs, samples, 1)?;
    println!("overlap Monte Carlo {:.5} ± {:.5}", mc.area, mc.std_error);

    println!("\n n   chain max   estimate     ±      increment  avg bound");
    for n in 2..=5 {
        let rep = verify_chain_construction(n, range, samples, u64::from(n))?;
        println!(
            "{n:>2}  {:>10.6}  {:>9.5}  {:.5}  {:>9.5}  {:.6}  {}",
            chain_max_area(n, range)?,
            rep.estimate,
            rep.std_error,
            rep.increment,
            avg_cell_bound(n, range)?,
            if rep.pass && rep.increment_pass { "ok" } else { "off" },
        );
    }
    println!("limit of the average bound: {:.7}", theoretical_bound(range)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
