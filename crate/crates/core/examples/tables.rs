// Maximal cell area per scheme and its share of the average-cell bound.

use std::error::Error;

use gaf_cells::bounds::{gaf_alt_shape_area, scheme_max_area, theoretical_bound, two_type_avg_area, AltShape};
use gaf_cells::Scheme;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let range = 1.0;
    let bound = theoretical_bound(range)?;
    println!("{:<16} {:>10} {:>8}", "scheme", "max area", "% bound");
    for scheme in Scheme::ALL {
        let area = scheme_max_area(scheme, range)?;
        println!("{:<16} {:>10.7} {:>8.2}", scheme.name(), area, 100.0 * area / bound);
    }
    println!("{:<16} {:>10.7} {:>8.2}", "bound", bound, 100.0);

    println!();
    println!("GAF with triangle cells: {:.7}", gaf_alt_shape_area(AltShape::Triangle, range));
    println!("GAF with hexagon cells:  {:.7}", gaf_alt_shape_area(AltShape::Hexagon, range));
    for k in [2, 3, 4, 10, 100] {
        println!("two-type average, k = {k:>3}: {:.7}", two_type_avg_area(k, range)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
