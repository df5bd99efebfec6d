//! Inversion sets, admissible sortings and the antireduced process for one
//! element of A3.

use schubert_mf::{Result, RootSystem};

fn main() -> Result<()> {
    let rs = RootSystem::parse("A3")?;
    let w = rs.parse_word("1 2 1 3")?;
    println!("w = {}, length {}", rs.format_word(&w), w.length());

    for alpha in w.inversion_set() {
        println!("  inversion {alpha}");
    }
    for alpha in rs.admissible_sortings(&w) {
        let next = rs.reflect_element(&alpha, &w)?;
        println!("  sort by {alpha} -> {}", rs.format_word(&next));
    }

    let process = rs.antireduced_process(&w);
    println!("antireduced process has {} steps", process.len());
    if let Some(x) = process.x_multiplicity() {
        println!("associated X-multiplicity {x}");
    }
    Ok(())
}
