//! Hall feasibility and an explicit distribution for an inversion set.

use schubert_mf::{find_distribution, hall_feasible, Result, RootSystem};

fn main() -> Result<()> {
    let rs = RootSystem::parse("D4")?;
    let w = rs.parse_word("2 1 3 4 2")?;
    let roots = w.inversion_set().to_vec();

    for n in [[1u32, 2, 1, 1], [3, 1, 1, 0], [2, 1, 1, 1]] {
        println!("n = {n:?}: feasible = {}", hall_feasible(&roots, &n)?);
        if let Some(f) = find_distribution(&roots, &n)? {
            for (root, i) in f.iter() {
                println!("  {root} -> {}", i + 1);
            }
        }
    }
    Ok(())
}
