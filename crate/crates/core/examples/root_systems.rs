//! Builds each simply-laced type and prints its basic invariants.

use schubert_mf::{Result, RootSystem};

fn main() -> Result<()> {
    for name in ["A4", "D5", "E6", "E7", "E8"] {
        let rs = RootSystem::parse(name)?;
        println!(
            "{}: {} positive roots, highest root {}",
            rs.cartan_type(),
            rs.num_positive(),
            rs.highest_root()
        );
    }

    let rs = RootSystem::parse("D4")?;
    println!("D4 Cartan matrix:");
    for row in rs.cartan_matrix() {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
        println!("{}", cells.join(""));
    }
    // alpha_1 + alpha_2 is not a root in D4, alpha_1 + alpha_3 is
    let (a1, a2, a3) = (rs.simple_root(0), rs.simple_root(1), rs.simple_root(2));
    println!("a1+a2 root? {}", rs.is_root_sum(&a1, &a2)?);
    println!("a1+a3 root? {}", rs.is_root_sum(&a1, &a3)?);
    Ok(())
}
